//! T_*[2], pure inner forms, and the classes of c-Levi subgroups U(i,c-i) x G'_i.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groups::{q_invariant, q_invariant_levi, Family, GroupDescriptor, LeviDescriptor};
use crate::number::Sign;
use crate::rootdata::{dim_complex, dim_complex_levi};

pub type SignVector = Vec<Sign>;

/// t_* = ((-1)^n, ..., 1, -1); entry j (1-based) is (-1)^{n-j+1}.
pub fn t_star(n: usize) -> SignVector {
    (1..=n).map(|j| Sign::pow((n - j + 1) as i64)).collect()
}

/// Length of the sign vectors classifying inner forms of G. Even orthogonal groups
/// without discrete series use the anisotropic factor, of rank n - 1.
pub fn torus_rank(g: &GroupDescriptor) -> usize {
    if g.has_discrete_series() {
        g.rank as usize
    } else {
        g.rank as usize - 1
    }
}

fn count_plus(t: &[Sign]) -> u32 {
    t_star(t.len()).iter().zip(t).filter(|(a, b)| **a * **b == Sign::Plus).count() as u32
}

/// The pure inner form G_t attached to t ∈ T_*[2].
pub fn inner_form_class(g: &GroupDescriptor, t: &[Sign]) -> Result<GroupDescriptor> {
    let len = torus_rank(g);
    if t.len() != len {
        return Err(Error::Shape(format!("{} needs a sign vector of length {len}, got {}", g, t.len())));
    }
    let n1 = count_plus(t);
    let nm = len as u32 - n1;
    match g.family {
        Family::Symplectic => Ok(GroupDescriptor::sp(g.rank)),
        Family::OddOrthogonal => GroupDescriptor::so(2 * n1 + 1, 2 * nm),
        Family::EvenOrthogonal if g.has_discrete_series() => GroupDescriptor::so(2 * n1, 2 * nm),
        Family::EvenOrthogonal => GroupDescriptor::so(2 * n1 + 1, 2 * nm + 1),
        Family::Unitary => Ok(GroupDescriptor::u(n1, nm)),
    }
}

/// All sign vectors of length n, in lexicographic order with +1 first.
pub fn all_sign_vectors(n: usize) -> impl Iterator<Item = SignVector> {
    (0..1u64 << n).map(move |m| (0..n).map(|k| Sign::from_parity(m >> (n - 1 - k) & 1 == 1)).collect())
}

/// How the 2^n elements of T_*[2] distribute over the pure inner forms.
pub fn superpacket_distribution(g: &GroupDescriptor) -> Result<BTreeMap<GroupDescriptor, u64>> {
    let mut out = BTreeMap::new();
    for t in all_sign_vectors(torus_rank(g)) {
        *out.entry(inner_form_class(g, &t)?).or_insert(0) += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviRepresentative {
    pub index: u32,
    pub levi: LeviDescriptor,
    pub degree: i64,
}

/// Classes of c-Levi subgroups U(i,c-i) x G'_i of G. For Sp(2n) every i in 0..=c;
/// for SO(p,q) the i with 2i <= p and 2(c-i) <= q, with G'_i = SO(p-2i, q-2(c-i)).
pub fn c_levi_representatives(g: &GroupDescriptor, c: u32) -> Result<Vec<LeviRepresentative>> {
    if c > g.rank {
        return Err(Error::OutOfRange(format!("c = {c} exceeds the rank of {g}")));
    }
    let mut out = Vec::new();
    for i in 0..=c {
        let base = match g.family {
            Family::Symplectic => GroupDescriptor::sp(g.rank - c),
            Family::OddOrthogonal | Family::EvenOrthogonal => {
                let (p, q) = g.pq();
                if 2 * i > p || 2 * (c - i) > q {
                    continue;
                }
                GroupDescriptor::so(p - 2 * i, q - 2 * (c - i))?
            }
            Family::Unitary => return Err(Error::Unsupported("c-Levi subgroups of unitary groups".into())),
        };
        let levi = LeviDescriptor::new(vec![(i, c - i)], base);
        let degree = induction_degree(g, &levi)?;
        out.push(LeviRepresentative { index: i, levi, degree });
    }
    Ok(out)
}

/// Index i of the c-Levi attached to t = 1 in the quasi-split group.
pub fn distinguished_index(c: u32, n: u32) -> u32 {
    if c.is_multiple_of(2) {
        c / 2
    } else if (n - c).is_multiple_of(2) {
        (c - 1) / 2
    } else {
        c.div_ceil(2)
    }
}

/// Splits t·t_* into the unitary block (first c coordinates) and the rest.
/// Returns the signature of the unitary factor and the last n - c coordinates of t.
pub fn levi_signature_of(t: &[Sign], c: usize, n: usize) -> Result<((u32, u32), SignVector)> {
    if t.len() != n || c > n {
        return Err(Error::Shape(format!("sign vector of length {} for c = {c}, n = {n}", t.len())));
    }
    let ts = t_star(n);
    let plus = (0..c).filter(|&k| t[k] * ts[k] == Sign::Plus).count() as u32;
    let minus = c as u32 - plus;
    let sig = if (n - c).is_multiple_of(2) { (plus, minus) } else { (minus, plus) };
    Ok((sig, t[c..].to_vec()))
}

/// d = (dim G - dim L)/2 - (q(G) - q(L)).
pub fn induction_degree(g: &GroupDescriptor, l: &LeviDescriptor) -> Result<i64> {
    if l.rank() != g.rank || l.base.family != g.family {
        return Err(Error::Shape(format!("{l} is not a c-Levi subgroup of {g}")));
    }
    let diff = dim_complex(g) as i64 - dim_complex_levi(l) as i64;
    if diff % 2 != 0 {
        return Err(Error::Shape(format!("odd codimension for {l} in {g}")));
    }
    let d = diff / 2 - (q_invariant(g) as i64 - q_invariant_levi(l) as i64);
    if d < 0 {
        return Err(Error::NegativeDegree(d));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so(p: u32, q: u32) -> GroupDescriptor {
        GroupDescriptor::so(p, q).unwrap()
    }

    #[test]
    fn t_star_values() {
        use Sign::*;
        assert_eq!(t_star(3), vec![Minus, Plus, Minus]);
        assert_eq!(t_star(2), vec![Plus, Minus]);
    }

    #[test]
    fn so5_superpacket() {
        let d = superpacket_distribution(&so(3, 2)).unwrap();
        let want: BTreeMap<_, _> = [(so(5, 0), 1), (so(3, 2), 2), (so(1, 4), 1)].into_iter().collect();
        assert_eq!(d, want);
    }

    #[test]
    fn quasi_split_class_at_trivial_t() {
        for n in 0..7u32 {
            let ones = vec![Sign::Plus; n as usize];
            let qs = |f| GroupDescriptor::quasi_split(f, n, crate::groups::SplitType::D).unwrap();
            assert_eq!(inner_form_class(&qs(Family::OddOrthogonal), &ones).unwrap(), qs(Family::OddOrthogonal));
            let u = GroupDescriptor::u(n / 2, n - n / 2);
            assert_eq!(inner_form_class(&u, &ones).unwrap(), u);
        }
        assert_eq!(inner_form_class(&so(2, 2), &[Sign::Plus; 2]).unwrap(), so(2, 2));
        assert_eq!(inner_form_class(&so(2, 4), &[Sign::Plus; 3]).unwrap(), so(2, 4));
    }

    #[test]
    fn rank_extension_for_groups_without_discrete_series() {
        let d = superpacket_distribution(&so(3, 3)).unwrap();
        let want: BTreeMap<_, _> = [(so(1, 5), 1), (so(3, 3), 2), (so(5, 1), 1)].into_iter().collect();
        assert_eq!(d, want);
        assert!(inner_form_class(&so(3, 3), &[Sign::Plus; 3]).is_err());
    }

    #[test]
    fn c_levi_examples() {
        let r = c_levi_representatives(&so(3, 2), 1).unwrap();
        let levis: Vec<String> = r.iter().map(|x| x.levi.to_string()).collect();
        assert_eq!(levis, vec!["U(0,1) x SO(3,0)", "U(1,0) x SO(1,2)"]);
        let r = c_levi_representatives(&GroupDescriptor::sp(3), 2).unwrap();
        assert_eq!(r.len(), 3);
        assert!(c_levi_representatives(&so(1, 3), 2).unwrap().is_empty());
    }

    #[test]
    fn distinguished() {
        assert_eq!(distinguished_index(2, 5), 1);
        assert_eq!(distinguished_index(3, 5), 1);
        assert_eq!(distinguished_index(3, 4), 2);
    }

    #[test]
    fn degrees() {
        let l = LeviDescriptor::new(vec![(1, 0)], GroupDescriptor::sp(0));
        assert_eq!(induction_degree(&GroupDescriptor::sp(1), &l).unwrap(), 0);
        let l = LeviDescriptor::new(vec![(1, 0)], so(0, 1));
        assert_eq!(induction_degree(&so(2, 1), &l).unwrap(), 0);
        let l = LeviDescriptor::new(vec![(0, 1)], GroupDescriptor::sp(1));
        assert_eq!(induction_degree(&GroupDescriptor::sp(2), &l).unwrap(), 1);
    }

    #[test]
    fn levi_signature() {
        let t = vec![Sign::Plus; 2];
        let (sig, rest) = levi_signature_of(&t, 1, 2).unwrap();
        assert_eq!(sig, (0, 1));
        assert_eq!(rest, vec![Sign::Plus]);
    }
}
