//! Root systems of types B, C, D and gl in standard coordinates.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groups::{Family, GroupDescriptor, LeviDescriptor};
use crate::number::{int, rat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootFamily {
    B,
    C,
    D,
    /// gl(n): roots e_i - e_j.
    Agl,
}

/// The three shapes of classical group that carry a c-Levi U_c x G'.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RhoCase {
    /// Sp(2n), dual group SO(2n+1).
    A,
    /// SO(2n+1), dual group Sp(2n).
    B,
    /// SO(2n), dual group SO(2n).
    CD,
}

impl RhoCase {
    pub fn root_family(self) -> RootFamily {
        match self {
            RhoCase::A => RootFamily::C,
            RhoCase::B => RootFamily::B,
            RhoCase::CD => RootFamily::D,
        }
    }

    pub fn of_family(f: Family) -> Option<RhoCase> {
        match f {
            Family::Symplectic => Some(RhoCase::A),
            Family::OddOrthogonal => Some(RhoCase::B),
            Family::EvenOrthogonal => Some(RhoCase::CD),
            Family::Unitary => None,
        }
    }
}

/// Roots as integer coordinate vectors. Rank 0 (and D1) give the empty system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub family: RootFamily,
    pub rank: usize,
    pub positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(family: RootFamily, rank: usize) -> Self {
        RootSystem { family, rank, positive: positive_roots(family, rank) }
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let neg = self.positive.iter().map(|r| r.iter().map(|x| -x).collect());
        self.positive.iter().cloned().chain(neg).collect()
    }

    /// Expected number of roots, from the classification.
    pub fn expected_count(family: RootFamily, rank: usize) -> usize {
        let n = rank;
        match family {
            RootFamily::B | RootFamily::C => 2 * n * n,
            RootFamily::D => 2 * n * n.saturating_sub(1),
            RootFamily::Agl => n * n.saturating_sub(1),
        }
    }
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn pair(n: usize, i: usize, ci: i64, j: usize, cj: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = ci;
    v[j] = cj;
    v
}

/// Positive roots in a fixed order: for i < j the pair e_i - e_j, e_i + e_j,
/// then the short or long roots e_i / 2e_i.
pub fn positive_roots(family: RootFamily, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(pair(n, i, 1, j, -1));
            if family != RootFamily::Agl {
                out.push(pair(n, i, 1, j, 1));
            }
        }
    }
    match family {
        RootFamily::B => out.extend((0..n).map(|i| unit(n, i, 1))),
        RootFamily::C => out.extend((0..n).map(|i| unit(n, i, 2))),
        RootFamily::D | RootFamily::Agl => {}
    }
    out
}

/// Half the sum of the positive roots.
pub fn rho(family: RootFamily, rank: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); rank];
    for r in positive_roots(family, rank) {
        for (a, x) in acc.iter_mut().zip(&r) {
            *a += int(*x);
        }
    }
    acc.into_iter().map(|x| x / 2).collect()
}

/// ρ_G - ρ_L for L = U_c x G' in closed form: the constant on the first c
/// coordinates, zero on the remaining n - c.
pub fn rho_v_closed(case: RhoCase, n: usize, c: usize) -> Result<Vec<Rat>> {
    if c > n {
        return Err(Error::OutOfRange(format!("c = {c} exceeds rank {n}")));
    }
    let (n, ci) = (n as i64, c as i64);
    let head = match case {
        RhoCase::A => int(n) - rat(ci - 1, 2),
        RhoCase::B => int(n) - rat(ci, 2),
        RhoCase::CD => int(n - 1) - rat(ci - 1, 2),
    };
    let mut v = vec![head; c];
    v.resize(n as usize, Rat::zero());
    Ok(v)
}

/// Complex dimension of a group descriptor.
pub fn dim_complex(g: &GroupDescriptor) -> u64 {
    let n = g.rank as u64;
    match g.family {
        Family::Symplectic => n * (2 * n + 1),
        Family::OddOrthogonal => {
            let m = 2 * n + 1;
            m * (m - 1) / 2
        }
        Family::EvenOrthogonal => {
            let m = 2 * n;
            m * m.saturating_sub(1) / 2
        }
        Family::Unitary => n * n,
    }
}

pub fn dim_complex_levi(l: &LeviDescriptor) -> u64 {
    let u: u64 = l.unitary.iter().map(|(p, q)| ((p + q) as u64).pow(2)).sum();
    u + dim_complex(&l.base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_positive_roots() {
        let r = positive_roots(RootFamily::C, 2);
        assert_eq!(r, vec![vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn root_counts() {
        for fam in [RootFamily::B, RootFamily::C, RootFamily::D, RootFamily::Agl] {
            for n in 0..9 {
                let rs = RootSystem::new(fam, n);
                let all = rs.roots();
                assert_eq!(all.len(), RootSystem::expected_count(fam, n), "{fam:?} {n}");
                for r in &all {
                    let neg: Vec<i64> = r.iter().map(|x| -x).collect();
                    assert!(all.contains(&neg));
                }
            }
        }
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(RootFamily::C, 3), vec![int(3), int(2), int(1)]);
        assert_eq!(rho(RootFamily::B, 2), vec![rat(3, 2), rat(1, 2)]);
        assert_eq!(rho(RootFamily::D, 3), vec![int(2), int(1), int(0)]);
        assert_eq!(rho(RootFamily::Agl, 3), vec![int(1), int(0), int(-1)]);
    }

    #[test]
    fn rho_v_examples() {
        assert_eq!(rho_v_closed(RhoCase::A, 3, 2).unwrap(), vec![rat(5, 2), rat(5, 2), int(0)]);
        assert_eq!(rho_v_closed(RhoCase::B, 2, 1).unwrap(), vec![rat(3, 2), int(0)]);
        assert!(rho_v_closed(RhoCase::CD, 2, 3).is_err());
    }

    #[test]
    fn dims() {
        assert_eq!(dim_complex(&GroupDescriptor::sp(3)), 21);
        assert_eq!(dim_complex(&GroupDescriptor::so(3, 2).unwrap()), 10);
        assert_eq!(dim_complex(&GroupDescriptor::so(2, 2).unwrap()), 6);
        assert_eq!(dim_complex(&GroupDescriptor::u(2, 1)), 9);
    }
}
