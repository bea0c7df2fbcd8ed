//! Elliptic endoscopic data of quasi-split classical groups, their c-Levi
//! subgroups, and the table of twists by ε_1, ε_2.

use std::fmt;

use crate::characters::s_character;
use crate::error::{Error, Result};
use crate::groups::{Family, GroupDescriptor, LeviDescriptor, SplitType};
use crate::number::{Sign, SignCharacter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Sp,
    SoOdd,
    SoD,
    SoQd,
}

impl FactorKind {
    pub fn of(g: &GroupDescriptor) -> FactorKind {
        match (g.family, g.split_type()) {
            (Family::Symplectic, _) => FactorKind::Sp,
            (Family::OddOrthogonal, _) => FactorKind::SoOdd,
            (_, Some(SplitType::Qd)) => FactorKind::SoQd,
            _ => FactorKind::SoD,
        }
    }

    fn is_even_so(self) -> bool {
        matches!(self, FactorKind::SoD | FactorKind::SoQd)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoscopicShape {
    pub h1: FactorKind,
    pub h2: FactorKind,
}

/// Which factor of H carries U_c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LeviCase {
    /// G = Sp, U_c inside the symplectic factor.
    A1,
    /// G = Sp, U_c inside the even orthogonal factor.
    A2,
    B,
    CD,
}

/// H = H_1 x H_2 with the quasi-split factors written with their conventional signatures.
/// `x_d` is the eigenvalue of the semisimple element on the dual of H_1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoscopicDatum {
    pub h1: GroupDescriptor,
    pub h2: GroupDescriptor,
    pub x_d: Sign,
    /// Set for Sp_{2a} x SO^qd_{2b}: the standard representation of the
    /// symplectic factor is twisted by sgn.
    pub sp_sgn_twist: bool,
}

impl EndoscopicDatum {
    pub fn shape(&self) -> EndoscopicShape {
        EndoscopicShape { h1: FactorKind::of(&self.h1), h2: FactorKind::of(&self.h2) }
    }

    /// The same datum with the factors exchanged; x_d changes sign.
    pub fn swapped(&self) -> EndoscopicDatum {
        EndoscopicDatum { h1: self.h2, h2: self.h1, x_d: -self.x_d, ..*self }
    }

    /// Canonical key: family, then the two (rank, kind) pairs as listed.
    pub fn key(&self) -> (FactorKind, u32, FactorKind, u32) {
        (FactorKind::of(&self.h1), self.h1.rank, FactorKind::of(&self.h2), self.h2.rank)
    }
}

impl fmt::Display for EndoscopicDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.h1.qs_label(), self.h2.qs_label())
    }
}

fn allowed(m: u32, t: SplitType) -> bool {
    match m {
        0 => t == SplitType::D,
        1 => t == SplitType::Qd,
        _ => true,
    }
}

fn even_so(m: u32, t: SplitType) -> Result<GroupDescriptor> {
    if m == 0 {
        return GroupDescriptor::so(0, 0);
    }
    GroupDescriptor::quasi_split(Family::EvenOrthogonal, m, t)
}

fn odd_so(m: u32) -> Result<GroupDescriptor> {
    GroupDescriptor::quasi_split(Family::OddOrthogonal, m, SplitType::D)
}

/// Elliptic endoscopic data of the quasi-split inner form of G.
/// Sp(2n): Sp_{2a} x SO^α_{2b}; SO_{2n+1}: SO_{2a+1} x SO_{2b+1} with a >= b;
/// SO^α_{2n}: SO^β_{2a} x SO^γ_{2b} with βγ = α and (a,β) >= (b,γ).
pub fn elliptic_endoscopic_data(g: &GroupDescriptor) -> Result<Vec<EndoscopicDatum>> {
    let n = g.rank;
    let types = [SplitType::D, SplitType::Qd];
    let mut out = Vec::new();
    let datum = |h1, h2, sp_sgn_twist| EndoscopicDatum { h1, h2, x_d: Sign::Plus, sp_sgn_twist };
    match g.family {
        Family::Symplectic => {
            for b in 0..=n {
                for t in types.into_iter().filter(|t| allowed(b, *t)) {
                    let twist = t == SplitType::Qd;
                    out.push(datum(GroupDescriptor::sp(n - b), even_so(b, t)?, twist));
                }
            }
        }
        Family::OddOrthogonal => {
            for b in 0..=n / 2 {
                out.push(datum(odd_so(n - b)?, odd_so(b)?, false));
            }
        }
        Family::EvenOrthogonal => {
            let alpha = g.split_type().unwrap_or(SplitType::D);
            for b in 0..=n / 2 {
                let a = n - b;
                for beta in types.into_iter().filter(|t| allowed(a, *t)) {
                    let gamma = beta.product(alpha);
                    if !allowed(b, gamma) || (a == b && beta < gamma) {
                        continue;
                    }
                    out.push(datum(even_so(a, beta)?, even_so(b, gamma)?, false));
                }
            }
        }
        Family::Unitary => return Err(Error::Unsupported("endoscopy of unitary groups".into())),
    }
    Ok(out)
}

/// c-Levi L_{*,H} = U_c x H'_1 x H_2 of H, together with the c-Levi L_* of G.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EndoscopicLevi {
    pub c: u32,
    pub h1_prime: GroupDescriptor,
    pub h2: GroupDescriptor,
    pub l_star: LeviDescriptor,
}

fn u_qs(c: u32) -> (u32, u32) {
    (c / 2, c - c / 2)
}

pub fn c_levi_of_endoscopic(case: LeviCase, datum: &EndoscopicDatum, c: u32) -> Result<EndoscopicLevi> {
    let (k1, k2) = (FactorKind::of(&datum.h1), FactorKind::of(&datum.h2));
    let fits = match case {
        LeviCase::A1 => k1 == FactorKind::Sp && k2.is_even_so(),
        LeviCase::A2 => k1.is_even_so() && k2 == FactorKind::Sp,
        LeviCase::B => k1 == FactorKind::SoOdd && k2 == FactorKind::SoOdd,
        LeviCase::CD => k1.is_even_so() && k2.is_even_so(),
    };
    if !fits {
        return Err(Error::Shape(format!("datum {datum} does not have the shape of case {case:?}")));
    }
    let a = datum.h1.rank;
    if c > a {
        return Err(Error::OutOfRange(format!("c = {c} exceeds the rank of {}", datum.h1.qs_label())));
    }
    let n = a + datum.h2.rank;
    let type_of = |h: &GroupDescriptor| h.split_type().unwrap_or(SplitType::D);
    let shrink_even = |t: SplitType, m: u32| -> Result<GroupDescriptor> {
        let t = t.shifted(c);
        if m == 0 && t == SplitType::Qd {
            return Err(Error::OutOfRange(format!("U_{c} does not fit a rank {} factor of type {}", m + c, t.flip().tag())));
        }
        even_so(m, t)
    };
    let (h1_prime, base) = match case {
        LeviCase::A1 => (GroupDescriptor::sp(a - c), GroupDescriptor::sp(n - c)),
        LeviCase::A2 => (shrink_even(type_of(&datum.h1), a - c)?, GroupDescriptor::sp(n - c)),
        LeviCase::B => (odd_so(a - c)?, odd_so(n - c)?),
        LeviCase::CD => {
            let alpha = type_of(&datum.h1).product(type_of(&datum.h2));
            (shrink_even(type_of(&datum.h1), a - c)?, shrink_even(alpha, n - c)?)
        }
    };
    Ok(EndoscopicLevi { c, h1_prime, h2: datum.h2, l_star: LeviDescriptor::new(vec![u_qs(c)], base) })
}

/// S_i evaluated at x_d.
pub fn transfer_sign(i: u32, c: u32, n: u32, x_d: Sign) -> Sign {
    s_character(i, c, n).eval(x_d)
}

/// Twists (on H'_1, on H_2) of the ε_1, ε_2 table.
pub fn twist_table(g: Family, shape: EndoscopicShape, c: u32) -> Result<(SignCharacter, SignCharacter)> {
    use FactorKind::*;
    use SignCharacter::*;
    let (h1, h2) = (shape.h1, shape.h2);
    let bad = || Err(Error::Shape(format!("shape {h1:?} x {h2:?} does not occur for {g:?}")));
    match g {
        Family::OddOrthogonal if h1 == SoOdd && h2 == SoOdd => Ok((Triv, Triv)),
        Family::EvenOrthogonal if h1.is_even_so() && h2.is_even_so() => Ok((Triv, Triv)),
        Family::Symplectic if h1 == Sp && h2.is_even_so() => Ok(if c.is_multiple_of(2) { (Triv, Triv) } else { (Triv, Sgn) }),
        Family::Symplectic if h1.is_even_so() && h2 == Sp => Ok(if c.is_multiple_of(2) { (Triv, Triv) } else { (Sgn, Sgn) }),
        _ => bad(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(g: &GroupDescriptor) -> Vec<String> {
        elliptic_endoscopic_data(g).unwrap().iter().map(|d| d.to_string()).collect()
    }

    #[test]
    fn sp4_data() {
        assert_eq!(labels(&GroupDescriptor::sp(2)), vec!["Sp(4) x SO_0^d", "Sp(2) x SO_2^qd", "Sp(0) x SO_4^d", "Sp(0) x SO_4^qd"]);
        for n in 1..8 {
            assert_eq!(elliptic_endoscopic_data(&GroupDescriptor::sp(n)).unwrap().len(), 2 * n as usize);
        }
    }

    #[test]
    fn so5_data() {
        assert_eq!(labels(&GroupDescriptor::so(3, 2).unwrap()), vec!["SO_5 x SO_1", "SO_3 x SO_3"]);
    }

    #[test]
    fn so4_data() {
        let d = labels(&GroupDescriptor::so(2, 2).unwrap());
        assert_eq!(d, vec!["SO_4^d x SO_0^d", "SO_2^qd x SO_2^qd"]);
        let d = labels(&GroupDescriptor::so(1, 3).unwrap());
        assert_eq!(d, vec!["SO_4^qd x SO_0^d"]);
    }

    #[test]
    fn remark_twist_flag() {
        let d = elliptic_endoscopic_data(&GroupDescriptor::sp(2)).unwrap();
        assert_eq!(d.iter().filter(|x| x.sp_sgn_twist).count(), 2);
    }

    #[test]
    fn c_levi_cases() {
        let sp = elliptic_endoscopic_data(&GroupDescriptor::sp(3)).unwrap();
        let d = sp.iter().find(|d| d.h1.rank == 2).unwrap();
        let l = c_levi_of_endoscopic(LeviCase::A1, d, 1).unwrap();
        assert_eq!(l.h1_prime, GroupDescriptor::sp(1));
        assert_eq!(l.l_star.base, GroupDescriptor::sp(2));
        assert!(c_levi_of_endoscopic(LeviCase::A2, d, 1).is_err());
        let sw = d.swapped();
        assert_eq!(sw.x_d, Sign::Minus);
        let l = c_levi_of_endoscopic(LeviCase::A2, &sw, 1).unwrap();
        assert_eq!(l.h1_prime, GroupDescriptor::so(0, 0).unwrap());

        let so = elliptic_endoscopic_data(&GroupDescriptor::so(3, 3).unwrap()).unwrap();
        let d = so.iter().find(|d| d.h1.rank == 2 && d.h2.rank == 1).unwrap();
        let l = c_levi_of_endoscopic(LeviCase::CD, d, 1).unwrap();
        assert_eq!(l.h1_prime.qs_label(), "SO_2^d");
        assert_eq!(l.l_star.base.qs_label(), "SO_4^qd");
    }

    #[test]
    fn twists() {
        use SignCharacter::*;
        let sh = |h1, h2| EndoscopicShape { h1, h2 };
        assert_eq!(twist_table(Family::Symplectic, sh(FactorKind::Sp, FactorKind::SoD), 1).unwrap(), (Triv, Sgn));
        assert_eq!(twist_table(Family::Symplectic, sh(FactorKind::SoQd, FactorKind::Sp), 1).unwrap(), (Sgn, Sgn));
        assert_eq!(twist_table(Family::Symplectic, sh(FactorKind::SoQd, FactorKind::Sp), 2).unwrap(), (Triv, Triv));
        assert_eq!(twist_table(Family::EvenOrthogonal, sh(FactorKind::SoD, FactorKind::SoQd), 3).unwrap(), (Triv, Triv));
        assert!(twist_table(Family::OddOrthogonal, sh(FactorKind::Sp, FactorKind::SoD), 1).is_err());
    }

    #[test]
    fn transfer() {
        assert_eq!(transfer_sign(0, 2, 3, Sign::Minus), Sign::Minus);
        assert_eq!(transfer_sign(0, 2, 3, Sign::Plus), Sign::Plus);
    }
}
