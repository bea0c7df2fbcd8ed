//! Real classical groups as descriptors, with their invariants.

use std::fmt;

use crate::error::{Error, Result};
use crate::number::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Sp(2n, R).
    Symplectic,
    /// SO(p, q) with p + q = 2n + 1.
    OddOrthogonal,
    /// SO(p, q) with p + q = 2n.
    EvenOrthogonal,
    /// U(p, q) with p + q = n.
    Unitary,
}

impl Family {
    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::OddOrthogonal | Family::EvenOrthogonal)
    }
}

/// Split type of an even orthogonal group: split (d) or quasi-split non-split (qd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitType {
    D,
    Qd,
}

impl SplitType {
    pub fn flip(self) -> SplitType {
        match self {
            SplitType::D => SplitType::Qd,
            SplitType::Qd => SplitType::D,
        }
    }

    /// Flipped when `c` is odd.
    pub fn shifted(self, c: u32) -> SplitType {
        if c % 2 == 1 {
            self.flip()
        } else {
            self
        }
    }

    /// d is neutral: d*d = qd*qd = d.
    pub fn product(self, other: SplitType) -> SplitType {
        if self == other {
            SplitType::D
        } else {
            SplitType::Qd
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            SplitType::D => "d",
            SplitType::Qd => "qd",
        }
    }
}

/// Type of SO(p, q) with p + q even: d when p = q mod 4, qd when p = q + 2 mod 4.
pub fn derive_even_so_type(p: u32, q: u32) -> Result<SplitType> {
    if (p + q) % 2 == 1 {
        return Err(Error::InvalidGroup(format!("SO({p},{q}) has odd dimension")));
    }
    let diff = (p as i64 - q as i64).rem_euclid(4);
    Ok(if diff == 0 { SplitType::D } else { SplitType::Qd })
}

/// A real classical group. `rank` is n for Sp(2n), SO(2n+1), SO(2n) and U(n).
/// Orthogonal and unitary groups carry their signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDescriptor {
    pub family: Family,
    pub rank: u32,
    pub signature: Option<(u32, u32)>,
}

impl GroupDescriptor {
    pub fn sp(n: u32) -> Self {
        GroupDescriptor { family: Family::Symplectic, rank: n, signature: None }
    }

    pub fn so(p: u32, q: u32) -> Result<Self> {
        let m = p + q;
        let family = if m % 2 == 1 { Family::OddOrthogonal } else { Family::EvenOrthogonal };
        Ok(GroupDescriptor { family, rank: m / 2, signature: Some((p, q)) })
    }

    pub fn u(p: u32, q: u32) -> Self {
        GroupDescriptor { family: Family::Unitary, rank: p + q, signature: Some((p, q)) }
    }

    /// The quasi-split form with the conventional signature. `split` is only
    /// read for even orthogonal groups.
    pub fn quasi_split(family: Family, rank: u32, split: SplitType) -> Result<Self> {
        let m = rank;
        Ok(match family {
            Family::Symplectic => Self::sp(m),
            Family::OddOrthogonal if m.is_multiple_of(2) => Self::so(m + 1, m)?,
            Family::OddOrthogonal => Self::so(m, m + 1)?,
            Family::EvenOrthogonal => match split {
                SplitType::D => Self::so(m, m)?,
                SplitType::Qd if m == 0 => {
                    return Err(Error::InvalidGroup("SO_0 has no quasi-split non-split form".into()))
                }
                SplitType::Qd => Self::so(m - 1, m + 1)?,
            },
            Family::Unitary => Self::u(m / 2, m - m / 2),
        })
    }

    pub fn pq(&self) -> (u32, u32) {
        self.signature.unwrap_or((0, 0))
    }

    /// Split type for even orthogonal groups.
    pub fn split_type(&self) -> Option<SplitType> {
        match (self.family, self.signature) {
            (Family::EvenOrthogonal, Some((p, q))) => derive_even_so_type(p, q).ok(),
            _ => None,
        }
    }

    pub fn is_quasi_split(&self) -> bool {
        let (p, q) = self.pq();
        let gap = p.abs_diff(q);
        match self.family {
            Family::Symplectic => true,
            Family::OddOrthogonal | Family::Unitary => gap <= 1,
            Family::EvenOrthogonal => gap == 0 || gap == 2,
        }
    }

    /// Quasi-split inner form in the same pure-inner-form family.
    pub fn quasi_split_form(&self) -> GroupDescriptor {
        let split = self.split_type().unwrap_or(SplitType::D);
        Self::quasi_split(self.family, self.rank, split).unwrap_or(*self)
    }

    /// False exactly for SO^d_{2n} with n odd and SO^qd_{2n} with n even.
    pub fn has_discrete_series(&self) -> bool {
        match self.split_type() {
            Some(SplitType::D) => self.rank.is_multiple_of(2),
            Some(SplitType::Qd) => self.rank % 2 == 1,
            None => true,
        }
    }

    /// Dimension N of the standard representation of the dual group.
    pub fn standard_rep_dim(&self) -> Result<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::Symplectic => Ok(2 * n + 1),
            Family::OddOrthogonal | Family::EvenOrthogonal => Ok(2 * n),
            Family::Unitary => Err(Error::Unsupported("unitary groups have no standard self-dual parameter here".into())),
        }
    }

    /// Residue of (a - 1) (resp. t + a - 1) mod 2 marking good parity.
    pub fn good_parity_class(&self) -> Result<u32> {
        match self.family {
            Family::OddOrthogonal => Ok(1),
            Family::Symplectic | Family::EvenOrthogonal => Ok(0),
            Family::Unitary => Err(Error::Unsupported("good parity is not defined for unitary groups".into())),
        }
    }

    /// Name of the quasi-split group of the same type, e.g. `SO_4^qd`.
    pub fn qs_label(&self) -> String {
        match self.family {
            Family::Symplectic => format!("Sp({})", 2 * self.rank),
            Family::OddOrthogonal => format!("SO_{}", 2 * self.rank + 1),
            Family::EvenOrthogonal => {
                let t = self.split_type().unwrap_or(SplitType::D);
                format!("SO_{}^{}", 2 * self.rank, t.tag())
            }
            Family::Unitary => format!("U_{}", self.rank),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.pq();
        match self.family {
            Family::Symplectic => write!(f, "Sp({})", 2 * self.rank),
            Family::OddOrthogonal | Family::EvenOrthogonal => write!(f, "SO({p},{q})"),
            Family::Unitary => write!(f, "U({p},{q})"),
        }
    }
}

/// A product of unitary groups U(p_k, q_k) with one classical factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviDescriptor {
    pub unitary: Vec<(u32, u32)>,
    pub base: GroupDescriptor,
}

impl LeviDescriptor {
    pub fn new(unitary: Vec<(u32, u32)>, base: GroupDescriptor) -> Self {
        LeviDescriptor { unitary, base }
    }

    pub fn rank(&self) -> u32 {
        self.unitary.iter().map(|(p, q)| p + q).sum::<u32>() + self.base.rank
    }
}

impl fmt::Display for LeviDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, q) in &self.unitary {
            write!(f, "U({p},{q}) x ")?;
        }
        write!(f, "{}", self.base)
    }
}

/// q(G) = (dim G - dim K)/2 - c(G).
pub fn q_invariant(g: &GroupDescriptor) -> u64 {
    let (p, q) = g.pq();
    let (p, q) = (p as u64, q as u64);
    match g.family {
        Family::Symplectic => {
            let n = g.rank as u64;
            n * (n + 1) / 2
        }
        Family::OddOrthogonal | Family::EvenOrthogonal => p * q / 2,
        Family::Unitary => p * q,
    }
}

pub fn q_invariant_levi(l: &LeviDescriptor) -> u64 {
    l.unitary.iter().map(|(p, q)| (*p as u64) * (*q as u64)).sum::<u64>() + q_invariant(&l.base)
}

/// Kottwitz sign (-1)^{q(G) - q(G*)}.
pub fn kottwitz_sign(g: &GroupDescriptor) -> Sign {
    let a = q_invariant(g) as i64;
    let b = q_invariant(&g.quasi_split_form()) as i64;
    Sign::pow(a - b)
}
