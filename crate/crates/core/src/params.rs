//! Arthur parameters as multisets of summands W(s,ε)⊠R[a] and V(s,t)⊠R[a].

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result, Violation};
use crate::groups::{Family, GroupDescriptor, SplitType};
use crate::number::{int, rat, GaussRat, SignCharacter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SummandKind {
    /// The character sgn^ε |x|^s of R^x, one-dimensional.
    W { eps: u8 },
    /// Induced from the character of C^x with weights ((s+t)/2, (s-t)/2), two-dimensional.
    V { t: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub s: GaussRat,
    pub kind: SummandKind,
    pub a: u32,
}

impl Summand {
    pub fn w(s: GaussRat, eps: u8, a: u32) -> Self {
        Summand { s, kind: SummandKind::W { eps }, a }
    }

    pub fn v(s: GaussRat, t: i64, a: u32) -> Self {
        Summand { s, kind: SummandKind::V { t }, a }
    }

    pub fn dim(&self) -> u64 {
        match self.kind {
            SummandKind::W { .. } => self.a as u64,
            SummandKind::V { .. } => 2 * self.a as u64,
        }
    }

    pub fn dual(&self) -> Summand {
        Summand { s: -self.s, ..*self }
    }

    /// Parity of the sign of det, as a power of sgn.
    fn det_parity(&self) -> i64 {
        let a = self.a as i64;
        match self.kind {
            SummandKind::W { eps } => eps as i64 * a,
            SummandKind::V { t } => (t + 1) * a,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SummandKind::W { eps } => write!(f, "W({},{eps})xR[{}]", self.s, self.a),
            SummandKind::V { t } => write!(f, "V({},{t})xR[{}]", self.s, self.a),
        }
    }
}

/// A discrete block V(0,t)⊠R[a] of good parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub t: u32,
    pub a: u32,
}

impl Block {
    pub fn new(t: u32, a: u32) -> Self {
        Block { t, a }
    }

    pub fn summand(&self) -> Summand {
        Summand::v(GaussRat::zero(), self.t as i64, self.a)
    }
}

/// A unipotent summand W(0,ε)⊠R[a] of good parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnipotentSummand {
    pub eps: u8,
    pub a: u32,
}

impl UnipotentSummand {
    pub fn summand(&self) -> Summand {
        Summand::w(GaussRat::zero(), self.eps, self.a)
    }

    pub fn twisted(&self, by: SignCharacter) -> UnipotentSummand {
        UnipotentSummand { eps: self.eps ^ by.is_sgn() as u8, a: self.a }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArthurParameter {
    pub group: GroupDescriptor,
    pub summands: Vec<Summand>,
}

impl ArthurParameter {
    pub fn new(group: GroupDescriptor, summands: Vec<Summand>) -> Self {
        ArthurParameter { group, summands }
    }

    pub fn dim(&self) -> u64 {
        self.summands.iter().map(Summand::dim).sum()
    }

    fn multiplicities(&self) -> BTreeMap<Summand, usize> {
        let mut m = BTreeMap::new();
        for s in &self.summands {
            *m.entry(*s).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.summands.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Good parity test for a summand with s = 0.
pub fn good_parity(summand: &Summand, g: &GroupDescriptor) -> Result<bool> {
    if !summand.s.is_zero() {
        return Err(Error::OutOfRange(format!("good parity needs s = 0, got {summand}")));
    }
    let class = g.good_parity_class()? as i64;
    let a = summand.a as i64;
    let v = match summand.kind {
        SummandKind::W { .. } => a - 1,
        SummandKind::V { t } => t + a - 1,
    };
    Ok(v.rem_euclid(2) == class)
}

/// Checks, in order: summand sanity, self-duality, even multiplicity of bad-parity
/// s = 0 summands, the determinant, and the total dimension. Reports the first failure.
pub fn validate(psi: &ArthurParameter) -> Result<()> {
    let g = &psi.group;
    let n = g.standard_rep_dim()?;
    for s in &psi.summands {
        if let SummandKind::V { t } = s.kind {
            if t <= 0 {
                return Err(Violation::NonPositiveT(*s).into());
            }
        }
        if s.a == 0 {
            return Err(Violation::ZeroSl2(*s).into());
        }
    }
    let mult = psi.multiplicities();
    for (s, k) in &mult {
        if mult.get(&s.dual()).copied().unwrap_or(0) != *k {
            return Err(Violation::NotSelfDual(*s).into());
        }
    }
    for (s, k) in &mult {
        if s.s.is_zero() && !good_parity(s, g)? && k % 2 == 1 {
            return Err(Violation::OddBadParity { summand: *s, multiplicity: *k }.into());
        }
    }
    let expected = match g.family {
        Family::Symplectic => Some(false),
        Family::EvenOrthogonal => Some(g.split_type() == Some(SplitType::Qd)),
        _ => None,
    };
    if let Some(expected) = expected {
        let found = psi.summands.iter().map(Summand::det_parity).sum::<i64>() % 2 == 1;
        if found != expected {
            let tag = |b: bool| if b { "sgn" } else { "triv" };
            return Err(Violation::Determinant { found: tag(found), expected: tag(expected) }.into());
        }
    }
    if psi.dim() != n {
        return Err(Violation::Dimension { found: psi.dim(), expected: n }.into());
    }
    Ok(())
}

/// ψ = ψ_mp ⊕ ψ_bp,u ⊕ ψ_bp,disc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityDecomposition {
    pub group: GroupDescriptor,
    /// Summands with s ≠ 0 and bad-parity summands with s = 0.
    pub mp: Vec<Summand>,
    /// The ρ half of the canonical splitting ψ_mp = ρ ⊕ ρ*.
    pub mp_rho: Vec<Summand>,
    /// Good-parity W(0,ε)⊠R[a], sorted so that identical summands are adjacent.
    pub bp_u: Vec<UnipotentSummand>,
    /// Good-parity V(0,t)⊠R[a], sorted by t then a, both decreasing.
    pub bp_disc: Vec<Block>,
}

impl ParityDecomposition {
    pub fn is_good_parity(&self) -> bool {
        self.mp.is_empty()
    }

    /// Summands of the good-parity part after the first `skip` blocks.
    pub fn tail_summands(&self, skip: usize) -> Vec<Summand> {
        tail_summands(&self.bp_disc[skip.min(self.bp_disc.len())..], &self.bp_u)
    }
}

pub fn tail_summands(blocks: &[Block], unip: &[UnipotentSummand]) -> Vec<Summand> {
    blocks.iter().map(Block::summand).chain(unip.iter().map(UnipotentSummand::summand)).collect()
}

pub fn sort_blocks(blocks: &mut [Block]) {
    blocks.sort_by_key(|b| (Reverse(b.t), Reverse(b.a)));
}

pub fn sort_unipotent(unip: &mut [UnipotentSummand]) {
    unip.sort_by_key(|u| (Reverse(u.a), u.eps));
}

pub fn decompose(psi: &ArthurParameter) -> Result<ParityDecomposition> {
    validate(psi)?;
    let g = &psi.group;
    let mut mp = Vec::new();
    let mut bp_u = Vec::new();
    let mut bp_disc = Vec::new();
    for s in &psi.summands {
        if s.s.is_zero() && good_parity(s, g)? {
            match s.kind {
                SummandKind::W { eps } => bp_u.push(UnipotentSummand { eps, a: s.a }),
                SummandKind::V { t } => bp_disc.push(Block::new(t as u32, s.a)),
            }
        } else {
            mp.push(*s);
        }
    }
    mp.sort();
    let mut mp_rho: Vec<Summand> = mp.iter().filter(|s| s.s.is_upper()).copied().collect();
    let mut zero_bad: BTreeMap<Summand, usize> = BTreeMap::new();
    for s in mp.iter().filter(|s| s.s.is_zero()) {
        *zero_bad.entry(*s).or_insert(0) += 1;
    }
    for (s, k) in zero_bad {
        mp_rho.extend(std::iter::repeat_n(s, k / 2));
    }
    mp_rho.sort();
    sort_blocks(&mut bp_disc);
    sort_unipotent(&mut bp_u);
    Ok(ParityDecomposition { group: *g, mp, mp_rho, bp_u, bp_disc })
}

/// Restriction to W_R: each ⊠R[a] becomes a summands twisted by |w|^{(a-1-2j)/2}.
/// On W(s,ε) this moves s by (a-1-2j)/2, on V(s,t) by a-1-2j, since |w| is |z|^2 on C^x.
pub fn langlands_parameter(psi: &ArthurParameter) -> Vec<Summand> {
    let mut out = Vec::new();
    for s in &psi.summands {
        let a = s.a as i64;
        for j in 0..a {
            let k = a - 1 - 2 * j;
            let shift = match s.kind {
                SummandKind::W { .. } => rat(k, 2),
                SummandKind::V { .. } => int(k),
            };
            out.push(Summand { s: s.s + shift, kind: s.kind, a: 1 });
        }
    }
    out
}

/// V(s,t) contributes (s+t)/2, (s-t)/2; W(s,ε) contributes s.
pub fn infinitesimal_character_of(summands: &[Summand]) -> Vec<GaussRat> {
    let lp = langlands_parameter(&ArthurParameter::new(GroupDescriptor::sp(0), summands.to_vec()));
    let mut out = Vec::new();
    for s in lp {
        match s.kind {
            SummandKind::W { .. } => out.push(s.s),
            SummandKind::V { t } => {
                let half = rat(t, 2);
                let hs = GaussRat::new(s.s.re / 2, s.s.im / 2);
                out.push(hs + half);
                out.push(hs + (-half));
            }
        }
    }
    out
}

pub fn infinitesimal_character(psi: &ArthurParameter) -> Vec<GaussRat> {
    infinitesimal_character_of(&psi.summands)
}

/// t_r - a_r + 1 > t_{r+1} + a_{r+1} - 1, and t_R - a_R + 1 > max(a'_m - 1) (0 if none).
pub fn is_regular_blocks(blocks: &[Block], unip: &[UnipotentSummand]) -> bool {
    let lo = |b: &Block| b.t as i64 - b.a as i64 + 1;
    let hi = |b: &Block| b.t as i64 + b.a as i64 - 1;
    let chain = blocks.windows(2).all(|w| lo(&w[0]) > hi(&w[1]));
    let floor = unip.iter().map(|u| u.a as i64 - 1).max().unwrap_or(0);
    chain && blocks.last().is_none_or(|b| lo(b) > floor)
}

pub fn is_regular(d: &ParityDecomposition) -> bool {
    is_regular_blocks(&d.bp_disc, &d.bp_u)
}

/// (t - (c - 1))/2 > |Re λ| for every entry λ of the infinitesimal character of the tail.
pub fn dominance_gap_ok(block: Block, tail: &[Summand]) -> bool {
    let bound = rat(block.t as i64 - block.a as i64 + 1, 2);
    infinitesimal_character_of(tail).iter().all(|l| bound > l.re.abs())
}

/// ε_ψ and the quasi-split group G' carrying ψ_G' = ψ_bp,u ⊗ ε_ψ.
pub fn epsilon_twist(d: &ParityDecomposition) -> Result<(SignCharacter, GroupDescriptor)> {
    let g = &d.group;
    let c: u32 = d.bp_disc.iter().map(|b| b.a).sum();
    if c > g.rank {
        return Err(Error::OutOfRange(format!("blocks use rank {c} > {}", g.rank)));
    }
    let eps = match g.family {
        Family::Symplectic => {
            let f = d.bp_disc.iter().filter(|b| b.t % 2 == 0).count();
            SignCharacter::pow(f as i64)
        }
        Family::Unitary => return Err(Error::Unsupported("unitary target".into())),
        _ => SignCharacter::Triv,
    };
    Ok((eps, base_group(g, c)?))
}

/// Quasi-split G' of rank n - c in the family of G. For even orthogonal groups
/// the split type flips with the parity of c; rank 0 is always SO(0,0).
pub fn base_group(g: &GroupDescriptor, c: u32) -> Result<GroupDescriptor> {
    let m = g.rank - c;
    match g.family {
        Family::EvenOrthogonal if m == 0 => GroupDescriptor::so(0, 0),
        Family::EvenOrthogonal => {
            let t = g.split_type().unwrap_or(SplitType::D).shifted(c);
            GroupDescriptor::quasi_split(g.family, m, t)
        }
        f => GroupDescriptor::quasi_split(f, m, SplitType::D),
    }
}
