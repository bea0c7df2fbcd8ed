//! The component group A(ψ) as a quotient of F_2^{R+M}, and its characters.
//!
//! Generators z_1..z_R belong to the discrete blocks, u_1..u_M to the good-parity
//! unipotent summands. Identical neighbours are identified (z_r z_{r+1} = 1).
//! Elements and characters are bitmasks over the generators, bit k for generator k.

use std::fmt;

use crate::error::{Error, Result};
use crate::number::{Sign, SignCharacter};
use crate::params::{Block, ParityDecomposition, Summand, UnipotentSummand};

pub const MAX_GENERATORS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Discrete(Block),
    Unipotent(UnipotentSummand),
}

impl GeneratorKind {
    fn a(&self) -> u32 {
        match self {
            GeneratorKind::Discrete(b) => b.a,
            GeneratorKind::Unipotent(u) => u.a,
        }
    }

    pub fn summand(&self) -> Summand {
        match self {
            GeneratorKind::Discrete(b) => b.summand(),
            GeneratorKind::Unipotent(u) => u.summand(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CgElement {
    pub bits: u64,
}

/// A character, recorded by the set of generators it sends to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CgCharacter {
    pub minus: u64,
}

impl CgCharacter {
    pub fn eval(&self, x: CgElement) -> Sign {
        Sign::from_parity((self.minus & x.bits).count_ones() % 2 == 1)
    }

    pub fn value(&self, k: usize) -> Sign {
        Sign::from_parity(self.minus >> k & 1 == 1)
    }

    pub fn values(&self, len: usize) -> Vec<Sign> {
        (0..len).map(|k| self.value(k)).collect()
    }

    /// Character with η(generator k) = values[k].
    pub fn from_values(values: &[Sign]) -> CgCharacter {
        let minus = values.iter().enumerate().filter(|(_, v)| v.is_minus()).fold(0, |m, (k, _)| m | 1 << k);
        CgCharacter { minus }
    }

    pub fn mul(self, o: CgCharacter) -> CgCharacter {
        CgCharacter { minus: self.minus ^ o.minus }
    }
}

impl CgElement {
    pub fn mul(self, o: CgElement) -> CgElement {
        CgElement { bits: self.bits ^ o.bits }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    pub generators: Vec<Generator>,
    /// Pairs (i, j) with g_i g_j = 1.
    pub relations: Vec<(usize, usize)>,
    basis: Vec<u64>,
}

fn pivot(b: u64) -> u32 {
    b.trailing_zeros()
}

/// Reduced row echelon basis of the span, pivots at lowest set bits.
fn echelon(vectors: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for mut v in vectors {
        for b in &basis {
            if v >> pivot(*b) & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            let p = pivot(v);
            for b in basis.iter_mut() {
                if *b >> p & 1 == 1 {
                    *b ^= v;
                }
            }
            basis.push(v);
        }
    }
    basis.sort_by_key(|b| pivot(*b));
    basis
}

impl ComponentGroup {
    pub fn new(generators: Vec<Generator>, relations: Vec<(usize, usize)>) -> Result<Self> {
        if generators.len() > MAX_GENERATORS {
            return Err(Error::OutOfRange(format!("{} generators exceed {MAX_GENERATORS}", generators.len())));
        }
        let basis = echelon(relations.iter().map(|(i, j)| (1u64 << i) ^ (1u64 << j)));
        Ok(ComponentGroup { generators, relations, basis })
    }

    /// Generators z_r for `blocks` and u_m for `unip`, identical neighbours identified.
    pub fn from_parts(blocks: &[Block], unip: &[UnipotentSummand]) -> Result<Self> {
        let mut gens = Vec::new();
        let mut rel = Vec::new();
        for (r, b) in blocks.iter().enumerate() {
            if r > 0 && blocks[r - 1] == *b {
                rel.push((r - 1, r));
            }
            gens.push(Generator { name: format!("z{}", r + 1), kind: GeneratorKind::Discrete(*b) });
        }
        let off = blocks.len();
        for (m, u) in unip.iter().enumerate() {
            if m > 0 && unip[m - 1] == *u {
                rel.push((off + m - 1, off + m));
            }
            gens.push(Generator { name: format!("u{}", m + 1), kind: GeneratorKind::Unipotent(*u) });
        }
        Self::new(gens, rel)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn discrete_count(&self) -> usize {
        self.generators.iter().filter(|g| matches!(g.kind, GeneratorKind::Discrete(_))).count()
    }

    /// Dimension of the quotient over F_2.
    pub fn dim(&self) -> usize {
        self.len() - self.basis.len()
    }

    pub fn order(&self) -> u64 {
        1u64 << self.dim()
    }

    pub fn generator(&self, k: usize) -> CgElement {
        CgElement { bits: 1 << k }
    }

    /// Canonical representative of the class of x.
    pub fn reduce(&self, x: CgElement) -> CgElement {
        let mut v = x.bits;
        for b in &self.basis {
            if v >> pivot(*b) & 1 == 1 {
                v ^= b;
            }
        }
        CgElement { bits: v }
    }

    pub fn equal(&self, x: CgElement, y: CgElement) -> bool {
        self.reduce(x) == self.reduce(y)
    }

    /// Canonical representatives of all elements.
    pub fn elements(&self) -> Vec<CgElement> {
        let free: Vec<usize> = self.free_positions();
        (0..1u64 << free.len())
            .map(|m| CgElement { bits: free.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).fold(0, |b, (_, f)| b | 1 << f) })
            .collect()
    }

    fn free_positions(&self) -> Vec<usize> {
        let pivots: Vec<u32> = self.basis.iter().map(|b| pivot(*b)).collect();
        (0..self.len()).filter(|k| !pivots.contains(&(*k as u32))).collect()
    }

    pub fn is_character(&self, eta: CgCharacter) -> bool {
        eta.minus >> self.len() == 0 && self.basis.iter().all(|b| (b & eta.minus).count_ones().is_multiple_of(2))
    }

    /// All characters, ordered lexicographically by (η(g_1), η(g_2), ...) with +1 before -1.
    pub fn characters(&self) -> Vec<CgCharacter> {
        let null: Vec<u64> = self
            .free_positions()
            .into_iter()
            .map(|f| {
                self.basis.iter().filter(|b| *b >> f & 1 == 1).fold(1u64 << f, |acc, b| acc | 1 << pivot(*b))
            })
            .collect();
        let mut out: Vec<CgCharacter> = (0..1u64 << null.len())
            .map(|m| CgCharacter {
                minus: null.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).fold(0, |acc, (_, v)| acc ^ v),
            })
            .collect();
        let len = self.len();
        out.sort_by_key(|c| c.values(len));
        out
    }

    /// s_ψ: the image of -1 ∈ SL_2, nontrivial on generators with even a.
    pub fn s_psi(&self) -> CgElement {
        let bits = self.generators.iter().enumerate().filter(|(_, g)| g.kind.a() % 2 == 0).fold(0, |b, (k, _)| b | 1 << k);
        self.reduce(CgElement { bits })
    }

    pub fn pairing(&self, eta: CgCharacter, x: CgElement) -> Sign {
        eta.eval(x)
    }

    /// A = Z/2⟨z_1⟩ × A', when z_1 is free of relations. Returns A'.
    pub fn split_first_block(&self) -> Result<ComponentGroup> {
        match self.generators.first() {
            Some(Generator { kind: GeneratorKind::Discrete(_), .. }) => {}
            _ => return Err(Error::NotSplit),
        }
        if self.relations.iter().any(|(i, j)| *i == 0 || *j == 0) {
            return Err(Error::NotSplit);
        }
        let gens: Vec<Generator> = self.generators[1..]
            .iter()
            .map(|g| Generator { name: shift_name(&g.name, -1), kind: g.kind })
            .collect();
        let rel = self.relations.iter().map(|(i, j)| (i - 1, j - 1)).collect();
        Self::new(gens, rel)
    }

    /// Inverse of `split_first_block`: Z/2⟨z_new⟩ × self.
    pub fn with_leading_block(&self, block: Block) -> Result<ComponentGroup> {
        let mut gens = vec![Generator { name: "z1".into(), kind: GeneratorKind::Discrete(block) }];
        gens.extend(self.generators.iter().map(|g| Generator { name: shift_name(&g.name, 1), kind: g.kind }));
        let rel = self.relations.iter().map(|(i, j)| (i + 1, j + 1)).collect();
        Self::new(gens, rel)
    }

    pub fn split_element(x: CgElement) -> (Sign, CgElement) {
        (Sign::from_parity(x.bits & 1 == 1), CgElement { bits: x.bits >> 1 })
    }

    pub fn join_element(sd: Sign, rest: CgElement) -> CgElement {
        CgElement { bits: rest.bits << 1 | sd.is_minus() as u64 }
    }

    pub fn split_character(eta: CgCharacter) -> (SignCharacter, CgCharacter) {
        (SignCharacter::pow((eta.minus & 1) as i64), CgCharacter { minus: eta.minus >> 1 })
    }

    pub fn join_character(eta_d: SignCharacter, rest: CgCharacter) -> CgCharacter {
        CgCharacter { minus: rest.minus << 1 | eta_d.is_sgn() as u64 }
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }
}

/// z3 -> z2 for the discrete generators; unipotent names are unchanged.
fn shift_name(name: &str, by: i64) -> String {
    match name.strip_prefix('z').and_then(|k| k.parse::<i64>().ok()) {
        Some(k) => format!("z{}", k + by),
        None => name.to_string(),
    }
}

pub fn component_group(d: &ParityDecomposition) -> Result<ComponentGroup> {
    ComponentGroup::from_parts(&d.bp_disc, &d.bp_u)
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Z/2)^{} on <{}>", self.dim(), self.names().join(","))?;
        for (i, j) in &self.relations {
            write!(f, " {}{}=1", self.generators[*i].name, self.generators[*j].name)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(eps: u8, a: u32) -> UnipotentSummand {
        UnipotentSummand { eps, a }
    }

    #[test]
    fn distinct_blocks_free() {
        let g = ComponentGroup::from_parts(&[Block::new(9, 2), Block::new(6, 1)], &[]).unwrap();
        assert_eq!(g.dim(), 2);
        assert_eq!(g.characters().len(), 4);
        assert_eq!(g.s_psi(), CgElement { bits: 1 });
    }

    #[test]
    fn identical_blocks_identified() {
        let g = ComponentGroup::from_parts(&[Block::new(5, 1), Block::new(5, 1)], &[]).unwrap();
        assert_eq!(g.dim(), 1);
        let chars = g.characters();
        assert_eq!(chars, vec![CgCharacter { minus: 0 }, CgCharacter { minus: 0b11 }]);
        assert!(g.equal(g.generator(0), g.generator(1)));
        assert!(g.split_first_block().is_err());
    }

    #[test]
    fn unipotent_relations_and_order() {
        let g = ComponentGroup::from_parts(&[Block::new(8, 1)], &[u(0, 3), u(0, 3), u(1, 1)]).unwrap();
        assert_eq!(g.dim(), 3);
        let chars = g.characters();
        assert_eq!(chars.len(), 8);
        let vals: Vec<Vec<Sign>> = chars.iter().map(|c| c.values(4)).collect();
        let mut sorted = vals.clone();
        sorted.sort();
        assert_eq!(vals, sorted);
        assert!(chars.iter().all(|c| g.is_character(*c)));
    }

    #[test]
    fn split_identity() {
        let g = ComponentGroup::from_parts(&[Block::new(9, 2), Block::new(6, 1)], &[u(1, 1)]).unwrap();
        let rest = g.split_first_block().unwrap();
        assert_eq!(rest.names(), vec!["z1", "u1"]);
        assert_eq!(rest.with_leading_block(Block::new(9, 2)).unwrap(), g);
        let s = g.s_psi();
        for eta in g.characters() {
            let (ed, er) = ComponentGroup::split_character(eta);
            let (sd, sr) = ComponentGroup::split_element(s);
            assert_eq!(eta.eval(s), ed.eval(sd) * er.eval(sr));
        }
    }

    #[test]
    fn empty_group() {
        let g = ComponentGroup::from_parts(&[], &[]).unwrap();
        assert_eq!(g.characters(), vec![CgCharacter::default()]);
        assert_eq!(g.elements(), vec![CgElement::default()]);
    }
}
