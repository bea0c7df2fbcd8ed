//! Packet tables: for each character η of A(ψ), the cohomological induction data
//! whose sum is the η-part of the packet.
//!
//! `build_packet` works from the index set of the whole parameter at once;
//! `fold_packet` adds the discrete blocks one by one with `add_block`, starting
//! from the unipotent part. For regular parameters the two agree.

use std::collections::{BTreeMap, BTreeSet};

use crate::characters::{s_character, xi_block_differential};
use crate::compgroup::{component_group, CgCharacter, CgElement, ComponentGroup};
use crate::error::{Error, Result};
use crate::groups::{Family, GroupDescriptor, LeviDescriptor};
use crate::levi::{c_levi_representatives, induction_degree};
use crate::number::{Sign, SignCharacter};
use crate::params::{
    base_group, decompose, dominance_gap_ok, epsilon_twist, is_regular, is_regular_blocks, tail_summands,
    ArthurParameter, Block, UnipotentSummand,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RangeFlag {
    Good,
    WeaklyFair,
}

impl RangeFlag {
    pub fn tag(self) -> &'static str {
        match self {
            RangeFlag::Good => "good",
            RangeFlag::WeaklyFair => "weaklyFair",
        }
    }
}

/// The unipotent representation π(ψ_G', η', G'_ī), kept opaque.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaseLabel {
    pub form: GroupDescriptor,
    /// Character of the unipotent part of the component group.
    pub eta: CgCharacter,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InductionDatum {
    pub index: Vec<u32>,
    pub blocks: Vec<Block>,
    /// U(i_1, a_1 - i_1) x ... x U(i_R, a_R - i_R) x G'_ī.
    pub levi: LeviDescriptor,
    /// floor(t_r / 2) for each block.
    pub block_characters: Vec<i64>,
    pub base: BaseLabel,
    /// Value of S_ī on each z_r.
    pub sign: Vec<SignCharacter>,
    pub degree: i64,
    pub range: RangeFlag,
    pub vanished: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketEntry {
    pub eta: CgCharacter,
    pub data: Vec<InductionDatum>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketTable {
    pub group: GroupDescriptor,
    pub blocks: Vec<Block>,
    pub unipotent: Vec<UnipotentSummand>,
    pub component_group: ComponentGroup,
    pub s_psi: CgElement,
    pub epsilon_psi: SignCharacter,
    /// Quasi-split G' and ψ_G' = ψ_bp,u ⊗ ε_ψ.
    pub base_group: GroupDescriptor,
    pub base_parameter: Vec<UnipotentSummand>,
    pub regular: bool,
    pub entries: Vec<PacketEntry>,
    /// Index vectors removed by the vanishing rule.
    pub vanished: Vec<Vec<u32>>,
}

impl PacketTable {
    pub fn data(&self) -> impl Iterator<Item = (&CgCharacter, &InductionDatum)> {
        self.entries.iter().flat_map(|e| e.data.iter().map(move |d| (&e.eta, d)))
    }

    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.data.len()).sum()
    }

    pub fn entry(&self, eta: CgCharacter) -> Option<&PacketEntry> {
        self.entries.iter().find(|e| e.eta == eta)
    }
}

/// Index vectors ī with 0 <= i_r <= a_r, in lexicographic order, with the base form
/// G'_ī. For SO(p,q) only those with 2Σi <= p and 2Σ(a - i) <= q survive.
pub fn index_set(blocks: &[Block], g: &GroupDescriptor) -> Result<Vec<(Vec<u32>, GroupDescriptor)>> {
    let c: u32 = blocks.iter().map(|b| b.a).sum();
    if c > g.rank {
        return Err(Error::OutOfRange(format!("blocks use rank {c} > {}", g.rank)));
    }
    let mut out = Vec::new();
    let mut idx = vec![0u32; blocks.len()];
    loop {
        let lo: u32 = idx.iter().sum();
        let hi = c - lo;
        let base = match g.family {
            Family::Symplectic => Some(GroupDescriptor::sp(g.rank - c)),
            Family::OddOrthogonal | Family::EvenOrthogonal => {
                let (p, q) = g.pq();
                if 2 * lo <= p && 2 * hi <= q {
                    Some(GroupDescriptor::so(p - 2 * lo, q - 2 * hi)?)
                } else {
                    None
                }
            }
            Family::Unitary => return Err(Error::Unsupported("packets for unitary groups".into())),
        };
        if let Some(b) = base {
            out.push((idx.clone(), b));
        }
        let mut k = blocks.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if idx[k] < blocks[k].a {
                idx[k] += 1;
                break;
            }
            idx[k] = 0;
        }
    }
}

/// For identical consecutive blocks only i_r = a_{r+1} - i_{r+1} survives.
pub fn vanishing_filter(index: &[u32], blocks: &[Block]) -> bool {
    (1..blocks.len()).all(|r| blocks[r - 1] != blocks[r] || index[r - 1] == blocks[r].a - index[r])
}

/// S_ī on z_r: S(i_r, a_r, n - Σ_{j<r} a_j).
pub fn multi_sign(index: &[u32], blocks: &[Block], n: u32) -> Vec<SignCharacter> {
    let mut before = 0;
    index
        .iter()
        .zip(blocks)
        .map(|(i, b)| {
            let s = s_character(*i, b.a, n - before);
            before += b.a;
            s
        })
        .collect()
}

/// Second convention: ε_r = i_r(a_{<r} + 1) + (a_r - i_r)a_{<r} + a_r(a_r + 1)/2.
/// It differs from `multi_sign` by sgn^{n a_r} on z_r.
pub fn multi_sign_alt(index: &[u32], blocks: &[Block]) -> Vec<SignCharacter> {
    let mut before = 0i64;
    index
        .iter()
        .zip(blocks)
        .map(|(i, b)| {
            let (i, a) = (*i as i64, b.a as i64);
            let e = i * (before + 1) + (a - i) * before + a * (a + 1) / 2;
            before += a;
            SignCharacter::pow(e)
        })
        .collect()
}

fn base_characters(unip_group: &ComponentGroup, form: &GroupDescriptor) -> Vec<CgCharacter> {
    if form.rank == 0 {
        vec![CgCharacter::default()]
    } else {
        unip_group.characters()
    }
}

fn assemble(group: &ComponentGroup, mut buckets: BTreeMap<CgCharacter, Vec<InductionDatum>>) -> Result<Vec<PacketEntry>> {
    for eta in buckets.keys() {
        if !group.is_character(*eta) {
            return Err(Error::Shape(format!("assembled η {:b} is not a character of A(ψ)", eta.minus)));
        }
    }
    Ok(group
        .characters()
        .into_iter()
        .map(|eta| {
            let mut data = buckets.remove(&eta).unwrap_or_default();
            data.sort();
            PacketEntry { eta, data }
        })
        .collect())
}

/// Table of a parameter without discrete blocks on the form `form`: one opaque
/// label per character of the unipotent component group. The rank 0 group only
/// carries the trivial representation, under the trivial character.
pub fn unipotent_table(form: &GroupDescriptor, unip: &[UnipotentSummand]) -> Result<PacketTable> {
    let group = ComponentGroup::from_parts(&[], unip)?;
    let mut buckets = BTreeMap::new();
    for eta in base_characters(&group, form) {
        let datum = InductionDatum {
            index: vec![],
            blocks: vec![],
            levi: LeviDescriptor::new(vec![], *form),
            block_characters: vec![],
            base: BaseLabel { form: *form, eta },
            sign: vec![],
            degree: 0,
            range: RangeFlag::Good,
            vanished: false,
        };
        buckets.insert(eta, vec![datum]);
    }
    Ok(PacketTable {
        group: *form,
        blocks: vec![],
        unipotent: unip.to_vec(),
        s_psi: group.s_psi(),
        entries: assemble(&group, buckets)?,
        component_group: group,
        epsilon_psi: SignCharacter::Triv,
        base_group: base_group(form, 0)?,
        base_parameter: unip.to_vec(),
        regular: true,
        vanished: vec![],
    })
}

fn epsilon_of(group: &GroupDescriptor, blocks: &[Block]) -> SignCharacter {
    if group.family == Family::Symplectic {
        SignCharacter::pow(blocks.iter().filter(|b| b.t % 2 == 0).count() as i64)
    } else {
        SignCharacter::Triv
    }
}

/// Twist applied to the rest of the parameter when `block` is split off.
pub fn tail_twist(group: &GroupDescriptor, block: Block) -> SignCharacter {
    epsilon_of(group, &[block])
}

/// Packet of ψ = V(0,t)⊠R[c] ⊕ ψ' on G, from the packets of ψ'_ε on the forms
/// G'_i of the c-Levi representatives. `inner` supplies those packets.
pub fn add_block<F>(
    group: &GroupDescriptor,
    block: Block,
    tail_blocks: &[Block],
    tail_unip: &[UnipotentSummand],
    mut inner: F,
) -> Result<PacketTable>
where
    F: FnMut(&GroupDescriptor) -> Result<PacketTable>,
{
    let c = block.a;
    if block.t < c || !dominance_gap_ok(block, &tail_summands(tail_blocks, tail_unip)) {
        return Err(Error::GapCondition { t: block.t, c });
    }
    let rest = ComponentGroup::from_parts(tail_blocks, tail_unip)?;
    let whole = rest.with_leading_block(block)?;
    let n = group.rank;
    let mut buckets: BTreeMap<CgCharacter, Vec<InductionDatum>> = BTreeMap::new();
    for rep in c_levi_representatives(group, c)? {
        let s = s_character(rep.index, c, n);
        let table = inner(&rep.levi.base)?;
        if table.component_group.relations != rest.relations || table.component_group.len() != rest.len() {
            return Err(Error::Shape("inner packet has a different component group".into()));
        }
        for entry in &table.entries {
            let eta = ComponentGroup::join_character(s, entry.eta);
            for d in &entry.data {
                let mut unitary = vec![(rep.index, c - rep.index)];
                unitary.extend(d.levi.unitary.iter().copied());
                let datum = InductionDatum {
                    index: [rep.index].into_iter().chain(d.index.iter().copied()).collect(),
                    blocks: [block].into_iter().chain(d.blocks.iter().copied()).collect(),
                    levi: LeviDescriptor::new(unitary, d.levi.base),
                    block_characters: [xi_block_differential(rep.index, c, block.t)]
                        .into_iter()
                        .chain(d.block_characters.iter().copied())
                        .collect(),
                    base: d.base,
                    sign: [s].into_iter().chain(d.sign.iter().copied()).collect(),
                    degree: rep.degree + d.degree,
                    range: d.range,
                    vanished: false,
                };
                buckets.entry(eta).or_default().push(datum);
            }
        }
    }
    let blocks: Vec<Block> = [block].into_iter().chain(tail_blocks.iter().copied()).collect();
    let eps = epsilon_of(group, &blocks);
    let c_total: u32 = blocks.iter().map(|b| b.a).sum();
    Ok(PacketTable {
        group: *group,
        regular: is_regular_blocks(&blocks, tail_unip),
        blocks,
        unipotent: tail_unip.to_vec(),
        s_psi: whole.s_psi(),
        entries: assemble(&whole, buckets)?,
        component_group: whole,
        epsilon_psi: eps,
        base_group: base_group(group, c_total)?,
        base_parameter: tail_unip.iter().map(|u| u.twisted(eps)).collect(),
        vanished: vec![],
    })
}

fn good_parity_parts(psi: &ArthurParameter) -> Result<crate::params::ParityDecomposition> {
    if psi.group.family == Family::Unitary {
        return Err(Error::Unsupported("packets for unitary groups".into()));
    }
    let d = decompose(psi)?;
    if !d.is_good_parity() {
        return Err(Error::BadParityResidue);
    }
    Ok(d)
}

/// The packet table of a good-parity parameter, built from its index set.
pub fn build_packet(psi: &ArthurParameter) -> Result<PacketTable> {
    let d = good_parity_parts(psi)?;
    let g = psi.group;
    let whole = component_group(&d)?;
    let unip = ComponentGroup::from_parts(&[], &d.bp_u)?;
    let (eps, gp) = epsilon_twist(&d)?;
    let regular = is_regular(&d);
    let range = if regular { RangeFlag::Good } else { RangeFlag::WeaklyFair };
    let blocks = &d.bp_disc;
    let r = blocks.len();
    let mut buckets: BTreeMap<CgCharacter, Vec<InductionDatum>> = BTreeMap::new();
    let mut vanished = Vec::new();
    for (index, form) in index_set(blocks, &g)? {
        if !vanishing_filter(&index, blocks) {
            vanished.push(index);
            continue;
        }
        let sign = multi_sign(&index, blocks, g.rank);
        let unitary: Vec<(u32, u32)> = index.iter().zip(blocks).map(|(i, b)| (*i, b.a - i)).collect();
        let levi = LeviDescriptor::new(unitary, form);
        let degree = induction_degree(&g, &levi)?;
        let block_characters: Vec<i64> =
            index.iter().zip(blocks).map(|(i, b)| xi_block_differential(*i, b.a, b.t)).collect();
        let head = sign.iter().enumerate().filter(|(_, s)| s.is_sgn()).fold(0u64, |m, (k, _)| m | 1 << k);
        for eta_u in base_characters(&unip, &form) {
            let eta = CgCharacter { minus: head | eta_u.minus << r };
            let datum = InductionDatum {
                index: index.clone(),
                blocks: blocks.clone(),
                levi: levi.clone(),
                block_characters: block_characters.clone(),
                base: BaseLabel { form, eta: eta_u },
                sign: sign.clone(),
                degree,
                range,
                vanished: false,
            };
            buckets.entry(eta).or_default().push(datum);
        }
    }
    Ok(PacketTable {
        group: g,
        blocks: blocks.clone(),
        unipotent: d.bp_u.clone(),
        s_psi: whole.s_psi(),
        entries: assemble(&whole, buckets)?,
        component_group: whole,
        epsilon_psi: eps,
        base_group: gp,
        base_parameter: d.bp_u.iter().map(|u| u.twisted(eps)).collect(),
        regular,
        vanished,
    })
}

fn fold_rec(form: &GroupDescriptor, blocks: &[Block], unip: &[UnipotentSummand]) -> Result<PacketTable> {
    match blocks.split_first() {
        None => unipotent_table(form, unip),
        Some((b, rest)) => {
            let tw = tail_twist(form, *b);
            let inner_unip: Vec<UnipotentSummand> = unip.iter().map(|u| u.twisted(tw)).collect();
            add_block(form, *b, rest, unip, |f| fold_rec(f, rest, &inner_unip))
        }
    }
}

/// The packet table obtained by adding the blocks of ψ one at a time, innermost
/// first. Fails with `GapCondition` on non-regular parameters.
pub fn fold_packet(psi: &ArthurParameter) -> Result<PacketTable> {
    let d = good_parity_parts(psi)?;
    fold_rec(&psi.group, &d.bp_disc, &d.bp_u)
}

/// Σ η(s_ψ x) π(ψ, η): each datum with its coefficient.
pub fn stable_sum(table: &PacketTable, x: CgElement) -> Vec<(InductionDatum, Sign)> {
    let sx = table.s_psi.mul(x);
    table.data().map(|(eta, d)| (d.clone(), eta.eval(sx))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicityStatus {
    /// Regular parameter, no repetition.
    Strict,
    /// No repetition found, but outside the good range the statement is not proved.
    WeaklyFair,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub status: MultiplicityStatus,
    pub repeated_within_eta: usize,
    pub shared_across_eta: usize,
}

/// Data are pairwise distinct inside each η, and each (ī, base label) sits under one η.
pub fn multiplicity_one_check(table: &PacketTable) -> MultiplicityReport {
    let mut within = 0;
    let mut owner: BTreeMap<(Vec<u32>, BaseLabel), CgCharacter> = BTreeMap::new();
    let mut across = 0;
    for e in &table.entries {
        let mut seen = BTreeSet::new();
        for d in &e.data {
            let key = (d.index.clone(), d.base);
            if !seen.insert(key.clone()) {
                within += 1;
            }
            match owner.get(&key) {
                Some(other) if *other != e.eta => across += 1,
                _ => {
                    owner.insert(key, e.eta);
                }
            }
        }
    }
    let status = if within + across > 0 {
        MultiplicityStatus::Violated
    } else if table.regular {
        MultiplicityStatus::Strict
    } else {
        MultiplicityStatus::WeaklyFair
    };
    MultiplicityReport { status, repeated_within_eta: within, shared_across_eta: across }
}
