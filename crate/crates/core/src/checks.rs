//! The acceptance suite. Each check compares a closed form or a construction
//! against an oracle over a finite range and reports every disagreement.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_integer::binomial;

use crate::characters::{s_character, s_d, s_eval_at_sd, torsion_bruteforce, torsion_closed_form, CartanShape};
use crate::compgroup::{component_group, CgCharacter, ComponentGroup};
use crate::dsl::{parse_group, parse_param, render_group, render_param};
use crate::endoscopy::{elliptic_endoscopic_data, twist_table, EndoscopicShape, FactorKind};
use crate::error::{Error, ErrorClass, Result};
use crate::groups::{Family, GroupDescriptor, SplitType};
use crate::levi::superpacket_distribution;
use crate::number::{GaussRat, Sign, SignCharacter};
use crate::oracle;
use crate::packets::{build_packet, fold_packet, index_set, multi_sign, multiplicity_one_check, vanishing_filter, MultiplicityStatus};
use crate::params::{decompose, is_regular, ArthurParameter, Summand};
use crate::rootdata::{rho, rho_v_closed, RhoCase, RootFamily};
use crate::sample::{ParamShape, Sampler};

pub const CHECK_COUNT: u8 = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    /// Caps the rank bound of every check; None keeps each check's own bound.
    pub max_rank: Option<u32>,
    /// Number of random parameters for the sampled checks.
    pub samples: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 1729, max_rank: None, samples: 1000 }
    }
}

impl CheckConfig {
    fn bound(&self, own: u32) -> u32 {
        self.max_rank.map_or(own, |m| m.min(own))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: u8,
    pub name: &'static str,
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failures.
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CheckOutcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.cases > 0 && self.within_budget()
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{} cases, {} failures, {:.3}s", self.cases, self.failure_count, self.elapsed.as_secs_f64());
        if let Some(b) = self.budget {
            s.push_str(&format!(" (limit {}s)", b.as_secs()));
        }
        if let Some(f) = self.failures.first() {
            s.push_str(&format!("; first: {f}"));
        }
        s
    }
}

const KEEP: usize = 5;

#[derive(Default)]
struct Tally {
    cases: usize,
    count: usize,
    failures: Vec<String>,
}

impl Tally {
    fn case(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.count += 1;
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    fn ok_or_fail<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: {e}", what()));
                None
            }
        }
    }
}

pub fn name(id: u8) -> Option<&'static str> {
    Some(match id {
        1 => "rho-shift",
        2 => "torsion",
        3 => "sign-consistency",
        4 => "packet-count",
        5 => "descent",
        6 => "recursion",
        7 => "endoscopic-enumeration",
        8 => "component-group",
        9 => "multiplicity-one",
        10 => "twist-table",
        11 => "round-trip",
        _ => return None,
    })
}

fn budget(id: u8) -> Option<Duration> {
    match id {
        1 | 3 => Some(Duration::from_secs(1)),
        2 => Some(Duration::from_secs(30)),
        6 => Some(Duration::from_secs(10)),
        _ => None,
    }
}

pub fn run(id: u8, cfg: &CheckConfig) -> Option<CheckOutcome> {
    let name = name(id)?;
    let start = Instant::now();
    let mut t = Tally::default();
    match id {
        1 => rho_shift(cfg, &mut t),
        2 => torsion(cfg, &mut t),
        3 => sign_consistency(cfg, &mut t),
        4 => packet_count(cfg, &mut t),
        5 => descent(cfg, &mut t),
        6 => recursion(cfg, &mut t),
        7 => endoscopic_enumeration(cfg, &mut t),
        8 => component_groups(cfg, &mut t),
        9 => multiplicity_one(cfg, &mut t),
        10 => twists(&mut t),
        11 => round_trip(cfg, &mut t),
        _ => unreachable!(),
    }
    Some(CheckOutcome {
        id,
        name,
        cases: t.cases,
        failure_count: t.count,
        failures: t.failures,
        elapsed: start.elapsed(),
        budget: budget(id),
    })
}

pub fn run_all(cfg: &CheckConfig) -> Vec<CheckOutcome> {
    (1..=CHECK_COUNT).filter_map(|id| run(id, cfg)).collect()
}

const CASES: [RhoCase; 3] = [RhoCase::A, RhoCase::B, RhoCase::CD];

fn rho_shift(cfg: &CheckConfig, t: &mut Tally) {
    let top = cfg.bound(12) as usize;
    for c in 0..=top {
        t.case(rho(RootFamily::Agl, c) == oracle::rho_gl_literal(c), || format!("rho of gl({c})"));
    }
    for case in CASES {
        for n in 1..=top {
            for c in 1..=n {
                let closed = rho_v_closed(case, n, c);
                let brute = oracle::rho_shift(case, n, c);
                t.case(closed.as_ref() == Ok(&brute), || format!("{case:?} n={n} c={c}: {closed:?} vs {brute:?}"));
            }
        }
    }
}

fn torsion(cfg: &CheckConfig, t: &mut Tally) {
    let top = cfg.bound(6);
    for case in CASES {
        for r1 in 0..=top {
            for m1 in 0..=(top - r1) / 2 {
                for r2 in 0..=top - r1 - 2 * m1 {
                    for m2 in 0..=(top - r1 - 2 * m1 - r2) / 2 {
                        for s2 in 0..=top - r1 - 2 * m1 - r2 - 2 * m2 {
                            let shape = CartanShape::new(r1, m1, r2, m2, s2);
                            if shape.rank() == 0 {
                                continue;
                            }
                            let brute = torsion_bruteforce(case, shape);
                            let want = torsion_closed_form(shape.c(), s2);
                            t.case(brute.as_ref() == Ok(&want), || format!("{case:?} {shape:?}: {brute:?}"));
                        }
                    }
                }
            }
        }
    }
}

fn sign_consistency(cfg: &CheckConfig, t: &mut Tally) {
    let top = cfg.bound(25);
    for n in 0..=top {
        for c in 0..=n {
            for i in 0..=c {
                let closed = s_eval_at_sd(i, c, n);
                let direct = s_character(i, c, n).eval(s_d(c));
                t.case(closed == direct, || format!("i={i} c={c} n={n}: {closed:?} vs {direct:?}"));
            }
        }
    }
}

fn v0(t: i64, a: u32) -> Summand {
    Summand::v(GaussRat::zero(), t, a)
}

/// Compares the packet size on `form` with the superpacket entry and the binomial.
fn count_on(t: &mut Tally, form: GroupDescriptor, summands: Vec<Summand>, n: u32, n1: u32) {
    let psi = ArthurParameter::new(form, summands);
    let Some(table) = t.ok_or_fail(build_packet(&psi), || format!("packet of {psi} on {form}")) else {
        return;
    };
    let Some(dist) = t.ok_or_fail(superpacket_distribution(&form), || format!("superpacket of {form}")) else {
        return;
    };
    let entry = dist.get(&form).copied().unwrap_or(0);
    let want = binomial(n as u64, n1 as u64);
    t.case(table.total() as u64 == entry && entry == want, || {
        format!("{form}: packet {} vs superpacket {entry} vs C({n},{n1}) = {want}", table.total())
    });
}

fn packet_count(cfg: &CheckConfig, t: &mut Tally) {
    for n in 1..=cfg.bound(8) {
        let g = GroupDescriptor::sp(n);
        let mut s: Vec<Summand> = (1..=n).map(|r| v0(2 * (n - r + 1) as i64, 1)).collect();
        s.push(Summand::w(GaussRat::zero(), (n % 2) as u8, 1));
        let psi = ArthurParameter::new(g, s);
        let Some(table) = t.ok_or_fail(build_packet(&psi), || format!("packet of {psi}")) else {
            continue;
        };
        let dist = superpacket_distribution(&g).ok().and_then(|d| d.get(&g).copied()).unwrap_or(0);
        t.case(table.total() as u64 == 1 << n && dist == 1 << n, || format!("Sp({}): {} data", 2 * n, table.total()));
        let signs: BTreeSet<Vec<SignCharacter>> = table.data().map(|(_, d)| d.sign.clone()).collect();
        t.case(signs.len() == 1 << n, || format!("Sp({}): {} distinct sign characters", 2 * n, signs.len()));
    }
    for n in 1..=cfg.bound(10) {
        for k in 0..=n {
            let odd = GroupDescriptor::so(2 * k + 1, 2 * (n - k)).expect("signature");
            count_on(t, odd, (1..=n).map(|r| v0(2 * (n - r) as i64 + 1, 1)).collect(), n, k);
            let even = GroupDescriptor::so(2 * k, 2 * (n - k)).expect("signature");
            count_on(t, even, (1..=n).map(|r| v0(2 * (n - r + 1) as i64, 1)).collect(), n, k);
        }
    }
}

fn draws(cfg: &CheckConfig, salt: u64, max_rank: u32, count: usize, shape: ParamShape) -> Vec<ArthurParameter> {
    let mut s = Sampler::new(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count && tries < 200 * count.max(1) {
        tries += 1;
        let g = s.group(max_rank);
        if let Some(p) = s.param(&g, shape) {
            out.push(p);
        }
    }
    out
}

fn descent(cfg: &CheckConfig, t: &mut Tally) {
    let shape = ParamShape { repeated: true, ..Default::default() };
    let params = draws(cfg, 5, cfg.bound(10), cfg.samples, shape);
    if params.len() < cfg.samples {
        t.fail(format!("only {} parameters with repeated blocks drawn", params.len()));
    }
    for psi in params {
        let Some(d) = t.ok_or_fail(decompose(&psi), || psi.to_string()) else { continue };
        let Some(cg) = t.ok_or_fail(component_group(&d), || psi.to_string()) else { continue };
        let r = d.bp_disc.len();
        let rel: Vec<(usize, usize)> = cg.relations.iter().copied().filter(|(i, j)| *i < r && *j < r).collect();
        t.case(!rel.is_empty(), || format!("{psi}: no relation among the blocks"));
        let Some(set) = t.ok_or_fail(index_set(&d.bp_disc, &psi.group), || psi.to_string()) else { continue };
        for (idx, _) in set {
            if !vanishing_filter(&idx, &d.bp_disc) {
                continue;
            }
            let sign = multi_sign(&idx, &d.bp_disc, psi.group.rank);
            for (i, j) in &rel {
                t.case(sign[*i] * sign[*j] == SignCharacter::Triv, || {
                    format!("{} on {}: i={idx:?} nontrivial on z{}z{}", psi, psi.group, i + 1, j + 1)
                });
            }
        }
    }
}

fn recursion(cfg: &CheckConfig, t: &mut Tally) {
    let shape = ParamShape { regular: true, ..Default::default() };
    for psi in draws(cfg, 6, cfg.bound(10), cfg.samples / 2, shape) {
        let built = build_packet(&psi);
        let folded = fold_packet(&psi);
        t.case(built.is_ok() && built == folded, || format!("{psi} on {}: build and fold differ", psi.group));
    }
}

fn endo_key(d: &crate::endoscopy::EndoscopicDatum, ordered: bool) -> oracle::EndoKey {
    let mut k = vec![(FactorKind::of(&d.h1), d.h1.rank), (FactorKind::of(&d.h2), d.h2.rank)];
    if !ordered {
        k.sort();
    }
    k
}

fn endoscopic_enumeration(cfg: &CheckConfig, t: &mut Tally) {
    for n in 1..=cfg.bound(10) {
        let mut groups = vec![(Family::Symplectic, SplitType::D), (Family::OddOrthogonal, SplitType::D)];
        groups.push((Family::EvenOrthogonal, SplitType::D));
        groups.push((Family::EvenOrthogonal, SplitType::Qd));
        for (family, alpha) in groups {
            let Some(g) = t.ok_or_fail(GroupDescriptor::quasi_split(family, n, alpha), || format!("{family:?} rank {n}")) else {
                continue;
            };
            let Some(data) = t.ok_or_fail(elliptic_endoscopic_data(&g), || g.to_string()) else { continue };
            let ordered = family == Family::Symplectic;
            let keys: Vec<oracle::EndoKey> = data.iter().map(|d| endo_key(d, ordered)).collect();
            let got: BTreeSet<oracle::EndoKey> = keys.iter().cloned().collect();
            let want = oracle::endoscopic_bruteforce(family, n, alpha);
            t.case(got.len() == keys.len(), || format!("{g}: duplicate data"));
            t.case(got == want, || format!("{g}: {} data vs {} from the filter", got.len(), want.len()));
            t.case(data.iter().all(|d| d.x_d == Sign::Plus), || format!("{g}: x_d not normalised"));
            if family == Family::EvenOrthogonal {
                let ok = data.iter().all(|d| {
                    let ty = |h: &GroupDescriptor| h.split_type().unwrap_or(SplitType::D);
                    ty(&d.h1).product(ty(&d.h2)) == alpha
                });
                t.case(ok, || format!("{g}: a datum with βγ ≠ α"));
            }
        }
    }
}

fn component_group_case(t: &mut Tally, psi: &ArthurParameter, cg: &ComponentGroup) {
    let order = cg.order();
    t.case(order == oracle::elementary_order(cg.len(), &cg.relations), || format!("{psi}: order {order}"));
    let chars = cg.characters();
    let distinct: BTreeSet<CgCharacter> = chars.iter().copied().collect();
    t.case(
        chars.len() as u64 == order && distinct.len() == chars.len() && chars.iter().all(|c| cg.is_character(*c)),
        || format!("{psi}: {} characters for order {order}", chars.len()),
    );
    let elems = cg.elements();
    let detected = elems.iter().filter(|x| x.bits != 0).all(|x| chars.iter().any(|c| c.eval(*x) == Sign::Minus));
    let faithful = chars.iter().filter(|c| c.minus != 0).all(|c| elems.iter().any(|x| c.eval(*x) == Sign::Minus));
    t.case(detected && faithful, || format!("{psi}: degenerate pairing"));
    if let Ok(rest) = cg.split_first_block() {
        let mut ok = rest.order() * 2 == order;
        for eta in &chars {
            let (ed, er) = ComponentGroup::split_character(*eta);
            ok &= rest.is_character(er) && ComponentGroup::join_character(ed, er) == *eta;
            for x in &elems {
                let (sd, xr) = ComponentGroup::split_element(*x);
                ok &= eta.eval(*x) == ed.eval(sd) * er.eval(xr);
            }
        }
        t.case(ok, || format!("{psi}: factorisation through the first block fails"));
    }
}

fn component_groups(cfg: &CheckConfig, t: &mut Tally) {
    let shape = ParamShape { max_blocks: 3, max_a: 2, mixed: true, ..Default::default() };
    let want = 500.max(cfg.samples / 2);
    let params = draws(cfg, 8, cfg.bound(6), want, shape);
    if params.len() < want {
        t.fail(format!("only {} decompositions drawn", params.len()));
    }
    for psi in params {
        let Some(d) = t.ok_or_fail(decompose(&psi), || psi.to_string()) else { continue };
        let Some(cg) = t.ok_or_fail(component_group(&d), || psi.to_string()) else { continue };
        component_group_case(t, &psi, &cg);
    }
}

fn multiplicity_one(cfg: &CheckConfig, t: &mut Tally) {
    let mut params = draws(cfg, 9, cfg.bound(8), cfg.samples / 2, ParamShape::default());
    let regular = ParamShape { regular: true, ..Default::default() };
    params.extend(draws(cfg, 90, cfg.bound(8), cfg.samples / 2, regular));
    let (mut seen_regular, mut seen_irregular) = (false, false);
    for psi in params {
        let Some(d) = t.ok_or_fail(decompose(&psi), || psi.to_string()) else { continue };
        let Some(table) = t.ok_or_fail(build_packet(&psi), || psi.to_string()) else { continue };
        let want = if is_regular(&d) { MultiplicityStatus::Strict } else { MultiplicityStatus::WeaklyFair };
        seen_regular |= want == MultiplicityStatus::Strict;
        seen_irregular |= want == MultiplicityStatus::WeaklyFair;
        let got = multiplicity_one_check(&table).status;
        t.case(got == want, || format!("{psi} on {}: {got:?}, expected {want:?}", psi.group));
    }
    if !(seen_regular && seen_irregular) {
        t.fail("the random suite did not cover both regular and irregular packets".into());
    }
}

fn twists(t: &mut Tally) {
    use FactorKind::*;
    let rows = oracle::twist_rows();
    for family in [Family::Symplectic, Family::OddOrthogonal, Family::EvenOrthogonal] {
        for h1 in [Sp, SoOdd, SoD, SoQd] {
            for h2 in [Sp, SoOdd, SoD, SoQd] {
                for c in 0..8 {
                    let got = twist_table(family, EndoscopicShape { h1, h2 }, c);
                    let row = rows.iter().find(|r| r.0 == family && r.1 == h1 && r.2 == h2 && r.3 == c % 2);
                    let triv = (SignCharacter::Triv, SignCharacter::Triv);
                    match row {
                        Some(r) => {
                            let want = (r.4, r.5);
                            t.case(got.as_ref() == Ok(&want), || format!("{family:?} {h1:?}x{h2:?} c={c}: {got:?}"));
                            if family != Family::Symplectic || c % 2 == 0 {
                                t.case(got.as_ref() == Ok(&triv), || format!("{family:?} {h1:?}x{h2:?} c={c} not trivial"));
                            }
                        }
                        None => t.case(got.is_err(), || format!("{family:?} {h1:?}x{h2:?} accepted")),
                    }
                }
            }
        }
    }
}

fn classify(r: Result<impl Sized>) -> Option<ErrorClass> {
    r.err().map(|e: Error| e.class())
}

fn round_trip(cfg: &CheckConfig, t: &mut Tally) {
    let shape = ParamShape { mixed: true, ..Default::default() };
    let params = draws(cfg, 11, cfg.bound(8), cfg.samples, shape);
    if params.len() < cfg.samples {
        t.fail(format!("only {} parameters drawn", params.len()));
    }
    for psi in params {
        let text = render_param(&psi);
        let g = parse_group(&render_group(&psi.group));
        t.case(g.as_ref() == Ok(&psi.group), || format!("group {} does not round-trip", psi.group));
        let back = parse_param(&text, &psi.group);
        t.case(back.as_ref() == Ok(&psi), || format!("{text}: {back:?}"));
    }
    let sp2 = GroupDescriptor::sp(1);
    let sp4 = GroupDescriptor::sp(2);
    for bad in ["V(0,4)xR[1] +", "V(0;4)xR[1]", "W(0,2)xR[1]", "X(0,1)xR[1]", "V(1/0,2)xR[1]"] {
        t.case(classify(parse_param(bad, &sp2)) == Some(ErrorClass::Parse), || format!("{bad} is not a parse error"));
    }
    for bad in ["Sp(3)", "SO(1)", "GL(2)"] {
        t.case(classify(parse_group(bad)) == Some(ErrorClass::Parse), || format!("{bad} is not a parse error"));
    }
    for bad in ["W(0,0)xR[2]", "V(0,4)xR[1]", "V(1,4)xR[1] + W(0,0)xR[1]"] {
        t.case(classify(parse_param(bad, &sp2)) == Some(ErrorClass::Invalid), || format!("{bad} is not invalid"));
    }
    let mixed = parse_param("V(1,2)xR[1] + V(-1,2)xR[1] + W(0,0)xR[1]", &sp4);
    t.case(mixed.is_ok(), || "mixed parameter on Sp(4) rejected".into());
    if let Ok(p) = mixed {
        t.case(classify(build_packet(&p)) == Some(ErrorClass::Unsupported), || "bad-parity residue accepted".into());
    }
    let u = ArthurParameter::new(GroupDescriptor::u(1, 1), vec![Summand::w(GaussRat::zero(), 0, 1); 2]);
    t.case(classify(build_packet(&u)) == Some(ErrorClass::Unsupported), || "unitary packet accepted".into());
}
