//! Serializable views of the core results. Field order is fixed by the struct
//! definitions and every list is in the canonical order of the core, so the
//! JSON is byte-for-byte reproducible.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use arthur_core::characters::xi_u_differential;
use arthur_core::checks::CheckOutcome;
use arthur_core::compgroup::{CgCharacter, CgElement, ComponentGroup};
use arthur_core::characters::epsilon_u_differential;
use arthur_core::endoscopy::{c_levi_of_endoscopic, twist_table, EndoscopicDatum};
use arthur_core::levi::{c_levi_representatives, distinguished_index, superpacket_distribution};
use arthur_core::number::fmt_rat_frac;
use arthur_core::packets::PacketTable;
use arthur_core::params::{epsilon_twist, infinitesimal_character, is_regular, ParityDecomposition};
use arthur_core::rootdata::{rho_v_closed, RhoCase};
use arthur_core::{ArthurParameter, Family, GaussRat, GroupDescriptor, LeviCase, Result};

/// Generator name to ±1, serialized as a JSON object in generator order.
pub struct SignMap(Vec<(String, i8)>);

impl Serialize for SignMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

fn char_map(cg: &ComponentGroup, eta: CgCharacter) -> SignMap {
    SignMap(cg.names().iter().enumerate().map(|(k, n)| (n.to_string(), eta.value(k).to_i8())).collect())
}

fn element_names(cg: &ComponentGroup, x: CgElement) -> Vec<String> {
    let x = cg.reduce(x);
    cg.names().iter().enumerate().filter(|(k, _)| x.bits >> k & 1 == 1).map(|(_, n)| n.to_string()).collect()
}

#[derive(Serialize)]
pub struct Complex {
    pub re: String,
    pub im: String,
}

impl From<&GaussRat> for Complex {
    fn from(z: &GaussRat) -> Self {
        Complex { re: fmt_rat_frac(&z.re), im: fmt_rat_frac(&z.im) }
    }
}

#[derive(Serialize)]
pub struct GeneratorView {
    pub name: String,
    pub summand: String,
}

#[derive(Serialize)]
pub struct ComponentGroupView {
    pub generators: Vec<GeneratorView>,
    pub relations: Vec<[String; 2]>,
    pub order: u64,
}

impl From<&ComponentGroup> for ComponentGroupView {
    fn from(cg: &ComponentGroup) -> Self {
        let names = cg.names();
        ComponentGroupView {
            generators: cg
                .generators
                .iter()
                .map(|g| GeneratorView { name: g.name.clone(), summand: g.kind.summand().to_string() })
                .collect(),
            relations: cg.relations.iter().map(|(i, j)| [names[*i].to_string(), names[*j].to_string()]).collect(),
            order: cg.order(),
        }
    }
}

#[derive(Serialize)]
pub struct DatumView {
    pub i_vector: Vec<u32>,
    pub levi: String,
    pub block_characters: Vec<i64>,
    pub sign: Vec<&'static str>,
    pub base_form: String,
    pub base_eta: SignMap,
    pub degree: i64,
    pub range: &'static str,
}

#[derive(Serialize)]
pub struct EntryView {
    pub eta: SignMap,
    pub data: Vec<DatumView>,
}

#[derive(Serialize)]
pub struct PacketView {
    pub group: String,
    pub parameter: String,
    pub epsilon_psi: &'static str,
    pub regular: bool,
    pub base_group: String,
    pub base_parameter: Vec<String>,
    pub component_group: ComponentGroupView,
    pub s_psi: Vec<String>,
    pub total: usize,
    pub vanished: Vec<Vec<u32>>,
    pub entries: Vec<EntryView>,
}

pub fn packet(psi: &ArthurParameter, t: &PacketTable) -> PacketView {
    let cg = &t.component_group;
    let unip = ComponentGroup::from_parts(&[], &t.unipotent).expect("fits in the full group");
    PacketView {
        group: t.group.to_string(),
        parameter: psi.to_string(),
        epsilon_psi: t.epsilon_psi.tag(),
        regular: t.regular,
        base_group: t.base_group.qs_label(),
        base_parameter: t.base_parameter.iter().map(|u| u.summand().to_string()).collect(),
        component_group: cg.into(),
        s_psi: element_names(cg, t.s_psi),
        total: t.total(),
        vanished: t.vanished.clone(),
        entries: t
            .entries
            .iter()
            .map(|e| EntryView {
                eta: char_map(cg, e.eta),
                data: e
                    .data
                    .iter()
                    .map(|d| DatumView {
                        i_vector: d.index.clone(),
                        levi: d.levi.to_string(),
                        block_characters: d.block_characters.clone(),
                        sign: d.sign.iter().map(|s| s.tag()).collect(),
                        base_form: d.base.form.to_string(),
                        base_eta: char_map(&unip, d.base.eta),
                        degree: d.degree,
                        range: d.range.tag(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct CompGroupView {
    pub group: String,
    pub parameter: String,
    pub presentation: ComponentGroupView,
    pub s_psi: Vec<String>,
    pub characters: Vec<SignMap>,
}

pub fn compgroup(psi: &ArthurParameter, cg: &ComponentGroup) -> CompGroupView {
    CompGroupView {
        group: psi.group.to_string(),
        parameter: psi.to_string(),
        presentation: cg.into(),
        s_psi: element_names(cg, cg.s_psi()),
        characters: cg.characters().into_iter().map(|c| char_map(cg, c)).collect(),
    }
}

#[derive(Serialize)]
pub struct DecomposeView {
    pub group: String,
    pub parameter: String,
    pub good_parity: bool,
    pub regular: bool,
    pub mp: Vec<String>,
    pub mp_rho: Vec<String>,
    pub bp_u: Vec<String>,
    pub bp_disc: Vec<String>,
    pub epsilon_psi: Option<&'static str>,
    pub base_group: Option<String>,
    pub infinitesimal_character: Vec<Complex>,
}

pub fn decompose(psi: &ArthurParameter, d: &ParityDecomposition) -> DecomposeView {
    let twist = epsilon_twist(d).ok();
    let strings = |v: Vec<arthur_core::Summand>| v.iter().map(|s| s.to_string()).collect();
    DecomposeView {
        group: psi.group.to_string(),
        parameter: psi.to_string(),
        good_parity: d.is_good_parity(),
        regular: is_regular(d),
        mp: strings(d.mp.clone()),
        mp_rho: strings(d.mp_rho.clone()),
        bp_u: strings(d.bp_u.iter().map(|u| u.summand()).collect()),
        bp_disc: strings(d.bp_disc.iter().map(|b| b.summand()).collect()),
        epsilon_psi: twist.map(|t| t.0.tag()),
        base_group: twist.map(|t| t.1.qs_label()),
        infinitesimal_character: infinitesimal_character(psi).iter().map(Complex::from).collect(),
    }
}

#[derive(Serialize)]
pub struct EndoLeviView {
    pub case: String,
    pub h1: String,
    pub h2: String,
    pub h1_prime: String,
    pub l_star: String,
    pub epsilon_u: i64,
    pub twist: [&'static str; 2],
}

#[derive(Serialize)]
pub struct DatumEndoView {
    pub h1: String,
    pub h2: String,
    pub x_d: i8,
    pub sp_sgn_twist: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_levi: Option<Vec<EndoLeviView>>,
}

#[derive(Serialize)]
pub struct EndoscopyView {
    pub group: String,
    pub quasi_split: String,
    pub c: Option<u32>,
    pub data: Vec<DatumEndoView>,
}

/// Orderings of a datum that put U_c in either factor, with their case labels.
fn levi_cases(family: Family, d: &EndoscopicDatum) -> Vec<(LeviCase, EndoscopicDatum)> {
    let case = match family {
        Family::Symplectic => None,
        Family::OddOrthogonal => Some(LeviCase::B),
        _ => Some(LeviCase::CD),
    };
    match case {
        None => vec![(LeviCase::A1, *d), (LeviCase::A2, d.swapped())],
        Some(c) if d.h1 == d.h2 => vec![(c, *d)],
        Some(c) => vec![(c, *d), (c, d.swapped())],
    }
}

/// ε_U in terms of (rank of the symplectic or first factor, rank of the other).
fn epsilon_u_ranks(case: LeviCase, d: &EndoscopicDatum) -> i64 {
    match case {
        LeviCase::A2 => epsilon_u_differential(case, d.h2.rank, d.h1.rank),
        _ => epsilon_u_differential(case, d.h1.rank, d.h2.rank),
    }
}

pub fn endoscopy(g: &GroupDescriptor, data: &[EndoscopicDatum], c: Option<u32>) -> Result<EndoscopyView> {
    let family = g.family;
    let mut out = Vec::new();
    for d in data {
        let c_levi = match c {
            None => None,
            Some(c) => {
                let mut rows = Vec::new();
                for (case, dd) in levi_cases(family, d) {
                    let Ok(l) = c_levi_of_endoscopic(case, &dd, c) else { continue };
                    let (t1, t2) = twist_table(family, dd.shape(), c)?;
                    rows.push(EndoLeviView {
                        case: format!("{case:?}"),
                        h1: dd.h1.qs_label(),
                        h2: dd.h2.qs_label(),
                        h1_prime: l.h1_prime.qs_label(),
                        l_star: l.l_star.to_string(),
                        epsilon_u: epsilon_u_ranks(case, &dd),
                        twist: [t1.tag(), t2.tag()],
                    });
                }
                Some(rows)
            }
        };
        out.push(DatumEndoView {
            h1: d.h1.qs_label(),
            h2: d.h2.qs_label(),
            x_d: d.x_d.to_i8(),
            sp_sgn_twist: d.sp_sgn_twist,
            c_levi,
        });
    }
    Ok(EndoscopyView { group: g.to_string(), quasi_split: g.quasi_split_form().qs_label(), c, data: out })
}

#[derive(Serialize)]
pub struct RepView {
    pub index: u32,
    pub levi: String,
    pub degree: i64,
}

#[derive(Serialize)]
pub struct FormCount {
    pub form: String,
    pub count: u64,
}

#[derive(Serialize)]
pub struct LeviView {
    pub group: String,
    pub c: u32,
    pub representatives: Vec<RepView>,
    pub distinguished_index: u32,
    pub rho_shift: Vec<String>,
    pub xi_u: i64,
    pub superpacket: Vec<FormCount>,
}

pub fn levi(g: &GroupDescriptor, c: u32) -> Result<LeviView> {
    let case = RhoCase::of_family(g.family)
        .ok_or_else(|| arthur_core::Error::Unsupported("c-Levi subgroups of unitary groups".into()))?;
    let reps = c_levi_representatives(g, c)?;
    Ok(LeviView {
        group: g.to_string(),
        c,
        representatives: reps
            .iter()
            .map(|r| RepView { index: r.index, levi: r.levi.to_string(), degree: r.degree })
            .collect(),
        distinguished_index: distinguished_index(c, g.rank),
        rho_shift: rho_v_closed(case, g.rank as usize, c as usize)?.iter().map(fmt_rat_frac).collect(),
        xi_u: xi_u_differential(case, g.rank, c),
        superpacket: superpacket_distribution(g)?
            .into_iter()
            .map(|(f, n)| FormCount { form: f.to_string(), count: n })
            .collect(),
    })
}

#[derive(Serialize)]
pub struct CheckView {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub within_budget: bool,
    pub first_failures: Vec<String>,
}

#[derive(Serialize)]
pub struct CheckSuiteView {
    pub seed: u64,
    pub max_rank: Option<u32>,
    pub samples: usize,
    pub passed: bool,
    pub checks: Vec<CheckView>,
}

pub fn checks(seed: u64, max_rank: Option<u32>, samples: usize, outcomes: &[CheckOutcome]) -> CheckSuiteView {
    CheckSuiteView {
        seed,
        max_rank,
        samples,
        passed: outcomes.iter().all(CheckOutcome::passed),
        checks: outcomes
            .iter()
            .map(|o| CheckView {
                id: o.id,
                name: o.name,
                passed: o.passed(),
                cases: o.cases,
                failures: o.failure_count,
                within_budget: o.within_budget(),
                first_failures: o.failures.clone(),
            })
            .collect(),
    }
}
