//! Invariants over exhaustive small ranges and proptest-generated inputs.

use proptest::prelude::*;

use arthur_core::characters::{
    epsilon2_label, epsilon_tilde1_label, epsilon_u_differential, induce_label, s_character, s_eval_at_sd,
    xi_u_differential, CartanShape, StandardLabel,
};
use arthur_core::compgroup::component_group;
use arthur_core::dsl::{parse_param, parse_summands, render_param};
use arthur_core::endoscopy::{c_levi_of_endoscopic, elliptic_endoscopic_data, transfer_sign};
use arthur_core::groups::{kottwitz_sign, q_invariant};
use arthur_core::levi::{c_levi_representatives, superpacket_distribution};
use arthur_core::number::{int, rat};
use arthur_core::oracle::q_from_dimensions;
use arthur_core::packets::{build_packet, fold_packet, stable_sum};
use arthur_core::params::{decompose, is_regular};
use arthur_core::rootdata::rho_v_closed;
use arthur_core::sample::{ParamShape, Sampler};
use arthur_core::*;

fn forms(n: u32) -> Vec<GroupDescriptor> {
    let mut out = vec![GroupDescriptor::sp(n)];
    out.extend((0..=2 * n + 1).map(|p| GroupDescriptor::so(p, 2 * n + 1 - p).unwrap()));
    out.extend((0..=2 * n).map(|p| GroupDescriptor::so(p, 2 * n - p).unwrap()));
    out.extend((0..=n).map(|p| GroupDescriptor::u(p, n - p)));
    out
}

#[test]
fn q_invariant_matches_dimension_count() {
    for n in 0..=10 {
        for g in forms(n) {
            assert_eq!(q_invariant(&g), q_from_dimensions(&g), "{g}");
            let same = q_invariant(&g) % 2 == q_invariant(&g.quasi_split_form()) % 2;
            assert_eq!(kottwitz_sign(&g) == Sign::Plus, same, "{g}");
        }
    }
}

#[test]
fn superpacket_totals() {
    for n in 1..=8u32 {
        for g in forms(n) {
            let total: u64 = superpacket_distribution(&g).unwrap().values().sum();
            let len = if g.has_discrete_series() { n } else { n - 1 };
            assert_eq!(total, 1 << len, "{g}");
        }
    }
}

#[test]
fn c_levi_degrees_are_nonnegative() {
    for n in 1..=6u32 {
        for g in forms(n).into_iter().filter(|g| g.family != Family::Unitary) {
            for c in 0..=n {
                for r in c_levi_representatives(&g, c).unwrap() {
                    assert!(r.degree >= 0);
                    assert_eq!(r.levi.rank(), n);
                }
            }
        }
    }
}

#[test]
fn epsilon_u_is_a_rho_difference() {
    for n in 1..=8u32 {
        for (family, case) in [(Family::Symplectic, RhoCase::A), (Family::OddOrthogonal, RhoCase::B), (Family::EvenOrthogonal, RhoCase::CD)] {
            let g = GroupDescriptor::quasi_split(family, n, SplitType::D).unwrap();
            for d in elliptic_endoscopic_data(&g).unwrap() {
                let variants = match family {
                    Family::Symplectic => vec![(LeviCase::A1, d), (LeviCase::A2, d.swapped())],
                    Family::OddOrthogonal => vec![(LeviCase::B, d), (LeviCase::B, d.swapped())],
                    _ => vec![(LeviCase::CD, d), (LeviCase::CD, d.swapped())],
                };
                for (lc, dd) in variants {
                    let h1_case = RhoCase::of_family(dd.h1.family).unwrap();
                    for c in 1..=dd.h1.rank {
                        if c_levi_of_endoscopic(lc, &dd, c).is_err() {
                            continue;
                        }
                        let big = rho_v_closed(case, n as usize, c as usize).unwrap()[0];
                        let small = rho_v_closed(h1_case, dd.h1.rank as usize, c as usize).unwrap()[0];
                        let (sp_or_first, other) = match lc {
                            LeviCase::A2 => (dd.h2.rank, dd.h1.rank),
                            _ => (dd.h1.rank, dd.h2.rank),
                        };
                        let r = epsilon_u_differential(lc, sp_or_first, other);
                        assert_eq!(int(r), big - small, "{lc:?} {dd} c={c}");
                    }
                }
            }
        }
    }
}

#[test]
fn xi_u_is_within_a_half_of_rho() {
    for case in [RhoCase::A, RhoCase::B, RhoCase::CD] {
        for n in 1..=12u32 {
            for c in 1..=n {
                let d = int(xi_u_differential(case, n, c)) - rho_v_closed(case, n as usize, c as usize).unwrap()[0];
                assert!(d == int(0) || d == rat(1, 2), "{case:?} {n} {c}: {d}");
            }
        }
    }
}

#[test]
fn transfer_signs() {
    for n in 0..=10 {
        for c in 0..=n {
            for i in 0..=c {
                assert_eq!(transfer_sign(i, c, n, Sign::Plus), Sign::Plus);
                if i < c {
                    assert_eq!(transfer_sign(i, c, n, Sign::Minus), -transfer_sign(i + 1, c, n, Sign::Minus));
                }
            }
        }
    }
    assert_eq!(s_eval_at_sd(0, 2, 4), Sign::Minus);
    assert_eq!(s_character(0, 2, 3), SignCharacter::Sgn);
}

fn label(shape: CartanShape, flags: Vec<Sign>) -> StandardLabel {
    let c = shape.c() as usize;
    let cl = (shape.r2 + 2 * shape.m2) as usize;
    StandardLabel::new(
        shape,
        (0..c).map(|k| rat(k as i64, 2)).collect(),
        (0..cl).map(|k| int(k as i64)).collect(),
        vec![int(0); shape.s2 as usize],
        flags,
    )
    .unwrap()
}

fn shape_strategy() -> impl Strategy<Value = CartanShape> {
    (0..3u32, 0..2u32, 0..3u32, 0..2u32, 0..3u32).prop_map(|(a, b, c, d, e)| CartanShape::new(a, b, c, d, e))
}

proptest! {
    #[test]
    fn label_twists_are_involutions(shape in shape_strategy(), bits in prop::collection::vec(any::<bool>(), 3), c in 0..6u32) {
        let flags: Vec<Sign> = bits[..shape.s2 as usize].iter().map(|b| Sign::from_parity(*b)).collect();
        let x = label(shape, flags);
        prop_assert_eq!(epsilon2_label(&epsilon2_label(&x, c), c), x.clone());
        for fam in [Family::Symplectic, Family::OddOrthogonal] {
            prop_assert_eq!(epsilon_tilde1_label(&epsilon_tilde1_label(&x, fam, c), fam, c), x.clone());
        }
        if c % 2 == 0 {
            prop_assert_eq!(epsilon2_label(&x, c), x.clone());
        }
    }

    #[test]
    fn induced_label_shifts_by_rho(shape in shape_strategy(), case_ix in 0..3usize) {
        prop_assume!(shape.rank() > 0);
        let case = [RhoCase::A, RhoCase::B, RhoCase::CD][case_ix];
        let x = label(shape, vec![Sign::Plus; shape.s2 as usize]);
        let y = induce_label(&x, case, shape.rank(), shape.c()).unwrap();
        let rho = rho_v_closed(case, shape.rank() as usize, shape.c() as usize).unwrap();
        for (k, u) in x.unitary_params.iter().enumerate() {
            prop_assert_eq!(y.classical_params[k], u + rho[k]);
        }
        let want = if shape.c() % 2 == 0 { Sign::Plus } else { Sign::Minus };
        prop_assert!(y.split_flags.iter().all(|f| *f == want));
    }

    #[test]
    fn scalars_round_trip(re in -50i64..50, red in 1i64..9, im in -50i64..50, imd in 1i64..9) {
        let s = GaussRat::new(rat(re, red), rat(im, imd));
        let w = Summand::w(s, 1, 2);
        let back = parse_summands(&w.to_string()).unwrap();
        prop_assert_eq!(back, vec![w]);
    }

    #[test]
    fn sampled_parameters(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let g = s.group(7);
        let shape = ParamShape { mixed: seed % 3 == 0, regular: seed % 2 == 0, ..Default::default() };
        if let Some(psi) = s.param_retry(&g, shape, 20) {
            prop_assert_eq!(parse_param(&render_param(&psi), &g).unwrap(), psi.clone());
            let d = decompose(&psi).unwrap();
            prop_assert_eq!(d.mp_rho.len() * 2, d.mp.len());
            let cg = component_group(&d).unwrap();
            prop_assert_eq!(cg.characters().len() as u64, cg.order());
            if d.is_good_parity() {
                let table = build_packet(&psi).unwrap();
                if is_regular(&d) {
                    prop_assert_eq!(fold_packet(&psi).unwrap(), table.clone());
                }
                for (datum, sign) in stable_sum(&table, CgElement::default()) {
                    let eta = table.entries.iter().find(|e| e.data.contains(&datum)).unwrap().eta;
                    prop_assert_eq!(sign, eta.eval(table.s_psi));
                }
            } else {
                prop_assert!(build_packet(&psi).is_err());
            }
        }
    }
}
