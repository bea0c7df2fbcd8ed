//! Worked examples, one block per module.

use arthur_core::compgroup::component_group;
use arthur_core::dsl::{parse_group, parse_param};
use arthur_core::groups::{derive_even_so_type, kottwitz_sign, q_invariant};
use arthur_core::levi::{c_levi_representatives, distinguished_index, inner_form_class, superpacket_distribution, t_star};
use arthur_core::number::{int, rat};
use arthur_core::packets::{build_packet, index_set, multi_sign, multi_sign_alt, vanishing_filter};
use arthur_core::params::{
    decompose, dominance_gap_ok, epsilon_twist, good_parity, infinitesimal_character_of, is_regular_blocks,
    langlands_parameter,
};
use arthur_core::rootdata::{dim_complex, positive_roots, rho, rho_v_closed};
use arthur_core::*;

fn so(p: u32, q: u32) -> GroupDescriptor {
    GroupDescriptor::so(p, q).unwrap()
}

fn z() -> GaussRat {
    GaussRat::zero()
}

fn re(v: &[i64]) -> Vec<GaussRat> {
    v.iter().map(|x| GaussRat::real(int(*x))).collect()
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

#[test]
fn root_data() {
    assert_eq!(positive_roots(RootFamily::C, 2), vec![vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]]);
    assert_eq!(positive_roots(RootFamily::B, 1), vec![vec![1]]);
    assert_eq!(positive_roots(RootFamily::D, 2), vec![vec![1, -1], vec![1, 1]]);
    assert_eq!(rho(RootFamily::C, 3), vec![int(3), int(2), int(1)]);
    assert_eq!(rho(RootFamily::B, 2), vec![rat(3, 2), rat(1, 2)]);
    assert_eq!(rho(RootFamily::D, 3), vec![int(2), int(1), int(0)]);
    assert_eq!(rho_v_closed(RhoCase::A, 4, 2).unwrap(), vec![rat(7, 2), rat(7, 2), int(0), int(0)]);
    assert_eq!(rho_v_closed(RhoCase::B, 2, 1).unwrap(), vec![rat(3, 2), int(0)]);
    assert_eq!(rho_v_closed(RhoCase::A, 3, 0).unwrap(), vec![int(0); 3]);
    assert_eq!(dim_complex(&GroupDescriptor::sp(3)), 21);
    assert_eq!(dim_complex(&so(3, 2)), 10);
    assert_eq!(dim_complex(&GroupDescriptor::u(1, 1)), 4);
}

#[test]
fn group_invariants() {
    assert_eq!(GroupDescriptor::sp(3).standard_rep_dim().unwrap(), 7);
    assert_eq!(so(3, 2).standard_rep_dim().unwrap(), 4);
    assert_eq!(so(4, 4).standard_rep_dim().unwrap(), 8);
    assert_eq!(so(3, 2).good_parity_class().unwrap(), 1);
    assert_eq!(GroupDescriptor::sp(2).good_parity_class().unwrap(), 0);
    assert_eq!(so(2, 2).good_parity_class().unwrap(), 0);
    assert!(GroupDescriptor::u(1, 1).standard_rep_dim().is_err());

    assert_eq!(q_invariant(&GroupDescriptor::u(2, 1)), 2);
    assert_eq!(q_invariant(&GroupDescriptor::u(3, 0)), 0);
    assert_eq!(q_invariant(&GroupDescriptor::sp(1)), 1);
    assert_eq!(q_invariant(&so(3, 0)), 0);
    assert_eq!(q_invariant(&so(2, 1)), 1);

    assert_eq!(kottwitz_sign(&so(2, 1)), Sign::Plus);
    assert_eq!(kottwitz_sign(&so(3, 0)), Sign::Minus);
    assert_eq!(kottwitz_sign(&GroupDescriptor::u(2, 0)), Sign::Minus);

    assert_eq!(derive_even_so_type(3, 3).unwrap(), SplitType::D);
    assert_eq!(derive_even_so_type(2, 4).unwrap(), SplitType::Qd);
    assert_eq!(derive_even_so_type(4, 0).unwrap(), SplitType::D);
    assert!(derive_even_so_type(3, 2).is_err());
}

#[test]
fn validation() {
    let sp4 = GroupDescriptor::sp(2);
    assert!(parse_param("V(0,4)xR[1] + V(0,2)xR[1] + W(0,0)xR[1]", &sp4).is_ok());
    let short = parse_param("V(0,4)xR[1] + V(0,2)xR[1]", &sp4);
    assert!(matches!(short, Err(Error::Invalid(Violation::Dimension { found: 4, expected: 5 }))));
    // W(0,0)⊠R[2] is of good parity for SO(3,2); R[1] is the bad one.
    let r = parse_param("W(0,0)xR[1] + V(0,3)xR[1] + W(0,0)xR[2]", &so(3, 2));
    assert!(matches!(r, Err(Error::Invalid(Violation::OddBadParity { .. }))), "{r:?}");
    let r = parse_param("W(0,0)xR[2] + W(0,1)xR[2]", &so(3, 2));
    assert!(r.is_ok());
    let r = parse_param("V(1,2)xR[1] + W(0,0)xR[1]", &GroupDescriptor::sp(1));
    assert!(matches!(r, Err(Error::Invalid(Violation::NotSelfDual(_)))));
    let r = parse_param("V(0,2)xR[1] + W(0,0)xR[1]", &GroupDescriptor::sp(1));
    assert!(matches!(r, Err(Error::Invalid(Violation::Determinant { .. }))));
}

#[test]
fn parity_and_decomposition() {
    let sp = GroupDescriptor::sp(4);
    assert!(good_parity(&Summand::v(z(), 9, 2), &sp).unwrap());
    assert!(!good_parity(&Summand::w(z(), 1, 2), &sp).unwrap());
    assert!(good_parity(&Summand::w(z(), 0, 1), &sp).unwrap());

    let psi = parse_param("V(0,3)xR[2] + W(0,0)xR[2] + W(0,0)xR[2] + W(0,0)xR[1]", &sp).unwrap();
    let d = decompose(&psi).unwrap();
    assert_eq!(d.mp, vec![Summand::w(z(), 0, 2); 2]);
    assert_eq!(d.mp_rho, vec![Summand::w(z(), 0, 2)]);
    assert_eq!(d.bp_disc, vec![Block::new(3, 2)]);
    assert_eq!(d.bp_u, vec![UnipotentSummand { eps: 0, a: 1 }]);

    let psi = parse_param("V(1i,2)xR[1] + V(-1i,2)xR[1] + V(0,2)xR[1] + W(0,1)xR[1]", &GroupDescriptor::sp(3)).unwrap();
    let d = decompose(&psi).unwrap();
    assert_eq!(d.mp.len(), 2);
    assert_eq!(d.mp_rho, vec![Summand::v(GaussRat::imag(int(1)), 2, 1)]);
    assert!(!d.is_good_parity());
}

#[test]
fn langlands_and_infinitesimal_character() {
    let lp = |s: Summand| sorted(langlands_parameter(&ArthurParameter::new(GroupDescriptor::sp(0), vec![s])));
    assert_eq!(lp(Summand::v(z(), 3, 2)), sorted(vec![Summand::v(GaussRat::real(int(1)), 3, 1), Summand::v(GaussRat::real(int(-1)), 3, 1)]));
    // R[3] moves a character of R^x by |w|^{±1} and |w|^0.
    let w = |s| Summand::w(GaussRat::real(int(s)), 1, 1);
    assert_eq!(lp(Summand::w(z(), 1, 3)), sorted(vec![w(1), w(0), w(-1)]));
    assert_eq!(lp(Summand::w(z(), 0, 1)), vec![Summand::w(z(), 0, 1)]);

    assert_eq!(sorted(infinitesimal_character_of(&[Summand::v(z(), 3, 2)])), sorted(re(&[2, 1, -1, -2])));
    assert_eq!(sorted(infinitesimal_character_of(&[Summand::w(z(), 1, 3)])), sorted(re(&[1, 0, -1])));
    assert_eq!(infinitesimal_character_of(&[Summand::w(z(), 0, 1)]), re(&[0]));
}

#[test]
fn regularity_and_gap() {
    let u1 = [UnipotentSummand { eps: 0, a: 1 }];
    assert!(is_regular_blocks(&[Block::new(9, 2), Block::new(6, 1)], &u1));
    assert!(!is_regular_blocks(&[Block::new(5, 2), Block::new(4, 1)], &[]));
    assert!(is_regular_blocks(&[Block::new(1, 1)], &[]));
    assert!(!is_regular_blocks(&[Block::new(1, 2)], &[]));

    let tail = [Summand::v(z(), 6, 1), Summand::w(z(), 0, 1)];
    assert!(dominance_gap_ok(Block::new(9, 2), &tail));
    assert!(!dominance_gap_ok(Block::new(5, 2), &[Summand::v(z(), 4, 1)]));
    assert!(dominance_gap_ok(Block::new(2, 2), &[]));
}

#[test]
fn epsilon_twists() {
    let sp = GroupDescriptor::sp(4);
    let d = decompose(&parse_param("V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1] + W(0,0)xR[1] + W(0,0)xR[1]", &sp).unwrap()).unwrap();
    assert_eq!(epsilon_twist(&d).unwrap(), (SignCharacter::Sgn, GroupDescriptor::sp(1)));
    let d = decompose(&parse_param("V(0,9)xR[2] + V(0,7)xR[2] + W(0,0)xR[1]", &sp).unwrap()).unwrap();
    assert_eq!(epsilon_twist(&d).unwrap().0, SignCharacter::Triv);
    let d = decompose(&parse_param("V(0,3)xR[1] + V(0,1)xR[1]", &so(3, 2)).unwrap()).unwrap();
    assert_eq!(epsilon_twist(&d).unwrap().0, SignCharacter::Triv);
}

#[test]
fn component_groups() {
    let g = GroupDescriptor::sp(5);
    let d = decompose(&parse_param("V(0,9)xR[2] + V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]", &g).unwrap()).unwrap();
    let cg = component_group(&d).unwrap();
    assert_eq!(cg.names(), vec!["z1", "z2", "z3", "u1"]);
    assert_eq!(cg.relations, vec![(0, 1)]);
    assert_eq!(cg.order(), 8);
    assert!(cg.characters().iter().all(|c| c.value(0) == c.value(1)));
    assert!(cg.split_first_block().is_err());
    assert_eq!(cg.reduce(cg.s_psi()).bits, 0);

    let d = decompose(&parse_param("V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]", &GroupDescriptor::sp(3)).unwrap()).unwrap();
    let cg = component_group(&d).unwrap();
    assert_eq!(cg.s_psi().bits, 0b001);
    let rest = cg.split_first_block().unwrap();
    assert_eq!(rest.names(), vec!["z1", "u1"]);
    assert_eq!(rest.order() * 2, cg.order());

    let empty = ComponentGroup::from_parts(&[], &[]).unwrap();
    assert_eq!(empty.characters(), vec![CgCharacter::default()]);
}

#[test]
fn inner_forms_and_levis() {
    assert_eq!(t_star(2), vec![Sign::Plus, Sign::Minus]);
    assert_eq!(t_star(3), vec![Sign::Minus, Sign::Plus, Sign::Minus]);
    let so5 = so(3, 2);
    assert_eq!(inner_form_class(&so5, &[Sign::Plus, Sign::Plus]).unwrap(), so(3, 2));
    assert_eq!(inner_form_class(&so5, &t_star(2)).unwrap(), so(5, 0));
    assert_eq!(inner_form_class(&GroupDescriptor::sp(2), &[Sign::Minus, Sign::Plus]).unwrap(), GroupDescriptor::sp(2));
    let d = superpacket_distribution(&GroupDescriptor::sp(2)).unwrap();
    assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(GroupDescriptor::sp(2), 4)]);

    let names = |g: &GroupDescriptor, c| -> Vec<String> {
        c_levi_representatives(g, c).unwrap().iter().map(|r| r.levi.to_string()).collect()
    };
    assert_eq!(names(&GroupDescriptor::sp(3), 2), vec!["U(0,2) x Sp(2)", "U(1,1) x Sp(2)", "U(2,0) x Sp(2)"]);
    assert_eq!(names(&so(2, 1), 1), vec!["U(1,0) x SO(0,1)"]);
    assert_eq!(distinguished_index(3, 6), 2);
}

#[test]
fn packet_examples() {
    let sp = GroupDescriptor::sp(3);
    let blocks = [Block::new(9, 2), Block::new(6, 1)];
    assert_eq!(index_set(&blocks, &sp).unwrap().len(), 6);
    let idx: Vec<Vec<u32>> = index_set(&[Block::new(3, 1), Block::new(1, 1)], &so(3, 2)).unwrap().into_iter().map(|x| x.0).collect();
    assert_eq!(idx, vec![vec![0, 1], vec![1, 0]]);
    assert_eq!(index_set(&[], &sp).unwrap().len(), 1);

    let rep = [Block::new(9, 2), Block::new(9, 2)];
    assert!(vanishing_filter(&[0, 2], &rep));
    assert!(!vanishing_filter(&[0, 1], &rep));
    assert!(vanishing_filter(&[0, 1], &blocks));

    assert_eq!(multi_sign(&[1, 0], &blocks, 3), vec![SignCharacter::Triv, SignCharacter::Triv]);
    assert_eq!(multi_sign_alt(&[0], &[Block::new(4, 1)]), vec![SignCharacter::Sgn]);
    assert_eq!(multi_sign_alt(&[1], &[Block::new(4, 1)]), vec![SignCharacter::Triv]);

    let psi = parse_param("V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]", &sp).unwrap();
    let t = build_packet(&psi).unwrap();
    assert_eq!(t.total(), 6);
    assert!(t.data().all(|(_, d)| d.degree >= 0 && d.range == RangeFlag::Good));

    let psi = parse_param("W(0,0)xR[1] + W(0,1)xR[1] + W(0,1)xR[1]", &GroupDescriptor::sp(1)).unwrap();
    let t = build_packet(&psi).unwrap();
    assert_eq!(t.total(), t.component_group.order() as usize);
    assert!(t.entries.iter().all(|e| e.data.len() == 1 && e.data[0].index.is_empty()));
}

#[test]
fn parsing() {
    assert_eq!(parse_group("SO(2, 2)").unwrap().split_type(), Some(SplitType::D));
    let psi = parse_param("V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]", &GroupDescriptor::sp(3)).unwrap();
    assert_eq!(psi.dim(), 7);
    assert!(parse_param("V(0,3)xR[1] + V(0,1)xR[1]", &so(3, 2)).is_ok());
    assert!(matches!(parse_param("W(0,0)xR[2]", &GroupDescriptor::sp(1)), Err(Error::Invalid(_))));
}
