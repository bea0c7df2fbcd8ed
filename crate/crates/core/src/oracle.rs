//! Independent reference computations used by the checks. Each one recomputes
//! a quantity from first principles (root lists, raw constraint filters,
//! literal tables) without calling the closed forms it is compared against.

use std::collections::BTreeSet;

use crate::endoscopy::FactorKind;
use crate::groups::{Family, GroupDescriptor, SplitType};
use crate::number::{rat, Rat, SignCharacter};
use crate::rootdata::{rho, RhoCase, RootFamily, RootSystem};

/// ρ_G - ρ_L from the positive roots of G, gl(c) and G'.
pub fn rho_shift(case: RhoCase, n: usize, c: usize) -> Vec<Rat> {
    let fam = case.root_family();
    let g = rho(fam, n);
    let mut l = rho(RootFamily::Agl, c);
    l.extend(rho(fam, n - c));
    g.into_iter().zip(l).map(|(a, b)| a - b).collect()
}

/// ρ of gl(c) written out: ((c-1)/2, (c-3)/2, ..., -(c-1)/2).
pub fn rho_gl_literal(c: usize) -> Vec<Rat> {
    (0..c as i64).map(|k| rat(c as i64 - 1 - 2 * k, 2)).collect()
}

fn dim_from_roots(family: RootFamily, rank: usize) -> u64 {
    (RootSystem::new(family, rank).roots().len() + rank) as u64
}

/// (dim, rank) of SO(m, C).
fn so_dim_rank(m: u32) -> (u64, u64) {
    let r = (m / 2) as usize;
    let fam = if m % 2 == 1 { RootFamily::B } else { RootFamily::D };
    (dim_from_roots(fam, r), r as u64)
}

fn gl_dim_rank(m: u32) -> (u64, u64) {
    (dim_from_roots(RootFamily::Agl, m as usize), m as u64)
}

/// q(G) = (dim G - dim K)/2 - c(G), where c(G) is half the split rank of a
/// fundamental Cartan, i.e. (rank G - rank K)/2.
pub fn q_from_dimensions(g: &GroupDescriptor) -> u64 {
    let (p, q) = g.pq();
    let ((dg, rg), (dk, rk)) = match g.family {
        Family::Symplectic => {
            let n = g.rank as usize;
            ((dim_from_roots(RootFamily::C, n), n as u64), gl_dim_rank(g.rank))
        }
        Family::OddOrthogonal | Family::EvenOrthogonal => {
            let (a, ra) = so_dim_rank(p);
            let (b, rb) = so_dim_rank(q);
            (so_dim_rank(p + q), (a + b, ra + rb))
        }
        Family::Unitary => {
            let (a, ra) = gl_dim_rank(p);
            let (b, rb) = gl_dim_rank(q);
            (gl_dim_rank(p + q), (a + b, ra + rb))
        }
    };
    let twice = (dg - dk) - (rg - rk);
    twice / 2
}

/// An endoscopic datum reduced to what the equivalences keep: the factor list,
/// ordered for Sp(2n) and unordered otherwise.
pub type EndoKey = Vec<(FactorKind, u32)>;

fn even_kind(t: SplitType) -> FactorKind {
    match t {
        SplitType::D => FactorKind::SoD,
        SplitType::Qd => FactorKind::SoQd,
    }
}

/// SO^α_{2m} is elliptic-admissible when it is not a split torus (m = 1, d) and
/// the rank 0 group only exists as d.
fn even_factor_ok(m: u32, t: SplitType) -> bool {
    !(m == 0 && t == SplitType::Qd) && !(m == 1 && t == SplitType::D)
}

/// Filters all factor tuples by the constraints and quotients by exchange of
/// the factors where that is an equivalence.
pub fn endoscopic_bruteforce(family: Family, n: u32, alpha: SplitType) -> BTreeSet<EndoKey> {
    let mut out = BTreeSet::new();
    let types = [SplitType::D, SplitType::Qd];
    for a in 0..=n {
        let b = n - a;
        match family {
            Family::Symplectic => {
                for t in types {
                    if even_factor_ok(b, t) {
                        out.insert(vec![(FactorKind::Sp, a), (even_kind(t), b)]);
                    }
                }
            }
            Family::OddOrthogonal => {
                let mut k = vec![(FactorKind::SoOdd, a), (FactorKind::SoOdd, b)];
                k.sort();
                out.insert(k);
            }
            Family::EvenOrthogonal => {
                for beta in types {
                    for gamma in types {
                        if beta.product(gamma) != alpha || !even_factor_ok(a, beta) || !even_factor_ok(b, gamma) {
                            continue;
                        }
                        let mut k = vec![(even_kind(beta), a), (even_kind(gamma), b)];
                        k.sort();
                        out.insert(k);
                    }
                }
            }
            Family::Unitary => {}
        }
    }
    out
}

/// One row of the table of twists: group family, factor kinds, parity of c,
/// and the twists on H'_1 and H_2.
pub type TwistRow = (Family, FactorKind, FactorKind, u32, SignCharacter, SignCharacter);

/// The table as stated, one row per (family, shape, parity of c).
pub fn twist_rows() -> Vec<TwistRow> {
    use FactorKind::*;
    use SignCharacter::*;
    let mut rows = Vec::new();
    for par in 0..2 {
        rows.push((Family::OddOrthogonal, SoOdd, SoOdd, par, Triv, Triv));
        for h1 in [SoD, SoQd] {
            for h2 in [SoD, SoQd] {
                rows.push((Family::EvenOrthogonal, h1, h2, par, Triv, Triv));
            }
        }
    }
    for so in [SoD, SoQd] {
        rows.push((Family::Symplectic, Sp, so, 0, Triv, Triv));
        rows.push((Family::Symplectic, so, Sp, 0, Triv, Triv));
    }
    rows.push((Family::Symplectic, Sp, SoD, 1, Triv, Sgn));
    rows.push((Family::Symplectic, SoD, Sp, 1, Sgn, Sgn));
    rows.push((Family::Symplectic, Sp, SoQd, 1, Triv, Sgn));
    rows.push((Family::Symplectic, SoQd, Sp, 1, Sgn, Sgn));
    rows
}

/// Order of the group generated by `len` involutions subject to g_i = g_j for
/// each relation, from the number of classes of a union-find.
pub fn elementary_order(len: usize, relations: &[(usize, usize)]) -> u64 {
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, j) in relations {
        let (a, b) = (find(&mut parent, *i), find(&mut parent, *j));
        parent[a] = b;
    }
    let classes = (0..len).filter(|k| find(&mut parent, *k) == *k).count();
    1u64 << classes
}
