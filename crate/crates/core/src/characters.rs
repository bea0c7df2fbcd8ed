//! Sign characters of cohomological induction: S_i, the torsion of the split
//! part of a fundamental Cartan, and the label maps between L and G.

use std::collections::BTreeSet;

use crate::endoscopy::LeviCase;
use crate::error::{Error, Result};
use crate::groups::Family;
use crate::number::{Rat, Sign, SignCharacter};
use crate::rootdata::{rho_v_closed, RhoCase, RootSystem};

fn tri(c: i64) -> i64 {
    c * (c - 1) / 2
}

/// S_i = sgn^{i + c(c-1)/2 + (n-c)c}.
pub fn s_character(i: u32, c: u32, n: u32) -> SignCharacter {
    let (i, c, n) = (i as i64, c as i64, n as i64);
    SignCharacter::pow(i + tri(c) + (n - c) * c)
}

/// Closed form of S_i(s_d) with s_d = (-1)^{c+1}, as a product of two signs.
pub fn s_eval_at_sd(i: u32, c: u32, n: u32) -> Sign {
    let (i, c, n) = (i as i64, c as i64, n as i64);
    let second = if (n - c) % 2 == 0 { tri(c) * (c + 1) } else { c * (c + 1) / 2 * (c + 1) };
    Sign::pow(i * (c - i)) * Sign::pow(second)
}

/// s_d = (-1)^{c+1}.
pub fn s_d(c: u32) -> Sign {
    Sign::pow(c as i64 + 1)
}

/// Exponent r of the differential of ε_U on U_c for the four endoscopic shapes.
pub fn epsilon_u_differential(case: LeviCase, a: u32, b: u32) -> i64 {
    match case {
        LeviCase::A1 | LeviCase::B | LeviCase::CD => b as i64,
        LeviCase::A2 => a as i64 + 1,
    }
}

/// Exponent r of the differential of ξ_u on U_c, an integer within 1/2 of ρ_V.
pub fn xi_u_differential(case: RhoCase, n: u32, c: u32) -> i64 {
    let (n, c) = (n as i64, c as i64);
    match case {
        RhoCase::A => n - (c - 1).div_euclid(2),
        RhoCase::B => n - c.div_euclid(2),
        RhoCase::CD => n - 1 - (c - 1).div_euclid(2),
    }
}

/// Differential of the character attached to a block V(0,t)⊠R[a]: floor(t/2).
pub fn xi_block_differential(_i: u32, _a: u32, t: u32) -> i64 {
    (t / 2) as i64
}

/// Shape of a fundamental Cartan of L = U_c x G': U(1)^{r1} x (C^x)^{m1} in the
/// unitary factor and U(1)^{r2} x (C^x)^{m2} x (R^x)^{s2} in the classical one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CartanShape {
    pub r1: u32,
    pub m1: u32,
    pub r2: u32,
    pub m2: u32,
    pub s2: u32,
}

impl CartanShape {
    pub fn new(r1: u32, m1: u32, r2: u32, m2: u32, s2: u32) -> Self {
        CartanShape { r1, m1, r2, m2, s2 }
    }

    pub fn c(&self) -> u32 {
        self.r1 + 2 * self.m1
    }

    pub fn rank(&self) -> u32 {
        self.c() + self.r2 + 2 * self.m2 + self.s2
    }

    /// σ(e_k) = sign * e_target, coordinate by coordinate.
    fn sigma(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        let push_block = |circles: u32, pairs: u32, out: &mut Vec<(usize, i64)>| {
            for _ in 0..circles {
                let k = out.len();
                out.push((k, -1));
            }
            for _ in 0..pairs {
                let k = out.len();
                out.push((k + 1, -1));
                out.push((k, -1));
            }
        };
        push_block(self.r1, self.m1, &mut out);
        push_block(self.r2, self.m2, &mut out);
        for _ in 0..self.s2 {
            let k = out.len();
            out.push((k, 1));
        }
        out
    }
}

const MAX_TORSION_RANK: u32 = 12;

/// Sign on each R^x factor of the character γ_n γ*_{n_L}, computed from the roots:
/// sum (α + σα)/2 over one root of each complex pair {α, σα} lying in n but not
/// in L, and read off the parity of each split coordinate.
pub fn torsion_bruteforce(case: RhoCase, shape: CartanShape) -> Result<Vec<Sign>> {
    let n = shape.rank() as usize;
    if n == 0 || shape.rank() > MAX_TORSION_RANK {
        return Err(Error::Shape(format!("total rank {n} outside 1..={MAX_TORSION_RANK}")));
    }
    let c = shape.c() as usize;
    let sigma = shape.sigma();
    let apply = |v: &[i64]| {
        let mut out = vec![0; n];
        for (k, (tgt, sg)) in sigma.iter().enumerate() {
            out[*tgt] += sg * v[k];
        }
        out
    };
    let in_levi = |v: &[i64]| {
        let head = v[..c].iter().any(|x| *x != 0);
        let tail = v[c..].iter().any(|x| *x != 0);
        match (head, tail) {
            (true, true) => false,
            (true, false) => v[..c].iter().sum::<i64>() == 0,
            _ => true,
        }
    };
    let weight = |v: &[i64]| -> i128 { v.iter().enumerate().map(|(k, x)| *x as i128 * 16i128.pow(k as u32)).sum() };

    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut acc = vec![0i64; n];
    for alpha in RootSystem::new(case.root_family(), n).roots() {
        if in_levi(&alpha) {
            continue;
        }
        let s = apply(&alpha);
        let neg: Vec<i64> = alpha.iter().map(|x| -x).collect();
        if s == neg {
            continue;
        }
        if s == alpha {
            return Err(Error::Shape("real root outside the Levi".into()));
        }
        let doubled: Vec<i64> = alpha.iter().zip(&s).map(|(x, y)| x + y).collect();
        if weight(&doubled) <= 0 || seen.contains(&s) {
            continue;
        }
        seen.insert(alpha.clone());
        for (a, d) in acc.iter_mut().zip(&doubled) {
            *a += d;
        }
    }
    let split_start = n - shape.s2 as usize;
    acc[split_start..]
        .iter()
        .map(|d| {
            if d % 2 != 0 {
                return Err(Error::Shape("half-integral weight on a split coordinate".into()));
            }
            Ok(Sign::pow(d / 2))
        })
        .collect()
}

/// sgn^c on each of the s2 split factors.
pub fn torsion_closed_form(c: u32, s2: u32) -> Vec<Sign> {
    vec![Sign::pow(c as i64); s2 as usize]
}

/// Standard-module data of a representation of L = U_c x G' (or of G when c = 0):
/// discrete parameters per factor, continuous parameters and one sign per R^x factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardLabel {
    pub shape: CartanShape,
    pub unitary_params: Vec<Rat>,
    pub classical_params: Vec<Rat>,
    pub continuous_params: Vec<Rat>,
    pub split_flags: Vec<Sign>,
}

impl StandardLabel {
    pub fn new(
        shape: CartanShape,
        unitary_params: Vec<Rat>,
        classical_params: Vec<Rat>,
        continuous_params: Vec<Rat>,
        split_flags: Vec<Sign>,
    ) -> Result<Self> {
        let ok = unitary_params.len() == shape.c() as usize
            && classical_params.len() == (shape.r2 + 2 * shape.m2) as usize
            && continuous_params.len() == shape.s2 as usize
            && split_flags.len() == shape.s2 as usize;
        if !ok {
            return Err(Error::Shape(format!("label lengths do not fit {shape:?}")));
        }
        Ok(StandardLabel { shape, unitary_params, classical_params, continuous_params, split_flags })
    }

    fn flipped(&self, by: SignCharacter) -> StandardLabel {
        let mut out = self.clone();
        for f in out.split_flags.iter_mut() {
            *f = by.eval(Sign::Minus) * *f;
        }
        out
    }
}

/// X_2 ↦ X_2 ⊗ ε_2: all split flags flip when c is odd.
pub fn epsilon2_label(x2: &StandardLabel, c: u32) -> StandardLabel {
    x2.flipped(SignCharacter::pow(c as i64))
}

/// X_1 ↦ X_1 ⊗ ε̃_1: flips only for an orthogonal H_1 and odd c.
pub fn epsilon_tilde1_label(x1: &StandardLabel, h1: Family, c: u32) -> StandardLabel {
    if h1.is_orthogonal() {
        x1.flipped(SignCharacter::pow(c as i64))
    } else {
        x1.clone()
    }
}

/// Label of the induced module on G: unitary parameters move by ρ_V, the split
/// flags pick up sgn^c, and the two Cartan factors merge.
pub fn induce_label(label: &StandardLabel, case: RhoCase, n: u32, c: u32) -> Result<StandardLabel> {
    if label.shape.c() != c || label.shape.rank() != n {
        return Err(Error::Shape(format!("label of rank {} with c = {} used for n = {n}, c = {c}", label.shape.rank(), label.shape.c())));
    }
    let rho = rho_v_closed(case, n as usize, c as usize)?;
    let mut classical: Vec<Rat> = label.unitary_params.iter().zip(&rho).map(|(x, r)| x + r).collect();
    classical.extend(label.classical_params.iter().copied());
    let s = label.shape;
    let shape = CartanShape::new(0, 0, s.r1 + s.r2, s.m1 + s.m2, s.s2);
    let flags = torsion_closed_form(c, s.s2).iter().zip(&label.split_flags).map(|(t, f)| *t * *f).collect();
    StandardLabel::new(shape, vec![], classical, label.continuous_params.clone(), flags)
}
