//! Seeded random groups and Arthur parameters for the property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groups::{Family, GroupDescriptor, SplitType};
use crate::number::{int, rat, GaussRat};
use crate::params::{validate, ArthurParameter, Summand, SummandKind};

/// What kind of parameter to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamShape {
    pub max_blocks: usize,
    pub max_a: u32,
    /// Force at least one pair of identical consecutive blocks.
    pub repeated: bool,
    /// Choose the t's so that the regularity chain holds.
    pub regular: bool,
    /// Allow summands with s ≠ 0 and bad-parity pairs.
    pub mixed: bool,
}

impl Default for ParamShape {
    fn default() -> Self {
        ParamShape { max_blocks: 4, max_a: 3, repeated: false, regular: false, mixed: false }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A form of Sp(2n), SO(2n+1) or SO(2n) with 1 <= n <= max_rank.
    pub fn group(&mut self, max_rank: u32) -> GroupDescriptor {
        let n = self.rng.gen_range(1..=max_rank.max(1));
        match self.rng.gen_range(0..3) {
            0 => GroupDescriptor::sp(n),
            1 => {
                let p = self.rng.gen_range(0..=2 * n + 1);
                GroupDescriptor::so(p, 2 * n + 1 - p).expect("odd signature")
            }
            _ => {
                let p = self.rng.gen_range(0..=2 * n);
                GroupDescriptor::so(p, 2 * n - p).expect("even signature")
            }
        }
    }

    /// A valid parameter for `g`, or None when the draw could not be completed.
    pub fn param(&mut self, g: &GroupDescriptor, shape: ParamShape) -> Option<ArthurParameter> {
        let n = g.rank;
        let class = g.good_parity_class().ok()?;
        let total = g.standard_rep_dim().ok()? as u32;
        let rng = &mut self.rng;

        let mut a_list: Vec<u32> = Vec::new();
        let mut used = 0;
        let r = rng.gen_range(0..=shape.max_blocks);
        for _ in 0..r {
            let a = rng.gen_range(1..=shape.max_a);
            if used + a > n {
                break;
            }
            a_list.push(a);
            used += a;
        }
        let mut dup = None;
        if shape.repeated {
            let a = *a_list.first()?;
            if used + a > n {
                return None;
            }
            a_list.insert(1, a);
            used += a;
            dup = Some(0);
        }

        let mut extra = Vec::new();
        if shape.mixed {
            for _ in 0..rng.gen_range(0..=2) {
                let room = total - 2 * used - extra.iter().map(Summand::dim).sum::<u64>() as u32;
                let pair = random_mp_pair(rng, class);
                if pair.iter().map(Summand::dim).sum::<u64>() as u32 <= room - room % 2 {
                    extra.extend(pair);
                }
            }
        }

        // Unipotent part: W(0,ε)⊠R[a] with a - 1 ≡ class.
        let mut left = total - 2 * used - extra.iter().map(Summand::dim).sum::<u64>() as u32;
        let mut unip: Vec<(u8, u32)> = Vec::new();
        let first = 1 + class;
        while left > 0 {
            let sizes: Vec<u32> = (0..3).map(|k| first + 2 * k).filter(|s| *s <= left).collect();
            let a = *sizes.choose(rng)?;
            unip.push((rng.gen_range(0..2), a));
            left -= a;
        }

        // t's: parity t ≡ a + class + 1.
        let fix = |t: u32, a: u32| if (t + a + class + 1).is_multiple_of(2) { t } else { t + 1 };
        let mut ts = vec![0u32; a_list.len()];
        if shape.regular {
            let mut floor = unip.iter().map(|(_, a)| *a as i64 - 1).max().unwrap_or(0);
            for k in (0..a_list.len()).rev() {
                let a = a_list[k];
                let lo = (floor + a as i64).max(1) as u32;
                let t = fix(lo + rng.gen_range(0..4), a);
                ts[k] = t;
                floor = t as i64 + a as i64 - 1;
            }
        } else {
            for (k, a) in a_list.iter().enumerate() {
                ts[k] = fix(rng.gen_range(1..=12), *a);
            }
            if let Some(d) = dup {
                ts[d + 1] = ts[d];
            }
        }

        let mut summands: Vec<Summand> =
            a_list.iter().zip(&ts).map(|(a, t)| Summand::v(GaussRat::zero(), *t as i64, *a)).collect();
        summands.extend(unip.iter().map(|(e, a)| Summand::w(GaussRat::zero(), *e, *a)));
        summands.extend(extra);

        let want_sgn = match g.family {
            Family::Symplectic => Some(false),
            Family::EvenOrthogonal => Some(g.split_type() == Some(SplitType::Qd)),
            _ => None,
        };
        if let Some(want) = want_sgn {
            let det = summands.iter().map(det_parity).sum::<i64>() % 2 == 1;
            if det != want {
                let k = summands.iter().position(|s| s.s.is_zero() && matches!(s.kind, SummandKind::W { .. }) && s.a % 2 == 1)?;
                if let SummandKind::W { eps } = summands[k].kind {
                    summands[k] = Summand::w(summands[k].s, eps ^ 1, summands[k].a);
                }
            }
        }
        summands.shuffle(rng);
        let psi = ArthurParameter::new(*g, summands);
        validate(&psi).ok()?;
        Some(psi)
    }

    /// Draws until a parameter is found, trying at most `tries` times.
    pub fn param_retry(&mut self, g: &GroupDescriptor, shape: ParamShape, tries: usize) -> Option<ArthurParameter> {
        (0..tries).find_map(|_| self.param(g, shape))
    }
}

fn det_parity(s: &Summand) -> i64 {
    let a = s.a as i64;
    match s.kind {
        SummandKind::W { eps } => eps as i64 * a,
        SummandKind::V { t } => (t + 1) * a,
    }
}

/// A summand with s ≠ 0 and its dual, or a bad-parity summand with s = 0 twice.
fn random_mp_pair(rng: &mut ChaCha8Rng, class: u32) -> Vec<Summand> {
    let a = rng.gen_range(1..=2u32);
    let s = match rng.gen_range(0..4) {
        0 => GaussRat::real(rat(rng.gen_range(1..=5), rng.gen_range(1..=3))),
        1 => GaussRat::imag(rat(rng.gen_range(1..=5), rng.gen_range(1..=3))),
        2 => GaussRat::new(int(rng.gen_range(-2..=2)), rat(rng.gen_range(1..=5), 2)),
        _ => GaussRat::zero(),
    };
    let one = if rng.gen_bool(0.5) {
        Summand::w(s, rng.gen_range(0..2), a)
    } else {
        let t = rng.gen_range(1..=8);
        Summand::v(s, t, a)
    };
    if s.is_zero() {
        let bad = match one.kind {
            SummandKind::W { eps } => Summand::w(s, eps, if class == 0 { 2 } else { 1 }),
            SummandKind::V { t } => {
                let t = if (t as u32 + a + class).is_multiple_of(2) { t } else { t + 1 };
                Summand::v(s, t, a)
            }
        };
        vec![bad, bad]
    } else {
        vec![one, one.dual()]
    }
}
