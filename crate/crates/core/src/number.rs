//! Exact numbers: rationals, Gaussian rationals and signs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};

pub type Rat = Rational64;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Formats as `p` or `p/q` in lowest terms.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Always `p/q`, including integers. Used by the JSON layer.
pub fn fmt_rat_frac(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub const fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn imag(im: Rat) -> Self {
        GaussRat { re: Rat::zero(), im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True when the number lies in the upper half of the ρ ⊕ ρ* split:
    /// positive imaginary part, or real positive when the imaginary part vanishes.
    pub fn is_upper(&self) -> bool {
        self.im.is_positive() || (self.im.is_zero() && self.re.is_positive())
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Add<Rat> for GaussRat {
    type Output = GaussRat;
    fn add(self, o: Rat) -> GaussRat {
        GaussRat::new(self.re + o, self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

/// An element of {+1, -1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// (-1)^k
    pub fn pow(k: i64) -> Sign {
        Sign::from_parity(k.rem_euclid(2) == 1)
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != o.is_minus())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A character of {+1, -1} (equivalently of R^x / R_{>0}): triv or sgn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum SignCharacter {
    #[default]
    Triv,
    Sgn,
}

impl SignCharacter {
    /// sgn^k
    pub fn pow(k: i64) -> SignCharacter {
        if k.rem_euclid(2) == 1 {
            SignCharacter::Sgn
        } else {
            SignCharacter::Triv
        }
    }

    pub fn eval(self, x: Sign) -> Sign {
        match self {
            SignCharacter::Triv => Sign::Plus,
            SignCharacter::Sgn => x,
        }
    }

    pub fn is_sgn(self) -> bool {
        self == SignCharacter::Sgn
    }

    pub fn tag(self) -> &'static str {
        match self {
            SignCharacter::Triv => "triv",
            SignCharacter::Sgn => "sgn",
        }
    }
}

impl Mul for SignCharacter {
    type Output = SignCharacter;
    fn mul(self, o: SignCharacter) -> SignCharacter {
        SignCharacter::pow(self.is_sgn() as i64 + o.is_sgn() as i64)
    }
}

impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}
