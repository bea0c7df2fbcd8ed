//! Text syntax for groups and parameters.
//!
//! ```text
//! group   := 'Sp(' INT ')' | 'SO(' INT ',' INT ')' | 'U(' INT ',' INT ')'
//! param   := term ('+' term)*
//! term    := summand ('x' | '*') 'R[' INT ']'
//! summand := 'V(' s ',' INT ')' | 'W(' s ',' ('0' | '1') ')'
//! s       := RATIONAL ['i'] | RATIONAL ('+' | '-') RATIONAL 'i'
//! ```
//! Whitespace is ignored between tokens.


use crate::error::{Error, Result};
use crate::groups::GroupDescriptor;
use crate::number::{GaussRat, Rat};
use crate::params::{validate, ArthurParameter, Summand};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        for b in lit.bytes() {
            if !self.eat(b) {
                return Err(self.error(format!("expected `{lit}`")));
            }
        }
        Ok(())
    }

    fn error(&mut self, msg: impl Into<String>) -> Error {
        self.skip_ws();
        Error::parse(self.pos, msg)
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(start, "integer out of range"))
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn rational(&mut self) -> Result<Rat> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let num = self.int()?;
        let den = if self.eat(b'/') {
            let at = self.pos;
            let d = self.int()?;
            if d == 0 {
                return Err(Error::parse(at, "zero denominator"));
            }
            d
        } else {
            1
        };
        let r = Rat::new(num, den);
        Ok(if neg { -r } else { r })
    }

    fn scalar(&mut self) -> Result<GaussRat> {
        let first = self.rational()?;
        if self.eat(b'i') {
            return Ok(GaussRat::imag(first));
        }
        match self.peek() {
            Some(b'+') | Some(b'-') => {
                let im = self.rational()?;
                if !self.eat(b'i') {
                    return Err(self.error("expected `i` after the imaginary part"));
                }
                Ok(GaussRat::new(first, im))
            }
            _ => Ok(GaussRat::real(first)),
        }
    }

    fn summand(&mut self) -> Result<Summand> {
        let head = self.peek();
        let at = self.pos;
        let (s, tail) = match head {
            Some(b'V') | Some(b'W') => {
                self.pos += 1;
                self.expect("(")?;
                let s = self.scalar()?;
                self.expect(",")?;
                let tail = self.int()?;
                self.expect(")")?;
                (s, tail)
            }
            _ => return Err(self.error("expected `V(` or `W(`")),
        };
        if !(self.eat(b'x') || self.eat(b'*')) {
            return Err(self.error("expected `x` or `*`"));
        }
        self.expect("R[")?;
        let a = self.small()?;
        self.expect("]")?;
        if head == Some(b'W') {
            if tail > 1 {
                return Err(Error::parse(at, "W(s,ε) needs ε in {0,1}"));
            }
            Ok(Summand::w(s, tail as u8, a))
        } else {
            Ok(Summand::v(s, tail, a))
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }
}

/// Parses `Sp(2n)`, `SO(p,q)` or `U(p,q)`; rank 0 groups are rejected.
pub fn parse_group(text: &str) -> Result<GroupDescriptor> {
    let mut c = Cursor::new(text);
    let g = if c.eat(b'S') {
        if c.eat(b'p') {
            c.expect("(")?;
            let at = c.pos;
            let m = c.small()?;
            c.expect(")")?;
            if m % 2 == 1 || m == 0 {
                return Err(Error::parse(at, "Sp(m) needs an even m >= 2"));
            }
            GroupDescriptor::sp(m / 2)
        } else {
            c.expect("O(")?;
            let p = c.small()?;
            c.expect(",")?;
            let q = c.small()?;
            c.expect(")")?;
            if p + q < 2 {
                return Err(Error::parse(0, "SO(p,q) needs p + q >= 2"));
            }
            GroupDescriptor::so(p, q)?
        }
    } else if c.eat(b'U') {
        c.expect("(")?;
        let p = c.small()?;
        c.expect(",")?;
        let q = c.small()?;
        c.expect(")")?;
        if p + q == 0 {
            return Err(Error::parse(0, "U(p,q) needs p + q >= 1"));
        }
        GroupDescriptor::u(p, q)
    } else {
        return Err(c.error("expected `Sp(`, `SO(` or `U(`"));
    };
    c.finish()?;
    Ok(g)
}

/// Parses the summands without validating them against a group.
pub fn parse_summands(text: &str) -> Result<Vec<Summand>> {
    let mut c = Cursor::new(text);
    let mut out = vec![c.summand()?];
    while c.eat(b'+') {
        out.push(c.summand()?);
    }
    c.finish()?;
    Ok(out)
}

/// Parses and validates a parameter for `g`.
pub fn parse_param(text: &str, g: &GroupDescriptor) -> Result<ArthurParameter> {
    let psi = ArthurParameter::new(*g, parse_summands(text)?);
    validate(&psi)?;
    Ok(psi)
}

pub fn render_param(psi: &ArthurParameter) -> String {
    psi.to_string()
}

pub fn render_group(g: &GroupDescriptor) -> String {
    g.to_string()
}

pub fn render_scalar(s: &GaussRat) -> String {
    if s.is_zero() {
        "0".into()
    } else {
        s.to_string()
    }
}
