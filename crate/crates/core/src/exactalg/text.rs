//! Parser for the canonical polynomial text produced by `Display`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::monomial::{Monomial, Var};
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<LaurentPoly> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        let index = |digits: &str| -> Result<u16> {
            match digits.parse::<u16>() {
                Ok(i) if i >= 1 => Ok(i),
                _ => Err(bad()),
            }
        };
        match s.as_bytes().first() {
            Some(b'q') if s.len() == 1 => Ok(Var::Q),
            Some(b'x') => Ok(Var::X(index(&s[1..])?)),
            Some(b't') => Ok(Var::T(index(&s[1..])?)),
            _ => Err(bad()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
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

    fn poly(mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return Err(self.err("empty input")),
            _ => 1,
        };
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * sign);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::from(1);
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => coeff *= self.integer()?,
                Some(b'q' | b'x' | b't') => {
                    let start = self.pos;
                    self.pos += 1;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let v: Var = name.parse()?;
                    let mut e = 1i32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let neg = if self.peek() == Some(b'-') {
                            self.pos += 1;
                            true
                        } else {
                            false
                        };
                        let mag: i32 = self
                            .integer()?
                            .try_into()
                            .map_err(|_| self.err("exponent out of range"))?;
                        e = if neg { -mag } else { mag };
                    }
                    mono = mono.mul(&Monomial::var_pow(v, e));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| self.err("bad integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_examples() {
        let p: LaurentPoly = "1 - q^2".parse().unwrap();
        assert_eq!(p.to_string(), "1 - q^2");
        let p: LaurentPoly = "-3*x1^-1*t2 + x1^2*x2 + 12".parse().unwrap();
        assert_eq!(p.to_string(), "12 - 3*x1^-1*t2 + x1^2*x2");
        let p: LaurentPoly = "0".parse().unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn merges_like_terms() {
        let p: LaurentPoly = "x1 + x1 - 2*x1".parse().unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1 +", "y", "x0", "x1^", "2**x1", "q q"] {
            assert!(s.parse::<LaurentPoly>().is_err(), "{s:?} should not parse");
        }
    }
}
