//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | VAR | '(' expr ')'
//! VAR    := 'x' DIGITS          (x1 .. xn)
//! ```
//!
//! Multiplication is always explicit. Division is only allowed by a nonzero
//! constant, which lets the canonical printer emit rational coefficients
//! such as `1/2*x1` and read them back.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{ExponentVector, MultiPoly};

pub fn parse_poly(text: &str, arity: usize, spec: FieldSpec) -> Result<MultiPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        arity,
        spec,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(Error::parse(p.pos, "empty expression"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(Error::parse(p.pos, format!("unexpected '{}'", c as char)));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
    spec: FieldSpec,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
            Some((start, s.to_string()))
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = checked_product(&acc, &rhs, self.pos)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.unary()?;
                let c = match rhs.degree().finite() {
                    Some(0) => rhs.coeff_of(&ExponentVector::zeros(self.arity)),
                    None => return Err(Error::parse(at, "division by zero")),
                    Some(_) => {
                        return Err(Error::parse(at, "division only by a nonzero constant"))
                    }
                };
                let inv = c
                    .inv()
                    .map_err(|_| Error::parse(at, "division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let (start, digits) = self
            .digits()
            .ok_or_else(|| Error::parse(self.pos, "expected a nonnegative integer exponent"))?;
        let e: u32 = digits
            .parse()
            .map_err(|_| Error::parse(start, "exponent overflow"))?;
        let max_deg = base
            .terms()
            .flat_map(|(u, _)| u.as_slice().iter().copied())
            .max()
            .unwrap_or(0);
        if (max_deg as u64) * (e as u64) > u32::MAX as u64 {
            return Err(Error::parse(start, "exponent overflow"));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(Error::parse(start, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let (_, digits) = self
                    .digits()
                    .ok_or_else(|| Error::parse(start, "expected variable index after 'x'"))?;
                let idx: usize = digits.parse().unwrap_or(usize::MAX);
                if idx == 0 || idx > self.arity {
                    return Err(Error::parse(
                        start,
                        format!("unknown variable x{digits} (arity {})", self.arity),
                    ));
                }
                Ok(MultiPoly::var(self.spec, self.arity, idx - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, digits) = self.digits().expect("at least one digit");
                let v: BigInt = digits.parse().expect("decimal digits");
                Ok(MultiPoly::constant(
                    self.spec,
                    self.arity,
                    self.spec.from_bigint(&v),
                ))
            }
            Some(c) => Err(Error::parse(start, format!("unexpected '{}'", c as char))),
        }
    }
}

fn checked_product(a: &MultiPoly, b: &MultiPoly, pos: usize) -> Result<MultiPoly> {
    a.try_mul(b).map_err(|_| Error::parse(pos, "exponent overflow"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn basic_parse() {
        let f = parse_poly("x1^2 - x1", 1, fp(5)).unwrap();
        let terms: Vec<_> = f
            .terms()
            .map(|(u, c)| (u.as_slice().to_vec(), c.to_string()))
            .collect();
        assert_eq!(terms, vec![(vec![1], "4".to_string()), (vec![2], "1".to_string())]);
    }

    #[test]
    fn binomial_mod_two() {
        let f = parse_poly("(x1+x2)^2", 2, fp(2)).unwrap();
        assert_eq!(f, parse_poly("x1^2 + x2^2", 2, fp(2)).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("", 1, fp(5)), Err(Error::parse(0, "empty expression")));
        assert!(matches!(parse_poly("2x1", 1, fp(5)), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_poly("x1 + x3", 2, fp(5)), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_poly("x0", 2, fp(5)), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("(x1 + 1", 1, fp(5)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x1^99999999999", 1, fp(5)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x1^-2", 1, fp(5)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x1 / x1", 1, fp(5)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x1 / 5", 1, fp(5)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x1 +", 1, fp(5)), Err(Error::Parse { .. })));
    }

    #[test]
    fn big_literals_and_fractions() {
        let q = FieldSpec::rational();
        let f = parse_poly("123456789012345678901234567890*x1 + 1/3", 1, q).unwrap();
        assert_eq!(f.to_string(), "123456789012345678901234567890*x1 + 1/3");
        let g = parse_poly("-3/4*x1^2*x2", 2, q).unwrap();
        assert_eq!(g.to_string(), "-3/4*x1^2*x2");
        assert_eq!(parse_poly("-x1^2", 1, q).unwrap().to_string(), "-x1^2");
    }
}
