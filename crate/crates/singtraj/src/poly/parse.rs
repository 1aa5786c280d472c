//! Text format for polynomials: rational coefficients, `*` products,
//! `^` powers, identifiers for variables, parentheses allowed.
//!
//! The printer in `print.rs` emits this same format and the pair round-trips
//! exactly.

use super::{MultiPoly, Rational, VarSet};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Arc;

/// Hard caps so hostile input fails fast instead of exhausting memory.
const MAX_EXPONENT: u64 = 1024;
const MAX_TERMS: usize = 100_000;

pub fn parse_poly(src: &str, vars: &Arc<VarSet>) -> Result<MultiPoly> {
    let mut p = Parser::new(src, vars);
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    vars: &'a Arc<VarSet>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &'a Arc<VarSet>) -> Self {
        Parser {
            bytes: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
            vars,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn budget(&self, p: &MultiPoly) -> Result<()> {
        if p.num_terms() > MAX_TERMS {
            Err(self.err("expression too large"))
        } else {
            Ok(())
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_add(&t)?;
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_sub(&t)?;
                }
                _ => break,
            }
            self.budget(&acc)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                let f = self.factor()?;
                acc = acc.checked_mul(&f)?;
                self.budget(&acc)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let e = self.uint()?;
            if e > MAX_EXPONENT {
                return Err(self.err("exponent too large"));
            }
            // square-and-multiply with the term budget enforced
            let mut out = MultiPoly::one(base.vars());
            let mut sq = base;
            let mut k = e;
            while k > 0 {
                if k & 1 == 1 {
                    out = out.checked_mul(&sq)?;
                    self.budget(&out)?;
                }
                k >>= 1;
                if k > 0 {
                    sq = sq.checked_mul(&sq)?;
                    self.budget(&sq)?;
                }
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(b'-') => {
                self.bump();
                Ok(self.atom()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint_big()?;
                let val = if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.uint_big()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from(num)
                };
                Ok(MultiPoly::constant(self.vars, val))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                match self.vars.index_of(&name) {
                    Some(_) => MultiPoly::var(self.vars, &name),
                    None => Err(self.err(&format!("unknown variable `{name}`"))),
                }
            }
            Some(_) => Err(self.err("expected a number, variable, or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                s.push(c as char);
                self.bump();
            } else {
                break;
            }
        }
        s
    }

    fn uint(&mut self) -> Result<u64> {
        let big = self.uint_big()?;
        u64::try_from(big).map_err(|_| self.err("exponent too large"))
    }

    fn uint_big(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c as char);
                self.bump();
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        if digits.len() > 10_000 {
            return Err(self.err("number literal too long"));
        }
        Ok(digits.parse::<BigInt>().expect("digits"))
    }
}

#[allow(dead_code)]
fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn vs() -> Arc<VarSet> {
        VarSet::new(vec!["x", "y", "z", "rho1"])
    }

    #[test]
    fn parses_the_documented_format() {
        let v = vs();
        let p = parse_poly("x^2 - 2*rho1*x + rho1^2 + y^2 + z^2 - 4", &v).unwrap();
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.num_terms(), 6);
    }

    #[test]
    fn rational_coefficients() {
        let v = vs();
        let p = parse_poly("13/14*x - 5/14*y", &v).unwrap();
        let q = parse_poly("x", &v).unwrap().scale(&ratio(13, 14));
        let r = parse_poly("y", &v).unwrap().scale(&ratio(-5, 14));
        assert_eq!(p, q.checked_add(&r).unwrap());
    }

    #[test]
    fn reports_position() {
        let v = vs();
        match parse_poly("x +\n y + w", &v) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert!(column >= 5);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_garbage_without_panicking() {
        let v = vs();
        for s in ["", "^", "x^", "1/0", "x^99999999", "(", "x)(", "3//4", "x**2"] {
            assert!(parse_poly(s, &v).is_err(), "should reject {s:?}");
        }
    }
}
