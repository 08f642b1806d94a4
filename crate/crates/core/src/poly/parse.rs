//! Text grammar for polynomials.
//!
//! ```text
//! poly     := ["+"|"-"] term (("+"|"-") term)*
//! term     := rational ["*"] monomial | rational | monomial
//! monomial := factor ("*" factor)*
//! factor   := var ["^" integer]
//! var      := "x" digits | "x" | "y" | "z" | "u" | "v"
//! rational := digits ["/" digits]
//! ```
//!
//! The aliases `x,y,z,u,v` stand for `x1..x5`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ExponentVector, Polynomial};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// Parses `text` into a polynomial.
///
/// When `dimension` is `None` the number of variables is the highest
/// variable index used (at least 1).
pub fn parse_polynomial(text: &str, dimension: Option<usize>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let raw = p.poly()?;
    let used = raw
        .iter()
        .flat_map(|(vars, _)| vars.iter().map(|(i, _)| i + 1))
        .max()
        .unwrap_or(1);
    let dim = match dimension {
        Some(d) => {
            if d == 0 {
                return Err(Error::InvalidArgument("dimension must be ≥ 1".into()));
            }
            if used > d {
                return Err(Error::parse(
                    0,
                    format!("variable x{used} exceeds declared dimension {d}"),
                ));
            }
            d
        }
        None => used,
    };
    let mut out = Polynomial::zero(dim);
    for (vars, c) in raw {
        let mut k = vec![0u32; dim];
        for (i, e) in vars {
            k[i] += e;
        }
        out.add_term(ExponentVector::new(k), c);
    }
    Ok(out)
}

type RawTerm = (Vec<(usize, u32)>, BigRational);

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (vars, c) = self.term()?;
            terms.push((vars, c * &sign));
            match self.peek() {
                Some(b'+') => {
                    sign = BigRational::one();
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -BigRational::one();
                    self.pos += 1;
                }
                None => break,
                Some(ch) => return self.err(format!("unexpected character `{}`", ch as char)),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = BigRational::one();
        let mut vars = Vec::new();
        match self.peek() {
            Some(ch) if ch.is_ascii_digit() => {
                coeff = self.rational()?;
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.monomial(&mut vars)?;
                    }
                    Some(ch) if is_var_start(ch) => self.monomial(&mut vars)?,
                    _ => {}
                }
            }
            Some(ch) if is_var_start(ch) => self.monomial(&mut vars)?,
            Some(b'-') => return self.err("negative exponent or doubled sign"),
            Some(ch) => return self.err(format!("unexpected character `{}`", ch as char)),
            None => return self.err("expected a term"),
        }
        Ok((vars, coeff))
    }

    fn monomial(&mut self, vars: &mut Vec<(usize, u32)>) -> Result<()> {
        loop {
            let idx = self.var()?;
            let mut e = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                if self.peek() == Some(b'-') {
                    return self.err("negative exponent");
                }
                let v = self.integer()?;
                e = u32::try_from(v)
                    .ok()
                    .filter(|&e| e > 0)
                    .ok_or_else(|| Error::parse(self.pos, "exponent must be a positive integer"))?;
            }
            vars.push((idx, e));
            if self.peek() == Some(b'*') {
                self.pos += 1;
                continue;
            }
            match self.peek() {
                Some(ch) if is_var_start(ch) => continue,
                _ => return Ok(()),
            }
        }
    }

    fn var(&mut self) -> Result<usize> {
        let start = self.pos;
        let ch = match self.peek() {
            Some(ch) => ch,
            None => return self.err("expected a variable"),
        };
        self.pos += 1;
        let alias = match ch {
            b'x' => {
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    let v = self.integer()?;
                    if v == 0 {
                        return Err(Error::parse(start, "variable indices start at x1"));
                    }
                    return usize::try_from(v - 1)
                        .map_err(|_| Error::parse(start, "variable index too large"));
                }
                0
            }
            b'y' => 1,
            b'z' => 2,
            b'u' => 3,
            b'v' => 4,
            _ => {
                return Err(Error::parse(
                    start,
                    format!("unknown variable `{}`", ch as char),
                ))
            }
        };
        Ok(alias)
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn big_integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected an integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .expect("digits"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.big_integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.big_integer()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }
}

fn is_var_start(ch: u8) -> bool {
    matches!(ch, b'x' | b'y' | b'z' | b'u' | b'v')
}
