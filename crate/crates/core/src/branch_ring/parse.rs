//! Parser for series strings such as `t^6 + t^7`, `2u^2`, `-3/4*t^5 + 1`.
//!
//! A term is an optional coefficient (integer or `p/q`), optionally followed
//! by `*` and a power `v` or `v^k` of the branch parameter. Terms are joined
//! by `+` or `-`; whitespace is ignored. Positions in errors are 0-based
//! character offsets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::TruncatedSeries;
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    source: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(source: &'a str) -> Self {
        Cursor {
            chars: source.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            source,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.source.chars().count())
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Some(digits.parse().expect("ascii digits"))
    }

    fn identifier(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }
}

/// Parses a series in the parameter `var`; `known` lists every variable name
/// of the curve so that a parameter of another branch is reported as such.
pub fn parse_series(source: &str, var: &str, known: &[String], precision: usize) -> Result<TruncatedSeries> {
    let mut cur = Cursor::new(source);
    let mut coeffs: Vec<BigRational> = vec![];
    if cur.peek().is_none() {
        return cur.error("empty series");
    }
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else if first {
            false
        } else {
            return cur.error("expected '+' or '-'");
        };
        first = false;
        let (coeff, exponent) = term(&mut cur, var, known)?;
        let coeff = if negative { -coeff } else { coeff };
        if exponent >= coeffs.len() {
            coeffs.resize(exponent + 1, BigRational::zero());
        }
        coeffs[exponent] += coeff;
    }
    Ok(TruncatedSeries::new(coeffs, precision))
}

fn term(cur: &mut Cursor<'_>, var: &str, known: &[String]) -> Result<(BigRational, usize)> {
    let mut coeff = BigRational::one();
    let mut has_coeff = false;
    if let Some(n) = cur.number() {
        has_coeff = true;
        coeff = BigRational::from_integer(n);
        if cur.eat('/') {
            match cur.number() {
                Some(d) if !d.is_zero() => coeff /= BigRational::from_integer(d),
                Some(_) => return cur.error("zero denominator"),
                None => return cur.error("expected a denominator"),
            }
        }
        let star = cur.eat('*');
        if !star && !matches!(cur.peek(), Some(c) if c.is_alphabetic()) {
            return Ok((coeff, 0));
        }
    }
    let at = cur.offset();
    let name = match cur.identifier() {
        Some(n) => n,
        None if has_coeff => return cur.error("expected a variable after '*'"),
        None => return cur.error("expected a coefficient or a variable"),
    };
    if name != var {
        let message = if known.iter().any(|k| *k == name) {
            format!("variable '{name}' is not the parameter '{var}' of this branch")
        } else {
            format!("unknown variable '{name}'")
        };
        return Err(Error::Parse { position: at, message });
    }
    let mut exponent = 1usize;
    if cur.eat('^') {
        if cur.peek() == Some('-') {
            return cur.error("negative exponents are not allowed");
        }
        exponent = match cur.number() {
            Some(e) => match usize::try_from(e) {
                Ok(e) => e,
                Err(_) => return cur.error("exponent too large"),
            },
            None => return cur.error("expected an exponent after '^'"),
        };
    }
    Ok((coeff, exponent))
}
