//! Text forms accepted on the command line.
//!
//! Polynomials in `t`: terms `c`, `c*t`, `ct`, `c*t^k`, `t^k` joined by `+`
//! and `-`, whitespace ignored. Singular's short form `4t3` is read as
//! `4*t^3`. Monomial lists over `x1..xN`: power products such as
//! `x1*x2^3`, comma separated, optionally wrapped in parentheses.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::bigpoly::IntPolynomial;
use crate::ideal::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("{message} at offset {position} in {input:?}")]
    Syntax {
        input: String,
        position: usize,
        message: &'static str,
    },
    #[error("variable x{index} is not among x1..x{n_vars}")]
    UndeclaredVariable { index: usize, n_vars: usize },
    #[error("range {0:?} is not of the form a..b with a <= b")]
    Range(String),
}

struct Cursor<'a> {
    input: &'a str,
    bytes: Vec<u8>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            input,
            bytes: input.bytes().filter(|b| !b.is_ascii_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn error(&self, message: &'static str) -> ParseError {
        ParseError::Syntax {
            input: self.input.to_string(),
            position: self.pos,
            message,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }
}

fn small_number<T: std::str::FromStr>(cur: &Cursor<'_>, s: &str) -> Result<T, ParseError> {
    s.parse().map_err(|_| cur.error("number too large"))
}

pub fn parse_polynomial(src: &str) -> Result<IntPolynomial, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(ParseError::Empty);
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    while !cur.at_end() {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(cur.error("expected '+' or '-'"));
        };
        first = false;
        let coefficient = cur.digits().map(|d| d.parse::<BigInt>().unwrap());
        let mut exponent = 0usize;
        if coefficient.is_some() && cur.peek() == Some(b'*') {
            cur.pos += 1;
            if cur.peek() != Some(b't') {
                return Err(cur.error("expected 't' after '*'"));
            }
        }
        if cur.eat(b't') {
            exponent = 1;
            if cur.eat(b'^') {
                let d = cur.digits().ok_or_else(|| cur.error("expected exponent"))?;
                exponent = small_number(&cur, &d)?;
            } else if let Some(d) = cur.digits() {
                exponent = small_number(&cur, &d)?;
            }
        } else if coefficient.is_none() {
            return Err(cur.error("expected a coefficient or 't'"));
        }
        let mut c = coefficient.unwrap_or_else(|| BigInt::from(1));
        if negative {
            c = -c;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::zero());
        }
        coeffs[exponent] += c;
    }
    Ok(IntPolynomial::new(coeffs))
}

fn parse_monomial(cur: &mut Cursor<'_>, n_vars: usize) -> Result<Monomial, ParseError> {
    let mut exps = vec![0u32; n_vars];
    if cur.peek() == Some(b'1') {
        cur.pos += 1;
        return Ok(Monomial::new(exps));
    }
    loop {
        if !cur.eat(b'x') {
            return Err(cur.error("expected a variable x<i>"));
        }
        let d = cur.digits().ok_or_else(|| cur.error("expected a variable index"))?;
        let index: usize = small_number(cur, &d)?;
        if index == 0 || index > n_vars {
            return Err(ParseError::UndeclaredVariable { index, n_vars });
        }
        let mut power = 1u32;
        if cur.eat(b'^') {
            let d = cur.digits().ok_or_else(|| cur.error("expected exponent"))?;
            power = small_number(cur, &d)?;
        }
        exps[index - 1] += power;
        if !cur.eat(b'*') {
            return Ok(Monomial::new(exps));
        }
    }
}

/// Comma separated power products. An empty list, `0`, or `()` is the zero
/// ideal.
pub fn parse_monomial_list(src: &str, n_vars: usize) -> Result<Vec<Monomial>, ParseError> {
    let mut cur = Cursor::new(src);
    let wrapped = cur.eat(b'(');
    let mut gens = Vec::new();
    let closes = |cur: &Cursor<'_>| cur.at_end() || (wrapped && cur.peek() == Some(b')'));
    if cur.peek() == Some(b'0') {
        cur.pos += 1;
    } else if !closes(&cur) {
        loop {
            gens.push(parse_monomial(&mut cur, n_vars)?);
            if !cur.eat(b',') {
                break;
            }
        }
    }
    if wrapped && !cur.eat(b')') {
        return Err(cur.error("expected ')'"));
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(gens)
}

/// `A;B;...`: intersection of the ideals generated by each list.
pub fn parse_intersection(src: &str, n_vars: usize) -> Result<MonomialIdeal, CliIdealError> {
    let mut acc: Option<MonomialIdeal> = None;
    for part in src.split(';') {
        let ideal = MonomialIdeal::new(n_vars, parse_monomial_list(part, n_vars)?)?;
        acc = Some(match acc {
            None => ideal.minimalize(),
            Some(prev) => prev.intersect(&ideal)?,
        });
    }
    Ok(acc.expect("split yields at least one part"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliIdealError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Ideal(#[from] crate::ideal::IdealError),
}

/// `a..b`, inclusive on both ends.
pub fn parse_range(src: &str) -> Result<std::ops::RangeInclusive<usize>, ParseError> {
    let bad = || ParseError::Range(src.to_string());
    let (a, b) = src.trim().split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}
