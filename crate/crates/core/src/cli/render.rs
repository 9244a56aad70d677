//! Report output: Singular-style trace text and JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Number, Value};

use crate::bigpoly::IntPolynomial;
use crate::depth::{Depth, HdepthResult};

/// Singular short notation: `1+2t-2t2+4t3+t5`.
pub fn singular(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let magnitude = c.abs();
        if i == 0 || !magnitude.is_one() {
            write!(out, "{magnitude}").unwrap();
        }
        match i {
            0 => {}
            1 => out.push('t'),
            _ => write!(out, "t{i}").unwrap(),
        }
    }
    out
}

fn number(c: &BigInt) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integer literal"))
}

/// Text report. `dim_line` adds the leading `dim M = d` line.
pub fn text_report(
    numerator: &IntPolynomial,
    result: &HdepthResult,
    verbose: bool,
    dim_line: Option<usize>,
) -> String {
    let mut out = String::new();
    if let Some(d) = dim_line {
        writeln!(out, "dim M = {d}").unwrap();
    }
    writeln!(out, "G(t)= {}", singular(numerator)).unwrap();
    if verbose {
        for step in &result.trace {
            writeln!(out, "G(t)/(1-t)^ {} = {} +...", step.k, singular(&step.jet)).unwrap();
        }
    }
    writeln!(out, "hdepth= {}", result.value).unwrap();
    out
}

pub fn json_report(numerator: &IntPolynomial, dim: usize, result: &HdepthResult) -> Value {
    let hdepth = match result.value {
        Depth::Finite(e) => json!(e),
        Depth::Infinite => json!("infinity"),
    };
    let trace: Vec<Value> = result
        .trace
        .iter()
        .map(|s| {
            json!({
                "d": s.d,
                "k": s.k,
                "bound": s.bound,
                "jet": s.jet.to_string(),
                "coeff_sum": number(&s.coeff_sum),
                "accepted": s.accepted,
                "probes": s.probes.iter().map(|p| json!({
                    "bound": p.bound,
                    "coeff_sum": number(&p.coeff_sum),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "numerator": numerator.to_string(),
        "dim": dim,
        "hdepth": hdepth,
        "trace": trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_notation() {
        let p = IntPolynomial::from_i64s(&[1, 2, -2, 4, 0, 1]);
        assert_eq!(singular(&p), "1+2t-2t2+4t3+t5");
        let q = IntPolynomial::from_i64s(&[2, -1, -3, -1, 3, 3]);
        assert_eq!(singular(&q), "2-t-3t2-t3+3t4+3t5");
        assert_eq!(singular(&IntPolynomial::from_i64s(&[0, 0, -1])), "-t2");
        assert_eq!(singular(&IntPolynomial::zero()), "0");
    }

    #[test]
    fn big_coefficients_are_json_numbers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(number(&big).to_string(), "123456789012345678901234567890");
        assert_eq!(number(&BigInt::from(-3)).to_string(), "-3");
    }
}
