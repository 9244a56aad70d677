//! Hilbert depth of a reduced Hilbert series.
//!
//! `hdepth(M)` is the largest `e` for which `(1-t)^e * HP_M(t)` has only
//! nonnegative coefficients. With `HP_M = G(t)/(1-t)^dim`, the candidates are
//! `e = d` for `d = dim, dim-1, ..., 0`, i.e. the series `G/(1-t)^(dim-d)`.
//! Each candidate is decided from a finite jet of order `beta`. The bound is
//! grown until the jet's coefficient sum is strictly positive; once that
//! holds, every coefficient past `beta` of the next candidate is nonnegative
//! and non-decreasing, so the next jet decides positivity exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::bigpoly::{inv_one_minus_t_pow, Coefficient, IntPolynomial, TruncatedSeries};
use crate::series::HilbertSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HdepthError {
    #[error("numerator vanishes at t = 1 over (1-t)^{denom_exp}; reduce the series first")]
    NotReduced { denom_exp: usize },
    #[error("numerator has value {value_at_one} at t = 1; a module has positive multiplicity")]
    NegativeMultiplicity { value_at_one: Coefficient },
    #[error("coefficient {coefficient} of t^{exponent} in the series is negative; not the Hilbert series of a module")]
    SeriesNotPositive {
        exponent: usize,
        coefficient: Coefficient,
    },
}

/// Hilbert depth value. The zero module has infinite depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Depth {
    Finite(usize),
    Infinite,
}

impl Depth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Depth::Finite(e) => Some(e),
            Depth::Infinite => None,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(e) => write!(f, "{e}"),
            Depth::Infinite => f.write_str("infinity"),
        }
    }
}

/// One evaluation of a jet at a given bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundProbe {
    pub bound: usize,
    pub coeff_sum: Coefficient,
}

/// Work done for one candidate depth `d`.
///
/// `bound`, `jet` and `coeff_sum` describe the last jet computed for this
/// candidate; `probes` lists every bound that was tried, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub d: usize,
    /// Exponent of `(1-t)` dividing `G`, i.e. `dim - d`.
    pub k: usize,
    pub bound: usize,
    pub jet: IntPolynomial,
    pub coeff_sum: Coefficient,
    pub accepted: bool,
    pub probes: Vec<BoundProbe>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HdepthResult {
    pub value: Depth,
    pub trace: Vec<TraceStep>,
}

/// `(1-t) * G` has a negative coefficient, so no `e > dim` can work.
///
/// Returns `false` for the zero numerator, for which the claim is void.
pub fn check_upper_bound(series: &HilbertSeries) -> bool {
    !series.is_zero() && !series.numerator().mul_one_minus_t().is_positive()
}

fn jet_of_quotient(g: &IntPolynomial, k: usize, bound: usize) -> TruncatedSeries {
    g.mul_truncated(&inv_one_minus_t_pow(k, bound))
}

fn first_negative(p: &IntPolynomial) -> Option<(usize, BigInt)> {
    p.coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| c.is_negative())
        .map(|(i, c)| (i, c.clone()))
}

/// Computes the Hilbert depth of a reduced series, with a trace of every
/// candidate tried. The offset is ignored; depth is invariant under shifts.
pub fn hdepth(series: &HilbertSeries) -> Result<HdepthResult, HdepthError> {
    let g = series.numerator();
    let dim = series.denom_exp();
    if g.is_zero() {
        return Ok(HdepthResult {
            value: Depth::Infinite,
            trace: Vec::new(),
        });
    }
    if !series.is_reduced() {
        return Err(HdepthError::NotReduced { denom_exp: dim });
    }
    if series.has_negative_multiplicity() {
        return Err(HdepthError::NegativeMultiplicity {
            value_at_one: g.sumcoef(),
        });
    }
    if g.is_positive() {
        return Ok(HdepthResult {
            value: Depth::Finite(dim),
            trace: Vec::new(),
        });
    }
    if dim == 0 {
        let (exponent, coefficient) = first_negative(g).expect("numerator is not positive");
        return Err(HdepthError::SeriesNotPositive {
            exponent,
            coefficient,
        });
    }
    debug_assert!(check_upper_bound(series));

    let mut bound = g.degree().expect("nonzero numerator");
    let mut trace = Vec::with_capacity(dim);
    for d in (0..dim).rev() {
        let k = dim - d;
        let mut f = jet_of_quotient(g, k, bound);
        let mut coeff_sum = f.poly().sumcoef();
        let mut probes = vec![BoundProbe {
            bound,
            coeff_sum: coeff_sum.clone(),
        }];
        if f.poly().is_positive() {
            trace.push(TraceStep {
                d,
                k,
                bound,
                jet: f.into_poly(),
                coeff_sum,
                accepted: true,
                probes,
            });
            return Ok(HdepthResult {
                value: Depth::Finite(d),
                trace,
            });
        }
        if d == 0 {
            // The jet holds exact coefficients of HP itself.
            let (exponent, coefficient) = first_negative(f.poly()).expect("jet is not positive");
            return Err(HdepthError::SeriesNotPositive {
                exponent,
                coefficient,
            });
        }
        while !coeff_sum.is_positive() {
            bound += 1;
            f = jet_of_quotient(g, k, bound);
            coeff_sum = f.poly().sumcoef();
            probes.push(BoundProbe {
                bound,
                coeff_sum: coeff_sum.clone(),
            });
        }
        trace.push(TraceStep {
            d,
            k,
            bound,
            jet: f.into_poly(),
            coeff_sum,
            accepted: false,
            probes,
        });
    }
    unreachable!("the d = 0 candidate either accepts or reports a negative coefficient")
}
