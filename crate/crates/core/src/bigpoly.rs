//! Exact integer polynomials in one variable `t` and their truncated
//! power-series counterparts.
//!
//! Coefficients are arbitrary-precision: expansions of `1/(1-t)^k` grow like
//! `i^(k-1)`, and the tables this crate reproduces go well past `i64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A single coefficient. Always exact.
pub type Coefficient = BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("cannot take jet of order {requested} from a series known only up to t^{bound}")]
    JetBeyondBound { requested: usize, bound: usize },
    #[error("polynomial is not divisible by (1-t): its value at t = 1 is {value_at_one}")]
    NotDivisibleByOneMinusT { value_at_one: Coefficient },
}

/// Dense polynomial with integer coefficients, `coeffs[i]` being the
/// coefficient of `t^i`.
///
/// The zero polynomial is the empty vector; otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Coefficient>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Coefficient>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^exponent`
    pub fn monomial(c: Coefficient, exponent: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = c;
        IntPolynomial { coeffs }
    }

    /// Expanded `(1 - t)^n`.
    pub fn one_minus_t_pow(n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = BigInt::one();
        for i in 0..=n {
            coeffs.push(if i % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * (n - i) / (i + 1);
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Coefficient {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True iff no coefficient is negative. The zero polynomial is positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn sumcoef(&self) -> Coefficient {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, factor: &Coefficient) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// `self * (1 - t)`.
    pub fn mul_one_minus_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        let mut prev = BigInt::zero();
        for c in &self.coeffs {
            coeffs.push(c - &prev);
            prev = c.clone();
        }
        coeffs.push(-prev);
        Self::new(coeffs)
    }

    /// Exact quotient by `(1 - t)`. Fails unless the value at `t = 1` is zero.
    pub fn divide_by_one_minus_t_exact(&self) -> Result<Self, PolyError> {
        let value_at_one = self.sumcoef();
        if !value_at_one.is_zero() {
            return Err(PolyError::NotDivisibleByOneMinusT { value_at_one });
        }
        // q_i = p_0 + ... + p_i; the final partial sum is p(1) = 0.
        let mut running = BigInt::zero();
        let quotient = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| {
                running += c;
                running.clone()
            })
            .collect();
        Ok(Self::new(quotient))
    }

    pub fn jet(&self, j: usize) -> TruncatedSeries {
        TruncatedSeries::truncate(self.clone(), j)
    }

    /// `jet_{s.bound}(self * s)`. Only the known prefix of `s` is touched.
    pub fn mul_truncated(&self, s: &TruncatedSeries) -> TruncatedSeries {
        let bound = s.bound;
        let mut out = vec![BigInt::zero(); bound + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in s.poly.coeffs.iter().enumerate().take(bound + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries {
            poly: Self::new(out),
            bound,
        }
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Plain rendering, e.g. `2-3t-2t^2+2t^3+4t^4`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let magnitude = c.abs();
            if i == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

/// `jet_bound` of an infinite series: coefficients up to `t^bound` are exact,
/// everything above is unknown (not zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: IntPolynomial,
    bound: usize,
}

impl TruncatedSeries {
    /// Drops every term above `t^bound`.
    pub fn truncate(poly: IntPolynomial, bound: usize) -> Self {
        let mut coeffs = poly.into_coeffs();
        coeffs.truncate(bound + 1);
        TruncatedSeries {
            poly: IntPolynomial::new(coeffs),
            bound,
        }
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn into_poly(self) -> IntPolynomial {
        self.poly
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Coefficient of `t^i`, `None` when `i` lies beyond the bound.
    pub fn coeff(&self, i: usize) -> Option<Coefficient> {
        (i <= self.bound).then(|| self.poly.coeff(i))
    }

    /// Re-truncate to a smaller order; asking for more than is known fails.
    pub fn jet(&self, j: usize) -> Result<TruncatedSeries, PolyError> {
        if j > self.bound {
            return Err(PolyError::JetBeyondBound {
                requested: j,
                bound: self.bound,
            });
        }
        Ok(Self::truncate(self.poly.clone(), j))
    }
}

/// `jet_bound(1/(1-t)^k)`: the coefficient of `t^i` is `C(i+k-1, i)`.
///
/// Built from the ratio `c_{i+1} = c_i * (i+k) / (i+1)`, which divides exactly.
pub fn inv_one_minus_t_pow(k: usize, bound: usize) -> TruncatedSeries {
    if k == 0 {
        return IntPolynomial::one().jet(bound);
    }
    let mut coeffs = Vec::with_capacity(bound + 1);
    let mut c = BigInt::one();
    for i in 0..=bound {
        coeffs.push(c.clone());
        c = c * (i + k) / (i + 1);
    }
    TruncatedSeries {
        poly: IntPolynomial::new(coeffs),
        bound,
    }
}
