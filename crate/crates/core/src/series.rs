//! Rational Hilbert–Poincaré series `t^offset * N(t) / (1-t)^denom_exp`.

use num_traits::{Signed, Zero};

use crate::bigpoly::{inv_one_minus_t_pow, IntPolynomial, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: IntPolynomial,
    denom_exp: usize,
    offset: i64,
}

impl HilbertSeries {
    /// Stores the triple as given. Use [`HilbertSeries::reduce`] to cancel
    /// common `(1-t)` factors.
    pub fn new(numerator: IntPolynomial, denom_exp: usize, offset: i64) -> Self {
        HilbertSeries {
            numerator,
            denom_exp,
            offset,
        }
    }

    /// Builds the series and cancels `(1-t)` factors right away.
    pub fn reduced(numerator: IntPolynomial, denom_exp: usize, offset: i64) -> Self {
        Self::new(numerator, denom_exp, offset).reduce()
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denom_exp(&self) -> usize {
        self.denom_exp
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Divides the numerator by `(1-t)` while it vanishes at `t = 1` and a
    /// denominator factor is left to cancel against.
    ///
    /// The resulting `denom_exp` is the pole order at `t = 1`, i.e. the Krull
    /// dimension of the module. A polynomial series (`denom_exp = 0`) keeps
    /// its numerator even if that numerator is divisible by `(1-t)`.
    pub fn reduce(mut self) -> Self {
        while self.denom_exp > 0 && !self.numerator.is_zero() && self.numerator.sumcoef().is_zero()
        {
            self.numerator = self
                .numerator
                .divide_by_one_minus_t_exact()
                .expect("numerator vanishes at t = 1");
            self.denom_exp -= 1;
        }
        self
    }

    /// Zero numerator, or a numerator not vanishing at `t = 1`, or no
    /// denominator left.
    pub fn is_reduced(&self) -> bool {
        self.denom_exp == 0 || self.numerator.is_zero() || !self.numerator.sumcoef().is_zero()
    }

    /// `G(1)` of the reduced form. Positive for every nonzero module.
    pub fn multiplicity(&self) -> Option<num_bigint::BigInt> {
        let reduced = self.clone().reduce();
        (!reduced.is_zero() && reduced.denom_exp > 0).then(|| reduced.numerator.sumcoef())
    }

    /// Same series written over `(1-t)^target`, `target >= denom_exp`.
    pub fn numerator_over(&self, target: usize) -> Option<IntPolynomial> {
        let extra = target.checked_sub(self.denom_exp)?;
        Some(&self.numerator * &IntPolynomial::one_minus_t_pow(extra))
    }

    /// Coefficients of `N(t)/(1-t)^denom_exp` up to `t^bound`, ignoring the
    /// offset.
    pub fn expand(&self, bound: usize) -> TruncatedSeries {
        self.numerator
            .mul_truncated(&inv_one_minus_t_pow(self.denom_exp, bound))
    }

    /// Multiplicity is defined and negative: not the series of a module.
    pub fn has_negative_multiplicity(&self) -> bool {
        self.denom_exp > 0 && self.numerator.sumcoef().is_negative()
    }
}
