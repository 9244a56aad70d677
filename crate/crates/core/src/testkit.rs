//! Brute-force oracles for checking the depth algorithm and the monomial
//! front end.
//!
//! Nothing here calls into `depth`, `series` reduction, or the pivot
//! recursion in `ideal`: series are expanded by repeated prefix sums and
//! ideal numerators by subset enumeration, so a bug on either side shows up
//! as a disagreement.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::bigpoly::IntPolynomial;
use crate::ideal::{Monomial, MonomialIdeal};
use crate::series::HilbertSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{count} generators exceed the subset-enumeration cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },
}

/// Largest generator count accepted by [`inclusion_exclusion_numerator`].
pub const SUBSET_CAP: usize = 16;

/// Knobs for random instance generation and prefix scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub trials: usize,
    pub degree_cap: usize,
    pub coeff_cap: i64,
    pub var_cap: usize,
    /// Largest denominator exponent for random series.
    pub dim_cap: usize,
    /// Generator count and exponent caps for random ideals.
    pub gen_cap: usize,
    pub exponent_cap: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            trials: 500,
            degree_cap: 12,
            coeff_cap: 10,
            var_cap: 6,
            dim_cap: 12,
            gen_cap: 8,
            exponent_cap: 3,
        }
    }
}

/// Prefix length that is long enough for the certification scans.
pub fn default_prefix_bound(numerator: &IntPolynomial, denom_exp: usize) -> usize {
    numerator.degree().unwrap_or(0) + 4 * denom_exp + 200
}

/// Coefficients `0..=bound` of `numerator / (1-t)^k`, by `k` passes of
/// running sums.
pub fn naive_expand(numerator: &IntPolynomial, k: usize, bound: usize) -> Vec<BigInt> {
    let mut seq: Vec<BigInt> = (0..=bound).map(|i| numerator.coeff(i)).collect();
    for _ in 0..k {
        let mut running = BigInt::zero();
        for c in seq.iter_mut() {
            running += &*c;
            *c = running.clone();
        }
    }
    seq
}

/// All coefficients of `numerator / (1-t)^k` up to `t^bound` are nonnegative.
pub fn naive_positive_prefix(numerator: &IntPolynomial, k: usize, bound: usize) -> bool {
    naive_expand(numerator, k, bound)
        .iter()
        .all(|c| !c.is_negative())
}

/// Largest `e <= denom_exp` whose prefix of `(1-t)^e * HP` is nonnegative.
///
/// A nonnegative prefix does not prove positivity; pair the answer with
/// [`certify`] before trusting it.
pub fn naive_hdepth(series: &HilbertSeries, bound: usize) -> Option<usize> {
    let dim = series.denom_exp();
    (0..=dim)
        .rev()
        .find(|&e| naive_positive_prefix(series.numerator(), dim - e, bound))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    /// The claimed depth has a nonnegative prefix and the next one up has a
    /// negative coefficient.
    Confirmed,
    /// A negative coefficient was found at the claimed depth.
    Refuted { exponent: usize },
    /// The next depth up also looks positive within the prefix; a longer
    /// prefix (or a bug) is needed to decide.
    Inconclusive,
}

/// Two-sided check of a claimed depth `e` against prefix expansions of
/// length `bound + 1`.
pub fn certify(series: &HilbertSeries, e: usize, bound: usize) -> Certification {
    let dim = series.denom_exp();
    let at = naive_expand(series.numerator(), dim - e, bound);
    if let Some(exponent) = at.iter().position(Signed::is_negative) {
        return Certification::Refuted { exponent };
    }
    if e == dim {
        // Nothing above dim can be positive for a nonzero numerator.
        let over = series.numerator().mul_one_minus_t();
        return if over.is_positive() {
            Certification::Inconclusive
        } else {
            Certification::Confirmed
        };
    }
    if naive_positive_prefix(series.numerator(), dim - e - 1, bound) {
        Certification::Inconclusive
    } else {
        Certification::Confirmed
    }
}

/// `Σ_S (-1)^|S| t^deg(lcm S)` over all subsets of the generators.
pub fn inclusion_exclusion_numerator(ideal: &MonomialIdeal) -> Result<IntPolynomial, OracleError> {
    let gens = ideal.generators();
    if gens.len() > SUBSET_CAP {
        return Err(OracleError::TooManyGenerators {
            count: gens.len(),
            cap: SUBSET_CAP,
        });
    }
    let mut coeffs: Vec<i64> = Vec::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut lcm = vec![0u32; ideal.n_vars()];
        for (j, g) in gens.iter().enumerate() {
            if mask & (1 << j) != 0 {
                for (l, e) in lcm.iter_mut().zip(g.exponents()) {
                    *l = (*l).max(*e);
                }
            }
        }
        let deg: usize = lcm.iter().map(|&e| e as usize).sum();
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    Ok(IntPolynomial::from_i64s(&coeffs))
}

/// Number of monomials of each total degree `0..=max_degree` outside the
/// ideal, by enumerating every exponent vector.
pub fn standard_monomial_counts(ideal: &MonomialIdeal, max_degree: usize) -> Vec<u64> {
    let n = ideal.n_vars();
    let mut counts = vec![0u64; max_degree + 1];
    let mut exps = vec![0usize; n];
    loop {
        let deg: usize = exps.iter().sum();
        if deg <= max_degree {
            let outside = !ideal
                .generators()
                .iter()
                .any(|g| g.exponents().iter().zip(&exps).all(|(a, b)| *a as usize <= *b));
            if outside {
                counts[deg] += 1;
            }
        }
        // odometer over [0, max_degree]^n
        let mut i = 0;
        loop {
            if i == n {
                return counts;
            }
            exps[i] += 1;
            if exps[i] <= max_degree && exps.iter().sum::<usize>() <= max_degree {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// `ceil(n/2)`, the Hilbert depth of the maximal ideal of `K[x_1..x_n]`.
pub fn ceil_formula_maximal_ideal(n: usize) -> usize {
    n.div_ceil(2)
}

/// Random numerator with degree, coefficient and multiplicity within the
/// caps: `deg <= degree_cap`, `|c| <= coeff_cap`, value at 1 at least 1.
pub fn random_numerator<R: Rng>(rng: &mut R, cfg: &OracleConfig) -> IntPolynomial {
    loop {
        let degree = rng.gen_range(0..=cfg.degree_cap);
        let coeffs: Vec<i64> = (0..=degree)
            .map(|_| rng.gen_range(-cfg.coeff_cap..=cfg.coeff_cap))
            .collect();
        let p = IntPolynomial::from_i64s(&coeffs);
        if p.sumcoef() >= BigInt::from(1) {
            return p;
        }
    }
}

/// Random minimal monomial ideal within the variable, generator and exponent
/// caps. May be the zero ideal.
pub fn random_ideal<R: Rng>(rng: &mut R, cfg: &OracleConfig) -> MonomialIdeal {
    let n = rng.gen_range(1..=cfg.var_cap);
    let count = rng.gen_range(0..=cfg.gen_cap);
    let gens = (0..count)
        .map(|_| {
            Monomial::new(
                (0..n)
                    .map(|_| rng.gen_range(0..=cfg.exponent_cap))
                    .collect(),
            )
        })
        // the unit ideal is legal but uninteresting
        .filter(|m| m.degree() > 0)
        .collect();
    MonomialIdeal::new(n, gens)
        .expect("generators match the variable count")
        .minimalize()
}
