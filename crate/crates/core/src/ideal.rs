//! Monomial ideals in `K[x_1, ..., x_n]` and the numerators of their
//! standard-graded Hilbert series.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::bigpoly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("generator {index} has {found} exponents, expected {expected}")]
    WrongArity {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("ideals live in rings with {left} and {right} variables")]
    RingMismatch { left: usize, right: usize },
}

/// Exponent vector of a power product `x_1^a_1 * ... * x_n^a_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Generator of `(self) : (other)`, i.e. `max(self - other, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Degree reverse lexicographic comparison.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    // smaller exponent in the last differing variable is larger
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Keeps only generators not divisible by another one; the result is sorted
/// in degrevlex order without duplicates.
fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.cmp_degrevlex(b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // A divisor has degree at most that of its multiple, so it is seen first.
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n_vars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Validates the generator arities. No generators means the zero ideal.
    pub fn new(n_vars: usize, generators: Vec<Monomial>) -> Result<Self, IdealError> {
        if n_vars == 0 {
            return Err(IdealError::NoVariables);
        }
        if let Some((index, g)) = generators
            .iter()
            .enumerate()
            .find(|(_, g)| g.n_vars() != n_vars)
        {
            return Err(IdealError::WrongArity {
                index,
                found: g.n_vars(),
                expected: n_vars,
            });
        }
        Ok(MonomialIdeal {
            n_vars,
            generators,
        })
    }

    pub fn zero(n_vars: usize) -> Result<Self, IdealError> {
        Self::new(n_vars, Vec::new())
    }

    /// `(x_1, ..., x_n)`
    pub fn maximal(n_vars: usize) -> Result<Self, IdealError> {
        Self::new(
            n_vars,
            (0..n_vars).map(|i| Monomial::variable(n_vars, i)).collect(),
        )
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.degree() == 0)
    }

    pub fn minimalize(&self) -> Self {
        MonomialIdeal {
            n_vars: self.n_vars,
            generators: minimal_generators(self.generators.clone()),
        }
    }

    pub fn is_minimal(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || !h.divides(g))
        })
    }

    /// Whether the monomial lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `I ∩ J`, generated by the pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self, IdealError> {
        if self.n_vars != other.n_vars {
            return Err(IdealError::RingMismatch {
                left: self.n_vars,
                right: other.n_vars,
            });
        }
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(MonomialIdeal {
            n_vars: self.n_vars,
            generators: minimal_generators(gens),
        })
    }

    /// `N(t)` with `HP_{R/I}(t) = N(t) / (1-t)^n`.
    pub fn numerator_quotient(&self) -> IntPolynomial {
        let mut memo = HashMap::new();
        pivot_numerator(minimal_generators(self.generators.clone()), &mut memo)
    }

    /// Numerator of `HP_I` over `(1-t)^n`, from `0 -> I -> R -> R/I -> 0`.
    pub fn numerator_ideal(&self) -> IntPolynomial {
        &IntPolynomial::one() - &self.numerator_quotient()
    }
}

/// `N(J + (g)) = N(J) - t^deg(g) * N(J : g)`, splitting on the largest
/// generator in degrevlex order. `gens` must be minimal and degrevlex-sorted.
fn pivot_numerator(
    mut gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, IntPolynomial>,
) -> IntPolynomial {
    let Some(pivot) = gens.last().cloned() else {
        return IntPolynomial::one();
    };
    if let Some(cached) = memo.get(&gens) {
        return cached.clone();
    }
    let key = gens.clone();
    gens.pop();
    let colon = minimal_generators(gens.iter().map(|h| h.colon(&pivot)).collect());
    let without = pivot_numerator(gens, memo);
    let inner = pivot_numerator(colon, memo);
    let result = &without - &inner.shift(pivot.degree());
    memo.insert(key, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn example_one_ideal() -> MonomialIdeal {
        let x = MonomialIdeal::new(6, vec![Monomial::variable(6, 0)]).unwrap();
        let ys = MonomialIdeal::new(6, (1..6).map(|i| Monomial::variable(6, i)).collect()).unwrap();
        x.intersect(&ys).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[2, 1])]).unwrap();
        assert_eq!(i.minimalize().generators(), &[m(&[2, 0])]);
        let j = i.minimalize();
        assert_eq!(j.minimalize(), j);
        assert!(j.is_minimal());
        assert!(!i.is_minimal());
    }

    #[test]
    fn intersection_of_example_one() {
        let i = example_one_ideal();
        assert_eq!(i.generators().len(), 5);
        assert!(i.is_minimal());
        for g in i.generators() {
            assert_eq!(g.degree(), 2);
            assert_eq!(g.exponents()[0], 1);
        }
        assert_eq!(i.minimalize(), i);
    }

    #[test]
    fn quotient_numerators() {
        assert_eq!(
            example_one_ideal().numerator_quotient(),
            IntPolynomial::from_i64s(&[1, 0, -5, 10, -10, 5, -1])
        );
        assert_eq!(MonomialIdeal::zero(3).unwrap().numerator_quotient(), IntPolynomial::one());
        for n in 1..8 {
            assert_eq!(
                MonomialIdeal::maximal(n).unwrap().numerator_quotient(),
                IntPolynomial::one_minus_t_pow(n)
            );
        }
    }

    #[test]
    fn ideal_numerators() {
        let mm = MonomialIdeal::maximal(5).unwrap();
        assert_eq!(
            mm.numerator_ideal(),
            &IntPolynomial::one() - &IntPolynomial::one_minus_t_pow(5)
        );
        assert!(MonomialIdeal::zero(4).unwrap().numerator_ideal().is_zero());
        let principal = MonomialIdeal::new(4, vec![Monomial::variable(4, 0)]).unwrap();
        assert_eq!(principal.numerator_ideal(), IntPolynomial::from_i64s(&[0, 1]));
    }

    #[test]
    fn unit_ideal_has_zero_quotient() {
        let i = MonomialIdeal::new(3, vec![Monomial::one(3), m(&[1, 0, 0])]).unwrap();
        assert!(i.is_unit());
        assert!(i.numerator_quotient().is_zero());
        assert_eq!(i.minimalize().generators(), &[Monomial::one(3)]);
    }

    #[test]
    fn single_generator() {
        let i = MonomialIdeal::new(3, vec![m(&[2, 0, 1])]).unwrap();
        assert_eq!(i.numerator_quotient(), IntPolynomial::from_i64s(&[1, 0, 0, -1]));
    }

    #[test]
    fn arity_is_checked() {
        assert_eq!(
            MonomialIdeal::new(3, vec![m(&[1, 0])]),
            Err(IdealError::WrongArity {
                index: 0,
                found: 2,
                expected: 3
            })
        );
        assert_eq!(MonomialIdeal::zero(0), Err(IdealError::NoVariables));
        let a = MonomialIdeal::maximal(2).unwrap();
        let b = MonomialIdeal::maximal(3).unwrap();
        assert_eq!(
            a.intersect(&b),
            Err(IdealError::RingMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn degrevlex_order() {
        // x1 > x2 > x3 in degree one; x1*x3 < x2^2 in degree two
        assert_eq!(m(&[1, 0, 0]).cmp_degrevlex(&m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(m(&[1, 0, 1]).cmp_degrevlex(&m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(m(&[0, 0, 1]).cmp_degrevlex(&m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn numerator_value_at_one_tracks_dimension() {
        // x1*x2 in 2 variables: dim R/I = 1 < 2
        let i = MonomialIdeal::new(2, vec![m(&[1, 1])]).unwrap();
        assert_eq!(i.numerator_quotient().sumcoef(), BigInt::from(0));
        assert_eq!(MonomialIdeal::zero(2).unwrap().numerator_quotient().sumcoef(), BigInt::from(1));
    }

    #[test]
    fn rendering() {
        assert_eq!(m(&[1, 0, 3]).to_string(), "x1*x3^3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }
}
