//! Modules assembled from monomial ideals, quotients, twisted free modules and
//! direct sums, and their Hilbert series.

use num_bigint::BigInt;
use thiserror::Error;

use crate::bigpoly::IntPolynomial;
use crate::ideal::MonomialIdeal;
use crate::series::HilbertSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("direct sum mixes rings with {expected} and {found} variables")]
    MixedRings { expected: usize, found: usize },
    #[error("a direct sum needs at least one summand")]
    EmptySum,
    #[error("free module rank must be positive")]
    ZeroRank,
    #[error("a free module needs a ring with at least one variable")]
    NoVariables,
    #[error("the zero module has no dimension")]
    ZeroModule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialModuleExpr {
    /// `R/I`
    Quotient(MonomialIdeal),
    /// `I` as an `R`-module
    Ideal(MonomialIdeal),
    /// `R(-shift)^rank`
    FreeTwist {
        n_vars: usize,
        rank: u64,
        shift: i64,
    },
    DirectSum(Vec<MonomialModuleExpr>),
}

/// `t^offset * numerator / (1-t)^n_vars`, before any cancellation.
struct Unreduced {
    numerator: IntPolynomial,
    n_vars: usize,
    offset: i64,
}

impl MonomialModuleExpr {
    /// `R^free_rank ⊕ m` in `n_vars` variables; `free_rank = 0` gives `m` alone.
    pub fn free_plus_maximal(n_vars: usize, free_rank: u64) -> Result<Self, ModuleError> {
        let m = MonomialIdeal::maximal(n_vars).map_err(|_| ModuleError::NoVariables)?;
        let ideal = MonomialModuleExpr::Ideal(m);
        if free_rank == 0 {
            return Ok(ideal);
        }
        Ok(MonomialModuleExpr::DirectSum(vec![
            MonomialModuleExpr::FreeTwist {
                n_vars,
                rank: free_rank,
                shift: 0,
            },
            ideal,
        ]))
    }

    pub fn n_vars(&self) -> Result<usize, ModuleError> {
        match self {
            MonomialModuleExpr::Quotient(i) | MonomialModuleExpr::Ideal(i) => Ok(i.n_vars()),
            MonomialModuleExpr::FreeTwist { n_vars, .. } => Ok(*n_vars),
            MonomialModuleExpr::DirectSum(parts) => {
                let (first, rest) = parts.split_first().ok_or(ModuleError::EmptySum)?;
                let expected = first.n_vars()?;
                for p in rest {
                    let found = p.n_vars()?;
                    if found != expected {
                        return Err(ModuleError::MixedRings { expected, found });
                    }
                }
                Ok(expected)
            }
        }
    }

    fn unreduced(&self) -> Result<Unreduced, ModuleError> {
        match self {
            MonomialModuleExpr::Quotient(i) => Ok(Unreduced {
                numerator: i.numerator_quotient(),
                n_vars: i.n_vars(),
                offset: 0,
            }),
            MonomialModuleExpr::Ideal(i) => Ok(Unreduced {
                numerator: i.numerator_ideal(),
                n_vars: i.n_vars(),
                offset: 0,
            }),
            &MonomialModuleExpr::FreeTwist {
                n_vars,
                rank,
                shift,
            } => {
                if rank == 0 {
                    return Err(ModuleError::ZeroRank);
                }
                if n_vars == 0 {
                    return Err(ModuleError::NoVariables);
                }
                Ok(Unreduced {
                    numerator: IntPolynomial::monomial(BigInt::from(rank), shift.max(0) as usize),
                    n_vars,
                    offset: shift.min(0),
                })
            }
            MonomialModuleExpr::DirectSum(parts) => {
                let n_vars = self.n_vars()?;
                let parts = parts
                    .iter()
                    .map(MonomialModuleExpr::unreduced)
                    .collect::<Result<Vec<_>, _>>()?;
                let offset = parts.iter().map(|p| p.offset).min().unwrap_or(0);
                let numerator = parts.iter().fold(IntPolynomial::zero(), |acc, p| {
                    &acc + &p.numerator.shift((p.offset - offset) as usize)
                });
                Ok(Unreduced {
                    numerator,
                    n_vars,
                    offset,
                })
            }
        }
    }

    /// Numerator over the common denominator `(1-t)^n_vars`, with its offset.
    pub fn unreduced_numerator(&self) -> Result<(IntPolynomial, i64), ModuleError> {
        self.unreduced().map(|u| (u.numerator, u.offset))
    }

    /// Reduced Hilbert series; its `denom_exp` is the Krull dimension.
    pub fn series(&self) -> Result<HilbertSeries, ModuleError> {
        let u = self.unreduced()?;
        Ok(HilbertSeries::reduced(u.numerator, u.n_vars, u.offset))
    }

    /// Krull dimension, as the pole order of the series at `t = 1`.
    pub fn dim(&self) -> Result<usize, ModuleError> {
        let s = self.series()?;
        if s.is_zero() {
            return Err(ModuleError::ZeroModule);
        }
        Ok(s.denom_exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::{hdepth, Depth};
    use crate::ideal::Monomial;

    fn example_one_quotient() -> MonomialModuleExpr {
        let x = MonomialIdeal::new(6, vec![Monomial::variable(6, 0)]).unwrap();
        let ys = MonomialIdeal::new(6, (1..6).map(|i| Monomial::variable(6, i)).collect()).unwrap();
        MonomialModuleExpr::Quotient(x.intersect(&ys).unwrap())
    }

    #[test]
    fn maximal_ideal_series() {
        let s = MonomialModuleExpr::free_plus_maximal(6, 0).unwrap().series().unwrap();
        assert_eq!(
            s.numerator(),
            &(&IntPolynomial::one() - &IntPolynomial::one_minus_t_pow(6))
        );
        assert_eq!(s.denom_exp(), 6);
    }

    #[test]
    fn free_plus_maximal_in_six_variables() {
        let s = MonomialModuleExpr::free_plus_maximal(6, 1).unwrap().series().unwrap();
        assert_eq!(
            s.numerator(),
            &(&IntPolynomial::constant(BigInt::from(2)) - &IntPolynomial::one_minus_t_pow(6))
        );
        assert_eq!(s.denom_exp(), 6);
        assert_eq!(hdepth(&s).unwrap().value, Depth::Finite(4));
    }

    #[test]
    fn example_one_dimension() {
        let e = example_one_quotient();
        assert_eq!(e.dim().unwrap(), 5);
        assert_eq!(
            e.series().unwrap().numerator(),
            &IntPolynomial::from_i64s(&[1, 1, -4, 6, -4, 1])
        );
        assert_eq!(hdepth(&e.series().unwrap()).unwrap().value, Depth::Finite(3));
    }

    #[test]
    fn dimensions_of_simple_modules() {
        for n in 1..6 {
            assert_eq!(MonomialModuleExpr::free_plus_maximal(n, 0).unwrap().dim(), Ok(n));
            let free = MonomialModuleExpr::FreeTwist {
                n_vars: n,
                rank: 3,
                shift: 2,
            };
            assert_eq!(free.dim(), Ok(n));
        }
    }

    #[test]
    fn negative_twist_goes_to_offset() {
        let e = MonomialModuleExpr::DirectSum(vec![
            MonomialModuleExpr::FreeTwist {
                n_vars: 2,
                rank: 1,
                shift: -3,
            },
            MonomialModuleExpr::FreeTwist {
                n_vars: 2,
                rank: 2,
                shift: 1,
            },
        ]);
        let (num, offset) = e.unreduced_numerator().unwrap();
        assert_eq!(offset, -3);
        assert_eq!(num, IntPolynomial::from_i64s(&[1, 0, 0, 0, 2]));
        assert_eq!(e.series().unwrap().offset(), -3);
    }

    #[test]
    fn zero_module() {
        let e = MonomialModuleExpr::Ideal(MonomialIdeal::zero(3).unwrap());
        assert!(e.series().unwrap().is_zero());
        assert_eq!(e.dim(), Err(ModuleError::ZeroModule));
        assert_eq!(hdepth(&e.series().unwrap()).unwrap().value, Depth::Infinite);
    }

    #[test]
    fn invalid_sums() {
        let mixed = MonomialModuleExpr::DirectSum(vec![
            MonomialModuleExpr::free_plus_maximal(2, 0).unwrap(),
            MonomialModuleExpr::free_plus_maximal(3, 0).unwrap(),
        ]);
        assert_eq!(
            mixed.series(),
            Err(ModuleError::MixedRings {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            MonomialModuleExpr::DirectSum(vec![]).series(),
            Err(ModuleError::EmptySum)
        );
        let zero_rank = MonomialModuleExpr::FreeTwist {
            n_vars: 2,
            rank: 0,
            shift: 0,
        };
        assert_eq!(zero_rank.series(), Err(ModuleError::ZeroRank));
    }

    #[test]
    fn direct_sum_adds_unreduced_numerators() {
        let a = example_one_quotient();
        let b = MonomialModuleExpr::free_plus_maximal(6, 2).unwrap();
        let (na, _) = a.unreduced_numerator().unwrap();
        let (nb, _) = b.unreduced_numerator().unwrap();
        let (sum, _) = MonomialModuleExpr::DirectSum(vec![a, b])
            .unreduced_numerator()
            .unwrap();
        assert_eq!(sum, &na + &nb);
    }
}
