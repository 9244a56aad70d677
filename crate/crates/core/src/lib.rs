//! Hilbert depth of finitely generated graded modules over `K[x_1, ..., x_n]`.
//!
//! The depth is read off the Hilbert–Poincaré series: it is the largest `e`
//! for which `(1-t)^e * HP_M(t)` has no negative coefficient. [`depth::hdepth`]
//! decides this exactly from finitely many coefficients; [`module`] and
//! [`ideal`] produce the series for monomial ideals, their quotients, twisted
//! free modules and direct sums.
//!
//! ```
//! use hdepth::{hdepth, HilbertSeries, IntPolynomial, Depth};
//!
//! let g = IntPolynomial::from_i64s(&[1, 1, -4, 6, -4, 1]);
//! let r = hdepth(&HilbertSeries::new(g, 5, 0)).unwrap();
//! assert_eq!(r.value, Depth::Finite(3));
//! ```

pub mod bigpoly;
pub mod cli;
pub mod depth;
pub mod ideal;
pub mod module;
pub mod series;
pub mod testkit;

pub use bigpoly::{inv_one_minus_t_pow, Coefficient, IntPolynomial, PolyError, TruncatedSeries};
pub use depth::{check_upper_bound, hdepth, BoundProbe, Depth, HdepthError, HdepthResult, TraceStep};
pub use ideal::{IdealError, Monomial, MonomialIdeal};
pub use module::{ModuleError, MonomialModuleExpr};
pub use series::HilbertSeries;
