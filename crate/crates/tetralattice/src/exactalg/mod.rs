//! Exact arithmetic: rational Laurent polynomials over a global variable
//! registry, capped formal power series, and q-series utilities.

pub mod poly;
pub mod qseries;
pub mod series;
pub mod vars;

/// Arbitrary-precision rational coefficients.
pub type Rational = num_rational::BigRational;

pub use poly::{LaurentPoly, Monomial};
pub use qseries::{q_binomial, q_factorial, q_integer, q_pochhammer, q_pochhammer_series};
pub use series::{Cap, FormalSeries, DEFAULT_CAP};
pub use vars::{indexed_vars, VarId};

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
