//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]; variants mirror the failure
//! modes named by each module (exact division, truncation, stabilization,
//! kernel dimension, ...).

use thiserror::Error;

/// Errors raised by the exact-arithmetic engine and the models built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `laurent_div_exact` found no exact Laurent quotient.
    #[error("polynomial division is not exact")]
    NotDivisible,
    /// A variable occurring with a negative exponent was bound to zero.
    #[error("substitution places a pole at zero for variable `{0}`")]
    PoleAtZero(String),
    /// A negative power of a non-monomial value was requested.
    #[error("cannot invert non-monomial value bound to `{0}`")]
    NotInvertible(String),
    /// An infinite product or inverse series does not terminate under the caps.
    #[error("formal series does not terminate under the given caps: {0}")]
    NonTerminating(String),
    /// Argument outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    /// A creation operator would exceed the per-site truncation bound.
    #[error("occupation cutoff {cutoff} exceeded at site ({k},{l})")]
    CutoffExceeded { k: usize, l: usize, cutoff: u32 },
    /// Plain trace did not stabilize before the maximal cutoff.
    #[error("trace did not stabilize up to cutoff {0}")]
    NotStabilized(u32),
    /// Generator kernel was not one-dimensional.
    #[error("kernel dimension is {0}, expected 1")]
    KernelDimensionError(usize),
    /// Requested TASEP sector contains no configurations.
    #[error("empty sector")]
    EmptySector,
    /// Index word is not a reduced expression.
    #[error("index word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    /// Point evaluation hit coincident values (a pole of the formula).
    #[error("degenerate evaluation point: {0}")]
    DegeneratePoint(String),
    /// Malformed textual input (polynomials, words, CLI arguments).
    #[error("parse error: {0}")]
    Parse(String),
    /// Operands built for incompatible models, ranks or registries.
    #[error("incompatible operands: {0}")]
    Incompatible(String),
}

/// Shorthand result type.
pub type Result<T> = std::result::Result<T, Error>;
