//! Sparse exact `q`-series with fractional exponents, and `z`-Laurent series
//! over them.
//!
//! A [`PuiseuxSeries`] lives on the exponent lattice `(1/D)ℤ`: exponents are
//! stored as integers in units of `1/D`.  Every series carries a truncation
//! order `trunc` (exclusive, same units): coefficients at exponents `< trunc`
//! are known exactly, everything above is unknown.  Arithmetic propagates the
//! weakest sound truncation, so a product of an order-`10` series with one of
//! order-`5` never claims more than it knows.  Exact polynomials carry a
//! sentinel truncation and never degrade their partners beyond the usual
//! shift rule.
//!
//! A [`ZLaurentSeries`] is a finite-window Laurent series in a second formal
//! variable `z` whose coefficients are `PuiseuxSeries` in `q`, used for local
//! expansions of Weierstrass-type kernels.

mod laurent;
mod puiseux;

pub use laurent::ZLaurentSeries;
pub use puiseux::{EvalOutcome, PuiseuxSeries, EXACT_TRUNC};

use thiserror::Error;

/// Errors from series arithmetic and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QseriesError {
    /// Inversion of a series whose leading coefficient is zero or unknown.
    #[error("series is not invertible: {0}")]
    NonInvertible(String),
    /// Numeric evaluation requested outside the open unit disk.
    #[error("evaluation point has |q0| = {0} >= 1")]
    OutsideDisk(f64),
    /// Numeric evaluation tail estimate exceeded the caller's guard.
    #[error("tail guard {guard:e} exceeds limit {limit:e}")]
    GuardExceeded { guard: f64, limit: f64 },
    /// An operation on an exact series needs an explicit truncation order.
    #[error("operation requires a finite truncation order")]
    TruncationRequired,
    /// A coefficient beyond the known window was requested.
    #[error("coefficient at exponent {exp}/{denom} is beyond the known window")]
    UnknownCoefficient { exp: i64, denom: u32 },
    #[error("exact arithmetic failure: {0}")]
    Exactnum(#[from] crate::exactnum::ExactnumError),
}
