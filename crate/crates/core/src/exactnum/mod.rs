//! Exact scalar arithmetic: rationals, cyclotomic numbers, Bernoulli data,
//! and formal `pi`-polynomials.
//!
//! Everything here is immutable value arithmetic over `ℚ` and its cyclotomic
//! extensions `ℚ(ζ_N)`.  Cyclotomic numbers are stored in the power basis
//! `1, ζ, …, ζ^{φ(N)−1}` modulo the `N`-th cyclotomic polynomial, and values
//! with different conductors are compared and combined after embedding into
//! the lcm conductor.

mod bernoulli;
mod cyclotomic;
mod pi_poly;
mod rational;

pub use bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_poly, binomial, factorial};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicNumber};
pub use pi_poly::{GaussianRational, PiPolynomial};
pub use rational::Rational;

use thiserror::Error;

/// Errors arising from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactnumError {
    /// Division by the zero element of `ℚ` or `ℚ(ζ_N)`.
    #[error("division by zero")]
    DivisionByZero,
    /// A string failed to parse as a rational "p/q".
    #[error("malformed rational literal: {0:?}")]
    BadRational(String),
    /// Cyclotomic coordinates of the wrong length for the stated conductor.
    #[error("conductor {conductor} needs {expected} coordinates, got {got}")]
    BadCoordinates {
        conductor: u32,
        expected: usize,
        got: usize,
    },
    /// Conductor outside the supported range (must be >= 1).
    #[error("invalid conductor {0}")]
    BadConductor(u32),
}
