//! Modular linear differential equations: the Serre derivation ladder,
//! Frobenius solutions on fractional exponent lattices, and coefficient
//! fitting against a weighted generator set.
//!
//! An equation is stored in ladder form `∂^m f + Σ_p g_p ∂^{m−p} f = 0`,
//! where `∂` climbs in weight steps of two from the equation's base weight;
//! [`MLDE::to_dq_form`] rewrites it in powers of `q·d/dq` for indicial and
//! recursion work.  Everything is exact; resonant (logarithmic) solutions are
//! reported, never constructed.

mod equation;
mod fit;
mod frobenius;
mod linalg;
mod serre;

pub use equation::{n4_mlde, rational_roots, theta_mlde, MLDE};
pub use fit::{fit_mlde, FitOutcome};
pub use frobenius::{frobenius_solve, FrobeniusSolution};
pub use serre::{iterated_serre, serre_derive};

use thiserror::Error;

use crate::exactnum::Rational;

/// Errors from the MLDE layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MldeError {
    /// Structurally invalid equation or query.
    #[error("invalid MLDE input: {0}")]
    BadInput(String),
    /// The Frobenius recursion hit a zero indicial value with a nonzero
    /// right-hand side; a logarithmic solution would be needed.
    #[error("resonance at exponent {exponent}: recursion is inconsistent there")]
    Resonance { exponent: Rational },
    /// A Frobenius exponent that does not annihilate the indicial polynomial.
    #[error("{alpha} is not a root of the indicial polynomial")]
    NotARoot { alpha: Rational },
    #[error(transparent)]
    Qseries(#[from] crate::qseries::QseriesError),
    #[error(transparent)]
    Special(#[from] crate::special::SpecialError),
}
