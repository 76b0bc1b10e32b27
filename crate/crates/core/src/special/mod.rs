//! Special functions: Eisenstein series (plain and twisted), Weierstrass-type
//! kernels in two representations, theta series, and the exponential
//! coordinate change with its action on the Virasoro vacuum sector.
//!
//! Everything is normalised so that a weight-`w` object is divided by
//! `(2πi)^w` and the local variable is `ẑ = 2πi·z`; in these units all series
//! coefficients are cyclotomic rationals and every identity is exact.  The
//! `q`-expansions use the convention `B₁ = −1/2`, under which the constant
//! term of the degree-`n` twisted series is `−B_n(λ)/n!`.

mod coordchange;
mod eisenstein;
mod theta;
mod twisted;
mod weierstrass;

pub use coordchange::{coord_change_coeffs, u_one_on_omega, virasoro_commutator, UOneOmega};
pub use eisenstein::eisenstein;
pub use theta::{theta_series, ThetaKind};
pub use twisted::{twisted_eisenstein, TwistParameters};
pub use weierstrass::{
    p_type_correction, twisted_weierstrass_qz_eval, twisted_weierstrass_z, weierstrass_wp, QzEval,
};

use thiserror::Error;

/// Errors from the special-function layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    /// Weight/degree outside the defined range (odd or nonpositive where an
    /// even positive weight is required, etc.).
    #[error("invalid weight or degree: {0}")]
    BadDegree(String),
    /// Twist parameters outside their domain.
    #[error("invalid twist: {0}")]
    BadTwist(String),
    /// Numeric evaluation outside `|q_τ| < |q_z| < 1`.
    #[error(
        "point outside the annulus |q_tau| < |q_z| < 1: |q_z| = {qz_abs}, |q_tau| = {qtau_abs}"
    )]
    RegionViolation { qz_abs: f64, qtau_abs: f64 },
    /// The requested value only exists for nontrivial twists.
    #[error("undefined for the trivial twist: {0}")]
    TrivialTwist(String),
    #[error(transparent)]
    Qseries(#[from] crate::qseries::QseriesError),
    #[error(transparent)]
    Exactnum(#[from] crate::exactnum::ExactnumError),
}
