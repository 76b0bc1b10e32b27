//! Graded Poisson polynomial algebras: Gröbner bases over ℚ, quotient
//! dimensions, and the degree-wise size of `R/({R,R} + I)` — the finiteness
//! diagnostic for a C₂-style algebra presented by generators, a bracket
//! table, and a weight-homogeneous ideal.
//!
//! A [`PoissonPresentation`] carries positively-weighted variables, the
//! brackets `{x_i, x_j}` (extended to polynomials as a biderivation), and an
//! ideal; antisymmetry, the weight rule `wt{f,g} = wt f + wt g − 1`, and the
//! Jacobi identity on variable triples are all checked at construction.
//! Dimension reports never claim finiteness outright: a vanishing tail inside
//! the inspected window is labelled as stabilization evidence, and a window
//! too short to show one comes back inconclusive.

mod dims;
mod groebner;
mod poly;
mod presentation;

pub use dims::{
    bracket_quotient_dims, degree_lattice, graded_dim, module_bracket_quotient_dims,
    nilpotency_index, NilpotencyOutcome, QuotientDims, Stabilization,
};
pub use groebner::{buchberger, GroebnerBasis};
pub use poly::{parse_poly, MonomialOrder, MultiPoly};
pub use presentation::{
    highest_weight_module, quadric_cone_presentation, sl2_c2_presentation,
    virasoro_c2_presentation, ModulePresentation, PoissonPresentation,
};

use thiserror::Error;

/// Errors from the Poisson layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PoissonError {
    /// A presentation that violates antisymmetry, the bracket grading,
    /// Jacobi, or basic shape requirements.
    #[error("invalid presentation: {0}")]
    BadPresentation(String),
    /// Malformed polynomial or presentation text.
    #[error("parse error: {0}")]
    Parse(String),
    /// A structurally invalid query (wrong variable count, inhomogeneous
    /// input, empty generating set, ...).
    #[error("invalid input: {0}")]
    BadInput(String),
}
