//! A graded differential polynomial ring on Eisenstein and Weierstrass-type
//! symbols, with expansion into concrete series and first-order operators.
//!
//! Generators: untwisted `EHat(2k)`, twisted `GHat(k)` carrying an explicit
//! twist key, and the two-point kernels `P1`, `P2`, `WP1`, `WP2`, `WP3`
//! indexed by ordered point pairs.  Elements are kept in distributed normal
//! form (sorted monomials over cyclotomic coefficients); the ring is treated
//! as free, so equality is syntactic.  The `z`-derivation acts through fixed
//! closure rules, and [`expand`] maps symbols to the series of
//! [`crate::special`], which is also how closure rules are audited.

mod element;
mod expand;
mod operator;
mod parse;

pub use element::{reduce_p, reduce_wp, DiffRingElement, Gen, TwistKey};
pub use expand::{expand, expand_q};
pub use operator::{
    build_o_operator, compose_q, ComposedOperator, DerivationSymbol, FormalOperator,
};
pub use parse::parse_element;

use thiserror::Error;

/// Errors from the differential-ring layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiffringError {
    /// Malformed generator (odd Eisenstein weight, equal pair indices, …).
    #[error("invalid generator: {0}")]
    BadGenerator(String),
    /// A weight query on an inhomogeneous element; lists the weights present.
    #[error("inhomogeneous element with weights {0:?}")]
    Inhomogeneous(Vec<i64>),
    /// A twisted generator whose key differs from the expansion twist.
    #[error("twist mismatch: element uses {found}, expansion uses {expected}")]
    TwistMismatch { expected: String, found: String },
    /// An operation restricted to `z`-independent elements met a kernel symbol.
    #[error("element depends on z: {0}")]
    ZDependent(String),
    /// A derivative that the closure rules do not cover.
    #[error("no closure rule: {0}")]
    NotClosed(String),
    /// Syntax error in the textual element format.
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Special(#[from] crate::special::SpecialError),
}
