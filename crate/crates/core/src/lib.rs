//! Exact arithmetic for twisted modular forms and their differential algebra.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`] — arbitrary-precision rationals, cyclotomic numbers in the
//!   power basis, Bernoulli numbers/polynomials, and polynomials in a formal
//!   weight-graded `pi` symbol.
//! * [`qseries`] — sparse Puiseux series in `q` over cyclotomic rationals with
//!   sound truncation tracking, and Laurent series in `z` whose coefficients
//!   are Puiseux series.
//! * [`special`] — Eisenstein series (twisted and untwisted), twisted
//!   Weierstrass building blocks in both the `q_z`-sum and `z`-expansion
//!   representations, theta series, and the exponential coordinate-change
//!   coefficients with the induced action on the Virasoro vacuum sector.
//! * [`diffring`] — the formal differential ring generated by Eisenstein and
//!   Weierstrass symbols, its `z`-derivation, reduction of higher kernels,
//!   and first-order operators of heat type.
//! * [`mlde`] — Serre derivations, modular linear differential equations,
//!   Frobenius solutions on fractional exponent lattices, and coefficient
//!   fitting.
//! * [`poisson`] — graded Poisson algebra presentations, Buchberger Gröbner
//!   bases, and dimension diagnostics for bracket quotients.
//!
//! All series arithmetic is exact; floating point enters only through the
//! explicit `eval_complex` evaluation routines used for numeric cross-checks.

pub mod diffring;
pub mod exactnum;
pub mod mlde;
pub mod poisson;
pub mod qseries;
pub mod special;

pub use diffring::{DiffRingElement, TwistKey};
pub use exactnum::{CyclotomicNumber, GaussianRational, PiPolynomial, Rational};
pub use mlde::{FrobeniusSolution, MLDE};
pub use poisson::{GroebnerBasis, MultiPoly, PoissonPresentation, QuotientDims};
pub use qseries::{PuiseuxSeries, ZLaurentSeries};
pub use special::TwistParameters;
