//! Command-line front end for the `qtwist` library.
//!
//! Two layers:
//!
//! * [`checks`] — a suite of self-contained identity checks.  Each check
//!   recomputes both sides of one documented identity from scratch and
//!   reports the first discrepancy it finds; reports carry a stable id, the
//!   identity in plain text, a pass/fail/inconclusive status, and a witness.
//! * [`run`] — argument parsing and dispatch for the `qtwist` binary:
//!   series printers, numeric evaluation, differential-ring reductions, MLDE
//!   solving/verification/fitting, Poisson diagnostics, and the check
//!   runner.
//!
//! All output is deterministic: JSON objects are emitted with sorted keys
//! and series terms in canonical order, so identical inputs produce
//! byte-identical bytes.  Exit codes: 0 success, 1 user error, 2 check
//! failure (and, under `--strict`, inconclusive checks).

pub mod checks;

mod app;

pub use app::run;
