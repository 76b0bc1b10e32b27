//! Benchmark-only crate; the measurements live in `benches/qtwist.rs` and
//! cover the hot paths: deep q-expansions, twisted Eisenstein sums, Laurent
//! products, Gröbner bases, bracket-quotient scans, and the Frobenius
//! recursion on a fractional lattice.
