//! Acceptance gate: one test per shipped identity check, each run at its
//! documented truncation with the default configuration.
//!
//! A test here asserts that the check passes and prints one status line with
//! the check's witness, so a red entry is a statement about a concrete
//! computed coefficient rather than a missing feature.  Checks that fail do
//! so because the identity they transcribe does not hold as stated; the
//! witness pins down the first discrepant term.

use qtwist_cli::checks::{run_check, CheckConfig, CheckStatus};

fn criterion(n: usize, id: &str) {
    let r = run_check(id, &CheckConfig::default()).expect("registered check id");
    let witness = r.witness.clone().unwrap_or_default();
    println!("criterion {n:02} [{}] {}: {witness}", r.status, r.id);
    assert_eq!(
        r.status,
        CheckStatus::Pass,
        "criterion {n:02} ({id}): {witness}"
    );
}

#[test]
fn criterion_01_eisenstein_expansions() {
    criterion(1, "eisenstein");
}

#[test]
fn criterion_02_twisted_specialization() {
    criterion(2, "twisted-specialization");
}

#[test]
fn criterion_03_order_two_recursion_identity() {
    criterion(3, "trr-prime");
}

#[test]
fn criterion_04_weierstrass_cubic() {
    criterion(4, "weierstrass-cubic");
}

#[test]
fn criterion_05_two_representations_agree() {
    criterion(5, "two-representation");
}

#[test]
fn criterion_06_coordinate_change_constants() {
    criterion(6, "coordinate-change");
}

#[test]
fn criterion_07_theta_kernel_equation() {
    criterion(7, "theta-mlde");
}

#[test]
fn criterion_08_half_twist_equation() {
    criterion(8, "n4-mlde");
}

#[test]
fn criterion_09_serre_operator_identity() {
    criterion(9, "serre-operator");
}

#[test]
fn criterion_10_poisson_finiteness() {
    criterion(10, "poisson-finiteness");
}

#[test]
fn criterion_11_nilpotency_indices() {
    criterion(11, "nilpotency");
}

#[test]
fn criterion_12_kernel_reduction() {
    criterion(12, "reduction-lemma");
}
