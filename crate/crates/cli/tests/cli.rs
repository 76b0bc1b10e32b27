//! End-to-end behavior of the command-line interface: exit codes, output
//! determinism, twist parsing, and file handling.

use std::fs;

use qtwist_cli::run;

fn qtwist(args: &[&str]) -> (u8, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn eisenstein_json_is_byte_deterministic() {
    let (c1, out1, _) = qtwist(&["eisenstein", "4", "--trunc", "5", "--json"]);
    let (c2, out2, _) = qtwist(&["eisenstein", "4", "--trunc", "5", "--json"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
    assert_eq!(
        out1.trim_end(),
        r#"{"D":1,"terms":[[0,"1/720"],[1,"1/3"],[2,"3"],[3,"28/3"],[4,"73/3"]],"trunc":5}"#
    );
}

#[test]
fn help_and_version_exit_zero() {
    let (c, out, _) = qtwist(&["--help"]);
    assert_eq!(c, 0);
    assert!(out.contains("eisenstein"));
    let (c, out, _) = qtwist(&["--version"]);
    assert_eq!(c, 0);
    assert!(out.contains("qtwist"));
}

#[test]
fn user_errors_exit_one() {
    let (c, _, _) = qtwist(&["no-such-subcommand"]);
    assert_eq!(c, 1);
    let (c, _, err) = qtwist(&["check", "no-such-check"]);
    assert_eq!(c, 1);
    assert!(err.contains("unknown check"));
    let (c, _, _) = qtwist(&["eisenstein", "3"]);
    assert_eq!(c, 1, "odd weight is a user error");
}

#[test]
fn floating_twist_input_is_rejected() {
    let (c, _, err) = qtwist(&["twisted-eisenstein", "2", "--theta", "0.5"]);
    assert_eq!(c, 1);
    assert!(err.contains("not exact"));
    let (c, _, err) = qtwist(&["twisted-eisenstein", "2", "--lambda", "0.25"]);
    assert_eq!(c, 1);
    assert!(err.contains("not exact"));
    let (c, _, err) = qtwist(&["twisted-eisenstein", "2", "--theta", "2"]);
    assert_eq!(c, 1);
    assert!(err.contains("root of unity"));
}

#[test]
fn twist_fractions_normalize() {
    let (c1, out1, _) = qtwist(&[
        "twisted-eisenstein",
        "2",
        "--theta",
        "1/3",
        "--lambda",
        "2/6",
    ]);
    let (c2, out2, _) = qtwist(&[
        "twisted-eisenstein",
        "2",
        "--theta",
        "4/3",
        "--lambda",
        "1/3",
    ]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
}

#[test]
fn solution_files_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (c, out, _) = qtwist(&[
        "mlde",
        "solve",
        "--builtin",
        "theta96",
        "--alpha",
        "0",
        "--trunc",
        "4",
        "--json",
    ]);
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["resonance"], serde_json::json!(false));

    let good = dir.path().join("good.json");
    fs::write(&good, v["series"].to_string()).unwrap();
    let (c, out, _) = qtwist(&[
        "mlde",
        "verify",
        "--builtin",
        "theta96",
        "--solution",
        good.to_str().unwrap(),
        "--trunc",
        "3",
    ]);
    assert_eq!(c, 0, "verify of a genuine solution: {out}");

    // Corrupt one coefficient: the residual must surface with its leading term.
    let mut bad = v["series"].clone();
    bad["terms"][1][1] = serde_json::json!("-7");
    let bad_path = dir.path().join("bad.json");
    fs::write(&bad_path, bad.to_string()).unwrap();
    let (c, out, _) = qtwist(&[
        "mlde",
        "verify",
        "--builtin",
        "theta96",
        "--solution",
        bad_path.to_str().unwrap(),
        "--trunc",
        "3",
    ]);
    assert_eq!(c, 2);
    assert!(out.contains("residual leading term"), "got: {out}");
}

#[test]
fn malformed_files_report_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{\"D\":8,\"terms\":[[0,").unwrap();
    let (c, _, err) = qtwist(&[
        "mlde",
        "verify",
        "--builtin",
        "theta96",
        "--solution",
        path.to_str().unwrap(),
    ]);
    assert_eq!(c, 1);
    assert!(err.contains("line") && err.contains("column"), "got: {err}");

    let pres = dir.path().join("pres.json");
    fs::write(&pres, "{\"vars\": [").unwrap();
    let (c, _, err) = qtwist(&["poisson", "groebner", "--file", pres.to_str().unwrap()]);
    assert_eq!(c, 1);
    assert!(!err.is_empty());
}

#[test]
fn presentation_files_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pres.json");
    fs::write(
        &path,
        r#"{"bracket":{},"ideal":["x^2"],"vars":[{"name":"x","weight":"2"}]}"#,
    )
    .unwrap();
    let (c, out, _) = qtwist(&["poisson", "groebner", "--file", path.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert_eq!(out.trim_end(), "x^2");
    let (c, out, _) = qtwist(&[
        "poisson",
        "dims",
        "--file",
        path.to_str().unwrap(),
        "--cutoff",
        "4",
        "--json",
    ]);
    assert_eq!(c, 0);
    assert_eq!(out.trim_end(), r#"{"dims":[1,0,1,0,0],"step_denom":1}"#);
}

#[test]
fn poisson_builtins_expose_the_examples() {
    let (c, out, _) = qtwist(&[
        "poisson",
        "bracket-dims",
        "--builtin",
        "cone",
        "--cutoff",
        "12",
        "--json",
    ]);
    assert_eq!(c, 0);
    assert_eq!(
        out.trim_end(),
        r#"{"dims":[1,0,1,0,0,0,0,0,0,0,0,0,0],"status":"stabilized","step_denom":1,"total":2}"#
    );
    let (c, out, _) = qtwist(&[
        "poisson",
        "nilindex",
        "--builtin",
        "sl2-1",
        "--poly",
        "4*e*f + h^2",
        "--json",
    ]);
    assert_eq!(c, 0);
    assert_eq!(out.trim_end(), r#"{"cutoff":null,"index":2}"#);
    let (c, out, _) = qtwist(&[
        "poisson",
        "nilindex",
        "--builtin",
        "cone",
        "--poly",
        "4*x*y + z^2",
        "--cutoff",
        "8",
    ]);
    assert_eq!(
        c, 0,
        "an exceeded cutoff is a computed outcome, not a failure"
    );
    assert!(out.contains("no vanishing power"));
}

#[test]
fn inconclusive_checks_gate_only_under_strict() {
    let (c, out, _) = qtwist(&["check", "poisson-finiteness", "--cutoff", "4"]);
    assert_eq!(c, 0);
    assert!(out.contains("inconclusive"));
    let (c, _, _) = qtwist(&["check", "poisson-finiteness", "--cutoff", "4", "--strict"]);
    assert_eq!(c, 2);
}

#[test]
fn check_reports_are_deterministic_json() {
    let (c1, out1, _) = qtwist(&["check", "eisenstein", "--json"]);
    let (c2, out2, _) = qtwist(&["check", "eisenstein", "--json"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
    let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
    assert_eq!(v[0]["id"], serde_json::json!("eisenstein"));
    assert_eq!(v[0]["status"], serde_json::json!("pass"));
    assert_eq!(v[0]["witness"], serde_json::Value::Null);
}

#[test]
fn diffring_display_round_trips() {
    let (c, out, _) = qtwist(&["diffring", "parse", "3*E4 + P1(1,2)^2 + G[2;th=-1,la=0]"]);
    assert_eq!(c, 0);
    let canonical = out.trim_end().to_string();
    let (c, out2, _) = qtwist(&["diffring", "parse", &canonical]);
    assert_eq!(c, 0);
    assert_eq!(out2.trim_end(), canonical);
}

#[test]
fn weierstrass_eval_emits_the_numeric_triple() {
    let (c, out, _) = qtwist(&[
        "weierstrass-eval",
        "2",
        "--theta",
        "-1",
        "--z",
        "0.05,0.1",
        "--tau",
        "0.1,1.2",
    ]);
    assert_eq!(c, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["re", "im", "guard"] {
        assert!(v[key].is_f64(), "missing field {key} in {out}");
    }
    // The guard must certify convergence of the truncated sum.
    assert!(v["guard"].as_f64().unwrap() < 1e-10);
}
