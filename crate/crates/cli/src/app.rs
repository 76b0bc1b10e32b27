//! Argument parsing and command dispatch for the `qtwist` binary.
//!
//! Every subcommand is a thin shell over one library call plus a printer.
//! Twists arrive as exact data: `--theta k/N` names the root of unity
//! `e^(2 pi i k/N)` (with `1` and `-1` as shorthands) and `--lambda r/T` a
//! rational shift in `[0, 1)`; decimal input is rejected so that nothing
//! inexact enters the exact layers.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::checks::{self, CheckConfig, CheckStatus, CHECK_IDS};
use qtwist::diffring::{expand, parse_element, reduce_p, reduce_wp, TwistKey};
use qtwist::exactnum::Rational;
use qtwist::mlde::{fit_mlde, frobenius_solve, n4_mlde, theta_mlde, FitOutcome, MLDE};
use qtwist::poisson::{
    bracket_quotient_dims, degree_lattice, graded_dim, nilpotency_index, quadric_cone_presentation,
    sl2_c2_presentation, virasoro_c2_presentation, MonomialOrder, NilpotencyOutcome,
    PoissonPresentation, Stabilization,
};
use qtwist::qseries::{PuiseuxSeries, ZLaurentSeries};
use qtwist::special::{
    coord_change_coeffs, eisenstein, theta_series, twisted_eisenstein, twisted_weierstrass_qz_eval,
    twisted_weierstrass_z, ThetaKind,
};

#[derive(Parser)]
#[command(
    name = "qtwist",
    version,
    about = "Exact arithmetic for twisted modular forms and their differential algebra",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// Shared exact-twist flags.
#[derive(Args)]
struct TwistArgs {
    /// Root of unity, as 1, -1, or k/N for e^(2 pi i k/N).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    theta: String,
    /// Rational shift in [0, 1), as r/T.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    lambda: String,
}

impl TwistArgs {
    fn key(&self) -> Result<TwistKey, String> {
        parse_twist(&self.theta, &self.lambda)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the normalized Eisenstein series Ehat_2k.
    Eisenstein {
        /// The (even) weight.
        k2: u32,
        /// Number of whole q-orders to print.
        #[arg(long, default_value_t = 20)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print the twisted Eisenstein series Ghat_n at a twist.
    TwistedEisenstein {
        n: u32,
        #[command(flatten)]
        twist: TwistArgs,
        #[arg(long, default_value_t = 20)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print the z-expansion of the twisted Weierstrass function Phat_m.
    WeierstrassZ {
        /// Pole order m >= 1.
        m: u32,
        #[command(flatten)]
        twist: TwistArgs,
        /// z-orders to keep (exclusive bound on the z-power).
        #[arg(long, default_value_t = 6)]
        zord: i64,
        #[arg(long, default_value_t = 20)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate Phat_m numerically through its q_z-sum; needs |q_tau| < |q_z| < 1.
    WeierstrassEval {
        m: u32,
        #[command(flatten)]
        twist: TwistArgs,
        /// Point z as "re,im".
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Modulus tau as "re,im" with positive imaginary part.
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// Summation range |n| <= trunc.
        #[arg(long, default_value_t = 60)]
        trunc: i64,
    },
    /// Print a theta series on the eighth-integer lattice.
    Theta {
        /// One of 00, 10, 11 (Theta_{1,1} = 2 theta_00 theta_10).
        kind: String,
        #[arg(long, default_value_t = 20)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print the cylinder coordinate-change coefficients A_1 .. A_jmax.
    Coordchange {
        jmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Work with elements of the formal differential ring.
    Diffring {
        #[command(subcommand)]
        op: DiffringOp,
    },
    /// Solve, verify, and fit modular linear differential equations.
    Mlde {
        #[command(subcommand)]
        op: MldeOp,
    },
    /// Gröbner bases and quotient diagnostics for Poisson presentations.
    Poisson {
        #[command(subcommand)]
        op: PoissonOp,
    },
    /// Run identity checks and print their reports.
    Check {
        /// A check id; omit to run the whole suite.
        id: Option<String>,
        /// Twist override for the checks that quantify over twists.
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Rational shift override, as r/T.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// q-order override.
        #[arg(long)]
        trunc: Option<i64>,
        /// z-order override.
        #[arg(long)]
        zord: Option<i64>,
        /// Degree cutoff override for the Gröbner scans.
        #[arg(long)]
        cutoff: Option<i64>,
        #[arg(long)]
        json: bool,
        /// Treat inconclusive results as failures for the exit code.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum DiffringOp {
    /// Parse an element and print its canonical form.
    Parse { expr: String },
    /// Expand an element into its z/q series at a twist.
    Expand {
        expr: String,
        #[command(flatten)]
        twist: TwistArgs,
        #[arg(long, default_value_t = 6)]
        zord: i64,
        #[arg(long, default_value_t = 12)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite Phat_m in terms of the order-1 and order-2 kernels.
    ReduceP {
        m: u32,
        #[command(flatten)]
        twist: TwistArgs,
    },
    /// Rewrite wphat_n in terms of the order-2 and order-3 kernels.
    ReduceWp { n: u32 },
}

#[derive(Subcommand)]
enum MldeOp {
    /// Run the Frobenius recursion for a root of the indicial polynomial.
    Solve {
        /// Built-in equation: theta96 or n4.
        #[arg(long)]
        builtin: String,
        /// The Frobenius exponent, a rational such as 1/6.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 10)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Apply an equation to a candidate solution file and report the residual.
    Verify {
        #[arg(long)]
        builtin: String,
        /// JSON file holding the candidate series.
        #[arg(long)]
        solution: PathBuf,
        #[arg(long, default_value_t = 10)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
    /// Fit equation coefficients that annihilate the given solutions.
    Fit {
        /// JSON solution file; repeat for several solutions.
        #[arg(long = "solution", required = true)]
        solutions: Vec<PathBuf>,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        weight: i64,
        /// Generator name with optional weight, e.g. theta11, E4, or G2[-1;0]:2.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, default_value_t = 4)]
        maxweight: i64,
        #[arg(long, default_value_t = 12)]
        trunc: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PresArgs {
    /// Built-in presentation: cone, sl2-<k>, or virasoro-<p>-<p'>.
    #[arg(long)]
    builtin: Option<String>,
    /// JSON presentation file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PoissonOp {
    /// Print a Gröbner basis of the presentation ideal.
    Groebner {
        #[command(flatten)]
        pres: PresArgs,
        /// Monomial order: grlex or lex.
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Graded dimensions of R modulo the ideal, degree by degree.
    Dims {
        #[command(flatten)]
        pres: PresArgs,
        #[arg(long, default_value_t = 12)]
        cutoff: i64,
        #[arg(long)]
        json: bool,
    },
    /// Graded dimensions of R modulo ideal and brackets, with stabilization.
    BracketDims {
        #[command(flatten)]
        pres: PresArgs,
        #[arg(long, default_value_t = 12)]
        cutoff: i64,
        #[arg(long)]
        json: bool,
    },
    /// Least power of a polynomial that reduces to zero modulo the ideal.
    Nilindex {
        #[command(flatten)]
        pres: PresArgs,
        /// The polynomial, in the presentation's variables.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 12)]
        cutoff: u32,
        #[arg(long)]
        json: bool,
    },
}

/// Parses and dispatches one invocation.  Exit codes: 0 success, 1 user
/// error, 2 check failure (or, with `--strict`, an inconclusive check).
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let argv = std::iter::once("qtwist".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 1;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<u8, String> {
    match cmd {
        Cmd::Eisenstein { k2, trunc, json } => {
            let s = eisenstein(k2, trunc).map_err(|e| e.to_string())?;
            emit_series(out, &s, json);
            Ok(0)
        }
        Cmd::TwistedEisenstein {
            n,
            twist,
            trunc,
            json,
        } => {
            let tw = twist.key()?.to_parameters().map_err(|e| e.to_string())?;
            let s = twisted_eisenstein(n, &tw, trunc).map_err(|e| e.to_string())?;
            emit_series(out, &s, json);
            Ok(0)
        }
        Cmd::WeierstrassZ {
            m,
            twist,
            zord,
            trunc,
            json,
        } => {
            let tw = twist.key()?.to_parameters().map_err(|e| e.to_string())?;
            let s = twisted_weierstrass_z(m, &tw, zord, trunc).map_err(|e| e.to_string())?;
            emit_laurent(out, &s, json);
            Ok(0)
        }
        Cmd::WeierstrassEval {
            m,
            twist,
            z,
            tau,
            trunc,
        } => {
            let tw = twist.key()?.to_parameters().map_err(|e| e.to_string())?;
            let z = parse_complex(&z)?;
            let tau = parse_complex(&tau)?;
            let r =
                twisted_weierstrass_qz_eval(m, &tw, z, tau, trunc).map_err(|e| e.to_string())?;
            let v = json!({"guard": r.guard, "im": r.value.im, "re": r.value.re});
            emit(out, v.to_string());
            Ok(0)
        }
        Cmd::Theta { kind, trunc, json } => {
            let k = match kind.trim_start_matches("theta") {
                "00" => ThetaKind::Theta00,
                "10" => ThetaKind::Theta10,
                "11" => ThetaKind::Theta11,
                _ => return Err(format!("unknown theta kind '{kind}'; use 00, 10, or 11")),
            };
            let s = theta_series(k, trunc).map_err(|e| e.to_string())?;
            emit_series(out, &s, json);
            Ok(0)
        }
        Cmd::Coordchange { jmax, json } => {
            let coeffs = coord_change_coeffs(jmax);
            if json {
                let v: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                emit(out, json!({ "coeffs": v }).to_string());
            } else {
                for (j, c) in coeffs.iter().enumerate() {
                    emit(out, format!("A_{} = {c}", j + 1));
                }
            }
            Ok(0)
        }
        Cmd::Diffring { op } => run_diffring(op, out),
        Cmd::Mlde { op } => run_mlde(op, out),
        Cmd::Poisson { op } => run_poisson(op, out),
        Cmd::Check {
            id,
            theta,
            lambda,
            trunc,
            zord,
            cutoff,
            json,
            strict,
        } => run_checks(id, theta, lambda, trunc, zord, cutoff, json, strict, out),
    }
}

fn run_diffring(op: DiffringOp, out: &mut dyn Write) -> Result<u8, String> {
    match op {
        DiffringOp::Parse { expr } => {
            let e = parse_element(&expr).map_err(|e| e.to_string())?;
            emit(out, e);
            Ok(0)
        }
        DiffringOp::Expand {
            expr,
            twist,
            zord,
            trunc,
            json,
        } => {
            let key = twist.key()?;
            let e = parse_element(&expr).map_err(|e| e.to_string())?;
            let s = expand(&e, &key, zord, trunc).map_err(|e| e.to_string())?;
            emit_laurent(out, &s, json);
            Ok(0)
        }
        DiffringOp::ReduceP { m, twist } => {
            let key = twist.key()?;
            let e = reduce_p(m, 1, 2, &key).map_err(|e| e.to_string())?;
            emit(out, e);
            Ok(0)
        }
        DiffringOp::ReduceWp { n } => {
            let e = reduce_wp(n, 1, 2).map_err(|e| e.to_string())?;
            emit(out, e);
            Ok(0)
        }
    }
}

fn run_mlde(op: MldeOp, out: &mut dyn Write) -> Result<u8, String> {
    match op {
        MldeOp::Solve {
            builtin,
            alpha,
            trunc,
            json,
        } => {
            let mlde = builtin_mlde(&builtin, trunc + 2)?;
            let alpha = parse_rational(&alpha)?;
            let sol = frobenius_solve(&mlde, &alpha, trunc).map_err(|e| e.to_string())?;
            if json {
                let v = json!({
                    "alpha": alpha.to_string(),
                    "resonance": sol.resonance_flag(),
                    "series": serde_json::to_value(sol.series()).unwrap(),
                });
                emit(out, v.to_string());
            } else {
                emit(out, sol.series());
                if sol.resonance_flag() {
                    emit(out, "resonance: a logarithmic partner solution exists");
                }
            }
            Ok(0)
        }
        MldeOp::Verify {
            builtin,
            solution,
            trunc,
            json,
        } => {
            let mlde = builtin_mlde(&builtin, trunc + 2)?;
            let sol = read_series(&solution)?;
            let residual = mlde.verify(&sol, trunc);
            let leading = checks::ps_witness(&residual);
            let failed = !residual.is_zero();
            if json {
                let v = json!({
                    "residual": leading,
                    "status": if failed { "fail" } else { "pass" },
                });
                emit(out, v.to_string());
            } else if failed {
                emit(
                    out,
                    format!("residual leading term: {}", leading.unwrap_or_default()),
                );
            } else {
                emit(out, format!("residual: 0 below q^{trunc}"));
            }
            Ok(if failed { 2 } else { 0 })
        }
        MldeOp::Fit {
            solutions,
            order,
            weight,
            gens,
            maxweight,
            trunc,
            json,
        } => {
            let sols: Result<Vec<PuiseuxSeries>, String> =
                solutions.iter().map(|p| read_series(p)).collect();
            let gens: Result<Vec<(PuiseuxSeries, i64)>, String> =
                gens.iter().map(|g| builtin_generator(g, trunc)).collect();
            let outcome =
                fit_mlde(&sols?, order, weight, &gens?, maxweight).map_err(|e| e.to_string())?;
            let (name, mlde, nullity) = match outcome {
                FitOutcome::Unique(m) => ("unique", Some(m), None),
                FitOutcome::Underdetermined { mlde, nullity } => {
                    ("underdetermined", Some(mlde), Some(nullity))
                }
                FitOutcome::Infeasible => ("infeasible", None, None),
            };
            if json {
                let coeffs = mlde.as_ref().map(|m| {
                    m.coeffs()
                        .iter()
                        .map(|c| serde_json::to_value(c).unwrap())
                        .collect::<Vec<Value>>()
                });
                let v = json!({"coeffs": coeffs, "nullity": nullity, "outcome": name});
                emit(out, v.to_string());
            } else {
                emit(out, format!("outcome: {name}"));
                if let Some(m) = &mlde {
                    for (p, c) in m.coeffs().iter().enumerate() {
                        emit(out, format!("g_{} = {c}", p + 1));
                    }
                }
                if let Some(n) = nullity {
                    emit(out, format!("nullity: {n}"));
                }
            }
            Ok(0)
        }
    }
}

fn run_poisson(op: PoissonOp, out: &mut dyn Write) -> Result<u8, String> {
    match op {
        PoissonOp::Groebner { pres, order, json } => {
            let mut p = resolve_presentation(&pres)?;
            if let Some(o) = order {
                p = p.reorder(parse_order(&o)?);
            }
            let names = p.names();
            let basis: Vec<String> = p
                .groebner()
                .basis()
                .iter()
                .map(|g| g.format_with(names))
                .collect();
            if json {
                let o = match p.order() {
                    MonomialOrder::GrLex => "grlex",
                    MonomialOrder::Lex => "lex",
                };
                emit(out, json!({"basis": basis, "order": o}).to_string());
            } else {
                for g in basis {
                    emit(out, g);
                }
            }
            Ok(0)
        }
        PoissonOp::Dims { pres, cutoff, json } => {
            let p = resolve_presentation(&pres)?;
            let lat = degree_lattice(p.weights()).map_err(|e| e.to_string())?;
            let mut dims = Vec::new();
            for k in 0..=cutoff.max(0) * lat {
                let d = Rational::new(k, lat);
                dims.push(graded_dim(p.groebner(), p.weights(), &d).map_err(|e| e.to_string())?);
            }
            if json {
                emit(out, json!({"dims": dims, "step_denom": lat}).to_string());
            } else {
                emit(out, format!("graded dims in steps of 1/{lat}: {dims:?}"));
            }
            Ok(0)
        }
        PoissonOp::BracketDims { pres, cutoff, json } => {
            let p = resolve_presentation(&pres)?;
            let qd = bracket_quotient_dims(&p, cutoff).map_err(|e| e.to_string())?;
            let status = match qd.status {
                Stabilization::Stabilized => "stabilized",
                Stabilization::Inconclusive => "inconclusive",
            };
            if json {
                let v = json!({
                    "dims": qd.dims,
                    "status": status,
                    "step_denom": qd.step_denom,
                    "total": qd.total(),
                });
                emit(out, v.to_string());
            } else {
                emit(
                    out,
                    format!(
                        "bracket-quotient dims in steps of 1/{}: {:?} ({status}, total {})",
                        qd.step_denom,
                        qd.dims,
                        qd.total()
                    ),
                );
            }
            Ok(0)
        }
        PoissonOp::Nilindex {
            pres,
            poly,
            cutoff,
            json,
        } => {
            let p = resolve_presentation(&pres)?;
            let f = p.parse(&poly).map_err(|e| e.to_string())?;
            let outcome = nilpotency_index(&p, &f, cutoff).map_err(|e| e.to_string())?;
            match outcome {
                NilpotencyOutcome::Index(i) => {
                    if json {
                        emit(out, json!({"cutoff": Value::Null, "index": i}).to_string());
                    } else {
                        emit(out, format!("index: {i}"));
                    }
                }
                NilpotencyOutcome::CutoffExceeded { cutoff } => {
                    if json {
                        emit(
                            out,
                            json!({"cutoff": cutoff, "index": Value::Null}).to_string(),
                        );
                    } else {
                        emit(out, format!("no vanishing power up to {cutoff}"));
                    }
                }
            }
            Ok(0)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_checks(
    id: Option<String>,
    theta: Option<String>,
    lambda: Option<String>,
    trunc: Option<i64>,
    zord: Option<i64>,
    cutoff: Option<i64>,
    json: bool,
    strict: bool,
    out: &mut dyn Write,
) -> Result<u8, String> {
    let twist = match (&theta, &lambda) {
        (None, None) => None,
        _ => Some(parse_twist(
            theta.as_deref().unwrap_or("1"),
            lambda.as_deref().unwrap_or("0"),
        )?),
    };
    let cfg = CheckConfig {
        qorder: trunc,
        zorder: zord,
        cutoff,
        twist,
        tol: None,
    };
    let reports = match id {
        Some(id) => {
            let r = checks::run_check(&id, &cfg).ok_or_else(|| {
                format!("unknown check '{id}'; available: {}", CHECK_IDS.join(", "))
            })?;
            vec![r]
        }
        None => checks::check_all(&cfg),
    };
    if json {
        let v: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
        emit(out, Value::Array(v).to_string());
    } else {
        for r in &reports {
            emit(out, format!("{:<24} {}", r.id, r.status));
            if let Some(w) = &r.witness {
                emit(out, format!("    {w}"));
            }
        }
        if reports.len() > 1 {
            let count = |s: CheckStatus| reports.iter().filter(|r| r.status == s).count();
            emit(
                out,
                format!(
                    "passed {}  failed {}  inconclusive {}",
                    count(CheckStatus::Pass),
                    count(CheckStatus::Fail),
                    count(CheckStatus::Inconclusive)
                ),
            );
        }
    }
    let failed = reports.iter().any(|r| r.status == CheckStatus::Fail);
    let open = reports
        .iter()
        .any(|r| r.status == CheckStatus::Inconclusive);
    Ok(if failed || (strict && open) { 2 } else { 0 })
}

// ---------------------------------------------------------------------------
// helpers

fn emit(out: &mut dyn Write, s: impl Display) {
    let _ = writeln!(out, "{s}");
}

fn emit_series(out: &mut dyn Write, s: &PuiseuxSeries, json: bool) {
    if json {
        emit(out, serde_json::to_string(s).expect("series serialize"));
    } else {
        emit(out, s);
    }
}

fn emit_laurent(out: &mut dyn Write, s: &ZLaurentSeries, json: bool) {
    if json {
        let terms: Vec<Value> = s
            .terms()
            .map(|(k, c)| json!([k, serde_json::to_value(c).expect("series serialize")]))
            .collect();
        emit(
            out,
            json!({"terms": terms, "ztrunc": s.ztrunc()}).to_string(),
        );
    } else {
        emit(out, s);
    }
}

fn read_series(path: &Path) -> Result<PuiseuxSeries, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: parse error: {e}", path.display()))
}

fn builtin_mlde(name: &str, qorder: i64) -> Result<MLDE, String> {
    match name {
        "theta96" => theta_mlde(qorder).map_err(|e| e.to_string()),
        "n4" => n4_mlde(qorder).map_err(|e| e.to_string()),
        _ => Err(format!(
            "unknown built-in equation '{name}'; available: n4, theta96"
        )),
    }
}

/// Resolves a generator spec `name[:weight]` into a series and its weight.
fn builtin_generator(spec: &str, qorder: i64) -> Result<(PuiseuxSeries, i64), String> {
    let (name, weight) = match spec.rsplit_once(':') {
        Some((n, w)) => (
            n,
            Some(
                w.parse::<i64>()
                    .map_err(|_| format!("bad generator weight '{w}'"))?,
            ),
        ),
        None => (spec, None),
    };
    let half = TwistKey::new(1, 2, 0, 1)
        .expect("theta = -1 is a valid twist")
        .to_parameters()
        .expect("half twist parameters");
    let (series, default_weight) = match name {
        "theta11" => (
            theta_series(ThetaKind::Theta11, qorder).map_err(|e| e.to_string())?,
            4,
        ),
        "E4" => (eisenstein(4, qorder).map_err(|e| e.to_string())?, 4),
        "E6" => (eisenstein(6, qorder).map_err(|e| e.to_string())?, 6),
        "G2[-1;0]" => (
            twisted_eisenstein(2, &half, qorder).map_err(|e| e.to_string())?,
            2,
        ),
        "G4[-1;0]" => (
            twisted_eisenstein(4, &half, qorder).map_err(|e| e.to_string())?,
            4,
        ),
        _ => {
            return Err(format!(
                "unknown generator '{name}'; available: E4, E6, G2[-1;0], G4[-1;0], theta11"
            ))
        }
    };
    Ok((series, weight.unwrap_or(default_weight)))
}

fn resolve_presentation(args: &PresArgs) -> Result<PoissonPresentation, String> {
    match (&args.builtin, &args.file) {
        (Some(_), Some(_)) | (None, None) => Err("give exactly one of --builtin and --file".into()),
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            PoissonPresentation::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (Some(name), None) => {
            if name == "cone" {
                return Ok(quadric_cone_presentation());
            }
            if let Some(k) = name.strip_prefix("sl2-") {
                let k: u32 = k
                    .parse()
                    .map_err(|_| format!("bad sl2 level in '{name}'"))?;
                return Ok(sl2_c2_presentation(k));
            }
            if let Some(rest) = name.strip_prefix("virasoro-") {
                if let Some((p, pp)) = rest.split_once('-') {
                    let p: u32 = p.parse().map_err(|_| format!("bad p in '{name}'"))?;
                    let pp: u32 = pp.parse().map_err(|_| format!("bad p' in '{name}'"))?;
                    return virasoro_c2_presentation(p, pp).map_err(|e| e.to_string());
                }
            }
            Err(format!(
                "unknown built-in presentation '{name}'; available: cone, sl2-<k>, virasoro-<p>-<p'>"
            ))
        }
    }
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    match s {
        "grlex" => Ok(MonomialOrder::GrLex),
        "lex" => Ok(MonomialOrder::Lex),
        _ => Err(format!("unknown monomial order '{s}'; use grlex or lex")),
    }
}

fn parse_twist(theta: &str, lambda: &str) -> Result<TwistKey, String> {
    let (a, n) = parse_theta(theta)?;
    let (r, t) = parse_lambda(lambda)?;
    TwistKey::new(a, n, r, t).map_err(|e| e.to_string())
}

fn parse_theta(s: &str) -> Result<(i64, u32), String> {
    let s = s.trim();
    if s.contains('.') {
        return Err(format!(
            "theta '{s}' is not exact; write k/N for e^(2 pi i k/N)"
        ));
    }
    if let Some((num, den)) = s.split_once('/') {
        let a: i64 = num
            .parse()
            .map_err(|_| format!("bad theta numerator '{num}'"))?;
        let n: u32 = den
            .parse()
            .map_err(|_| format!("bad theta denominator '{den}'"))?;
        if n == 0 {
            return Err("theta denominator must be positive".into());
        }
        Ok((a, n))
    } else {
        match s.parse::<i64>() {
            Ok(1) => Ok((0, 1)),
            Ok(-1) => Ok((1, 2)),
            _ => Err(format!(
                "theta '{s}' is not a root of unity; use 1, -1, or k/N for e^(2 pi i k/N)"
            )),
        }
    }
}

fn parse_lambda(s: &str) -> Result<(u32, u32), String> {
    let s = s.trim();
    if s.contains('.') {
        return Err(format!("lambda '{s}' is not exact; write r/T"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let r: i64 = num
            .parse()
            .map_err(|_| format!("bad lambda numerator '{num}'"))?;
        let t: i64 = den
            .parse()
            .map_err(|_| format!("bad lambda denominator '{den}'"))?;
        if t <= 0 {
            return Err("lambda denominator must be positive".into());
        }
        Ok((r.rem_euclid(t) as u32, t as u32))
    } else {
        s.parse::<i64>()
            .map(|_| (0, 1))
            .map_err(|_| format!("bad lambda '{s}'"))
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.contains('.') {
        return Err(format!("'{s}' is not exact; write p/q"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let p: i64 = num.parse().map_err(|_| format!("bad numerator '{num}'"))?;
        let q: i64 = den
            .parse()
            .map_err(|_| format!("bad denominator '{den}'"))?;
        if q == 0 {
            return Err("denominator must be nonzero".into());
        }
        Ok(Rational::new(p, q))
    } else {
        s.parse::<i64>()
            .map(Rational::from_int)
            .map_err(|_| format!("bad rational '{s}'"))
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("bad complex number '{s}'; write re,im"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|_| format!("bad real part '{re}'"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|_| format!("bad imaginary part '{im}'"))?;
    Ok(Complex64::new(re, im))
}
