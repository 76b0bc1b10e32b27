//! Twisted Weierstrass functions `P̂_m[θ;λ]` in the `z`-expansion and the
//! numeric `q_z`-representation, plus the classical `℘̂`-family.

use num_complex::Complex64;

use crate::exactnum::{binomial, CyclotomicNumber, Rational};
use crate::qseries::{PuiseuxSeries, ZLaurentSeries};

use super::eisenstein::eisenstein;
use super::twisted::{twisted_eisenstein, TwistParameters};
use super::SpecialError;

/// Numeric value of the `q_z`-representation together with a convergence
/// guard: the magnitude of the last retained summand, after the prefactor.
#[derive(Debug, Clone, Copy)]
pub struct QzEval {
    pub value: Complex64,
    pub guard: f64,
}

/// The hatted twisted Weierstrass function `P̂_m[θ;λ]` as a `z`-Laurent series
/// with exact `q`-series coefficients:
///
/// `P̂_m = 1/z^m + (−1)^m Σ_{n≥m} C(n−1, m−1) Ĝ_n[θ;λ] z^{n−m}`,
///
/// truncated before `z^zord`, each coefficient known below `q^qorder`.
pub fn twisted_weierstrass_z(
    m: u32,
    tw: &TwistParameters,
    zord: i64,
    qorder: i64,
) -> Result<ZLaurentSeries, SpecialError> {
    if m < 1 {
        return Err(SpecialError::BadDegree(
            "pole order must be at least 1".into(),
        ));
    }
    if zord < 0 {
        return Err(SpecialError::BadDegree(format!(
            "z-order must be nonnegative, got {zord}"
        )));
    }
    let d = tw.lambda_denom();
    let mut terms: Vec<(i64, PuiseuxSeries)> = vec![(-(m as i64), PuiseuxSeries::one(d))];
    let sign = if m % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    };
    for k in 0..zord {
        let n = m as i64 + k;
        let c = &Rational::from_bigint(binomial(n as u64 - 1, m as u64 - 1)) * &sign;
        let g = twisted_eisenstein(n as u32, tw, qorder)?;
        terms.push((k, g.scale_rational(&c)));
    }
    Ok(ZLaurentSeries::from_terms(terms, zord))
}

/// The classical hatted Weierstrass family:
///
/// `℘̂_m = 1/z^m + (−1)^m Σ_{even n≥4} C(n−1, m−1) Ê_n z^{n−m}`.
///
/// `℘̂₁` is the odd zeta-type primitive, `℘̂₂` the Weierstrass function itself,
/// and `℘̂_{m+1} = −(1/m)·d℘̂_m/dz`.
pub fn weierstrass_wp(m: u32, zord: i64, qorder: i64) -> Result<ZLaurentSeries, SpecialError> {
    if m < 1 {
        return Err(SpecialError::BadDegree(
            "pole order must be at least 1".into(),
        ));
    }
    if zord < 0 {
        return Err(SpecialError::BadDegree(format!(
            "z-order must be nonnegative, got {zord}"
        )));
    }
    let mut terms: Vec<(i64, PuiseuxSeries)> = vec![(-(m as i64), PuiseuxSeries::one(1))];
    let sign = if m % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    };
    for k in 0..zord {
        let n = m as i64 + k;
        if n < 4 || n % 2 != 0 {
            continue;
        }
        let c = &Rational::from_bigint(binomial(n as u64 - 1, m as u64 - 1)) * &sign;
        let e = eisenstein(n as u32, qorder)?;
        terms.push((k, e.scale_rational(&c)));
    }
    Ok(ZLaurentSeries::from_terms(terms, zord))
}

/// The constant relating the two P-type normalizations: `1/(1−θ⁻¹)` when
/// `m = 1`, `λ = 0`, and `θ ≠ 1`; zero in every other case.  The trivial pair
/// at `m = 1` is a genuine pole and is rejected.
pub fn p_type_correction(m: u32, tw: &TwistParameters) -> Result<CyclotomicNumber, SpecialError> {
    if m < 1 {
        return Err(SpecialError::BadDegree(
            "pole order must be at least 1".into(),
        ));
    }
    if m == 1 && tw.lambda().is_zero() {
        if tw.theta().is_one() {
            return Err(SpecialError::TrivialTwist(
                "correction constant has a pole at theta = 1, lambda = 0".into(),
            ));
        }
        let ti = tw.theta().inverse().expect("root of unity");
        let c = CyclotomicNumber::one()
            .sub(&ti)
            .inverse()
            .expect("theta != 1");
        return Ok(c);
    }
    Ok(CyclotomicNumber::zero())
}

/// Evaluates the `q_z`-representation of `P̂_m[θ;λ]` numerically:
///
/// `P̂_m(z, τ) = ((−1)^m/(m−1)!) Σ_{n ∈ λ+ℤ} n^{m−1} q_z^n/(1−θ⁻¹ q_τ^n)`,
///
/// summed over `|n| ≤ trunc`.  The `n < 0` summands are rewritten as
/// `−θ·n^{m−1} q_z^n q_τ^{−n}/(1−θ q_τ^{−n})` so that both tails decay inside
/// the region `|q_τ| < |q_z| < 1`; powers are taken as `e^{2πin·}` to avoid
/// branch ambiguity.  For `λ = 0` the `n = 0` summand is the regularized
/// constant `1/(1−θ⁻¹)`, present only at `m = 1` and dropped entirely at the
/// trivial pair.
pub fn twisted_weierstrass_qz_eval(
    m: u32,
    tw: &TwistParameters,
    z: Complex64,
    tau: Complex64,
    trunc: i64,
) -> Result<QzEval, SpecialError> {
    if m < 1 {
        return Err(SpecialError::BadDegree(
            "pole order must be at least 1".into(),
        ));
    }
    if trunc < 1 {
        return Err(SpecialError::BadDegree(format!(
            "trunc must be positive, got {trunc}"
        )));
    }
    let two_pi_i = Complex64::new(0.0, std::f64::consts::TAU);
    let qz_abs = (two_pi_i * z).exp().norm();
    let qtau_abs = (two_pi_i * tau).exp().norm();
    if !(qtau_abs < qz_abs && qz_abs < 1.0) {
        return Err(SpecialError::RegionViolation { qz_abs, qtau_abs });
    }
    let theta = tw.theta().eval_complex();
    let lambda = tw.lambda().to_f64();
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut boundary = 0.0f64;
    for k in -trunc..=trunc {
        let n = k as f64 + lambda;
        let s = if n == 0.0 {
            if tw.theta().is_one() {
                continue; // the primed sum omits the singular term
            }
            if m == 1 {
                (one - theta.inv()).inv()
            } else {
                continue;
            }
        } else if n > 0.0 {
            let qzn = (two_pi_i * n * z).exp();
            let qtn = (two_pi_i * n * tau).exp();
            n.powi(m as i32 - 1) * qzn / (one - qtn / theta)
        } else {
            let num = (two_pi_i * n * (z - tau)).exp();
            let qtmn = (two_pi_i * (-n) * tau).exp();
            -n.powi(m as i32 - 1) * theta * num / (one - theta * qtmn)
        };
        sum += s;
        if k.abs() == trunc {
            boundary = boundary.max(s.norm());
        }
    }
    let mut pref = 1.0f64;
    for i in 1..m as i64 {
        pref /= i as f64;
    }
    if m % 2 == 1 {
        pref = -pref;
    }
    Ok(QzEval {
        value: pref * sum,
        guard: pref.abs() * boundary,
    })
}
