//! Jacobi theta constants on the `q^{1/8}` lattice.

use crate::exactnum::CyclotomicNumber;
use crate::qseries::PuiseuxSeries;

use super::SpecialError;

/// Selects a theta constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    /// `ϑ₀₀ = Σ_{n∈ℤ} q^{n²/2}`.
    Theta00,
    /// `ϑ₁₀ = Σ_{n∈ℤ} q^{(n+1/2)²/2}`.
    Theta10,
    /// The rank-one lattice series `Θ₁,₁ = 2·ϑ₀₀·ϑ₁₀`.
    Theta11,
}

/// Expands a theta constant below `q^qorder`, always on denominator 8 so the
/// three kinds live on a common lattice.
pub fn theta_series(kind: ThetaKind, qorder: i64) -> Result<PuiseuxSeries, SpecialError> {
    if qorder < 1 {
        return Err(SpecialError::BadDegree(format!(
            "q-order must be positive, got {qorder}"
        )));
    }
    let trunc = qorder
        .checked_mul(8)
        .ok_or_else(|| SpecialError::BadDegree(format!("q-order overflow: {qorder}")))?;
    let two = CyclotomicNumber::from_int(2);
    match kind {
        ThetaKind::Theta00 => {
            let mut terms = vec![(0i64, CyclotomicNumber::one())];
            for n in 1i64.. {
                let e = 4 * n * n; // (n²/2)·8
                if e >= trunc {
                    break;
                }
                terms.push((e, two.clone()));
            }
            Ok(PuiseuxSeries::from_terms(8, terms, trunc))
        }
        ThetaKind::Theta10 => {
            let mut terms = Vec::new();
            for n in 0i64.. {
                let e = (2 * n + 1) * (2 * n + 1); // ((n+1/2)²/2)·8
                if e >= trunc {
                    break;
                }
                terms.push((e, two.clone()));
            }
            Ok(PuiseuxSeries::from_terms(8, terms, trunc))
        }
        ThetaKind::Theta11 => {
            let a = theta_series(ThetaKind::Theta00, qorder)?;
            let b = theta_series(ThetaKind::Theta10, qorder)?;
            Ok(a.mul(&b).scale(&two))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn units(f: &PuiseuxSeries, e: i64) -> Rational {
        f.coefficient(e).unwrap().as_rational().unwrap()
    }

    #[test]
    fn theta00_expansion() {
        let t = theta_series(ThetaKind::Theta00, 5).unwrap();
        assert_eq!(t.denom(), 8);
        assert_eq!(units(&t, 0), Rational::from_int(1));
        assert_eq!(units(&t, 4), Rational::from_int(2)); // q^{1/2}
        assert_eq!(units(&t, 16), Rational::from_int(2)); // q²
        assert_eq!(units(&t, 36), Rational::from_int(2)); // q^{9/2}
        assert!(t.coefficient(8).unwrap().is_zero());
    }

    #[test]
    fn theta10_expansion() {
        let t = theta_series(ThetaKind::Theta10, 5).unwrap();
        assert_eq!(units(&t, 1), Rational::from_int(2)); // q^{1/8}
        assert_eq!(units(&t, 9), Rational::from_int(2)); // q^{9/8}
        assert_eq!(units(&t, 25), Rational::from_int(2)); // q^{25/8}
        assert!(t.coefficient(0).unwrap().is_zero());
        assert!(t.coefficient(4).unwrap().is_zero());
    }

    #[test]
    fn theta11_product() {
        let t = theta_series(ThetaKind::Theta11, 5).unwrap();
        assert_eq!(t.support_min(), Some(1)); // leading 4q^{1/8}
        assert_eq!(units(&t, 1), Rational::from_int(4));
        assert_eq!(units(&t, 5), Rational::from_int(8));
        assert_eq!(units(&t, 9), Rational::from_int(4));
        assert_eq!(units(&t, 13), Rational::from_int(8));
        assert_eq!(units(&t, 25), Rational::from_int(12));
        // Full q-window survives the product: trunc stays at 8·qorder.
        assert_eq!(t.trunc(), 40);
    }
}
