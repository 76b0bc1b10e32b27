//! Untwisted Eisenstein series in the hatted normalisation.

use crate::exactnum::{bernoulli_number, factorial, CyclotomicNumber, Rational};
use crate::qseries::PuiseuxSeries;

use super::SpecialError;

/// The weight-`k2` Eisenstein series `Ê_{k2} = G_{k2}/(2πi)^{k2}` as an exact
/// `q`-series on the integer lattice:
///
/// `Ê_{k2} = −B_{k2}/k2! + (2/(k2−1)!) · Σ_{n≥1} σ_{k2−1}(n) qⁿ`,
///
/// known below `q^qorder`.  `k2` must be even and at least 2.
pub fn eisenstein(k2: u32, qorder: i64) -> Result<PuiseuxSeries, SpecialError> {
    if k2 < 2 || k2 % 2 != 0 {
        return Err(SpecialError::BadDegree(format!(
            "Eisenstein weight must be even and >= 2, got {k2}"
        )));
    }
    if qorder < 1 {
        return Err(SpecialError::BadDegree(format!(
            "q-order must be positive, got {qorder}"
        )));
    }
    let mut terms: Vec<(i64, CyclotomicNumber)> = Vec::new();
    let constant = -bernoulli_number(k2 as usize) / factorial(k2 as u64);
    terms.push((0, CyclotomicNumber::from_rational(constant)));
    let prefactor = Rational::from_int(2) / factorial(k2 as u64 - 1);
    for n in 1..qorder {
        let mut sigma = Rational::zero();
        for d in 1..=n {
            if n % d == 0 {
                sigma += &Rational::from_int(d)
                    .pow(k2 as i32 - 1)
                    .expect("positive base");
            }
        }
        terms.push((n, CyclotomicNumber::from_rational(&prefactor * &sigma)));
    }
    Ok(PuiseuxSeries::from_terms(1, terms, qorder))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(f: &PuiseuxSeries, e: i64) -> Rational {
        f.coefficient(e).unwrap().as_rational().unwrap()
    }

    #[test]
    fn e2_leading_terms() {
        let e2 = eisenstein(2, 6).unwrap();
        assert_eq!(coeff(&e2, 0), Rational::new(-1, 12));
        assert_eq!(coeff(&e2, 1), Rational::from_int(2));
        assert_eq!(coeff(&e2, 2), Rational::from_int(6));
        assert_eq!(coeff(&e2, 3), Rational::from_int(8));
        assert_eq!(coeff(&e2, 4), Rational::from_int(14));
        assert_eq!(coeff(&e2, 5), Rational::from_int(12));
    }

    #[test]
    fn constants_are_minus_bernoulli_over_factorial() {
        let expect = [
            (2, Rational::new(-1, 12)),
            (4, Rational::new(1, 720)),
            (6, Rational::new(-1, 30240)),
            (8, Rational::new(1, 1209600)),
            (12, Rational::new(691, 1307674368000)),
        ];
        for (k2, c) in expect {
            let e = eisenstein(k2, 2).unwrap();
            assert_eq!(coeff(&e, 0), c, "weight {k2}");
        }
    }

    #[test]
    fn rejects_odd_or_small_weight() {
        assert!(eisenstein(3, 5).is_err());
        assert!(eisenstein(0, 5).is_err());
    }
}
