//! Twisted Eisenstein series `Ĝ_n[θ;λ]`.
//!
//! The twist is a pair `(θ, λ)` with `θ` a root of unity (the multiplier) and
//! `λ ∈ [0,1)` a rational shift, so the series lives on the `q^{1/D}` lattice
//! with `D` the denominator of `λ`.  The defining sums are expanded
//! geometrically, which keeps every coefficient in `ℚ(θ)`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactnum::{bernoulli_poly, factorial, CyclotomicNumber, Rational};
use crate::qseries::PuiseuxSeries;

use super::SpecialError;

/// A twisting datum `(θ, λ)`: a root of unity `θ` and a shift `λ ∈ [0,1)`.
///
/// The pair is *trivial* when `θ = 1` and `λ = 0`; several regularized
/// constants below exist only away from the trivial pair.
#[derive(Debug, Clone, PartialEq)]
pub struct TwistParameters {
    theta: CyclotomicNumber,
    lambda: Rational,
    lam_num: i64,
    lam_den: i64,
    order: u32,
}

impl TwistParameters {
    /// Builds a twist, checking that `θ` is a root of unity and `λ ∈ [0,1)`.
    pub fn new(theta: CyclotomicNumber, lambda: Rational) -> Result<Self, SpecialError> {
        if theta.is_zero() {
            return Err(SpecialError::BadTwist("theta must be nonzero".into()));
        }
        // Roots of unity in ℚ(ζ_N) are ±ζ_N^k, so their order divides lcm(2, N).
        let bound = 2i64.lcm(&(theta.conductor() as i64));
        if !theta.pow(bound).map(|p| p.is_one()).unwrap_or(false) {
            return Err(SpecialError::BadTwist(format!(
                "theta = {theta} is not a root of unity"
            )));
        }
        let order = (1..=bound)
            .filter(|m| bound % m == 0)
            .find(|&m| theta.pow(m).map(|p| p.is_one()).unwrap_or(false))
            .expect("bound itself works") as u32;
        if lambda.is_negative() || !(&lambda - &Rational::one()).is_negative() {
            return Err(SpecialError::BadTwist(format!(
                "lambda must lie in [0,1), got {lambda}"
            )));
        }
        let lam_den = lambda
            .denom()
            .to_i64()
            .filter(|&d| d >= 1 && d <= u32::MAX as i64)
            .ok_or_else(|| {
                SpecialError::BadTwist(format!("lambda denominator too large: {lambda}"))
            })?;
        let lam_num = lambda.numer().to_i64().ok_or_else(|| {
            SpecialError::BadTwist(format!("lambda numerator too large: {lambda}"))
        })?;
        Ok(TwistParameters {
            theta,
            lambda,
            lam_num,
            lam_den,
            order,
        })
    }

    /// The trivial pair `(1, 0)`.
    pub fn untwisted() -> Self {
        TwistParameters {
            theta: CyclotomicNumber::one(),
            lambda: Rational::zero(),
            lam_num: 0,
            lam_den: 1,
            order: 1,
        }
    }

    /// The multiplier `θ`.
    pub fn theta(&self) -> &CyclotomicNumber {
        &self.theta
    }

    /// The shift `λ`.
    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    /// The multiplicative order of `θ`.
    pub fn theta_order(&self) -> u32 {
        self.order
    }

    /// The denominator `D` of `λ`; series in this twist live on `q^{1/D}ℤ`.
    pub fn lambda_denom(&self) -> u32 {
        self.lam_den as u32
    }

    /// The numerator of `λ` over the lattice denominator.
    pub fn lambda_numer(&self) -> i64 {
        self.lam_num
    }

    /// True exactly for the pair `(θ, λ) = (1, 0)`.
    pub fn is_trivial(&self) -> bool {
        self.theta.is_one() && self.lambda.is_zero()
    }

    /// `θ^j` for any integer `j`, reduced through the order of `θ`.
    pub fn theta_pow(&self, j: i64) -> CyclotomicNumber {
        let e = j.rem_euclid(self.order as i64);
        self.theta.pow(e).expect("nonnegative exponent")
    }
}

impl fmt::Display for TwistParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.theta, self.lambda)
    }
}

/// The weight-`n` twisted Eisenstein series `Ĝ_n[θ;λ]` as an exact series on
/// the `q^{1/D}` lattice, known below `q^qorder`:
///
/// `Ĝ_n = −B_n(λ)/n! + (1/(n−1)!) Σ′_{r≥0} (r+λ)^{n−1} θ⁻¹q^{r+λ}/(1−θ⁻¹q^{r+λ})
///        + ((−1)^n/(n−1)!) Σ_{r≥1} (r−λ)^{n−1} θq^{r−λ}/(1−θq^{r−λ})`,
///
/// where the primed sum drops `r = 0` for the trivial pair, and for `λ = 0`,
/// `θ ≠ 1` the `r = 0` summand is the regularized constant `θ⁻¹/(1−θ⁻¹)`
/// (present only at `n = 1`, reading `0⁰ = 1`).  By convention `Ĝ₀ = −1`.
pub fn twisted_eisenstein(
    n: u32,
    tw: &TwistParameters,
    qorder: i64,
) -> Result<PuiseuxSeries, SpecialError> {
    if qorder < 1 {
        return Err(SpecialError::BadDegree(format!(
            "q-order must be positive, got {qorder}"
        )));
    }
    let d = tw.lam_den;
    if n == 0 {
        return Ok(PuiseuxSeries::from_rational(
            d as u32,
            Rational::from_int(-1),
        ));
    }
    let trunc = qorder
        .checked_mul(d)
        .ok_or_else(|| SpecialError::BadDegree(format!("q-order overflow: {qorder}")))?;
    let p = tw.lam_num;
    let ord = tw.theta_order() as usize;
    let mut theta_pows = Vec::with_capacity(ord);
    theta_pows.push(CyclotomicNumber::one());
    for _ in 1..ord {
        let next = theta_pows.last().unwrap().mul(&tw.theta);
        theta_pows.push(next);
    }
    let pow_of = |j: i64| &theta_pows[j.rem_euclid(ord as i64) as usize];
    let inv_fact = factorial(n as u64 - 1)
        .inverse()
        .expect("factorial nonzero");

    let mut acc: BTreeMap<i64, CyclotomicNumber> = BTreeMap::new();
    let mut push = |e: i64, c: CyclotomicNumber| {
        let entry = acc.entry(e).or_insert_with(CyclotomicNumber::zero);
        *entry = entry.add(&c);
    };

    push(
        0,
        CyclotomicNumber::from_rational(
            (-bernoulli_poly(n as usize, &tw.lambda)) / factorial(n as u64),
        ),
    );
    if n == 1 && p == 0 && !tw.theta.is_one() {
        let ti = tw.theta.inverse().expect("root of unity");
        let c = ti
            .div(&CyclotomicNumber::one().sub(&ti))
            .expect("theta != 1");
        push(0, c);
    }

    // Σ′ branch: exponents r + λ with r ≥ 0, geometric in θ⁻¹q^{r+λ}.
    let r0: i64 = if p == 0 { 1 } else { 0 };
    for r in r0.. {
        let a = r * d + p;
        if a >= trunc {
            break;
        }
        let w = Rational::new(a, d).pow(n as i32 - 1).expect("nonneg power");
        let w = &w * &inv_fact;
        for j in 1i64.. {
            let e = j * a;
            if e >= trunc {
                break;
            }
            push(e, pow_of(-j).scale(&w));
        }
    }
    // Mirror branch: exponents r − λ with r ≥ 1, geometric in θq^{r−λ}.
    let sign = if n % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    };
    for r in 1i64.. {
        let b = r * d - p;
        if b >= trunc {
            break;
        }
        let w = Rational::new(b, d).pow(n as i32 - 1).expect("nonneg power");
        let w = &(&w * &inv_fact) * &sign;
        for j in 1i64.. {
            let e = j * b;
            if e >= trunc {
                break;
            }
            push(e, pow_of(j).scale(&w));
        }
    }
    Ok(PuiseuxSeries::from_terms(d as u32, acc, trunc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::eisenstein;

    fn minus_one_twist() -> TwistParameters {
        TwistParameters::new(CyclotomicNumber::from_int(-1), Rational::zero()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_pairs() {
        assert!(TwistParameters::new(CyclotomicNumber::from_int(2), Rational::zero()).is_err());
        assert!(TwistParameters::new(CyclotomicNumber::zero(), Rational::zero()).is_err());
        assert!(TwistParameters::new(CyclotomicNumber::one(), Rational::new(3, 2)).is_err());
        assert!(TwistParameters::new(CyclotomicNumber::one(), Rational::new(-1, 4)).is_err());
        assert!(TwistParameters::new(CyclotomicNumber::one(), Rational::one()).is_err());
    }

    #[test]
    fn theta_order_and_powers() {
        let tw = TwistParameters::new(
            CyclotomicNumber::root_of_unity(3, 1).unwrap(),
            Rational::new(1, 3),
        )
        .unwrap();
        assert_eq!(tw.theta_order(), 3);
        assert!(tw.theta_pow(-1).mul(tw.theta()).is_one());
        assert_eq!(tw.lambda_denom(), 3);
        assert!(!tw.is_trivial());
        assert!(TwistParameters::untwisted().is_trivial());
    }

    #[test]
    fn trivial_twist_even_weights_match_eisenstein() {
        let tw = TwistParameters::untwisted();
        for n in [2u32, 4, 6, 8] {
            let g = twisted_eisenstein(n, &tw, 20).unwrap();
            let e = eisenstein(n, 20).unwrap();
            assert_eq!(g, e, "weight {n}");
        }
    }

    #[test]
    fn trivial_twist_weight_one_is_a_half() {
        let g = twisted_eisenstein(1, &TwistParameters::untwisted(), 30).unwrap();
        let half = PuiseuxSeries::from_terms(
            1,
            [(0, CyclotomicNumber::from_rational(Rational::new(1, 2)))],
            30,
        );
        assert_eq!(g, half);
    }

    #[test]
    fn trivial_twist_odd_weights_vanish_in_q() {
        let tw = TwistParameters::untwisted();
        for n in [3u32, 5, 7, 9] {
            let g = twisted_eisenstein(n, &tw, 20).unwrap();
            assert!(g.is_zero(), "weight {n}: {g}");
        }
    }

    #[test]
    fn half_twist_weight_one_vanishes() {
        let g = twisted_eisenstein(1, &minus_one_twist(), 25).unwrap();
        assert!(g.is_zero(), "{g}");
    }

    #[test]
    fn half_twist_weight_two_series() {
        let g = twisted_eisenstein(2, &minus_one_twist(), 4).unwrap();
        let r = |e: i64| g.coefficient(e).unwrap().as_rational().unwrap();
        assert_eq!(r(0), Rational::new(-1, 12));
        assert_eq!(r(1), Rational::from_int(-2));
        assert_eq!(r(2), Rational::from_int(-2));
        assert_eq!(r(3), Rational::from_int(-8));
    }

    #[test]
    fn cube_root_twist_constant_term() {
        let tw = TwistParameters::new(
            CyclotomicNumber::root_of_unity(3, 1).unwrap(),
            Rational::new(1, 3),
        )
        .unwrap();
        let g = twisted_eisenstein(1, &tw, 5).unwrap();
        assert_eq!(g.denom(), 3);
        assert_eq!(
            g.coefficient(0).unwrap().as_rational().unwrap(),
            Rational::new(1, 6)
        );
        // q^{1/3} carries θ⁻¹ = ζ₃²; at q^{2/3} the two sums cancel (θ⁻² = θ);
        // q¹ sees θ⁻³ = 1.
        let z3 = CyclotomicNumber::root_of_unity(3, 2).unwrap();
        assert_eq!(g.coefficient(1).unwrap(), z3);
        assert!(g.coefficient(2).unwrap().is_zero());
        assert!(g.coefficient(3).unwrap().is_one());
    }

    #[test]
    fn weight_zero_convention() {
        let g = twisted_eisenstein(0, &minus_one_twist(), 5).unwrap();
        assert!(g.is_exact());
        assert_eq!(
            g.constant_term().unwrap().as_rational().unwrap(),
            Rational::from_int(-1)
        );
    }
}
