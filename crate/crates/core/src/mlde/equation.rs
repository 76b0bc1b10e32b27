//! The MLDE container, its `q·d/dq` normal form, indicial analysis, and the
//! two built-in second-order equations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::exactnum::{CyclotomicNumber, Rational};
use crate::qseries::PuiseuxSeries;
use crate::special::{eisenstein, theta_series, twisted_eisenstein, ThetaKind, TwistParameters};

use super::serre::iterated_serre;
use super::MldeError;

/// A modular linear differential equation `∂^m f + Σ_p g_p ∂^{m−p} f = 0`
/// with `∂` the Serre ladder rising from the stored base weight, solutions
/// sought on the exponent lattice `(1/D)·ℤ`.
#[derive(Debug, Clone, PartialEq)]
pub struct MLDE {
    order: usize,
    weight: i64,
    coeffs: Vec<PuiseuxSeries>,
    lattice: u32,
}

impl MLDE {
    /// Builds an equation from `g_1..g_m`.  Coefficients must be supported on
    /// nonnegative exponents (regular singular point at `q = 0`).
    pub fn new(
        order: usize,
        weight: i64,
        coeffs: Vec<PuiseuxSeries>,
        lattice: u32,
    ) -> Result<Self, MldeError> {
        if order == 0 {
            return Err(MldeError::BadInput("order must be positive".into()));
        }
        if coeffs.len() != order {
            return Err(MldeError::BadInput(format!(
                "expected {order} coefficients g_1..g_{order}, got {}",
                coeffs.len()
            )));
        }
        if lattice == 0 {
            return Err(MldeError::BadInput(
                "lattice denominator must be positive".into(),
            ));
        }
        for (p, g) in coeffs.iter().enumerate() {
            if g.support_min().is_some_and(|m| m < 0) {
                return Err(MldeError::BadInput(format!(
                    "g_{} has negative exponents",
                    p + 1
                )));
            }
        }
        Ok(MLDE {
            order,
            weight,
            coeffs,
            lattice,
        })
    }

    /// Bookkeeping check for coefficients with declared modular weights:
    /// `g_p` must sit in weight `2p`.
    pub fn check_declared_weights(&self, declared: &[i64]) -> Result<(), MldeError> {
        if declared.len() != self.order {
            return Err(MldeError::BadInput(format!(
                "{} declared weights for order {}",
                declared.len(),
                self.order
            )));
        }
        for (p, w) in declared.iter().enumerate() {
            let want = 2 * (p as i64 + 1);
            if *w != want {
                return Err(MldeError::BadInput(format!(
                    "g_{} declared weight {w}, ladder position requires {want}",
                    p + 1
                )));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn lattice(&self) -> u32 {
        self.lattice
    }

    /// `g_1..g_m` in ladder order.
    pub fn coeffs(&self) -> &[PuiseuxSeries] {
        &self.coeffs
    }

    /// Rewrites the operator as `Σ_i c_i·(q d/dq)^i`, constant term first and
    /// `c_m = 1`, with internal `Ê₂` factors truncated at `qorder`.
    pub fn to_dq_form(&self, qorder: i64) -> Vec<PuiseuxSeries> {
        // Powers of the ladder as (q d/dq)-coefficient vectors:
        // ∂_w collapses to Σ [qdq(c_i) + w·Ê₂·c_i]·D^i + c_i·D^{i+1}.
        let e2 = eisenstein(2, qorder.max(1)).expect("weight 2 is valid");
        let mut ladder: Vec<Vec<PuiseuxSeries>> = vec![vec![PuiseuxSeries::one(1)]];
        let mut w = self.weight;
        for _ in 0..self.order {
            let prev = ladder.last().unwrap();
            let mut next = vec![PuiseuxSeries::zero(1); prev.len() + 1];
            for (i, ci) in prev.iter().enumerate() {
                next[i + 1] = next[i + 1].add(ci);
                let mut term = ci.qdq();
                if w != 0 {
                    term = term.add(&e2.mul(ci).scale_rational(&Rational::from_int(w)));
                }
                next[i] = next[i].add(&term);
            }
            ladder.push(next);
            w += 2;
        }
        let mut out = ladder[self.order].clone();
        for (p, g) in self.coeffs.iter().enumerate() {
            for (i, ci) in ladder[self.order - (p + 1)].iter().enumerate() {
                out[i] = out[i].add(&g.mul(ci));
            }
        }
        out
    }

    /// The indicial polynomial `Σ_i c_i(0)·αⁱ` in ascending powers; fractional
    /// exponents in the coefficients contribute nothing to the constants.
    pub fn indicial_poly(&self) -> Result<Vec<CyclotomicNumber>, MldeError> {
        let mut out = Vec::with_capacity(self.order + 1);
        for c in self.to_dq_form(1) {
            out.push(c.coefficient(0).ok_or_else(|| {
                MldeError::BadInput("coefficient constants are not known to q^0".into())
            })?);
        }
        Ok(out)
    }

    /// Applies the ladder form of the operator to `f` and truncates the
    /// residual at `q^trunc`.
    pub fn verify(&self, f: &PuiseuxSeries, trunc: i64) -> PuiseuxSeries {
        let mut res = iterated_serre(f, self.weight, self.order as u32);
        for (p, g) in self.coeffs.iter().enumerate() {
            let d = iterated_serre(f, self.weight, (self.order - (p + 1)) as u32);
            res = res.add(&g.mul(&d));
        }
        res.truncate(trunc.saturating_mul(res.denom() as i64))
    }
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs().max(1);
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out
}

/// All rational roots of a polynomial with rational coefficients (ascending
/// powers), found exactly via the rational root theorem.
pub fn rational_roots(poly: &[CyclotomicNumber]) -> Result<Vec<Rational>, MldeError> {
    let mut rats = Vec::with_capacity(poly.len());
    for c in poly {
        rats.push(c.as_rational().ok_or_else(|| {
            MldeError::BadInput("polynomial has non-rational coefficients".into())
        })?);
    }
    while rats.last().is_some_and(|c| c.is_zero()) {
        rats.pop();
    }
    if rats.is_empty() {
        return Err(MldeError::BadInput(
            "every α is a root of the zero polynomial".into(),
        ));
    }
    if rats.len() == 1 {
        return Ok(Vec::new());
    }
    let mut lcm = BigInt::one();
    for r in &rats {
        lcm = lcm.lcm(r.denom());
    }
    let lcm = Rational::from_bigint(lcm);
    let ints: Vec<Rational> = rats.iter().map(|r| r * &lcm).collect();
    let s = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots: Vec<Rational> = Vec::new();
    if s > 0 {
        roots.push(Rational::zero());
    }
    let overflow = || MldeError::BadInput("coefficients too large for root search".into());
    let low = ints[s].to_i64().ok_or_else(overflow)?.abs();
    let lead = ints.last().unwrap().to_i64().ok_or_else(overflow)?.abs();
    let eval = |x: &Rational| {
        let mut acc = Rational::zero();
        for c in rats.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    };
    for p in divisors(low) {
        for q in divisors(lead) {
            for cand in [Rational::new(p, q), Rational::new(-p, q)] {
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// The second-order theta-kernel equation: `g₁ = 0`, `g₂ = −Θ₁,₁/96` on the
/// eighth-integer lattice, base weight 0.
pub fn theta_mlde(qorder: i64) -> Result<MLDE, MldeError> {
    let g2 = theta_series(ThetaKind::Theta11, qorder)?.scale_rational(&Rational::new(-1, 96));
    MLDE::new(2, 0, vec![PuiseuxSeries::zero(8), g2], 8)
}

/// The second-order half-twist equation: `g₁ = −2Ĝ₂[−1;0]`,
/// `g₂ = −18Ê₄ + 18Ĝ₄[−1;0]` on the integer lattice, base weight 0.
pub fn n4_mlde(qorder: i64) -> Result<MLDE, MldeError> {
    let tw = TwistParameters::new(CyclotomicNumber::from_int(-1), Rational::zero())?;
    let g1 = twisted_eisenstein(2, &tw, qorder)?.scale_rational(&Rational::from_int(-2));
    let g2 = eisenstein(4, qorder)?
        .scale_rational(&Rational::from_int(-18))
        .add(&twisted_eisenstein(4, &tw, qorder)?.scale_rational(&Rational::from_int(18)));
    MLDE::new(2, 0, vec![g1, g2], 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cy(n: i64) -> CyclotomicNumber {
        CyclotomicNumber::from_int(n)
    }

    #[test]
    fn dq_form_trivial_ladders() {
        let m1 = MLDE::new(1, 0, vec![PuiseuxSeries::zero(1)], 1).unwrap();
        let c = m1.to_dq_form(6);
        assert_eq!(c.len(), 2);
        assert!(c[0].is_zero());
        assert_eq!(c[1], PuiseuxSeries::one(1));
        let m2 = MLDE::new(2, 0, vec![PuiseuxSeries::zero(1); 2], 1).unwrap();
        let c = m2.to_dq_form(8);
        assert!(c[0].is_zero());
        let e2 = eisenstein(2, 8).unwrap();
        assert!(c[1].agrees_with(&e2.scale_rational(&Rational::from_int(2))));
        assert_eq!(c[2], PuiseuxSeries::one(1));
    }

    #[test]
    fn dq_form_applies_like_the_ladder() {
        let g1 = eisenstein(2, 12)
            .unwrap()
            .scale_rational(&Rational::new(3, 7));
        let g2 = eisenstein(4, 12)
            .unwrap()
            .scale_rational(&Rational::from_int(-5));
        let mlde = MLDE::new(2, 4, vec![g1.clone(), g2.clone()], 1).unwrap();
        let c = mlde.to_dq_form(12);
        for coeffs in [[1i64, 0, 2, -1, 4], [7, 3, 0, 0, -2]] {
            let f = PuiseuxSeries::from_terms(
                1,
                coeffs.iter().enumerate().map(|(n, v)| (n as i64, cy(*v))),
                coeffs.len() as i64,
            );
            let ladder = mlde.verify(&f, 5);
            let mut dq = PuiseuxSeries::zero(1);
            let mut fi = f.clone();
            for ci in &c {
                dq = dq.add(&ci.mul(&fi));
                fi = fi.qdq();
            }
            assert!(ladder.agrees_with(&dq));
        }
    }

    #[test]
    fn theta_equation_normal_form_and_indicial() {
        let mlde = theta_mlde(6).unwrap();
        let c = mlde.to_dq_form(6);
        // c = [−Θ₁,₁/96, 2Ê₂, 1]
        let theta = theta_series(ThetaKind::Theta11, 6).unwrap();
        assert!(c[0].agrees_with(&theta.scale_rational(&Rational::new(-1, 96))));
        assert!(c[1].agrees_with(
            &eisenstein(2, 6)
                .unwrap()
                .scale_rational(&Rational::from_int(2))
        ));
        // Indicial α² − α/6 with roots 0 and 1/6.
        let ind = mlde.indicial_poly().unwrap();
        assert_eq!(ind[0], CyclotomicNumber::zero());
        assert_eq!(ind[1].as_rational().unwrap(), Rational::new(-1, 6));
        assert_eq!(ind[2], CyclotomicNumber::one());
        assert_eq!(
            rational_roots(&ind).unwrap(),
            vec![Rational::zero(), Rational::new(1, 6)]
        );
    }

    #[test]
    fn half_twist_equation_indicial_is_alpha_squared() {
        let mlde = n4_mlde(8).unwrap();
        let ind = mlde.indicial_poly().unwrap();
        assert_eq!(ind[0], CyclotomicNumber::zero());
        assert_eq!(ind[1], CyclotomicNumber::zero());
        assert_eq!(ind[2], CyclotomicNumber::one());
        assert_eq!(rational_roots(&ind).unwrap(), vec![Rational::zero()]);
        // The ∂-coefficient's constant cancels against the ladder's 2Ê₂ term.
        let c = mlde.to_dq_form(8);
        assert!(c[1].coefficient(0).unwrap().is_zero());
        assert!(!c[1].is_zero());
    }

    #[test]
    fn root_search_covers_fractions_and_repeats() {
        // 6α² − α = 0 → {0, 1/6}
        let p = vec![cy(0), cy(-1), cy(6)];
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![Rational::zero(), Rational::new(1, 6)]
        );
        // α² − α/6 − 1/6 → {−1/3, 1/2}
        let p = vec![
            CyclotomicNumber::from_rational(Rational::new(-1, 6)),
            CyclotomicNumber::from_rational(Rational::new(-1, 6)),
            cy(1),
        ];
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![Rational::new(-1, 3), Rational::new(1, 2)]
        );
        // No rational roots.
        let p = vec![cy(-2), cy(0), cy(1)];
        assert!(rational_roots(&p).unwrap().is_empty());
        assert!(rational_roots(&[CyclotomicNumber::root_of_unity(3, 1).unwrap()]).is_err());
    }

    #[test]
    fn construction_validation() {
        assert!(MLDE::new(0, 0, vec![], 1).is_err());
        assert!(MLDE::new(2, 0, vec![PuiseuxSeries::zero(1)], 1).is_err());
        assert!(MLDE::new(1, 0, vec![PuiseuxSeries::zero(1)], 0).is_err());
        let neg = PuiseuxSeries::monomial(1, -1, cy(1));
        assert!(MLDE::new(1, 0, vec![neg], 1).is_err());
        let ok = MLDE::new(2, 0, vec![PuiseuxSeries::zero(1); 2], 1).unwrap();
        assert!(ok.check_declared_weights(&[2, 4]).is_ok());
        assert!(ok.check_declared_weights(&[2, 6]).is_err());
        assert!(ok.check_declared_weights(&[2]).is_err());
    }
}
