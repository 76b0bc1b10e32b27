//! Frobenius power solutions `q^α · (1 + Σ a_{k/D} q^{k/D})` of an MLDE.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactnum::{CyclotomicNumber, Rational};
use crate::qseries::PuiseuxSeries;

use super::equation::MLDE;
use super::MldeError;

/// One power-type solution.  When the recursion passed through a zero of the
/// indicial polynomial with a *consistent* right-hand side it set that
/// coefficient to zero and raised `resonance_flag`; an inconsistent one is an
/// error instead, since the true solution would be logarithmic.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusSolution {
    exponent: Rational,
    tail: PuiseuxSeries,
    resonance_flag: bool,
}

impl FrobeniusSolution {
    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    /// The lattice series with constant term 1 multiplying `q^α`.
    pub fn tail(&self) -> &PuiseuxSeries {
        &self.tail
    }

    pub fn resonance_flag(&self) -> bool {
        self.resonance_flag
    }

    /// The full series `q^α·tail` on the joint exponent lattice.
    pub fn series(&self) -> PuiseuxSeries {
        let d = self.tail.denom();
        let ad = self
            .exponent
            .denom()
            .to_i64()
            .and_then(|v| u32::try_from(v).ok())
            .expect("exponent denominators stay small");
        let l = d.lcm(&ad);
        let shift = (self.exponent.clone() * Rational::from_int(l as i64))
            .to_i64()
            .expect("shift is integral on the joint lattice");
        self.tail.with_denom(l).shift(shift)
    }
}

/// Evaluates `Σ_i coeffs[i]·βⁱ` exactly.
fn poly_eval(coeffs: &[(usize, CyclotomicNumber)], beta: &Rational) -> CyclotomicNumber {
    let b = CyclotomicNumber::from_rational(beta.clone());
    let mut acc = CyclotomicNumber::zero();
    for (i, c) in coeffs {
        let p = b.pow(*i as i64).expect("nonnegative power");
        acc = acc.add(&c.mul(&p));
    }
    acc
}

/// Runs the coefficient recursion for the root `α`, producing the tail to
/// `q^trunc` (exclusive, in whole `q`-orders).
pub fn frobenius_solve(
    mlde: &MLDE,
    alpha: &Rational,
    trunc: i64,
) -> Result<FrobeniusSolution, MldeError> {
    if trunc < 1 {
        return Err(MldeError::BadInput(format!(
            "truncation must be positive, got {trunc}"
        )));
    }
    let dq = mlde.to_dq_form(trunc + 1);
    let lattice = dq
        .iter()
        .map(|c| c.denom())
        .fold(mlde.lattice(), |a, b| a.lcm(&b));
    let dq: Vec<PuiseuxSeries> = dq.iter().map(|c| c.with_denom(lattice)).collect();

    // I_j(β) = Σ_i c_{i,j} βⁱ, indexed by lattice offset j of the c's.
    let mut stencil: BTreeMap<i64, Vec<(usize, CyclotomicNumber)>> = BTreeMap::new();
    let steps = trunc * lattice as i64;
    for (i, c) in dq.iter().enumerate() {
        for (j, v) in c.terms() {
            if j < steps {
                stencil.entry(j).or_default().push((i, v.clone()));
            }
        }
    }
    let indicial = stencil.get(&0).cloned().unwrap_or_default();
    if !poly_eval(&indicial, alpha).is_zero() {
        return Err(MldeError::NotARoot {
            alpha: alpha.clone(),
        });
    }

    let mut a: Vec<CyclotomicNumber> = vec![CyclotomicNumber::one()];
    let mut resonance_flag = false;
    for k in 1..steps {
        let mut rhs = CyclotomicNumber::zero();
        for (j, poly) in stencil.range(1..=k) {
            let l = k - j;
            if a[l as usize].is_zero() {
                continue;
            }
            let beta = alpha + &Rational::new(l, lattice as i64);
            rhs = rhs.add(&poly_eval(poly, &beta).mul(&a[l as usize]));
        }
        rhs = rhs.neg();
        let beta = alpha + &Rational::new(k, lattice as i64);
        let denom = poly_eval(&indicial, &beta);
        if denom.is_zero() {
            if rhs.is_zero() {
                resonance_flag = true;
                a.push(CyclotomicNumber::zero());
            } else {
                return Err(MldeError::Resonance { exponent: beta });
            }
        } else {
            a.push(rhs.div(&denom).expect("nonzero denominator"));
        }
    }

    let tail = PuiseuxSeries::from_terms(
        lattice,
        a.into_iter().enumerate().map(|(k, c)| (k as i64, c)),
        steps,
    );
    Ok(FrobeniusSolution {
        exponent: alpha.clone(),
        tail,
        resonance_flag,
    })
}
