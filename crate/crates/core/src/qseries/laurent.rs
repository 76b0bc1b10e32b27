//! Laurent series in `z` with Puiseux-series coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::puiseux::{EvalOutcome, PuiseuxSeries, EXACT_TRUNC};
use super::QseriesError;
use crate::exactnum::{CyclotomicNumber, Rational};

/// A finite-window Laurent series `Σ_k f_k(q) · z^k`.
///
/// `ztrunc` is the exclusive upper bound of the known `z`-window; as with
/// [`PuiseuxSeries`], arithmetic propagates the weakest sound window.  Each
/// coefficient series carries its own `q`-truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct ZLaurentSeries {
    zmin: i64,
    ztrunc: i64,
    coeffs: BTreeMap<i64, PuiseuxSeries>,
}

fn is_exact(trunc: i64) -> bool {
    trunc >= EXACT_TRUNC
}

fn shift_trunc(trunc: i64, shift: i64) -> i64 {
    if is_exact(trunc) {
        EXACT_TRUNC
    } else {
        trunc + shift
    }
}

impl ZLaurentSeries {
    pub fn zero() -> Self {
        ZLaurentSeries {
            zmin: EXACT_TRUNC,
            ztrunc: EXACT_TRUNC,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single power of `z` with the given `q`-series coefficient.
    pub fn monomial(zexp: i64, coeff: PuiseuxSeries) -> Self {
        let mut s = ZLaurentSeries {
            zmin: 0,
            ztrunc: EXACT_TRUNC,
            coeffs: BTreeMap::from([(zexp, coeff)]),
        };
        s.normalize();
        s
    }

    pub fn constant(coeff: PuiseuxSeries) -> Self {
        Self::monomial(0, coeff)
    }

    pub fn from_terms<I>(terms: I, ztrunc: i64) -> Self
    where
        I: IntoIterator<Item = (i64, PuiseuxSeries)>,
    {
        let mut coeffs: BTreeMap<i64, PuiseuxSeries> = BTreeMap::new();
        for (k, f) in terms {
            match coeffs.remove(&k) {
                Some(prev) => {
                    coeffs.insert(k, prev.add(&f));
                }
                None => {
                    coeffs.insert(k, f);
                }
            }
        }
        let mut s = ZLaurentSeries {
            zmin: 0,
            ztrunc,
            coeffs,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let ztrunc = self.ztrunc;
        self.coeffs.retain(|k, f| *k < ztrunc && !f.is_zero());
        self.zmin = self.coeffs.keys().next().copied().unwrap_or(self.ztrunc);
    }

    pub fn ztrunc(&self) -> i64 {
        self.ztrunc
    }

    pub fn zmin(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &PuiseuxSeries)> {
        self.coeffs.iter().map(|(k, f)| (*k, f))
    }

    /// The `q`-series coefficient of `z^k`; `None` beyond the known window.
    pub fn coefficient(&self, k: i64) -> Option<PuiseuxSeries> {
        if k >= self.ztrunc {
            return None;
        }
        Some(match self.coeffs.get(&k) {
            Some(f) => f.clone(),
            None => PuiseuxSeries::zero(1),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (k, f) in &other.coeffs {
            match out.remove(k) {
                Some(prev) => {
                    out.insert(*k, prev.add(f));
                }
                None => {
                    out.insert(*k, f.clone());
                }
            }
        }
        let mut s = ZLaurentSeries {
            zmin: 0,
            ztrunc: self.ztrunc.min(other.ztrunc),
            coeffs: out,
        };
        s.normalize();
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for f in out.coeffs.values_mut() {
            *f = f.neg();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ztrunc = shift_trunc(other.ztrunc, self.zmin).min(shift_trunc(self.ztrunc, other.zmin));
        let mut coeffs: BTreeMap<i64, PuiseuxSeries> = BTreeMap::new();
        for (k1, f1) in &self.coeffs {
            for (k2, f2) in &other.coeffs {
                let k = k1 + k2;
                if k >= ztrunc {
                    continue;
                }
                let prod = f1.mul(f2);
                match coeffs.remove(&k) {
                    Some(prev) => {
                        coeffs.insert(k, prev.add(&prod));
                    }
                    None => {
                        coeffs.insert(k, prod);
                    }
                }
            }
        }
        let mut s = ZLaurentSeries {
            zmin: 0,
            ztrunc,
            coeffs,
        };
        s.normalize();
        s
    }

    /// Multiplies every coefficient by a fixed `q`-series.
    pub fn scale_ps(&self, f: &PuiseuxSeries) -> Self {
        let mut out = self.clone();
        for g in out.coeffs.values_mut() {
            *g = g.mul(f);
        }
        out.normalize();
        out
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut out = self.clone();
        for g in out.coeffs.values_mut() {
            *g = g.scale(c);
        }
        out.normalize();
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CyclotomicNumber::from_rational(r.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(PuiseuxSeries::one(1));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The formal derivative `d/dz`.
    pub fn dz(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(k, _)| **k != 0)
            .map(|(k, f)| (k - 1, f.scale_rational(&Rational::from_int(*k))))
            .collect();
        let mut s = ZLaurentSeries {
            zmin: 0,
            ztrunc: shift_trunc(self.ztrunc, -1),
            coeffs,
        };
        s.normalize();
        s
    }

    /// Applies `q·d/dq` to every coefficient.
    pub fn qdq(&self) -> Self {
        let mut out = self.clone();
        for f in out.coeffs.values_mut() {
            *f = f.qdq();
        }
        out.normalize();
        out
    }

    /// Restricts the known `z`-window.
    pub fn truncate_z(&self, new_ztrunc: i64) -> Self {
        let mut out = self.clone();
        out.ztrunc = out.ztrunc.min(new_ztrunc);
        out.normalize();
        out
    }

    /// Restricts every coefficient's `q`-window.
    pub fn truncate_q(&self, new_qtrunc: i64) -> Self {
        let mut out = self.clone();
        for f in out.coeffs.values_mut() {
            *f = f.truncate(new_qtrunc);
        }
        out.normalize();
        out
    }

    /// True when all known coefficients agree wherever both operands are
    /// known, in both variables.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let window = self.ztrunc.min(other.ztrunc);
        let mut keys: Vec<i64> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for k in keys {
            if k >= window {
                continue;
            }
            let a = self
                .coefficient(k)
                .unwrap_or_else(|| PuiseuxSeries::zero(1));
            let b = other
                .coefficient(k)
                .unwrap_or_else(|| PuiseuxSeries::zero(1));
            if !a.agrees_with(&b) {
                return false;
            }
        }
        true
    }

    /// Evaluates at a numeric `z`-value (already in the series' own variable)
    /// and `q`-point, summing the known window.
    pub fn eval_complex(&self, z0: Complex64, q0: Complex64) -> Result<EvalOutcome, QseriesError> {
        let mut value = Complex64::new(0.0, 0.0);
        let mut guard = 0.0f64;
        for (k, f) in &self.coeffs {
            let fe = f.eval_complex(q0)?;
            let term = fe.value * z0.powi(*k as i32);
            value += term;
            guard = term.norm();
        }
        Ok(EvalOutcome { value, guard })
    }
}

impl fmt::Display for ZLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in &self.coeffs {
            if wrote {
                write!(f, " + ")?;
            }
            match *k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z",)?,
                _ => write!(f, "({c})*z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        if !is_exact(self.ztrunc) {
            write!(f, " + O(z^{})", self.ztrunc)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zc(n: i64) -> PuiseuxSeries {
        PuiseuxSeries::constant(1, CyclotomicNumber::from_int(n))
    }

    #[test]
    fn product_window_propagation() {
        // (z⁻¹ + known to z²) · (z⁻¹ + known to z³) is known to z¹.
        let a = ZLaurentSeries::from_terms([(-1, zc(1))], 2);
        let b = ZLaurentSeries::from_terms([(-1, zc(1)), (2, zc(5))], 3);
        let p = a.mul(&b);
        assert_eq!(p.ztrunc(), 1);
        assert_eq!(p.coefficient(-2).unwrap(), zc(1));
        assert!(p.coefficient(1).is_none());
        assert_eq!(p.coefficient(0).unwrap(), zc(0));
    }

    #[test]
    fn dz_on_laurent_terms() {
        let s = ZLaurentSeries::from_terms([(-2, zc(1)), (0, zc(7)), (3, zc(2))], 5);
        let d = s.dz();
        assert_eq!(d.coefficient(-3).unwrap(), zc(-2));
        assert_eq!(d.coefficient(2).unwrap(), zc(6));
        assert!(d.coefficient(-1).unwrap().is_zero());
        assert_eq!(d.ztrunc(), 4);
    }

    #[test]
    fn mixed_window_agreement() {
        let a = ZLaurentSeries::from_terms([(0, zc(3)), (1, zc(4))], 2);
        let b = ZLaurentSeries::from_terms([(0, zc(3)), (1, zc(4)), (2, zc(9))], 3);
        assert!(a.agrees_with(&b));
        let c = ZLaurentSeries::from_terms([(0, zc(3)), (1, zc(5))], 2);
        assert!(!a.agrees_with(&c));
    }
}
