//! The sparse Puiseux series type.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::QseriesError;
use crate::exactnum::{CyclotomicNumber, Rational};

/// Sentinel truncation for exact series (polynomials): no unknown tail.
///
/// Kept well below `i64::MAX` so exponent shifts cannot overflow.
pub const EXACT_TRUNC: i64 = i64::MAX / 4;

fn is_exact(trunc: i64) -> bool {
    trunc >= EXACT_TRUNC
}

/// `trunc + shift`, preserving the exact sentinel.
fn shift_trunc(trunc: i64, shift: i64) -> i64 {
    if is_exact(trunc) {
        EXACT_TRUNC
    } else {
        trunc + shift
    }
}

fn scale_trunc(trunc: i64, factor: i64) -> i64 {
    if is_exact(trunc) {
        EXACT_TRUNC
    } else {
        trunc.saturating_mul(factor).min(EXACT_TRUNC)
    }
}

/// A sparse exact series `Σ c_e · q^{e/D}` with a known-window bound.
///
/// Invariants: stored coefficients are nonzero and lie in `[min_exp, trunc)`;
/// `min_exp` equals the least stored exponent (or `trunc` when no coefficient
/// is known to be nonzero).
#[derive(Debug, Clone)]
pub struct PuiseuxSeries {
    denom: u32,
    min_exp: i64,
    trunc: i64,
    coeffs: BTreeMap<i64, CyclotomicNumber>,
}

/// Result of a numeric evaluation: the truncated sum and the magnitude of the
/// last retained term, a crude indicator of how much tail was dropped.
#[derive(Debug, Clone, Copy)]
pub struct EvalOutcome {
    pub value: Complex64,
    pub guard: f64,
}

impl PuiseuxSeries {
    /// The zero series on lattice `1/D`, exact.
    pub fn zero(denom: u32) -> Self {
        assert!(denom >= 1);
        PuiseuxSeries {
            denom,
            min_exp: EXACT_TRUNC,
            trunc: EXACT_TRUNC,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(denom: u32) -> Self {
        Self::monomial(denom, 0, CyclotomicNumber::one())
    }

    /// The exact monomial `c · q^{exp/D}`.
    pub fn monomial(denom: u32, exp: i64, c: CyclotomicNumber) -> Self {
        assert!(denom >= 1);
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        let mut s = PuiseuxSeries {
            denom,
            min_exp: 0,
            trunc: EXACT_TRUNC,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn constant(denom: u32, c: CyclotomicNumber) -> Self {
        Self::monomial(denom, 0, c)
    }

    pub fn from_rational(denom: u32, r: Rational) -> Self {
        Self::constant(denom, CyclotomicNumber::from_rational(r))
    }

    /// Builds a series from explicit terms with a given truncation.
    pub fn from_terms<I>(denom: u32, terms: I, trunc: i64) -> Self
    where
        I: IntoIterator<Item = (i64, CyclotomicNumber)>,
    {
        assert!(denom >= 1);
        let mut coeffs: BTreeMap<i64, CyclotomicNumber> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(CyclotomicNumber::zero);
            *entry = entry.add(&c);
        }
        let mut s = PuiseuxSeries {
            denom,
            min_exp: 0,
            trunc,
            coeffs,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let trunc = self.trunc;
        self.coeffs.retain(|e, c| *e < trunc && !c.is_zero());
        self.min_exp = self.coeffs.keys().next().copied().unwrap_or(self.trunc);
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    /// Exclusive truncation exponent in units of `1/D`.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn is_exact(&self) -> bool {
        is_exact(self.trunc)
    }

    /// Least exponent carrying a nonzero known coefficient, if any.
    pub fn support_min(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// True when no nonzero coefficient is known (the series vanishes on the
    /// whole known window).
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CyclotomicNumber)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient at `exp/D`; `None` when the exponent is at or beyond
    /// the truncation (unknown), zero when known-absent.
    pub fn coefficient(&self, exp: i64) -> Option<CyclotomicNumber> {
        if exp >= self.trunc {
            return None;
        }
        Some(
            self.coeffs
                .get(&exp)
                .cloned()
                .unwrap_or_else(CyclotomicNumber::zero),
        )
    }

    /// The constant term, treating an unknown constant as an error.
    pub fn constant_term(&self) -> Result<CyclotomicNumber, QseriesError> {
        self.coefficient(0).ok_or(QseriesError::UnknownCoefficient {
            exp: 0,
            denom: self.denom,
        })
    }

    /// Re-expresses the series on the lattice `1/new_denom`, which must be a
    /// multiple of the current one.
    pub fn with_denom(&self, new_denom: u32) -> Self {
        assert!(new_denom >= 1 && new_denom % self.denom == 0);
        if new_denom == self.denom {
            return self.clone();
        }
        let f = (new_denom / self.denom) as i64;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e * f, c.clone()))
            .collect();
        let mut s = PuiseuxSeries {
            denom: new_denom,
            min_exp: 0,
            trunc: scale_trunc(self.trunc, f),
            coeffs,
        };
        s.normalize();
        s
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.denom == other.denom {
            (self.clone(), other.clone())
        } else {
            let l = self.denom.lcm(&other.denom);
            (self.with_denom(l), other.with_denom(l))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        a.trunc = a.trunc.min(b.trunc);
        for (e, c) in b.coeffs {
            let entry = a.coeffs.entry(e).or_insert_with(CyclotomicNumber::zero);
            *entry = entry.add(&c);
        }
        a.normalize();
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let trunc = shift_trunc(b.trunc, a.min_exp).min(shift_trunc(a.trunc, b.min_exp));
        let mut coeffs: BTreeMap<i64, CyclotomicNumber> = BTreeMap::new();
        for (e1, c1) in &a.coeffs {
            for (e2, c2) in &b.coeffs {
                let e = e1 + e2;
                if e >= trunc {
                    continue;
                }
                let prod = c1.mul(c2);
                let entry = coeffs.entry(e).or_insert_with(CyclotomicNumber::zero);
                *entry = entry.add(&prod);
            }
        }
        let mut s = PuiseuxSeries {
            denom: a.denom,
            min_exp: 0,
            trunc,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            let mut s = PuiseuxSeries {
                denom: self.denom,
                min_exp: 0,
                trunc: self.trunc,
                coeffs: BTreeMap::new(),
            };
            s.normalize();
            return s;
        }
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = v.mul(c);
        }
        out.normalize();
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CyclotomicNumber::from_rational(r.clone()))
    }

    /// Multiplies by `q^{shift/D}`.
    pub fn shift(&self, shift: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e + shift, c.clone()))
            .collect();
        let mut s = PuiseuxSeries {
            denom: self.denom,
            min_exp: 0,
            trunc: shift_trunc(self.trunc, shift),
            coeffs,
        };
        s.normalize();
        s
    }

    /// Restricts the known window to exponents `< new_trunc`.
    pub fn truncate(&self, new_trunc: i64) -> Self {
        let mut out = self.clone();
        out.trunc = out.trunc.min(new_trunc);
        out.normalize();
        out
    }

    /// The Euler operator `q·d/dq`: multiplies the `q^{e/D}` coefficient by
    /// `e/D`.
    pub fn qdq(&self) -> Self {
        let d = self.denom as i64;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (*e, c.scale(&Rational::new(*e, d))))
            .collect();
        let mut s = PuiseuxSeries {
            denom: self.denom,
            min_exp: 0,
            trunc: self.trunc,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = PuiseuxSeries::one(self.denom);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse computed to the sound order implied by the
    /// operand's own truncation; errors on an exact non-monomial input
    /// (whose inverse is an infinite series) and on zero.
    pub fn inv(&self) -> Result<Self, QseriesError> {
        if self.is_exact() {
            if self.coeffs.len() > 1 {
                return Err(QseriesError::TruncationRequired);
            }
            let (e, c) = self
                .coeffs
                .iter()
                .next()
                .ok_or_else(|| QseriesError::NonInvertible("zero series".into()))?;
            return Ok(Self::monomial(self.denom, -e, c.inverse()?));
        }
        let rel_order = self.trunc - self.min_exp;
        self.inv_to(rel_order)
    }

    /// Multiplicative inverse with an explicit relative order: the result is
    /// known on a window of length `rel_order` above its leading exponent.
    pub fn inv_to(&self, rel_order: i64) -> Result<Self, QseriesError> {
        let v = self
            .support_min()
            .ok_or_else(|| QseriesError::NonInvertible("zero series".into()))?;
        let lead_inv = self.coeffs[&v].inverse()?;
        let out_trunc = if is_exact(self.trunc) {
            -v + rel_order
        } else {
            (self.trunc - 2 * v).min(-v + rel_order)
        };
        let mut g: BTreeMap<i64, CyclotomicNumber> = BTreeMap::new();
        g.insert(-v, lead_inv.clone());
        // f·g = 1 solved coefficient by coefficient: for total exponent t ≥ 1,
        // g_{t−v} = −f_v⁻¹ · Σ_{j=v+1}^{t+v} f_j · g_{t−j}.
        let mut t = 1i64;
        while t - v < out_trunc {
            let mut sum = CyclotomicNumber::zero();
            for (j, fj) in self.coeffs.range(v + 1..=t + v) {
                if let Some(gm) = g.get(&(t - j)) {
                    sum = sum.add(&fj.mul(gm));
                }
            }
            if !sum.is_zero() {
                g.insert(t - v, sum.mul(&lead_inv).neg());
            }
            t += 1;
        }
        let mut s = PuiseuxSeries {
            denom: self.denom,
            min_exp: 0,
            trunc: out_trunc,
            coeffs: g,
        };
        s.normalize();
        Ok(s)
    }

    /// True when the two series agree at every exponent where both are known.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        let window = a.trunc.min(b.trunc);
        let mut keys: Vec<i64> = a.coeffs.keys().chain(b.coeffs.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for e in keys {
            if e >= window {
                continue;
            }
            let ca = a
                .coeffs
                .get(&e)
                .cloned()
                .unwrap_or_else(CyclotomicNumber::zero);
            let cb = b
                .coeffs
                .get(&e)
                .cloned()
                .unwrap_or_else(CyclotomicNumber::zero);
            if ca != cb {
                return false;
            }
        }
        true
    }

    /// Numeric evaluation at `q0` inside the open unit disk.
    ///
    /// Fractional powers use the principal branch with the argument taken in
    /// `[0, 2π)`.
    pub fn eval_complex(&self, q0: Complex64) -> Result<EvalOutcome, QseriesError> {
        let r = q0.norm();
        if r >= 1.0 {
            return Err(QseriesError::OutsideDisk(r));
        }
        let mut arg = q0.arg();
        if arg < 0.0 {
            arg += 2.0 * std::f64::consts::PI;
        }
        let log0 = Complex64::new(r.ln(), arg);
        let d = self.denom as f64;
        let mut value = Complex64::new(0.0, 0.0);
        let mut guard = 0.0f64;
        for (e, c) in &self.coeffs {
            let term = c.eval_complex() * ((*e as f64 / d) * log0).exp();
            value += term;
            guard = term.norm();
        }
        Ok(EvalOutcome { value, guard })
    }

    /// Numeric evaluation that additionally rejects results whose tail
    /// indicator exceeds `guard_limit`.
    pub fn eval_complex_guarded(
        &self,
        q0: Complex64,
        guard_limit: f64,
    ) -> Result<EvalOutcome, QseriesError> {
        let out = self.eval_complex(q0)?;
        if out.guard > guard_limit {
            return Err(QseriesError::GuardExceeded {
                guard: out.guard,
                limit: guard_limit,
            });
        }
        Ok(out)
    }
}

impl PartialEq for PuiseuxSeries {
    /// Structural equality after lattice unification: same known window and
    /// the same coefficients on it.
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.trunc == b.trunc && a.coeffs == b.coeffs
    }
}

impl Eq for PuiseuxSeries {}

fn fmt_exponent(e: i64, d: u32) -> String {
    let g = e.gcd(&(d as i64));
    let (num, den) = (e / g, d as i64 / g);
    if den == 1 {
        if num == 1 {
            "q".to_string()
        } else {
            format!("q^{num}")
        }
    } else {
        format!("q^({num}/{den})")
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in &self.coeffs {
            if wrote {
                write!(f, " + ")?;
            }
            let cs = c.to_string();
            let needs_parens = cs.contains(' ') || cs.contains('+');
            if *e == 0 {
                if needs_parens {
                    write!(f, "({cs})")?;
                } else {
                    write!(f, "{cs}")?;
                }
            } else {
                let pow = fmt_exponent(*e, self.denom);
                if c.is_one() {
                    write!(f, "{pow}")?;
                } else if needs_parens {
                    write!(f, "({cs})*{pow}")?;
                } else {
                    write!(f, "{cs}*{pow}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        if !self.is_exact() {
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "O({})", fmt_exponent(self.trunc, self.denom))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffWire {
    Rational(Rational),
    Cyclotomic(CyclotomicNumber),
}

#[derive(Serialize, Deserialize)]
struct PuiseuxWire {
    #[serde(rename = "D")]
    d: u32,
    terms: Vec<(i64, CoeffWire)>,
    trunc: Option<i64>,
}

impl Serialize for PuiseuxSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let coeff = match c.as_rational() {
                    Some(r) => CoeffWire::Rational(r),
                    None => CoeffWire::Cyclotomic(c.clone()),
                };
                (*e, coeff)
            })
            .collect();
        PuiseuxWire {
            d: self.denom,
            terms,
            trunc: if self.is_exact() {
                None
            } else {
                Some(self.trunc)
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PuiseuxSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = PuiseuxWire::deserialize(d)?;
        if w.d == 0 {
            return Err(de::Error::custom("lattice denominator must be positive"));
        }
        let trunc = w.trunc.unwrap_or(EXACT_TRUNC);
        let terms = w.terms.into_iter().map(|(e, c)| {
            let c = match c {
                CoeffWire::Rational(r) => CyclotomicNumber::from_rational(r),
                CoeffWire::Cyclotomic(c) => c,
            };
            (e, c)
        });
        Ok(PuiseuxSeries::from_terms(w.d, terms, trunc))
    }
}
