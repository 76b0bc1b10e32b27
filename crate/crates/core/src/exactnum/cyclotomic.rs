//! Cyclotomic numbers in the power basis.
//!
//! An element of `ℚ(ζ_N)` is stored as its coordinate vector with respect to
//! `1, ζ_N, …, ζ_N^{φ(N)−1}`, i.e. as a polynomial in `ζ_N` reduced modulo
//! the `N`-th cyclotomic polynomial `Φ_N`.  Mixed-conductor arithmetic embeds
//! both operands into the lcm conductor via `ζ_N = ζ_{M}^{M/N}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_integer::Integer;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactnumError, Rational};

/// Euler's totient `φ(n)`.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            out.push(d);
        }
    }
    out
}

// ---- dense polynomial helpers over ℚ (ascending coefficients) ----

fn poly_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Rational::is_zero) {
        v.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let prod = ai * bj;
            out[i + j] += &prod;
        }
    }
    poly_trim(&mut out);
    out
}

/// Quotient and remainder of `a` by `b` (`b` nonzero).
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].inverse().expect("nonzero divisor");
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] * &lead_inv;
        quot[dr - db] = c.clone();
        for k in 0..=db {
            let t = &b[k] * &c;
            rem[dr - db + k] -= &t;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

fn poly_rem(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    poly_divmod(a, m).1
}

/// Extended Euclid over ℚ[x]: returns `(g, u)` with `u·f ≡ g (mod m)` and
/// `g = gcd(f, m)` up to a unit.
fn poly_half_ext_gcd(f: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = f.to_vec();
    let mut r1: Vec<Rational> = m.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut u0 = vec![Rational::one()];
    let mut u1: Vec<Rational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qu = poly_mul(&q, &u1);
        let mut u_next = u0.clone();
        u_next.resize(u_next.len().max(qu.len()), Rational::zero());
        for (k, c) in qu.iter().enumerate() {
            u_next[k] -= c;
        }
        poly_trim(&mut u_next);
        r0 = std::mem::take(&mut r1);
        r1 = r;
        u0 = std::mem::take(&mut u1);
        u1 = u_next;
    }
    (r0, u0)
}

/// Coefficients of the `N`-th cyclotomic polynomial, ascending, monic of
/// degree `φ(N)`.  Results are memoised process-wide.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    assert!(n >= 1, "conductor must be >= 1");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Φ_N = (x^N − 1) / Π_{d | N, d < N} Φ_d, computed recursively.
    let mut numerator = vec![Rational::zero(); n as usize + 1];
    numerator[0] = -Rational::one();
    numerator[n as usize] = Rational::one();
    let mut result = numerator;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        let (q, r) = poly_divmod(&result, &phi_d);
        debug_assert!(r.is_empty(), "cyclotomic division must be exact");
        result = q;
    }
    let arc = Arc::new(result);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An element of the cyclotomic field `ℚ(ζ_N)`.
#[derive(Debug, Clone)]
pub struct CyclotomicNumber {
    conductor: u32,
    coords: Vec<Rational>,
}

impl CyclotomicNumber {
    /// Builds a value from explicit power-basis coordinates.
    pub fn new(conductor: u32, coords: Vec<Rational>) -> Result<Self, ExactnumError> {
        if conductor == 0 {
            return Err(ExactnumError::BadConductor(conductor));
        }
        let expected = euler_phi(conductor) as usize;
        if coords.len() != expected {
            return Err(ExactnumError::BadCoordinates {
                conductor,
                expected,
                got: coords.len(),
            });
        }
        Ok(CyclotomicNumber { conductor, coords })
    }

    pub fn zero() -> Self {
        CyclotomicNumber {
            conductor: 1,
            coords: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        CyclotomicNumber {
            conductor: 1,
            coords: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CyclotomicNumber {
            conductor: 1,
            coords: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// The primitive root of unity power `ζ_N^a`.
    pub fn root_of_unity(n: u32, a: i64) -> Result<Self, ExactnumError> {
        if n == 0 {
            return Err(ExactnumError::BadConductor(n));
        }
        let a = a.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); a + 1];
        poly[a] = Rational::one();
        Ok(Self::from_poly(n, poly))
    }

    fn from_poly(conductor: u32, poly: Vec<Rational>) -> Self {
        let modulus = cyclotomic_polynomial(conductor);
        let mut coords = poly_rem(&poly, &modulus);
        coords.resize(euler_phi(conductor) as usize, Rational::zero());
        CyclotomicNumber { conductor, coords }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The value as a rational if it lies in the prime field.
    ///
    /// The power basis is a basis, so this is an exact membership test.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Embeds into `ℚ(ζ_M)` for a multiple `M` of the conductor.
    pub fn lift_to(&self, m: u32) -> Result<Self, ExactnumError> {
        if m == 0 || m % self.conductor != 0 {
            return Err(ExactnumError::BadConductor(m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let stride = (m / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coords.len() - 1) * stride + 1];
        for (k, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                poly[k * stride] = c.clone();
            }
        }
        Ok(Self::from_poly(m, poly))
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let l = self.conductor.lcm(&other.conductor);
        (
            self.lift_to(l).expect("lcm is a multiple"),
            other.lift_to(l).expect("lcm is a multiple"),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.unify(other);
        for (x, y) in a.coords.iter_mut().zip(&b.coords) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coords {
            *c = -(&*c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        let prod = poly_mul(&a.coords, &b.coords);
        Self::from_poly(a.conductor, prod)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for c in &mut out.coords {
            *c *= r;
        }
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_N`; errors on zero.
    pub fn inverse(&self) -> Result<Self, ExactnumError> {
        if self.is_zero() {
            return Err(ExactnumError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self {
                conductor: self.conductor,
                coords: {
                    let mut v = vec![Rational::zero(); self.coords.len()];
                    v[0] = r.inverse()?;
                    v
                },
            });
        }
        let modulus = cyclotomic_polynomial(self.conductor);
        let (g, u) = poly_half_ext_gcd(&self.coords, &modulus);
        // Φ_N is irreducible over ℚ, so the gcd is a nonzero constant.
        debug_assert_eq!(g.len(), 1, "cyclotomic modulus must be coprime");
        let scale = g[0].inverse()?;
        let mut inv = poly_mul(&u, &[scale]);
        inv.resize(self.coords.len(), Rational::zero());
        Ok(Self {
            conductor: self.conductor,
            coords: inv,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactnumError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Integer power with a nonnegative or negative exponent.
    pub fn pow(&self, e: i64) -> Result<Self, ExactnumError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = CyclotomicNumber::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Numeric value under `ζ_N ↦ exp(2πi/N)`.
    pub fn eval_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let step = 2.0 * std::f64::consts::PI / self.conductor as f64;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = step * k as f64;
            acc += Complex64::from_polar(1.0, angle) * c.to_f64();
        }
        acc
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coords == other.coords;
        }
        let (a, b) = self.unify(other);
        a.coords == b.coords
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.conductor, k)?;
            } else {
                write!(f, "{mag}*z{}^{}", self.conductor, k)?;
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloWire {
    #[serde(rename = "N")]
    n: u32,
    coords: Vec<Rational>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloWire {
            n: self.conductor,
            coords: self.coords.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = CycloWire::deserialize(d)?;
        CyclotomicNumber::new(w.n, w.coords).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u32, a: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, a).unwrap()
    }

    #[test]
    fn phi_values() {
        let expect = [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 2),
            (6, 2),
            (8, 4),
            (12, 4),
            (30, 8),
        ];
        for (n, phi) in expect {
            assert_eq!(euler_phi(n), phi, "phi({n})");
        }
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        let as_i64 = |n: u32| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        for n in [2u32, 3, 4, 5, 6, 8, 12] {
            let z = zeta(n, 1);
            assert_eq!(z.pow(n as i64).unwrap(), CyclotomicNumber::one());
            for k in 1..n {
                assert_ne!(
                    z.pow(k as i64).unwrap(),
                    CyclotomicNumber::one(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn minus_one_is_zeta_two() {
        assert_eq!(zeta(2, 1), CyclotomicNumber::from_int(-1));
        // Embedding comparison across conductors: ζ_6^3 = −1 as well.
        assert_eq!(zeta(6, 3), CyclotomicNumber::from_int(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let v = zeta(12, 5).add(&CyclotomicNumber::from_rational(Rational::new(2, 3)));
        let inv = v.inverse().unwrap();
        assert_eq!(v.mul(&inv), CyclotomicNumber::one());
        assert!(CyclotomicNumber::zero().inverse().is_err());
    }

    #[test]
    fn eval_complex_matches_euler() {
        let z = zeta(8, 1).eval_complex();
        let expect = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        assert!((z - expect).norm() < 1e-15);
    }

    #[test]
    fn cross_conductor_arithmetic() {
        // ζ_3 + ζ_6 lives in conductor 6: ζ_6 satisfies ζ_6² = ζ_6 − 1 ⇒
        // ζ_3 = ζ_6² ⇒ sum = 2ζ_6 − 1.
        let sum = zeta(3, 1).add(&zeta(6, 1));
        let expect = zeta(6, 1)
            .scale(&Rational::from_int(2))
            .add(&CyclotomicNumber::from_int(-1));
        assert_eq!(sum, expect);
    }
}
