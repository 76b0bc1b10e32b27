//! Polynomials in a formal transcendental `pi` symbol.
//!
//! Coefficients are Gaussian rationals `a + b·i`: the exponential
//! coordinate-change coefficients live in `i·ℚ·π^j` for odd `j`, so a purely
//! rational coefficient domain cannot carry them.  The `π^j` term has weight
//! `j`; sums of equal weight stay homogeneous under the ring operations used
//! here.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;

/// An exact Gaussian rational `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if self.im == Rational::from_int(-1) {
                    write!(f, "-i")
                } else {
                    write!(f, "{}*i", self.im)
                }
            }
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}*i", self.re, self.im.abs())
                } else {
                    write!(f, "{}+{}*i", self.re, self.im)
                }
            }
        }
    }
}

/// A polynomial `Σ_j c_j · π^j` with Gaussian-rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PiPolynomial {
    /// Nonzero coefficients keyed by the π-power.
    terms: BTreeMap<u32, GaussianRational>,
}

impl PiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, GaussianRational::one())
    }

    /// The single term `c · π^j`.
    pub fn term(j: u32, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(j, c);
        }
        PiPolynomial { terms }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::term(0, GaussianRational::from_rational(r))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, j: u32) -> GaussianRational {
        self.terms.get(&j).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &GaussianRational)> {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    /// Weight of a homogeneous polynomial (the common π-power), if any.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        it.all(|j| *j == first).then_some(first)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.terms.clone();
        for (j, c) in &rhs.terms {
            let entry = out.entry(*j).or_insert_with(GaussianRational::zero);
            *entry = &*entry + c;
            if entry.is_zero() {
                out.remove(j);
            }
        }
        PiPolynomial { terms: out }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        PiPolynomial {
            terms: self.terms.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<u32, GaussianRational> = BTreeMap::new();
        for (j, c) in &self.terms {
            for (k, d) in &rhs.terms {
                let entry = out.entry(j + k).or_insert_with(GaussianRational::zero);
                *entry = &*entry + &(c * d);
            }
        }
        out.retain(|_, c| !c.is_zero());
        PiPolynomial { terms: out }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut terms: BTreeMap<u32, GaussianRational> =
            self.terms.iter().map(|(j, t)| (*j, t * c)).collect();
        terms.retain(|_, t| !t.is_zero());
        PiPolynomial { terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::from_rational(r.clone()))
    }
}

impl fmt::Display for PiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (j, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let needs_parens = !c.re.is_zero() && !c.im.is_zero();
            if *j == 0 {
                write!(f, "{c}")?;
            } else {
                if needs_parens {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
                if *j == 1 {
                    write!(f, "*pi")?;
                } else {
                    write!(f, "*pi^{j}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi_term(j: u32, n: i64, d: i64) -> PiPolynomial {
        PiPolynomial::term(j, GaussianRational::from_rational(Rational::new(n, d)))
    }

    #[test]
    fn weight_grading() {
        let a = pi_term(2, -1, 3);
        assert_eq!(a.weight(), Some(2));
        let mixed = a.add(&pi_term(1, 1, 1));
        assert_eq!(mixed.weight(), None);
        assert_eq!(a.mul(&pi_term(3, 2, 1)).weight(), Some(5));
    }

    #[test]
    fn gaussian_multiplication() {
        let i = GaussianRational::i();
        assert_eq!(
            &i * &i,
            GaussianRational::from_rational(Rational::from_int(-1))
        );
        // (1+2i)(3−i) = 5+5i
        let a = GaussianRational::new(Rational::one(), Rational::from_int(2));
        let b = GaussianRational::new(Rational::from_int(3), Rational::from_int(-1));
        assert_eq!(
            &a * &b,
            GaussianRational::new(Rational::from_int(5), Rational::from_int(5))
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(pi_term(2, -1, 3).to_string(), "-1/3*pi^2");
        let ipi = PiPolynomial::term(1, GaussianRational::i()).neg();
        assert_eq!(ipi.to_string(), "-i*pi");
        assert_eq!(PiPolynomial::zero().to_string(), "0");
    }
}
