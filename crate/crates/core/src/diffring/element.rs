//! Ring elements: generators, monomial arithmetic, grading, derivation, and
//! the reduction of higher kernels to the generator alphabet.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::exactnum::{CyclotomicNumber, Rational};
use crate::special::TwistParameters;

use super::DiffringError;

/// Compact twist identifier `(θ, λ) = (ζ_N^a, r/T)`, fully reduced so that
/// equal twists compare equal; orderable so it can sit inside generator keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistKey {
    theta_num: u32,
    theta_den: u32,
    lambda_num: u32,
    lambda_den: u32,
}

impl TwistKey {
    /// Builds the key for `θ = ζ_n^a`, `λ = r/t`, reducing both fractions.
    pub fn new(a: i64, n: u32, r: u32, t: u32) -> Result<Self, DiffringError> {
        if n == 0 || t == 0 {
            return Err(DiffringError::BadGenerator(
                "twist denominators must be positive".into(),
            ));
        }
        if r >= t {
            return Err(DiffringError::BadGenerator(format!(
                "twist shift {r}/{t} outside [0,1)"
            )));
        }
        let a = a.rem_euclid(n as i64) as u32;
        let g = a.gcd(&n);
        let (theta_num, theta_den) = if a == 0 { (0, 1) } else { (a / g, n / g) };
        let g = if r == 0 { t } else { r.gcd(&t) };
        let (lambda_num, lambda_den) = if r == 0 { (0, 1) } else { (r / g, t / g) };
        Ok(TwistKey {
            theta_num,
            theta_den,
            lambda_num,
            lambda_den,
        })
    }

    /// The trivial twist `(1, 0)`.
    pub fn untwisted() -> Self {
        TwistKey {
            theta_num: 0,
            theta_den: 1,
            lambda_num: 0,
            lambda_den: 1,
        }
    }

    /// Converts to the validated parameter pair used by the series layer.
    pub fn to_parameters(&self) -> Result<TwistParameters, DiffringError> {
        let theta = CyclotomicNumber::root_of_unity(self.theta_den, self.theta_num as i64)
            .map_err(crate::special::SpecialError::from)?;
        let lambda = Rational::new(self.lambda_num as i64, self.lambda_den as i64);
        Ok(TwistParameters::new(theta, lambda)?)
    }
}

impl fmt::Display for TwistKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.theta_num, self.theta_den) {
            (0, _) => write!(f, "th=1")?,
            (1, 2) => write!(f, "th=-1")?,
            (a, n) => write!(f, "th={a}/{n}")?,
        }
        if self.lambda_num == 0 {
            write!(f, ",la=0")
        } else {
            write!(f, ",la={}/{}", self.lambda_num, self.lambda_den)
        }
    }
}

/// A generator symbol.  Kernel generators store ordered pairs with `i < j`;
/// use the [`DiffRingElement`] constructors, which normalize orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// Untwisted Eisenstein symbol of the stored (even) weight.
    EHat(u32),
    /// Twisted Eisenstein symbol of the stored weight, tied to a twist key.
    GHat(u32, TwistKey),
    /// First P-type kernel in `z_i − z_j`.
    P1(u8, u8),
    /// Second P-type kernel.
    P2(u8, u8),
    /// Odd Weierstrass-zeta-type kernel.
    WP1(u8, u8),
    /// Weierstrass function kernel.
    WP2(u8, u8),
    /// Derivative-normalized Weierstrass kernel.
    WP3(u8, u8),
}

impl Gen {
    /// Modular weight of the symbol.
    pub fn weight(&self) -> i64 {
        match self {
            Gen::EHat(w) => *w as i64,
            Gen::GHat(k, _) => *k as i64,
            Gen::P1(..) | Gen::WP1(..) => 1,
            Gen::P2(..) | Gen::WP2(..) => 2,
            Gen::WP3(..) => 3,
        }
    }

    /// The point pair for kernel symbols, `None` for pure `q`-symbols.
    pub fn pair(&self) -> Option<(u8, u8)> {
        match self {
            Gen::P1(i, j) | Gen::P2(i, j) | Gen::WP1(i, j) | Gen::WP2(i, j) | Gen::WP3(i, j) => {
                Some((*i, *j))
            }
            _ => None,
        }
    }

    /// Pole order in `z` (0 for `q`-symbols).
    pub fn pole_order(&self) -> i64 {
        match self {
            Gen::P1(..) | Gen::WP1(..) => 1,
            Gen::P2(..) | Gen::WP2(..) => 2,
            Gen::WP3(..) => 3,
            _ => 0,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::EHat(w) => write!(f, "E{w}"),
            Gen::GHat(k, key) => {
                if *key == TwistKey::untwisted() {
                    write!(f, "G[{k}]")
                } else {
                    write!(f, "G[{k};{key}]")
                }
            }
            Gen::P1(i, j) => write!(f, "P1({i},{j})"),
            Gen::P2(i, j) => write!(f, "P2({i},{j})"),
            Gen::WP1(i, j) => write!(f, "WP1({i},{j})"),
            Gen::WP2(i, j) => write!(f, "WP2({i},{j})"),
            Gen::WP3(i, j) => write!(f, "WP3({i},{j})"),
        }
    }
}

/// A monomial: generators with positive multiplicities.
pub(super) type Monomial = BTreeMap<Gen, u32>;

/// A polynomial over [`CyclotomicNumber`] in the generator alphabet, stored
/// fully distributed with sorted monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiffRingElement {
    terms: BTreeMap<Monomial, CyclotomicNumber>,
}

fn kernel_pair(m: &str, i: u8, j: u8) -> Result<(u8, u8, bool), DiffringError> {
    if i == j || i == 0 || j == 0 {
        return Err(DiffringError::BadGenerator(format!(
            "{m} needs two distinct positive point indices, got ({i},{j})"
        )));
    }
    Ok(if i < j { (i, j, false) } else { (j, i, true) })
}

impl DiffRingElement {
    pub fn zero() -> Self {
        DiffRingElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::one())
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(), c);
        }
        DiffRingElement { terms }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::constant(CyclotomicNumber::from_rational(r))
    }

    /// Single-generator element with coefficient 1.  Kernel generators must
    /// already be oriented; prefer the named constructors below.
    pub fn from_gen(g: Gen) -> Self {
        let mut m = Monomial::new();
        m.insert(g, 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, CyclotomicNumber::one());
        DiffRingElement { terms }
    }

    /// The Eisenstein symbol `EHat(w)`, `w` even and ≥ 2.
    pub fn e_hat(w: u32) -> Result<Self, DiffringError> {
        if w < 2 || w % 2 != 0 {
            return Err(DiffringError::BadGenerator(format!(
                "EHat weight must be even and >= 2, got {w}"
            )));
        }
        Ok(Self::from_gen(Gen::EHat(w)))
    }

    /// The twisted symbol `GHat(k)` for the given twist key.
    pub fn g_hat(k: u32, key: TwistKey) -> Self {
        Self::from_gen(Gen::GHat(k, key))
    }

    /// P-type kernel `P_m(z_i − z_j)`, `m ∈ {1, 2}`; swapped pairs are
    /// rewritten through the parity rule `P_m(j,i) = (−1)^m P_m(i,j)`.
    pub fn p(m: u8, i: u8, j: u8) -> Result<Self, DiffringError> {
        let (a, b, swapped) = kernel_pair("P", i, j)?;
        let g = match m {
            1 => Gen::P1(a, b),
            2 => Gen::P2(a, b),
            _ => {
                return Err(DiffringError::BadGenerator(format!(
                    "P-generator order must be 1 or 2, got {m} (use reduce_p)"
                )))
            }
        };
        let e = Self::from_gen(g);
        Ok(if swapped && m % 2 == 1 { e.neg() } else { e })
    }

    /// Weierstrass kernel `℘_m(z_i − z_j)`, `m ∈ {1, 2, 3}`, same parity rule.
    pub fn wp(m: u8, i: u8, j: u8) -> Result<Self, DiffringError> {
        let (a, b, swapped) = kernel_pair("WP", i, j)?;
        let g = match m {
            1 => Gen::WP1(a, b),
            2 => Gen::WP2(a, b),
            3 => Gen::WP3(a, b),
            _ => {
                return Err(DiffringError::BadGenerator(format!(
                    "WP-generator order must be 1, 2 or 3, got {m} (use reduce_wp)"
                )))
            }
        };
        let e = Self::from_gen(g);
        Ok(if swapped && m % 2 == 1 { e.neg() } else { e })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(super) fn terms(&self) -> impl Iterator<Item = (&Monomial, &CyclotomicNumber)> {
        self.terms.iter()
    }

    /// All generators occurring in the element.
    pub fn generators(&self) -> BTreeSet<Gen> {
        self.terms.keys().flat_map(|m| m.keys().copied()).collect()
    }

    /// True when no kernel generator occurs, i.e. the element is a pure
    /// `q`-symbol polynomial.
    pub fn is_z_independent(&self) -> bool {
        self.generators().iter().all(|g| g.pair().is_none())
    }

    fn insert(&mut self, m: Monomial, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(CyclotomicNumber::zero);
        *entry = entry.add(&c);
        // Re-borrowing to drop cancelled terms keeps normal form tight.
        let dead: Vec<Monomial> = self
            .terms
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        for k in dead {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DiffRingElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (g, e) in m2 {
                    *m.entry(*g).or_insert(0) += e;
                }
                out.insert(m, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DiffRingElement {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&CyclotomicNumber::from_rational(r.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The common modular weight, or the list of distinct weights present.
    pub fn weight(&self) -> Result<i64, DiffringError> {
        let mut weights: BTreeSet<i64> = BTreeSet::new();
        for m in self.terms.keys() {
            weights.insert(m.iter().map(|(g, e)| g.weight() * *e as i64).sum());
        }
        match weights.len() {
            0 => Ok(0),
            1 => Ok(*weights.iter().next().unwrap()),
            _ => Err(DiffringError::Inhomogeneous(weights.into_iter().collect())),
        }
    }

    /// The largest total `z`-pole order over all monomials; bounds how much
    /// `z`-window a product expansion can consume.
    pub fn pole_budget(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|(g, e)| g.pole_order() * *e as i64).sum())
            .max()
            .unwrap_or(0)
    }

    /// Derivative of a single generator in its own variable `w = z_a − z_b`.
    ///
    /// The `P2` rule encodes the closure claimed for the P-type pair; it is a
    /// formal rule of the ring (see the expansion tests for how far the series
    /// side follows it).
    fn closure_rule(g: &Gen, key: &TwistKey) -> Option<Self> {
        match g {
            Gen::P1(i, j) => Some(Self::from_gen(Gen::P2(*i, *j)).neg()),
            Gen::P2(i, j) => {
                let p1 = Self::from_gen(Gen::P1(*i, *j));
                let g1 = Self::g_hat(1, *key);
                let p2 = Self::from_gen(Gen::P2(*i, *j));
                Some(p1.add(&g1).mul(&p2).scale_rational(&Rational::from_int(-2)))
            }
            Gen::WP1(i, j) => Some(Self::from_gen(Gen::WP2(*i, *j)).neg()),
            Gen::WP2(i, j) => {
                Some(Self::from_gen(Gen::WP3(*i, *j)).scale_rational(&Rational::from_int(-2)))
            }
            Gen::WP3(i, j) => {
                let wp2 = Self::from_gen(Gen::WP2(*i, *j));
                let e4 = Self::from_gen(Gen::EHat(4));
                Some(
                    wp2.pow(2)
                        .scale_rational(&Rational::from_int(-3))
                        .add(&e4.scale_rational(&Rational::from_int(15))),
                )
            }
            _ => None,
        }
    }

    /// The derivation `∂/∂z_i`, extended by Leibniz from the closure rules
    /// `∂P1 = −P2`, `∂P2 = −2(P1 + Ĝ₁)P2`, `∂WP1 = −WP2`, `∂WP2 = −2WP3`,
    /// `∂WP3 = −3WP2² + 15Ê₄`; `q`-symbols are constants.  A generator on the
    /// pair `(a,b)` responds with sign `+1` to `z_a` and `−1` to `z_b`.
    pub fn d_z(&self, i: u8, key: &TwistKey) -> Self {
        let mut out = Self::zero();
        for (mono, coeff) in &self.terms {
            for (g, e) in mono {
                let Some((a, b)) = g.pair() else { continue };
                if i != a && i != b {
                    continue;
                }
                let orient = if i == a { 1 } else { -1 };
                let deriv = Self::closure_rule(g, key).expect("kernel symbols have rules");
                let mut rest = mono.clone();
                if *e == 1 {
                    rest.remove(g);
                } else {
                    rest.insert(*g, e - 1);
                }
                let factor = Rational::from_int(orient * *e as i64);
                let base = DiffRingElement {
                    terms: BTreeMap::from([(rest, coeff.scale(&factor))]),
                };
                out = out.add(&base.mul(&deriv));
            }
        }
        out
    }
}

impl fmt::Display for DiffRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff_str = match coeff.as_rational() {
                Some(r) if r.is_one() && !mono.is_empty() => None,
                Some(r) if !r.is_negative() && !format!("{r}").contains('/') && mono.is_empty() => {
                    Some(format!("{r}"))
                }
                Some(r) => Some(if r.is_negative() || format!("{r}").contains('/') {
                    format!("({r})")
                } else {
                    format!("{r}")
                }),
                None => Some(format!("({coeff})")),
            };
            let mut parts: Vec<String> = Vec::new();
            if let Some(c) = coeff_str {
                parts.push(c);
            }
            for (g, e) in mono {
                if *e == 1 {
                    parts.push(format!("{g}"));
                } else {
                    parts.push(format!("{g}^{e}"));
                }
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Rewrites `P̂_m(z_i − z_j)` as a ring polynomial by repeatedly applying the
/// derivation step `P̂_{k+1} = −(1/k)·∂_{z_i}P̂_k`, starting from the `P1`,
/// `P2` generators.  For `m ≥ 3` this inherits the formal `P2` rule.
pub fn reduce_p(m: u32, i: u8, j: u8, key: &TwistKey) -> Result<DiffRingElement, DiffringError> {
    if m < 1 {
        return Err(DiffringError::BadGenerator(
            "P-kernel order must be at least 1".into(),
        ));
    }
    if i > j {
        let e = reduce_p(m, j, i, key)?;
        return Ok(if m % 2 == 1 { e.neg() } else { e });
    }
    let mut e = DiffRingElement::p(1, i, j)?;
    for k in 1..m {
        e = e.d_z(i, key).scale_rational(&Rational::new(-1, k as i64));
    }
    Ok(e)
}

/// Rewrites `℘̂_n(z_i − z_j)` in terms of `WP2`, `WP3`, `Ê₄`, `Ê₆` via
/// `℘̂_{k+1} = −(1/k)·∂_{z_i}℘̂_k`; sound at every order.
pub fn reduce_wp(n: u32, i: u8, j: u8) -> Result<DiffRingElement, DiffringError> {
    if n < 2 {
        return Err(DiffringError::BadGenerator(
            "WP reduction starts at order 2".into(),
        ));
    }
    if i > j {
        let e = reduce_wp(n, j, i)?;
        return Ok(if n % 2 == 1 { e.neg() } else { e });
    }
    let key = TwistKey::untwisted();
    let mut e = DiffRingElement::wp(2, i, j)?;
    for k in 2..n {
        e = e.d_z(i, &key).scale_rational(&Rational::new(-1, k as i64));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key3() -> TwistKey {
        TwistKey::new(1, 3, 1, 3).unwrap()
    }

    #[test]
    fn twist_key_normalization() {
        assert_eq!(
            TwistKey::new(4, 6, 0, 5).unwrap(),
            TwistKey::new(2, 3, 0, 1).unwrap()
        );
        assert_eq!(
            TwistKey::new(-1, 3, 2, 6).unwrap(),
            TwistKey::new(2, 3, 1, 3).unwrap()
        );
        assert_eq!(TwistKey::new(5, 5, 0, 1).unwrap(), TwistKey::untwisted());
        assert!(TwistKey::new(1, 2, 3, 3).is_err());
        assert!(TwistKey::new(1, 0, 0, 1).is_err());
    }

    #[test]
    fn parity_normalization_at_construction() {
        let p1 = DiffRingElement::p(1, 2, 1).unwrap();
        assert_eq!(p1, DiffRingElement::p(1, 1, 2).unwrap().neg());
        let p2 = DiffRingElement::p(2, 2, 1).unwrap();
        assert_eq!(p2, DiffRingElement::p(2, 1, 2).unwrap());
        let wp3 = DiffRingElement::wp(3, 3, 1).unwrap();
        assert_eq!(wp3, DiffRingElement::wp(3, 1, 3).unwrap().neg());
        assert!(DiffRingElement::p(1, 1, 1).is_err());
        assert!(DiffRingElement::e_hat(3).is_err());
    }

    #[test]
    fn weight_grading() {
        let e = DiffRingElement::g_hat(3, key3()).mul(&DiffRingElement::p(1, 1, 2).unwrap());
        assert_eq!(e.weight().unwrap(), 4);
        let mixed = DiffRingElement::p(1, 1, 2)
            .unwrap()
            .add(&DiffRingElement::p(2, 1, 2).unwrap());
        assert_eq!(
            mixed.weight(),
            Err(DiffringError::Inhomogeneous(vec![1, 2]))
        );
        let same = DiffRingElement::p(2, 1, 2)
            .unwrap()
            .add(&DiffRingElement::e_hat(2).unwrap());
        assert_eq!(same.weight().unwrap(), 2);
    }

    #[test]
    fn product_weights_add_and_dz_raises_by_one() {
        let key = key3();
        let a = DiffRingElement::wp(2, 1, 2).unwrap();
        let b = DiffRingElement::p(1, 1, 2)
            .unwrap()
            .add(&DiffRingElement::g_hat(1, key));
        let w = a.mul(&b).weight().unwrap();
        assert_eq!(w, a.weight().unwrap() + b.weight().unwrap());
        for e in [
            DiffRingElement::p(1, 1, 2).unwrap(),
            DiffRingElement::p(2, 1, 2).unwrap(),
            DiffRingElement::wp(1, 1, 2).unwrap(),
            DiffRingElement::wp(2, 1, 2).unwrap(),
            DiffRingElement::wp(3, 1, 2).unwrap(),
        ] {
            let d = e.d_z(1, &key);
            assert_eq!(d.weight().unwrap(), e.weight().unwrap() + 1, "{e}");
        }
    }

    #[test]
    fn derivation_signs_and_rules() {
        let key = TwistKey::untwisted();
        let p1 = DiffRingElement::p(1, 1, 2).unwrap();
        assert_eq!(p1.d_z(1, &key), DiffRingElement::p(2, 1, 2).unwrap().neg());
        assert_eq!(p1.d_z(2, &key), DiffRingElement::p(2, 1, 2).unwrap());
        assert!(p1.d_z(3, &key).is_zero());
        let wp2 = DiffRingElement::wp(2, 1, 2).unwrap();
        assert_eq!(
            wp2.d_z(1, &key),
            DiffRingElement::wp(3, 1, 2)
                .unwrap()
                .scale_rational(&Rational::from_int(-2))
        );
        assert!(DiffRingElement::e_hat(4).unwrap().d_z(1, &key).is_zero());
    }

    #[test]
    fn leibniz_on_a_square() {
        let key = TwistKey::untwisted();
        let wp1 = DiffRingElement::wp(1, 1, 2).unwrap();
        let lhs = wp1.pow(2).d_z(1, &key);
        let rhs = wp1
            .mul(&DiffRingElement::wp(2, 1, 2).unwrap())
            .scale_rational(&Rational::from_int(-2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduce_p_low_orders() {
        let key = TwistKey::untwisted();
        assert_eq!(
            reduce_p(1, 1, 2, &key).unwrap(),
            DiffRingElement::p(1, 1, 2).unwrap()
        );
        assert_eq!(
            reduce_p(2, 1, 2, &key).unwrap(),
            DiffRingElement::p(2, 1, 2).unwrap()
        );
        let p3 = reduce_p(3, 1, 2, &key).unwrap();
        let expect = DiffRingElement::p(1, 1, 2)
            .unwrap()
            .add(&DiffRingElement::g_hat(1, key))
            .mul(&DiffRingElement::p(2, 1, 2).unwrap());
        assert_eq!(p3, expect);
        let p4 = reduce_p(4, 1, 2, &key).unwrap();
        let p2 = DiffRingElement::p(2, 1, 2).unwrap();
        let s = DiffRingElement::p(1, 1, 2)
            .unwrap()
            .add(&DiffRingElement::g_hat(1, key));
        let expect4 = p2
            .pow(2)
            .scale_rational(&Rational::new(1, 3))
            .add(&s.pow(2).mul(&p2).scale_rational(&Rational::new(2, 3)));
        assert_eq!(p4, expect4);
        assert_eq!(p4.weight().unwrap(), 4);
    }

    #[test]
    fn reduce_wp_known_forms() {
        let wp2 = DiffRingElement::wp(2, 1, 2).unwrap();
        let wp3 = DiffRingElement::wp(3, 1, 2).unwrap();
        let e4 = DiffRingElement::e_hat(4).unwrap();
        assert_eq!(reduce_wp(2, 1, 2).unwrap(), wp2);
        assert_eq!(reduce_wp(3, 1, 2).unwrap(), wp3);
        // ℘̂₄ = WP2² − 5Ê₄.
        assert_eq!(
            reduce_wp(4, 1, 2).unwrap(),
            wp2.pow(2).sub(&e4.scale_rational(&Rational::from_int(5)))
        );
        // ℘̂₅ = WP2·WP3.
        assert_eq!(reduce_wp(5, 1, 2).unwrap(), wp2.mul(&wp3));
        // ℘̂₆ = (2/5)WP3² + (3/5)WP2³ − 3Ê₄·WP2.
        let expect6 = wp3
            .pow(2)
            .scale_rational(&Rational::new(2, 5))
            .add(&wp2.pow(3).scale_rational(&Rational::new(3, 5)))
            .sub(&e4.mul(&wp2).scale_rational(&Rational::from_int(3)));
        assert_eq!(reduce_wp(6, 1, 2).unwrap(), expect6);
        for n in 2..=6u32 {
            assert_eq!(reduce_wp(n, 1, 2).unwrap().weight().unwrap(), n as i64);
        }
    }

    #[test]
    fn display_canonical_form() {
        let key = TwistKey::new(1, 2, 0, 1).unwrap();
        let e = DiffRingElement::g_hat(3, key)
            .mul(&DiffRingElement::p(1, 1, 2).unwrap())
            .add(&DiffRingElement::e_hat(4).unwrap());
        assert_eq!(format!("{e}"), "E4 + G[3;th=-1,la=0]*P1(1,2)");
        let c = DiffRingElement::p(2, 1, 2)
            .unwrap()
            .scale_rational(&Rational::new(-1, 2));
        assert_eq!(format!("{c}"), "(-1/2)*P2(1,2)");
    }
}
