//! First-order formal operators over the ring and their composition in the
//! `q`-sector.
//!
//! A [`FormalOperator`] is a sum of `coefficient · symbol` terms where the
//! symbol is one of `q d/dq`, `z_i d/dz_i`, `d/dz_i`, or the identity.  On
//! `z`-independent inputs the `z`-symbols act as zero, which collapses the
//! operator to `A·(q d/dq) + B`; [`compose_q`] iterates that collapsed form
//! symbolically, using the closed derivatives of `Ê₂, Ê₄, Ê₆`.

use std::fmt;

use crate::exactnum::Rational;
use crate::qseries::PuiseuxSeries;

use super::element::{DiffRingElement, Gen, TwistKey};
use super::expand::expand_q;
use super::DiffringError;

/// Derivation symbol attached to an operator term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivationSymbol {
    /// `q·d/dq`, raising weight by 2.
    QDq,
    /// `z_i·d/dz_i`, weight 0.
    ZDz(u8),
    /// `d/dz_i`, weight 1.
    Dz(u8),
    /// Multiplication operator.
    Id,
}

impl DerivationSymbol {
    /// Weight the symbol adds on top of its coefficient.
    pub fn weight(&self) -> i64 {
        match self {
            DerivationSymbol::QDq => 2,
            DerivationSymbol::Dz(_) => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for DerivationSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationSymbol::QDq => write!(f, "qDq"),
            DerivationSymbol::ZDz(i) => write!(f, "z{i}Dz{i}"),
            DerivationSymbol::Dz(i) => write!(f, "Dz{i}"),
            DerivationSymbol::Id => write!(f, "id"),
        }
    }
}

/// A finite sum `Σ aᵢ·σᵢ` of ring elements against derivation symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalOperator {
    terms: Vec<(DiffRingElement, DerivationSymbol)>,
}

impl FormalOperator {
    pub fn new(terms: Vec<(DiffRingElement, DerivationSymbol)>) -> Self {
        FormalOperator { terms }
    }

    pub fn terms(&self) -> &[(DiffRingElement, DerivationSymbol)] {
        &self.terms
    }

    /// Common weight of all terms (coefficient weight plus symbol weight).
    pub fn weight(&self) -> Result<i64, DiffringError> {
        let mut seen: Vec<i64> = Vec::new();
        for (c, s) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let w = c.weight()? + s.weight();
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
        match seen.len() {
            0 => Ok(0),
            1 => Ok(seen[0]),
            _ => {
                seen.sort_unstable();
                Err(DiffringError::Inhomogeneous(seen))
            }
        }
    }

    /// The `(A, B)` of the collapsed `q`-sector form `A·(q d/dq) + B`;
    /// `z`-symbols are dropped, so their coefficients may depend on `z`.
    fn q_sector(&self) -> Result<(DiffRingElement, DiffRingElement), DiffringError> {
        let mut a = DiffRingElement::zero();
        let mut b = DiffRingElement::zero();
        for (c, s) in &self.terms {
            match s {
                DerivationSymbol::QDq => {
                    if !c.is_z_independent() {
                        return Err(DiffringError::ZDependent(c.to_string()));
                    }
                    a = a.add(c);
                }
                DerivationSymbol::Id => {
                    if !c.is_z_independent() {
                        return Err(DiffringError::ZDependent(c.to_string()));
                    }
                    b = b.add(c);
                }
                DerivationSymbol::ZDz(_) | DerivationSymbol::Dz(_) => {}
            }
        }
        Ok((a, b))
    }

    /// Applies the operator to a function of `q` alone.
    pub fn apply_q(
        &self,
        f: &PuiseuxSeries,
        key: &TwistKey,
        qord: i64,
    ) -> Result<PuiseuxSeries, DiffringError> {
        let (a, b) = self.q_sector()?;
        let out = expand_q(&a, key, qord)?
            .mul(&f.qdq())
            .add(&expand_q(&b, key, qord)?.mul(f));
        Ok(out)
    }
}

impl fmt::Display for FormalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, s)| format!("({c})·{s}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The weight-2 operator on `n` points distinguished at point `j`:
///
/// ```text
/// q d/dq + α·Ê₂ + Ê₂·Σᵢ z_i d/dz_i − Σ_{i≠j} WP1(z_i − z_j)·d/dz_i
/// ```
pub fn build_o_operator(n: u8, j: u8, alpha: &Rational) -> Result<FormalOperator, DiffringError> {
    if n == 0 || j == 0 || j > n {
        return Err(DiffringError::BadGenerator(format!(
            "need 1 <= j <= n, got n={n}, j={j}"
        )));
    }
    let e2 = DiffRingElement::e_hat(2)?;
    let mut terms = vec![
        (DiffRingElement::one(), DerivationSymbol::QDq),
        (e2.scale_rational(alpha), DerivationSymbol::Id),
    ];
    for i in 1..=n {
        terms.push((e2.clone(), DerivationSymbol::ZDz(i)));
    }
    for i in 1..=n {
        if i != j {
            terms.push((DiffRingElement::wp(1, i, j)?.neg(), DerivationSymbol::Dz(i)));
        }
    }
    Ok(FormalOperator::new(terms))
}

/// Symbolic `q d/dq` on an element.  Closed only on `Ê₂, Ê₄, Ê₆` through
///
/// ```text
/// qDq Ê₂ = −Ê₂² + 5Ê₄,   qDq Ê₄ = −4Ê₂Ê₄ + 14Ê₆,   qDq Ê₆ = −6Ê₂Ê₆ + (60/7)Ê₄²
/// ```
fn qdq_element(e: &DiffRingElement) -> Result<DiffRingElement, DiffringError> {
    fn gen_rule(g: &Gen) -> Result<DiffRingElement, DiffringError> {
        let e2 = DiffRingElement::e_hat(2)?;
        let e4 = DiffRingElement::e_hat(4)?;
        let e6 = DiffRingElement::e_hat(6)?;
        match g {
            Gen::EHat(2) => Ok(e2
                .pow(2)
                .neg()
                .add(&e4.scale_rational(&Rational::from_int(5)))),
            Gen::EHat(4) => Ok(e2
                .mul(&e4)
                .scale_rational(&Rational::from_int(-4))
                .add(&e6.scale_rational(&Rational::from_int(14)))),
            Gen::EHat(6) => Ok(e2
                .mul(&e6)
                .scale_rational(&Rational::from_int(-6))
                .add(&e4.pow(2).scale_rational(&Rational::new(60, 7)))),
            other => Err(DiffringError::NotClosed(format!(
                "q d/dq of {other} is outside the E2/E4/E6 subring"
            ))),
        }
    }

    let mut out = DiffRingElement::zero();
    for (mono, coeff) in e.terms() {
        for (g, exp) in mono {
            let deriv = gen_rule(g)?;
            let mut rest = mono.clone();
            if *exp == 1 {
                rest.remove(g);
            } else {
                rest.insert(*g, exp - 1);
            }
            let mut base = DiffRingElement::constant(coeff.clone());
            base = base.scale_rational(&Rational::from_int(*exp as i64));
            for (h, k) in &rest {
                base = base.mul(&DiffRingElement::from_gen(*h).pow(*k));
            }
            out = out.add(&base.mul(&deriv));
        }
    }
    Ok(out)
}

/// An operator in powers of `q d/dq`: `Σᵢ cᵢ·(q d/dq)ⁱ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComposedOperator {
    coeffs: Vec<DiffRingElement>,
}

impl ComposedOperator {
    pub fn identity() -> Self {
        ComposedOperator {
            coeffs: vec![DiffRingElement::one()],
        }
    }

    pub fn new(coeffs: Vec<DiffRingElement>) -> Self {
        ComposedOperator { coeffs }
    }

    /// Coefficients by power of `q d/dq`, constant term first.
    pub fn coeffs(&self) -> &[DiffRingElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Expands every coefficient into its `q`-series.
    pub fn to_series_coeffs(
        &self,
        key: &TwistKey,
        qord: i64,
    ) -> Result<Vec<PuiseuxSeries>, DiffringError> {
        self.coeffs.iter().map(|c| expand_q(c, key, qord)).collect()
    }

    pub fn apply(
        &self,
        f: &PuiseuxSeries,
        key: &TwistKey,
        qord: i64,
    ) -> Result<PuiseuxSeries, DiffringError> {
        let mut out = PuiseuxSeries::zero(f.denom());
        let mut fi = f.clone();
        for c in &self.coeffs {
            out = out.add(&expand_q(c, key, qord)?.mul(&fi));
            fi = fi.qdq();
        }
        Ok(out)
    }
}

impl fmt::Display for ComposedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match i {
                0 => parts.push(format!("({c})")),
                1 => parts.push(format!("({c})·qDq")),
                _ => parts.push(format!("({c})·qDq^{i}")),
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Composes a first-order operator onto a composed one, in the `q`-sector:
/// with `op = A·(q d/dq) + B` after dropping `z`-symbols,
/// `op ∘ Σ cᵢ Dⁱ = Σ (A·qDq(cᵢ) + B·cᵢ) Dⁱ + Σ A·cᵢ Dⁱ⁺¹` where `D = q d/dq`.
/// Requires every `cᵢ` to lie in the `Ê₂, Ê₄, Ê₆` subring.
pub fn compose_q(
    op: &FormalOperator,
    tail: &ComposedOperator,
) -> Result<ComposedOperator, DiffringError> {
    let (a, b) = op.q_sector()?;
    let mut coeffs = vec![DiffRingElement::zero(); tail.coeffs.len() + 1];
    for (i, c) in tail.coeffs.iter().enumerate() {
        coeffs[i] = coeffs[i].add(&a.mul(&qdq_element(c)?)).add(&b.mul(c));
        coeffs[i + 1] = coeffs[i + 1].add(&a.mul(c));
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(ComposedOperator { coeffs })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::exactnum::CyclotomicNumber;
    use crate::special::eisenstein;

    fn series_from(coeffs: &[i64]) -> PuiseuxSeries {
        PuiseuxSeries::from_terms(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| (n as i64, CyclotomicNumber::from_int(*c))),
            coeffs.len() as i64,
        )
    }

    #[test]
    fn operator_shape_and_weight() {
        let alpha = Rational::new(-1, 6);
        let o1 = build_o_operator(1, 1, &alpha).unwrap();
        assert_eq!(o1.terms().len(), 3);
        assert_eq!(o1.weight().unwrap(), 2);
        let o2 = build_o_operator(2, 1, &alpha).unwrap();
        assert_eq!(o2.terms().len(), 5);
        assert_eq!(o2.weight().unwrap(), 2);
        // The off-point coefficient −WP1(2,1) normalizes to +WP1(1,2).
        let dz2 = o2
            .terms()
            .iter()
            .find(|(_, s)| *s == DerivationSymbol::Dz(2))
            .unwrap();
        assert_eq!(dz2.0, DiffRingElement::wp(1, 1, 2).unwrap());
        assert!(build_o_operator(1, 2, &alpha).is_err());
    }

    #[test]
    fn symbolic_qdq_matches_series_qdq() {
        let e2 = DiffRingElement::e_hat(2).unwrap();
        let e4 = DiffRingElement::e_hat(4).unwrap();
        let elem = e2
            .mul(&e4)
            .add(&e2.pow(3).scale_rational(&Rational::new(1, 2)));
        let key = TwistKey::untwisted();
        let sym = expand_q(&qdq_element(&elem).unwrap(), &key, 12).unwrap();
        let num = expand_q(&elem, &key, 12).unwrap().qdq();
        assert!(sym.agrees_with(&num));
        let stray = DiffRingElement::g_hat(2, key);
        assert!(matches!(
            qdq_element(&stray),
            Err(DiffringError::NotClosed(_))
        ));
        assert!(matches!(
            qdq_element(&DiffRingElement::e_hat(8).unwrap()),
            Err(DiffringError::NotClosed(_))
        ));
    }

    #[test]
    fn z_symbols_vanish_on_q_functions() {
        // On z-independent input the two-point operator acts exactly like the
        // one-point one: the extra z-symbol terms contribute nothing.
        let alpha = Rational::from_int(4);
        let key = TwistKey::untwisted();
        let f = series_from(&[1, -3, 7, 0, 2, 5, -1, 8]);
        let o1 = build_o_operator(1, 1, &alpha).unwrap();
        let o2 = build_o_operator(2, 1, &alpha).unwrap();
        let g1 = o1.apply_q(&f, &key, 8).unwrap();
        let g2 = o2.apply_q(&f, &key, 8).unwrap();
        assert!(g1.agrees_with(&g2));
        let manual = f
            .qdq()
            .add(&eisenstein(2, 8).unwrap().mul(&f).scale_rational(&alpha));
        assert!(g1.agrees_with(&manual));
    }

    #[test]
    fn z_dependent_q_coefficient_is_rejected() {
        let bad = FormalOperator::new(vec![(
            DiffRingElement::wp(1, 1, 2).unwrap(),
            DerivationSymbol::Id,
        )]);
        let f = series_from(&[1, 1]);
        assert!(matches!(
            bad.apply_q(&f, &TwistKey::untwisted(), 4),
            Err(DiffringError::ZDependent(_))
        ));
    }

    #[test]
    fn composition_collapses_o_to_serre_form() {
        let alpha = Rational::from_int(0);
        let o = build_o_operator(2, 1, &alpha).unwrap();
        let once = compose_q(&o, &ComposedOperator::identity()).unwrap();
        assert_eq!(once.degree(), 1);
        assert!(once.coeffs()[0].is_zero());
        assert_eq!(once.coeffs()[1], DiffRingElement::one());
        let twice = compose_q(&o, &once).unwrap();
        assert_eq!(twice.degree(), 2);
        assert!(twice.coeffs()[0].is_zero());
        assert!(twice.coeffs()[1].is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10))]

        #[test]
        fn composite_equals_sequential(coeffs in prop::collection::vec(-9i64..9, 4..9),
                                       anum in -6i64..6) {
            let alpha = Rational::new(anum, 3);
            let key = TwistKey::untwisted();
            let qord = coeffs.len() as i64;
            let f = series_from(&coeffs);
            let o = build_o_operator(2, 1, &alpha).unwrap();
            let once = compose_q(&o, &ComposedOperator::identity()).unwrap();
            let twice = compose_q(&o, &once).unwrap();
            let sequential = o
                .apply_q(&o.apply_q(&f, &key, qord).unwrap(), &key, qord)
                .unwrap();
            let composite = twice.apply(&f, &key, qord).unwrap();
            prop_assert!(composite.agrees_with(&sequential));
        }
    }
}
