//! Buchberger's algorithm over ℚ with the coprime-pair skip, full
//! auto-reduction, and normal forms by multivariate division.

use crate::exactnum::Rational;

use super::poly::{mono_div, mono_divides, mono_lcm, mono_mul, MonomialOrder, MultiPoly};
use super::PoissonError;

/// A reduced Gröbner basis: monic elements, no leading monomial dividing
/// another, tails fully reduced, sorted by descending leading monomial.
///
/// Reduced bases are unique for a given ideal and order, so equality of
/// `GroebnerBasis` values is equality of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<MultiPoly>,
}

impl GroebnerBasis {
    /// The basis of the zero ideal; normal forms are then the identity.
    pub fn empty(order: MonomialOrder) -> Self {
        GroebnerBasis {
            order,
            basis: Vec::new(),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    /// Remainder of `f` under multivariate division by the basis.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        reduce(f, &self.basis, self.order)
    }

    /// Ideal membership: zero normal form.
    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether the monomial avoids every leading monomial of the basis —
    /// i.e. survives into the quotient's monomial basis.
    pub fn is_standard(&self, exps: &[u16]) -> bool {
        self.basis.iter().all(|g| {
            let (lm, _) = g.leading(self.order).expect("basis elements are nonzero");
            !mono_divides(lm, exps)
        })
    }
}

fn reduce(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let mut rem = MultiPoly::zero(f.nvars());
    let mut work = f.clone();
    'strip: while !work.is_zero() {
        let (lm, lc) = work
            .leading(order)
            .expect("nonzero polynomial has a leading term");
        let lm = lm.to_vec();
        let lc = lc.clone();
        for g in basis {
            let (glm, glc) = g.leading(order).expect("basis elements are nonzero");
            if mono_divides(glm, &lm) {
                let q = mono_div(&lm, glm);
                work = work.sub(&g.mul_monomial(&q, &(&lc / glc)));
                continue 'strip;
            }
        }
        let head = MultiPoly::monomial(lm, lc);
        rem = rem.add(&head);
        work = work.sub(&head);
    }
    rem
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (lf, cf) = f.leading(order).expect("nonzero");
    let (lg, cg) = g.leading(order).expect("nonzero");
    let l = mono_lcm(lf, lg);
    let a = f.mul_monomial(&mono_div(&l, lf), &(&Rational::one() / cf));
    let b = g.mul_monomial(&mono_div(&l, lg), &(&Rational::one() / cg));
    a.sub(&b)
}

/// Computes the reduced Gröbner basis of the ideal spanned by `gens`.
///
/// Pairs with coprime leading monomials are skipped (their S-polynomials
/// always reduce to zero); everything else is the textbook loop followed by
/// redundancy removal, tail reduction, and monic normalization.
pub fn buchberger(gens: &[MultiPoly], order: MonomialOrder) -> Result<GroebnerBasis, PoissonError> {
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(PoissonError::BadInput(
            "at least one nonzero generator is required".into(),
        ));
    }
    let nvars = basis[0].nvars();
    if basis.iter().any(|g| g.nvars() != nvars) {
        return Err(PoissonError::BadInput(
            "generators disagree on the number of variables".into(),
        ));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let li = basis[i].leading(order).expect("nonzero").0.to_vec();
        let lj = basis[j].leading(order).expect("nonzero").0.to_vec();
        if mono_lcm(&li, &lj) == mono_mul(&li, &lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            for i2 in 0..k {
                pairs.push((i2, k));
            }
            basis.push(r);
        }
    }

    // Drop elements whose leading monomial another element already covers.
    let lms: Vec<Vec<u16>> = basis
        .iter()
        .map(|g| g.leading(order).expect("nonzero").0.to_vec())
        .collect();
    let mut dropped = vec![false; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && !dropped[j] && mono_divides(&lms[j], &lms[i]) {
                dropped[i] = true;
                break;
            }
        }
    }
    let survivors: Vec<MultiPoly> = basis
        .into_iter()
        .zip(&dropped)
        .filter(|(_, d)| !**d)
        .map(|(g, _)| g)
        .collect();

    // Tail-reduce each survivor against the others and normalize monic.
    let mut reduced = Vec::with_capacity(survivors.len());
    for i in 0..survivors.len() {
        let others: Vec<MultiPoly> = survivors
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = reduce(&survivors[i], &others, order);
        let lc = g
            .leading(order)
            .expect("tail reduction keeps the leading term")
            .1
            .clone();
        reduced.push(g.scale(&(&Rational::one() / &lc)));
    }
    reduced.sort_by(|a, b| {
        let la = a.leading(order).expect("nonzero").0;
        let lb = b.leading(order).expect("nonzero").0;
        order.cmp_exps(lb, la)
    });
    Ok(GroebnerBasis {
        order,
        basis: reduced,
    })
}
