//! Dimension diagnostics for graded Poisson quotients: standard-monomial
//! counts per degree, the quotient of each graded slice by the span of
//! reduced bracket images (for the ring and for module fixtures), and a
//! power-iteration nilpotency probe.
//!
//! Degrees live on the lattice `(1/L)ℤ` where `L` clears all weight
//! denominators; dimension vectors are indexed in lattice steps and
//! `step_denom` records `L`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;

use crate::exactnum::Rational;

use super::groebner::GroebnerBasis;
use super::poly::MultiPoly;
use super::presentation::{ModulePresentation, PoissonPresentation};
use super::PoissonError;

/// Verdict of the finiteness heuristic on a dimension vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stabilization {
    /// The top quarter of the window is clear and the last nonzero entry
    /// sits below its midpoint; the quotient looks finite-dimensional.
    Stabilized,
    /// Nonzero entries persist too close to the cutoff to call.
    Inconclusive,
}

/// Degreewise dimensions of a quotient.  `dims[s]` is the dimension in
/// degree `s / step_denom`; the window runs from degree zero through the
/// requested cutoff inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDims {
    pub dims: Vec<usize>,
    pub step_denom: i64,
    pub status: Stabilization,
}

impl QuotientDims {
    /// Total dimension over the window.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Lattice index of the last nonzero entry, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.dims.iter().rposition(|&d| d != 0)
    }
}

/// Outcome of the nilpotency probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpotencyOutcome {
    /// Least `m` for which the `m`-th power lies in the ideal.
    Index(u32),
    /// No power up to the cutoff reduced to zero.
    CutoffExceeded { cutoff: u32 },
}

/// The denominator `L` of the degree lattice `(1/L)ℤ` spanned by the given
/// weights.
pub fn degree_lattice(weights: &[Rational]) -> Result<i64, PoissonError> {
    lattice_denominator(weights)
}

fn lattice_denominator<'a, I>(weights: I) -> Result<i64, PoissonError>
where
    I: IntoIterator<Item = &'a Rational>,
{
    let mut l = 1i64;
    for w in weights {
        let d = w
            .denom()
            .to_i64()
            .ok_or_else(|| PoissonError::BadInput("weight denominators are too large".into()))?;
        l = num_integer::lcm(l, d.abs());
    }
    Ok(l)
}

fn scaled_weights(weights: &[Rational], l: i64) -> Result<Vec<i64>, PoissonError> {
    weights
        .iter()
        .map(|w| {
            (w * &Rational::from_int(l))
                .to_i64()
                .ok_or_else(|| PoissonError::BadInput("weights overflow the degree lattice".into()))
        })
        .collect()
}

/// All exponent vectors of the given scaled weight (weights strictly
/// positive, so the enumeration is finite).
fn monomials_of_scaled_weight(ws: &[i64], target: i64) -> Vec<Vec<u16>> {
    fn rec(ws: &[i64], target: i64, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if ws.len() == 1 {
            if target % ws[0] == 0 {
                let e = target / ws[0];
                if e <= u16::MAX as i64 {
                    prefix.push(e as u16);
                    out.push(prefix.clone());
                    prefix.pop();
                }
            }
            return;
        }
        let w = ws[0];
        let mut e = 0i64;
        while e * w <= target && e <= u16::MAX as i64 {
            prefix.push(e as u16);
            rec(&ws[1..], target - e * w, prefix, out);
            prefix.pop();
            e += 1;
        }
    }
    if target < 0 {
        return Vec::new();
    }
    if ws.is_empty() {
        return if target == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(ws, target, &mut Vec::new(), &mut out);
    out
}

/// Incremental row-echelon accumulator over ℚ.  Rows are kept sorted by
/// pivot column so a single reduction pass suffices.
struct RowReducer {
    ncols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    fn new(ncols: usize) -> Self {
        RowReducer {
            ncols,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the accumulated pivots and keeps it when it
    /// adds a new direction.  Returns whether the rank grew.
    fn insert(&mut self, mut row: Vec<Rational>) -> bool {
        for (pc, prow) in &self.rows {
            if !row[*pc].is_zero() {
                let f = row[*pc].clone();
                for c in *pc..self.ncols {
                    row[c] = &row[c] - &(&f * &prow[c]);
                }
            }
        }
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pc].inverse().expect("pivot is nonzero");
        for c in pc..self.ncols {
            row[c] = &row[c] * &inv;
        }
        let at = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(at, (pc, row));
        true
    }
}

fn stabilization(dims: &[usize]) -> Stabilization {
    let c = dims.len() as i64 - 1;
    let Some(last) = dims.iter().rposition(|&d| d != 0) else {
        return Stabilization::Stabilized;
    };
    let tail_clear = dims
        .iter()
        .enumerate()
        .all(|(s, &v)| 4 * (s as i64) <= 3 * c || v == 0);
    if tail_clear && 2 * (last as i64) < c {
        Stabilization::Stabilized
    } else {
        Stabilization::Inconclusive
    }
}

/// Deterministic monic canonical form of a nonzero polynomial, used to
/// skip rows that are scalar multiples of ones already seen.
fn monic_key(p: &MultiPoly) -> Vec<(Vec<u16>, Rational)> {
    let mut terms: Vec<(Vec<u16>, Rational)> =
        p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let inv = terms[0].1.inverse().expect("nonzero polynomial");
    for (_, c) in &mut terms {
        *c = &*c * &inv;
    }
    terms
}

fn vector_monic_key(comps: &[MultiPoly]) -> Vec<(usize, Vec<(Vec<u16>, Rational)>)> {
    let lead = comps
        .iter()
        .flat_map(MultiPoly::terms)
        .next()
        .expect("nonzero vector")
        .1
        .clone();
    let inv = lead.inverse().expect("nonzero polynomial");
    comps
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(b, p)| (b, p.terms().map(|(e, c)| (e.clone(), c * &inv)).collect()))
        .collect()
}

/// Dimension of the degree-`d` slice of the quotient ring, counted as
/// standard monomials for the given positive weights.  Degrees off the
/// weight lattice (or negative) give zero.
pub fn graded_dim(
    gb: &GroebnerBasis,
    weights: &[Rational],
    d: &Rational,
) -> Result<usize, PoissonError> {
    for w in weights {
        if w.is_zero() || w.is_negative() {
            return Err(PoissonError::BadInput(
                "variable weights must be positive".into(),
            ));
        }
    }
    let l = lattice_denominator(weights)?;
    let ws = scaled_weights(weights, l)?;
    let dl = d * &Rational::from_int(l);
    if !dl.is_integer() || dl.is_negative() {
        return Ok(0);
    }
    let t = dl
        .to_i64()
        .ok_or_else(|| PoissonError::BadInput("degree is too large".into()))?;
    Ok(monomials_of_scaled_weight(&ws, t)
        .into_iter()
        .filter(|e| gb.is_standard(e))
        .count())
}

/// Dimensions of each graded slice of the quotient ring modulo the span
/// of reduced bracket images `{f, g}`, for lattice degrees `0 ..= cutoff`.
///
/// Monomial pairs `(f, g)` of every weight split `wt f + wt g = s + 1`
/// contribute; a degree's count is therefore independent of the cutoff.
pub fn bracket_quotient_dims(
    pres: &PoissonPresentation,
    cutoff: i64,
) -> Result<QuotientDims, PoissonError> {
    if cutoff < 0 {
        return Err(PoissonError::BadInput("cutoff must be nonnegative".into()));
    }
    let l = lattice_denominator(pres.weights())?;
    let ws = scaled_weights(pres.weights(), l)?;
    let s_max = cutoff
        .checked_mul(l)
        .ok_or_else(|| PoissonError::BadInput("cutoff is too large".into()))?;
    let monos: Vec<Vec<Vec<u16>>> = (0..=s_max + l)
        .map(|t| monomials_of_scaled_weight(&ws, t))
        .collect();
    let gb = pres.groebner();
    let one = Rational::one();
    let mut dims = Vec::with_capacity(s_max as usize + 1);
    for s in 0..=s_max {
        let basis: Vec<&Vec<u16>> = monos[s as usize]
            .iter()
            .filter(|e| gb.is_standard(e))
            .collect();
        if basis.is_empty() {
            dims.push(0);
            continue;
        }
        let index: BTreeMap<&[u16], usize> = basis
            .iter()
            .enumerate()
            .map(|(c, e)| (e.as_slice(), c))
            .collect();
        let mut seen = BTreeSet::new();
        let mut reducer = RowReducer::new(basis.len());
        let mut wf = 1i64;
        'pairs: while 2 * wf <= s + l {
            let wg = s + l - wf;
            for (ia, fe) in monos[wf as usize].iter().enumerate() {
                let f = MultiPoly::monomial(fe.clone(), one.clone());
                for (ib, ge) in monos[wg as usize].iter().enumerate() {
                    if wf == wg && ib <= ia {
                        continue;
                    }
                    let br = pres.bracket(&f, &MultiPoly::monomial(ge.clone(), one.clone()));
                    if br.is_zero() {
                        continue;
                    }
                    if br.weight_if_homogeneous(pres.weights()) != Some(Rational::new(s, l)) {
                        return Err(PoissonError::BadPresentation(
                            "bracket image is not homogeneous of the expected weight".into(),
                        ));
                    }
                    let nf = gb.normal_form(&br);
                    if nf.is_zero() || !seen.insert(monic_key(&nf)) {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); basis.len()];
                    for (e, cf) in nf.terms() {
                        let col = *index
                            .get(e.as_slice())
                            .expect("normal form stays in the standard slice");
                        row[col] = cf.clone();
                    }
                    reducer.insert(row);
                    if reducer.rank() == basis.len() {
                        break 'pairs;
                    }
                }
            }
            wf += 1;
        }
        dims.push(basis.len() - reducer.rank());
    }
    let status = stabilization(&dims);
    Ok(QuotientDims {
        dims,
        step_denom: l,
        status,
    })
}

/// Module analogue of [`bracket_quotient_dims`]: quotients each graded
/// slice of the free module by the span of normal forms of
/// `{f, p·m_a} = {f, p}·m_a + p·Σ_i ∂_i f·{x_i, m_a}`.
pub fn module_bracket_quotient_dims(
    pres: &PoissonPresentation,
    module: &ModulePresentation,
    cutoff: i64,
) -> Result<QuotientDims, PoissonError> {
    if cutoff < 0 {
        return Err(PoissonError::BadInput("cutoff must be nonnegative".into()));
    }
    let l = lattice_denominator(pres.weights().iter().chain(module.gen_weights()))?;
    let ws = scaled_weights(pres.weights(), l)?;
    let us = scaled_weights(module.gen_weights(), l)?;
    let s_max = cutoff
        .checked_mul(l)
        .ok_or_else(|| PoissonError::BadInput("cutoff is too large".into()))?;
    let monos: Vec<Vec<Vec<u16>>> = (0..=s_max + l)
        .map(|t| monomials_of_scaled_weight(&ws, t))
        .collect();
    let gb = pres.groebner();
    let g = module.rank();
    let n = pres.nvars();
    let one = Rational::one();
    let mut dims = Vec::with_capacity(s_max as usize + 1);
    for s in 0..=s_max {
        let mut index: BTreeMap<(usize, &[u16]), usize> = BTreeMap::new();
        for (b, &ub) in us.iter().enumerate() {
            if s < ub {
                continue;
            }
            for e in &monos[(s - ub) as usize] {
                if gb.is_standard(e) {
                    let next = index.len();
                    index.insert((b, e.as_slice()), next);
                }
            }
        }
        let ncols = index.len();
        if ncols == 0 {
            dims.push(0);
            continue;
        }
        let mut seen = BTreeSet::new();
        let mut reducer = RowReducer::new(ncols);
        'rows: for (a, &ua) in us.iter().enumerate() {
            let mut pw = 0i64;
            while pw + ua + 1 <= s + l {
                let wf = s + l - ua - pw;
                for pe in &monos[pw as usize] {
                    let p = MultiPoly::monomial(pe.clone(), one.clone());
                    for fe in &monos[wf as usize] {
                        let f = MultiPoly::monomial(fe.clone(), one.clone());
                        let mut comps = vec![MultiPoly::zero(n); g];
                        comps[a] = pres.bracket(&f, &p);
                        for i in 0..n {
                            let df = f.partial(i);
                            if df.is_zero() {
                                continue;
                            }
                            let pdf = p.mul(&df);
                            for (b, comp) in comps.iter_mut().enumerate() {
                                let act = &module.action(i, a)[b];
                                if !act.is_zero() {
                                    *comp = comp.add(&pdf.mul(act));
                                }
                            }
                        }
                        let nfs: Vec<MultiPoly> = comps.iter().map(|c| gb.normal_form(c)).collect();
                        if nfs.iter().all(MultiPoly::is_zero) {
                            continue;
                        }
                        for (b, nf) in nfs.iter().enumerate() {
                            if !nf.is_zero()
                                && nf.weight_if_homogeneous(pres.weights())
                                    != Some(Rational::new(s - us[b], l))
                            {
                                return Err(PoissonError::BadPresentation(
                                    "module bracket image is not homogeneous of the expected weight"
                                        .into(),
                                ));
                            }
                        }
                        if !seen.insert(vector_monic_key(&nfs)) {
                            continue;
                        }
                        let mut row = vec![Rational::zero(); ncols];
                        for (b, nf) in nfs.iter().enumerate() {
                            for (e, cf) in nf.terms() {
                                let col = *index
                                    .get(&(b, e.as_slice()))
                                    .expect("normal form stays in the standard slice");
                                row[col] = cf.clone();
                            }
                        }
                        reducer.insert(row);
                        if reducer.rank() == ncols {
                            break 'rows;
                        }
                    }
                }
                pw += 1;
            }
        }
        dims.push(ncols - reducer.rank());
    }
    let status = stabilization(&dims);
    Ok(QuotientDims {
        dims,
        step_denom: l,
        status,
    })
}

/// Least power of `p` that reduces to zero modulo the ideal, probing up to
/// `cutoff`.  Iterates `NF(NF(p^{m-1})·p)`, so intermediate powers stay
/// reduced.  `p` must be weight-homogeneous (or zero).
pub fn nilpotency_index(
    pres: &PoissonPresentation,
    p: &MultiPoly,
    cutoff: u32,
) -> Result<NilpotencyOutcome, PoissonError> {
    if cutoff == 0 {
        return Err(PoissonError::BadInput("cutoff must be at least one".into()));
    }
    if p.nvars() != pres.nvars() {
        return Err(PoissonError::BadInput(
            "element has the wrong variable count".into(),
        ));
    }
    if p.is_zero() {
        return Ok(NilpotencyOutcome::Index(1));
    }
    if p.weight_if_homogeneous(pres.weights()).is_none() {
        return Err(PoissonError::BadInput(
            "power iteration needs a weight-homogeneous element".into(),
        ));
    }
    let gb = pres.groebner();
    let mut pw = gb.normal_form(p);
    let mut m = 1u32;
    loop {
        if pw.is_zero() {
            return Ok(NilpotencyOutcome::Index(m));
        }
        if m == cutoff {
            return Ok(NilpotencyOutcome::CutoffExceeded { cutoff });
        }
        pw = gb.normal_form(&pw.mul(p));
        m += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::{
        highest_weight_module, parse_poly, quadric_cone_presentation, sl2_c2_presentation,
        virasoro_c2_presentation,
    };

    fn xyz() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    /// The cone ideal with the zero bracket, for tests that need the
    /// bracket span to be empty.
    fn abelian_cone() -> PoissonPresentation {
        let names = xyz();
        let ideal = ["x^2*y - x*z^2", "x*y^2 - y*z^2", "x*y*z - z^3"]
            .iter()
            .map(|s| parse_poly(s, &names).unwrap())
            .collect();
        PoissonPresentation::new(names, vec![Rational::one(); 3], &[], ideal).unwrap()
    }

    #[test]
    fn graded_dims_count_standard_monomials() {
        let cone = quadric_cone_presentation();
        let at =
            |d: i64| graded_dim(cone.groebner(), cone.weights(), &Rational::from_int(d)).unwrap();
        assert_eq!(
            (0..=8).map(at).collect::<Vec<_>>(),
            vec![1, 3, 6, 7, 9, 11, 13, 15, 17]
        );
        let off = graded_dim(cone.groebner(), cone.weights(), &Rational::new(1, 2)).unwrap();
        assert_eq!(off, 0);
        assert_eq!(at(-1), 0);

        let vira = virasoro_c2_presentation(5, 2).unwrap();
        let vat =
            |d: i64| graded_dim(vira.groebner(), vira.weights(), &Rational::from_int(d)).unwrap();
        assert_eq!((0..=4).map(vat).collect::<Vec<_>>(), vec![1, 0, 1, 0, 0]);
    }

    #[test]
    fn abelian_brackets_reduce_nothing() {
        let flat = abelian_cone();
        let q = bracket_quotient_dims(&flat, 6).unwrap();
        assert_eq!(q.dims, vec![1, 3, 6, 7, 9, 11, 13]);
        assert_eq!(q.status, Stabilization::Inconclusive);
        for (s, &dim) in q.dims.iter().enumerate() {
            let gd = graded_dim(
                flat.groebner(),
                flat.weights(),
                &Rational::from_int(s as i64),
            )
            .unwrap();
            assert_eq!(dim, gd);
        }

        // full polynomial ring: binomial growth, clearly inconclusive
        let free = PoissonPresentation::new(xyz(), vec![Rational::one(); 3], &[], vec![]).unwrap();
        let q = bracket_quotient_dims(&free, 4).unwrap();
        assert_eq!(q.dims, vec![1, 3, 6, 10, 15]);
        assert_eq!(q.total(), 35);
        assert_eq!(q.status, Stabilization::Inconclusive);
    }

    #[test]
    fn the_cone_quotient_collapses_to_two_dimensions() {
        let cone = quadric_cone_presentation();
        let wide = bracket_quotient_dims(&cone, 12).unwrap();
        let mut expect = vec![0usize; 13];
        expect[0] = 1;
        expect[2] = 1;
        assert_eq!(wide.dims, expect);
        assert_eq!(wide.total(), 2);
        assert_eq!(wide.step_denom, 1);
        assert_eq!(wide.last_nonzero(), Some(2));
        assert_eq!(wide.status, Stabilization::Stabilized);

        // a short window shows the same entries but cannot call it
        let narrow = bracket_quotient_dims(&cone, 4).unwrap();
        assert_eq!(narrow.dims, wide.dims[..5]);
        assert_eq!(narrow.status, Stabilization::Inconclusive);

        // the bracket span never exceeds the slice itself
        for (s, &dim) in wide.dims.iter().enumerate() {
            let gd = graded_dim(
                cone.groebner(),
                cone.weights(),
                &Rational::from_int(s as i64),
            )
            .unwrap();
            assert!(dim <= gd);
        }
    }

    #[test]
    fn sl2_families_reach_their_finite_tails() {
        let k0 = sl2_c2_presentation(0);
        let q0 = bracket_quotient_dims(&k0, 6).unwrap();
        assert_eq!(q0.dims, vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(q0.total(), 1);
        assert_eq!(q0.status, Stabilization::Stabilized);

        let k1 = sl2_c2_presentation(1);
        let q1 = bracket_quotient_dims(&k1, 8).unwrap();
        assert_eq!(q1.dims, vec![1, 0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(q1.total(), 2);
        assert_eq!(q1.status, Stabilization::Stabilized);

        // cutoff only widens the window; entries are stable
        let q1short = bracket_quotient_dims(&k1, 5).unwrap();
        assert_eq!(q1short.dims, q1.dims[..6]);
    }

    #[test]
    fn virasoro_minimal_model_dims() {
        let p32 = virasoro_c2_presentation(3, 2).unwrap();
        let q = bracket_quotient_dims(&p32, 8).unwrap();
        assert_eq!(q.total(), 1);
        assert_eq!(q.dims[0], 1);
        assert_eq!(q.status, Stabilization::Stabilized);

        let p52 = virasoro_c2_presentation(5, 2).unwrap();
        let q = bracket_quotient_dims(&p52, 8).unwrap();
        assert_eq!(q.dims, vec![1, 0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(q.total(), 2);
        assert_eq!(q.status, Stabilization::Stabilized);

        // (7,2) keeps x² alive at degree four: stabilized only when the
        // window is long enough to clear the tail tests
        let p72 = virasoro_c2_presentation(7, 2).unwrap();
        let q = bracket_quotient_dims(&p72, 8).unwrap();
        assert_eq!(q.dims, vec![1, 0, 1, 0, 1, 0, 0, 0, 0]);
        assert_eq!(q.status, Stabilization::Inconclusive);
        let q = bracket_quotient_dims(&p72, 12).unwrap();
        assert_eq!(q.total(), 3);
        assert_eq!(q.status, Stabilization::Stabilized);
    }

    #[test]
    fn the_ring_module_matches_the_ring_diagnostics() {
        let cone = quadric_cone_presentation();
        let ring = ModulePresentation::ring_module(&cone);
        let via_module = module_bracket_quotient_dims(&cone, &ring, 6).unwrap();
        let direct = bracket_quotient_dims(&cone, 6).unwrap();
        assert_eq!(via_module, direct);

        // zero bracket and zero action: nothing reduces, dims stay graded
        let flat = abelian_cone();
        let ring = ModulePresentation::ring_module(&flat);
        let q = module_bracket_quotient_dims(&flat, &ring, 6).unwrap();
        assert_eq!(q.dims, vec![1, 3, 6, 7, 9, 11, 13]);
    }

    #[test]
    fn the_highest_weight_fixture_collapses_completely() {
        let k1 = sl2_c2_presentation(1);
        let hw = highest_weight_module(&k1, &Rational::from_int(2)).unwrap();
        let q = module_bracket_quotient_dims(&k1, &hw, 8).unwrap();
        assert_eq!(q.dims, vec![0; 9]);
        assert_eq!(q.total(), 0);
        assert_eq!(q.last_nonzero(), None);
        assert_eq!(q.status, Stabilization::Stabilized);
    }

    #[test]
    fn nilpotency_probes() {
        let names = xyz();
        let p32 = virasoro_c2_presentation(3, 2).unwrap();
        let x = MultiPoly::var(1, 0);
        assert_eq!(
            nilpotency_index(&p32, &x, 8).unwrap(),
            NilpotencyOutcome::Index(1)
        );
        let p52 = virasoro_c2_presentation(5, 2).unwrap();
        assert_eq!(
            nilpotency_index(&p52, &x, 8).unwrap(),
            NilpotencyOutcome::Index(2)
        );

        // level-one sl₂: the Casimir squares into the ideal
        let k1 = sl2_c2_presentation(1);
        let enames = vec!["e".to_string(), "f".to_string(), "h".to_string()];
        let casimir = parse_poly("4*e*f + h^2", &enames).unwrap();
        assert_eq!(
            k1.groebner().normal_form(&casimir),
            parse_poly("3*h^2", &enames).unwrap()
        );
        assert_eq!(
            nilpotency_index(&k1, &casimir, 8).unwrap(),
            NilpotencyOutcome::Index(2)
        );

        // the cone quotient is not nilpotent: powers survive as 5^m z^{2m}
        let cone = quadric_cone_presentation();
        let omega = parse_poly("4*x*y + z^2", &names).unwrap();
        let gb = cone.groebner();
        assert_eq!(gb.normal_form(&omega), omega);
        assert_eq!(
            gb.normal_form(&omega.pow(2)),
            parse_poly("25*z^4", &names).unwrap()
        );
        assert_eq!(
            gb.normal_form(&omega.pow(3)),
            parse_poly("125*z^6", &names).unwrap()
        );
        assert_eq!(
            nilpotency_index(&cone, &omega, 8).unwrap(),
            NilpotencyOutcome::CutoffExceeded { cutoff: 8 }
        );
        assert_eq!(
            nilpotency_index(&cone, &omega, 3).unwrap(),
            NilpotencyOutcome::CutoffExceeded { cutoff: 3 }
        );

        // validation
        assert!(nilpotency_index(&cone, &omega, 0).is_err());
        let inhomog = parse_poly("x + x^2", &names).unwrap();
        assert!(nilpotency_index(&cone, &inhomog, 8).is_err());
        assert_eq!(
            nilpotency_index(&cone, &MultiPoly::zero(3), 8).unwrap(),
            NilpotencyOutcome::Index(1)
        );
        assert!(bracket_quotient_dims(&cone, -1).is_err());
    }

    #[test]
    fn half_integer_weights_use_the_lattice_denominator() {
        let names = vec!["x".to_string()];
        let x = MultiPoly::var(1, 0);
        let pres = PoissonPresentation::new(names, vec![Rational::new(1, 2)], &[], vec![x.pow(4)])
            .unwrap();
        let q = bracket_quotient_dims(&pres, 2).unwrap();
        assert_eq!(q.dims, vec![1, 1, 1, 1, 0]);
        assert_eq!(q.step_denom, 2);
        assert_eq!(q.total(), 4);
        assert_eq!(q.status, Stabilization::Inconclusive);

        let gd = |num: i64, den: i64| {
            graded_dim(pres.groebner(), pres.weights(), &Rational::new(num, den)).unwrap()
        };
        assert_eq!(gd(3, 2), 1);
        assert_eq!(gd(2, 1), 0);
        assert_eq!(gd(1, 4), 0);
    }
}
