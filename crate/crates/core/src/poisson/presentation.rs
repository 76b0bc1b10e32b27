//! Poisson presentations: weighted variables, a bracket table extended to
//! polynomials as a biderivation, a weight-homogeneous ideal, and the
//! built-in families (sl₂ at level k, the quadric cone, Virasoro minimal
//! models, and two small module fixtures).

use serde_json::{json, Map, Value};

use crate::exactnum::Rational;

use super::groebner::{buchberger, GroebnerBasis};
use super::poly::{parse_poly, MonomialOrder, MultiPoly};
use super::PoissonError;

/// A graded Poisson polynomial algebra with a distinguished ideal.
///
/// Construction validates everything the structure promises: positive
/// weights, bracket antisymmetry, the grading `wt{x_i,x_j} = w_i + w_j − 1`,
/// the Jacobi identity on variable triples (which extends to all
/// polynomials for a biderivation bracket), and homogeneity of the ideal
/// generators.  The Gröbner basis of the ideal is computed once here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonPresentation {
    names: Vec<String>,
    weights: Vec<Rational>,
    table: Vec<Vec<MultiPoly>>,
    ideal: Vec<MultiPoly>,
    order: MonomialOrder,
    gb: GroebnerBasis,
}

fn build_table(
    nvars: usize,
    pairs: &[((usize, usize), MultiPoly)],
) -> Result<Vec<Vec<MultiPoly>>, PoissonError> {
    let mut explicit: Vec<Vec<Option<MultiPoly>>> = vec![vec![None; nvars]; nvars];
    for ((i, j), p) in pairs {
        if *i >= nvars || *j >= nvars {
            return Err(PoissonError::BadPresentation(format!(
                "bracket pair ({i},{j}) is out of range"
            )));
        }
        if p.nvars() != nvars {
            return Err(PoissonError::BadPresentation(
                "bracket polynomial has the wrong variable count".into(),
            ));
        }
        if explicit[*i][*j].is_some() {
            return Err(PoissonError::BadPresentation(format!(
                "duplicate bracket entry for ({i},{j})"
            )));
        }
        explicit[*i][*j] = Some(p.clone());
    }
    let mut table = vec![vec![MultiPoly::zero(nvars); nvars]; nvars];
    for i in 0..nvars {
        if let Some(p) = &explicit[i][i] {
            if !p.is_zero() {
                return Err(PoissonError::BadPresentation(format!(
                    "bracket of variable {i} with itself must vanish"
                )));
            }
        }
        for j in (i + 1)..nvars {
            match (&explicit[i][j], &explicit[j][i]) {
                (Some(a), Some(b)) => {
                    if *b != a.neg() {
                        return Err(PoissonError::BadPresentation(format!(
                            "brackets for ({i},{j}) and ({j},{i}) are not antisymmetric"
                        )));
                    }
                    table[i][j] = a.clone();
                    table[j][i] = b.clone();
                }
                (Some(a), None) => {
                    table[j][i] = a.neg();
                    table[i][j] = a.clone();
                }
                (None, Some(b)) => {
                    table[i][j] = b.neg();
                    table[j][i] = b.clone();
                }
                (None, None) => {}
            }
        }
    }
    Ok(table)
}

/// Biderivation extension of a bracket table: `{f,g} = Σ ∂_i f ∂_j g {x_i,x_j}`.
fn poisson_bracket(table: &[Vec<MultiPoly>], f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let n = table.len();
    let dfs: Vec<MultiPoly> = (0..n).map(|i| f.partial(i)).collect();
    let dgs: Vec<MultiPoly> = (0..n).map(|j| g.partial(j)).collect();
    let mut out = MultiPoly::zero(f.nvars());
    for i in 0..n {
        if dfs[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if i == j || table[i][j].is_zero() || dgs[j].is_zero() {
                continue;
            }
            out = out.add(&dfs[i].mul(&dgs[j]).mul(&table[i][j]));
        }
    }
    out
}

impl PoissonPresentation {
    /// Builds and validates a presentation under the default graded-lex
    /// order.  `brackets` lists `{x_i, x_j}` for ordered index pairs; the
    /// opposite orientation is filled in by antisymmetry (and checked when
    /// both are supplied).
    pub fn new(
        names: Vec<String>,
        weights: Vec<Rational>,
        brackets: &[((usize, usize), MultiPoly)],
        ideal: Vec<MultiPoly>,
    ) -> Result<Self, PoissonError> {
        Self::with_order(names, weights, brackets, ideal, MonomialOrder::GrLex)
    }

    pub fn with_order(
        names: Vec<String>,
        weights: Vec<Rational>,
        brackets: &[((usize, usize), MultiPoly)],
        ideal: Vec<MultiPoly>,
        order: MonomialOrder,
    ) -> Result<Self, PoissonError> {
        let n = names.len();
        if n == 0 {
            return Err(PoissonError::BadPresentation(
                "at least one variable is required".into(),
            ));
        }
        let distinct: std::collections::BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(PoissonError::BadPresentation(
                "variable names must be distinct".into(),
            ));
        }
        if weights.len() != n {
            return Err(PoissonError::BadPresentation(
                "one weight per variable is required".into(),
            ));
        }
        for (name, w) in names.iter().zip(&weights) {
            if w.is_zero() || w.is_negative() {
                return Err(PoissonError::BadPresentation(format!(
                    "variable {name} needs a positive weight, got {w}"
                )));
            }
        }
        let table = build_table(n, brackets)?;
        for i in 0..n {
            for j in (i + 1)..n {
                if table[i][j].is_zero() {
                    continue;
                }
                let expect = &(&weights[i] + &weights[j]) - &Rational::one();
                match table[i][j].weight_if_homogeneous(&weights) {
                    Some(w) if w == expect => {}
                    _ => {
                        return Err(PoissonError::BadPresentation(format!(
                            "{{{}, {}}} must be homogeneous of weight {expect}",
                            names[i], names[j]
                        )))
                    }
                }
            }
        }
        // Jacobi on variable triples suffices: the bracket is a bivector,
        // so the identity propagates to all polynomials.
        for i in 0..n {
            let xi = MultiPoly::var(n, i);
            for j in (i + 1)..n {
                let xj = MultiPoly::var(n, j);
                for k in (j + 1)..n {
                    let xk = MultiPoly::var(n, k);
                    let jac = poisson_bracket(&table, &xi, &poisson_bracket(&table, &xj, &xk))
                        .add(&poisson_bracket(
                            &table,
                            &xj,
                            &poisson_bracket(&table, &xk, &xi),
                        ))
                        .add(&poisson_bracket(
                            &table,
                            &xk,
                            &poisson_bracket(&table, &xi, &xj),
                        ));
                    if !jac.is_zero() {
                        return Err(PoissonError::BadPresentation(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        for g in &ideal {
            if g.is_zero() {
                return Err(PoissonError::BadPresentation(
                    "ideal generators must be nonzero".into(),
                ));
            }
            if g.nvars() != n {
                return Err(PoissonError::BadPresentation(
                    "ideal generator has the wrong variable count".into(),
                ));
            }
            if g.weight_if_homogeneous(&weights).is_none() {
                return Err(PoissonError::BadPresentation(format!(
                    "ideal generator {} is not weight-homogeneous",
                    g.format_with(&names)
                )));
            }
        }
        let gb = if ideal.is_empty() {
            GroebnerBasis::empty(order)
        } else {
            buchberger(&ideal, order)?
        };
        Ok(PoissonPresentation {
            names,
            weights,
            table,
            ideal,
            order,
            gb,
        })
    }

    /// The same presentation under a different monomial order (recomputes
    /// the Gröbner basis).
    pub fn reorder(&self, order: MonomialOrder) -> Self {
        let gb = if self.ideal.is_empty() {
            GroebnerBasis::empty(order)
        } else {
            buchberger(&self.ideal, order).expect("ideal was already validated")
        };
        PoissonPresentation {
            order,
            gb,
            ..self.clone()
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn ideal(&self) -> &[MultiPoly] {
        &self.ideal
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// The table entry `{x_i, x_j}`.
    pub fn bracket_table(&self, i: usize, j: usize) -> &MultiPoly {
        &self.table[i][j]
    }

    /// The Poisson bracket of two polynomials.
    pub fn bracket(&self, f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
        assert_eq!(f.nvars(), self.nvars(), "variable count mismatch");
        assert_eq!(g.nvars(), self.nvars(), "variable count mismatch");
        poisson_bracket(&self.table, f, g)
    }

    /// Parses a polynomial in this presentation's variables.
    pub fn parse(&self, src: &str) -> Result<MultiPoly, PoissonError> {
        parse_poly(src, &self.names)
    }

    /// Serializes to the presentation file format: `vars` with names and
    /// weights, `bracket` keyed by `"(a,b)"` pairs, `ideal` as polynomial
    /// strings.  Keys come out sorted, so equal presentations produce
    /// byte-identical text.
    pub fn to_json(&self) -> String {
        let n = self.nvars();
        let vars: Vec<Value> = self
            .names
            .iter()
            .zip(&self.weights)
            .map(|(name, w)| json!({"name": name, "weight": w.to_string()}))
            .collect();
        let mut bracket = Map::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.table[i][j].is_zero() {
                    bracket.insert(
                        format!("({},{})", self.names[i], self.names[j]),
                        Value::String(self.table[i][j].format_with(&self.names)),
                    );
                }
            }
        }
        let ideal: Vec<Value> = self
            .ideal
            .iter()
            .map(|g| Value::String(g.format_with(&self.names)))
            .collect();
        json!({"bracket": bracket, "ideal": ideal, "vars": vars}).to_string()
    }

    /// Parses the presentation file format written by [`Self::to_json`].
    pub fn from_json(src: &str) -> Result<Self, PoissonError> {
        let doc: Value = serde_json::from_str(src)
            .map_err(|e| PoissonError::Parse(format!("invalid JSON: {e}")))?;
        let vars = doc
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| PoissonError::Parse("missing \"vars\" array".into()))?;
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for v in vars {
            let name = v
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| PoissonError::Parse("variable entry needs a \"name\"".into()))?;
            let w = match v.get("weight") {
                Some(Value::String(s)) => s
                    .parse::<Rational>()
                    .map_err(|e| PoissonError::Parse(format!("bad weight {s:?}: {e}")))?,
                Some(Value::Number(x)) => x
                    .as_i64()
                    .map(Rational::from_int)
                    .ok_or_else(|| PoissonError::Parse("weights must be exact".into()))?,
                _ => {
                    return Err(PoissonError::Parse(format!(
                        "variable {name:?} needs a rational \"weight\""
                    )))
                }
            };
            names.push(name.to_string());
            weights.push(w);
        }
        let mut pairs = Vec::new();
        if let Some(br) = doc.get("bracket") {
            let obj = br
                .as_object()
                .ok_or_else(|| PoissonError::Parse("\"bracket\" must be an object".into()))?;
            for (key, val) in obj {
                let inner = key
                    .strip_prefix('(')
                    .and_then(|k| k.strip_suffix(')'))
                    .ok_or_else(|| {
                        PoissonError::Parse(format!("bracket key {key:?} is not \"(a,b)\""))
                    })?;
                let mut it = inner.splitn(2, ',');
                let a = it.next().unwrap_or("").trim();
                let b = it
                    .next()
                    .ok_or_else(|| {
                        PoissonError::Parse(format!("bracket key {key:?} is not \"(a,b)\""))
                    })?
                    .trim();
                let find = |nm: &str| {
                    names.iter().position(|x| x == nm).ok_or_else(|| {
                        PoissonError::Parse(format!(
                            "unknown variable {nm:?} in bracket key {key:?}"
                        ))
                    })
                };
                let (ia, ib) = (find(a)?, find(b)?);
                let poly_src = val.as_str().ok_or_else(|| {
                    PoissonError::Parse("bracket values must be polynomial strings".into())
                })?;
                pairs.push(((ia, ib), parse_poly(poly_src, &names)?));
            }
        }
        let ideal = match doc.get("ideal") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| PoissonError::Parse("\"ideal\" must be an array".into()))?
                .iter()
                .map(|g| {
                    g.as_str()
                        .ok_or_else(|| {
                            PoissonError::Parse("ideal entries must be polynomial strings".into())
                        })
                        .and_then(|s| parse_poly(s, &names))
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        Self::new(names, weights, &pairs, ideal)
    }
}

/// A finitely generated free-module fixture over a presentation, with the
/// bracket action `{x_i, m_a}` recorded as polynomial coefficients on the
/// module generators.  The action extends to `{f, p·m_a} = {f,p}·m_a +
/// p·Σ_i ∂_i f·{x_i, m_a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    gen_names: Vec<String>,
    gen_weights: Vec<Rational>,
    action: Vec<Vec<Vec<MultiPoly>>>,
}

impl ModulePresentation {
    /// Validates generator weights (nonnegative) and the module grading:
    /// the coefficient of `m_b` in `{x_i, m_a}` must be homogeneous of
    /// weight `w_i + u_a − 1 − u_b` when nonzero.
    pub fn new(
        pres: &PoissonPresentation,
        gen_names: Vec<String>,
        gen_weights: Vec<Rational>,
        action: Vec<Vec<Vec<MultiPoly>>>,
    ) -> Result<Self, PoissonError> {
        let n = pres.nvars();
        let g = gen_names.len();
        if g == 0 {
            return Err(PoissonError::BadPresentation(
                "at least one module generator is required".into(),
            ));
        }
        let distinct: std::collections::BTreeSet<&String> = gen_names.iter().collect();
        if distinct.len() != g || gen_weights.len() != g {
            return Err(PoissonError::BadPresentation(
                "module generators need distinct names and one weight each".into(),
            ));
        }
        for (name, u) in gen_names.iter().zip(&gen_weights) {
            if u.is_negative() {
                return Err(PoissonError::BadPresentation(format!(
                    "module generator {name} has negative weight {u}"
                )));
            }
        }
        if action.len() != n
            || action.iter().any(|row| row.len() != g)
            || action.iter().flatten().any(|entry| entry.len() != g)
        {
            return Err(PoissonError::BadPresentation(
                "action table must have shape variables × generators × generators".into(),
            ));
        }
        for (i, row) in action.iter().enumerate() {
            for (a, entry) in row.iter().enumerate() {
                for (b, p) in entry.iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    if p.nvars() != n {
                        return Err(PoissonError::BadPresentation(
                            "action polynomial has the wrong variable count".into(),
                        ));
                    }
                    let expect = &(&(&pres.weights()[i] + &gen_weights[a]) - &Rational::one())
                        - &gen_weights[b];
                    match p.weight_if_homogeneous(pres.weights()) {
                        Some(w) if w == expect => {}
                        _ => {
                            return Err(PoissonError::BadPresentation(format!(
                                "{{{}, {}}} component on {} must be homogeneous of weight {expect}",
                                pres.names()[i],
                                gen_names[a],
                                gen_names[b]
                            )))
                        }
                    }
                }
            }
        }
        Ok(ModulePresentation {
            gen_names,
            gen_weights,
            action,
        })
    }

    /// The ring seen as a module over itself: one generator of weight zero
    /// with zero action table, so `{f, p·m} = {f,p}·m`.
    pub fn ring_module(pres: &PoissonPresentation) -> Self {
        let zero = MultiPoly::zero(pres.nvars());
        Self::new(
            pres,
            vec!["m".into()],
            vec![Rational::zero()],
            vec![vec![vec![zero]]; pres.nvars()],
        )
        .expect("the trivial module is valid")
    }

    pub fn rank(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn gen_weights(&self) -> &[Rational] {
        &self.gen_weights
    }

    /// The components of `{x_i, m_a}` over the module generators.
    pub fn action(&self, i: usize, a: usize) -> &[MultiPoly] {
        &self.action[i][a]
    }
}

/// The level-k sl₂ quotient: variables e, f, h of weight one, brackets
/// `{h,e} = 2e`, `{h,f} = −2f`, `{e,f} = h`, and the ideal generated by the
/// iterated lowering brackets `ad_f^i(e^{k+1})` for `i = 0, ..., 2k+2`.
pub fn sl2_c2_presentation(k: u32) -> PoissonPresentation {
    let e = MultiPoly::var(3, 0);
    let f = MultiPoly::var(3, 1);
    let h = MultiPoly::var(3, 2);
    let two = Rational::from_int(2);
    let pairs = vec![
        ((2usize, 0usize), e.scale(&two)),
        ((2, 1), f.scale(&two).neg()),
        ((0, 1), h),
    ];
    let table = build_table(3, &pairs).expect("fixed table is well-formed");
    let mut gens = vec![e.pow(k + 1)];
    for _ in 0..(2 * k + 2) {
        let next = poisson_bracket(&table, &f, gens.last().expect("nonempty"));
        gens.push(next);
    }
    PoissonPresentation::new(
        vec!["e".into(), "f".into(), "h".into()],
        vec![Rational::one(), Rational::one(), Rational::one()],
        &pairs,
        gens,
    )
    .expect("the sl2 presentation is valid")
}

/// The quadric-cone quotient: ℚ[x,y,z] with the sl₂ bracket transported
/// through (x,y,z) ↔ (e,f,h) and the ideal `(xy − z²)·(x, y, z)`.
pub fn quadric_cone_presentation() -> PoissonPresentation {
    let x = MultiPoly::var(3, 0);
    let y = MultiPoly::var(3, 1);
    let z = MultiPoly::var(3, 2);
    let two = Rational::from_int(2);
    let pairs = vec![
        ((2usize, 0usize), x.scale(&two)),
        ((2, 1), y.scale(&two).neg()),
        ((0, 1), z.clone()),
    ];
    let cone = x.mul(&y).sub(&z.mul(&z));
    let ideal = vec![x.mul(&cone), y.mul(&cone), z.mul(&cone)];
    PoissonPresentation::new(
        vec!["x".into(), "y".into(), "z".into()],
        vec![Rational::one(), Rational::one(), Rational::one()],
        &pairs,
        ideal,
    )
    .expect("the quadric cone presentation is valid")
}

/// The (p,p′) Virasoro minimal-model quotient `ℚ[x]/⟨x^{(p−1)(p′−1)/2}⟩`
/// with `x` of weight two and the zero bracket.
pub fn virasoro_c2_presentation(p: u32, pp: u32) -> Result<PoissonPresentation, PoissonError> {
    if p < 2 || pp < 2 || num_integer::gcd(p, pp) != 1 {
        return Err(PoissonError::BadInput(format!(
            "({p},{pp}) is not a coprime pair of integers at least 2"
        )));
    }
    let m = (p - 1) * (pp - 1) / 2;
    let x = MultiPoly::var(1, 0);
    PoissonPresentation::new(
        vec!["x".into()],
        vec![Rational::from_int(2)],
        &[],
        vec![x.pow(m)],
    )
}

/// A rank-one highest-weight-style module fixture over an sl₂-shaped
/// presentation: `{e,v} = 0`, `{h,v} = μ·v`, `{f,v} = v`.  This is a
/// synthetic model for exercising the module diagnostics, not a derived
/// object.
pub fn highest_weight_module(
    pres: &PoissonPresentation,
    mu: &Rational,
) -> Result<ModulePresentation, PoissonError> {
    let find = |nm: &str| pres.names().iter().position(|x| x == nm);
    let (fi, hi) = match (find("e"), find("f"), find("h")) {
        (Some(_), Some(fi), Some(hi)) => (fi, hi),
        _ => {
            return Err(PoissonError::BadInput(
                "expects a presentation with variables e, f, h".into(),
            ))
        }
    };
    let n = pres.nvars();
    let mut action = vec![vec![vec![MultiPoly::zero(n)]]; n];
    action[fi][0][0] = MultiPoly::one(n);
    action[hi][0][0] = MultiPoly::constant(n, mu.clone());
    ModulePresentation::new(pres, vec!["v".into()], vec![Rational::one()], action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    fn sl2poly(src: &str) -> MultiPoly {
        let names = vec!["e".to_string(), "f".to_string(), "h".to_string()];
        parse_poly(src, &names).unwrap()
    }

    #[test]
    fn construction_validates_the_axioms() {
        // the good case
        let pres = sl2_c2_presentation(1);
        assert_eq!(pres.nvars(), 3);

        let one = Rational::one();
        let w3 = vec![one.clone(), one.clone(), one.clone()];
        let names = xyz();
        let x = MultiPoly::var(3, 0);
        let z = MultiPoly::var(3, 2);

        // explicit both orientations that fail antisymmetry
        let bad = PoissonPresentation::new(
            names.clone(),
            w3.clone(),
            &[((0, 1), z.clone()), ((1, 0), z.clone())],
            vec![],
        );
        assert!(matches!(bad, Err(PoissonError::BadPresentation(_))));

        // nonzero diagonal
        let bad =
            PoissonPresentation::new(names.clone(), w3.clone(), &[((0, 0), z.clone())], vec![]);
        assert!(bad.is_err());

        // grading: {x,y} of weight 2 under unit weights
        let bad =
            PoissonPresentation::new(names.clone(), w3.clone(), &[((0, 1), x.mul(&x))], vec![]);
        assert!(bad
            .unwrap_err()
            .to_string()
            .contains("homogeneous of weight 1"));

        // Jacobi: {x,y}=x, {y,z}=y, {z,x}=z sums to x+y+z on the triple
        let y = MultiPoly::var(3, 1);
        let bad = PoissonPresentation::new(
            names.clone(),
            w3.clone(),
            &[
                ((0, 1), x.clone()),
                ((1, 2), y.clone()),
                ((2, 0), z.clone()),
            ],
            vec![],
        );
        assert!(bad.unwrap_err().to_string().contains("Jacobi"));

        // ideal generators must be homogeneous and nonzero
        let bad = PoissonPresentation::new(names.clone(), w3.clone(), &[], vec![x.add(&x.mul(&x))]);
        assert!(bad.unwrap_err().to_string().contains("weight-homogeneous"));
        let bad =
            PoissonPresentation::new(names.clone(), w3.clone(), &[], vec![MultiPoly::zero(3)]);
        assert!(bad.is_err());

        // weights must be positive, names distinct
        let bad = PoissonPresentation::new(
            names.clone(),
            vec![one.clone(), Rational::zero(), one.clone()],
            &[],
            vec![],
        );
        assert!(bad.is_err());
        let bad =
            PoissonPresentation::new(vec!["x".into(), "x".into(), "z".into()], w3, &[], vec![]);
        assert!(bad.is_err());
    }

    #[test]
    fn brackets_are_biderivations_with_a_central_casimir() {
        let pres = sl2_c2_presentation(0);
        assert_eq!(pres.bracket(&sl2poly("h"), &sl2poly("e")), sl2poly("2*e"));
        assert_eq!(
            pres.bracket(&sl2poly("e^2"), &sl2poly("f")),
            sl2poly("2*e*h")
        );
        assert!(pres.bracket(&sl2poly("e*f"), &sl2poly("h")).is_zero());
        let casimir = sl2poly("4*e*f + h^2");
        for v in ["e", "f", "h"] {
            assert!(
                pres.bracket(&casimir, &sl2poly(v)).is_zero(),
                "{{4ef+h², {v}}} should vanish"
            );
        }
    }

    #[test]
    fn sl2_ideals_match_hand_expansion() {
        let k0 = sl2_c2_presentation(0);
        assert_eq!(k0.ideal(), &[sl2poly("e"), sl2poly("-h"), sl2poly("-2*f")]);
        let k1 = sl2_c2_presentation(1);
        assert_eq!(
            k1.ideal(),
            &[
                sl2poly("e^2"),
                sl2poly("-2*e*h"),
                sl2poly("2*h^2 - 4*e*f"),
                sl2poly("12*f*h"),
                sl2poly("24*f^2"),
            ]
        );
        for k in 0..4 {
            assert_eq!(sl2_c2_presentation(k).ideal().len(), 2 * k as usize + 3);
        }
        // h³ lands in the level-one ideal even though h² does not.
        assert!(k1.groebner().contains(&sl2poly("h^3")));
        assert!(!k1.groebner().contains(&sl2poly("h^2")));
    }

    #[test]
    fn the_quadric_cone_and_its_radical_witness() {
        let pres = quadric_cone_presentation();
        let p = |s: &str| parse_poly(s, &xyz()).unwrap();
        assert_eq!(
            pres.ideal(),
            &[p("x^2*y - x*z^2"), p("x*y^2 - y*z^2"), p("x*y*z - z^3"),]
        );
        // The generators are their own reduced basis here.
        assert_eq!(pres.groebner().basis(), pres.ideal());
        let cone = p("x*y - z^2");
        assert!(pres.groebner().contains(&cone.mul(&cone)));
        assert!(!pres.groebner().contains(&cone));
        // Same leading terms under lex, so the reduced basis agrees.
        let relex = pres.reorder(MonomialOrder::Lex);
        assert_eq!(relex.order(), MonomialOrder::Lex);
        assert_eq!(relex.groebner().basis(), pres.groebner().basis());
    }

    #[test]
    fn virasoro_minimal_models() {
        let p52 = virasoro_c2_presentation(5, 2).unwrap();
        let x = MultiPoly::var(1, 0);
        assert_eq!(p52.ideal(), &[x.mul(&x)]);
        assert_eq!(p52.weights(), &[Rational::from_int(2)]);
        let p32 = virasoro_c2_presentation(3, 2).unwrap();
        assert_eq!(p32.ideal(), &[x.clone()]);
        assert!(virasoro_c2_presentation(4, 2).is_err());
        assert!(virasoro_c2_presentation(1, 5).is_err());
    }

    #[test]
    fn json_round_trips_and_rejects_malformed_files() {
        for pres in [quadric_cone_presentation(), sl2_c2_presentation(1)] {
            let text = pres.to_json();
            let back = PoissonPresentation::from_json(&text).unwrap();
            assert_eq!(back, pres);
            // byte-determinism of the writer
            assert_eq!(back.to_json(), text);
        }
        let vira = virasoro_c2_presentation(5, 2).unwrap();
        assert_eq!(
            vira.to_json(),
            r#"{"bracket":{},"ideal":["x^2"],"vars":[{"name":"x","weight":"2"}]}"#
        );

        let bad = PoissonPresentation::from_json(
            r#"{"vars":[{"name":"x","weight":"1"}],"bracket":{"(x,w)":"x"},"ideal":[]}"#,
        );
        assert!(bad.unwrap_err().to_string().contains("unknown variable"));
        let bad = PoissonPresentation::from_json(r#"{"bracket":{}}"#);
        assert!(bad.unwrap_err().to_string().contains("vars"));
        let bad = PoissonPresentation::from_json("{");
        assert!(bad.unwrap_err().to_string().contains("invalid JSON"));
        let bad = PoissonPresentation::from_json(
            r#"{"vars":[{"name":"x","weight":"1"}],"ideal":["x +"]}"#,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn module_fixtures_validate_their_grading() {
        let k1 = sl2_c2_presentation(1);
        let ring = ModulePresentation::ring_module(&k1);
        assert_eq!(ring.rank(), 1);
        assert_eq!(ring.gen_weights(), &[Rational::zero()]);
        assert!(ring.action(0, 0).iter().all(MultiPoly::is_zero));

        let hw = highest_weight_module(&k1, &Rational::from_int(2)).unwrap();
        assert_eq!(hw.rank(), 1);
        assert_eq!(hw.action(1, 0), &[MultiPoly::one(3)]);
        assert_eq!(
            hw.action(2, 0),
            &[MultiPoly::constant(3, Rational::from_int(2))]
        );
        assert!(hw.action(0, 0)[0].is_zero());

        // a weight-violating action table is rejected
        let bad = ModulePresentation::new(
            &k1,
            vec!["v".into()],
            vec![Rational::one()],
            vec![
                vec![vec![MultiPoly::var(3, 0)]],
                vec![vec![MultiPoly::zero(3)]],
                vec![vec![MultiPoly::zero(3)]],
            ],
        );
        assert!(bad
            .unwrap_err()
            .to_string()
            .contains("homogeneous of weight 0"));

        // the fixture needs sl₂-style names
        let vira = virasoro_c2_presentation(5, 2).unwrap();
        assert!(highest_weight_module(&vira, &Rational::one()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        /// Antisymmetry, Leibniz, and Jacobi for the sl₂ biderivation on
        /// random small polynomials.
        #[test]
        fn bracket_identities_hold_on_random_polynomials(
            fa in prop::collection::vec(((0u16..=2, 0u16..=2, 0u16..=2), -3i64..=3), 1..=3),
            ga in prop::collection::vec(((0u16..=2, 0u16..=2, 0u16..=2), -3i64..=3), 1..=3),
            ha in prop::collection::vec(((0u16..=2, 0u16..=2, 0u16..=2), -3i64..=3), 1..=3),
        ) {
            let build = |spec: &Vec<((u16, u16, u16), i64)>| {
                let mut acc = MultiPoly::zero(3);
                for ((a, b, c), k) in spec {
                    acc = acc.add(&MultiPoly::monomial(vec![*a, *b, *c], Rational::from_int(*k)));
                }
                acc
            };
            let pres = sl2_c2_presentation(0);
            let (f, g, h) = (build(&fa), build(&ga), build(&ha));
            prop_assert_eq!(pres.bracket(&f, &g), pres.bracket(&g, &f).neg());
            let leibniz = pres
                .bracket(&f.mul(&g), &h)
                .sub(&f.mul(&pres.bracket(&g, &h)))
                .sub(&g.mul(&pres.bracket(&f, &h)));
            prop_assert!(leibniz.is_zero());
            let jacobi = pres
                .bracket(&f, &pres.bracket(&g, &h))
                .add(&pres.bracket(&g, &pres.bracket(&h, &f)))
                .add(&pres.bracket(&h, &pres.bracket(&f, &g)));
            prop_assert!(jacobi.is_zero());
        }
    }
}
