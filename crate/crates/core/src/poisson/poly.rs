//! Sparse multivariate polynomials over ℚ and the two monomial orders the
//! Gröbner layer understands.
//!
//! Exponent vectors have a fixed length (the variable count of the ambient
//! ring) and zero coefficients are never stored, so the zero polynomial is
//! the one with no terms.  Variable names live outside the polynomial; they
//! are supplied when parsing or printing.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactnum::Rational;

use super::PoissonError;

/// Monomial order for leading-term selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Total degree first, lexicographic tie-break (the default order).
    GrLex,
    /// Pure lexicographic; variables listed earlier are larger.
    Lex,
}

impl MonomialOrder {
    /// Compares two exponent vectors of equal length.
    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::GrLex => {
                let da: u32 = a.iter().map(|&e| u32::from(e)).sum();
                let db: u32 = b.iter().map(|&e| u32::from(e)).sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            MonomialOrder::Lex => a.cmp(b),
        }
    }
}

pub(super) fn mono_mul(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub(super) fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

/// Quotient `b / a`; caller guarantees divisibility.
pub(super) fn mono_div(b: &[u16], a: &[u16]) -> Vec<u16> {
    b.iter().zip(a).map(|(&y, &x)| y - x).collect()
}

pub(super) fn mono_lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// A sparse polynomial over ℚ in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// The i-th variable as a polynomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        Self::monomial(exps, Rational::one())
    }

    /// A single term `c · x^exps`.
    pub fn monomial(exps: Vec<u16>, c: Rational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Term iterator in the map's plain lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coefficient(&self, exps: &[u16]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert_add(&mut self, exps: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Multiplies by a single term `c · x^exps`.
    pub fn mul_monomial(&self, exps: &[u16], c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (mono_mul(e, exps), k * c))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.insert_add(mono_mul(ea, eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to the i-th variable.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.insert_add(d, c * &Rational::from_int(i64::from(e[i])));
        }
        out
    }

    /// Leading term under the given order, or `None` for zero.
    pub fn leading(&self, order: MonomialOrder) -> Option<(&[u16], &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_exps(a, b))
            .map(|(e, c)| (e.as_slice(), c))
    }

    /// Maximum total degree, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| u32::from(x)).sum())
            .max()
    }

    /// Weighted degree of the exponent vector `e`.
    pub fn exps_weight(e: &[u16], weights: &[Rational]) -> Rational {
        let mut w = Rational::zero();
        for (x, wi) in e.iter().zip(weights) {
            w = &w + &(wi * &Rational::from_int(i64::from(*x)));
        }
        w
    }

    /// The common weighted degree of all terms, or `None` when the
    /// polynomial is zero or inhomogeneous.
    pub fn weight_if_homogeneous(&self, weights: &[Rational]) -> Option<Rational> {
        let mut seen: Option<Rational> = None;
        for e in self.terms.keys() {
            let w = Self::exps_weight(e, weights);
            match &seen {
                None => seen = Some(w),
                Some(prev) if *prev == w => {}
                Some(_) => return None,
            }
        }
        seen
    }

    /// Renders the polynomial with the supplied variable names, terms in
    /// descending graded-lex order.
    pub fn format_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars, "name count mismatch");
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| MonomialOrder::GrLex.cmp_exps(b, a));
        let mut out = String::new();
        for (idx, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || e.iter().all(|&x| x == 0) {
                parts.push(mag.to_string());
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 1 {
                    parts.push(names[i].clone());
                } else if x > 1 {
                    parts.push(format!("{}^{}", names[i], x));
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, PoissonError> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = bytes[start..i].iter().collect();
            let n: i64 = text
                .parse()
                .map_err(|_| PoissonError::Parse(format!("integer overflow at byte {start}")))?;
            toks.push((start, Tok::Num(n)));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            toks.push((start, Tok::Ident(bytes[start..i].iter().collect())));
        } else if "+-*^/()".contains(c) {
            toks.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(PoissonError::Parse(format!(
                "unexpected character '{c}' at byte {i}"
            )));
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> String {
        match self.toks.get(self.pos) {
            Some((at, _)) => format!("byte {at}"),
            None => "end of input".into(),
        }
    }

    fn eat_sym(&mut self, s: char) -> bool {
        if self.peek() == Some(&Tok::Sym(s)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PoissonError> {
        let mut negate = false;
        if self.eat_sym('-') {
            negate = true;
        } else {
            self.eat_sym('+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat_sym('+') {
                let t = self.term()?;
                acc = acc.add(&t);
            } else if self.eat_sym('-') {
                let t = self.term()?;
                acc = acc.sub(&t);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, PoissonError> {
        let mut acc = self.factor()?;
        while self.eat_sym('*') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PoissonError> {
        let base = self.atom()?;
        if self.eat_sym('^') {
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e = u32::try_from(e).map_err(|_| {
                        PoissonError::Parse(format!("bad exponent at {}", self.here()))
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(PoissonError::Parse(format!(
                    "expected exponent at {}",
                    self.here()
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, PoissonError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                // "3/2" is a rational literal, not a division of polynomials.
                if self.eat_sym('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != 0 => {
                            self.pos += 1;
                            Ok(MultiPoly::constant(self.names.len(), Rational::new(n, d)))
                        }
                        _ => Err(PoissonError::Parse(format!(
                            "expected nonzero denominator at {}",
                            self.here()
                        ))),
                    }
                } else {
                    Ok(MultiPoly::constant(self.names.len(), Rational::from_int(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(MultiPoly::var(self.names.len(), i)),
                    None => Err(PoissonError::Parse(format!("unknown variable '{name}'"))),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.eat_sym(')') {
                    Ok(inner)
                } else {
                    Err(PoissonError::Parse(format!(
                        "expected ')' at {}",
                        self.here()
                    )))
                }
            }
            _ => Err(PoissonError::Parse(format!(
                "expected a term at {}",
                self.here()
            ))),
        }
    }
}

/// Parses `src` as a polynomial in the named variables.
///
/// The syntax is integer or rational (`a/b`) coefficients, `*` products,
/// `^` powers, parentheses, and `+`/`-`.
pub fn parse_poly(src: &str, names: &[String]) -> Result<MultiPoly, PoissonError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        names,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(PoissonError::Parse(format!(
            "trailing input at {}",
            p.here()
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    fn p(src: &str) -> MultiPoly {
        parse_poly(src, &xyz()).unwrap()
    }

    #[test]
    fn arithmetic_and_partials() {
        let sum = p("x + y");
        let diff = p("x - y");
        assert_eq!(sum.mul(&diff), p("x^2 - y^2"));
        assert_eq!(p("x + 2*y").pow(3), p("x^3 + 6*x^2*y + 12*x*y^2 + 8*y^3"));
        assert_eq!(
            p("x^3 + 6*x^2*y + 12*x*y^2 + 8*y^3").partial(0),
            p("3*x^2 + 12*x*y + 12*y^2")
        );
        assert_eq!(p("x*y - z^2").partial(2), p("-2*z"));
        assert!(p("5").partial(1).is_zero());
        assert_eq!(p("x*y").scale(&Rational::new(1, 2)), p("1/2*x*y"));
        assert_eq!(p("x - x"), MultiPoly::zero(3));
        assert_eq!(
            p("x*y - z^2").coefficient(&[0, 0, 2]),
            Rational::from_int(-1)
        );
        assert!(p("x*y - z^2").coefficient(&[1, 1, 1]).is_zero());
    }

    #[test]
    fn the_two_orders_split_the_classic_example() {
        // x versus y^3: degree says y^3, lexicography says x.
        let names = vec!["x".to_string(), "y".to_string()];
        let f = parse_poly("x + y^3", &names).unwrap();
        let (lm_gr, _) = f.leading(MonomialOrder::GrLex).unwrap();
        assert_eq!(lm_gr, &[0, 3]);
        let (lm_lex, _) = f.leading(MonomialOrder::Lex).unwrap();
        assert_eq!(lm_lex, &[1, 0]);

        let g = p("x*y^2 + x^2");
        assert_eq!(g.leading(MonomialOrder::GrLex).unwrap().0, &[1, 2, 0]);
        assert_eq!(g.leading(MonomialOrder::Lex).unwrap().0, &[2, 0, 0]);
        assert!(MultiPoly::zero(3).leading(MonomialOrder::GrLex).is_none());
    }

    #[test]
    fn weights_and_homogeneity() {
        let w1 = vec![Rational::one(), Rational::one(), Rational::one()];
        assert_eq!(
            p("x*y - z^2").weight_if_homogeneous(&w1),
            Some(Rational::from_int(2))
        );
        assert_eq!(p("x*y - z").weight_if_homogeneous(&w1), None);
        assert_eq!(MultiPoly::zero(3).weight_if_homogeneous(&w1), None);
        // x weighs 2, y weighs 3: x^3 and y^2 share weight 6.
        let w = vec![
            Rational::from_int(2),
            Rational::from_int(3),
            Rational::one(),
        ];
        assert_eq!(
            p("x^3 - 4*y^2").weight_if_homogeneous(&w),
            Some(Rational::from_int(6))
        );
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "x^2*y - 2*z^3 + 1/2",
            "-x + y",
            "4*x*y",
            "0",
            "x^2 - 2*y + 3",
            "-1/3*x*z + y^2",
        ] {
            let f = p(src);
            assert_eq!(f.format_with(&xyz()), src);
            assert_eq!(parse_poly(&f.format_with(&xyz()), &xyz()).unwrap(), f);
        }
        assert_eq!(p("(x + y)^2 - (x - y)^2").format_with(&xyz()), "4*x*y");
    }

    #[test]
    fn parser_rejects_malformed_input() {
        for bad in ["x + w", "x ^", "2x", "x +", "(x", "x & y", "1/0"] {
            assert!(parse_poly(bad, &xyz()).is_err(), "accepted {bad:?}");
        }
        let err = parse_poly("x & y", &xyz()).unwrap_err();
        assert!(err.to_string().contains("byte 2"), "{err}");
    }
}
