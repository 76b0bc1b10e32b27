//! Textual input format for ring elements, inverse to their `Display` form.
//!
//! Grammar, loosest binding first: sums of `±term`, terms are `*`-products,
//! factors allow `^uint`.  Atoms are rationals, roots of unity `zN^k`,
//! generators (`E4`, `G[3;th=-1,la=0]`, `P1(1,2)`, `WP2(1,2)`), and
//! parenthesized subexpressions.

use crate::exactnum::{CyclotomicNumber, Rational};

use super::element::{DiffRingElement, TwistKey};
use super::DiffringError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(input: &str) -> Result<Vec<Tok>, DiffringError> {
    let mut toks = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut n: i64 = 0;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as i64))
                    .ok_or_else(|| DiffringError::Parse("integer literal overflow".into()))?;
                chars.next();
            }
            toks.push(Tok::Num(n));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                s.push(chars.next().unwrap());
            }
            toks.push(Tok::Ident(s));
        } else if "+-*/^()[];,=".contains(c) {
            chars.next();
            toks.push(Tok::Sym(c));
        } else {
            return Err(DiffringError::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), DiffringError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(DiffringError::Parse(format!(
                "expected '{c}', found {:?}",
                self.peek()
            )))
        }
    }

    fn expect_num(&mut self) -> Result<i64, DiffringError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            other => Err(DiffringError::Parse(format!(
                "expected a number, found {other:?}"
            ))),
        }
    }

    /// `n` or `n/d`, with an optional already-consumed sign applied.
    fn rational_tail(&mut self, neg: bool) -> Result<Rational, DiffringError> {
        let n = self.expect_num()?;
        let d = if self.eat_sym('/') {
            self.expect_num()?
        } else {
            1
        };
        if d == 0 {
            return Err(DiffringError::Parse("zero denominator".into()));
        }
        Ok(Rational::new(if neg { -n } else { n }, d))
    }

    fn element(&mut self) -> Result<DiffRingElement, DiffringError> {
        let mut neg = false;
        if self.eat_sym('-') {
            neg = true;
        } else {
            self.eat_sym('+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat_sym('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat_sym('-') {
                acc = acc.sub(&self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DiffRingElement, DiffringError> {
        let mut acc = self.factor()?;
        while self.eat_sym('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DiffRingElement, DiffringError> {
        let base = self.atom()?;
        if self.eat_sym('^') {
            let e = self.expect_num()?;
            let e = u32::try_from(e)
                .map_err(|_| DiffringError::Parse(format!("exponent {e} out of range")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<DiffRingElement, DiffringError> {
        if self.eat_sym('(') {
            let e = self.element()?;
            self.expect_sym(')')?;
            return Ok(e);
        }
        match self.next() {
            Some(Tok::Num(_)) => {
                self.pos -= 1;
                let r = self.rational_tail(false)?;
                Ok(DiffRingElement::from_rational(r))
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "E" => DiffRingElement::e_hat(self.expect_num()? as u32),
                "G" => {
                    self.expect_sym('[')?;
                    let k = self.expect_num()? as u32;
                    let key = if self.eat_sym(';') {
                        self.twist()?
                    } else {
                        TwistKey::untwisted()
                    };
                    self.expect_sym(']')?;
                    Ok(DiffRingElement::g_hat(k, key))
                }
                "P" | "WP" => {
                    let m = self.expect_num()?;
                    self.expect_sym('(')?;
                    let i = self.expect_num()?;
                    self.expect_sym(',')?;
                    let j = self.expect_num()?;
                    self.expect_sym(')')?;
                    let (m, i, j) = (m as u8, i as u8, j as u8);
                    if name == "P" {
                        DiffRingElement::p(m, i, j)
                    } else {
                        DiffRingElement::wp(m, i, j)
                    }
                }
                "z" => {
                    let n = self.expect_num()?;
                    let k = if self.eat_sym('^') {
                        let neg = self.eat_sym('-');
                        let k = self.expect_num()?;
                        if neg {
                            -k
                        } else {
                            k
                        }
                    } else {
                        1
                    };
                    let n = u32::try_from(n)
                        .map_err(|_| DiffringError::Parse(format!("conductor {n} out of range")))?;
                    let zeta = CyclotomicNumber::root_of_unity(n, k)
                        .map_err(crate::special::SpecialError::from)?;
                    Ok(DiffRingElement::constant(zeta))
                }
                other => Err(DiffringError::Parse(format!("unknown symbol '{other}'"))),
            },
            other => Err(DiffringError::Parse(format!(
                "expected an atom, found {other:?}"
            ))),
        }
    }

    /// `th=<theta>,la=<lambda>` inside a `G[..]` bracket.
    fn twist(&mut self) -> Result<TwistKey, DiffringError> {
        match self.next() {
            Some(Tok::Ident(s)) if s == "th" => {}
            other => {
                return Err(DiffringError::Parse(format!(
                    "expected 'th', found {other:?}"
                )))
            }
        }
        self.expect_sym('=')?;
        let neg = self.eat_sym('-');
        let a = self.expect_num()?;
        let (a, n) = if self.eat_sym('/') {
            let n = self.expect_num()?;
            (if neg { -a } else { a }, n)
        } else if neg && a == 1 {
            (1, 2)
        } else if !neg && a == 1 {
            (0, 1)
        } else {
            return Err(DiffringError::Parse(format!(
                "theta must be 1, -1 or a/N, found {}{a}",
                if neg { "-" } else { "" }
            )));
        };
        self.expect_sym(',')?;
        match self.next() {
            Some(Tok::Ident(s)) if s == "la" => {}
            other => {
                return Err(DiffringError::Parse(format!(
                    "expected 'la', found {other:?}"
                )))
            }
        }
        self.expect_sym('=')?;
        let r = self.expect_num()?;
        let t = if self.eat_sym('/') {
            self.expect_num()?
        } else {
            1
        };
        let n = u32::try_from(n)
            .map_err(|_| DiffringError::Parse("theta denominator out of range".into()))?;
        let (r, t) = (
            u32::try_from(r).map_err(|_| DiffringError::Parse("lambda out of range".into()))?,
            u32::try_from(t).map_err(|_| DiffringError::Parse("lambda out of range".into()))?,
        );
        TwistKey::new(a, n, r, t)
    }
}

/// Parses the textual element format; inverse to the canonical display.
pub fn parse_element(input: &str) -> Result<DiffRingElement, DiffringError> {
    let mut p = Parser {
        toks: tokenize(input)?,
        pos: 0,
    };
    if p.peek().is_none() {
        return Err(DiffringError::Parse("empty input".into()));
    }
    let e = p.element()?;
    if let Some(t) = p.peek() {
        return Err(DiffringError::Parse(format!("trailing input at {t:?}")));
    }
    Ok(e)
}
