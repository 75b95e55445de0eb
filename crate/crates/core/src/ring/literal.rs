//! Coefficient literals: a small expression grammar evaluated inside a ring,
//! and the exact rendering that the grammar reads back.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)* ["mod" <p>]
//! term   := factor (('*'|'/') factor | factor)*
//! factor := '-' factor | atom ['^' <int>]
//! atom   := <int> | <name> | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Elem, Kind, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> std::result::Result<Vec<Tok>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().map_err(|_| "bad integer".to_string())?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> std::result::Result<Elem, String> {
        let r = self.ring;
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = r.neg(&acc);
        }
        loop {
            if self.eat('+') {
                acc = r.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = r.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Ident(name)) => name != "mod",
            Some(Tok::Num(_)) | Some(Tok::Op('(')) => true,
            _ => false,
        }
    }

    fn term(&mut self) -> std::result::Result<Elem, String> {
        let r = self.ring;
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = r.mul(&acc, &self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                let inv = r.try_invert(&d).map_err(|e| e.to_string())?;
                acc = r.mul(&acc, &inv);
            } else if self.starts_factor() {
                acc = r.mul(&acc, &self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> std::result::Result<Elem, String> {
        if self.eat('-') {
            let f = self.factor()?;
            return Ok(self.ring.neg(&f));
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| "exponent too large".to_string())?;
                    Ok(self.ring.pow(&base, e))
                }
                _ => Err("expected integer exponent".into()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> std::result::Result<Elem, String> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(self.ring.from_bigint(&n)),
            Some(Tok::Ident(name)) => self.ring.named_element(&name).map_err(|e| e.to_string()),
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err("missing ')'".into());
                }
                Ok(e)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of literal".into()),
        }
    }
}

pub(super) fn parse(ring: &Ring, literal: &str) -> Result<Elem> {
    let err = |reason: String| Error::Parse {
        literal: literal.to_string(),
        reason,
    };
    let toks = tokenize(literal).map_err(err)?;
    if toks.is_empty() {
        return Err(err("empty literal".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let value = p.expr().map_err(err)?;
    if p.peek() == Some(&Tok::Ident("mod".into())) {
        p.pos += 1;
        match p.next() {
            Some(Tok::Num(n)) if n == BigInt::from(ring.characteristic()) && ring.characteristic() > 0 => {}
            _ => return Err(err(format!("modulus does not match {ring}"))),
        }
    }
    if p.pos < p.toks.len() {
        return Err(err(format!("trailing input at token {}", p.pos)));
    }
    Ok(value)
}

/// Rendering without the trailing ` mod p`.
fn plain(ring: &Ring, x: &Elem) -> String {
    match (&*ring.kind, x) {
        (Kind::Rationals, Elem::Rat(r)) => r.to_string(),
        (Kind::PrimeField(_), Elem::Fp(v)) => v.to_string(),
        (Kind::Dual(base), Elem::Dual(a, b)) => {
            let mut terms = Vec::new();
            if !base.is_zero(a) {
                terms.push(plain(base, a));
            }
            if !base.is_zero(b) {
                terms.push(scaled(base, b, "eps"));
            }
            join_terms(terms)
        }
        (
            Kind::Trunc {
                base, vars, monomials, ..
            },
            Elem::Trunc(m),
        ) => {
            let terms = monomials
                .iter()
                .filter_map(|mono| m.get(mono).map(|c| (mono, c)))
                .map(|(mono, c)| {
                    let name = monomial_name(vars, mono);
                    if name.is_empty() {
                        plain(base, c)
                    } else {
                        scaled(base, c, &name)
                    }
                })
                .collect();
            join_terms(terms)
        }
        _ => panic!("element does not belong to {ring}"),
    }
}

fn monomial_name(vars: &[String], mono: &[u32]) -> String {
    vars.iter()
        .zip(mono)
        .filter(|(_, e)| **e > 0)
        .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// `c*name`, with unit coefficients dropped and compound ones parenthesized.
fn scaled(base: &Ring, c: &Elem, name: &str) -> String {
    if base.is_one(c) {
        return name.to_string();
    }
    if *c == base.neg(&base.one()) && base.characteristic() == 0 {
        return format!("-{name}");
    }
    let s = plain(base, c);
    let body = s.strip_prefix('-').unwrap_or(&s);
    if body.contains(['+', '-', '*']) {
        format!("({s})*{name}")
    } else {
        format!("{s}*{name}")
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i > 0 && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(t);
    }
    out
}

pub(super) fn format(ring: &Ring, x: &Elem) -> String {
    let s = plain(ring, x);
    match ring.characteristic() {
        0 => s,
        p => format!("{s} mod {p}"),
    }
}
