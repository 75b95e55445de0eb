//! Sparse multivariate polynomials over a coefficient ring.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// A polynomial in a fixed number of variables; no stored coefficient is zero.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Ring,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Elem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Ring, nvars: usize) -> Poly {
        Poly {
            ring: ring.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, nvars: usize, c: Elem) -> Poly {
        Self::monomial(ring, vec![0; nvars], c)
    }

    pub fn one(ring: &Ring, nvars: usize) -> Poly {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn var(ring: &Ring, nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(ring, e, ring.one())
    }

    pub fn monomial(ring: &Ring, exps: Vec<u32>, c: Elem) -> Poly {
        let nvars = exps.len();
        let mut p = Self::zero(ring, nvars);
        if !ring.is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(ring: &Ring, nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Elem)>) -> Poly {
        let mut p = Self::zero(ring, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: &Elem) {
        let r = &self.ring;
        let sum = match self.terms.get(&e) {
            Some(v) => r.add(v, c),
            None => c.clone(),
        };
        if r.is_zero(&sum) {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Elem {
        self.terms.get(exps).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> Elem {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn scale(&self, c: &Elem) -> Poly {
        let r = &self.ring;
        let mut out = Self::zero(r, self.nvars);
        for (e, x) in &self.terms {
            let y = r.mul(x, c);
            if !r.is_zero(&y) {
                out.terms.insert(e.clone(), y);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Self::one(&self.ring, self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        assert_eq!(value.nvars, self.nvars);
        let mut powers = vec![Self::one(&self.ring, self.nvars)];
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[var] = 0;
            let m = Self::monomial(&self.ring, rest, c.clone());
            out = &out + &(&m * &powers[k]);
        }
        out
    }

    pub fn evaluate(&self, point: &[Elem]) -> Elem {
        assert_eq!(point.len(), self.nvars);
        let r = &self.ring;
        let mut acc = r.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = r.mul(&t, &r.pow(x, k));
                }
            }
            acc = r.add(&acc, &t);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let r = &self.ring;
        let mut out = Self::zero(r, self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, &r.mul(c, &r.from_int(e[var] as i64)));
        }
        out
    }

    /// Coefficients of the powers of `var`: `self = sum_k out[k] * var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.ring, self.nvars); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[var] = 0;
            out[e[var] as usize].add_term(rest, c);
        }
        out
    }

    /// Moves variables to new positions: old variable `i` becomes new
    /// variable `mapping[i]`; a `None` entry requires the variable to be
    /// absent.
    pub fn rename_vars(&self, mapping: &[Option<usize>], new_nvars: usize) -> Result<Poly> {
        assert_eq!(mapping.len(), self.nvars);
        let mut out = Self::zero(&self.ring, new_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; new_nvars];
            for (i, &k) in e.iter().enumerate() {
                match mapping[i] {
                    Some(j) => ne[j] += k,
                    None if k > 0 => {
                        return Err(Error::Precondition(format!(
                            "variable {i} still occurs and cannot be dropped"
                        )))
                    }
                    None => {}
                }
            }
            out.add_term(ne, c);
        }
        Ok(out)
    }

    /// Reduces modulo `x_a * x_b - 1` by cancelling common powers.
    pub fn cancel_inverse_pair(&self, a: usize, b: usize) -> Poly {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            let m = e[a].min(e[b]);
            let mut ne = e.clone();
            ne[a] -= m;
            ne[b] -= m;
            out.add_term(ne, c);
        }
        out
    }

    pub fn format(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".into();
        }
        let r = &self.ring;
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mono: Vec<String> = names
                .iter()
                .zip(e)
                .filter(|(_, k)| **k > 0)
                .map(|(n, k)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            let mono = mono.join("*");
            let cs = r.format(c);
            let cs = cs.split(" mod ").next().unwrap().to_string();
            let term = if mono.is_empty() {
                cs
            } else if r.is_one(c) {
                mono
            } else if r.is_one(&r.neg(c)) {
                format!("-{mono}")
            } else if cs.contains(['+', '*']) || cs[1..].contains('-') {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            match (i, term.strip_prefix('-')) {
                (0, _) => out.push_str(&term),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        let r = &self.ring;
        Poly {
            ring: r.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), r.neg(c))).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let r = &self.ring;
        let mut out = Poly::zero(r, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &r.mul(ca, cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// Convenience constructor for polynomial expressions over a fixed ring and
/// variable count.
#[derive(Clone, Debug)]
pub struct PolyRing {
    ring: Ring,
    nvars: usize,
}

impl PolyRing {
    pub fn new(ring: &Ring, nvars: usize) -> PolyRing {
        PolyRing {
            ring: ring.clone(),
            nvars,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(&self.ring, self.nvars, i)
    }

    pub fn c(&self, x: &Elem) -> Poly {
        Poly::constant(&self.ring, self.nvars, x.clone())
    }

    pub fn int(&self, n: i64) -> Poly {
        Poly::constant(&self.ring, self.nvars, self.ring.from_int(n))
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(&self.ring, self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_substitution() {
        let q = Ring::rationals();
        let pr = PolyRing::new(&q, 2);
        let (x, y) = (pr.var(0), pr.var(1));
        let f = &(&x * &x) - &(&y * &y);
        let g = f.substitute(0, &(&x + &y));
        // (x+y)^2 - y^2 = x^2 + 2xy
        assert_eq!(g, &(&x * &x) + &(&pr.int(2) * &(&x * &y)));
        assert_eq!(f.derivative(0), &pr.int(2) * &x);
        assert_eq!(f.evaluate(&[q.from_int(3), q.from_int(1)]), q.from_int(8));
        assert_eq!(f.format(&["X", "Y"]), "X^2 - Y^2");
    }

    #[test]
    fn rename_and_cancel() {
        let q = Ring::rationals();
        let pr = PolyRing::new(&q, 3);
        let p = &pr.var(1) * &pr.var(2);
        let r = p.rename_vars(&[None, Some(0), Some(1)], 2).unwrap();
        assert_eq!(r, &Poly::var(&q, 2, 0) * &Poly::var(&q, 2, 1));
        assert!(pr.var(0).rename_vars(&[None, Some(0), Some(1)], 2).is_err());
        let xy = &(&pr.var(1) * &pr.var(2)) * &pr.var(1);
        assert_eq!(xy.cancel_inverse_pair(1, 2), pr.var(1));
    }
}
