//! Truncated power series in two variables `X`, `Y`.
//!
//! A [`Series2`] of precision `N` knows its homogeneous components of degree
//! `0..=N` exactly; everything of degree above `N` is unknown. Arithmetic
//! never claims more than it knows: a product `f*g` is known through degree
//! `min(N_f + ord(g), N_g + ord(f))`, where `ord` is the order lower bound
//! (the order if some known component is nonzero, `N + 1` otherwise).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Elem, Ring};

/// A homogeneous polynomial of degree `n`; `coeffs[i]` multiplies `X^i Y^(n-i)`.
#[derive(Clone, Debug)]
pub struct Homog {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl PartialEq for Homog {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Homog {}

impl Homog {
    pub fn zero(ring: &Ring, degree: usize) -> Homog {
        Homog {
            ring: ring.clone(),
            coeffs: vec![ring.zero(); degree + 1],
        }
    }

    /// `coeffs[i]` is the coefficient of `X^i Y^(n-i)` with `n = coeffs.len() - 1`.
    pub fn new(ring: &Ring, coeffs: Vec<Elem>) -> Homog {
        assert!(!coeffs.is_empty(), "a homogeneous component needs a degree");
        Homog {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// `c * X^i * Y^j`.
    pub fn monomial(ring: &Ring, i: usize, j: usize, c: Elem) -> Homog {
        let mut h = Self::zero(ring, i + j);
        h.coeffs[i] = c;
        h
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `X^i Y^(n-i)`.
    pub fn coeff(&self, i: usize) -> &Elem {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn scale(&self, c: &Elem) -> Homog {
        Homog::new(&self.ring, self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect())
    }

    pub fn mul_x(&self) -> Homog {
        let mut coeffs = vec![self.ring.zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Homog::new(&self.ring, coeffs)
    }

    pub fn mul_y(&self) -> Homog {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(self.ring.zero());
        Homog::new(&self.ring, coeffs)
    }

    /// Splits `h = X*u + Y*v` with `v` the pure-`Y` part divided by `Y` and
    /// `u` everything else divided by `X`. Fails in degree 0.
    pub fn split_xy(&self) -> Result<(Homog, Homog)> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::Precondition("a constant has no X/Y decomposition".into()));
        }
        let u = Homog::new(&self.ring, self.coeffs[1..].to_vec());
        let mut v = Homog::zero(&self.ring, n - 1);
        v.coeffs[0] = self.coeffs[0].clone();
        Ok((u, v))
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.degree() as u32;
        Poly::from_terms(
            &self.ring,
            2,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32, n - i as u32], c.clone())),
        )
    }

    fn check_same_degree(&self, other: &Homog) {
        assert_eq!(self.degree(), other.degree(), "homogeneous degrees differ");
    }
}

impl Add for &Homog {
    type Output = Homog;

    fn add(self, rhs: &Homog) -> Homog {
        self.check_same_degree(rhs);
        let r = &self.ring;
        Homog::new(
            r,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| r.add(a, b)).collect(),
        )
    }
}

impl Sub for &Homog {
    type Output = Homog;

    fn sub(self, rhs: &Homog) -> Homog {
        self.check_same_degree(rhs);
        let r = &self.ring;
        Homog::new(
            r,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| r.sub(a, b)).collect(),
        )
    }
}

impl Neg for &Homog {
    type Output = Homog;

    fn neg(self) -> Homog {
        Homog::new(&self.ring, self.coeffs.iter().map(|c| self.ring.neg(c)).collect())
    }
}

impl Mul for &Homog {
    type Output = Homog;

    fn mul(self, rhs: &Homog) -> Homog {
        let r = &self.ring;
        let mut out = Homog::zero(r, self.degree() + rhs.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out.coeffs[i + j] = r.add(&out.coeffs[i + j], &r.mul(a, b));
            }
        }
        out
    }
}

impl fmt::Display for Homog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().format(&["X", "Y"]))
    }
}

/// Order of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Order {
    /// Least degree of a nonzero component.
    Finite(usize),
    /// Every known component vanishes; the payload is the precision.
    ZeroAtPrecision(usize),
}

impl Order {
    /// Lower bound on the true order.
    pub fn lower_bound(self) -> usize {
        match self {
            Order::Finite(n) => n,
            Order::ZeroAtPrecision(n) => n + 1,
        }
    }

    /// Whether the order is provably at least `k`.
    pub fn at_least(self, k: usize) -> bool {
        self.lower_bound() >= k
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::ZeroAtPrecision(n) => write!(f, "zero-at-precision {n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Series2 {
    ring: Ring,
    comps: Vec<Homog>,
}

impl PartialEq for Series2 {
    fn eq(&self, other: &Self) -> bool {
        self.comps == other.comps
    }
}

impl Eq for Series2 {}

#[derive(Deserialize)]
struct LiteralTerm(u32, u32, String);

impl Series2 {
    pub fn zero(ring: &Ring, precision: usize) -> Series2 {
        Series2 {
            ring: ring.clone(),
            comps: (0..=precision).map(|n| Homog::zero(ring, n)).collect(),
        }
    }

    pub fn constant(ring: &Ring, precision: usize, c: Elem) -> Series2 {
        let mut s = Self::zero(ring, precision);
        s.comps[0].coeffs[0] = c;
        s
    }

    pub fn one(ring: &Ring, precision: usize) -> Series2 {
        Self::constant(ring, precision, ring.one())
    }

    pub fn x(ring: &Ring, precision: usize) -> Series2 {
        Self::from_terms(ring, precision, &[(1, 0, ring.one())])
    }

    pub fn y(ring: &Ring, precision: usize) -> Series2 {
        Self::from_terms(ring, precision, &[(0, 1, ring.one())])
    }

    /// Sum of `c * X^i * Y^j`; terms above the precision are dropped.
    pub fn from_terms(ring: &Ring, precision: usize, terms: &[(usize, usize, Elem)]) -> Series2 {
        let mut s = Self::zero(ring, precision);
        for (i, j, c) in terms {
            let n = i + j;
            if n <= precision {
                s.comps[n].coeffs[*i] = ring.add(&s.comps[n].coeffs[*i], c);
            }
        }
        s
    }

    pub fn from_poly(p: &Poly, precision: usize) -> Series2 {
        assert_eq!(p.nvars(), 2, "series are bivariate");
        let terms: Vec<(usize, usize, Elem)> = p
            .terms()
            .map(|(e, c)| (e[0] as usize, e[1] as usize, c.clone()))
            .collect();
        Self::from_terms(p.ring(), precision, &terms)
    }

    /// Builds a series from homogeneous components `0..=N`.
    pub fn from_components(ring: &Ring, comps: Vec<Homog>) -> Series2 {
        assert!(!comps.is_empty());
        for (n, h) in comps.iter().enumerate() {
            assert_eq!(h.degree(), n, "component {n} has the wrong degree");
        }
        Series2 {
            ring: ring.clone(),
            comps,
        }
    }

    /// Parses `[[i, j, "coefficient"], ...]` meaning `sum c * X^i * Y^j`.
    pub fn from_literal(ring: &Ring, precision: usize, literal: &str) -> Result<Series2> {
        let terms: Vec<LiteralTerm> = serde_json::from_str(literal).map_err(|e| Error::Parse {
            literal: literal.to_string(),
            reason: e.to_string(),
        })?;
        let terms = terms
            .into_iter()
            .map(|LiteralTerm(i, j, c)| Ok((i as usize, j as usize, ring.parse(&c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(ring, precision, &terms))
    }

    /// The known terms in the literal format.
    pub fn to_literal(&self) -> String {
        let mut parts = Vec::new();
        for h in &self.comps {
            let n = h.degree();
            for i in (0..=n).rev() {
                let c = &h.coeffs[i];
                if !self.ring.is_zero(c) {
                    let text = self.ring.format(c);
                    let text = text.split(" mod ").next().unwrap();
                    parts.push(format!("[{},{},{:?}]", i, n - i, text));
                }
            }
        }
        format!("[{}]", parts.join(","))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn precision(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn components(&self) -> &[Homog] {
        &self.comps
    }

    pub fn homogeneous_part(&self, n: usize) -> Result<&Homog> {
        self.comps.get(n).ok_or(Error::InsufficientPrecision {
            requested: n,
            precision: self.precision(),
        })
    }

    /// Known terms as a polynomial.
    pub fn to_poly(&self) -> Poly {
        self.comps
            .iter()
            .fold(Poly::zero(&self.ring, 2), |acc, h| &acc + &h.to_poly())
    }

    pub fn order(&self) -> Order {
        match self.comps.iter().position(|h| !h.is_zero()) {
            Some(n) => Order::Finite(n),
            None => Order::ZeroAtPrecision(self.precision()),
        }
    }

    /// Degree of the highest nonzero known component.
    pub fn max_degree(&self) -> Option<usize> {
        self.comps.iter().rposition(|h| !h.is_zero())
    }

    pub fn truncate(&self, precision: usize) -> Series2 {
        assert!(precision <= self.precision(), "cannot raise precision by truncation");
        Series2 {
            ring: self.ring.clone(),
            comps: self.comps[..=precision].to_vec(),
        }
    }

    /// Raises the precision by declaring the unknown tail zero; only
    /// meaningful when the series is an exact polynomial.
    pub fn pad_to(&self, precision: usize) -> Series2 {
        let mut out = self.clone();
        for n in out.comps.len()..=precision {
            out.comps.push(Homog::zero(&self.ring, n));
        }
        out
    }

    /// Random series with components in degrees `min_order..=precision`.
    pub fn random<R: Rng + ?Sized>(ring: &Ring, precision: usize, min_order: usize, rng: &mut R) -> Series2 {
        let mut s = Self::zero(ring, precision);
        for n in min_order..=precision {
            for c in s.comps[n].coeffs.iter_mut() {
                *c = ring.random(rng);
            }
        }
        s
    }

    pub fn scale(&self, c: &Elem) -> Series2 {
        Series2 {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|h| h.scale(c)).collect(),
        }
    }

    pub fn add_homog(&self, h: &Homog) -> Series2 {
        let mut out = self.clone();
        if h.degree() <= self.precision() {
            out.comps[h.degree()] = &out.comps[h.degree()] + h;
        }
        out
    }

    /// `(self - pure Y part) / X` and `(pure Y part) / Y`, each of
    /// precision one less; requires a zero constant term and precision >= 1.
    pub fn split_xy(&self) -> Result<(Series2, Series2)> {
        if !self.ring.is_zero(&self.comps[0].coeffs[0]) {
            return Err(Error::Precondition("series has a constant term".into()));
        }
        if self.precision() == 0 {
            return Err(Error::InsufficientPrecision {
                requested: 1,
                precision: 0,
            });
        }
        let mut us = Vec::new();
        let mut vs = Vec::new();
        for h in &self.comps[1..] {
            let (u, v) = h.split_xy()?;
            us.push(u);
            vs.push(v);
        }
        Ok((
            Series2::from_components(&self.ring, us),
            Series2::from_components(&self.ring, vs),
        ))
    }

    /// Product truncated at `precision`; the caller guarantees validity.
    fn mul_to(&self, rhs: &Series2, precision: usize) -> Series2 {
        let mut out = Series2::zero(&self.ring, precision);
        for (i, a) in self.comps.iter().enumerate() {
            if i > precision || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.comps.iter().enumerate() {
                if i + j > precision {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.comps[i + j] = &out.comps[i + j] + &(a * b);
            }
        }
        out
    }

    /// Precision of a product under the unknown-tail convention.
    fn product_precision(&self, rhs: &Series2) -> usize {
        let a = self.precision() + rhs.order().lower_bound();
        let b = rhs.precision() + self.order().lower_bound();
        a.min(b)
    }

    /// `self(xs, ys)`; both substitutes must have zero constant term.
    ///
    /// Evaluated by nested Horner schemes, first in `ys` for each power of
    /// `X`, then in `xs`.
    pub fn substitute(&self, xs: &Series2, ys: &Series2) -> Result<Series2> {
        for (name, s) in [("X", xs), ("Y", ys)] {
            if !s.order().at_least(1) {
                return Err(Error::InvalidSubstitution(format!(
                    "image of {name} has a nonzero constant term"
                )));
            }
        }
        let ord_f = self.order().lower_bound().max(1);
        let precision = self.precision().min(xs.precision().min(ys.precision()) + ord_f - 1);
        let r = &self.ring;
        let xs = xs.truncate(xs.precision().min(precision));
        let ys = ys.truncate(ys.precision().min(precision));
        let top = match self.max_degree() {
            Some(d) => d.min(precision),
            None => return Ok(Series2::zero(r, precision)),
        };
        let mut acc = Series2::zero(r, precision);
        for i in (0..=top).rev() {
            // F_i(Y) = sum_j c_ij Y^j over the known terms X^i Y^j
            let mut inner = Series2::zero(r, precision);
            for j in (0..=(top - i)).rev() {
                inner = inner.mul_to(&ys, precision);
                let c = &self.comps[i + j].coeffs[i];
                inner.comps[0].coeffs[0] = r.add(&inner.comps[0].coeffs[0], c);
            }
            acc = &acc.mul_to(&xs, precision) + &inner;
        }
        Ok(acc)
    }
}

impl Add for &Series2 {
    type Output = Series2;

    fn add(self, rhs: &Series2) -> Series2 {
        let p = self.precision().min(rhs.precision());
        Series2 {
            ring: self.ring.clone(),
            comps: (0..=p).map(|n| &self.comps[n] + &rhs.comps[n]).collect(),
        }
    }
}

impl Sub for &Series2 {
    type Output = Series2;

    fn sub(self, rhs: &Series2) -> Series2 {
        let p = self.precision().min(rhs.precision());
        Series2 {
            ring: self.ring.clone(),
            comps: (0..=p).map(|n| &self.comps[n] - &rhs.comps[n]).collect(),
        }
    }
}

impl Neg for &Series2 {
    type Output = Series2;

    fn neg(self) -> Series2 {
        Series2 {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|h| -h).collect(),
        }
    }
}

impl Mul for &Series2 {
    type Output = Series2;

    fn mul(self, rhs: &Series2) -> Series2 {
        let p = self.product_precision(rhs);
        self.mul_to(rhs, p)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Series2> for Series2 {
            type Output = Series2;
            fn $m(self, rhs: Series2) -> Series2 { (&self).$m(&rhs) }
        }
        impl $tr<&Series2> for Series2 {
            type Output = Series2;
            fn $m(self, rhs: &Series2) -> Series2 { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O({})",
            self.to_poly().format(&["X", "Y"]),
            self.precision() + 1
        )
    }
}
