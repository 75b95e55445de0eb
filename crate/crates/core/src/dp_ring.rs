//! The ring `R = A[X,Y]/(q(X,Y) - q(s,t))` in canonical coordinates.
//!
//! The relation is monic of degree two in `X`, so every class has a unique
//! representative `f(Y) + X*g(Y)`. Canonical forms are computed by division;
//! [`DPRing::power_sequences`] rebuilds the powers of `X` by an independent
//! recursion.

use rand::Rng;

use crate::error::{identity_failure, Error, Result};
use crate::linalg::Matrix;
use crate::normal_form::QuadForm;
use crate::poly::Poly;
use crate::ring::{Elem, Ring};
use crate::upoly::UPoly;

pub const DEFAULT_DEGREE_BOUND: usize = 16;

const X: usize = 0;
const Y: usize = 1;

#[derive(Clone, Debug)]
pub struct DPRing {
    q: QuadForm,
    s: Elem,
    t: Elem,
    qst: Elem,
    bound: usize,
}

/// `f(Y) + X*g(Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPElem {
    pub f: UPoly,
    pub g: UPoly,
}

/// `(f_n, g_n, h_n)` from the power recursion.
#[derive(Clone, Debug)]
pub struct PowerTriple {
    pub f: Poly,
    pub g: Poly,
    pub h: Poly,
}

impl DPRing {
    pub fn new(q: QuadForm, s: Elem, t: Elem, bound: usize) -> DPRing {
        let qst = q.eval(&s, &t);
        DPRing { q, s, t, qst, bound }
    }

    pub fn with_default_bound(q: QuadForm, s: Elem, t: Elem) -> DPRing {
        Self::new(q, s, t, DEFAULT_DEGREE_BOUND)
    }

    pub fn ring(&self) -> &Ring {
        self.q.ring()
    }

    pub fn quad(&self) -> &QuadForm {
        &self.q
    }

    pub fn s(&self) -> &Elem {
        &self.s
    }

    pub fn t(&self) -> &Elem {
        &self.t
    }

    pub fn degree_bound(&self) -> usize {
        self.bound
    }

    /// `q(s, t)`.
    pub fn base_value(&self) -> &Elem {
        &self.qst
    }

    /// `q(X, Y) - q(s, t)` in `A[X, Y]`.
    pub fn relation(&self) -> Poly {
        let r = self.ring();
        Poly::from_terms(
            r,
            2,
            [
                (vec![2, 0], r.one()),
                (vec![1, 1], self.q.gamma().clone()),
                (vec![0, 2], self.q.delta().clone()),
                (vec![0, 0], r.neg(&self.qst)),
            ],
        )
    }

    pub fn zero(&self) -> DPElem {
        self.elem(UPoly::zero(self.ring()), UPoly::zero(self.ring()))
    }

    pub fn one(&self) -> DPElem {
        self.constant(self.ring().one())
    }

    pub fn constant(&self, c: Elem) -> DPElem {
        self.elem(UPoly::constant(self.ring(), c), UPoly::zero(self.ring()))
    }

    /// The class `u` of `X`.
    pub fn u(&self) -> DPElem {
        self.elem(UPoly::zero(self.ring()), UPoly::one(self.ring()))
    }

    /// The class `v` of `Y`.
    pub fn v(&self) -> DPElem {
        self.elem(UPoly::var(self.ring()), UPoly::zero(self.ring()))
    }

    pub fn elem(&self, f: UPoly, g: UPoly) -> DPElem {
        DPElem { f, g }
    }

    fn check_degree(&self, e: DPElem) -> Result<DPElem> {
        let d = e.degree();
        if d > self.bound {
            return Err(Error::DegreeOverflow {
                degree: d,
                bound: self.bound,
            });
        }
        Ok(e)
    }

    /// Canonical form of a polynomial in `X` (variable 0) and `Y` (variable 1).
    pub fn reduce(&self, p: &Poly) -> Result<DPElem> {
        assert_eq!(p.nvars(), 2, "elements of R are polynomials in X, Y");
        let r = self.ring();
        let by_x = p.coefficients_in(X);
        let mut parts: Vec<UPoly> = by_x.iter().map(|c| to_upoly(c, Y)).collect();
        if parts.is_empty() {
            return Ok(self.zero());
        }
        // X^2 = (q(s,t) - delta Y^2) - gamma Y X
        let low = UPoly::new(r, vec![self.qst.clone(), r.zero(), r.neg(self.q.delta())]);
        let mid = UPoly::monomial(r, 1, r.neg(self.q.gamma()));
        for k in (2..parts.len()).rev() {
            let top = std::mem::replace(&mut parts[k], UPoly::zero(r));
            if top.is_zero() {
                continue;
            }
            parts[k - 2] = &parts[k - 2] + &(&top * &low);
            parts[k - 1] = &parts[k - 1] + &(&top * &mid);
        }
        parts.resize(2, UPoly::zero(r));
        let g = parts.pop().unwrap();
        let f = parts.pop().unwrap();
        self.check_degree(self.elem(f, g))
    }

    pub fn expand(&self, e: &DPElem) -> Poly {
        let x = Poly::var(self.ring(), 2, X);
        &e.f.to_poly(2, Y) + &(&x * &e.g.to_poly(2, Y))
    }

    pub fn add(&self, a: &DPElem, b: &DPElem) -> DPElem {
        self.elem(&a.f + &b.f, &a.g + &b.g)
    }

    pub fn sub(&self, a: &DPElem, b: &DPElem) -> DPElem {
        self.elem(&a.f - &b.f, &a.g - &b.g)
    }

    pub fn neg(&self, a: &DPElem) -> DPElem {
        self.elem(-&a.f, -&a.g)
    }

    pub fn scale(&self, a: &DPElem, c: &Elem) -> DPElem {
        self.elem(a.f.scale(c), a.g.scale(c))
    }

    /// Canonical product: with `X^2 = c - delta Y^2 - gamma Y X`,
    /// `f = f1 f2 + g1 g2 (c - delta Y^2)` and `g = f1 g2 + g1 f2 - gamma Y g1 g2`.
    pub fn mul(&self, a: &DPElem, b: &DPElem) -> Result<DPElem> {
        let r = self.ring();
        let gg = &a.g * &b.g;
        let low = UPoly::new(r, vec![self.qst.clone(), r.zero(), r.neg(self.q.delta())]);
        let f = &(&a.f * &b.f) + &(&gg * &low);
        let g = &(&(&a.f * &b.g) + &(&a.g * &b.f)) - &gg.shift(1).scale(self.q.gamma());
        self.check_degree(self.elem(f, g))
    }

    pub fn pow(&self, a: &DPElem, n: u32) -> Result<DPElem> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// The sequences `f_n, g_n, h_n` for `n <= n_max` with
    /// `X^n = f_n + X g_{n-1} + h_{n-2} (q(X,Y) - q(s,t))` checked for `2 <= n <= n_max`.
    pub fn power_sequences(&self, n_max: usize) -> Result<Vec<PowerTriple>> {
        if n_max < 2 {
            return Err(Error::Precondition("the recursion needs n_max >= 2".into()));
        }
        let r = self.ring();
        let x = Poly::var(r, 2, X);
        let y = Poly::var(r, 2, Y);
        let one = Poly::one(r, 2);
        let f2 = &Poly::constant(r, 2, self.qst.clone()) - &y.pow(2).scale(self.q.delta());
        let g1 = -&y.scale(self.q.gamma());
        let h1 = &x - &y.scale(self.q.gamma());
        let mut f = vec![one.clone(), Poly::zero(r, 2), f2.clone()];
        let mut g = vec![one.clone(), g1.clone()];
        let mut h = vec![one, h1];
        for n in 1..n_max {
            if n >= 2 {
                f.push(&f2 * &g[n - 1]);
            }
            g.push(&f[n + 1] + &(&g1 * &g[n]));
            h.push(&g[n + 1] + &(&x * &h[n]));
        }
        let rel = self.relation();
        for n in 2..=n_max {
            let rhs = &(&f[n] + &(&x * &g[n - 1])) + &(&h[n - 2] * &rel);
            if rhs != x.pow(n as u32) {
                return Err(identity_failure(
                    "power recursion",
                    format!("X^{n} differs from f_n + X g_(n-1) + h_(n-2) x"),
                ));
            }
        }
        Ok((0..=n_max)
            .map(|n| PowerTriple {
                f: f[n].clone(),
                g: g[n].clone(),
                h: h[n].clone(),
            })
            .collect())
    }

    /// Canonical form of `X^n` read off the recursion as `(f_n, g_(n-1))`.
    pub fn x_power_via_recursion(&self, n: usize) -> Result<DPElem> {
        match n {
            0 => Ok(self.one()),
            1 => Ok(self.u()),
            _ => {
                let seq = self.power_sequences(n)?;
                self.check_degree(self.elem(to_upoly(&seq[n].f, Y), to_upoly(&seq[n - 1].g, Y)))
            }
        }
    }

    /// Coordinates `(f_0..f_D, g_0..g_D)`; `None` if the element does not fit.
    pub fn to_vector(&self, e: &DPElem, bound: usize) -> Option<Vec<Elem>> {
        let mut v = e.f.padded(bound)?;
        v.extend(e.g.padded(bound)?);
        Some(v)
    }

    pub fn from_vector(&self, v: &[Elem]) -> DPElem {
        assert!(v.len().is_multiple_of(2));
        let n = v.len() / 2;
        self.elem(
            UPoly::new(self.ring(), v[..n].to_vec()),
            UPoly::new(self.ring(), v[n..].to_vec()),
        )
    }

    /// Basis of canonical forms with `Y`-degree at most `bound`, in the
    /// order of [`DPRing::to_vector`].
    pub fn basis(&self, bound: usize) -> Vec<DPElem> {
        let r = self.ring();
        let mut out = Vec::with_capacity(2 * bound + 2);
        for k in 0..=bound {
            out.push(self.elem(UPoly::monomial(r, k, r.one()), UPoly::zero(r)));
        }
        for k in 0..=bound {
            out.push(self.elem(UPoly::zero(r), UPoly::monomial(r, k, r.one())));
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(&self, degree: usize, rng: &mut R) -> DPElem {
        let r = self.ring();
        let f = UPoly::new(r, (0..=degree).map(|_| r.random(rng)).collect());
        let g = UPoly::new(r, (0..=degree).map(|_| r.random(rng)).collect());
        self.elem(f, g)
    }

    /// Matrix of multiplication by `m` from degree `<= from` into degree
    /// `<= to` canonical coordinates.
    pub fn mul_matrix(&self, m: &DPElem, from: usize, to: usize) -> Result<Matrix> {
        let cols = self
            .basis(from)
            .iter()
            .map(|b| {
                let p = self.mul(m, b)?;
                let d = p.degree();
                self.to_vector(&p, to)
                    .ok_or(Error::DegreeOverflow { degree: d, bound: to })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.ring(), 2 * to + 2, &cols))
    }

    /// Verifies that multiplication by `v - t` is injective on canonical
    /// forms of degree `<= bound`; returns the kernel dimension (zero).
    pub fn is_nzd_v_minus_t(&self, bound: usize) -> Result<usize> {
        if !self.ring().is_field() {
            return Err(Error::Unsupported(format!("rank computations over {}", self.ring())));
        }
        let vt = self.sub(&self.v(), &self.constant(self.t.clone()));
        let m = self.mul_matrix(&vt, bound, bound + 1)?;
        let kernel = m.cols() - m.rank();
        if kernel != 0 {
            return Err(identity_failure(
                "v - t is a non-zero-divisor",
                format!("kernel dimension {kernel}"),
            ));
        }
        Ok(kernel)
    }
}

impl DPElem {
    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    /// Largest `Y`-degree among `f` and `g`.
    pub fn degree(&self) -> usize {
        self.f.degree().unwrap_or(0).max(self.g.degree().unwrap_or(0))
    }

    pub fn format(&self, ring: &Ring) -> String {
        let x = Poly::var(ring, 2, X);
        let p = &self.f.to_poly(2, Y) + &(&x * &self.g.to_poly(2, Y));
        p.format(&["u", "v"])
    }
}

/// Reads a polynomial involving only variable `var` as a univariate one.
fn to_upoly(p: &Poly, var: usize) -> UPoly {
    let r = p.ring();
    let mut coeffs = vec![r.zero(); p.degree_in(var).map_or(0, |d| d as usize + 1)];
    for (e, c) in p.terms() {
        debug_assert!(e.iter().enumerate().all(|(i, &k)| i == var || k == 0));
        coeffs[e[var] as usize] = c.clone();
    }
    UPoly::new(r, coeffs)
}
