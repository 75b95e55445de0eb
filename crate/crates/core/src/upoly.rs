//! Dense univariate polynomials.

use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Poly;
use crate::ring::{Elem, Ring};

/// `coeffs[k]` is the coefficient of `Y^k`; trailing zeros are trimmed.
#[derive(Clone, Debug)]
pub struct UPoly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl PartialEq for UPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for UPoly {}

impl UPoly {
    pub fn new(ring: &Ring, mut coeffs: Vec<Elem>) -> UPoly {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        UPoly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &Ring) -> UPoly {
        Self::new(ring, Vec::new())
    }

    pub fn constant(ring: &Ring, c: Elem) -> UPoly {
        Self::new(ring, vec![c])
    }

    pub fn one(ring: &Ring) -> UPoly {
        Self::constant(ring, ring.one())
    }

    pub fn monomial(ring: &Ring, k: usize, c: Elem) -> UPoly {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    /// The variable itself.
    pub fn var(ring: &Ring) -> UPoly {
        Self::monomial(ring, 1, ring.one())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn scale(&self, c: &Elem) -> UPoly {
        Self::new(&self.ring, self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect())
    }

    /// Multiplication by `Y^k`.
    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ring.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(&self.ring, coeffs)
    }

    pub fn evaluate(&self, y: &Elem) -> Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, y), c))
    }

    /// Embeds as a polynomial in variable `var` of an `nvars`-variate ring.
    pub fn to_poly(&self, nvars: usize, var: usize) -> Poly {
        Poly::from_terms(
            &self.ring,
            nvars,
            self.coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[var] = k as u32;
                (e, c.clone())
            }),
        )
    }

    /// Coefficient vector of length `bound + 1`; `None` if the degree exceeds `bound`.
    pub fn padded(&self, bound: usize) -> Option<Vec<Elem>> {
        if self.degree().is_some_and(|d| d > bound) {
            return None;
        }
        let mut v = self.coeffs.clone();
        v.resize(bound + 1, self.ring.zero());
        Some(v)
    }

    /// Least `k` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }
}

impl Add for &UPoly {
    type Output = UPoly;

    fn add(self, rhs: &UPoly) -> UPoly {
        let r = &self.ring;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new(r, (0..n).map(|k| r.add(&self.coeff(k), &rhs.coeff(k))).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        UPoly::new(&self.ring, self.coeffs.iter().map(|c| self.ring.neg(c)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;

    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;

    fn mul(self, rhs: &UPoly) -> UPoly {
        let r = &self.ring;
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(r);
        }
        let mut out = vec![r.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = r.add(&out[i + j], &r.mul(a, b));
            }
        }
        UPoly::new(r, out)
    }
}
