//! Exact coefficient rings.
//!
//! A [`Ring`] is a cheap, shareable handle; elements ([`Elem`]) carry no ring
//! pointer and are always manipulated through the handle that built them.
//! Every element has a canonical representation, so structural equality is
//! ring equality.

mod descriptor;
mod literal;
pub(crate) mod prime;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

pub use descriptor::RingDescriptor;

use crate::error::{Error, Result};

/// An element of some coefficient ring.
///
/// - `Rat`: a rational in lowest terms.
/// - `Fp`: a residue in `[0, p)`.
/// - `Dual(a, b)`: `a + b*eps` with `eps^2 = 0`.
/// - `Trunc`: a polynomial in the truncation variables, exponent vector to
///   nonzero base coefficient, with every total degree below the order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Rat(BigRational),
    Fp(u64),
    Dual(Box<Elem>, Box<Elem>),
    Trunc(BTreeMap<Vec<u32>, Elem>),
}

#[derive(Debug)]
enum Kind {
    Rationals,
    PrimeField(u64),
    Dual(Ring),
    Trunc {
        base: Ring,
        vars: Vec<String>,
        order: u32,
        monomials: Vec<Vec<u32>>,
    },
}

/// Handle to a validated coefficient ring.
#[derive(Clone)]
pub struct Ring {
    kind: Arc<Kind>,
    descriptor: Arc<RingDescriptor>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.kind, &other.kind) || self.descriptor == other.descriptor
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.descriptor)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor)
    }
}

/// All exponent vectors in `nvars` variables with total degree below `order`,
/// sorted by total degree and then reverse-lexicographically.
fn graded_monomials(nvars: usize, order: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            rec(prefix, nvars, remaining - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..order {
        let mut level = Vec::new();
        rec(&mut Vec::new(), nvars, d, &mut level);
        level.retain(|m| m.iter().sum::<u32>() == d);
        out.extend(level);
    }
    out
}

pub fn make_ring(descriptor: &RingDescriptor) -> Result<Ring> {
    Ring::new(descriptor)
}

impl Ring {
    pub fn new(descriptor: &RingDescriptor) -> Result<Ring> {
        descriptor.validate()?;
        Ok(Self::build(descriptor))
    }

    fn build(descriptor: &RingDescriptor) -> Ring {
        let kind = match descriptor {
            RingDescriptor::Rationals => Kind::Rationals,
            RingDescriptor::PrimeField(p) => Kind::PrimeField(*p),
            RingDescriptor::DualNumbers(base) => Kind::Dual(Self::build(base)),
            RingDescriptor::LocalTruncation { base, vars, order } => Kind::Trunc {
                base: Self::build(base),
                vars: vars.clone(),
                order: *order,
                monomials: graded_monomials(vars.len(), *order),
            },
        };
        Ring {
            kind: Arc::new(kind),
            descriptor: Arc::new(descriptor.clone()),
        }
    }

    pub fn rationals() -> Ring {
        Self::build(&RingDescriptor::Rationals)
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        Self::new(&RingDescriptor::PrimeField(p))
    }

    pub fn dual_numbers(base: &Ring) -> Ring {
        Self::build(&RingDescriptor::dual(base.descriptor().clone()))
    }

    pub fn local_truncation(base: &Ring, vars: &[&str], order: u32) -> Result<Ring> {
        Self::new(&RingDescriptor::truncation(base.descriptor().clone(), vars, order))
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    /// Ring one level down (`None` for the prime rings).
    pub fn base(&self) -> Option<&Ring> {
        match &*self.kind {
            Kind::Dual(b) | Kind::Trunc { base: b, .. } => Some(b),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(*self.kind, Kind::Rationals | Kind::PrimeField(_))
    }

    pub fn is_domain(&self) -> bool {
        self.is_field()
    }

    /// The prime `p` when the underlying prime ring is `F_p`, otherwise 0.
    pub fn characteristic(&self) -> u64 {
        match &*self.kind {
            Kind::Rationals => 0,
            Kind::PrimeField(p) => *p,
            Kind::Dual(b) | Kind::Trunc { base: b, .. } => b.characteristic(),
        }
    }

    pub fn residue_field(&self) -> Ring {
        match &*self.kind {
            Kind::Rationals | Kind::PrimeField(_) => self.clone(),
            Kind::Dual(b) | Kind::Trunc { base: b, .. } => b.residue_field(),
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.kind {
            Kind::Rationals => Elem::Rat(BigRational::zero()),
            Kind::PrimeField(_) => Elem::Fp(0),
            Kind::Dual(b) => Elem::Dual(Box::new(b.zero()), Box::new(b.zero())),
            Kind::Trunc { .. } => Elem::Trunc(BTreeMap::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.kind {
            Kind::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            Kind::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Elem::Fp(r.to_u64().expect("residue fits in u64"))
            }
            _ => self.from_base(&self.base().unwrap().from_bigint(n)),
        }
    }

    /// Image of `n/d`; fails when `d` is not invertible in the ring.
    pub fn from_rational(&self, r: &BigRational) -> Result<Elem> {
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        Ok(self.mul(&num, &self.try_invert(&den)?))
    }

    /// Embeds an element of the immediate base ring.
    pub fn from_base(&self, x: &Elem) -> Elem {
        match &*self.kind {
            Kind::Dual(b) => Elem::Dual(Box::new(x.clone()), Box::new(b.zero())),
            Kind::Trunc { base, vars, .. } => {
                let mut m = BTreeMap::new();
                if !base.is_zero(x) {
                    m.insert(vec![0; vars.len()], x.clone());
                }
                Elem::Trunc(m)
            }
            _ => x.clone(),
        }
    }

    /// Embeds an element of the residue field through every layer.
    pub fn from_residue(&self, x: &Elem) -> Elem {
        match self.base() {
            None => x.clone(),
            Some(b) => self.from_base(&b.from_residue(x)),
        }
    }

    /// The square-zero generator of the outermost dual-number layer.
    pub fn epsilon(&self) -> Result<Elem> {
        self.named_element("eps")
    }

    /// Looks up `eps` (or `e`) or a truncation variable by name, searching
    /// nested layers from the outside in.
    pub fn named_element(&self, name: &str) -> Result<Elem> {
        match &*self.kind {
            Kind::Dual(b) => {
                if descriptor::EPSILON_NAMES.contains(&name) {
                    Ok(Elem::Dual(Box::new(b.zero()), Box::new(b.one())))
                } else {
                    Ok(self.from_base(&b.named_element(name)?))
                }
            }
            Kind::Trunc { base, vars, order, .. } => {
                if let Some(i) = vars.iter().position(|v| v == name) {
                    let mut m = BTreeMap::new();
                    if *order > 1 {
                        let mut e = vec![0; vars.len()];
                        e[i] = 1;
                        m.insert(e, base.one());
                    }
                    Ok(Elem::Trunc(m))
                } else {
                    Ok(self.from_base(&base.named_element(name)?))
                }
            }
            _ => Err(Error::Parse {
                literal: name.to_string(),
                reason: format!("no generator named {name:?} in {self}"),
            }),
        }
    }

    /// Truncation variables of the outermost truncation layer.
    pub fn truncation_vars(&self) -> Option<(&[String], u32)> {
        match &*self.kind {
            Kind::Trunc { vars, order, .. } => Some((vars, *order)),
            _ => None,
        }
    }

    pub fn is_zero(&self, x: &Elem) -> bool {
        match x {
            Elem::Rat(r) => r.is_zero(),
            Elem::Fp(v) => *v == 0,
            Elem::Dual(a, b) => {
                let base = self.base().unwrap();
                base.is_zero(a) && base.is_zero(b)
            }
            Elem::Trunc(m) => m.is_empty(),
        }
    }

    pub fn is_one(&self, x: &Elem) -> bool {
        *x == self.one()
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        match (&*self.kind, x, y) {
            (Kind::Rationals, Elem::Rat(a), Elem::Rat(b)) => Elem::Rat(a + b),
            (Kind::PrimeField(p), Elem::Fp(a), Elem::Fp(b)) => {
                Elem::Fp(((*a as u128 + *b as u128) % *p as u128) as u64)
            }
            (Kind::Dual(base), Elem::Dual(a, b), Elem::Dual(c, d)) => {
                Elem::Dual(Box::new(base.add(a, c)), Box::new(base.add(b, d)))
            }
            (Kind::Trunc { base, .. }, Elem::Trunc(a), Elem::Trunc(b)) => {
                let mut out = a.clone();
                for (m, c) in b {
                    let sum = match out.get(m) {
                        Some(v) => base.add(v, c),
                        None => c.clone(),
                    };
                    if base.is_zero(&sum) {
                        out.remove(m);
                    } else {
                        out.insert(m.clone(), sum);
                    }
                }
                Elem::Trunc(out)
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn neg(&self, x: &Elem) -> Elem {
        match (&*self.kind, x) {
            (Kind::Rationals, Elem::Rat(a)) => Elem::Rat(-a),
            (Kind::PrimeField(p), Elem::Fp(a)) => Elem::Fp(if *a == 0 { 0 } else { p - a }),
            (Kind::Dual(base), Elem::Dual(a, b)) => Elem::Dual(Box::new(base.neg(a)), Box::new(base.neg(b))),
            (Kind::Trunc { base, .. }, Elem::Trunc(a)) => {
                Elem::Trunc(a.iter().map(|(m, c)| (m.clone(), base.neg(c))).collect())
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        match (&*self.kind, x, y) {
            (Kind::Rationals, Elem::Rat(a), Elem::Rat(b)) => Elem::Rat(a * b),
            (Kind::PrimeField(p), Elem::Fp(a), Elem::Fp(b)) => Elem::Fp(prime::mul_mod(*a, *b, *p)),
            (Kind::Dual(base), Elem::Dual(a, b), Elem::Dual(c, d)) => {
                let re = base.mul(a, c);
                let du = base.add(&base.mul(a, d), &base.mul(b, c));
                Elem::Dual(Box::new(re), Box::new(du))
            }
            (Kind::Trunc { base, order, .. }, Elem::Trunc(a), Elem::Trunc(b)) => {
                let mut out: BTreeMap<Vec<u32>, Elem> = BTreeMap::new();
                for (ma, ca) in a {
                    let da: u32 = ma.iter().sum();
                    for (mb, cb) in b {
                        let db: u32 = mb.iter().sum();
                        if da + db >= *order {
                            continue;
                        }
                        let m: Vec<u32> = ma.iter().zip(mb).map(|(i, j)| i + j).collect();
                        let prod = base.mul(ca, cb);
                        let entry = out.entry(m).or_insert_with(|| base.zero());
                        *entry = base.add(entry, &prod);
                    }
                }
                out.retain(|_, c| !base.is_zero(c));
                Elem::Trunc(out)
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn pow(&self, x: &Elem, mut n: u32) -> Elem {
        let mut acc = self.one();
        let mut b = x.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            n >>= 1;
        }
        acc
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Elem>) -> Elem {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Image in the residue field under the map killing the maximal ideal.
    pub fn residue(&self, x: &Elem) -> Elem {
        match (&*self.kind, x) {
            (Kind::Rationals | Kind::PrimeField(_), _) => x.clone(),
            (Kind::Dual(base), Elem::Dual(a, _)) => base.residue(a),
            (Kind::Trunc { base, vars, .. }, Elem::Trunc(m)) => match m.get(&vec![0; vars.len()]) {
                Some(c) => base.residue(c),
                None => base.residue_field().zero(),
            },
            _ => panic!("element does not belong to {self}"),
        }
    }

    pub fn is_unit(&self, x: &Elem) -> bool {
        let k = self.residue_field();
        !k.is_zero(&self.residue(x))
    }

    pub fn try_invert(&self, x: &Elem) -> Result<Elem> {
        if !self.is_unit(x) {
            return Err(Error::NotAUnit(self.format(x)));
        }
        Ok(match (&*self.kind, x) {
            (Kind::Rationals, Elem::Rat(a)) => Elem::Rat(a.recip()),
            (Kind::PrimeField(p), Elem::Fp(a)) => Elem::Fp(prime::pow_mod(*a, p - 2, *p)),
            (Kind::Dual(base), Elem::Dual(a, b)) => {
                let ai = base.try_invert(a)?;
                let du = base.neg(&base.mul(b, &base.mul(&ai, &ai)));
                Elem::Dual(Box::new(ai), Box::new(du))
            }
            (Kind::Trunc { base, vars, order, .. }, Elem::Trunc(m)) => {
                let c = m.get(&vec![0; vars.len()]).cloned().unwrap_or_else(|| base.zero());
                let ci = self.from_base(&base.try_invert(&c)?);
                // x = c (1 + n) with n nilpotent of index <= order
                let n = self.sub(&self.mul(&ci, x), &self.one());
                let minus_n = self.neg(&n);
                let mut term = self.one();
                let mut geo = self.one();
                for _ in 1..*order {
                    term = self.mul(&term, &minus_n);
                    geo = self.add(&geo, &term);
                }
                self.mul(&ci, &geo)
            }
            _ => panic!("element does not belong to {self}"),
        })
    }

    /// `x / y` for a unit `y`.
    pub fn div(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        Ok(self.mul(x, &self.try_invert(y)?))
    }

    /// Dimension of the ring as a vector space over its residue field.
    pub fn residue_dim(&self) -> usize {
        match &*self.kind {
            Kind::Rationals | Kind::PrimeField(_) => 1,
            Kind::Dual(b) => 2 * b.residue_dim(),
            Kind::Trunc { base, monomials, .. } => monomials.len() * base.residue_dim(),
        }
    }

    /// Coordinates over the residue field in the basis [`Ring::residue_basis`].
    pub fn coordinates(&self, x: &Elem) -> Vec<Elem> {
        match (&*self.kind, x) {
            (Kind::Rationals | Kind::PrimeField(_), _) => vec![x.clone()],
            (Kind::Dual(base), Elem::Dual(a, b)) => {
                let mut out = base.coordinates(a);
                out.extend(base.coordinates(b));
                out
            }
            (Kind::Trunc { base, monomials, .. }, Elem::Trunc(m)) => {
                let zero = base.zero();
                monomials
                    .iter()
                    .flat_map(|mono| base.coordinates(m.get(mono).unwrap_or(&zero)))
                    .collect()
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// Basis of the ring over its residue field; the first element is `1`
    /// and all others lie in the maximal ideal.
    pub fn residue_basis(&self) -> Vec<Elem> {
        match &*self.kind {
            Kind::Rationals | Kind::PrimeField(_) => vec![self.one()],
            Kind::Dual(base) => {
                let eps = Elem::Dual(Box::new(base.zero()), Box::new(base.one()));
                let lower: Vec<Elem> = base.residue_basis().iter().map(|b| self.from_base(b)).collect();
                let mut out = lower.clone();
                out.extend(lower.iter().map(|b| self.mul(b, &eps)));
                out
            }
            Kind::Trunc { base, monomials, .. } => {
                let mut out = Vec::new();
                for mono in monomials {
                    for b in base.residue_basis() {
                        let mut m = BTreeMap::new();
                        m.insert(mono.clone(), b);
                        out.push(Elem::Trunc(m));
                    }
                }
                out
            }
        }
    }

    pub fn from_coordinates(&self, coords: &[Elem]) -> Elem {
        let basis = self.residue_basis();
        assert_eq!(basis.len(), coords.len());
        let mut acc = self.zero();
        for (b, c) in basis.iter().zip(coords) {
            acc = self.add(&acc, &self.mul(b, &self.from_residue(c)));
        }
        acc
    }

    /// Solves `a * y = x`, returning some solution when one exists.
    pub fn solve_mul(&self, a: &Elem, x: &Elem) -> Option<Elem> {
        let k = self.residue_field();
        let basis = self.residue_basis();
        let columns: Vec<Vec<Elem>> = basis.iter().map(|b| self.coordinates(&self.mul(a, b))).collect();
        let mat = crate::linalg::Matrix::from_columns(&k, self.residue_dim(), &columns);
        let sol = mat.solve(&self.coordinates(x))?;
        Some(self.from_coordinates(&sol))
    }

    /// Least total degree of a nonzero term in the outermost truncation
    /// layer; `None` for zero or for rings without a truncation layer.
    pub fn truncation_order(&self, x: &Elem) -> Option<u32> {
        match x {
            Elem::Trunc(m) => m.keys().map(|e| e.iter().sum::<u32>()).min(),
            _ => None,
        }
    }

    /// Whether `tau * m = 0` for the whole maximal ideal.
    pub fn annihilates_maximal_ideal(&self, tau: &Elem) -> bool {
        self.residue_basis()
            .iter()
            .skip(1)
            .all(|b| self.is_zero(&self.mul(tau, b)))
    }

    /// Uniformly random element with small coefficients.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match &*self.kind {
            Kind::Rationals => {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=4);
                Elem::Rat(BigRational::new(n.into(), d.into()))
            }
            Kind::PrimeField(p) => Elem::Fp(rng.gen_range(0..*p)),
            Kind::Dual(b) => Elem::Dual(Box::new(b.random(rng)), Box::new(b.random(rng))),
            Kind::Trunc { base, monomials, .. } => {
                let mut m = BTreeMap::new();
                for mono in monomials {
                    let c = base.random(rng);
                    if !base.is_zero(&c) {
                        m.insert(mono.clone(), c);
                    }
                }
                Elem::Trunc(m)
            }
        }
    }

    pub fn random_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        loop {
            let x = self.random(rng);
            if self.is_unit(&x) {
                return x;
            }
        }
    }

    /// Square root in a field, when one exists in the field itself.
    pub fn sqrt(&self, x: &Elem) -> Result<Option<Elem>> {
        match (&*self.kind, x) {
            (Kind::Rationals, Elem::Rat(r)) => {
                if r.is_negative() {
                    return Ok(None);
                }
                let (n, d) = (r.numer(), r.denom());
                let (sn, sd) = (n.sqrt(), d.sqrt());
                if &(&sn * &sn) == n && &(&sd * &sd) == d {
                    Ok(Some(Elem::Rat(BigRational::new(sn, sd))))
                } else {
                    Ok(None)
                }
            }
            (Kind::PrimeField(p), Elem::Fp(a)) => Ok(prime::sqrt_mod(*a, *p).map(Elem::Fp)),
            _ => Err(Error::Unsupported(format!("square roots in {self}"))),
        }
    }

    /// Rational value of an element of `Q`.
    pub fn as_rational(&self, x: &Elem) -> Option<BigRational> {
        match x {
            Elem::Rat(r) => Some(r.clone()),
            _ => None,
        }
    }

    pub fn parse(&self, literal: &str) -> Result<Elem> {
        literal::parse(self, literal)
    }

    /// Exact rendering: fractions `a/b`, residues `r mod p`, dual numbers
    /// `a+b*eps`, truncated elements as polynomials in their variables.
    pub fn format(&self, x: &Elem) -> String {
        literal::format(self, x)
    }
}

impl Elem {
    pub fn rational(n: i64, d: i64) -> Elem {
        Elem::Rat(BigRational::new(n.into(), d.into()))
    }
}
