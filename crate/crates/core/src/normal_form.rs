//! Quadratic normal forms of power series with a node at the origin.
//!
//! For `q = X^2 + gamma*X*Y + delta*Y^2` the linear maps
//! `Q_n(mu, nu) = (2mu + gamma*nu) X + (gamma*mu + 2delta*nu) Y` send pairs of
//! degree-`n` forms to degree `n+1`. When the discriminant `d = gamma^2 - 4delta`
//! is a unit they have the right inverse [`QuadForm::p_right_inverse`], which
//! drives the successive approximation in [`normal_form_coordinates`] and the
//! first-order repairs in [`square_zero_change`] and [`repair_small_lift`].

use crate::error::{identity_failure, Error, Result};
use crate::linalg::Matrix;
use crate::ring::{Elem, Ring};
use crate::series::{Homog, Series2};

#[derive(Clone, Debug)]
pub struct QuadForm {
    ring: Ring,
    gamma: Elem,
    delta: Elem,
    disc: Elem,
}

impl QuadForm {
    pub fn new(ring: &Ring, gamma: Elem, delta: Elem) -> QuadForm {
        let disc = ring.sub(&ring.mul(&gamma, &gamma), &ring.mul(&ring.from_int(4), &delta));
        QuadForm {
            ring: ring.clone(),
            gamma,
            delta,
            disc,
        }
    }

    /// Like [`QuadForm::new`] but rejects a non-unit discriminant.
    pub fn nondegenerate(ring: &Ring, gamma: Elem, delta: Elem) -> Result<QuadForm> {
        let q = Self::new(ring, gamma, delta);
        if !ring.is_unit(&q.disc) {
            return Err(Error::Degenerate(format!(
                "discriminant {} is not a unit",
                ring.format(&q.disc)
            )));
        }
        Ok(q)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gamma(&self) -> &Elem {
        &self.gamma
    }

    pub fn delta(&self) -> &Elem {
        &self.delta
    }

    /// `gamma^2 - 4 delta`.
    pub fn discriminant(&self) -> &Elem {
        &self.disc
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.ring.is_unit(&self.disc)
    }

    /// `q(a, b)` for ring elements.
    pub fn eval(&self, a: &Elem, b: &Elem) -> Elem {
        let r = &self.ring;
        let t1 = r.mul(a, a);
        let t2 = r.mul(&self.gamma, &r.mul(a, b));
        let t3 = r.mul(&self.delta, &r.mul(b, b));
        r.add(&r.add(&t1, &t2), &t3)
    }

    /// `q(xs, ys)` for series; constant terms are allowed.
    pub fn eval_series(&self, xs: &Series2, ys: &Series2) -> Series2 {
        let xx = xs * xs;
        let xy = (xs * ys).scale(&self.gamma);
        let yy = (ys * ys).scale(&self.delta);
        &(&xx + &xy) + &yy
    }

    /// `q(X, Y)` at the given precision.
    pub fn as_series(&self, precision: usize) -> Series2 {
        let r = &self.ring;
        Series2::from_terms(
            r,
            precision,
            &[(2, 0, r.one()), (1, 1, self.gamma.clone()), (0, 2, self.delta.clone())],
        )
    }

    pub fn as_homog(&self) -> Homog {
        Homog::new(
            &self.ring,
            vec![self.delta.clone(), self.gamma.clone(), self.ring.one()],
        )
    }

    /// `Q_n(mu, nu)`.
    pub fn q_map(&self, mu: &Homog, nu: &Homog) -> Result<Homog> {
        if mu.degree() != nu.degree() {
            return Err(Error::DegreeMismatch(format!(
                "mu has degree {} but nu has degree {}",
                mu.degree(),
                nu.degree()
            )));
        }
        let r = &self.ring;
        let two = r.from_int(2);
        let a = &mu.scale(&two) + &nu.scale(&self.gamma);
        let b = &mu.scale(&self.gamma) + &nu.scale(&r.mul(&two, &self.delta));
        Ok(&a.mul_x() + &b.mul_y())
    }

    /// The pair `(-2delta*u + gamma*v, gamma*u - 2v)` for `f = X*u + Y*v`;
    /// `Q_n` maps it to `d * f`.
    pub fn p_unscaled(&self, f: &Homog) -> Result<(Homog, Homog)> {
        let (u, v) = f.split_xy()?;
        let r = &self.ring;
        let m2 = r.from_int(-2);
        let mu = &u.scale(&r.mul(&m2, &self.delta)) + &v.scale(&self.gamma);
        let nu = &u.scale(&self.gamma) + &v.scale(&m2);
        Ok((mu, nu))
    }

    /// Right inverse of `Q_n`: returns `(mu, nu)` of degree `n` with
    /// `Q_n(mu, nu) = f` for `f` of degree `n + 1`.
    pub fn p_right_inverse(&self, f: &Homog) -> Result<(Homog, Homog)> {
        let dinv = self
            .ring
            .try_invert(&self.disc)
            .map_err(|_| Error::Degenerate(format!("discriminant {} is not a unit", self.ring.format(&self.disc))))?;
        let (mu, nu) = self.p_unscaled(f)?;
        let (mu, nu) = (mu.scale(&dinv), nu.scale(&dinv));
        if self.q_map(&mu, &nu)? != *f {
            return Err(identity_failure("Q(P(f)) = f", format!("f = {f}")));
        }
        Ok((mu, nu))
    }
}

/// Images of `X` and `Y` under a coordinate change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordChange {
    pub xs: Series2,
    pub ys: Series2,
}

impl CoordChange {
    /// Checks that constant terms lie in the maximal ideal and that the
    /// linear part is invertible.
    pub fn new(xs: Series2, ys: Series2) -> Result<CoordChange> {
        let r = xs.ring().clone();
        for (name, s) in [("X", &xs), ("Y", &ys)] {
            if s.precision() < 1 {
                return Err(Error::InsufficientPrecision {
                    requested: 1,
                    precision: s.precision(),
                });
            }
            if r.is_unit(s.homogeneous_part(0)?.coeff(0)) {
                return Err(Error::InvalidSubstitution(format!(
                    "image of {name} has a unit constant term"
                )));
            }
        }
        let (x1, y1) = (xs.homogeneous_part(1)?, ys.homogeneous_part(1)?);
        // coefficient order in degree 1 is (Y, X)
        let det = r.sub(&r.mul(x1.coeff(1), y1.coeff(0)), &r.mul(x1.coeff(0), y1.coeff(1)));
        if !r.is_unit(&det) {
            return Err(Error::InvalidSubstitution("linear part is not invertible".into()));
        }
        Ok(CoordChange { xs, ys })
    }

    pub fn identity(ring: &Ring, precision: usize) -> CoordChange {
        CoordChange {
            xs: Series2::x(ring, precision),
            ys: Series2::y(ring, precision),
        }
    }

    pub fn precision(&self) -> usize {
        self.xs.precision().min(self.ys.precision())
    }

    /// `f(xs, ys)`.
    pub fn apply(&self, f: &Series2) -> Result<Series2> {
        f.substitute(&self.xs, &self.ys)
    }
}

/// Result of [`normalize_quadratic_part`].
#[derive(Clone, Debug)]
pub struct Normalized {
    pub change: CoordChange,
    pub scale: Elem,
    pub q: QuadForm,
    /// `scale * f(change)`, whose quadratic part is exactly `q`.
    pub series: Series2,
}

/// Linear change and scalar bringing the quadratic part of `f` to
/// `X^2 + gamma*X*Y + delta*Y^2`. Requires a field and `f_0 = f_1 = 0`.
pub fn normalize_quadratic_part(f: &Series2) -> Result<Normalized> {
    let r = f.ring().clone();
    if !r.is_field() {
        return Err(Error::Unsupported(format!("normalizing quadratic parts over {r}")));
    }
    if f.precision() < 2 {
        return Err(Error::InsufficientPrecision {
            requested: 2,
            precision: f.precision(),
        });
    }
    if !f.order().at_least(2) {
        return Err(Error::Precondition("series has a constant or linear term".into()));
    }
    let f2 = f.homogeneous_part(2)?;
    let (c, b, a) = (f2.coeff(0).clone(), f2.coeff(1).clone(), f2.coeff(2).clone());
    let disc = r.sub(&r.mul(&b, &b), &r.mul(&r.from_int(4), &r.mul(&a, &c)));
    if r.is_zero(&disc) {
        return Err(Error::Degenerate("quadratic part has zero discriminant".into()));
    }
    let p = f.precision();
    let (x, y) = (Series2::x(&r, p), Series2::y(&r, p));
    let (change, lead) = if !r.is_zero(&a) {
        (CoordChange::identity(&r, p), a)
    } else if !r.is_zero(&c) {
        (CoordChange { xs: y, ys: x }, c)
    } else {
        (
            CoordChange {
                xs: x.clone(),
                ys: &x + &y,
            },
            b,
        )
    };
    let scale = r.try_invert(&lead)?;
    let series = change.apply(f)?.scale(&scale);
    let g2 = series.homogeneous_part(2)?;
    debug_assert!(r.is_one(g2.coeff(2)));
    let q = QuadForm::nondegenerate(&r, g2.coeff(1).clone(), g2.coeff(0).clone())?;
    Ok(Normalized {
        change,
        scale,
        q,
        series,
    })
}

/// The approximations `(x_1, y_1), ..., (x_N, y_N)` with `x_1 = X`, `y_1 = Y`
/// and `order(q(x_n, y_n) - f) >= n + 2`.
pub fn normal_form_iterates(f: &Series2, q: &QuadForm, n_steps: usize) -> Result<Vec<CoordChange>> {
    let r = f.ring();
    if n_steps < 1 {
        return Err(Error::Precondition("the number of steps must be at least 1".into()));
    }
    if !q.is_nondegenerate() {
        return Err(Error::Degenerate("discriminant is not a unit".into()));
    }
    if f.precision() < n_steps + 1 {
        return Err(Error::InsufficientPrecision {
            requested: n_steps + 1,
            precision: f.precision(),
        });
    }
    if !f.order().at_least(2) || *f.homogeneous_part(2)? != q.as_homog() {
        return Err(Error::Precondition("quadratic part of f differs from q".into()));
    }
    let p = f.precision();
    let mut current = CoordChange::identity(r, p);
    let mut out = vec![current.clone()];
    for n in 1..n_steps {
        let residual = &q.eval_series(&current.xs, &current.ys) - f;
        let eps = residual.homogeneous_part(n + 2)?;
        let (mu, nu) = q.p_right_inverse(eps)?;
        current = CoordChange {
            xs: current.xs.add_homog(&-&mu),
            ys: current.ys.add_homog(&-&nu),
        };
        out.push(current.clone());
    }
    Ok(out)
}

/// `(x_N, y_N)` from [`normal_form_iterates`].
pub fn normal_form_coordinates(f: &Series2, q: &QuadForm, n_steps: usize) -> Result<CoordChange> {
    Ok(normal_form_iterates(f, q, n_steps)?
        .pop()
        .expect("at least one iterate"))
}

/// `X' = X + tau*mu`, `Y' = Y + tau*nu` with
/// `q(X', Y') = q(X, Y) + tau*f(X, Y)` through the precision of `f`.
pub fn square_zero_change(q: &QuadForm, tau: &Elem, f: &Series2) -> Result<CoordChange> {
    let r = q.ring();
    if !r.is_zero(&r.mul(tau, tau)) {
        return Err(Error::Precondition(format!(
            "{} does not square to zero",
            r.format(tau)
        )));
    }
    let p = f.precision();
    let (mu, nu) = first_order_pair(q, f)?;
    let x = &Series2::x(r, p) + &mu.scale(tau);
    let y = &Series2::y(r, p) + &nu.scale(tau);
    let change = CoordChange { xs: x, ys: y };
    let lhs = &q.eval_series(&change.xs, &change.ys) - &q.as_series(p);
    if lhs != f.scale(tau) {
        return Err(identity_failure("square-zero change", format!("f = {f}")));
    }
    Ok(change)
}

/// `(mu, nu)` with `Q(mu, nu) = f` assembled degree by degree, as exact
/// polynomials padded to the precision of `f`.
fn first_order_pair(q: &QuadForm, f: &Series2) -> Result<(Series2, Series2)> {
    let r = q.ring();
    if !r.is_zero(f.homogeneous_part(0)?.coeff(0)) {
        return Err(Error::Precondition("f has a constant term".into()));
    }
    let p = f.precision();
    let mut mus = Vec::with_capacity(p + 1);
    let mut nus = Vec::with_capacity(p + 1);
    for n in 1..=p {
        let (mu, nu) = q.p_right_inverse(f.homogeneous_part(n)?)?;
        mus.push(mu);
        nus.push(nu);
    }
    mus.push(Homog::zero(r, p));
    nus.push(Homog::zero(r, p));
    Ok((Series2::from_components(r, mus), Series2::from_components(r, nus)))
}

/// Corrected data from [`repair_small_lift`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairedLift {
    pub u: Series2,
    pub v: Series2,
    pub s: Elem,
    pub t: Elem,
}

/// Given `q(u_S, v_S) - q(s, t) = defect(u_S, v_S)` with `defect = tau*f`,
/// alters `u_S`, `v_S` by multiples of `tau` so that the relation holds
/// exactly, and moves `s`, `t` along.
///
/// Here `u_S`, `v_S` are series in `X`, `Y` without constant term, `tau`
/// squares to zero and kills the maximal ideal, and `s`, `t` lie in the
/// maximal ideal. The returned coordinates satisfy
/// `q(u', v') = q(u_S, v_S) - tau*f(u_S, v_S)` and `q(s', t') = q(s, t)`.
pub fn repair_small_lift(
    q: &QuadForm,
    tau: &Elem,
    u_s: &Series2,
    v_s: &Series2,
    s: &Elem,
    t: &Elem,
    defect: &Series2,
) -> Result<RepairedLift> {
    let r = q.ring();
    if !r.is_zero(&r.mul(tau, tau)) || !r.annihilates_maximal_ideal(tau) {
        return Err(Error::Precondition(format!(
            "{} does not generate a small extension",
            r.format(tau)
        )));
    }
    if r.is_unit(s) || r.is_unit(t) {
        return Err(Error::Precondition("s and t must lie in the maximal ideal".into()));
    }
    if defect.order() == crate::series::Order::ZeroAtPrecision(defect.precision()) {
        return Ok(RepairedLift {
            u: u_s.clone(),
            v: v_s.clone(),
            s: s.clone(),
            t: t.clone(),
        });
    }
    if !r.is_zero(defect.homogeneous_part(0)?.coeff(0)) {
        return Err(Error::Precondition("defect has a constant term".into()));
    }
    let p = defect.precision();
    let mut f = Series2::zero(r, p);
    for (n, h) in defect.components().iter().enumerate().skip(1) {
        for (i, c) in h.coeffs().iter().enumerate() {
            let x = r.solve_mul(tau, c).ok_or_else(|| {
                Error::Precondition(format!("defect coefficient {} is not divisible by tau", r.format(c)))
            })?;
            f = f.add_homog(&Homog::monomial(r, i, n - i, x));
        }
    }
    let (mu, nu) = first_order_pair(q, &f.scale(&r.from_int(-1)))?;
    let mu_s = mu.substitute(u_s, v_s)?;
    let nu_s = nu.substitute(u_s, v_s)?;
    let u = u_s + &mu_s.scale(tau);
    let v = v_s + &nu_s.scale(tau);
    let s2 = r.add(s, &r.mul(tau, mu.homogeneous_part(0)?.coeff(0)));
    let t2 = r.add(t, &r.mul(tau, nu.homogeneous_part(0)?.coeff(0)));
    if q.eval(&s2, &t2) != q.eval(s, t) {
        return Err(identity_failure("q(s', t') = q(s, t)", String::new()));
    }
    let f_at = f.substitute(u_s, v_s)?.scale(tau);
    let check = &(&q.eval_series(&u, &v) - &q.eval_series(u_s, v_s)) + &f_at;
    if !check.order().at_least(check.precision() + 1) {
        return Err(identity_failure("repaired relation", format!("remainder {check}")));
    }
    Ok(RepairedLift { u, v, s: s2, t: t2 })
}

/// `(a, b)` from `(eps*a, eps*b)` in the dual numbers.
pub fn tangent_pair(ring: &Ring, dx: &Elem, dy: &Elem) -> Result<(Elem, Elem)> {
    let base = ring
        .base()
        .filter(|_| matches!(ring.descriptor(), crate::ring::RingDescriptor::DualNumbers(_)))
        .ok_or_else(|| Error::Unsupported(format!("tangent pairs over {ring}")))?;
    let read = |x: &Elem| match x {
        Elem::Dual(a, b) if base.is_zero(a) => Ok((**b).clone()),
        _ => Err(Error::NonZeroResidue(ring.format(x))),
    };
    Ok((read(dx)?, read(dy)?))
}

/// Matrix of `Q_n` from `S_n x S_n` to `S_{n+1}` in monomial coordinates.
pub fn q_matrix(q: &QuadForm, n: usize) -> Result<Matrix> {
    let r = q.ring();
    let mut columns = Vec::with_capacity(2 * n + 2);
    for which in 0..2 {
        for i in 0..=n {
            let e = Homog::monomial(r, i, n - i, r.one());
            let z = Homog::zero(r, n);
            let img = if which == 0 { q.q_map(&e, &z)? } else { q.q_map(&z, &e)? };
            columns.push(img.coeffs().to_vec());
        }
    }
    Ok(Matrix::from_columns(r, n + 2, &columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn q() -> Ring {
        Ring::rationals()
    }

    fn lit(r: &Ring, s: &str, prec: usize) -> Series2 {
        Series2::from_literal(r, prec, s).unwrap()
    }

    fn h(r: &Ring, s: &str, n: usize) -> Homog {
        lit(r, s, n).homogeneous_part(n).unwrap().clone()
    }

    fn form(r: &Ring, g: i64, d: i64) -> QuadForm {
        QuadForm::new(r, r.from_int(g), r.from_int(d))
    }

    #[test]
    fn q_map_examples() {
        let r = q();
        let qf = form(&r, 1, 0);
        let one = h(&r, r#"[[0,0,"1"]]"#, 0);
        let zero = Homog::zero(&r, 0);
        assert_eq!(qf.q_map(&one, &zero).unwrap(), h(&r, r#"[[1,0,"2"],[0,1,"1"]]"#, 1));
        assert!(qf.q_map(&zero, &zero).unwrap().is_zero());
        let qf = form(&r, 0, -1);
        let mu = h(&r, r#"[[2,0,"2"]]"#, 2);
        assert_eq!(qf.q_map(&mu, &Homog::zero(&r, 2)).unwrap(), h(&r, r#"[[3,0,"4"]]"#, 3));
        assert!(qf.q_map(&mu, &zero).is_err());
    }

    #[test]
    fn p_right_inverse_examples() {
        let r = q();
        let (mu, nu) = form(&r, 0, -1).p_right_inverse(&h(&r, r#"[[3,0,"1"]]"#, 3)).unwrap();
        assert_eq!(mu, h(&r, r#"[[2,0,"1/2"]]"#, 2));
        assert!(nu.is_zero());
        let (mu, nu) = form(&r, 1, 0).p_right_inverse(&h(&r, r#"[[1,0,"1"]]"#, 1)).unwrap();
        assert!(mu.is_zero());
        assert_eq!(nu, h(&r, r#"[[0,0,"1"]]"#, 0));
        let (mu, nu) = form(&r, 1, 0).p_right_inverse(&Homog::zero(&r, 4)).unwrap();
        assert!(mu.is_zero() && nu.is_zero());
        assert!(matches!(
            form(&r, 2, 1).p_right_inverse(&h(&r, r#"[[1,0,"1"]]"#, 1)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let r = q();
        let n = normalize_quadratic_part(&lit(&r, r#"[[2,0,"2"],[1,1,"2"]]"#, 3)).unwrap();
        assert_eq!(n.change, CoordChange::identity(&r, 3));
        assert_eq!(n.scale, Elem::rational(1, 2));
        assert_eq!((n.q.gamma(), n.q.delta()), (&r.one(), &r.zero()));

        let n = normalize_quadratic_part(&lit(&r, r#"[[1,1,"1"]]"#, 3)).unwrap();
        assert_eq!(n.change.ys, lit(&r, r#"[[1,0,"1"],[0,1,"1"]]"#, 3));
        assert_eq!(n.scale, r.one());
        assert_eq!((n.q.gamma(), n.q.delta()), (&r.one(), &r.zero()));

        assert!(matches!(
            normalize_quadratic_part(&lit(&r, r#"[[0,2,"1"]]"#, 3)),
            Err(Error::Degenerate(_))
        ));
        assert!(normalize_quadratic_part(&lit(&r, r#"[[1,0,"1"],[0,2,"1"]]"#, 3)).is_err());
    }

    #[test]
    fn normal_form_worked_example() {
        let r = q();
        let f = lit(&r, r#"[[2,0,"1"],[0,2,"-1"],[3,0,"1"]]"#, 4);
        let qf = form(&r, 0, -1);
        let c = normal_form_coordinates(&f, &qf, 2).unwrap();
        assert_eq!(c.xs, lit(&r, r#"[[1,0,"1"],[2,0,"1/2"]]"#, 4));
        assert_eq!(c.ys, Series2::y(&r, 4));
        let residual = &qf.eval_series(&c.xs, &c.ys) - &f;
        assert_eq!(residual, lit(&r, r#"[[4,0,"1/4"]]"#, 4));
    }

    #[test]
    fn normal_form_of_q_is_identity() {
        let r = q();
        let qf = form(&r, 1, 0);
        let f = qf.as_series(7);
        for n in 1..=6 {
            assert_eq!(
                normal_form_coordinates(&f, &qf, n).unwrap(),
                CoordChange::identity(&r, 7)
            );
        }
    }

    #[test]
    fn normal_form_residual_order() {
        let r = q();
        let qf = form(&r, 1, 0);
        let f = lit(&r, r#"[[2,0,"1"],[1,1,"1"],[0,4,"1"]]"#, 6);
        let c = normal_form_coordinates(&f, &qf, 3).unwrap();
        assert!((&qf.eval_series(&c.xs, &c.ys) - &f).order().at_least(5));
    }

    #[test]
    fn square_zero_examples() {
        let r = Ring::dual_numbers(&q());
        let eps = r.epsilon().unwrap();
        let qf = form(&r, 0, -1);
        let c = square_zero_change(&qf, &eps, &lit(&r, r#"[[2,0,"1"]]"#, 5)).unwrap();
        assert_eq!(c.xs, lit(&r, r#"[[1,0,"1"],[1,0,"1/2*eps"]]"#, 5));
        assert_eq!(c.ys, Series2::y(&r, 5));

        let c = square_zero_change(&qf, &eps, &Series2::zero(&r, 5)).unwrap();
        assert_eq!(c, CoordChange::identity(&r, 5));

        let qf = form(&r, 1, 0);
        let c = square_zero_change(&qf, &eps, &lit(&r, r#"[[0,2,"1"]]"#, 5)).unwrap();
        assert_eq!(c.xs, lit(&r, r#"[[1,0,"1"],[0,1,"eps"]]"#, 5));
        assert_eq!(c.ys, lit(&r, r#"[[0,1,"1-2*eps"]]"#, 5));

        assert!(square_zero_change(&qf, &r.one(), &Series2::zero(&r, 3)).is_err());
    }

    #[test]
    fn repair_examples() {
        let r = Ring::dual_numbers(&q());
        let eps = r.epsilon().unwrap();
        let qf = form(&r, 0, -1);
        let (x, y) = (Series2::x(&r, 5), Series2::y(&r, 5));
        let z = r.zero();
        let fixed = repair_small_lift(&qf, &eps, &x, &y, &z, &z, &Series2::zero(&r, 5)).unwrap();
        assert_eq!((fixed.u, fixed.v), (x.clone(), y.clone()));

        let defect = lit(&r, r#"[[2,0,"eps"]]"#, 5);
        let fixed = repair_small_lift(&qf, &eps, &x, &y, &z, &z, &defect).unwrap();
        assert_eq!(fixed.u, lit(&r, r#"[[1,0,"1-1/2*eps"]]"#, 5));
        assert_eq!(fixed.v, y);

        let bad = lit(&r, r#"[[2,0,"1"]]"#, 5);
        assert!(repair_small_lift(&qf, &eps, &x, &y, &z, &z, &bad).is_err());
    }

    #[test]
    fn tangent_pairs() {
        let r = Ring::dual_numbers(&q());
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(
            tangent_pair(&r, &p("3*eps"), &p("0")).unwrap(),
            (q().from_int(3), q().zero())
        );
        assert_eq!(
            tangent_pair(&r, &p("2/3*eps"), &p("-eps")).unwrap(),
            (Elem::rational(2, 3), q().from_int(-1))
        );
        assert!(matches!(
            tangent_pair(&r, &p("1+eps"), &p("0")),
            Err(Error::NonZeroResidue(_))
        ));
        let plain: Ring = Ring::new(&"q".parse::<RingDescriptor>().unwrap()).unwrap();
        assert!(tangent_pair(&plain, &plain.zero(), &plain.zero()).is_err());
    }

    #[test]
    fn q_matrix_has_full_rank() {
        let r = Ring::prime_field(7).unwrap();
        for n in 0..6 {
            assert_eq!(q_matrix(&form(&r, 1, 3), n).unwrap().rank(), n + 2);
        }
    }
}
