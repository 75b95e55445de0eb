//! Local charts of the stabilization at a pointed node.
//!
//! With `f0 = (gamma u + delta v + delta t) - (u - s) y`,
//! `g0 = (u + s + gamma t) + (v - t) y` and `f1`, `g1` the same forms with
//! `(1, y)` replaced by `(x, 1)`, eliminating `u` from `f0` by `g0` and `v`
//! from `f1` by `g1` gives the two charts
//!
//! ```text
//! R0 = A[v,y] / (v(y^2 - gamma y + delta) + s(2y - gamma) + t(-y^2 + 2 gamma y - gamma^2 + delta))
//! R1 = A[u,x] / (u(delta x^2 - gamma x + 1) + s(delta x^2 - 1) + t delta (gamma x^2 - 2x))
//! ```
//!
//! The elimination in chart `R1` produces the negative of the displayed
//! relation; both generate the same ideal.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{identity_failure, Error, Result};
use crate::linalg::Matrix;
use crate::normal_form::QuadForm;
use crate::poly::Poly;
use crate::ring::{Elem, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chart {
    R0,
    R1,
}

#[derive(Clone, Debug)]
pub struct ChartPresentation {
    pub chart: Chart,
    /// `(v, y)` for `R0`, `(u, x)` for `R1`.
    pub var_names: [&'static str; 2],
    pub relation: Poly,
    /// The eliminated coordinate (`u` on `R0`, `v` on `R1`) in the chart variables.
    pub eliminated: Poly,
}

/// Parameters `gamma, delta, s, t` in a coefficient ring `A`.
#[derive(Clone, Debug)]
pub struct Params {
    pub q: QuadForm,
    pub s: Elem,
    pub t: Elem,
}

impl Params {
    pub fn new(q: QuadForm, s: Elem, t: Elem) -> Params {
        Params { q, s, t }
    }

    pub fn ring(&self) -> &Ring {
        self.q.ring()
    }
}

struct Blowup {
    f0: Poly,
    g0: Poly,
    f1: Poly,
    g1: Poly,
    /// `q(u, v) - q(s, t)` in `A[u, v, x, y]`.
    rel: Poly,
}

/// `f0, g0, f1, g1` as polynomials in `A[u, v, x, y]`.
fn blowup_forms(p: &Params) -> Blowup {
    let r = p.ring();
    let var = |i| Poly::var(r, 4, i);
    let c = |e: &Elem| Poly::constant(r, 4, e.clone());
    let (u, v, x, y) = (var(0), var(1), var(2), var(3));
    let (g, d) = (p.q.gamma(), p.q.delta());
    let a = &(&u.scale(g) + &v.scale(d)) + &c(&r.mul(d, &p.t));
    let b = &(&u + &c(&p.s)) + &c(&r.mul(g, &p.t));
    let u_s = &u - &c(&p.s);
    let v_t = &v - &c(&p.t);
    let quv = &(&u.pow(2) + &(&u * &v).scale(g)) + &v.pow(2).scale(d);
    let rel = &quv - &c(&p.q.eval(&p.s, &p.t));
    Blowup {
        f0: &a - &(&u_s * &y),
        g0: &b + &(&v_t * &y),
        f1: &(&a * &x) - &u_s,
        g1: &(&b * &x) + &v_t,
        rel,
    }
}

/// The `R0` relation as displayed, in `A[v, y]`.
pub fn expected_r0(p: &Params) -> Poly {
    let r = p.ring();
    let (g, d) = (p.q.gamma().clone(), p.q.delta().clone());
    let term = |i: u32, j: u32, c: Elem| (vec![i, j], c);
    let gg = r.mul(&g, &g);
    let (s, t) = (&p.s, &p.t);
    Poly::from_terms(
        r,
        2,
        [
            term(1, 2, r.one()),
            term(1, 1, r.neg(&g)),
            term(1, 0, d.clone()),
            term(0, 1, r.mul(&r.from_int(2), s)),
            term(0, 0, r.neg(&r.mul(s, &g))),
            term(0, 2, r.neg(t)),
            term(0, 1, r.mul(&r.mul(&r.from_int(2), &g), t)),
            term(0, 0, r.mul(t, &r.sub(&d, &gg))),
        ],
    )
}

/// The `R1` relation as displayed, in `A[u, x]`.
pub fn expected_r1(p: &Params) -> Poly {
    let r = p.ring();
    let (g, d) = (p.q.gamma().clone(), p.q.delta().clone());
    let term = |i: u32, j: u32, c: Elem| (vec![i, j], c);
    let (s, t) = (&p.s, &p.t);
    let td = r.mul(t, &d);
    Poly::from_terms(
        r,
        2,
        [
            term(1, 2, d.clone()),
            term(1, 1, r.neg(&g)),
            term(1, 0, r.one()),
            term(0, 2, r.mul(s, &d)),
            term(0, 0, r.neg(s)),
            term(0, 2, r.mul(&td, &g)),
            term(0, 1, r.mul(&td, &r.from_int(-2))),
        ],
    )
}

/// `delta x^2 - gamma x + 1` in one variable embedded as variable `var` of `nvars`.
fn w_poly(p: &Params, nvars: usize, var: usize) -> Poly {
    let r = p.ring();
    let x = Poly::var(r, nvars, var);
    &(&x.pow(2).scale(p.q.delta()) - &x.scale(p.q.gamma())) + &Poly::one(r, nvars)
}

/// Derives both charts by elimination and checks them against the displayed
/// relations, along with `(v - t) f0 + (u - s) g0 = q(u, v) - q(s, t)` and
/// `(v - t) f1 + (u - s) g1 = x (q(u, v) - q(s, t))`.
pub fn build_charts(p: &Params) -> Result<(ChartPresentation, ChartPresentation)> {
    if !p.q.is_nondegenerate() {
        return Err(Error::Degenerate("discriminant is not a unit".into()));
    }
    let r = p.ring();
    let b = blowup_forms(p);
    let c = |e: &Elem| Poly::constant(r, 4, e.clone());
    let (u, v, x) = (Poly::var(r, 4, 0), Poly::var(r, 4, 1), Poly::var(r, 4, 2));
    let v_t = &v - &c(&p.t);
    let u_s = &u - &c(&p.s);
    if &(&v_t * &b.f0) + &(&u_s * &b.g0) != b.rel {
        return Err(identity_failure("(v-t) f0 + (u-s) g0 = q(u,v) - q(s,t)", ""));
    }
    if &(&v_t * &b.f1) + &(&u_s * &b.g1) != &x * &b.rel {
        return Err(identity_failure("(v-t) f1 + (u-s) g1 = x (q(u,v) - q(s,t))", ""));
    }

    // g0 = 0 gives u = -s - gamma t - (v - t) y
    let y4 = Poly::var(r, 4, 3);
    let u_expr = &(&c(&r.neg(&p.s)) - &c(&r.mul(p.q.gamma(), &p.t))) - &(&v_t * &y4);
    debug_assert!(b.g0.substitute(0, &u_expr).is_zero());
    let r0_rel =
        b.f0.substitute(0, &u_expr)
            .rename_vars(&[None, Some(0), None, Some(1)], 2)?;
    let expected0 = expected_r0(p);
    if r0_rel != expected0 {
        return Err(identity_failure(
            "chart R0 relation",
            format!(
                "eliminated {} but expected {}",
                r0_rel.format(&["v", "y"]),
                expected0.format(&["v", "y"])
            ),
        ));
    }

    // g1 = 0 gives v = t - (u + s + gamma t) x
    let bx = &(&(&u + &c(&p.s)) + &c(&r.mul(p.q.gamma(), &p.t))) * &x;
    let v_expr = &c(&p.t) - &bx;
    debug_assert!(b.g1.substitute(1, &v_expr).is_zero());
    let r1_rel =
        b.f1.substitute(1, &v_expr)
            .rename_vars(&[Some(0), None, Some(1), None], 2)?;
    let expected1 = expected_r1(p);
    if r1_rel != -&expected1 {
        return Err(identity_failure(
            "chart R1 relation",
            format!(
                "eliminated {} but expected the negative of {}",
                r1_rel.format(&["u", "x"]),
                expected1.format(&["u", "x"])
            ),
        ));
    }
    Ok((
        ChartPresentation {
            chart: Chart::R0,
            var_names: ["v", "y"],
            relation: expected0,
            eliminated: u_expr.rename_vars(&[None, Some(0), None, Some(1)], 2)?,
        },
        ChartPresentation {
            chart: Chart::R1,
            var_names: ["u", "x"],
            relation: expected1,
            eliminated: v_expr.rename_vars(&[Some(0), None, Some(1), None], 2)?,
        },
    ))
}

/// Order in which reducible monomials are rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    GreatestFirst,
    SmallestFirst,
    Random(u64),
}

fn is_reducible(e: &[u32]) -> bool {
    e[0] >= 1 && e[1] >= 2
}

/// Normal form in `R0`: rewrites `v y^2` by the chart relation until no
/// monomial `v^n y^m` with `n >= 1`, `m >= 2` remains. Every rewrite lowers
/// the total degree, so the process terminates.
pub fn reduce_r0(p: &Params, elem: &Poly, bound: u32, order: RewriteOrder) -> Result<Poly> {
    assert_eq!(elem.nvars(), 2, "R0 elements are polynomials in v, y");
    if let Some(d) = elem.total_degree().filter(|&d| d > bound) {
        return Err(Error::DegreeOverflow {
            degree: d as usize,
            bound: bound as usize,
        });
    }
    let r = p.ring();
    let rel = expected_r0(p);
    let lead = Poly::monomial(r, vec![1, 2], r.one());
    let tail = &lead - &rel;
    let mut rng = match order {
        RewriteOrder::Random(seed) => Some(StdRng::seed_from_u64(seed)),
        _ => None,
    };
    let mut current = elem.clone();
    loop {
        let reducible: Vec<(Vec<u32>, Elem)> = current
            .terms()
            .filter(|(e, _)| is_reducible(e))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        if reducible.is_empty() {
            return Ok(current);
        }
        let idx = match (order, rng.as_mut()) {
            (RewriteOrder::GreatestFirst, _) => reducible.len() - 1,
            (RewriteOrder::SmallestFirst, _) => 0,
            (RewriteOrder::Random(_), Some(g)) => g.gen_range(0..reducible.len()),
            (RewriteOrder::Random(_), None) => unreachable!(),
        };
        let (e, c) = &reducible[idx];
        let mono = Poly::monomial(r, e.clone(), c.clone());
        let cofactor = Poly::monomial(r, vec![e[0] - 1, e[1] - 2], c.clone());
        current = &(&current - &mono) + &(&cofactor * &tail);
    }
}

/// Monomials `y^m`, `v^n`, `v^n y` of total degree at most `bound`.
pub fn standard_monomials(bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for m in 0..=bound {
        out.push(vec![0, m]);
    }
    for n in 1..=bound {
        out.push(vec![n, 0]);
        if n < bound {
            out.push(vec![n, 1]);
        }
    }
    out
}

fn all_monomials(bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=bound {
        for i in 0..=d {
            out.push(vec![i, d - i]);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatnessCertificate {
    pub degree_bound: u32,
    pub monomials: usize,
    pub standard_monomials: usize,
    pub relation_multiples: usize,
    /// Rank over the residue field of relation multiples and standard
    /// monomials together; equals `monomials * dim_k A` on success.
    pub rank: usize,
    pub residue_dim: usize,
}

/// Certifies that the standard monomials of degree `<= D` are independent
/// modulo the relation: multiples `relation * m` (`deg m <= D - 3`) together
/// with the standard monomials span all polynomials of degree `<= D` with
/// exactly the expected rank, computed over the residue field of `A`. Also
/// checks that `reduce_r0` only ever subtracts multiples of the relation.
pub fn flatness_basis_certificate(p: &Params, bound: u32) -> Result<FlatnessCertificate> {
    let r = p.ring();
    let k = r.residue_field();
    let rel = expected_r0(p);
    let monos = all_monomials(bound);
    let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let dim_a = r.residue_dim();
    let basis_a = r.residue_basis();
    let rows = monos.len() * dim_a;
    let coords = |poly: &Poly| -> Vec<Elem> {
        let mut v = vec![k.zero(); rows];
        for (e, c) in poly.terms() {
            let i = index[e];
            for (j, x) in r.coordinates(c).into_iter().enumerate() {
                v[i * dim_a + j] = x;
            }
        }
        v
    };
    let mut relation_cols = Vec::new();
    if bound >= 3 {
        for m in all_monomials(bound - 3) {
            for b in &basis_a {
                relation_cols.push(coords(&(&rel * &Poly::monomial(r, m.clone(), b.clone()))));
            }
        }
    }
    let std = standard_monomials(bound);
    let mut std_cols = Vec::new();
    for m in &std {
        for b in &basis_a {
            std_cols.push(coords(&Poly::monomial(r, m.clone(), b.clone())));
        }
    }
    let rel_matrix = Matrix::from_columns(&k, rows, &relation_cols);
    let all_cols: Vec<Vec<Elem>> = relation_cols.iter().chain(&std_cols).cloned().collect();
    let full = Matrix::from_columns(&k, rows, &all_cols);
    let rank = full.rank();
    if rank != rows || all_cols.len() != rows {
        return Err(identity_failure(
            "flatness basis",
            format!("rank {rank} of {} columns, expected {rows}", all_cols.len()),
        ));
    }
    for m in monos.iter().filter(|m| is_reducible(m)) {
        let mono = Poly::monomial(r, m.clone(), r.one());
        let red = reduce_r0(p, &mono, bound, RewriteOrder::GreatestFirst)?;
        let diff = coords(&(&mono - &red));
        if !rel_matrix.column_space_contains(&Matrix::from_columns(&k, rows, &[diff])) {
            return Err(identity_failure(
                "rewriting stays in the ideal",
                format!("monomial {m:?}"),
            ));
        }
    }
    Ok(FlatnessCertificate {
        degree_bound: bound,
        monomials: monos.len(),
        standard_monomials: std.len(),
        relation_multiples: relation_cols.len() / dim_a,
        rank,
        residue_dim: dim_a,
    })
}

#[derive(Clone, Debug)]
pub struct CoveringCertificate {
    /// `delta x^2 - gamma x + 1`.
    pub w: Poly,
    /// `-(s(delta x^2 - 1) + t delta (gamma x^2 - 2x))`; `u = numerator / w`.
    pub u_numerator: Poly,
}

/// Checks that `w = delta x^2 - gamma x + 1` has constant term 1, that the
/// `R1` relation is `u w` plus a polynomial in `x` (so `u` is determined
/// after inverting `w`), and the gluing `x f0 = f1`, `x g0 = g1` modulo `x y = 1`.
pub fn covering_certificate(p: &Params) -> Result<CoveringCertificate> {
    let r = p.ring();
    let w = w_poly(p, 1, 0);
    if !r.is_one(&w.constant_term()) {
        return Err(identity_failure("w(0) = 1", w.format(&["x"])));
    }
    let rel = expected_r1(p);
    let by_u = rel.coefficients_in(0);
    let w2 = w_poly(p, 2, 1);
    if by_u.len() != 2 || by_u[1] != w2 {
        return Err(identity_failure(
            "R1 relation is linear in u with coefficient w",
            rel.format(&["u", "x"]),
        ));
    }
    let numerator = (-&by_u[0]).rename_vars(&[None, Some(0)], 1)?;
    let b = blowup_forms(p);
    let x = Poly::var(r, 4, 2);
    for (name, lhs, rhs) in [("x f0 = f1", &x * &b.f0, &b.f1), ("x g0 = g1", &x * &b.g0, &b.g1)] {
        if lhs.cancel_inverse_pair(2, 3) != *rhs {
            return Err(identity_failure("gluing", name));
        }
    }
    Ok(CoveringCertificate {
        w,
        u_numerator: numerator,
    })
}

#[derive(Clone, Debug)]
pub struct FiberReport {
    /// Roots `a`, `b` of `y^2 - gamma y + delta`.
    pub roots: (Elem, Elem),
    /// Generators `v`, `y - a`, `y - b` in `k[v, y]`.
    pub components: Vec<Poly>,
    /// Intersection points `(v, y)`.
    pub intersections: Vec<(Elem, Elem)>,
    /// Jacobian determinants at the intersection points.
    pub jacobians: Vec<Elem>,
    /// `d/du` of the `R1` fiber relation at `x = 0`.
    pub section_derivative: Elem,
}

/// Decomposes the `R0` fiber `k[v, y]/(v(y^2 - gamma y + delta))` over `s = t = 0`
/// into `(v)`, `(y - a)`, `(y - b)`, certifies the two transversal
/// intersection points and smoothness along the section `x = 0` in `R1`.
pub fn fiber_at_origin(q: &QuadForm) -> Result<FiberReport> {
    let k = q.ring();
    if !k.is_field() {
        return Err(Error::Unsupported(format!("fibers over {k}")));
    }
    let (a, b) = split_roots(q)?;
    let p = Params::new(q.clone(), k.zero(), k.zero());
    let rel = expected_r0(&p);
    let v = Poly::var(k, 2, 0);
    let y = Poly::var(k, 2, 1);
    let c = |e: &Elem| Poly::constant(k, 2, e.clone());
    let comps = vec![v.clone(), &y - &c(&a), &y - &c(&b)];
    if &(&comps[0] * &comps[1]) * &comps[2] != rel {
        return Err(identity_failure("fiber factorization", rel.format(&["v", "y"])));
    }
    // a product of two generators has degree 2 < 3, so it is not a multiple
    // of the relation and no component contains another
    for i in 0..3 {
        for j in i + 1..3 {
            let prod = &comps[i] * &comps[j];
            if prod.is_zero() || prod.total_degree() >= rel.total_degree() {
                return Err(identity_failure("irredundant components", format!("pair ({i}, {j})")));
            }
        }
    }
    if k.is_zero(&k.sub(&a, &b)) {
        return Err(identity_failure("disjoint affine lines", "repeated root"));
    }
    let mut intersections = Vec::new();
    let mut jacobians = Vec::new();
    for root in [&a, &b] {
        let point = [k.zero(), root.clone()];
        let line = &y - &c(root);
        for g in [&v, &line] {
            if !k.is_zero(&g.evaluate(&point)) {
                return Err(identity_failure("intersection point", "generator does not vanish"));
            }
        }
        let jac = Matrix::from_rows(
            k,
            [&v, &line]
                .iter()
                .map(|g| (0..2).map(|i| g.derivative(i).evaluate(&point)).collect())
                .collect(),
        );
        let det = jac.det();
        if !k.is_unit(&det) {
            return Err(identity_failure(
                "transversality",
                format!("Jacobian determinant {}", k.format(&det)),
            ));
        }
        intersections.push((point[0].clone(), point[1].clone()));
        jacobians.push(det);
    }
    let r1 = expected_r1(&p);
    let origin = [k.zero(), k.zero()];
    if !k.is_zero(&r1.evaluate(&origin)) {
        return Err(identity_failure("section lies on R1", r1.format(&["u", "x"])));
    }
    let du = r1.derivative(0).evaluate(&origin);
    if !k.is_unit(&du) {
        return Err(identity_failure("section smoothness", k.format(&du)));
    }
    Ok(FiberReport {
        roots: (a, b),
        components: comps,
        intersections,
        jacobians,
        section_derivative: du,
    })
}

/// Distinct roots of `y^2 - gamma y + delta` in the field.
fn split_roots(q: &QuadForm) -> Result<(Elem, Elem)> {
    let k = q.ring();
    let d = q.discriminant();
    if k.is_zero(d) {
        return Err(Error::Unsupported("repeated root in the fiber".into()));
    }
    if k.characteristic() == 2 {
        let roots: Vec<Elem> = [k.zero(), k.one()]
            .into_iter()
            .filter(|y| k.is_zero(&k.add(&k.sub(&k.mul(y, y), &k.mul(q.gamma(), y)), q.delta())))
            .collect();
        return match roots.as_slice() {
            [a, b] => Ok((a.clone(), b.clone())),
            _ => Err(Error::Unsupported("fiber polynomial does not split".into())),
        };
    }
    let root = k
        .sqrt(d)?
        .ok_or_else(|| Error::Unsupported("fiber polynomial does not split over the field".into()))?;
    let half = k.try_invert(&k.from_int(2))?;
    let a = k.mul(&k.sub(q.gamma(), &root), &half);
    let b = k.mul(&k.add(q.gamma(), &root), &half);
    Ok(if a <= b { (a, b) } else { (b, a) })
}

#[derive(Clone, Debug)]
pub struct Det4Certificate {
    pub matrix: Matrix,
    pub det: Elem,
    /// `N` with `b_i = sum_j N[j][i] g_j`, when the determinant is a unit.
    pub inverse: Option<Matrix>,
}

/// Columns: coordinates of `u - s`, `v - t`, `u + s + gamma t`,
/// `gamma u + delta v + delta t` in the basis `(u, v, s, t)`.
pub fn det4_matrix(q: &QuadForm) -> Matrix {
    let r = q.ring();
    let (g, d) = (q.gamma().clone(), q.delta().clone());
    let i = |n: i64| r.from_int(n);
    Matrix::from_rows(
        r,
        vec![
            vec![i(1), i(0), i(1), g.clone()],
            vec![i(0), i(1), i(0), d.clone()],
            vec![i(-1), i(0), i(1), i(0)],
            vec![i(0), i(-1), g, d],
        ],
    )
}

/// Checks `det = 4 delta - gamma^2`; when it is a unit, inverts the matrix
/// and certifies `(u, v, s, t)` and the four generators span the same ideal
/// by expanding both change-of-basis identities in `A[u, v, s, t]`.
pub fn det4_and_ideal_identity(q: &QuadForm) -> Result<Det4Certificate> {
    let r = q.ring();
    let m = det4_matrix(q);
    let det = m.det();
    let expected = r.sub(&r.mul(&r.from_int(4), q.delta()), &r.mul(q.gamma(), q.gamma()));
    if det != expected {
        return Err(identity_failure(
            "det4",
            format!("{} != {}", r.format(&det), r.format(&expected)),
        ));
    }
    let inverse = match m.inverse() {
        None => None,
        Some(n) => {
            let vars: Vec<Poly> = (0..4).map(|i| Poly::var(r, 4, i)).collect();
            let gens: Vec<Poly> = (0..4)
                .map(|j| (0..4).fold(Poly::zero(r, 4), |acc, i| &acc + &vars[i].scale(m.get(i, j))))
                .collect();
            for (i, var) in vars.iter().enumerate() {
                let combo = (0..4).fold(Poly::zero(r, 4), |acc, j| &acc + &gens[j].scale(n.get(j, i)));
                if combo != *var {
                    return Err(identity_failure("ideal change of basis", format!("basis element {i}")));
                }
            }
            if m.mul(&n) != Matrix::identity(r, 4) {
                return Err(identity_failure("det4 inverse", ""));
            }
            Some(n)
        }
    };
    Ok(Det4Certificate {
        matrix: m,
        det,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: &Ring, g: i64, d: i64, s: &Elem, t: &Elem) -> Params {
        Params::new(QuadForm::new(r, r.from_int(g), r.from_int(d)), s.clone(), t.clone())
    }

    fn symbolic(order: u32) -> (Ring, Elem, Elem) {
        let r = Ring::local_truncation(&Ring::rationals(), &["s", "t"], order).unwrap();
        let s = r.named_element("s").unwrap();
        let t = r.named_element("t").unwrap();
        (r, s, t)
    }

    fn vy(r: &Ring, terms: &[(u32, u32, Elem)]) -> Poly {
        Poly::from_terms(r, 2, terms.iter().map(|(i, j, c)| (vec![*i, *j], c.clone())))
    }

    #[test]
    fn charts_with_symbolic_base() {
        let (r, s, t) = symbolic(4);
        let p = params(&r, 3, 2, &s, &t);
        let (r0, r1) = build_charts(&p).unwrap();
        let i = |n: i64| r.from_int(n);
        let sc = |n: i64, x: &Elem| r.mul(&i(n), x);
        let expected = vy(
            &r,
            &[
                (1, 2, i(1)),
                (1, 1, i(-3)),
                (1, 0, i(2)),
                (0, 1, r.add(&sc(2, &s), &sc(6, &t))),
                (0, 0, r.add(&sc(-3, &s), &sc(-7, &t))),
                (0, 2, r.neg(&t)),
            ],
        );
        assert_eq!(r0.relation, expected);
        assert_eq!(r1.chart, Chart::R1);
    }

    #[test]
    fn charts_numeric() {
        let r = Ring::rationals();
        let z = r.zero();
        let (r0, r1) = build_charts(&params(&r, 0, -1, &z, &z)).unwrap();
        assert_eq!(r0.relation, vy(&r, &[(1, 2, r.one()), (1, 0, r.from_int(-1))]));
        assert_eq!(r1.relation, vy(&r, &[(1, 2, r.from_int(-1)), (1, 0, r.one())]));
        let f7 = Ring::prime_field(7).unwrap();
        build_charts(&params(&f7, 5, 3, &f7.from_int(2), &f7.from_int(6))).unwrap();
    }

    #[test]
    fn reduce_examples() {
        let r = Ring::rationals();
        let z = r.zero();
        let p = params(&r, 3, 2, &z, &z);
        let vy2 = vy(&r, &[(1, 2, r.one())]);
        let red = reduce_r0(&p, &vy2, 8, RewriteOrder::GreatestFirst).unwrap();
        assert_eq!(red, vy(&r, &[(1, 1, r.from_int(3)), (1, 0, r.from_int(-2))]));
        let y3 = vy(&r, &[(0, 3, r.one())]);
        assert_eq!(reduce_r0(&p, &y3, 8, RewriteOrder::SmallestFirst).unwrap(), y3);

        let (r, s, t) = symbolic(3);
        let p = params(&r, 3, 2, &s, &t);
        let red = reduce_r0(&p, &vy(&r, &[(1, 2, r.one())]), 8, RewriteOrder::GreatestFirst).unwrap();
        let i = |n: i64| r.from_int(n);
        let sc = |n: i64, x: &Elem| r.mul(&i(n), x);
        let expected = vy(
            &r,
            &[
                (1, 1, i(3)),
                (1, 0, i(-2)),
                (0, 1, r.add(&sc(-2, &s), &sc(-6, &t))),
                (0, 0, r.add(&sc(3, &s), &sc(7, &t))),
                (0, 2, t.clone()),
            ],
        );
        assert_eq!(red, expected);
        assert!(reduce_r0(&p, &vy(&r, &[(0, 9, r.one())]), 8, RewriteOrder::GreatestFirst).is_err());
    }

    #[test]
    fn flatness_examples() {
        let r = Ring::rationals();
        let z = r.zero();
        let c = flatness_basis_certificate(&params(&r, 3, 2, &z, &z), 8).unwrap();
        assert_eq!(c.standard_monomials, 24);
        assert_eq!(c.relation_multiples, 21);
        let (r, s, t) = {
            let r = Ring::local_truncation(&Ring::prime_field(5).unwrap(), &["s", "t"], 3).unwrap();
            let s = r.named_element("s").unwrap();
            let t = r.named_element("t").unwrap();
            (r, s, t)
        };
        flatness_basis_certificate(&params(&r, 1, 0, &s, &t), 6).unwrap();
        let q = Ring::rationals();
        let c = flatness_basis_certificate(&params(&q, 3, 2, &q.zero(), &q.zero()), 1).unwrap();
        assert_eq!(c.standard_monomials, 3);
    }

    #[test]
    fn covering_examples() {
        let r = Ring::rationals();
        let c = covering_certificate(&params(&r, 3, 2, &r.one(), &r.zero())).unwrap();
        let x = Poly::var(&r, 1, 0);
        let expected_w = &(&x.pow(2).scale(&r.from_int(2)) - &x.scale(&r.from_int(3))) + &Poly::one(&r, 1);
        assert_eq!(c.w, expected_w);
        assert_eq!(c.u_numerator, &Poly::one(&r, 1) - &x.pow(2).scale(&r.from_int(2)));
    }

    #[test]
    fn fiber_examples() {
        let q = Ring::rationals();
        let rep = fiber_at_origin(&QuadForm::new(&q, q.from_int(3), q.from_int(2))).unwrap();
        assert_eq!(rep.roots, (q.one(), q.from_int(2)));
        assert_eq!(rep.components.len(), 3);
        assert_eq!(rep.intersections.len(), 2);
        let f5 = Ring::prime_field(5).unwrap();
        let rep = fiber_at_origin(&QuadForm::new(&f5, f5.one(), f5.zero())).unwrap();
        assert_eq!(rep.roots, (f5.zero(), f5.one()));
        let rep = fiber_at_origin(&QuadForm::new(&q, q.zero(), q.from_int(-1))).unwrap();
        assert_eq!(rep.roots, (q.from_int(-1), q.one()));
        // y^2 + 1 does not split over Q
        assert!(fiber_at_origin(&QuadForm::new(&q, q.zero(), q.one())).is_err());
    }

    #[test]
    fn det4_examples() {
        let q = Ring::rationals();
        let c = det4_and_ideal_identity(&QuadForm::new(&q, q.from_int(3), q.from_int(2))).unwrap();
        assert_eq!(c.det, q.from_int(-1));
        let c = det4_and_ideal_identity(&QuadForm::new(&q, q.zero(), q.from_int(-1))).unwrap();
        assert_eq!(c.det, q.from_int(-4));
        let c = det4_and_ideal_identity(&QuadForm::new(&q, q.one(), q.zero())).unwrap();
        assert!(c.inverse.is_some());

        let sym = Ring::local_truncation(&q, &["g", "d"], 4).unwrap();
        let g = sym.named_element("g").unwrap();
        let d = sym.named_element("d").unwrap();
        let c = det4_and_ideal_identity(&QuadForm::new(&sym, g, d)).unwrap();
        assert!(c.inverse.is_none());
    }
}
