//! The matrix factorization of a pointed node and its consequences.
//!
//! Over `B = A[X,Y]` with `x = q(X,Y) - q(s,t)`:
//!
//! ```text
//! phi = [ delta Y + delta t + gamma X   X + s + gamma t       ]
//!       [ -(X - s)                      Y - t                 ]
//! psi = [ Y - t                         -(X + s + gamma t)    ]
//!       [ X - s                         delta Y + delta t + gamma X ]
//! ```
//!
//! satisfy `phi psi = psi phi = x`. Their classes `alpha`, `beta` act on
//! `E = R + R` and give a 2-periodic exact complex. The checks here verify
//! the identities exactly and the module-theoretic statements (the dual of
//! `J = (u - s, v - t)` is generated by `1` and `eps = (u + s + gamma t)/(v - t)`,
//! `A = J^dual / R`, exactness) by linear algebra in truncated coordinates.

use serde::Serialize;

use crate::dp_ring::{DPElem, DPRing};
use crate::error::{identity_failure, Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::ring::{Elem, Ring};

/// 2x2 matrix over `A[X, Y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[Poly; 2]; 2]);

impl Mat2 {
    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &other.0;
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn transpose(&self) -> Mat2 {
        let a = &self.0;
        Mat2([[a[0][0].clone(), a[1][0].clone()], [a[0][1].clone(), a[1][1].clone()]])
    }

    pub fn scalar(p: &Poly) -> Mat2 {
        let z = Poly::zero(p.ring(), p.nvars());
        Mat2([[p.clone(), z.clone()], [z, p.clone()]])
    }

    pub fn det(&self) -> Poly {
        let a = &self.0;
        &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
    }

    pub fn format(&self) -> String {
        let n = ["X", "Y"];
        let a = &self.0;
        format!(
            "[[{}, {}], [{}, {}]]",
            a[0][0].format(&n),
            a[0][1].format(&n),
            a[1][0].format(&n),
            a[1][1].format(&n)
        )
    }
}

#[derive(Clone, Debug)]
pub struct MatFact {
    dp: DPRing,
    pub phi: Mat2,
    pub psi: Mat2,
    pub p: Mat2,
    pub kappa: Mat2,
    pub lambda: Mat2,
}

/// Names and polynomial lifts of the recurring linear forms.
struct Forms {
    x_minus_s: Poly,
    y_minus_t: Poly,
    x_plus: Poly,
    delta_form: Poly,
}

fn forms(dp: &DPRing) -> Forms {
    let r = dp.ring();
    let q = dp.quad();
    let x = Poly::var(r, 2, 0);
    let y = Poly::var(r, 2, 1);
    let c = |e: &Elem| Poly::constant(r, 2, e.clone());
    let (s, t) = (dp.s(), dp.t());
    let gt = r.mul(q.gamma(), t);
    Forms {
        x_minus_s: &x - &c(s),
        y_minus_t: &y - &c(t),
        // X + s + gamma t
        x_plus: &x + &c(&r.add(s, &gt)),
        // delta Y + delta t + gamma X
        delta_form: &(&y.scale(q.delta()) + &c(&r.mul(q.delta(), t))) + &x.scale(q.gamma()),
    }
}

/// Builds `(phi, psi, p, kappa, lambda)` and verifies
/// `phi psi = psi phi = x I`, `p psi = phi^T p` and `p phi = psi^T p`.
pub fn build_mf(dp: &DPRing) -> Result<MatFact> {
    let q = dp.quad();
    if !q.is_nondegenerate() {
        return Err(Error::Degenerate(format!(
            "discriminant {} is not a unit",
            dp.ring().format(q.discriminant())
        )));
    }
    let r = dp.ring();
    let f = forms(dp);
    let zero = Poly::zero(r, 2);
    let one = Poly::one(r, 2);
    let phi = Mat2([
        [f.delta_form.clone(), f.x_plus.clone()],
        [-&f.x_minus_s, f.y_minus_t.clone()],
    ]);
    let psi = Mat2([
        [f.y_minus_t.clone(), -&f.x_plus],
        [f.x_minus_s.clone(), f.delta_form.clone()],
    ]);
    let p = Mat2([[zero.clone(), -&one], [one.clone(), zero.clone()]]);
    let kappa = Mat2([[zero.clone(), -&one], [-&f.y_minus_t, f.x_plus.clone()]]);
    let lambda = Mat2([[one, zero], [-&f.x_minus_s, f.y_minus_t.clone()]]);
    let mf = MatFact {
        dp: dp.clone(),
        phi,
        psi,
        p,
        kappa,
        lambda,
    };
    mf.verify_construction()?;
    Ok(mf)
}

impl MatFact {
    pub fn dp(&self) -> &DPRing {
        &self.dp
    }

    /// `x I`.
    pub fn x_identity(&self) -> Mat2 {
        Mat2::scalar(&self.dp.relation())
    }

    fn verify_construction(&self) -> Result<()> {
        let xi = self.x_identity();
        let checks = [
            ("phi psi = x I", self.phi.mul(&self.psi), xi.clone()),
            ("psi phi = x I", self.psi.mul(&self.phi), xi),
            (
                "p psi = phi^T p",
                self.p.mul(&self.psi),
                self.phi.transpose().mul(&self.p),
            ),
            (
                "p phi = psi^T p",
                self.p.mul(&self.phi),
                self.psi.transpose().mul(&self.p),
            ),
        ];
        for (name, lhs, rhs) in checks {
            if lhs != rhs {
                return Err(identity_failure(name, format!("{} != {}", lhs.format(), rhs.format())));
            }
        }
        Ok(())
    }

    /// Canonical forms of the entries of a matrix.
    pub fn reduce(&self, m: &Mat2) -> Result<[[DPElem; 2]; 2]> {
        let e = |i: usize, j: usize| self.dp.reduce(&m.0[i][j]);
        Ok([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KappaLambdaReport {
    pub kappa_alpha: bool,
    pub lambda_beta: bool,
    pub det_kappa: bool,
    pub det_lambda: bool,
    /// Kernel dimension of multiplication by `v - t`, when computable.
    pub nzd_kernel_dim: Option<usize>,
    pub nzd_bound: usize,
}

/// Verifies `kappa alpha` and `lambda beta` against their reduced forms,
/// the determinants of `kappa` and `lambda`, and that `v - t` is a
/// non-zero-divisor (through `nzd_bound`, over fields).
pub fn kappa_lambda_identities(mf: &MatFact, nzd_bound: usize) -> Result<KappaLambdaReport> {
    let dp = &mf.dp;
    let r = dp.ring();
    let f = forms(dp);
    let zero = Poly::zero(r, 2);
    let ka = mf.reduce(&mf.kappa.mul(&mf.phi))?;
    let ka_expected = mf.reduce(&Mat2([
        [f.x_minus_s.clone(), -&f.y_minus_t],
        [zero.clone(), zero.clone()],
    ]))?;
    if ka != ka_expected {
        return Err(identity_failure("kappa alpha", "differs from [[u-s, -(v-t)], [0, 0]]"));
    }
    let lb = mf.reduce(&mf.lambda.mul(&mf.psi))?;
    let lb_expected = mf.reduce(&Mat2([[f.y_minus_t.clone(), -&f.x_plus], [zero.clone(), zero]]))?;
    if lb != lb_expected {
        return Err(identity_failure(
            "lambda beta",
            "differs from [[v-t, -(u+s+gamma t)], [0, 0]]",
        ));
    }
    if mf.kappa.det() != -&f.y_minus_t {
        return Err(identity_failure("det kappa", "det kappa != -(v-t)"));
    }
    if mf.lambda.det() != f.y_minus_t {
        return Err(identity_failure("det lambda", "det lambda != v-t"));
    }
    let nzd_kernel_dim = if r.is_field() {
        Some(dp.is_nzd_v_minus_t(nzd_bound)?)
    } else {
        None
    };
    Ok(KappaLambdaReport {
        kappa_alpha: true,
        lambda_beta: true,
        det_kappa: true,
        det_lambda: true,
        nzd_kernel_dim,
        nzd_bound,
    })
}

/// Canonical forms of `u - s`, `v - t`, `eps (u - s)` and `eps (v - t)`.
pub struct JData {
    pub u_minus_s: DPElem,
    pub v_minus_t: DPElem,
    pub eps_u: DPElem,
    pub eps_v: DPElem,
}

pub fn j_data(dp: &DPRing) -> Result<JData> {
    let f = forms(dp);
    Ok(JData {
        u_minus_s: dp.reduce(&f.x_minus_s)?,
        v_minus_t: dp.reduce(&f.y_minus_t)?,
        eps_u: dp.reduce(&-&f.delta_form)?,
        eps_v: dp.reduce(&f.x_plus)?,
    })
}

/// `eps * (a (u - s) + b (v - t)) = a eps(u - s) + b eps(v - t)`.
pub fn epsilon_multiply(dp: &DPRing, a: &DPElem, b: &DPElem) -> Result<DPElem> {
    let j = j_data(dp)?;
    Ok(dp.add(&dp.mul(a, &j.eps_u)?, &dp.mul(b, &j.eps_v)?))
}

/// Checks that `epsilon_multiply` agrees on two presentations of the same
/// element of `J`, for both generating syzygies of `(u - s, v - t)` scaled
/// by `c`; also checks `(v - t) eps(u - s) = (u - s) eps(v - t)`.
pub fn epsilon_presentation_independence(dp: &DPRing, a: &DPElem, b: &DPElem, c: &DPElem) -> Result<()> {
    let j = j_data(dp)?;
    let lhs = dp.mul(&j.v_minus_t, &j.eps_u)?;
    let rhs = dp.mul(&j.u_minus_s, &j.eps_v)?;
    if lhs != rhs {
        return Err(identity_failure("(v-t) eps(u-s) = (u-s) eps(v-t)", ""));
    }
    // (v - t, -(u - s)) and (u + s + gamma t, delta v + delta t + gamma u)
    let syzygies = [
        (j.v_minus_t.clone(), dp.neg(&j.u_minus_s)),
        (j.eps_v.clone(), dp.neg(&j.eps_u)),
    ];
    let base = epsilon_multiply(dp, a, b)?;
    for (sa, sb) in &syzygies {
        let zero = dp.add(&dp.mul(sa, &j.u_minus_s)?, &dp.mul(sb, &j.v_minus_t)?);
        if !zero.is_zero() {
            return Err(identity_failure("syzygy", "generator pair is not a syzygy"));
        }
        let a2 = dp.add(a, &dp.mul(c, sa)?);
        let b2 = dp.add(b, &dp.mul(c, sb)?);
        if epsilon_multiply(dp, &a2, &b2)? != base {
            return Err(identity_failure(
                "epsilon presentation independence",
                format!(
                    "a = {}, b = {}, c = {}",
                    a.format(dp.ring()),
                    b.format(dp.ring()),
                    c.format(dp.ring())
                ),
            ));
        }
    }
    Ok(())
}

fn require_field(ring: &Ring) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("rank computations over {ring}")))
    }
}

/// Stacks the coordinates of a pair of canonical forms in a box.
fn pair_vector(dp: &DPRing, a: &DPElem, b: &DPElem, bound: usize) -> Result<Vec<Elem>> {
    let overflow = |e: &DPElem| Error::DegreeOverflow {
        degree: e.degree(),
        bound,
    };
    let mut v = dp.to_vector(a, bound).ok_or_else(|| overflow(a))?;
    v.extend(dp.to_vector(b, bound).ok_or_else(|| overflow(b))?);
    Ok(v)
}

/// Rows of a stacked pair box of size `bound` lying outside the box `inner`.
fn outside_rows(bound: usize, inner: usize) -> Vec<usize> {
    let block = bound + 1;
    (0..4)
        .flat_map(|b| (inner + 1..=bound).map(move |k| b * block + k))
        .collect()
}

/// `dim(Im M cap box_inner)` for a matrix with pair-box rows of size `bound`.
fn image_dim_in_box(m: &Matrix, bound: usize, inner: usize) -> usize {
    m.rank() - m.select_rows(&outside_rows(bound, inner)).rank()
}

fn embed(dp: &DPRing, v: &[Elem], bound: usize) -> Result<Vec<Elem>> {
    let n = v.len() / 4;
    let parts: Vec<DPElem> = (0..2).map(|i| dp.from_vector(&v[2 * n * i..2 * n * (i + 1)])).collect();
    pair_vector(dp, &parts[0], &parts[1], bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct HomCertificate {
    pub degree_bound: usize,
    /// `dim` of homomorphisms `J -> R` with outputs of degree `<= D`.
    pub hom_dim: usize,
    /// `dim((R 1 + R eps) cap box_D)`.
    pub span_dim: usize,
    pub contains_one: bool,
    pub contains_epsilon: bool,
}

/// Homomorphisms `J -> R` are pairs `(h1, h2) = (h(u - s), h(v - t))` with
/// `(v - t) h1 = (u - s) h2`. Computes them with outputs in degree `<= D`
/// and checks that they coincide with `(R 1 + R eps)` in that box.
pub fn hom_j_r_truncated(dp: &DPRing, bound: usize) -> Result<HomCertificate> {
    let r = dp.ring();
    require_field(r)?;
    let j = j_data(dp)?;
    let target = bound + 2;
    let syzygy_cols = |h1: &DPElem, h2: &DPElem| -> Result<Vec<Elem>> {
        let e = dp.sub(&dp.mul(&j.v_minus_t, h1)?, &dp.mul(&j.u_minus_s, h2)?);
        dp.to_vector(&e, target).ok_or(Error::DegreeOverflow {
            degree: e.degree(),
            bound: target,
        })
    };
    let basis = dp.basis(bound);
    let zero = dp.zero();
    let mut cols = Vec::new();
    for b in &basis {
        cols.push(syzygy_cols(b, &zero)?);
    }
    for b in &basis {
        cols.push(syzygy_cols(&zero, b)?);
    }
    let syz = Matrix::from_columns(r, 2 * target + 2, &cols);
    let kernel = syz.kernel();
    let hom_dim = kernel.len();

    // (r, r') -> (r (u-s) + r' eps(u-s), r (v-t) + r' eps(v-t)) in a larger box
    let outer = bound + 3;
    let mut span_cols = Vec::new();
    for (gu, gv) in [(&j.u_minus_s, &j.v_minus_t), (&j.eps_u, &j.eps_v)] {
        for b in dp.basis(bound + 1) {
            span_cols.push(pair_vector(dp, &dp.mul(&b, gu)?, &dp.mul(&b, gv)?, outer)?);
        }
    }
    let span = Matrix::from_columns(r, 4 * outer + 4, &span_cols);
    for (i, col) in span_cols.iter().enumerate() {
        let n = outer + 1;
        let h1 = dp.from_vector(&col[..2 * n]);
        let h2 = dp.from_vector(&col[2 * n..]);
        let e = dp.sub(&dp.mul(&j.v_minus_t, &h1)?, &dp.mul(&j.u_minus_s, &h2)?);
        if !e.is_zero() {
            return Err(identity_failure("span satisfies the syzygy", format!("column {i}")));
        }
    }
    let kernel_cols = kernel.iter().map(|v| embed(dp, v, outer)).collect::<Result<Vec<_>>>()?;
    let kernel_outer = Matrix::from_columns(r, 4 * outer + 4, &kernel_cols);
    if !span.column_space_contains(&kernel_outer) {
        return Err(identity_failure(
            "Hom(J, R) inside R 1 + R eps",
            format!("degree bound {bound}"),
        ));
    }
    let span_dim = image_dim_in_box(&span, outer, bound);
    if span_dim != hom_dim {
        return Err(identity_failure(
            "Hom(J, R) dimension",
            format!("solution space {hom_dim}, span {span_dim}"),
        ));
    }
    let contains = |a: &DPElem, b: &DPElem| -> Result<bool> {
        if bound < 1 {
            return Ok(false);
        }
        let v = pair_vector(dp, a, b, bound)?;
        Ok(syz.apply(&v).iter().all(|x| r.is_zero(x)))
    };
    Ok(HomCertificate {
        degree_bound: bound,
        hom_dim,
        span_dim,
        contains_one: contains(&j.u_minus_s, &j.v_minus_t)?,
        contains_epsilon: contains(&j.eps_u, &j.eps_v)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientCertificate {
    pub degree_bound: usize,
    pub injectivity_kernel_dim: usize,
    pub surjectivity_rank: usize,
}

/// Checks that `A -> J^dual / R`, `r -> [r eps]`, is injective (no nonzero
/// `r` in `A` with `r (u + s + gamma t) = (v - t)(f + u g)`) and that every
/// homomorphism of degree `<= D` is `r + a eps` with `r` in `R` and `a` in `A`.
pub fn quotient_iso_check(dp: &DPRing, bound: usize) -> Result<QuotientCertificate> {
    let r = dp.ring();
    require_field(r)?;
    let j = j_data(dp)?;
    let target = bound + 1;
    let mut cols = vec![dp.to_vector(&j.eps_v, target).expect("degree one")];
    for b in dp.basis(bound) {
        let e = dp.neg(&dp.mul(&j.v_minus_t, &b)?);
        cols.push(dp.to_vector(&e, target).expect("degree bound + 1"));
    }
    let m = Matrix::from_columns(r, 2 * target + 2, &cols);
    let kernel = m.kernel();
    if let Some(w) = kernel.first() {
        return Err(identity_failure(
            "A -> J^dual/R injective",
            format!("r = {} gives r eps in R", r.format(&w[0])),
        ));
    }

    let hom = hom_j_r_truncated(dp, bound)?;
    let outer = bound + 3;
    let mut span_cols = vec![pair_vector(dp, &j.eps_u, &j.eps_v, outer)?];
    for b in dp.basis(bound + 1) {
        span_cols.push(pair_vector(
            dp,
            &dp.mul(&b, &j.u_minus_s)?,
            &dp.mul(&b, &j.v_minus_t)?,
            outer,
        )?);
    }
    let span = Matrix::from_columns(r, 4 * outer + 4, &span_cols);
    let in_box = image_dim_in_box(&span, outer, bound);
    if in_box != hom.hom_dim {
        return Err(identity_failure(
            "J^dual/R spanned by eps",
            format!("homomorphisms {}, span of R + A eps {in_box}", hom.hom_dim),
        ));
    }
    Ok(QuotientCertificate {
        degree_bound: bound,
        injectivity_kernel_dim: 0,
        surjectivity_rank: in_box,
    })
}

/// Which matrix acts on `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EMap {
    Alpha,
    Beta,
    AlphaT,
    BetaT,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositionCertificate {
    /// Map whose kernel is computed.
    pub kernel_of: EMap,
    /// Map whose image must equal that kernel.
    pub image_of: EMap,
    pub kernel_dim: usize,
    pub image_dim_in_box: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessCertificate {
    pub degree_bound: usize,
    pub cushion: usize,
    pub positions: Vec<PositionCertificate>,
}

fn e_map_matrix(mf: &MatFact, which: EMap) -> Mat2 {
    match which {
        EMap::Alpha => mf.phi.clone(),
        EMap::Beta => mf.psi.clone(),
        EMap::AlphaT => mf.phi.transpose(),
        EMap::BetaT => mf.psi.transpose(),
    }
}

/// Matrix of an `E`-endomorphism from degree `<= from` into `<= to`.
fn e_linear(mf: &MatFact, which: EMap, from: usize, to: usize) -> Result<Matrix> {
    let dp = &mf.dp;
    let m = mf.reduce(&e_map_matrix(mf, which))?;
    let zero = dp.zero();
    let mut cols = Vec::new();
    for slot in 0..2 {
        for b in dp.basis(from) {
            let v = if slot == 0 { [&b, &zero] } else { [&zero, &b] };
            let c0 = dp.add(&dp.mul(&m[0][0], v[0])?, &dp.mul(&m[0][1], v[1])?);
            let c1 = dp.add(&dp.mul(&m[1][0], v[0])?, &dp.mul(&m[1][1], v[1])?);
            cols.push(pair_vector(dp, &c0, &c1, to)?);
        }
    }
    Ok(Matrix::from_columns(dp.ring(), 4 * to + 4, &cols))
}

/// Verifies `ker(a) = im(b)` on `E` in degree `<= D`, with preimages
/// searched in degree `<= D + cushion`.
fn exact_at(
    mf: &MatFact,
    kernel_of: EMap,
    image_of: EMap,
    bound: usize,
    cushion: usize,
) -> Result<PositionCertificate> {
    let dp = &mf.dp;
    let r = dp.ring();
    let a = e_linear(mf, kernel_of, bound, bound + 2)?;
    let kernel = a.kernel();
    let big = bound + cushion;
    let b = e_linear(mf, image_of, big, big + 2)?;
    let kernel_cols = kernel
        .iter()
        .map(|v| embed(dp, v, big + 2))
        .collect::<Result<Vec<_>>>()?;
    let km = Matrix::from_columns(r, 4 * big + 12, &kernel_cols);
    if !b.column_space_contains(&km) {
        let witness = kernel
            .iter()
            .zip(&kernel_cols)
            .find(|(_, col)| !b.column_space_contains(&Matrix::from_columns(r, 4 * big + 12, &[(*col).clone()])))
            .map(|(v, _)| {
                let n = v.len() / 2;
                format!(
                    "({}, {})",
                    dp.from_vector(&v[..n]).format(r),
                    dp.from_vector(&v[n..]).format(r)
                )
            })
            .unwrap_or_default();
        return Err(identity_failure(
            "periodic exactness",
            format!(
                "kernel element {witness} of {kernel_of:?} has no preimage under {image_of:?} \
                 in degree <= {big}; inconclusive, raise the cushion"
            ),
        ));
    }
    let image_dim = image_dim_in_box(&b, big + 2, bound);
    if image_dim != kernel.len() {
        return Err(identity_failure(
            "periodic exactness",
            format!(
                "kernel dimension {} but image dimension {image_dim} in the box",
                kernel.len()
            ),
        ));
    }
    Ok(PositionCertificate {
        kernel_of,
        image_of,
        kernel_dim: kernel.len(),
        image_dim_in_box: image_dim,
    })
}

/// Exactness of `... -> E -beta-> E -alpha-> E -> ...` and of the transposed
/// row, in degree `<= D`, after checking `alpha beta = beta alpha = x`.
pub fn periodic_exactness(mf: &MatFact, bound: usize, cushion: usize) -> Result<ExactnessCertificate> {
    require_field(mf.dp.ring())?;
    if cushion < 1 {
        return Err(Error::Precondition("cushion must be at least 1".into()));
    }
    let xi = mf.x_identity();
    if mf.phi.mul(&mf.psi) != xi || mf.psi.mul(&mf.phi) != xi {
        return Err(identity_failure("alpha beta = beta alpha = x", "before reduction"));
    }
    let positions = [
        (EMap::Alpha, EMap::Beta),
        (EMap::Beta, EMap::Alpha),
        (EMap::AlphaT, EMap::BetaT),
        (EMap::BetaT, EMap::AlphaT),
    ]
    .iter()
    .map(|&(k, i)| exact_at(mf, k, i, bound, cushion))
    .collect::<Result<Vec<_>>>()?;
    Ok(ExactnessCertificate {
        degree_bound: bound,
        cushion,
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::QuadForm;
    use crate::poly::PolyRing;
    use crate::upoly::UPoly;

    fn dp(r: &Ring, g: i64, d: i64, s: i64, t: i64) -> DPRing {
        let q = QuadForm::new(r, r.from_int(g), r.from_int(d));
        DPRing::with_default_bound(q, r.from_int(s), r.from_int(t))
    }

    #[test]
    fn factorization_examples() {
        let r = Ring::rationals();
        let pr = PolyRing::new(&r, 2);
        let (x, y) = (pr.var(0), pr.var(1));
        let mf = build_mf(&dp(&r, 0, -1, 0, 0)).unwrap();
        assert_eq!(mf.phi, Mat2([[-&y, x.clone()], [-&x, y.clone()]]));
        assert_eq!(mf.psi, Mat2([[y.clone(), -&x], [x.clone(), -&y]]));
        assert_eq!(mf.phi.mul(&mf.psi), Mat2::scalar(&(&x.pow(2) - &y.pow(2))));
        let minus_one = Mat2::scalar(&pr.int(-1));
        assert_eq!(mf.p.mul(&mf.p), minus_one);

        let f5 = Ring::prime_field(5).unwrap();
        let p5 = PolyRing::new(&f5, 2);
        let mf = build_mf(&dp(&f5, 1, 0, 0, 0)).unwrap();
        let x5 = &p5.var(0).pow(2) + &(&p5.var(0) * &p5.var(1));
        assert_eq!(mf.phi.mul(&mf.psi), Mat2::scalar(&x5));

        assert!(matches!(build_mf(&dp(&r, 2, 1, 0, 0)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn kappa_lambda() {
        let r = Ring::rationals();
        let mf = build_mf(&dp(&r, 3, 2, 1, 0)).unwrap();
        let rep = kappa_lambda_identities(&mf, 6).unwrap();
        assert_eq!(rep.nzd_kernel_dim, Some(0));

        let d = dp(&r, 0, -1, 0, 0);
        let mf = build_mf(&d).unwrap();
        let ka = mf.reduce(&mf.kappa.mul(&mf.phi)).unwrap();
        assert_eq!(ka[0][0], d.u());
        assert_eq!(ka[0][1], d.neg(&d.v()));
        assert!(ka[1][0].is_zero() && ka[1][1].is_zero());
    }

    #[test]
    fn epsilon_examples() {
        let r = Ring::rationals();
        let d = dp(&r, 3, 2, 1, 0);
        let (one, zero) = (d.one(), d.zero());
        // eps (v - t) = u + s + gamma t
        let e = epsilon_multiply(&d, &zero, &one).unwrap();
        assert_eq!(e, d.elem(UPoly::constant(&r, r.one()), UPoly::one(&r)));
        // eps (u - s) = -(2v + 3u)
        let e = epsilon_multiply(&d, &one, &zero).unwrap();
        assert_eq!(
            e,
            d.elem(
                UPoly::monomial(&r, 1, r.from_int(-2)),
                UPoly::constant(&r, r.from_int(-3))
            )
        );
        assert!(epsilon_multiply(&d, &zero, &zero).unwrap().is_zero());
        epsilon_presentation_independence(&d, &d.v(), &d.u(), &d.one()).unwrap();
    }

    #[test]
    fn duality_examples() {
        let f5 = Ring::prime_field(5).unwrap();
        let c = hom_j_r_truncated(&dp(&f5, 1, 0, 0, 0), 6).unwrap();
        assert_eq!(c.hom_dim, c.span_dim);
        assert!(c.contains_one && c.contains_epsilon);
        let q = Ring::rationals();
        let c = hom_j_r_truncated(&dp(&q, 3, 2, 1, 0), 5).unwrap();
        assert!(c.contains_one && c.contains_epsilon);
        let c = hom_j_r_truncated(&dp(&q, 3, 2, 1, 0), 1).unwrap();
        assert!(c.contains_one && c.contains_epsilon);
    }

    #[test]
    fn quotient_examples() {
        let q = Ring::rationals();
        quotient_iso_check(&dp(&q, 0, -1, 0, 0), 6).unwrap();
        let f7 = Ring::prime_field(7).unwrap();
        quotient_iso_check(&dp(&f7, 1, 0, 0, 0), 8).unwrap();
    }

    #[test]
    fn exactness_examples() {
        let f5 = Ring::prime_field(5).unwrap();
        let mf = build_mf(&dp(&f5, 1, 0, 0, 0)).unwrap();
        let c = periodic_exactness(&mf, 6, 2).unwrap();
        assert_eq!(c.positions.len(), 4);
        let f7 = Ring::prime_field(7).unwrap();
        let mf = build_mf(&dp(&f7, 3, 2, 1, 1)).unwrap();
        periodic_exactness(&mf, 5, 2).unwrap();
    }

    #[test]
    fn composition_vanishes_in_r() {
        let f7 = Ring::prime_field(7).unwrap();
        let mf = build_mf(&dp(&f7, 3, 2, 1, 1)).unwrap();
        let ba = mf.reduce(&mf.psi.mul(&mf.phi)).unwrap();
        assert!(ba.iter().flatten().all(DPElem::is_zero));
    }
}
