//! Individual verification checks, grouped by pipeline.

use nodal_core::dp_ring::DPRing;
use nodal_core::linalg::Matrix;
use nodal_core::mf::{
    build_mf, epsilon_presentation_independence, hom_j_r_truncated, kappa_lambda_identities, periodic_exactness,
    quotient_iso_check,
};
use nodal_core::normal_form::{
    normal_form_iterates, normalize_quadratic_part, repair_small_lift, square_zero_change, QuadForm,
};
use nodal_core::poly::Poly;
use nodal_core::series::{Homog, Series2};
use nodal_core::stabilize::{
    build_charts, covering_certificate, det4_and_ideal_identity, fiber_at_origin, flatness_basis_certificate,
    reduce_r0, Params, RewriteOrder,
};
use nodal_core::{Error, Ring, RingDescriptor};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::{Command, Context};

pub struct Pass {
    pub summary: String,
    pub certificate: Value,
}

pub enum Problem {
    Fail { summary: String, counterexample: String },
    Skip(String),
}

impl From<Error> for Problem {
    fn from(e: Error) -> Problem {
        match e {
            Error::Unsupported(what) => Problem::Skip(format!("unsupported: {what}")),
            Error::IdentityFailure { check, detail } => Problem::Fail {
                summary: format!("{check} does not hold"),
                counterexample: detail,
            },
            other => Problem::Fail {
                summary: "check raised an error".into(),
                counterexample: other.to_string(),
            },
        }
    }
}

fn fail(summary: impl Into<String>, counterexample: impl Into<String>) -> Problem {
    Problem::Fail {
        summary: summary.into(),
        counterexample: counterexample.into(),
    }
}

pub type Outcome = Result<Pass, Problem>;

fn pass(summary: impl Into<String>, certificate: Value) -> Outcome {
    Ok(Pass {
        summary: summary.into(),
        certificate,
    })
}

pub struct Check {
    pub name: &'static str,
    pub command: Command,
    /// Configuration fields the check reads besides the ring and form.
    pub uses: &'static [&'static str],
    pub run: fn(&Context, &mut ChaCha8Rng) -> Outcome,
}

pub const CHECKS: &[Check] = &[
    Check {
        name: "normal_form.iteration",
        command: Command::NormalForm,
        uses: &["precision", "seed"],
        run: nf_iteration,
    },
    Check {
        name: "normal_form.right_inverse",
        command: Command::NormalForm,
        uses: &["seed"],
        run: nf_right_inverse,
    },
    Check {
        name: "normal_form.square_zero",
        command: Command::NormalForm,
        uses: &["precision", "seed"],
        run: nf_square_zero,
    },
    Check {
        name: "normal_form.repair",
        command: Command::NormalForm,
        uses: &["precision", "seed"],
        run: nf_repair,
    },
    Check {
        name: "division.power_identity",
        command: Command::Division,
        uses: &[],
        run: div_power_identity,
    },
    Check {
        name: "division.recursion_vs_division",
        command: Command::Division,
        uses: &["degree"],
        run: div_recursion,
    },
    Check {
        name: "division.round_trip",
        command: Command::Division,
        uses: &["degree", "seed"],
        run: div_round_trip,
    },
    Check {
        name: "division.nonzerodivisor",
        command: Command::Division,
        uses: &["degree"],
        run: div_nzd,
    },
    Check {
        name: "factorize.construction",
        command: Command::Factorize,
        uses: &[],
        run: mf_construction,
    },
    Check {
        name: "factorize.kappa_lambda",
        command: Command::Factorize,
        uses: &["degree"],
        run: mf_kappa_lambda,
    },
    Check {
        name: "dual.hom",
        command: Command::Dual,
        uses: &["degree"],
        run: dual_hom,
    },
    Check {
        name: "dual.quotient",
        command: Command::Dual,
        uses: &["degree"],
        run: dual_quotient,
    },
    Check {
        name: "dual.epsilon_action",
        command: Command::Dual,
        uses: &["seed"],
        run: dual_epsilon,
    },
    Check {
        name: "exactness.compositions",
        command: Command::Exactness,
        uses: &[],
        run: ex_compositions,
    },
    Check {
        name: "exactness.periodic",
        command: Command::Exactness,
        uses: &["degree", "cushion"],
        run: ex_periodic,
    },
    Check {
        name: "charts.elimination",
        command: Command::Charts,
        uses: &[],
        run: charts_elimination,
    },
    Check {
        name: "charts.confluence",
        command: Command::Charts,
        uses: &["seed"],
        run: charts_confluence,
    },
    Check {
        name: "charts.flatness",
        command: Command::Charts,
        uses: &["degree"],
        run: charts_flatness,
    },
    Check {
        name: "charts.covering",
        command: Command::Charts,
        uses: &[],
        run: charts_covering,
    },
    Check {
        name: "charts.det4",
        command: Command::Charts,
        uses: &[],
        run: charts_det4,
    },
    Check {
        name: "fiber.origin",
        command: Command::Fiber,
        uses: &[],
        run: fiber_origin,
    },
];

fn random_homog(r: &Ring, degree: usize, rng: &mut ChaCha8Rng) -> Homog {
    Homog::new(r, (0..=degree).map(|_| r.random(rng)).collect())
}

/// The configured series, or a seeded one with quadratic part `q`.
fn input_series(ctx: &Context, rng: &mut ChaCha8Rng) -> Series2 {
    let prec = ctx.config.precision + 1;
    match &ctx.series {
        Some(f) => f.clone(),
        None => &ctx.q.as_series(prec) + &Series2::random(&ctx.ring, prec, 3, rng),
    }
}

fn nf_iteration(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let n = ctx.config.precision;
    let mut f = input_series(ctx, rng);
    let mut q = ctx.q.clone();
    let mut normalized = false;
    if !f.order().at_least(2) {
        return Err(fail("series has a constant or linear term", f.to_literal()));
    }
    if *f.homogeneous_part(2)? != q.as_homog() {
        let norm = normalize_quadratic_part(&f)?;
        f = norm.series;
        q = norm.q;
        normalized = true;
    }
    let iterates = normal_form_iterates(&f, &q, n)?;
    let last = iterates.last().expect("at least one iterate");
    let residual = &q.eval_series(&last.xs, &last.ys) - &f;
    if !residual.order().at_least(n + 2) {
        return Err(fail(
            format!("residual order below {}", n + 2),
            format!("residual order {}", residual.order()),
        ));
    }
    for (k, w) in iterates.windows(2).enumerate() {
        let step = k + 1;
        for (name, d) in [("x", &w[1].xs - &w[0].xs), ("y", &w[1].ys - &w[0].ys)] {
            if !d.order().at_least(step + 1) {
                return Err(fail(
                    "Cauchy bound violated",
                    format!("order({name}_{} - {name}_{step}) = {}", step + 1, d.order()),
                ));
            }
        }
    }
    let r = &ctx.ring;
    pass(
        format!("order(q(x_N, y_N) - f) >= {} after N = {n} steps", n + 2),
        json!({
            "steps": n,
            "normalized_quadratic_part": normalized,
            "gamma": r.format(q.gamma()),
            "delta": r.format(q.delta()),
            "residual_order_at_least": residual.order().lower_bound(),
            "x_N": last.xs.to_literal(),
            "y_N": last.ys.to_literal(),
        }),
    )
}

fn nf_right_inverse(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let q = &ctx.q;
    for n in 0..=8 {
        let f = random_homog(&ctx.ring, n + 1, rng);
        let (mu, nu) = q.p_right_inverse(&f)?;
        if q.q_map(&mu, &nu)? != f {
            return Err(fail("Q(P(f)) = f", format!("f = {f}")));
        }
        let (mu, nu) = q.p_unscaled(&f)?;
        if q.q_map(&mu, &nu)? != f.scale(q.discriminant()) {
            return Err(fail("Q(P'(f)) = d f", format!("f = {f}")));
        }
    }
    pass(
        "Q_n P_n = id and Q_n P'_n = d id on S_(n+1) for n <= 8",
        json!({ "max_degree": 8 }),
    )
}

/// The form over the dual numbers of the configured ring.
fn dual_form(ctx: &Context) -> (Ring, QuadForm) {
    let d = Ring::dual_numbers(&ctx.ring);
    let q = QuadForm::new(&d, d.from_base(ctx.q.gamma()), d.from_base(ctx.q.delta()));
    (d, q)
}

fn nf_square_zero(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let (d, q) = dual_form(ctx);
    let tau = d.epsilon()?;
    let prec = ctx.config.precision;
    let f = Series2::random(&d, prec, 1, rng);
    let change = square_zero_change(&q, &tau, &f)?;
    let lhs = &q.eval_series(&change.xs, &change.ys) - &q.as_series(prec);
    if lhs.truncate(prec) != f.scale(&tau) {
        return Err(fail("q(X', Y') - q(X, Y) = eps f", f.to_literal()));
    }
    pass(
        format!("q(X + eps mu, Y + eps nu) = q + eps f through precision {prec}"),
        json!({ "ring": d.to_string(), "f": f.to_literal(), "x": change.xs.to_literal(), "y": change.ys.to_literal() }),
    )
}

fn nf_repair(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let (d, q) = match ctx.ring.descriptor() {
        RingDescriptor::DualNumbers(base)
            if matches!(**base, RingDescriptor::Rationals | RingDescriptor::PrimeField(_)) =>
        {
            (ctx.ring.clone(), ctx.q.clone())
        }
        _ if ctx.ring.is_field() => dual_form(ctx),
        _ => {
            return Err(Problem::Skip(format!(
                "eps does not kill the maximal ideal over {}[eps]",
                ctx.ring
            )))
        }
    };
    let tau = d.epsilon()?;
    let prec = ctx.config.precision;
    let u_s = &Series2::x(&d, prec) + &Series2::random(&d, prec, 1, rng).scale(&tau);
    let v_s = &Series2::y(&d, prec) + &Series2::random(&d, prec, 1, rng).scale(&tau);
    let (s, t) = (d.mul(&tau, &d.random(rng)), d.mul(&tau, &d.random(rng)));
    let target = q.as_series(prec);
    let defect = &q.eval_series(&u_s, &v_s) - &target;
    let fixed = repair_small_lift(&q, &tau, &u_s, &v_s, &s, &t, &defect)?;
    let rel =
        &(&q.eval_series(&fixed.u, &fixed.v) - &target) - &Series2::constant(&d, prec, q.eval(&fixed.s, &fixed.t));
    if !rel.truncate(prec).order().at_least(prec + 1) {
        return Err(fail("q(u', v') - q(s', t') = q(X, Y)", rel.to_literal()));
    }
    pass(
        "repaired lift satisfies q(u', v') - q(s', t') = q(X, Y) exactly",
        json!({ "defect": defect.to_literal(), "u": fixed.u.to_literal(), "v": fixed.v.to_literal() }),
    )
}

fn dp(ctx: &Context, bound: usize) -> DPRing {
    DPRing::new(ctx.q.clone(), ctx.s.clone(), ctx.t.clone(), bound)
}

fn div_power_identity(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let seq = dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND).power_sequences(30)?;
    pass(
        "X^n = f_n + X g_(n-1) + h_(n-2) (q - q(s,t)) for 2 <= n <= 30",
        json!({ "n_max": seq.len() - 1 }),
    )
}

fn div_recursion(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let bound = ctx.config.degree.max(2);
    let dp = dp(ctx, bound);
    let x = dp.u();
    for n in 0..=bound {
        let rec = dp.x_power_via_recursion(n)?;
        let div = dp.pow(&x, n as u32)?;
        if rec != div {
            return Err(fail(
                "recursion and division disagree",
                format!("n = {n}: {} vs {}", rec.format(dp.ring()), div.format(dp.ring())),
            ));
        }
    }
    pass(
        format!("recursion matches division for X^n, n <= {bound}"),
        json!({ "n_max": bound }),
    )
}

fn div_round_trip(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let degree = ctx.config.degree;
    let dp = dp(ctx, degree + 4);
    let r = dp.ring().clone();
    let count = 200;
    for _ in 0..count {
        let e = dp.random(degree, rng);
        let back = dp.reduce(&dp.expand(&e))?;
        if back != e {
            return Err(fail("reduce(expand(e)) = e", e.format(&r)));
        }
        let h = Poly::from_terms(
            &r,
            2,
            (0..3u32)
                .flat_map(|i| (0..3 - i).map(move |j| vec![i, j]))
                .map(|m| (m, r.random(rng))),
        );
        let shifted = &dp.expand(&e) + &(&h * &dp.relation());
        if dp.reduce(&shifted)? != e {
            return Err(fail("reduce(expand(e) + h x) = e", e.format(&r)));
        }
    }
    pass(
        format!("round trips on {count} random canonical forms of degree <= {degree}"),
        json!({ "elements": count, "degree": degree }),
    )
}

fn div_nzd(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let bound = ctx.config.degree;
    let kernel = dp(ctx, bound + 1).is_nzd_v_minus_t(bound)?;
    pass(
        format!("v - t is injective on canonical forms of degree <= {bound}"),
        json!({ "degree_bound": bound, "kernel_dim": kernel }),
    )
}

fn mat_json(m: &nodal_core::mf::Mat2) -> Value {
    let names = ["u", "v"];
    json!(m
        .0
        .iter()
        .map(|row| row.iter().map(|p| p.format(&names)).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn mf_construction(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let mf = build_mf(&dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND))?;
    pass(
        "phi psi = psi phi = x I, p psi = phi^T p, p phi = psi^T p",
        json!({ "phi": mat_json(&mf.phi), "psi": mat_json(&mf.psi), "p": mat_json(&mf.p) }),
    )
}

fn mf_kappa_lambda(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let mf = build_mf(&dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND))?;
    let report = kappa_lambda_identities(&mf, ctx.config.degree)?;
    if !(report.kappa_alpha && report.lambda_beta && report.det_kappa && report.det_lambda) {
        return Err(fail(
            "kappa/lambda identities",
            serde_json::to_string(&report).unwrap_or_default(),
        ));
    }
    pass(
        "kappa alpha and lambda beta match; det kappa = -(v - t), det lambda = v - t",
        json!({ "report": report, "kappa": mat_json(&mf.kappa), "lambda": mat_json(&mf.lambda) }),
    )
}

fn dual_hom(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let bound = ctx.config.degree;
    let cert = hom_j_r_truncated(
        &dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND.max(bound + 4)),
        bound,
    )?;
    if cert.hom_dim != cert.span_dim || !cert.contains_one || !cert.contains_epsilon {
        return Err(fail(
            "Hom(J, R) = R 1 + R eps",
            serde_json::to_string(&cert).unwrap_or_default(),
        ));
    }
    pass(
        format!(
            "Hom(J, R) through degree {bound} equals R 1 + R eps (dimension {})",
            cert.hom_dim
        ),
        json!(cert),
    )
}

fn dual_quotient(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let bound = ctx.config.degree;
    let cert = quotient_iso_check(
        &dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND.max(bound + 4)),
        bound,
    )?;
    pass(
        format!("A -> Hom(J, R)/R is injective and onto through degree {bound}"),
        json!(cert),
    )
}

fn dual_epsilon(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let dp = dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND);
    let trials = 20;
    for _ in 0..trials {
        let (a, b, c) = (dp.random(3, rng), dp.random(3, rng), dp.random(3, rng));
        epsilon_presentation_independence(&dp, &a, &b, &c)?;
    }
    pass(
        format!("eps action independent of presentation on {trials} random elements"),
        json!({ "trials": trials }),
    )
}

fn ex_compositions(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let mf = build_mf(&dp(ctx, nodal_core::dp_ring::DEFAULT_DEGREE_BOUND))?;
    let xi = mf.x_identity();
    if mf.phi.mul(&mf.psi) != xi || mf.psi.mul(&mf.phi) != xi {
        return Err(fail(
            "alpha beta = beta alpha = x id",
            mat_json(&mf.phi.mul(&mf.psi)).to_string(),
        ));
    }
    pass("alpha beta = beta alpha = x id in A[X, Y]", Value::Null)
}

fn ex_periodic(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let (bound, cushion) = (ctx.config.degree, ctx.config.cushion);
    let mf = build_mf(&dp(ctx, bound + cushion + 4))?;
    let cert = periodic_exactness(&mf, bound, cushion)?;
    pass(
        format!("ker = im at all four positions through degree {bound}, cushion {cushion}"),
        json!(cert),
    )
}

fn params(ctx: &Context) -> Params {
    Params::new(ctx.q.clone(), ctx.s.clone(), ctx.t.clone())
}

fn charts_elimination(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let (r0, r1) = build_charts(&params(ctx))?;
    pass(
        "elimination reproduces both chart relations",
        json!({
            "R0": r0.relation.format(&r0.var_names),
            "R1": r1.relation.format(&r1.var_names),
            "u_on_R0": r0.eliminated.format(&r0.var_names),
            "v_on_R1": r1.eliminated.format(&r1.var_names),
        }),
    )
}

fn charts_confluence(ctx: &Context, rng: &mut ChaCha8Rng) -> Outcome {
    let p = params(ctx);
    let r = &ctx.ring;
    let inputs = 100;
    let bound = 6u32;
    for _ in 0..inputs {
        let terms: Vec<(Vec<u32>, _)> = (0..=bound)
            .flat_map(|i| (0..=bound - i).map(move |j| vec![i, j]))
            .filter_map(|m| rng.gen_bool(0.4).then(|| (m, r.random(rng))))
            .collect();
        let elem = Poly::from_terms(r, 2, terms);
        let a = reduce_r0(&p, &elem, bound, RewriteOrder::GreatestFirst)?;
        let b = reduce_r0(&p, &elem, bound, RewriteOrder::SmallestFirst)?;
        let c = reduce_r0(&p, &elem, bound, RewriteOrder::Random(rng.gen()))?;
        if a != b || a != c {
            return Err(fail("rewriting orders disagree", elem.format(&["v", "y"])));
        }
    }
    pass(
        format!("R0 rewriting confluent on {inputs} random inputs"),
        json!({ "inputs": inputs, "degree": bound }),
    )
}

fn charts_flatness(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let bound = ctx.config.degree as u32;
    let cert = flatness_basis_certificate(&params(ctx), bound)?;
    pass(
        format!("standard monomials and relation multiples span freely through degree {bound}"),
        json!(cert),
    )
}

fn charts_covering(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let cert = covering_certificate(&params(ctx))?;
    pass(
        "w(0) = 1, u = numerator / w on R1, charts glue along x y = 1",
        json!({ "w": cert.w.format(&["x"]), "u_numerator": cert.u_numerator.format(&["x"]) }),
    )
}

fn matrix_json(r: &Ring, m: &Matrix) -> Value {
    json!((0..m.rows())
        .map(|i| (0..m.cols()).map(|j| r.format(m.get(i, j))).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn charts_det4(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let r = &ctx.ring;
    let q = &ctx.q;
    let cert = det4_and_ideal_identity(q)?;
    let expected = r.sub(&r.mul(&r.from_int(4), q.delta()), &r.mul(q.gamma(), q.gamma()));
    if cert.det != expected {
        return Err(fail("det = 4 delta - gamma^2", r.format(&cert.det)));
    }
    let summary = if cert.inverse.is_some() {
        "det = 4 delta - gamma^2 is a unit; change of generators certified"
    } else {
        "det = 4 delta - gamma^2; not a unit, no change of generators"
    };
    pass(
        summary,
        json!({
            "det": r.format(&cert.det),
            "matrix": matrix_json(r, &cert.matrix),
            "inverse": cert.inverse.as_ref().map(|m| matrix_json(r, m)),
        }),
    )
}

fn fiber_origin(ctx: &Context, _: &mut ChaCha8Rng) -> Outcome {
    let r = &ctx.ring;
    let f = fiber_at_origin(&ctx.q)?;
    let comps: Vec<String> = f
        .components
        .iter()
        .map(|c| format!("({})", c.format(&["v", "y"])))
        .collect();
    let points: Vec<String> = f
        .intersections
        .iter()
        .map(|(v, y)| format!("({}, {})", r.format(v), r.format(y)))
        .collect();
    pass(
        format!("components {}; transversal at {}", comps.join(", "), points.join(", ")),
        json!({
            "roots": [r.format(&f.roots.0), r.format(&f.roots.1)],
            "components": comps,
            "intersections": points,
            "jacobians": f.jacobians.iter().map(|j| r.format(j)).collect::<Vec<_>>(),
            "section_derivative": r.format(&f.section_derivative),
        }),
    )
}
