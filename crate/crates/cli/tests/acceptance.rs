//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command as Proc;

use nodal_core::dp_ring::DPRing;
use nodal_core::mf::{
    build_mf, epsilon_presentation_independence, hom_j_r_truncated, j_data, kappa_lambda_identities,
    periodic_exactness, quotient_iso_check, Mat2,
};
use nodal_core::normal_form::{normal_form_iterates, repair_small_lift, square_zero_change, QuadForm};
use nodal_core::poly::Poly;
use nodal_core::series::{Homog, Series2};
use nodal_core::stabilize::{
    build_charts, covering_certificate, det4_and_ideal_identity, fiber_at_origin, flatness_basis_certificate,
    reduce_r0, Params, RewriteOrder,
};
use nodal_core::{Elem, Ring, RingDescriptor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring(desc: &str) -> Ring {
    Ring::new(&desc.parse::<RingDescriptor>().unwrap()).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_form(r: &Ring, g: &mut ChaCha8Rng) -> QuadForm {
    loop {
        let q = QuadForm::new(r, r.random(g), r.random(g));
        if q.is_nondegenerate() {
            return q;
        }
    }
}

fn random_dp(r: &Ring, g: &mut ChaCha8Rng, bound: usize) -> DPRing {
    let q = random_form(r, g);
    DPRing::new(q, r.random(g), r.random(g), bound)
}

/// `q(X, Y) - q(s, t)` in `A[X, Y]`, rebuilt from scratch.
fn relation(q: &QuadForm, s: &Elem, t: &Elem) -> Poly {
    let r = q.ring();
    let x = Poly::var(r, 2, 0);
    let y = Poly::var(r, 2, 1);
    let qst = r.add(
        &r.add(&r.mul(s, s), &r.mul(q.gamma(), &r.mul(s, t))),
        &r.mul(q.delta(), &r.mul(t, t)),
    );
    &(&(&x.pow(2) + &(&x * &y).scale(q.gamma())) + &y.pow(2).scale(q.delta())) - &Poly::constant(r, 2, qst)
}

/// Points of `q(X, Y) = q(s, t)` over a prime field.
fn curve_points(dp: &DPRing, limit: usize) -> Vec<[Elem; 2]> {
    let r = dp.ring();
    let p = r.characteristic() as i64;
    let rel = relation(dp.quad(), dp.s(), dp.t());
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            let pt = [r.from_int(a), r.from_int(b)];
            if r.is_zero(&rel.evaluate(&pt)) {
                out.push(pt);
                if out.len() == limit {
                    return out;
                }
            }
        }
    }
    out
}

/// Whether `p` vanishes on the sampled curve points.
fn vanishes_on_curve(p: &Poly, points: &[[Elem; 2]]) -> bool {
    points.iter().all(|pt| p.ring().is_zero(&p.evaluate(pt)))
}

fn series_poly(s: &Series2) -> Poly {
    s.to_poly()
}

/// Lowest total degree of a nonzero term.
fn poly_order(p: &Poly) -> u32 {
    p.terms().map(|(e, _)| e.iter().sum::<u32>()).min().unwrap_or(u32::MAX)
}

fn truncated(p: &Poly, max_degree: u32) -> Poly {
    Poly::from_terms(
        p.ring(),
        p.nvars(),
        p.terms()
            .filter(|(e, _)| e.iter().sum::<u32>() <= max_degree)
            .map(|(e, c)| (e.clone(), c.clone())),
    )
}

fn quad_poly(q: &QuadForm, x: &Poly, y: &Poly) -> Poly {
    &(&(x * x) + &(x * y).scale(q.gamma())) + &(y * y).scale(q.delta())
}

fn mat_minus(a: &Mat2, b: &Mat2) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            out.push(&a.0[i][j] - &b.0[i][j]);
        }
    }
    out
}

fn criterion_1() -> String {
    let mut count = 0;
    for (desc, n) in [("fp:5", 50), ("fp:7", 50), ("fp:101", 50), ("q", 10)] {
        let r = ring(desc);
        let mut g = rng(1000 + r.characteristic());
        for _ in 0..n {
            let dp = random_dp(&r, &mut g, 16);
            let mf = build_mf(&dp).unwrap();
            let xi = Mat2::scalar(&relation(dp.quad(), dp.s(), dp.t()));
            assert_eq!(mf.phi.mul(&mf.psi), xi);
            assert_eq!(mf.psi.mul(&mf.phi), xi);
            assert_eq!(mf.p.mul(&mf.psi), mf.phi.transpose().mul(&mf.p));
            assert_eq!(mf.p.mul(&mf.phi), mf.psi.transpose().mul(&mf.p));
            let report = kappa_lambda_identities(&mf, 4).unwrap();
            assert!(report.kappa_alpha && report.lambda_beta && report.det_kappa && report.det_lambda);

            let c = |e: &Elem| Poly::constant(&r, 2, e.clone());
            let (x, y) = (Poly::var(&r, 2, 0), Poly::var(&r, 2, 1));
            let zero = Poly::zero(&r, 2);
            let u_s = &x - &c(dp.s());
            let v_t = &y - &c(dp.t());
            let b = &(&x + &c(dp.s())) + &c(&r.mul(dp.quad().gamma(), dp.t()));
            assert_eq!(mf.kappa.det(), -&v_t);
            assert_eq!(mf.lambda.det(), v_t.clone());
            if r.is_field() && r.characteristic() > 0 {
                let pts = curve_points(&dp, 40);
                let ka = Mat2([[u_s.clone(), -&v_t], [zero.clone(), zero.clone()]]);
                let lb = Mat2([[v_t.clone(), -&b], [zero.clone(), zero.clone()]]);
                for d in mat_minus(&mf.kappa.mul(&mf.phi), &ka)
                    .iter()
                    .chain(&mat_minus(&mf.lambda.mul(&mf.psi), &lb))
                {
                    assert!(vanishes_on_curve(d, &pts));
                }
            }
            count += 1;
        }
    }
    format!("{count} parameter sets: phi psi = psi phi = x I, p-conjugation, kappa alpha, lambda beta exact")
}

fn criterion_2() -> String {
    let descs = ["fp:5", "fp:7", "fp:101", "q", "loc:fp:7:s,t:3"];
    let mut elements = 0;
    for set in 0..20u64 {
        let r = ring(descs[set as usize % descs.len()]);
        let mut g = rng(2000 + set);
        let dp = random_dp(&r, &mut g, 30);
        let seq = dp.power_sequences(30).unwrap();
        let rel = relation(dp.quad(), dp.s(), dp.t());
        let x = Poly::var(&r, 2, 0);
        for n in 2..=30 {
            let rhs = &(&seq[n].f + &(&x * &seq[n - 1].g)) + &(&seq[n - 2].h * &rel);
            assert_eq!(rhs, x.pow(n as u32), "n = {n}");
            assert_eq!(dp.x_power_via_recursion(n).unwrap(), dp.pow(&dp.u(), n as u32).unwrap());
        }
        let pts = if r.is_field() && r.characteristic() > 0 {
            curve_points(&dp, 25)
        } else {
            Vec::new()
        };
        for _ in 0..10 {
            let e = dp.random(6, &mut g);
            assert_eq!(dp.reduce(&dp.expand(&e)).unwrap(), e);
            let h = Poly::from_terms(
                &r,
                2,
                (0..4u32)
                    .flat_map(|i| (0..4 - i).map(move |j| vec![i, j]))
                    .map(|m| (m, r.random(&mut g))),
            );
            let p = &dp.expand(&e) + &(&h * &rel);
            assert_eq!(dp.reduce(&p).unwrap(), e);
            assert!(vanishes_on_curve(&(&dp.expand(&dp.reduce(&p).unwrap()) - &p), &pts));
            elements += 1;
        }
    }
    format!("20 parameter sets, 2 <= n <= 30; {elements} round trips; recursion equals division")
}

fn random_homog(r: &Ring, degree: usize, g: &mut ChaCha8Rng) -> Homog {
    Homog::new(r, (0..=degree).map(|_| r.random(g)).collect())
}

fn criterion_3() -> String {
    let mut series = 0;
    for desc in ["q", "fp:7"] {
        let r = ring(desc);
        let mut g = rng(3000 + r.characteristic());
        for k in 0..20 {
            let n = 1 + k % 12;
            let q = random_form(&r, &mut g);
            let prec = n + 1;
            let f = &q.as_series(prec) + &Series2::random(&r, prec, 3, &mut g);
            let it = normal_form_iterates(&f, &q, n).unwrap();
            let last = it.last().unwrap();
            let resid = &quad_poly(&q, &series_poly(&last.xs), &series_poly(&last.ys)) - &series_poly(&f);
            assert!(poly_order(&truncated(&resid, prec as u32)) > prec as u32);
            for (i, w) in it.windows(2).enumerate() {
                let step = i as u32 + 1;
                assert!(poly_order(&series_poly(&(&w[1].xs - &w[0].xs))) > step);
                assert!(poly_order(&series_poly(&(&w[1].ys - &w[0].ys))) > step);
            }
            series += 1;
        }
        let q = random_form(&r, &mut g);
        let (x, y) = (Poly::var(&r, 2, 0), Poly::var(&r, 2, 1));
        let two = r.from_int(2);
        for n in 0..=8 {
            let h = random_homog(&r, n + 1, &mut g);
            let (mu, nu) = q.p_unscaled(&h).unwrap();
            let (mu, nu) = (mu.to_poly(), nu.to_poly());
            let image = &(&x * &(&mu.scale(&two) + &nu.scale(q.gamma())))
                + &(&y * &(&mu.scale(q.gamma()) + &nu.scale(&r.mul(&two, q.delta()))));
            assert_eq!(image, h.to_poly().scale(q.discriminant()));
        }
    }
    format!("{series} series with N <= 12: residual order >= N + 2 and Cauchy steps; Q P = d id for n <= 8")
}

fn criterion_4() -> String {
    let mut cases = 0;
    for desc in ["dual:q", "dual:fp:5"] {
        let r = ring(desc);
        let tau = r.epsilon().unwrap();
        let mut g = rng(4000 + desc.len() as u64);
        for _ in 0..20 {
            let q = random_form(&r, &mut g);
            let f = Series2::random(&r, 10, 1, &mut g);
            let ch = square_zero_change(&q, &tau, &f).unwrap();
            let (x, y) = (Poly::var(&r, 2, 0), Poly::var(&r, 2, 1));
            let lhs = &quad_poly(&q, &series_poly(&ch.xs), &series_poly(&ch.ys)) - &quad_poly(&q, &x, &y);
            assert_eq!(truncated(&lhs, 10), series_poly(&f).scale(&tau));

            let prec = 6;
            let u_s = &Series2::x(&r, prec) + &Series2::random(&r, prec, 1, &mut g).scale(&tau);
            let v_s = &Series2::y(&r, prec) + &Series2::random(&r, prec, 1, &mut g).scale(&tau);
            let (s, t) = (r.mul(&tau, &r.random(&mut g)), r.mul(&tau, &r.random(&mut g)));
            let target = quad_poly(&q, &x, &y);
            let defect = &q.eval_series(&u_s, &v_s) - &q.as_series(prec);
            let fixed = repair_small_lift(&q, &tau, &u_s, &v_s, &s, &t, &defect).unwrap();
            let after = &(&quad_poly(&q, &series_poly(&fixed.u), &series_poly(&fixed.v)) - &target)
                - &Poly::constant(&r, 2, q.eval(&fixed.s, &fixed.t));
            assert!(truncated(&after, prec as u32).is_zero());
            cases += 1;
        }
    }
    format!("{cases} random f: square-zero identity exact through precision 10; repaired relation exact")
}

/// Five parameter sets over each of F_5 and F_7, the first of each with `s = t = 0`.
fn small_sets() -> Vec<DPRing> {
    let mut out = Vec::new();
    for desc in ["fp:5", "fp:7"] {
        let r = ring(desc);
        let mut g = rng(5000 + r.characteristic());
        for i in 0..5 {
            let q = random_form(&r, &mut g);
            let (s, t) = if i == 0 {
                (r.zero(), r.zero())
            } else {
                loop {
                    let (s, t) = (r.random(&mut g), r.random(&mut g));
                    if !r.is_zero(&s) || !r.is_zero(&t) {
                        break (s, t);
                    }
                }
            };
            out.push(DPRing::new(q, s, t, 16));
        }
    }
    out
}

fn criterion_5() -> String {
    let bound = 6;
    let mut g = rng(5500);
    for dp in small_sets() {
        let hom = hom_j_r_truncated(&dp, bound).unwrap();
        assert_eq!(hom.hom_dim, hom.span_dim);
        assert!(hom.contains_one && hom.contains_epsilon);
        let quot = quotient_iso_check(&dp, bound).unwrap();
        assert_eq!(quot.injectivity_kernel_dim, 0);
        assert_eq!(quot.surjectivity_rank, hom.hom_dim);
        let j = j_data(&dp).unwrap();
        assert_eq!(
            dp.mul(&j.v_minus_t, &j.eps_u).unwrap(),
            dp.mul(&j.u_minus_s, &j.eps_v).unwrap()
        );
        for _ in 0..5 {
            let (a, b, c) = (dp.random(3, &mut g), dp.random(3, &mut g), dp.random(3, &mut g));
            epsilon_presentation_independence(&dp, &a, &b, &c).unwrap();
        }
    }
    format!("10 parameter sets: Hom(J, R) = R 1 + R eps through D = {bound}; quotient injective and onto")
}

fn criterion_6() -> String {
    for dp in small_sets() {
        let mf = build_mf(&dp).unwrap();
        let cert = periodic_exactness(&mf, 6, 2).unwrap();
        assert_eq!(cert.positions.len(), 4);
        for p in &cert.positions {
            assert_eq!(p.kernel_dim, p.image_dim_in_box);
            assert!(p.kernel_dim > 0);
        }
        let xi = Mat2::scalar(&relation(dp.quad(), dp.s(), dp.t()));
        assert_eq!(mf.phi.mul(&mf.psi), xi);
        assert_eq!(mf.psi.mul(&mf.phi), xi);
    }
    "10 parameter sets: ker = im at all four positions, D = 6, cushion 2; compositions = x id".into()
}

/// Chart relations transcribed directly, in variables `(v, y)` and `(u, x)`.
fn displayed_relations(p: &Params) -> (Poly, Poly) {
    let r = p.ring();
    let (g, d) = (p.q.gamma(), p.q.delta());
    let c = |e: &Elem| Poly::constant(r, 2, e.clone());
    let one = Poly::one(r, 2);
    let (a, b) = (Poly::var(r, 2, 0), Poly::var(r, 2, 1));
    let r0 = &(&(&a * &(&(&b.pow(2) - &b.scale(g)) + &c(d))) + &(&(&b.scale(&r.from_int(2)) - &c(g)) * &c(&p.s)))
        + &(&(&(&(-&b.pow(2) + &b.scale(&r.mul(&r.from_int(2), g))) - &c(&r.mul(g, g))) + &c(d)) * &c(&p.t));
    let w = &(&b.pow(2).scale(d) - &b.scale(g)) + &one;
    let r1 = &(&(&a * &w) + &(&(&b.pow(2).scale(d) - &one) * &c(&p.s)))
        + &(&(&b.pow(2).scale(g) - &b.scale(&r.from_int(2))) * &c(&r.mul(&p.t, d)));
    (r0, r1)
}

/// Eliminates `u` with `g0` and `v` with `g1` from scratch in `A[u, v, x, y]`.
fn eliminate(p: &Params) -> (Poly, Poly) {
    let r = p.ring();
    let var = |i| Poly::var(r, 4, i);
    let c = |e: &Elem| Poly::constant(r, 4, e.clone());
    let (u, v, x, y) = (var(0), var(1), var(2), var(3));
    let (g, d) = (p.q.gamma(), p.q.delta());
    let a = &(&u.scale(g) + &v.scale(d)) + &c(&r.mul(d, &p.t));
    let b = &(&u + &c(&p.s)) + &c(&r.mul(g, &p.t));
    let (u_s, v_t) = (&u - &c(&p.s), &v - &c(&p.t));
    let f0 = &a - &(&u_s * &y);
    let g0 = &b + &(&v_t * &y);
    let f1 = &(&a * &x) - &u_s;
    let g1 = &(&b * &x) + &v_t;
    let quv = &(&u.pow(2) + &(&u * &v).scale(g)) + &v.pow(2).scale(d);
    let rel = &quv - &c(&p.q.eval(&p.s, &p.t));
    assert_eq!(&(&v_t * &f0) + &(&u_s * &g0), rel);
    assert_eq!(&(&v_t * &f1) + &(&u_s * &g1), &x * &rel);
    let u_expr = &(-&c(&p.s) - c(&r.mul(g, &p.t))) - &(&v_t * &y);
    assert!(g0.substitute(0, &u_expr).is_zero());
    let v_expr = &c(&p.t) - &(&b * &x);
    assert!(g1.substitute(1, &v_expr).is_zero());
    let to2 = |q: &Poly, keep: [usize; 2]| {
        Poly::from_terms(r, 2, q.terms().map(|(e, c)| (vec![e[keep[0]], e[keep[1]]], c.clone())))
    };
    (
        to2(&f0.substitute(0, &u_expr), [1, 3]),
        to2(&f1.substitute(1, &v_expr), [0, 2]),
    )
}

fn check_charts(p: &Params) {
    let (r0, r1) = displayed_relations(p);
    let (e0, e1) = eliminate(p);
    assert_eq!(e0, r0);
    assert_eq!(e1, -&r1);
    let (c0, c1) = build_charts(p).unwrap();
    assert_eq!(c0.relation, r0);
    assert_eq!(c1.relation, r1);
    covering_certificate(p).unwrap();
}

fn criterion_7() -> String {
    let sym = ring("loc:q:s,t:4");
    let mut g = rng(7000);
    let q = QuadForm::new(&sym, sym.from_int(3), sym.from_int(2));
    check_charts(&Params::new(
        q,
        sym.named_element("s").unwrap(),
        sym.named_element("t").unwrap(),
    ));
    let q = random_form(&sym, &mut g);
    check_charts(&Params::new(
        q,
        sym.named_element("s").unwrap(),
        sym.named_element("t").unwrap(),
    ));

    let descs = ["fp:5", "fp:7", "fp:101", "q"];
    for i in 0..10 {
        let r = ring(descs[i % descs.len()]);
        let q = random_form(&r, &mut g);
        let p = Params::new(q.clone(), r.random(&mut g), r.random(&mut g));
        check_charts(&p);
        let cert = det4_and_ideal_identity(&q).unwrap();
        let expected = r.sub(&r.mul(&r.from_int(4), q.delta()), &r.mul(q.gamma(), q.gamma()));
        assert_eq!(cert.det, expected);
        assert_eq!(cert.inverse.is_some(), r.is_unit(&expected));
    }

    let r = ring("fp:7");
    let p = Params::new(random_form(&r, &mut g), r.random(&mut g), r.random(&mut g));
    for _ in 0..100 {
        let terms: Vec<_> = (0..=6u32)
            .flat_map(|i| (0..=6 - i).map(move |j| vec![i, j]))
            .filter_map(|m| g.gen_bool(0.5).then(|| (m, r.random(&mut g))))
            .collect();
        let elem = Poly::from_terms(&r, 2, terms);
        let a = reduce_r0(&p, &elem, 6, RewriteOrder::GreatestFirst).unwrap();
        assert_eq!(a, reduce_r0(&p, &elem, 6, RewriteOrder::SmallestFirst).unwrap());
        assert_eq!(a, reduce_r0(&p, &elem, 6, RewriteOrder::Random(g.gen())).unwrap());
    }

    let flat = flatness_basis_certificate(
        &Params::new(
            q_default(&sym),
            sym.named_element("s").unwrap(),
            sym.named_element("t").unwrap(),
        ),
        8,
    )
    .unwrap();
    assert_eq!(flat.rank, flat.monomials * flat.residue_dim);

    let gd = ring("loc:q:g,d:4");
    let (gs, ds) = (gd.named_element("g").unwrap(), gd.named_element("d").unwrap());
    let cert = det4_and_ideal_identity(&QuadForm::new(&gd, gs.clone(), ds.clone())).unwrap();
    assert_eq!(cert.det, gd.sub(&gd.mul(&gd.from_int(4), &ds), &gd.mul(&gs, &gs)));
    "charts match the displayed relations (symbolic and 10 numeric); confluence on 100 inputs; flat through D = 8; det4 = 4 delta - gamma^2".into()
}

fn q_default(r: &Ring) -> QuadForm {
    QuadForm::new(r, r.from_int(1), r.zero())
}

fn criterion_8() -> String {
    for (desc, g, d) in [("q", 3, 2), ("fp:5", 1, 0), ("q", 0, -1)] {
        let r = ring(desc);
        let q = QuadForm::new(&r, r.from_int(g), r.from_int(d));
        let f = fiber_at_origin(&q).unwrap();
        assert_eq!(f.components.len(), 3);
        let (a, b) = f.roots.clone();
        assert_ne!(a, b);
        for root in [&a, &b] {
            let val = r.add(&r.sub(&r.mul(root, root), &r.mul(q.gamma(), root)), q.delta());
            assert!(r.is_zero(&val));
        }
        let v = Poly::var(&r, 2, 0);
        let y = Poly::var(&r, 2, 1);
        let prod = f.components.iter().fold(Poly::one(&r, 2), |acc, c| &acc * c);
        let fiber = &v * &(&(&y.pow(2) - &y.scale(q.gamma())) + &Poly::constant(&r, 2, q.delta().clone()));
        assert_eq!(prod, fiber);
        assert_eq!(f.intersections, vec![(r.zero(), a.clone()), (r.zero(), b.clone())]);
        assert_eq!(f.jacobians.len(), 2);
        assert!(f.jacobians.iter().all(|j| r.is_unit(j)));
        assert!(r.is_unit(&f.section_derivative));
    }
    "three components, two transversal points, smooth section for all three forms".into()
}

fn criterion_9() -> String {
    let bin = env!("CARGO_BIN_EXE_nodal-kit");
    let args = [
        "check-all",
        "--ring",
        "fp:7",
        "--gamma",
        "3",
        "--delta",
        "2",
        "--s",
        "1",
        "--t",
        "1",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = Proc::new(bin).args(args).output().unwrap();
    let b = Proc::new(bin).args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["overall"], "pass");
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);

    let failing = Proc::new(bin)
        .args([
            "normal-form",
            "--series",
            r#"[[1,0,"1"],[2,0,"1"]]"#,
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(failing.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&failing.stdout).unwrap();
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c.get("counterexample").is_some()));

    let bad = Proc::new(bin)
        .args(["fiber", "--gamma", "2", "--delta", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let bad = Proc::new(bin).args(["fiber", "--ring", "fp:9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    format!(
        "{} checks byte-identical across runs; exit codes 0, 1, 2 as specified",
        names.len()
    )
}

fn main() {
    let criteria: [(u32, fn() -> String); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (n, f) in criteria {
        if only.is_some_and(|o| o != n) {
            continue;
        }
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(summary) => println!("PASS criterion {n}: {summary}"),
            Err(_) => {
                println!("FAIL criterion {n}");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
