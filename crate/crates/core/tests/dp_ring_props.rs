mod common;

use common::{random_form, ring, rng};
use nodal_core::dp_ring::DPRing;
use nodal_core::poly::Poly;
use nodal_core::Ring;
use proptest::prelude::*;
use rand::Rng;

fn random_dp(desc: &str, g: &mut impl Rng) -> DPRing {
    let r = ring(desc);
    let q = random_form(&r, g);
    let (s, t) = (r.random(g), r.random(g));
    DPRing::with_default_bound(q, s, t)
}

fn random_poly(r: &Ring, degree: u32, g: &mut impl Rng) -> Poly {
    let mut terms = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            if g.gen_bool(0.5) {
                terms.push((vec![i, j], r.random(g)));
            }
        }
    }
    Poly::from_terms(r, 2, terms)
}

const RINGS: &[&str] = &["fp:5", "fp:7", "fp:101", "q"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn reduce_and_expand_are_inverse(seed in any::<u64>(), which in 0..RINGS.len()) {
        let mut g = rng(seed);
        let dp = random_dp(RINGS[which], &mut g);
        let e = dp.random(5, &mut g);
        prop_assert_eq!(dp.reduce(&dp.expand(&e)).unwrap(), e.clone());
        let h = random_poly(dp.ring(), 3, &mut g);
        let p = &dp.expand(&e) + &(&h * &dp.relation());
        let red = dp.reduce(&p).unwrap();
        prop_assert_eq!(&red, &e);
        prop_assert_eq!(dp.reduce(&dp.expand(&red)).unwrap(), red);
    }

    #[test]
    fn multiplication_is_associative_and_commutative(seed in any::<u64>(), which in 0..RINGS.len()) {
        let mut g = rng(seed);
        let dp = random_dp(RINGS[which], &mut g);
        let (a, b, c) = (dp.random(4, &mut g), dp.random(4, &mut g), dp.random(4, &mut g));
        prop_assert_eq!(dp.mul(&a, &b).unwrap(), dp.mul(&b, &a).unwrap());
        let left = dp.mul(&dp.mul(&a, &b).unwrap(), &c).unwrap();
        let right = dp.mul(&a, &dp.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let expanded = dp.reduce(&(&dp.expand(&a) * &dp.expand(&b))).unwrap();
        prop_assert_eq!(dp.mul(&a, &b).unwrap(), expanded);
    }

    #[test]
    fn base_scalars_act_componentwise(seed in any::<u64>()) {
        let mut g = rng(seed);
        let dp = random_dp("loc:fp:7:s,t:3", &mut g);
        let a = dp.ring().random(&mut g);
        let e = dp.random(4, &mut g);
        let prod = dp.mul(&dp.constant(a.clone()), &e).unwrap();
        prop_assert_eq!(prod.f, e.f.scale(&a));
        prop_assert_eq!(prod.g, e.g.scale(&a));
    }

    #[test]
    fn recursion_agrees_with_division(seed in any::<u64>(), which in 0..RINGS.len()) {
        let mut g = rng(seed);
        let dp = random_dp(RINGS[which], &mut g);
        let x = dp.u();
        for n in [2usize, 3, 5, 8, 13] {
            prop_assert_eq!(dp.x_power_via_recursion(n).unwrap(), dp.pow(&x, n as u32).unwrap());
        }
    }
}

#[test]
fn power_sequences_have_growing_weight() {
    let r = ring("loc:q:s,t:4");
    let mut g = rng(7);
    let q = random_form(&r, &mut g);
    let dp = DPRing::with_default_bound(q, r.named_element("s").unwrap(), r.named_element("t").unwrap());
    let seq = dp.power_sequences(10).unwrap();
    let weight = |p: &Poly| {
        p.terms()
            .map(|(e, c)| e.iter().sum::<u32>() + r.truncation_order(c).unwrap_or(0))
            .min()
            .unwrap_or(u32::MAX)
    };
    for (n, triple) in seq.iter().enumerate().skip(1) {
        let n = n as u32;
        assert!(weight(&triple.f) >= n, "f_{n}");
        assert!(weight(&triple.g) >= n, "g_{n}");
        assert!(weight(&triple.h) >= n, "h_{n}");
    }
}

#[test]
fn degree_overflow_is_reported() {
    let r = ring("fp:5");
    let q = random_form(&r, &mut rng(1));
    let dp = DPRing::new(q, r.zero(), r.zero(), 3);
    assert!(dp.pow(&dp.v(), 4).is_err());
}
