#![allow(dead_code)]

use nodal_core::normal_form::QuadForm;
use nodal_core::{Elem, Ring, RingDescriptor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(descriptor: &str) -> Ring {
    Ring::new(&descriptor.parse::<RingDescriptor>().unwrap()).unwrap()
}

/// Random `(gamma, delta)` with a unit discriminant.
pub fn random_form(r: &Ring, rng: &mut impl rand::Rng) -> QuadForm {
    loop {
        let q = QuadForm::new(r, r.random(rng), r.random(rng));
        if q.is_nondegenerate() {
            return q;
        }
    }
}

pub fn ints(r: &Ring, xs: &[i64]) -> Vec<Elem> {
    xs.iter().map(|&x| r.from_int(x)).collect()
}
