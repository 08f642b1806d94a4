//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use lojasiewicz::multiplicity::IdealTuple;
use lojasiewicz::{ExponentVector, MonomialIdeal, Weights};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> ExponentVector {
    loop {
        let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        if v.iter().any(|&e| e > 0) {
            return ExponentVector::new(v);
        }
    }
}

/// Pure powers on every axis plus up to three extra monomials.
pub fn finite_ideal(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> = (0..n)
        .map(|i| ExponentVector::pure(n, i, rng.gen_range(1..=max_exp)))
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        gens.push(random_monomial(rng, n, max_exp));
    }
    MonomialIdeal::new(n, gens).unwrap()
}

/// One to three random monomials; usually not of finite colength.
pub fn any_ideal(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=3);
    MonomialIdeal::new(n, (0..k).map(|_| random_monomial(rng, n, max_exp))).unwrap()
}

pub fn finite_tuple(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> IdealTuple {
    IdealTuple::new((0..n).map(|_| finite_ideal(rng, n, max_exp)).collect()).unwrap()
}

pub fn weights(rng: &mut ChaCha8Rng, n: usize, max_w: u64) -> Weights {
    Weights::new((0..n).map(|_| rng.gen_range(1..=max_w)).collect()).unwrap()
}
