#![allow(dead_code)]

use qflop_core::poly::Monomial;
use qflop_core::{GradedRing, Polynomial, WeightSystem};
use rand::rngs::StdRng;
use rand::Rng;

/// Up to three variables, weights in `[-3, 3]`, at most one monomial relation.
pub fn random_spec(rng: &mut StdRng) -> GradedRing {
    let n = rng.gen_range(1..=3);
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    let vars: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    let mut rels = Vec::new();
    if rng.gen_bool(0.5) {
        let mut e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        if e.iter().all(|&k| k == 0) {
            e[0] = 1;
        }
        rels.push(Polynomial::monomial(Monomial::from_exponents(e)));
    }
    GradedRing::new(vars, WeightSystem::scalar(&weights), rels).unwrap()
}

pub fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(|s| s.as_str()).collect()
}
