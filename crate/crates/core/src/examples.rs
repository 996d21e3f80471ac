//! Standard example rings.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::{Polynomial, WeightSystem};
use crate::ring::GradedRing;

/// `k[x_1..x_n]` with the given scalar weights.
pub fn weighted_affine(weights: &[i64]) -> GradedRing {
    let names: Vec<String> = (1..=weights.len()).map(|i| format!("x{i}")).collect();
    GradedRing::free(names, WeightSystem::scalar(weights)).expect("distinct names")
}

/// `k[x_1..x_n, y_1..y_n]`, `deg x = 1`, `deg y = -1`.
pub fn atiyah(n: usize) -> GradedRing {
    let (names, ws) = flop_vars(n);
    GradedRing::free(names, ws).expect("distinct names")
}

/// Atiyah ring modulo `sum x_i y_i`.
pub fn mukai(n: usize) -> GradedRing {
    let (names, ws) = flop_vars(n);
    let mut q = Polynomial::zero(2 * n);
    for i in 0..n {
        q = &q + &(&Polynomial::var(2 * n, i) * &Polynomial::var(2 * n, n + i));
    }
    GradedRing::new(names, ws, alloc::vec![q]).expect("homogeneous")
}

/// `k[x, y]/(xy)`, `deg x = 1`, `deg y = -1`.
pub fn node() -> GradedRing {
    GradedRing::from_strs(&["x", "y"], &[&[1], &[-1]], &["x*y"]).expect("valid")
}

fn flop_vars(n: usize) -> (Vec<String>, WeightSystem) {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|i| format!("y{i}")));
    let mut w = alloc::vec![1i64; n];
    w.extend(core::iter::repeat_n(-1, n));
    (names, WeightSystem::scalar(&w))
}

/// Lookup by short name: `node`, `atiyahN`, `mukaiN` for `1 <= N <= 8`.
pub fn by_name(name: &str) -> Option<GradedRing> {
    if name == "node" {
        return Some(node());
    }
    for (prefix, f) in [("atiyah", atiyah as fn(usize) -> GradedRing), ("mukai", mukai)] {
        if let Some(rest) = name.strip_prefix(prefix) {
            if let Ok(n) = rest.parse::<usize>() {
                if (1..=8).contains(&n) {
                    return Some(f(n));
                }
            }
        }
    }
    None
}
