//! Bundled ring documents; `examples/<name>.json` holds the same documents.

use qflop_core::examples::{atiyah, mukai, node, weighted_affine};
use qflop_core::GradedRing;

use crate::spec::{RingSpec, TorusSpec};

pub fn registry() -> Vec<RingSpec> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(RingSpec::from_ring(&format!("atiyah{n}"), &atiyah(n)));
    }
    // six variables: a narrower default window keeps fm and window fast
    out[2].options.degree_window = Some((-3, 3));
    out.push(RingSpec::from_ring("mukai2", &mukai(2)));
    out.push(RingSpec::from_ring("node", &node()));
    out.push(RingSpec::from_ring("line", &weighted_affine(&[1, -1])));
    out.push(RingSpec::from_ring("weighted-line", &weighted_affine(&[2, -1])));
    out.push(RingSpec::from_ring("weighted-affine4", &weighted_affine(&[2, 1, -1, -3])));
    let plane = GradedRing::from_strs(&["x1", "x2"], &[&[1, 0], &[0, 1]], &[]).expect("valid ring");
    let mut toric = RingSpec::from_ring("toric-plane", &plane);
    toric.torus = Some(TorusSpec { monoid: vec![vec![1, 0], vec![0, 1]] });
    out.push(toric);
    out
}

pub fn lookup(name: &str) -> Option<RingSpec> {
    registry().into_iter().find(|s| s.name.as_deref() == Some(name))
}
