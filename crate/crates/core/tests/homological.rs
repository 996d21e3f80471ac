mod common;

use proptest::prelude::*;
use qflop_core::equivariant::q_present;
use qflop_core::examples::*;
use qflop_core::homological::*;
use qflop_core::{Budget, Error, GradedRing};

fn b() -> Budget {
    Budget::default()
}

#[test]
fn koszul_on_regular_sequence_is_acyclic() {
    let r = GradedRing::from_strs(&["x", "y"], &[&[1], &[1]], &[]).unwrap();
    let c = koszul_complex(&r, &[r.var(0), r.var(1)]).unwrap();
    assert_eq!(c.ranks(), vec![1, 2, 1]);
    assert!(c.d_squared_zero(&mut b()).unwrap());
    assert!(!homology(&c, 0, &mut b()).unwrap().is_zero());
    assert!(homology(&c, 1, &mut b()).unwrap().is_zero());
    assert!(homology(&c, 2, &mut b()).unwrap().is_zero());
}

#[test]
fn koszul_on_zero_divisor_has_h1() {
    let r = node();
    let c = koszul_complex(&r, &[r.var(0)]).unwrap();
    assert!(!homology(&c, 1, &mut b()).unwrap().is_zero());
}

fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort();
    v
}

#[test]
fn hilbert_bases() {
    assert_eq!(sorted(hilbert_basis(&[1, -1], None).unwrap()), vec![vec![1, 1]]);
    assert_eq!(sorted(hilbert_basis(&[2, -1], None).unwrap()), vec![vec![1, 2]]);
    assert_eq!(
        sorted(hilbert_basis(&[1, 1, -1, -1], None).unwrap()),
        vec![vec![0, 1, 0, 1], vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![1, 0, 1, 0]]
    );
    assert_eq!(sorted(hilbert_basis(&[2, -3], None).unwrap()), vec![vec![3, 2]]);
    assert_eq!(sorted(hilbert_basis(&[0, 1], None).unwrap()), vec![vec![1, 0]]);
    assert!(matches!(hilbert_basis(&[3, -2], Some(1)), Err(Error::EnumerationCap { .. })));
}

#[test]
fn invariants_of_atiyah_are_the_quadric_cone() {
    let z = degree_zero_part(&atiyah(2), 0, None, &mut b()).unwrap();
    assert_eq!(z.ring.describe(), "k[x1_y1,x1_y2,x2_y1,x2_y2]/(x1_y2*x2_y1 - x1_y1*x2_y2)");
    assert!(z.inclusion.is_well_defined(&mut b()).unwrap());
    assert!(z.inclusion.iso_check(&mut b()).unwrap().injective);
}

#[test]
fn invariants_of_node() {
    let z = degree_zero_part(&node(), 0, None, &mut b()).unwrap();
    // xy = 0, so the invariant ring is k.
    assert_eq!(z.ring.simplify(&mut b()).unwrap().0.nvars(), 0);
}

#[test]
fn node_tor_obstruction_sits_in_degree_two() {
    let qp = q_present(&node(), &mut b()).unwrap();
    let t = tor_bimodule(&qp, 3, &mut b()).unwrap();
    assert_eq!(t.route, "resolution");
    let v: Vec<(usize, bool)> = t.entries.iter().map(|e| (e.index, e.vanishes)).collect();
    assert_eq!(v, vec![(1, true), (2, false), (3, true)]);
}

#[test]
fn affine_spaces_use_the_koszul_certificate() {
    for w in [&[1, 1, -1, -1][..], &[2, 1, -1, -3], &[1, -1]] {
        let qp = q_present(&weighted_affine(w), &mut b()).unwrap();
        let t = tor_bimodule(&qp, 2, &mut b()).unwrap();
        assert_eq!(t.route, "koszul");
        assert!(t.certified_all && t.all_vanish());
    }
}

#[test]
fn property_p_table() {
    let node_report = property_p_check(&node(), 2, &mut b()).unwrap();
    assert!(!node_report.has_p());
    assert_eq!(node_report.rho_witness.as_deref(), Some("P_x*S_y'"));
    assert_eq!(node_report.witness_image, Some(("x*y*u_inv*v_inv".to_string(), true)));
    assert!(node_report.routes_agree);

    let mukai_report = property_p_check(&mukai(2), 2, &mut b()).unwrap();
    assert!(!mukai_report.has_p());
    assert_eq!(mukai_report.rho_witness.as_deref(), Some("P_x1*S_y1' + P_x2*S_y2'"));

    for r in [atiyah(2), weighted_affine(&[1, -1]), weighted_affine(&[2, 1, -1, -3])] {
        let rep = property_p_check(&r, 2, &mut b()).unwrap();
        assert_eq!(rep.conclusion, PVerdict::HasP { tor_certified: true }, "{}", r.describe());
        assert!(rep.rho.is_iso() && rep.routes_agree);
    }
}

#[test]
fn rho_for_the_line() {
    let qp = q_present(&weighted_affine(&[1, -1]), &mut b()).unwrap();
    let d = rho_map(&qp, &mut b()).unwrap();
    assert!(d.rho.iso_check(&mut b()).unwrap().is_iso());
    assert!(d.routes_agree(&mut b()).unwrap());
}

fn decomposable(v: &[u32], basis: &[Vec<u32>]) -> bool {
    if v.iter().all(|&e| e == 0) {
        return true;
    }
    basis.iter().any(|h| {
        h.iter().zip(v).all(|(a, b)| a <= b) && {
            let rest: Vec<u32> = v.iter().zip(h).map(|(a, b)| a - b).collect();
            decomposable(&rest, basis)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hilbert_basis_is_minimal_and_complete(w in proptest::collection::vec(-3i64..=3, 1..=3)) {
        let basis = hilbert_basis(&w, None).unwrap();
        let weight = |v: &[u32]| v.iter().zip(&w).map(|(&e, &x)| e as i64 * x).sum::<i64>();
        for h in &basis {
            prop_assert_eq!(weight(h), 0);
            prop_assert!(h.iter().any(|&e| e > 0));
            for g in &basis {
                prop_assert!(g == h || !g.iter().zip(h).all(|(a, b)| a <= b));
            }
        }
        let n = w.len();
        let total = 4u32.pow(n as u32);
        for code in 0..total {
            let v: Vec<u32> = (0..n).map(|k| (code / 4u32.pow(k as u32)) % 4).collect();
            if weight(&v) == 0 {
                prop_assert!(decomposable(&v, &basis), "{:?} not generated", v);
            }
        }
    }
}
