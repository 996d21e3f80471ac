use proptest::prelude::*;
use qflop_core::examples::*;
use qflop_core::fm_windows::*;
use qflop_core::{Budget, WeightSystem};

fn b() -> Budget {
    Budget::default()
}

fn w(v: &[i64]) -> WeightSystem {
    WeightSystem::scalar(v)
}

#[test]
fn windows_from_mu() {
    assert_eq!(mu(&w(&[1, 1, -1, -1]), Sign::Plus), -2);
    assert_eq!(mu(&w(&[1, 1, -1, -1]), Sign::Minus), -2);
    assert_eq!(window_generators(&w(&[1, 1, -1, -1])), vec![-1, 0]);
    assert_eq!(window_generators(&w(&[2, -1])), vec![-1, 0]);
    assert_eq!(window_generators(&w(&[1, -1])), vec![0]);
    assert!(window_generators(&w(&[-1, -2])).is_empty());
}

#[test]
fn conifold_transform_in_window() {
    let ws = w(&[1, 1, -1, -1]);
    for i in [-1, 0] {
        let r = fm_transform_twist(&ws, i, (-3, 3), &mut b()).unwrap();
        assert!(r.in_window && r.matches_twist(), "i = {i}");
    }
    assert_eq!(fm_transform_twist(&ws, 0, (-3, 3), &mut b()).unwrap().generator.as_deref(), Some("1"));
    assert_eq!(fm_transform_twist(&ws, -1, (-3, 3), &mut b()).unwrap().generator.as_deref(), Some("U"));
}

#[test]
fn conifold_transform_outside_window() {
    let ws = w(&[1, 1, -1, -1]);
    // (twist, cell, cohomology, expected H^0)
    type Case = (i64, (i64, i64), Vec<usize>, usize);
    let cases: [Case; 3] = [(-2, (-2, 0), vec![0, 1], 0), (-3, (-3, 0), vec![0, 2], 0), (1, (0, 0), vec![0, 0], 1)];
    for (i, cell, cohomology, expected) in cases {
        let r = fm_transform_twist(&ws, i, (-3, 3), &mut b()).unwrap();
        assert!(!r.matches_twist());
        let m = r.first_mismatch().unwrap();
        assert_eq!((m.bidegree, m.cohomology.clone(), m.expected_h0), (cell, cohomology, expected), "i = {i}");
    }
}

#[test]
fn line_and_weighted_line() {
    let r = fm_transform_twist(&w(&[1, -1]), 0, (-3, 3), &mut b()).unwrap();
    assert!(r.matches_twist());
    let r = fm_transform_twist(&w(&[1, -1]), -1, (-3, 3), &mut b()).unwrap();
    let m = r.first_mismatch().unwrap();
    assert_eq!((m.bidegree, m.cohomology[0], m.expected_h0), ((-1, 0), 1, 0));
    assert!(!fm_transform_twist(&w(&[1, -1]), 1, (-3, 3), &mut b()).unwrap().h0_matches);

    for i in [-1, 0] {
        assert!(fm_transform_twist(&w(&[2, -1]), i, (-3, 3), &mut b()).unwrap().matches_twist());
    }
    let r = fm_transform_twist(&w(&[2, -1]), -2, (-3, 3), &mut b()).unwrap();
    let m = r.first_mismatch().unwrap();
    assert_eq!((m.bidegree, m.cohomology[0], m.expected_h0), ((-1, 0), 1, 0));
}

#[test]
fn wall_crossing() {
    let c = wall_crossing_report(&w(&[1, 1, -1, -1]));
    assert_eq!((c.mu_plus, c.mu_minus, c.twist, c.calabi_yau, c.literal_sum_zero), (-2, -2, 1, true, false));
    let c = wall_crossing_report(&w(&[1, -1]));
    assert_eq!((c.twist, c.calabi_yau), (0, true));
    let c = wall_crossing_report(&w(&[2, -1]));
    assert_eq!((c.mu_plus, c.mu_minus, c.calabi_yau), (-2, -1, false));
}

#[test]
fn flop_charts() {
    let f = flop_chart_check(&atiyah(2), &mut b()).unwrap();
    assert_eq!(f.invariants.describe(), "k[x1_y1,x1_y2,x2_y1,x2_y2]/(x1_y2*x2_y1 - x1_y1*x2_y2)");
    assert!(!f.global.is_iso());
    assert!(!f.global.surjective);
    assert_eq!(f.global.missing, vec![0]);
    assert_eq!(f.charts.len(), 4);
    assert!(f.all_charts_iso());

    let f = flop_chart_check(&atiyah(1), &mut b()).unwrap();
    assert_eq!(f.invariants.describe(), "k[x1_y1]");
    assert!(!f.global.is_iso());
    assert_eq!(f.charts.len(), 1);
    assert!(f.all_charts_iso());
    assert!(flop_chart_check(&node(), &mut b()).is_err());
}

#[test]
fn cech_of_the_plane_minus_origin() {
    let m = FineGradedModule::new(vec!["a".into(), "b".into()], w(&[1, 1]));
    let c = CechComplex::new(m, vec![0, 1]).unwrap();
    assert_eq!(c.fine_cohomology(&[0, 0]), vec![1, 0]);
    assert_eq!(c.fine_cohomology(&[-1, -1]), vec![0, 1]);
    assert_eq!(c.fine_cohomology(&[-1, 2]), vec![0, 0]);
    assert!(CechComplex::new(FineGradedModule::new(vec!["a".into()], w(&[1])), vec![3]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Local cohomology of a polynomial ring at the origin: H^0 on the
    // nonnegative orthant, H^{k-1} on the strictly negative one.
    #[test]
    fn cech_matches_punctured_affine_space(k in 2usize..=4, e in proptest::collection::vec(-2i64..=2, 4)) {
        let names: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
        let m = FineGradedModule::new(names, WeightSystem::scalar(&vec![1; k]));
        let c = CechComplex::new(m, (0..k).collect()).unwrap();
        let e = &e[..k];
        let h = c.fine_cohomology(e);
        let mut want = vec![0usize; k];
        if e.iter().all(|&x| x >= 0) {
            want[0] = 1;
        }
        if e.iter().all(|&x| x < 0) {
            want[k - 1] = 1;
        }
        prop_assert_eq!(h, want);
    }
}
