use proptest::prelude::*;
use qflop_core::engine::{
    elimination_ideal, free_resolution, ideal_equal, ideal_lift, module_lift, syzygies, GroebnerBasis,
    SubmodulePresentation,
};
use qflop_core::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial};
use qflop_core::ring::{GradedRing, RingMap};
use qflop_core::{Budget, WeightSystem};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn p(s: &str, n: &[String]) -> Polynomial {
    parse_polynomial(s, n).unwrap()
}

#[test]
fn lex_basis_of_small_system() {
    let n = names(&["x", "y"]);
    let gens = [p("x^2 - y", &n), p("x*y - 1", &n)];
    let gb = GroebnerBasis::compute(2, &gens, &MonomialOrder::lex(), &mut Budget::default()).unwrap();
    let got: Vec<String> = gb.polynomials().iter().map(|q| q.fmt_with(&n, &MonomialOrder::lex())).collect();
    // x = y^2 and y^3 = 1.
    assert_eq!(got, vec!["x - y^2", "y^3 - 1"]);
}

#[test]
fn unit_ideal_detected() {
    let n = names(&["x", "y"]);
    let gens = [p("x*y - 1", &n), p("x", &n)];
    let gb = GroebnerBasis::compute(2, &gens, &MonomialOrder::grevlex(), &mut Budget::default()).unwrap();
    assert!(gb.is_unit());
}

#[test]
fn veronese_kernel() {
    let src = GradedRing::from_strs(&["a", "b", "c"], &[&[2], &[2], &[2]], &[]).unwrap();
    let tgt = GradedRing::from_strs(&["x", "y"], &[&[1], &[1]], &[]).unwrap();
    let imgs = vec![tgt.parse("x^2").unwrap(), tgt.parse("x*y").unwrap(), tgt.parse("y^2").unwrap()];
    let f = RingMap::new(src.clone(), tgt, imgs).unwrap();
    let ker = f.kernel(&mut Budget::default()).unwrap();
    assert_eq!(src.fmt_all(&ker), vec!["b^2 - a*c"]);
    let v = f.iso_check(&mut Budget::default()).unwrap();
    assert!(!v.injective && !v.surjective);
    assert_eq!(v.missing, vec![0, 1]);
}

#[test]
fn elimination_of_twisted_cubic_parametrisation() {
    let n = names(&["t", "a", "b", "c"]);
    let gens = [p("a - t", &n), p("b - t^2", &n), p("c - t^3", &n)];
    let keep = [false, true, true, true];
    let e = elimination_ideal(4, &gens, &keep, &mut Budget::default()).unwrap();
    let expect = [p("b - a^2", &n), p("c - a^3", &n)];
    assert!(ideal_equal(4, &e, &expect, &mut Budget::default()).unwrap());
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let n = names(&["x", "y"]);
    let gens = vec![vec![p("x", &n)], vec![p("y", &n)]];
    let s = syzygies(2, 1, &gens, &[], &mut Budget::default()).unwrap();
    assert_eq!(s.len(), 1);
    let v = &s[0];
    // y*x - x*y = 0 up to sign.
    let combo = &(&v[0] * &p("x", &n)) + &(&v[1] * &p("y", &n));
    assert!(combo.is_zero());
    assert!(!v[0].is_zero());
}

#[test]
fn syzygies_over_node() {
    // Over k[x,z]/(xz), ann(x) = (z).
    let n = names(&["x", "z"]);
    let rel = [p("x*z", &n)];
    let s = syzygies(2, 1, &[vec![p("x", &n)]], &rel, &mut Budget::default()).unwrap();
    assert_eq!(s, vec![vec![p("z", &n)]]);
}

#[test]
fn residue_field_resolution() {
    let n = names(&["x", "y"]);
    let m = SubmodulePresentation::new(2, 1, vec![vec![p("x", &n)], vec![p("y", &n)]]);
    let w = WeightSystem::scalar(&[1, 1]);
    let c = free_resolution(&m, &[], Some(&w), 4, &mut Budget::default()).unwrap();
    assert_eq!(c.ranks(), vec![1, 2, 1]);
    assert!(c.d_squared_zero(&mut Budget::default()).unwrap());
    let shifts = c.modules[2].shifts.clone().unwrap();
    assert_eq!(shifts[0].0, vec![2]);
    for i in 1..=2 {
        assert!(c.homology(i, &mut Budget::default()).unwrap().is_zero());
    }
}

#[test]
fn node_resolution_is_periodic() {
    // k[x,z]/(xz) resolving k[x,z]/(xz, x): maps alternate x, z.
    let n = names(&["x", "z"]);
    let rel = [p("x*z", &n)];
    let m = SubmodulePresentation::new(2, 1, vec![vec![p("x", &n)]]);
    let c = free_resolution(&m, &rel, None, 4, &mut Budget::default()).unwrap();
    assert_eq!(c.ranks(), vec![1, 1, 1, 1, 1]);
    assert!(c.d_squared_zero(&mut Budget::default()).unwrap());
    assert_eq!(c.differential(2).unwrap()[0][0], p("z", &n));
    assert_eq!(c.differential(3).unwrap()[0][0], p("x", &n));
}

#[test]
fn lifts_recover_combinations() {
    let n = names(&["x", "y"]);
    let gens = [p("x^2", &n), p("y^2", &n)];
    let f = p("x^3 + x^2*y - 2*y^3", &n);
    let c = ideal_lift(2, &gens, &f, &mut Budget::default()).unwrap().unwrap();
    let back = &(&c[0] * &gens[0]) + &(&c[1] * &gens[1]);
    assert_eq!(back, f);
    assert!(ideal_lift(2, &gens, &p("x*y", &n), &mut Budget::default()).unwrap().is_none());
    let mg = vec![vec![p("x", &n), p("y", &n)]];
    assert!(module_lift(2, 2, &mg, &[], &[p("x*y", &n), p("y^2", &n)], &mut Budget::default()).unwrap().is_some());
    assert!(module_lift(2, 2, &mg, &[], &[p("y", &n), p("x", &n)], &mut Budget::default()).unwrap().is_none());
}

#[test]
fn budget_is_enforced() {
    let n = names(&["x", "y", "z", "w"]);
    let gens = [p("x^3 - y*z*w", &n), p("y^3 - x*z*w + z^2", &n), p("z^3 - x*y - w^2", &n)];
    let r = GroebnerBasis::compute(4, &gens, &MonomialOrder::lex(), &mut Budget::new(10, 5));
    assert!(matches!(r, Err(qflop_core::Error::BudgetExceeded { .. })));
}

#[test]
fn simplify_drops_solved_generators() {
    let r = GradedRing::from_strs(&["a", "b", "c"], &[&[1], &[1], &[2]], &["c - a*b", "a*c"]).unwrap();
    let (s, iso) = r.simplify(&mut Budget::default()).unwrap();
    assert_eq!(s.vars, names(&["a", "b"]));
    assert_eq!(s.fmt_all(&s.relations), vec!["a^2*b"]);
    assert!(iso.is_well_defined(&mut Budget::default()).unwrap());
    assert!(iso.iso_check(&mut Budget::default()).unwrap().is_iso());
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -3i64..4), 0..5).prop_map(move |ts| {
        Polynomial::from_terms(
            nvars,
            ts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), qflop_core::poly::coeff(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ideal_members_reduce_to_zero(g in prop::collection::vec(arb_poly(3), 1..3), c in prop::collection::vec(arb_poly(3), 2)) {
        let gb = GroebnerBasis::compute(3, &g, &MonomialOrder::grevlex(), &mut Budget::default()).unwrap();
        let mut f = Polynomial::zero(3);
        for (gi, ci) in g.iter().zip(c.iter()) {
            f = &f + &(gi * ci);
        }
        prop_assert!(gb.nf(&f).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_order_free_membership(g in prop::collection::vec(arb_poly(3), 1..3), f in arb_poly(3)) {
        let a = GroebnerBasis::compute(3, &g, &MonomialOrder::grevlex(), &mut Budget::default()).unwrap();
        let b = GroebnerBasis::compute(3, &g, &MonomialOrder::lex(), &mut Budget::default()).unwrap();
        let r = a.nf(&f);
        prop_assert_eq!(a.nf(&r), r.clone());
        prop_assert_eq!(r.is_zero(), b.nf(&f).is_zero());
    }

    #[test]
    fn syzygies_are_syzygies(g in prop::collection::vec(arb_poly(2), 1..4)) {
        let gens: Vec<Vec<Polynomial>> = g.iter().map(|q| vec![q.clone()]).collect();
        let s = syzygies(2, 1, &gens, &[], &mut Budget::default()).unwrap();
        for v in s {
            let mut t = Polynomial::zero(2);
            for (vi, gi) in v.iter().zip(g.iter()) {
                t = &t + &(vi * gi);
            }
            prop_assert!(t.is_zero());
        }
    }

    #[test]
    fn print_parse_round_trip(f in arb_poly(3)) {
        let n = names(&["x", "y", "z"]);
        let s = f.fmt_with(&n, &MonomialOrder::grevlex());
        prop_assert_eq!(parse_polynomial(&s, &n).unwrap(), f);
    }

    #[test]
    fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }
}
