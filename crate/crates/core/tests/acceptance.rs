//! The nine acceptance criteria, one PASS/FAIL line each.

mod common;

use std::time::{Duration, Instant};

use qflop_core::derived::*;
use qflop_core::engine::{elimination_ideal, ideal_equal, ideal_lift, syzygies, GroebnerBasis};
use qflop_core::equivariant::*;
use qflop_core::examples::*;
use qflop_core::fm_windows::*;
use qflop_core::homological::*;
use qflop_core::poly::{coeff, Monomial};
use qflop_core::{Budget, GradedRing, MonomialOrder, Polynomial, RingMap, WeightSystem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn b() -> Budget {
    Budget::default()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q_goldens() -> Outcome {
    let qp = q_present(&node(), &mut b()).map_err(err)?;
    ensure(qp.q.describe() == "k[U,P_x,S_y]/(P_x*S_y)", format!("node Q = {}", qp.q.describe()))?;
    ensure(qp.check(&mut b()).map_err(err)?.ok(), "node structure checks")?;
    let free = q_of_free(&weighted_affine(&[1, 1, -1, -1])).map_err(err)?;
    ensure(free.q.describe() == "k[U,P_x1,P_x2,S_x3,S_x4]", format!("affine Q = {}", free.q.describe()))?;
    ensure(free.q.fmt_all(&free.p.images) == ["P_x1", "P_x2", "U*S_x3", "U*S_x4"], "p images")?;
    ensure(free.q.fmt_all(&free.s.images) == ["U*P_x1", "U*P_x2", "S_x3", "S_x4"], "s images")
}

fn property_p_smooth() -> Outcome {
    for w in [&[1, 1, -1, -1][..], &[2, 1, -1, -3]] {
        let rep = property_p_check(&weighted_affine(w), 3, &mut b()).map_err(err)?;
        ensure(rep.conclusion == PVerdict::HasP { tor_certified: true }, format!("{w:?}: {:?}", rep.conclusion))?;
        ensure(rep.tor.route == "koszul" && rep.rho.is_iso(), format!("{w:?}: route {}", rep.tor.route))?;
    }
    Ok(())
}

fn property_p_node() -> Outcome {
    let rep = property_p_check(&node(), 3, &mut b()).map_err(err)?;
    ensure(!rep.has_p(), "node has P")?;
    ensure(rep.rho_witness.as_deref() == Some("P_x*S_y'"), format!("witness {:?}", rep.rho_witness))?;
    ensure(rep.witness_image == Some(("x*y*u_inv*v_inv".into(), true)), format!("image {:?}", rep.witness_image))
}

fn window_transform() -> Outcome {
    let w = WeightSystem::scalar(&[1, 1, -1, -1]);
    for i in [-1, 0] {
        let r = fm_transform_twist(&w, i, (-4, 4), &mut b()).map_err(err)?;
        ensure(r.matches_twist(), format!("i = {i}: {:?}", r.first_mismatch()))?;
    }
    for i in [1, -3] {
        let r = fm_transform_twist(&w, i, (-4, 4), &mut b()).map_err(err)?;
        ensure(!r.matches_twist(), format!("i = {i} not detected"))?;
    }
    Ok(())
}

fn flop_identity() -> Outcome {
    let f = flop_chart_check(&atiyah(2), &mut b()).map_err(err)?;
    ensure(f.charts.len() == 4 && f.all_charts_iso(), "chart verdicts")?;
    ensure(!f.global.is_iso(), "global map is an isomorphism")?;
    ensure(
        f.invariants.describe() == "k[x1_y1,x1_y2,x2_y1,x2_y2]/(x1_y2*x2_y1 - x1_y1*x2_y2)",
        format!("invariants {}", f.invariants.describe()),
    )
}

fn derived_correction() -> Outcome {
    let qd = q_der(&node(), &mut b()).map_err(err)?;
    ensure(qd.dga.describe() == "k[U,P_x,S_y]<e>, d(e) = U*P_x*S_y", qd.dga.describe())?;
    let h0 = qd.dga.h0().map_err(err)?;
    ensure(h0.describe() == "k[U,P_x,S_y]/(U*P_x*S_y)", h0.describe())?;
    let h = dg_homology(&qd.dga, 3, &mut b()).map_err(err)?;
    ensure(h[1..].iter().all(|e| e.vanishes), "higher homology")?;
    let rep = beta_check(&node(), 3, &mut b()).map_err(err)?;
    ensure(rep.has_p_der && rep.table.len() == 4, format!("beta {:?}", rep.table))
}

fn sod_instance() -> Outcome {
    let s = sod_check_node((-2, 2), &mut b()).map_err(err)?;
    ensure(s.degree_window == (-4, 4) && s.entries.len() == 15, "coverage")?;
    match s.entries.iter().find(|e| !e.idempotent) {
        Some(e) => Err(format!("{} not idempotent", e.label)),
        None => Ok(()),
    }
}

fn functoriality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..10 {
        let r = common::random_spec(&mut rng);
        let a = rng.gen_range(-3..=3);
        let (_, v) = q_polynomial_extension_check(&r, a, &mut b()).map_err(err)?;
        ensure(v.is_iso(), format!("extension of {} by weight {a}", r.describe()))?;
        let n = r.nvars();
        let extend = |name: &str, wt: i64| -> Result<RingMap, String> {
            let mut vars = r.vars.clone();
            vars.push(name.into());
            let mut ws: Vec<i64> = (0..n).map(|i| r.weights.scalar_weight(i)).collect();
            ws.push(wt);
            let idx: Vec<usize> = (0..n).collect();
            let rels = r.relations.iter().map(|p| p.embed(n + 1, &idx)).collect();
            let t = GradedRing::new(vars, WeightSystem::scalar(&ws), rels).map_err(err)?;
            RingMap::new(r.clone(), t.clone(), (0..n).map(|i| t.var(i)).collect()).map_err(err)
        };
        let f = extend("z", rng.gen_range(-3..=3))?;
        let g = extend("w", rng.gen_range(-3..=3))?;
        let (_, v) = q_pushout_check(&f, &g, &mut b()).map_err(err)?;
        ensure(v.is_iso(), format!("pushout over {}", r.describe()))?;
    }
    Ok(())
}

fn random_poly(rng: &mut StdRng, n: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let mut e = vec![0u32; n];
        let d = rng.gen_range(0..=3);
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(-3..=3);
        if c != 0 {
            p.add_term(Monomial::from_exponents(e), coeff(c));
        }
    }
    p
}

fn engine_oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(99);
    let mut cases = 0;
    let order = MonomialOrder::grevlex();
    while cases < 500 {
        let n = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> =
            (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, n)).filter(|p| !p.is_zero()).collect();
        if gens.is_empty() {
            continue;
        }
        let gb = GroebnerBasis::compute(n, &gens, &order, &mut b()).map_err(err)?;
        // Members built from explicit cofactors.
        let mut f = Polynomial::zero(n);
        for g in &gens {
            f = &f + &(&random_poly(&mut rng, n) * g);
        }
        ensure(gb.nf(&f).is_zero(), "constructed member does not reduce to zero")?;
        // Membership and lifting agree on an arbitrary element.
        let h = random_poly(&mut rng, n);
        let lift = ideal_lift(n, &gens, &h, &mut b()).map_err(err)?;
        ensure(gb.nf(&h).is_zero() == lift.is_some(), "membership and lift disagree")?;
        if let Some(c) = lift {
            let sum = c.iter().zip(&gens).fold(Polynomial::zero(n), |acc, (a, g)| &acc + &(a * g));
            ensure(sum == h, "lift cofactors do not recombine")?;
        }
        let vs: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
        for s in syzygies(n, 1, &vs, &[], &mut b()).map_err(err)? {
            let sum = s.iter().zip(&gens).fold(Polynomial::zero(n), |acc, (a, g)| &acc + &(a * g));
            ensure(sum.is_zero(), "syzygy does not vanish")?;
        }
        cases += 1;
    }
    // Scaled twisted cubics (l s^3, s^2 t, s t^2, m t^3).
    for _ in 0..20 {
        let l = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let m = rng.gen_range(1..=5);
        let names: Vec<String> = ["s", "t", "x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        let pp = |s: &str| qflop_core::poly::parse_polynomial(s, &names).unwrap();
        let gens = [
            &pp("x") - &pp("s^3").scale(&coeff(l)),
            pp("y - s^2*t"),
            pp("z - s*t^2"),
            &pp("w") - &pp("t^3").scale(&coeff(m)),
        ];
        let keep = [false, false, true, true, true, true];
        let elim = elimination_ideal(6, &gens, &keep, &mut b()).map_err(err)?;
        let oracle = [
            &pp("y^2").scale(&coeff(l)) - &pp("x*z"),
            &pp("z^2").scale(&coeff(m)) - &pp("y*w"),
            &pp("y*z").scale(&coeff(l * m)) - &pp("x*w"),
        ];
        ensure(ideal_equal(6, &elim, &oracle, &mut b()).map_err(err)?, format!("twisted cubic {l}, {m}"))?;
    }
    Ok(())
}

// Custom harness: the per-criterion lines are the output.
fn main() {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("1 Q-presentation goldens", 5, q_goldens),
        ("2 Property P, smooth side", 30, property_p_smooth),
        ("3 Property P failure on the node", 30, property_p_node),
        ("4 window transform", 60, window_transform),
        ("5 flop identity", 60, flop_identity),
        ("6 derived correction", 60, derived_correction),
        ("7 SOD instance", 120, sod_instance),
        ("8 functorial properties", 120, functoriality),
        ("9 engine oracle suite", 120, engine_oracles),
    ];
    let mut failed = Vec::new();
    for (name, limit, run) in criteria {
        let t = Instant::now();
        let out = run();
        let took = t.elapsed();
        let verdict = match (&out, took <= Duration::from_secs(limit)) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over {limit} s)"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!("{verdict:<4} criterion {name} [{:.2} s]", took.as_secs_f64());
        if !verdict.starts_with("PASS") {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
