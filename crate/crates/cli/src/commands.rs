//! One function per command; each fills a `Report`.

use serde_json::{json, Value};

use qflop_core::derived::{beta_check, dg_homology, q_der, s_der_cone, sod_check_node};
use qflop_core::equivariant::{loci, loci_agree, q_present, quotient_chart, semistable_charts, torus_q};
use qflop_core::examples::{atiyah, node, weighted_affine};
use qflop_core::fm_windows::{flop_chart_check, fm_transform_twist, mu, wall_crossing_report, Sign, WindowSpec};
use qflop_core::homological::{property_p_check, PVerdict};
use qflop_core::{Budget, Error, GradedRing, WeightSystem};

use crate::error::CliError;
use crate::report::{Effective, Report, Table};
use crate::spec::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    PresentQ,
    Loci,
    Charts,
    PropertyP,
    Fm,
    Window,
    FlopCheck,
    WallCross,
    DerivedQ,
    BetaCheck,
    SodCheck,
    TorusQ,
    SelfTest,
}

impl Command {
    pub const ALL: [Command; 13] = [
        Command::PresentQ,
        Command::Loci,
        Command::Charts,
        Command::PropertyP,
        Command::Fm,
        Command::Window,
        Command::FlopCheck,
        Command::WallCross,
        Command::DerivedQ,
        Command::BetaCheck,
        Command::SodCheck,
        Command::TorusQ,
        Command::SelfTest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::PresentQ => "present-q",
            Command::Loci => "loci",
            Command::Charts => "charts",
            Command::PropertyP => "property-p",
            Command::Fm => "fm",
            Command::Window => "window",
            Command::FlopCheck => "flop-check",
            Command::WallCross => "wall-cross",
            Command::DerivedQ => "derived-q",
            Command::BetaCheck => "beta-check",
            Command::SodCheck => "sod-check",
            Command::TorusQ => "torus-q",
            Command::SelfTest => "self-test",
        }
    }
}

type Out = Result<(), CliError>;

fn invalid(m: impl Into<String>) -> CliError {
    CliError::Core(Error::InvalidInput(m.into()))
}

fn scalar_weights(r: &GradedRing) -> Result<WeightSystem, CliError> {
    if r.dim() != 1 {
        return Err(invalid("this command needs a Z-grading"));
    }
    Ok(r.weights.clone())
}

fn free_scalar(r: &GradedRing) -> Result<WeightSystem, CliError> {
    if !r.is_free() {
        return Err(invalid("this command needs a ring without relations"));
    }
    scalar_weights(r)
}

pub fn dispatch(
    cmd: Command,
    spec: Option<&RingSpec>,
    r: &GradedRing,
    o: &Effective,
    rep: &mut Report,
    budget: &mut Budget,
) -> Out {
    match cmd {
        Command::PresentQ => present_q(r, rep, budget),
        Command::Loci => loci_cmd(r, rep, budget),
        Command::Charts => charts(r, rep, budget),
        Command::PropertyP => property_p(r, o, rep, budget),
        Command::Fm => fm(r, o, rep, budget),
        Command::Window => window(r, o, rep, budget),
        Command::FlopCheck => flop(r, rep, budget),
        Command::WallCross => wall_cross(r, rep),
        Command::DerivedQ => derived(r, o, rep, budget),
        Command::BetaCheck => beta(r, o, rep, budget),
        Command::SodCheck => sod(r, rep, budget),
        Command::TorusQ => torus(spec, r, rep, budget),
        Command::SelfTest => self_test(rep, budget),
    }
}

fn present_q(r: &GradedRing, rep: &mut Report, budget: &mut Budget) -> Out {
    let qp = q_present(r, budget)?;
    let c = qp.check(budget)?;
    rep.verdict("structure_ok", c.ok());
    rep.verdict("eta_p_is_pi", c.eta_p_is_pi);
    rep.verdict("eta_s_is_sigma", c.eta_s_is_sigma);
    rep.verdict("eta_injective", c.eta_injective);
    rep.verdict("degrees_ok", c.degrees_ok);
    rep.verdict("relations_vanish", c.relations_vanish);
    rep.witness("Q", qp.q.describe());
    let mut gens = Table::new(&["generator", "degree", "eta"]);
    for (i, v) in qp.q.vars.iter().enumerate() {
        gens.push(vec![
            json!(v),
            json!(qp.q.weights.weight(i).to_string()),
            json!(qp.eta.target.fmt(&qp.eta.images[i])),
        ]);
    }
    rep.table("generators", gens);
    let mut maps = Table::new(&["variable", "p", "s"]);
    for (i, v) in r.vars.iter().enumerate() {
        maps.push(vec![json!(v), json!(qp.q.fmt(&qp.p.images[i])), json!(qp.q.fmt(&qp.s.images[i]))]);
    }
    rep.table("structure maps", maps);
    Ok(())
}

fn loci_cmd(r: &GradedRing, rep: &mut Report, budget: &mut Budget) -> Out {
    let l = loci(r, budget)?;
    let qp = q_present(r, budget)?;
    rep.verdict("loci_agree", loci_agree(&qp, budget)?);
    rep.witness("I+", format!("({})", r.fmt_all(&l.i_plus).join(", ")));
    rep.witness("I-", format!("({})", r.fmt_all(&l.i_minus).join(", ")));
    rep.witness("R+", l.r_plus.describe());
    rep.witness("R-", l.r_minus.describe());
    rep.witness("R0", l.r_zero.describe());
    Ok(())
}

fn charts(r: &GradedRing, rep: &mut Report, budget: &mut Budget) -> Out {
    let c = semistable_charts(r, budget)?;
    rep.verdict("empty_cover", c.empty_cover);
    rep.verdict("chart_count", c.charts.len());
    let mut t = Table::new(&["element", "chart", "quotient"]);
    for ch in &c.charts {
        let quotient = if c.empty_cover {
            "-".to_string()
        } else {
            match quotient_chart(r, &ch.element, budget) {
                Ok(q) => q.describe(),
                Err(Error::InvalidInput(_)) => "-".to_string(),
                Err(e) => return Err(e.into()),
            }
        };
        t.push(vec![json!(r.fmt(&ch.element)), json!(ch.simplified.describe()), json!(quotient)]);
    }
    rep.table("charts", t);
    Ok(())
}

fn property_p(r: &GradedRing, o: &Effective, rep: &mut Report, budget: &mut Budget) -> Out {
    scalar_weights(r)?;
    let p = property_p_check(r, o.tor_bound, budget)?;
    let verdict = match &p.conclusion {
        PVerdict::HasP { .. } => "has_P",
        PVerdict::FailsP(_) => "fails_P",
    };
    rep.verdict("property_p", verdict);
    if let PVerdict::FailsP(why) = &p.conclusion {
        rep.witness("reason", why.clone());
    }
    rep.verdict("rho_injective", p.rho.injective);
    rep.verdict("rho_surjective", p.rho.surjective);
    rep.verdict("routes_agree", p.routes_agree);
    rep.verdict("tor_route", p.tor.route);
    rep.verdict("tor_certified_all_degrees", p.tor.certified_all);
    if let Some(w) = &p.rho_witness {
        rep.witness("rho_kernel", w.clone());
    }
    if let Some((img, zero)) = &p.witness_image {
        rep.witness("rho_kernel_laurent_image", img.clone());
        rep.verdict("rho_kernel_image_is_zero", *zero);
    }
    let mut t = Table::new(&["i", "vanishes", "classes"]);
    for e in &p.tor.entries {
        t.push(vec![json!(e.index), json!(e.vanishes), json!(e.classes)]);
    }
    rep.table("Tor", t);
    Ok(())
}

fn fm(r: &GradedRing, o: &Effective, rep: &mut Report, budget: &mut Budget) -> Out {
    let w = free_scalar(r)?;
    let i = o.twist.unwrap_or(0);
    let f = fm_transform_twist(&w, i, o.window, budget)?;
    rep.verdict("twist", i);
    rep.verdict("in_window", f.in_window);
    rep.verdict("matches_twist", f.matches_twist());
    rep.verdict("h0_matches", f.h0_matches);
    rep.verdict("higher_vanish", f.higher_vanish);
    if let Some(g) = &f.generator {
        rep.witness("generator", g.clone());
    }
    if let Some(m) = f.first_mismatch() {
        rep.witness(
            "first_mismatch",
            format!(
                "bidegree ({}, {}): cohomology {:?}, expected H^0 {}",
                m.bidegree.0, m.bidegree.1, m.cohomology, m.expected_h0
            ),
        );
    }
    let mut t = Table::new(&["A", "B", "cohomology", "expected H^0"]);
    for c in &f.cells {
        t.push(vec![json!(c.bidegree.0), json!(c.bidegree.1), json!(c.cohomology), json!(c.expected_h0)]);
    }
    rep.table(&format!("R({i})"), t);
    Ok(())
}

fn window(r: &GradedRing, o: &Effective, rep: &mut Report, budget: &mut Budget) -> Out {
    let w = free_scalar(r)?;
    let m = mu(&w, Sign::Plus);
    let spec = WindowSpec::new(m);
    rep.verdict("mu_plus", m);
    rep.verdict("generators", spec.twists());
    let mut t = Table::new(&["twist", "in_window", "matches"]);
    let mut agree = true;
    for i in (m.min(0))..=1 {
        let f = fm_transform_twist(&w, i, o.window, budget)?;
        agree &= f.in_window == f.matches_twist();
        t.push(vec![json!(i), json!(f.in_window), json!(f.matches_twist())]);
    }
    rep.verdict("window_verified", agree);
    rep.table("twists", t);
    Ok(())
}

fn flop(r: &GradedRing, rep: &mut Report, budget: &mut Budget) -> Out {
    scalar_weights(r)?;
    let f = flop_chart_check(r, budget)?;
    rep.verdict("global_iso", f.global.is_iso());
    rep.verdict("global_injective", f.global.injective);
    rep.verdict("global_surjective", f.global.surjective);
    rep.verdict("all_charts_iso", f.all_charts_iso());
    rep.witness("invariants", f.invariants.describe());
    rep.witness("fiber_product", f.fiber_product.describe());
    if !f.global.missing.is_empty() {
        let qp = q_present(r, budget)?;
        let names: Vec<&str> = f.global.missing.iter().map(|&k| qp.q.vars[k].as_str()).collect();
        rep.witness("missing_generators", names.join(", "));
    }
    let mut t = Table::new(&["chart", "iso"]);
    for (a, b, v) in &f.charts {
        t.push(vec![json!(format!("{a} != 0, {b} != 0")), json!(v.is_iso())]);
    }
    rep.table("charts", t);
    Ok(())
}

fn wall_cross(r: &GradedRing, rep: &mut Report) -> Out {
    let w = scalar_weights(r)?;
    let c = wall_crossing_report(&w);
    rep.verdict("mu_plus", c.mu_plus);
    rep.verdict("mu_minus", c.mu_minus);
    rep.verdict("window_plus", c.window_plus.twists());
    rep.verdict("window_minus", c.window_minus.twists());
    rep.verdict("twist", c.twist);
    rep.verdict("calabi_yau", c.calabi_yau);
    rep.verdict("literal_sum_zero", c.literal_sum_zero);
    Ok(())
}

fn derived(r: &GradedRing, o: &Effective, rep: &mut Report, budget: &mut Budget) -> Out {
    scalar_weights(r)?;
    let qd = q_der(r, budget)?;
    rep.witness("resolution", qd.resolution.describe());
    rep.witness("Q_der", qd.dga.describe());
    rep.witness("H0", qd.dga.h0()?.describe());
    let h = dg_homology(&qd.dga, o.homology_bound, budget)?;
    rep.verdict("higher_homology_vanishes", h.iter().skip(1).all(|e| e.vanishes));
    let mut t = Table::new(&["i", "vanishes", "classes"]);
    for e in &h {
        t.push(vec![json!(e.index), json!(e.vanishes), json!(e.classes)]);
    }
    rep.table("homology", t);
    let (_, v) = qd.h0_to_q(r, budget)?;
    rep.verdict("h0_equals_q", v.is_iso());
    let cone_window = o.window.0.abs().max(o.window.1.abs()).min(3);
    match s_der_cone(r, cone_window, budget) {
        Ok(c) => {
            rep.verdict("cone_h1_nonzero", c.h1_nonzero());
            rep.verdict("cone_h0_nonzero", c.h0_nonzero());
            rep.verdict("cone_long_exact_sequence_ok", c.les_ok);
            rep.witness("cone_h1_generators", format!("({})", c.kernel.join(", ")));
        }
        Err(Error::InvalidInput(m)) => rep.witness("cone", format!("skipped: {m}")),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn beta(r: &GradedRing, o: &Effective, rep: &mut Report, budget: &mut Budget) -> Out {
    scalar_weights(r)?;
    let b = beta_check(r, o.homology_bound, budget)?;
    rep.verdict("has_P_der", b.has_p_der);
    rep.verdict("base_iso", b.base_iso.is_iso());
    rep.verdict("differential_compatible", b.compatible);
    rep.verdict("h0_iso", b.h0_iso.is_iso());
    rep.witness("source", b.source.describe());
    rep.witness("target", b.target.describe());
    let mut t = Table::new(&["i", "source vanishes", "target vanishes"]);
    for (i, a, c) in &b.table {
        t.push(vec![json!(i), json!(a), json!(c)]);
    }
    rep.table("homology", t);
    Ok(())
}

fn sod(r: &GradedRing, rep: &mut Report, budget: &mut Budget) -> Out {
    if *r != node() {
        return Err(invalid("sod-check is implemented for the node k[x,y]/(x*y), deg x = 1, deg y = -1"));
    }
    let s = sod_check_node((-2, 2), budget)?;
    rep.verdict("all_idempotent", s.all_idempotent());
    let mut t = Table::new(&["module", "phi", "idempotent", "fixed", "free", "dims in", "dims out"]);
    for e in &s.entries {
        t.push(vec![
            json!(e.label),
            json!(e.output.describe()),
            json!(e.idempotent),
            json!(e.fixed),
            json!(e.output_free),
            json!(e.dims_in),
            json!(e.dims_out),
        ]);
    }
    rep.table(&format!("degrees {}..{}", s.degree_window.0, s.degree_window.1), t);
    Ok(())
}

fn torus(spec: Option<&RingSpec>, r: &GradedRing, rep: &mut Report, budget: &mut Budget) -> Out {
    let monoid = match spec.and_then(|s| s.torus.as_ref()) {
        Some(t) => t.monoid.clone(),
        None => (0..r.dim()).map(|k| (0..r.dim()).map(|j| i64::from(j == k)).collect()).collect(),
    };
    let t = torus_q(r, &monoid, budget)?;
    rep.verdict("monoid", Value::from(monoid.iter().map(|c| Value::from(c.clone())).collect::<Vec<_>>()));
    rep.witness("Q", t.q.describe());
    rep.witness("unstable", format!("({})", t.base.fmt_all(&t.unstable).join(", ")));
    let mut g = Table::new(&["generator", "degree", "eta"]);
    for (i, v) in t.q.vars.iter().enumerate() {
        g.push(vec![json!(v), json!(t.q.weights.weight(i).to_string()), json!(t.eta.target.fmt(&t.eta.images[i]))]);
    }
    rep.table("generators", g);
    Ok(())
}

fn self_test(rep: &mut Report, budget: &mut Budget) -> Out {
    let mut t = Table::new(&["check", "passed"]);
    let mut all = true;
    let mut record = |name: &str, ok: bool| {
        all &= ok;
        t.push(vec![json!(name), json!(ok)]);
    };
    let qn = q_present(&node(), budget)?;
    record("Q(node) = k[U,P_x,S_y]/(P_x*S_y)", qn.q.describe() == "k[U,P_x,S_y]/(P_x*S_y)");
    record("node fails property P", !property_p_check(&node(), 2, budget)?.has_p());
    record("atiyah2 has property P", property_p_check(&atiyah(2), 2, budget)?.has_p());
    let conifold = WeightSystem::scalar(&[1, 1, -1, -1]);
    record("R(-1) in the window", fm_transform_twist(&conifold, -1, (-3, 3), budget)?.matches_twist());
    record("R(1) outside the window", !fm_transform_twist(&conifold, 1, (-3, 3), budget)?.matches_twist());
    record("flop charts of atiyah2", flop_chart_check(&atiyah(2), budget)?.all_charts_iso());
    record("beta on the node", beta_check(&node(), 3, budget)?.has_p_der);
    record("Phi idempotent on the node", sod_check_node((-1, 1), budget)?.all_idempotent());
    record("Q of k[x1,x2] weights (1,-1) is free", q_present(&weighted_affine(&[1, -1]), budget)?.q.is_free());
    rep.verdict("all_passed", all);
    rep.table("checks", t);
    Ok(())
}
