use clap::Parser;
use qflop::registry::registry;
use qflop::{render, run, Cli, Command, Format, Report};

fn cli(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("qflop").chain(args.iter().copied())).unwrap()
}

fn report(args: &[&str]) -> Report {
    run(&cli(args)).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn applicable(c: Command, name: &str, free: bool, scalar: bool) -> bool {
    match c {
        Command::Fm | Command::Window | Command::FlopCheck => free && scalar,
        Command::SodCheck => name == "node",
        Command::TorusQ | Command::SelfTest => true,
        _ => scalar,
    }
}

#[test]
fn every_registry_ring_runs_every_applicable_command() {
    for spec in registry() {
        let name = spec.name.clone().unwrap();
        let ring = spec.to_ring().unwrap();
        for c in Command::ALL {
            let args = cli(&[c.name(), &name]);
            let out = run(&args);
            if applicable(c, &name, ring.is_free(), ring.dim() == 1) {
                let rep = out.unwrap_or_else(|e| panic!("{name} {}: {e}", c.name()));
                assert_eq!(rep.schema, 1);
                assert_eq!(rep.command, c.name());
                assert!(rep.budget.steps <= rep.budget.max_steps);
            } else {
                let e = out.err().unwrap_or_else(|| panic!("{name} {} should be rejected", c.name()));
                assert_eq!(e.exit_code(), qflop::error::EXIT_INVALID, "{name} {}", c.name());
            }
        }
    }
}

#[test]
fn json_round_trip() {
    for args in
        [&["present-q", "node"][..], &["property-p", "node"], &["fm", "line", "--twist", "-1"], &["sod-check", "node"]]
    {
        let rep = report(args);
        let text = render(&rep, Format::Json);
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema"], 1);
    }
}

#[test]
fn output_is_deterministic() {
    for c in ["present-q", "charts", "property-p", "flop-check", "derived-q"] {
        let a = render(&report(&[c, "atiyah2"]), Format::Json);
        let b = render(&report(&[c, "atiyah2"]), Format::Json);
        assert_eq!(a, b, "{c}");
        assert!(!a.contains("timing_ms"));
    }
}

#[test]
fn node_verdicts() {
    let p = report(&["property-p", "node"]);
    assert_eq!(p.verdicts["property_p"], "fails_P");
    assert_eq!(p.witnesses["rho_kernel"], "P_x*S_y'");
    let q = report(&["present-q", "node"]);
    assert_eq!(q.witnesses["Q"], "k[U,P_x,S_y]/(P_x*S_y)");
    let d = report(&["derived-q", "node"]);
    assert_eq!(d.verdicts["h0_equals_q"], false);
    assert_eq!(d.verdicts["cone_h1_nonzero"], true);
    assert_eq!(report(&["sod-check", "node"]).verdicts["all_idempotent"], true);
    assert_eq!(report(&["beta-check", "node"]).verdicts["has_P_der"], true);
}

#[test]
fn window_and_flop_on_the_conifold() {
    let f = report(&["fm", "atiyah2", "--twist", "-1", "--window", "-5:5"]);
    assert_eq!(f.verdicts["matches_twist"], true);
    assert_eq!(f.verdicts["in_window"], true);
    let f = report(&["fm", "atiyah2", "--twist", "1", "--window", "-2:2"]);
    assert_eq!(f.verdicts["matches_twist"], false);
    assert!(f.witnesses.contains_key("first_mismatch"));
    let w = report(&["window", "atiyah2", "--window", "-2:2"]);
    assert_eq!(w.verdicts["window_verified"], true);
    let fl = report(&["flop-check", "atiyah2"]);
    assert_eq!(fl.verdicts["all_charts_iso"], true);
    assert_eq!(fl.verdicts["global_iso"], false);
    let wc = report(&["wall-cross", "atiyah2"]);
    assert_eq!(wc.verdicts["calabi_yau"], true);
}

#[test]
fn option_precedence() {
    // atiyah3 carries degree_window [-3, 3] in its document
    assert_eq!(report(&["wall-cross", "atiyah3"]).options.window, (-3, 3));
    assert_eq!(report(&["wall-cross", "atiyah3", "--window", "-1:2"]).options.window, (-1, 2));
    assert_eq!(report(&["wall-cross", "node"]).options.window, (-5, 5));
    let r = report(&["wall-cross", "node", "--tor-bound", "5", "--homology-bound", "2"]);
    assert_eq!((r.options.tor_bound, r.options.homology_bound), (5, 2));
    assert_eq!(report(&["property-p", "node", "--budget-size", "500"]).budget.max_basis, 500);
}

#[test]
fn budget_exhaustion_is_distinct() {
    let e = run(&cli(&["present-q", "atiyah3", "--budget-steps", "5"])).unwrap_err();
    assert_eq!(e.exit_code(), qflop::error::EXIT_BUDGET);
}

#[test]
fn flag_parsing() {
    assert!(Cli::try_parse_from(["qflop", "fm", "line", "--window", "3:1"]).is_err());
    assert!(Cli::try_parse_from(["qflop", "fm", "line", "--window", "3"]).is_err());
    assert!(Cli::try_parse_from(["qflop", "frobnicate", "line"]).is_err());
    assert_eq!(cli(&["fm", "line", "--window", "-4:-1"]).window, Some((-4, -1)));
    let e = run(&cli(&["fm"])).unwrap_err();
    assert_eq!(e.exit_code(), qflop::error::EXIT_INVALID);
}

#[test]
fn self_test_passes() {
    assert_eq!(report(&["self-test"]).verdicts["all_passed"], true);
}
