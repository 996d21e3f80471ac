use std::process::{Command, Output};

fn qflop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qflop")).args(args).env_remove("QFLOP_BUDGET_STEPS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn property_p_node_is_negative_but_succeeds() {
    let o = qflop(&["property-p", "node", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdicts"]["property_p"], "fails_P");
    assert_eq!(v["witnesses"]["rho_kernel"], "P_x*S_y'");
}

#[test]
fn fm_twist_in_window() {
    let o = qflop(&["fm", "atiyah2", "--twist", "-1", "--window", "-5:5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("matches_twist: true"), "{s}");
    assert!(s.contains("generator: U"), "{s}");
}

#[test]
fn flop_check_text() {
    let o = qflop(&["flop-check", "atiyah2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all_charts_iso: true"));
}

#[test]
fn document_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.json");
    std::fs::write(&path, r#"{"variables":[{"name":"a","weight":2},{"name":"b","weight":-1}],"relations":[]}"#)
        .unwrap();
    let o = qflop(&["present-q", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);

    std::fs::write(&path, r#"{"variables":[{"name":"a","weight":2}],"relations":["a + 1"]}"#).unwrap();
    let o = qflop(&["present-q", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("relation 1"));
}

#[test]
fn exit_codes() {
    assert_eq!(qflop(&["present-q", "atiyah3", "--budget-steps", "5"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_qflop"))
        .args(["present-q", "atiyah3"])
        .env("QFLOP_BUDGET_STEPS", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(qflop(&["sod-check", "line"]).status.code(), Some(2));
    assert_eq!(qflop(&["fm", "no-such-ring"]).status.code(), Some(2));
    assert_eq!(qflop(&["self-test"]).status.code(), Some(0));
}

#[test]
fn timing_is_opt_in() {
    let plain = stdout(&qflop(&["loci", "node", "--format", "json"]));
    assert!(!plain.contains("timing_ms"));
    let timed = stdout(&qflop(&["loci", "node", "--format", "json", "--timing"]));
    assert!(timed.contains("timing_ms"));
}
