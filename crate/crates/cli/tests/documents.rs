use qflop::registry::{lookup, registry};
use qflop::{parse_ring_spec, CliError, RingSpec};

fn err(text: &str) -> String {
    match parse_ring_spec(text) {
        Ok((_, r)) => panic!("accepted {}", r.describe()),
        Err(e) => {
            assert_eq!(e.exit_code(), qflop::error::EXIT_INVALID);
            e.to_string()
        }
    }
}

#[test]
fn unknown_variable_is_named() {
    let m = err(r#"{"variables":[{"name":"x","weight":1},{"name":"y","weight":-1}],"relations":["x*z"]}"#);
    assert!(m.contains("relation 1") && m.contains('z'), "{m}");
}

#[test]
fn inhomogeneous_relation_lists_degrees() {
    let m = err(r#"{"variables":[{"name":"x","weight":1},{"name":"y","weight":-1}],"relations":["x*y + x"]}"#);
    assert!(m.contains("relation 1"), "{m}");
    assert!(m.contains("term degrees 0, 1"), "{m}");
}

#[test]
fn duplicate_and_bad_names() {
    let m = err(r#"{"variables":[{"name":"x","weight":1},{"name":"x","weight":-1}],"relations":[]}"#);
    assert!(m.contains("duplicate variable 'x'"), "{m}");
    let m = err(r#"{"variables":[{"name":"1x","weight":1}],"relations":[]}"#);
    assert!(m.contains("invalid variable name"), "{m}");
}

#[test]
fn weight_lengths_must_agree() {
    let m = err(r#"{"variables":[{"name":"x","weight":[1,0]},{"name":"y","weight":1}],"relations":[]}"#);
    assert!(m.contains("same positive length"), "{m}");
}

#[test]
fn malformed_json_reports_position() {
    let m = err("{\n  \"variables\": [\n    {\"name\": \"x\", \"weight\": 1,}\n  ]\n}");
    assert!(m.contains("line 3"), "{m}");
    let m = err(r#"{"variables":[],"relations":[],"colour":1}"#);
    assert!(m.contains("colour"), "{m}");
}

#[test]
fn example_files_match_registry() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples");
    let mut seen = 0;
    for spec in registry() {
        let name = spec.name.clone().unwrap();
        let text = std::fs::read_to_string(format!("{dir}/{name}.json")).unwrap();
        let (parsed, ring) = parse_ring_spec(&text).unwrap();
        assert_eq!(parsed, spec, "{name}");
        assert_eq!(ring, spec.to_ring().unwrap(), "{name}");
        seen += 1;
    }
    assert_eq!(std::fs::read_dir(dir).unwrap().count(), seen);
}

#[test]
fn document_round_trips_through_from_ring() {
    for spec in registry() {
        let ring = spec.to_ring().unwrap();
        let again = RingSpec::from_ring(spec.name.as_deref().unwrap(), &ring);
        assert_eq!(again.to_ring().unwrap(), ring);
        let json = serde_json::to_string(&spec).unwrap();
        let back: RingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }
    assert!(lookup("node").is_some());
    assert!(lookup("nope").is_none());
}

#[test]
fn missing_file_is_io_error() {
    let e = qflop::load_spec("/nonexistent/ring.json").unwrap_err();
    assert!(matches!(e, CliError::Io(..)));
    assert_eq!(e.exit_code(), qflop::error::EXIT_INVALID);
}
