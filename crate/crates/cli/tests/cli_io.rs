//! Binary-level behavior: argument handling, stdin, exit codes, error
//! diagnostics, and byte stability of the printed reports.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_levelable-kit");

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("run binary")
}

fn run_with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child
        .stdin
        .as_mut()
        .expect("piped stdin")
        .write_all(stdin)
        .expect("write stdin");
    child.wait_with_output().expect("wait for binary")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.stderr.is_empty(),
        "unexpected stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("JSON on stdout")
}

#[test]
fn dash_reads_the_same_document_from_stdin() {
    let path = fixture("leaf_pair.json");
    let from_file = run(&["socle", &path]);
    let from_stdin = run_with_stdin(&["socle", "-"], &std::fs::read(&path).unwrap());
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, from_stdin.stdout);
}

#[test]
fn reruns_are_byte_identical() {
    let path = fixture("leaf_pair.json");
    for subcommand in ["socle", "levelable", "construct", "oracle"] {
        let first = run(&[subcommand, &path]);
        let second = run(&[subcommand, &path]);
        assert_eq!(first.stdout, second.stdout, "{subcommand} output drifted");
        assert!(first.stdout.ends_with(b"}\n"), "{subcommand} missing newline");
    }
}

#[test]
fn exit_codes_encode_the_verdict() {
    let levelable = run(&["levelable", &fixture("leaf_pair.json")]);
    assert_eq!(levelable.status.code(), Some(0));

    let family = run(&["family", "7"]);
    let not_levelable = run_with_stdin(&["levelable", "-"], &family.stdout);
    assert_eq!(not_levelable.status.code(), Some(1));

    let garbage = run_with_stdin(&["levelable", "-"], b"{ not json");
    assert_eq!(garbage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&garbage.stderr).contains("error:"));
}

#[test]
fn socle_report_shape_is_stable() {
    let output = run(&["socle", &fixture("leaf_pair.json")]);
    let v = stdout_json(&output);
    assert_eq!(v["h_vector"], serde_json::json!([1, 4, 5, 2]));
    assert_eq!(v["socle_vector"], serde_json::json!([0, 0, 0, 2]));
    assert_eq!(v["socle_degree"], serde_json::json!(3));
    assert_eq!(v["type"], serde_json::json!(2));
    assert_eq!(v["is_level"], serde_json::json!(true));
    assert_eq!(v["is_gorenstein"], serde_json::json!(false));
}

#[test]
fn normalize_flag_drops_exponent_one_vertices() {
    let doc = br#"{
        "vertices": ["x1", "x2", "x3"],
        "facets": [["x1", "x2"], ["x2", "x3"]],
        "exponents": [2, 2, 1]
    }"#;
    let rejected = run_with_stdin(&["socle", "-"], doc);
    assert_eq!(rejected.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&rejected.stderr).contains("--normalize"));

    let normalized = run_with_stdin(&["socle", "--normalize", "-"], doc);
    assert_eq!(normalized.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&normalized.stdout).unwrap();
    assert_eq!(v["is_gorenstein"], serde_json::json!(true));
}

#[test]
fn construct_strategy_flag_selects_and_rejects() {
    let forest = run(&["construct", "--strategy", "forest", &fixture("leaf_pair.json")]);
    assert_eq!(forest.status.code(), Some(0));
    let v = stdout_json(&forest);
    assert_eq!(v["strategy"], serde_json::json!("forest"));
    assert_eq!(v["certificate"], serde_json::json!([2, 2, 2, 3]));
    assert_eq!(v["verified"], serde_json::json!(true));

    let pure = run(&["construct", "--strategy", "pure", &fixture("leaf_pair.json")]);
    assert_eq!(pure.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&pure.stderr).contains("strategy pure inapplicable"),
        "stderr: {}",
        String::from_utf8_lossy(&pure.stderr)
    );
}

#[test]
fn construct_auto_on_family_reports_the_solver_verdict() {
    let family = run(&["family", "5"]);
    let construct = run_with_stdin(&["construct", "-"], &family.stdout);
    assert_eq!(construct.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&construct.stdout).unwrap();
    assert_eq!(v["strategy"], serde_json::json!("solver"));
    assert_eq!(v["verdict"], serde_json::json!("NOT_LEVELABLE"));
}

#[test]
fn graph_subcommand_reports_the_independence_data() {
    let doc = br#"{
        "vertices": ["x1", "x2", "x3"],
        "edges": [["x1", "x2"], ["x1", "x3"], ["x2", "x3"]]
    }"#;
    let output = run_with_stdin(&["graph", "-"], doc);
    assert_eq!(output.status.code(), Some(0));
    let v = stdout_json(&output);
    assert_eq!(
        v["independence_complex"],
        serde_json::json!([["x1"], ["x2"], ["x3"]])
    );
    assert_eq!(v["max_independent_set_count"], serde_json::json!(3));
    assert_eq!(v["type"], serde_json::json!(3));
    assert_eq!(
        v["betti_tail"],
        serde_json::json!([{"shift": 4, "multiplicity": 3}])
    );
}

#[test]
fn oracle_max_box_flag_caps_the_enumeration() {
    let within = run(&["oracle", &fixture("leaf_pair.json")]);
    assert_eq!(within.status.code(), Some(0));
    assert_eq!(stdout_json(&within)["match"], serde_json::json!(true));

    let capped = run(&["oracle", "--max-box", "4", &fixture("leaf_pair.json")]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
}

#[test]
fn diagnostics_name_the_offending_input() {
    let missing = run(&["socle", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/no/such/file.json"));

    let unknown_label = run_with_stdin(
        &["levelable", "-"],
        br#"{"vertices": ["x1"], "facets": [["x9"]]}"#,
    );
    assert_eq!(unknown_label.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&unknown_label.stderr).into_owned();
    assert!(stderr.contains("x9"), "stderr: {stderr}");

    let bad_n = run(&["family", "3"]);
    assert_eq!(bad_n.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_n.stderr).contains("n = 5"));
}

#[test]
fn help_lists_all_subcommands() {
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    let text = String::from_utf8_lossy(&help.stdout).into_owned();
    for name in ["socle", "levelable", "construct", "family", "graph", "oracle"] {
        assert!(text.contains(name), "help is missing {name}");
    }
}
