//! End-to-end checks of the command-line interface: pipelines, exit codes,
//! file I/O and report determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torusgraph"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_and_invariants_pipeline() {
    let graph = run(&["generate", "m1", "--k", "2"]);
    assert!(graph.status.success());
    let report = run_with_stdin(&["invariants"], &stdout(&graph));
    assert!(report.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&report)).unwrap();
    assert_eq!(json["chern_numbers"]["c1^3"], "62");
    assert_eq!(json["chern_numbers"]["c1c2"], "24");
    assert_eq!(json["chern_numbers"]["c3"], "6");
    assert_eq!(json["euler"], 6);
    assert_eq!(json["certified"], true);
    assert_eq!(json["chi_y"], serde_json::json!([1, 2, 2, 1]));
}

#[test]
fn invariants_fast_mode_is_uncertified() {
    let graph = stdout(&run(&["generate", "m2", "--k", "1", "--l", "-1"]));
    let report = run_with_stdin(&["invariants", "--fast"], &graph);
    assert!(report.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&report)).unwrap();
    assert_eq!(json["chern_numbers"]["c1^3"], "54");
    assert_eq!(json["certified"], false);
}

#[test]
fn validate_exit_codes() {
    // Valid graph at the requested level: exit 0.
    let graph = stdout(&run(&["generate", "triangle"]));
    let ok = run_with_stdin(&["validate", "--level", "torus"], &graph);
    assert!(ok.status.success());

    // A self-loop fails the multigraph level: exit 1, violation named.
    let bad = r#"{"rank":1,"half_dim":1,"vertices":["u"],"edges":[{"from":"u","to":"u","label":[1]}]}"#;
    let fail = run_with_stdin(&["validate", "--level", "multigraph"], bad);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("self-loop at vertex u"));

    // Malformed document: exit 2 with a diagnostic.
    let parse = run_with_stdin(&["validate"], "{\"rank\": \"oops\"");
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("malformed"));

    // Unknown subcommand: usage error, exit 2.
    let usage = run(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn blowup_then_isomorphic_to_twisted_prism() {
    let dir = std::env::temp_dir().join("torusgraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let target_path = dir.join("m1_k1.json");
    let target = run(&["generate", "m1", "--k", "1"]);
    std::fs::write(&target_path, stdout(&target)).unwrap();

    let cp3 = stdout(&run(&["generate", "cpn", "--n", "3"]));
    let blown = run_with_stdin(&["blowup", "--vertex", "p0"], &cp3);
    assert!(blown.status.success());
    let verdict = run_with_stdin(
        &["isomorphic", "--other", target_path.to_str().unwrap()],
        &stdout(&blown),
    );
    assert!(verdict.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&verdict)).unwrap();
    assert_eq!(json["isomorphic"], true);
    assert!(json["matrix"].is_array());
    assert!(json["vertex_map"].is_object());
}

#[test]
fn subgraph_components() {
    let graph = stdout(&run(&["generate", "m1", "--k", "0"]));
    let comps = run_with_stdin(&["subgraph", "--gens", "1,0,0;0,1,0"], &graph);
    assert!(comps.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&comps)).unwrap();
    let arr = json.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0]["vertices"], serde_json::json!(["p1", "p2", "p3"]));
    assert_eq!(arr[0]["half_dim"], 2);
}

#[test]
fn export_dot_and_round_trip() {
    let graph = stdout(&run(&["generate", "square", "--m", "1"]));
    // Round-trip through parse/serialize is the identity.
    let reparsed: serde_json::Value = serde_json::from_str(&graph).unwrap();
    let again = serde_json::to_value(
        serde_json::from_str::<serde_json::Value>(&graph).unwrap(),
    )
    .unwrap();
    assert_eq!(reparsed, again);
    let dot = run_with_stdin(&["export-dot"], &graph);
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert!(text.starts_with("digraph G {"));
    assert!(text.contains("\"p1\" -> \"p2\" [label=\"(1,0)\"]"));
}

#[test]
fn classify_report_is_deterministic() {
    let first = run(&["classify", "--radius", "1"]);
    assert!(first.status.success());
    let second = run(&["classify", "--radius", "1"]);
    assert_eq!(first.stdout, second.stdout);
    let json: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(json["census"].as_array().unwrap().len(), 2);
    assert_eq!(json["k33"]["survivors"].as_array().unwrap().len(), 0);
    assert_eq!(json["prism"]["survivors"].as_array().unwrap().len(), 9);
    assert_eq!(json["prism"]["untagged"], 0);
    // Timing lives on stderr, not in the report.
    assert!(!stdout(&first).contains("ms"));
}

#[test]
fn invariants_report_is_deterministic() {
    let graph = stdout(&run(&["generate", "m1", "--k", "3"]));
    let a = run_with_stdin(&["invariants"], &graph);
    let b = run_with_stdin(&["invariants"], &graph);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn file_flags_override_stdio() {
    let dir = std::env::temp_dir().join("torusgraph-cli-files");
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("graph.json");
    let out_path = dir.join("report.json");
    let gen = run(&[
        "generate",
        "cpn",
        "--n",
        "2",
        "--out",
        graph_path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let inv = run(&[
        "invariants",
        "--in",
        graph_path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(inv.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["euler"], 3);
    // Missing input file is a usage error.
    let missing = run(&["invariants", "--in", dir.join("nope.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn invariants_with_explicit_circle() {
    let graph = stdout(&run(&["generate", "m1", "--k", "0"]));
    let ok = run_with_stdin(&["invariants", "--xi", "1,5,25"], &graph);
    assert!(ok.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(json["chi_y"], serde_json::json!([1, 2, 2, 1]));
    // A circle killing a label is rejected as a validation-level failure.
    let bad = run_with_stdin(&["invariants", "--xi", "0,0,1"], &graph);
    assert_eq!(bad.status.code(), Some(1));
}
