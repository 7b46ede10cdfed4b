use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rough-graceful"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/patients.csv")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn pipeline_on_patient_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let dot = dir.path().join("g.dot");
    let f = fixture();
    let o = run(&[
        "build-graph",
        s(&f),
        "--decision",
        "Delivery",
        "--target",
        "1,4,5,7",
        "--dot",
        s(&dot),
        "--out",
        s(&graph),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let table = String::from_utf8(o.stderr).unwrap();
    assert!(
        table.starts_with("1\t1/1\n2\t0/1\n3\t0/1\n4\t1/1\n5\t1/1\n6\t0/1\n7\t1/1\n"),
        "{table}"
    );

    let g: Value = serde_json::from_str(&std::fs::read_to_string(&graph).unwrap()).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(g["edges"].as_array().unwrap().len(), 18);
    assert!(!g["edges"].as_array().unwrap().contains(&serde_json::json!(["3", "6"])));
    let dot = std::fs::read_to_string(&dot).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches(" -- ").count(), 18);
}

#[test]
fn target_by_decision_value_matches_ids() {
    let f = fixture();
    let by_ids = run(&["ingest", s(&f), "--decision", "Delivery", "--target", "1,4,5,7"]);
    let by_value = run(&[
        "ingest",
        s(&f),
        "--decision",
        "Delivery",
        "--target-decision",
        "Delivery=Fullterm",
    ]);
    assert_eq!(code(&by_ids), 0);
    assert_eq!(stdout(&by_ids), stdout(&by_value));
    assert!(stdout(&by_ids).contains("partition: {1, 4} {2} {3} {5} {6} {7}"));

    let j = json(&run(&[
        "ingest",
        s(&f),
        "--target-decision",
        "Delivery=Fullterm",
        "--format",
        "json",
    ]));
    assert_eq!(j["target"], serde_json::json!(["1", "4", "5", "7"]));
}

#[test]
fn generate_label_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("comb8.json");
    let bad = dir.path().join("comb8-literal.json");

    assert_eq!(code(&run(&["label", "comb", "--n", "8", "--out", s(&good), "-q"])), 0);
    assert_eq!(code(&run(&["verify", s(&good)])), 0);

    let o = run(&["label", "comb", "--n", "8", "--mode", "literal", "--out", s(&bad), "-q"]);
    assert_eq!(code(&o), 1);
    let o = run(&["verify", s(&bad)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(a) even vertex labels  FAIL"));

    let j = json(&run(&["verify", s(&bad), "--format", "json"]));
    assert_eq!(j["passed"], false);
    assert_eq!(j["odd_labels"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_catches_stale_edge_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    assert_eq!(code(&run(&["label", "path", "--n", "4", "--out", s(&path)])), 0);
    let mut file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    file["edge_labels"][0]["induced"] = Value::from(99);
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
    let o = run(&["verify", s(&path)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("stale"));
}

#[test]
fn generate_then_induce_and_search() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.json");
    let labels = dir.path().join("labels.json");
    assert_eq!(code(&run(&["generate", "cycle", "--n", "5", "--out", s(&graph)])), 0);

    std::fs::write(&labels, r#"{"v1": 0, "v2": 2, "v3": 4, "v4": 6, "v5": 8}"#).unwrap();
    let o = run(&["induce", s(&graph), "--labels", s(&labels)]);
    assert_eq!(code(&o), 0);
    let induced: Vec<u64> = json(&o)["edge_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["induced"].as_u64().unwrap())
        .collect();
    assert_eq!(induced, [4, 7, 6, 8, 10]);

    let o = run(&["search", s(&graph), "--cap", "6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["graceful"], true);

    assert_eq!(code(&run(&["search", s(&graph), "--cap", "2"])), 3);

    let k4 = dir.path().join("k4.json");
    std::fs::write(
        &k4,
        r#"{"vertices": [{"id": "a", "weight": "1"}, {"id": "b", "weight": "1"},
                         {"id": "c", "weight": "1"}, {"id": "d", "weight": "1"}],
            "edges": [["a", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "d"]]}"#,
    )
    .unwrap();
    let o = run(&["search", s(&k4), "--cap", "3"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["verdict"], "none-within-pool");
    assert_eq!(code(&run(&["search", s(&k4), "--cap", "4", "-q"])), 0);

    let serial = run(&["search", s(&graph), "--cap", "5", "--count-all", "-q"]);
    let parallel = run(&[
        "search",
        s(&graph),
        "--cap",
        "5",
        "--count-all",
        "--parallel",
        "4",
        "-q",
    ]);
    assert_eq!(json(&serial)["count"], json(&parallel)["count"]);
    assert_eq!(stdout(&serial), stdout(&parallel));
}

#[test]
fn generate_with_weights() {
    let dir = tempfile::tempdir().unwrap();
    let weights = dir.path().join("w.csv");
    std::fs::write(&weights, "id,weight\nv1,1/2\nv3,0\n").unwrap();
    let o = run(&["generate", "path", "--n", "3", "--weights", s(&weights)]);
    assert_eq!(code(&o), 0);
    let j = json(&o);
    assert_eq!(j["vertices"][0]["weight"], "1/2");
    assert_eq!(j["vertices"][2]["weight"], "0/1");
}

#[test]
fn audit_table_and_verdicts() {
    let o = run(&["audit", "star", "--n", "4"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert_eq!(out.matches('✗').count(), 3);
    assert_eq!(out.matches('✓').count(), 1);

    let o = run(&["audit", "ladder", "--n", "4"]);
    assert!(stdout(&o).contains('○'));
    assert!(stdout(&o).contains("no formula"));

    assert_eq!(code(&run(&["audit", "path", "--range", "2..12"])), 0);

    let j = json(&run(&["audit", "comb", "--n", "6", "--format", "json"]));
    let modes: Vec<&str> = j
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["mode"].as_str().unwrap())
        .collect();
    assert_eq!(modes, ["corrected", "literal"]);
    assert_eq!(j[0]["discrepancies"], 0);
    assert_eq!(j[1]["discrepancies"], 6);
}

#[test]
fn export_dot_reads_graphs_and_labelings() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let lab = dir.path().join("l.json");
    run(&["generate", "star", "--n", "3", "--out", s(&graph)]);
    run(&["label", "path", "--n", "3", "--out", s(&lab)]);
    let o = run(&["export-dot", s(&graph)]);
    assert_eq!(code(&o), 0);
    let labeled_edges = |dot: &str| {
        dot.lines()
            .filter(|l| l.contains(" -- ") && l.contains("[label="))
            .count()
    };
    assert_eq!(labeled_edges(&stdout(&o)), 0);
    let o = run(&["export-dot", s(&lab)]);
    assert_eq!(code(&o), 0);
    assert_eq!(labeled_edges(&stdout(&o)), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["label", "path-star", "--n", "5"][..],
        &["audit", "cycle", "--range", "3..9", "--format", "json"],
        &["ingest", s(&fixture()), "--target", "1,4,5,7", "--format", "json"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{").unwrap();

    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["label", "hexagon", "--n", "3"])), 2);
    assert_eq!(code(&run(&["audit", "path", "--n", "3", "--format", "dot"])), 2);
    assert_eq!(code(&run(&["verify", s(&bad)])), 2);

    assert_eq!(code(&run(&["label", "cycle", "--n", "2"])), 3);
    assert_eq!(code(&run(&["ingest", s(&fixture()), "--target", "1,99"])), 3);
    assert_eq!(
        code(&run(&["ingest", s(&fixture()), "--target-decision", "Shoe=Red"])),
        3
    );

    let o = run(&["verify", s(&dir.path().join("missing.json"))]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.json"));
}
