//! Exit-code contract and format handling of the command-line tool.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alliances"))
}

fn write_temp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join("alliances-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_defensive_on_c5() {
    let path = write_temp("c5.g6", "Dhc\n");
    let out = bin().args(["compute", "--input", &path, "--kind", "defensive"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], 2);
    assert_eq!(json["witness"], serde_json::json!([0, 1]));
    assert_eq!(json["certified"], true);
}

#[test]
fn compute_line_uses_regular_value() {
    let path = write_temp("k4.g6", "C~\n");
    let out = bin()
        .args(["compute", "--input", &path, "--kind", "defensive", "--line", "--oracle"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], 3);
    assert_eq!(json["oracle"]["agrees"], true);
    assert!(json["witness_edges"].is_array());
}

#[test]
fn parse_error_exits_2() {
    let path = write_temp("bad.g6", "C~!!!\n");
    let out = bin().args(["compute", "--input", &path, "--kind", "defensive"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_2() {
    let out = bin()
        .args(["compute", "--input", "/nonexistent/x.g6", "--kind", "defensive"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn infeasible_exits_3() {
    let path = write_temp("two_components.el", "0 1\n2 3\n");
    let out = bin()
        .args(["compute", "--input", &path, "--kind", "global-connected-defensive"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn edgeless_line_graph_exits_3() {
    let path = write_temp("edgeless.el", "n 3\n");
    let out = bin().args(["linegraph", "--input", &path]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_exhaustion_exits_4_with_partial_json() {
    let path = write_temp("q4.g6", {
        let g = alliances::family::generate(&alliances::GraphFamily::Hypercube { dim: 4 }).unwrap();
        let enc = alliances::graph6::encode_graph6(&g).unwrap();
        Box::leak(format!("{enc}\n").into_boxed_str())
    });
    let out = bin()
        .args(["compute", "--input", &path, "--kind", "defensive", "--budget-nodes", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["certified"], false);
}

#[test]
fn budget_env_variable_is_honored() {
    let path = write_temp("q4b.g6", {
        let g = alliances::family::generate(&alliances::GraphFamily::Hypercube { dim: 4 }).unwrap();
        let enc = alliances::graph6::encode_graph6(&g).unwrap();
        Box::leak(format!("{enc}\n").into_boxed_str())
    });
    let out = bin()
        .args(["compute", "--input", &path, "--kind", "defensive"])
        .env("ALLIANCE_BUDGET_NODES", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_violations_would_exit_1_and_clean_run_exits_0() {
    let out = bin().args(["verify", "--max-n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["violations"], serde_json::json!([]));
}

#[test]
fn verify_missing_corpus_file_exits_2() {
    let out = bin()
        .args(["verify", "--corpus", "/nonexistent/corpus.g6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_file_corpus_runs() {
    let path = write_temp("corpus.g6", "Bw\nC~\nDhc\n");
    let out = bin()
        .args(["verify", "--corpus", &path, "--checks", "oracle-equivalence,degree-sandwich"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["graphs_checked"], 3);
}

#[test]
fn linegraph_emits_g6_and_map() {
    let path = write_temp("k13.g6", "Cs\n");
    let out = bin().args(["linegraph", "--input", &path]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["graph6"], "Bw"); // the triangle
    assert_eq!(json["edge_map"]["0"], serde_json::json!([0, 1]));
}

#[test]
fn generate_writes_one_g6_line() {
    let out = bin().args(["generate", "--family", "cycle", "--n", "8"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    let g = alliances::graph6::parse_graph6(text.trim()).unwrap();
    assert_eq!((g.order(), g.size()), (8, 8));
}

#[test]
fn generate_rejects_bad_parameters() {
    let out = bin().args(["generate", "--family", "cycle", "--n", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["generate", "--family", "nonsense", "--n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn format_flag_overrides_extension() {
    let path = write_temp("c5_as_el.dat", "0 1\n1 2\n2 3\n3 4\n0 4\n");
    let out = bin()
        .args(["compute", "--input", &path, "--format", "edgelist", "--kind", "defensive"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
