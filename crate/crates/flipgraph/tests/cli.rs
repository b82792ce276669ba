//! End-to-end checks of the command-line surface: output bytes, exit codes,
//! and the example documents under docs/.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_flipgraph"));
    cmd.env_remove("FLIPGRAPH_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

fn docs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs")
}

fn doc(name: &str) -> String {
    docs_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn census_hexagon() {
    assert_eq!(
        stdout_of(&["census", "--vertices", "6"]),
        "1,28\n4,16\n5,12\n6,12\n"
    );
}

#[test]
fn census_triangle() {
    assert_eq!(
        stdout_of(&["census", "--vertices", "3", "--colours", "2"]),
        "1,2\n"
    );
}

#[test]
fn census_header_and_json() {
    assert_eq!(
        stdout_of(&["census", "--vertices", "4", "--header"]),
        "size,count\n1,4\n2,2\n"
    );
    let json = stdout_of(&["census", "--vertices", "4", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows[0]["size"], 1);
    assert_eq!(rows[0]["count"], 4);
    assert_eq!(rows.len(), 2);
}

#[test]
fn census_nonagon_has_the_rare_row() {
    let text = stdout_of(&["census", "--vertices", "9"]);
    assert_eq!(text.lines().count(), 34);
    assert!(text.lines().any(|l| l == "79,6"));
}

#[test]
fn verify_passes_for_small_polygons() {
    for n in ["4", "5", "6"] {
        let out = run(&["verify", "--vertices", n]);
        assert!(out.status.success(), "verify failed for n={n}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text
            .lines()
            .all(|l| l.ends_with("PASS") || l.ends_with("REPORT")));
    }
}

#[test]
fn verify_one_colour() {
    let out = run(&["verify", "--vertices", "7", "--colours", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("one_colour_connected"));
}

#[test]
fn verify_skips_swap_only_checks_for_other_permutations() {
    // colour-preserving flips break bipartiteness and the weighting
    // invariant, so those checks only apply to the swap scheme
    let out = run(&["verify", "--vertices", "5", "--sigma", "0,1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total_nodes"));
    assert!(text.contains("isolated_nodes"));
    assert!(!text.contains("bipartite_components"));
    assert!(!text.contains("weighting_invariance"));
}

#[test]
fn export_component_is_a_path_of_four() {
    let dot = stdout_of(&["export", &doc("hexagon_fan_line.json")]);
    assert!(dot.starts_with("graph flip_component {"));
    let nodes = dot
        .lines()
        .filter(|l| l.contains('"') && !l.contains("--"))
        .count();
    let edges = dot.lines().filter(|l| l.contains("--")).count();
    assert_eq!((nodes, edges), (4, 3));
}

#[test]
fn export_whole_graph() {
    let dot = stdout_of(&["export", "--vertices", "4"]);
    let nodes = dot
        .lines()
        .filter(|l| l.contains('"') && !l.contains("--"))
        .count();
    let edges = dot.lines().filter(|l| l.contains("--")).count();
    assert_eq!((nodes, edges), (8, 2));
    assert!(dot.contains("\"4;0-2;00\" -- \"4;1-3;11\""));

    let trimmed = stdout_of(&["export", "--vertices", "4", "--drop-isolated"]);
    let nodes = trimmed
        .lines()
        .filter(|l| l.contains('"') && !l.contains("--"))
        .count();
    assert_eq!(nodes, 4);

    let json = stdout_of(&["export", "--vertices", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 8);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn equiv_examples() {
    let out = stdout_of(&["equiv", &doc("square_plus.json"), &doc("square_minus.json")]);
    assert_eq!(out, "equivalent\n");
    let out = stdout_of(&[
        "equiv",
        &doc("hexagon_star_left.json"),
        &doc("hexagon_star_right.json"),
    ]);
    assert_eq!(out, "not-equivalent\n");
}

#[test]
fn analyze_square() {
    let text = stdout_of(&["analyze", &doc("square_plus.json")]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["weighting"], serde_json::json!([-1, 1, -1, 1]));
    assert_eq!(doc["valuation"], serde_json::json!([0]));
    assert_eq!(doc["flippable"], serde_json::json!([[0, 2]]));
    assert_eq!(doc["colouring"], serde_json::json!(["a", "b", "c", "d"]));
    assert_eq!(doc["frozen"], serde_json::json!(false));
    assert_eq!(doc["uses_four_colours"], serde_json::json!(true));
}

#[test]
fn analyze_heptagon_example() {
    let text = stdout_of(&["analyze", &doc("heptagon_mixed.json")]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        doc["weighting"],
        serde_json::json!([-1, -1, 1, 1, -1, 1, 0])
    );
    assert_eq!(doc["valuation"], serde_json::json!([0, 0, 1, 1]));
    assert_eq!(
        doc["colouring"],
        serde_json::json!(["a", "b", "c", "d", "b", "a", "c"])
    );
}

#[test]
fn enumerate_five_gon() {
    let text = stdout_of(&["enumerate", "--vertices", "5"]);
    assert_eq!(text.lines().count(), 5);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["diagonals"].as_array().unwrap().len(), 2);
    }
    let coloured = stdout_of(&["enumerate", "--vertices", "4", "--colours", "2"]);
    assert_eq!(coloured.lines().count(), 8);
}

#[test]
fn component_stats() {
    let text = stdout_of(&["component", &doc("hexagon_fan_line.json")]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["stats"]["size"], 4);
    assert_eq!(doc["stats"]["shape"], "path");
    assert_eq!(doc["stats"]["girth"], serde_json::Value::Null);
    assert_eq!(doc["stats"]["bipartite"], true);
    assert_eq!(doc["members"].as_array().unwrap().len(), 4);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn docs_examples_roundtrip_to_a_fixed_point() {
    for entry in std::fs::read_dir(docs_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "json") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = flipgraph::json::coloured_from_json(&text)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let serialised = flipgraph::json::coloured_to_json(&parsed);
        let reparsed = flipgraph::json::coloured_from_json(&serialised).unwrap();
        assert_eq!(reparsed, parsed, "{}", path.display());
        assert_eq!(flipgraph::json::coloured_to_json(&reparsed), serialised);
    }
}

#[test]
fn output_is_identical_across_worker_counts() {
    let one = stdout_of(&["census", "--vertices", "7", "--workers", "1"]);
    let four = stdout_of(&["census", "--vertices", "7", "--workers", "4"]);
    assert_eq!(one, four);
    let dot1 = stdout_of(&["export", "--vertices", "5", "--workers", "1"]);
    let dot3 = stdout_of(&["export", "--vertices", "5", "--workers", "3"]);
    assert_eq!(dot1, dot3);
}

#[test]
fn budget_exhaustion_exits_2() {
    let out = run(&["census", "--vertices", "8", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["census", "--vertices", "8"])
        .env("FLIPGRAPH_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // an explicit flag beats the environment
    let out = bin()
        .args(["census", "--vertices", "8", "--budget", "10000"])
        .env("FLIPGRAPH_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["census"]).status.code(), Some(64));
    assert_eq!(
        run(&["census", "--vertices", "5", "--sigma", "9,9"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run(&["census", "--vertices", "2"]).status.code(), Some(64));
    assert_eq!(
        run(&["census", "--vertices", "5", "--workers", "0"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run(&["no-such-command"]).status.code(), Some(64));
}

#[test]
fn data_errors_exit_65() {
    let dir = std::env::temp_dir();
    let bad = dir.join("flipgraph_bad_input.json");
    std::fs::write(
        &bad,
        "{\"n\":4,\"m\":2,\"diagonals\":[[0,1]],\"colours\":[0,0]}",
    )
    .unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
    let out = run(&["analyze", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(65));
    let mismatched = dir.join("flipgraph_mismatch.json");
    std::fs::write(
        &mismatched,
        "{\"n\":5,\"m\":2,\"diagonals\":[[0,2],[0,3]],\"colours\":[0,0,0]}",
    )
    .unwrap();
    let out = run(&[
        "equiv",
        &doc("square_plus.json"),
        mismatched.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["census", "--help"]).status.code(), Some(0));
}
