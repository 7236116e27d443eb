//! End-to-end checks of the batch interface: artifact shapes, exit codes
//! and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ivgamma"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn eulerian_gamma_output() {
    let out = run(&["eulerian", "--n", "6", "--j", "1", "--family", "symmetric", "--gamma"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["gamma"], serde_json::json!(["1", "232", "976"]));
    assert_eq!(v["ref_degree"], serde_json::json!(5));
}

#[test]
fn eulerian_negative_index() {
    let out = run(&["eulerian", "--n", "4", "--j", "-1", "--family", "tilde", "--gamma"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["gamma"], serde_json::json!(["0", "1", "20"]));
}

#[test]
fn ffk_decision() {
    let out = run(&["ffk", "--f", "1,8", "--k", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["realizable"], serde_json::json!(true));
    let out = run(&["ffk", "--f", "1,2,4", "--k", "2"]);
    assert_eq!(stdout_json(&out)["realizable"], serde_json::json!(false));
}

#[test]
fn gamma_int_from_h() {
    let out = run(&["gamma-int", "--h", "1,5,10,10,5,1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(
        v["gamma_int"]["entries"],
        serde_json::json!(["1", "2872", "19216"])
    );
}

#[test]
fn local_h_routes_agree() {
    let out = run(&["local-h", "--n", "4", "--route", "all"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["routes_agree"], serde_json::json!(true));
    assert_eq!(v["definition"], v["derangement"]);
}

#[test]
fn subdivide_and_cross_check() {
    let dir = std::env::temp_dir();
    let input = dir.join("ivgamma_cli_test_complex.json");
    let output = dir.join("ivgamma_cli_test_subdivision.json");
    std::fs::write(
        &input,
        r#"{"vertices": ["a", "b", "c"], "facets": [[0, 1], [1, 2], [0, 2]]}"#,
    )
    .unwrap();
    let out = run(&[
        "subdivide",
        "--input",
        input.to_str().unwrap(),
        "--out",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let sub: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(sub["vertices"].as_array().unwrap().len(), 12);
    assert_eq!(sub["facets"].as_array().unwrap().len(), 12);
    assert!(sub["vertices"][0]["A"].is_array());

    let out = run(&[
        "gamma-int",
        "--input",
        input.to_str().unwrap(),
        "--cross-check",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["cross_check"]["agrees"], serde_json::json!(true));
    assert_eq!(v["gamma_int"]["entries"], serde_json::json!(["1", "8"]));
}

#[test]
fn table_csv_format() {
    let out = run(&["table", "--n", "3", "--stat", "bpp", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("descents,count\n"));
    assert!(text.contains("1,10"));
}

#[test]
fn verify_small_suite_exits_clean() {
    let dir = std::env::temp_dir();
    let report = dir.join("ivgamma_cli_test_errata.json");
    let out = run(&[
        "verify",
        "--suite",
        "lemma-3.4,observation",
        "--max-n",
        "4",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("corrected-form-passes"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema_version"], serde_json::json!(1));
    assert!(v["records"].as_array().unwrap().len() >= 5);
}

#[test]
fn exit_codes() {
    // usage errors exit 2 (clap, unknown suites, out-of-range indices)
    let out = bin().arg("--definitely-not-a-flag").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eulerian", "--n", "3", "--j", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // resource guard exits 3
    let out = run(&["table", "--n", "12", "--stat", "bpjk"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["local-h", "--n", "6", "--route", "definition"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn deterministic_bytes_across_runs_and_threads() {
    let dir = std::env::temp_dir();
    let paths: Vec<PathBuf> = (0..3)
        .map(|i| dir.join(format!("ivgamma_cli_test_det_{i}.json")))
        .collect();
    for (i, threads) in ["1", "4", "2"].iter().enumerate() {
        let out = run(&[
            "verify",
            "--suite",
            "thm-5.2,gamma-tables",
            "--max-n",
            "5",
            "--threads",
            threads,
            "--report",
            paths[i].to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let first = std::fs::read(&paths[0]).unwrap();
    for p in &paths[1..] {
        assert_eq!(first, std::fs::read(p).unwrap(), "report bytes differ");
    }
}
