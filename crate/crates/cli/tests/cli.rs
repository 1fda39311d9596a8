use std::process::{Command, Output};

use mhs_core::expr::{expr_equal, MhsExpression};
use mhs_core::summation::sum_product;
use mhs_core::tables::{table_weight, TableJson};
use mhs_core::Composition;
use serde_json::Value;

fn mhs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn stuffle_text_matches_example() {
    let out = mhs(&["stuffle", "1,1", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3·(1,1,1) + (2,1) + (1,2)");
}

#[test]
fn stuffle_json_lists_multiplicities() {
    let out = mhs(&["--format", "json", "stuffle", "1", "1"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let total: u64 = v
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["multiplicity"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 3);
}

#[test]
fn bad_composition_is_a_usage_error() {
    let out = mhs(&["stuffle", "1,x", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mhs(&["stuffle", "0", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn derive_with_check() {
    let out = mhs(&["derive", "1", "--check", "20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("= (n + 1)·H_n(1) - n"), "{text}");
    assert!(text.contains("verified n=1..20"), "{text}");

    let out = mhs(&["derive", "1;1,1", "--check", "12"]);
    assert!(out.status.success());
}

#[test]
fn derive_json_matches_library() {
    let out = mhs(&["derive", "1;2", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let closed: MhsExpression = serde_json::from_value(v["closed_form"].clone()).unwrap();
    let factors: Vec<Composition> = vec!["1".parse().unwrap(), "2".parse().unwrap()];
    assert!(expr_equal(&closed, &sum_product(&factors).unwrap()));
}

#[test]
fn derive_basis_success_and_failure() {
    let dir = std::env::temp_dir().join(format!("mhs-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    let bad = dir.join("bad.json");
    std::fs::write(
        &good,
        r#"[[{"coeff":["1/1"],"factors":["1"]}], [{"coeff":["1/1"],"factors":[]}]]"#,
    )
    .unwrap();
    std::fs::write(&bad, r#"[[{"coeff":["1/1"],"factors":["2"]}]]"#).unwrap();

    let out = mhs(&["derive", "1", "--basis", good.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("(-n) × [1]"));

    let out = mhs(&["derive", "1", "--basis", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("residual"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn tables_json_round_trips() {
    for w in [4u32, 5] {
        let out = mhs(&["tables", "--weight", &w.to_string(), "--format", "json"]);
        assert!(out.status.success());
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let parsed: Vec<TableJson> = serde_json::from_value(v["tables"].clone()).unwrap();
        let derived = table_weight(w).unwrap();
        assert_eq!(parsed.len(), derived.len());
        for (p, d) in parsed.iter().zip(&derived) {
            assert_eq!(p.grid().unwrap(), d.grid());
        }
        assert_eq!(v["errata"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn tables_rejects_weight_six() {
    let out = mhs(&["tables", "--weight", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_text_and_latex() {
    let out = mhs(&["tables", "--weight", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("errata: 0"));
    let out = mhs(&["tables", "--weight", "5", "--format", "latex"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("\\begin{tabular}").count(), 2);
}

#[test]
fn verify_small_suites() {
    for suite in ["identities", "congruences", "theorem", "corollary", "staver"] {
        let out = mhs(&[
            "verify", "--suite", suite, "--pmin", "7", "--pmax", "13", "--amin", "-2", "--amax", "2",
            "--nmax", "20", "--jobs", "2",
        ]);
        assert!(out.status.success(), "suite {suite}");
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["all-pass"], Value::Bool(true));
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["suite"] == suite && c["pass"] == true));
    }
}

#[test]
fn verify_reports_residues() {
    let out = mhs(&["verify", "--suite", "congruences", "--pmin", "7", "--pmax", "7"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let h1 = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["claim-id"] == "H(1)")
        .unwrap();
    assert_eq!(h1["p"], 7);
    assert_eq!(h1["lhs-residue"], h1["rhs-residue"]);
}

#[test]
fn verify_rejects_small_primes() {
    assert_eq!(mhs(&["verify", "--pmin", "5"]).status.code(), Some(2));
    assert_eq!(mhs(&["verify", "--pmin", "11", "--pmax", "7"]).status.code(), Some(2));
}

#[test]
fn reduce_matches_newton() {
    let out = mhs(&["reduce", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "3!·H_n({1}^3) = H_n(1)^3 - 3·H_n(1)·H_n(2) + 2·H_n(3)"
    );
    let out = mhs(&["reduce", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coefficients"]["1,1,1,1"], "1");
    assert_eq!(v["coefficients"]["4"], "-6");
    assert_eq!(mhs(&["reduce", "0"]).status.code(), Some(2));
}
