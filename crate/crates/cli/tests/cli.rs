use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overgroups"))
        .arg("--data")
        .arg(data_dir())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    (
        o.status.code().unwrap(),
        serde_json::from_slice(&o.stdout).expect("json output"),
    )
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("overgroups-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn derive_psl4() {
    let o = run(&["derive", "psl4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("15, 23, 39 (mod 56) — matches paper"));
    let o = run(&["derive", "--family", "psu4"]);
    assert!(stdout(&o).contains("17, 33, 41 (mod 56) — matches paper"));
}

#[test]
fn derive_json_round_trips() {
    let (code, v) = json(&["derive", "--family", "l5_2_plus"]);
    assert_eq!(code, 0);
    assert_eq!(v["matches"], true);
    let check: overgroups::catalog::CrossCheck = serde_json::from_value(v).unwrap();
    assert_eq!(check.derived.residues(), [39, 47, 63, 95, 159]);
}

#[test]
fn derive_without_derivation_fails() {
    assert_eq!(run(&["derive", "m12"]).status.code(), Some(2));
    assert_eq!(run(&["derive", "nope"]).status.code(), Some(2));
}

#[test]
fn lemma_check() {
    let o = run(&["lemma-check", "--q-max", "100", "--n-max", "50"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 mismatches"));
}

#[test]
fn repmod_l3_2() {
    let o = run(&["repmod", "l3_2_mod7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dim 5, irreducible, invariant nondegenerate symmetric form"));
    let (code, v) = json(&["repmod", "l3_2_perm_mod3"]);
    assert_eq!(code, 0);
    assert_eq!(v["irreducible"], false);
    assert_eq!(v["invariant_subspace"].as_array().unwrap().len(), 6);
    assert_eq!(run(&["repmod", "nope"]).status.code(), Some(2));
}

#[test]
fn repmod_fano() {
    let (code, v) = json(&["repmod", "fano"]);
    assert_eq!(code, 0);
    assert_eq!(v["stabilizer_order"], 24);
    assert_eq!(v["stabilizers_conjugate"], false);
}

#[test]
fn primes_in_family() {
    let (code, v) = json(&["primes", "--family", "psl4", "--limit", "200"]);
    assert_eq!(code, 0);
    let ps: Vec<u64> = serde_json::from_value(v["primes"].clone()).unwrap();
    assert_eq!(ps, [23, 71, 79, 127, 151, 191]);
    assert_eq!(
        run(&["primes", "--family", "unbounded_rank", "--limit", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn searches() {
    let o = run(&["repunit-search", "--q", "5", "--n-max", "20", "--special"]);
    assert!(stdout(&o).contains("n = 3, 11\n"));
    let (_, v) = json(&["fixed-n-search", "--n", "23", "--q-max", "1900"]);
    assert_eq!(v["q"], serde_json::json!([113, 257, 857, 1801]));
    let (_, v) = json(&["fixed-n-search", "--n", "3", "--q-max", "20", "--no-filter"]);
    assert_eq!(v["q"], serde_json::json!([2, 3, 5, 17]));
    let (_, v) = json(&[
        "fixed-n-search",
        "--n",
        "3",
        "--q-max",
        "200",
        "--filter",
        "5:8",
    ]);
    assert_eq!(v["q"], serde_json::json!([5, 101, 173]));
    // no default filter for n = 5
    assert_eq!(
        run(&["fixed-n-search", "--n", "5", "--q-max", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn catalog_commands() {
    let o = run(&["catalog", "list"]);
    assert_eq!(stdout(&o).lines().count(), 14);
    let (_, v) = json(&["catalog", "list"]);
    let cat = overgroups::catalog::Catalog::from_json(&v.to_string()).unwrap();
    assert_eq!(cat.non_examples.len(), 5);
    let o = run(&["catalog", "show", "omega5_7"]);
    assert!(stdout(&o).contains("ingredients-verified"));
    let o = run(&["catalog", "non-examples"]);
    assert!(stdout(&o).contains("a5_s6p"));
    assert!(stdout(&run(&["catalog", "list", "--markdown"])).starts_with("## Example families"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["verify", "unknown"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn cert_check_rejects_empty_file() {
    let p = tmp("empty.json");
    std::fs::write(&p, "").unwrap();
    let o = run(&["cert-check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL schema"));
}

#[test]
fn missing_data_dir() {
    let o = Command::new(env!("CARGO_BIN_EXE_overgroups"))
        .args(["--data", "/nonexistent", "verify", "m12"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_m12_is_deterministic_and_checkable() {
    let a = tmp("a.json");
    let b = tmp("b.json");
    let o = run(&["verify", "m12", "--out", a.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("interval orders: 60, 660, 660, 95040"));
    assert!(run(&["verify", "m12", "--out", b.to_str().unwrap()])
        .status
        .success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());

    let cert: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(cert["interval_nodes"].as_array().unwrap().len(), 4);
    assert_eq!(cert["shape"], "BooleanRank2");
    assert!(cert["conjugator"].is_array());

    let o = run(&["cert-check", a.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));

    // corrupt one subgroup generator image
    let mut bad: Value = cert.clone();
    let img = &mut bad["subgroup_generators"][0][0];
    *img = Value::from((img.as_u64().unwrap() + 1) % 12);
    let p = tmp("bad.json");
    std::fs::write(&p, serde_json::to_string_pretty(&bad).unwrap()).unwrap();
    let o = run(&["cert-check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("FAIL subgroup-generators"),
        "{}",
        stdout(&o)
    );
}
