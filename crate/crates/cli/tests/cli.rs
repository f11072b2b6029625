use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const AFFINE: &str = r#"{"C": [["2","-2"],["-2","2"]]}"#;
const AFFINE_KM_PENTAD: &str = r#"{"r":3,"n":2,
    "A":[["1/8","0","0"],["0","0","1"],["0","1","0"]],
    "D":[["2","-2"],["0","0"],["0","1"]],
    "Gamma":["4","4"]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentads"))
        .args(args)
        .env_remove("PENTAD_MAX_DIM")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cartan_of_affine_km_pentad() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "g.json", AFFINE_KM_PENTAD);
    let out = run(&["cartan", "--pentad", p.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2,-2\n-2,2\n");
}

#[test]
fn expand_reduced_affine_csv() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "affine.json", AFFINE);
    let out = run(&["expand", "--reduced-matrix", p.to_str().unwrap(), "--max-degree", "6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut expected = String::from("degree,dim\n");
    for k in -6i64..=6 {
        let d = if k == 0 || k % 2 == 0 { 1 } else { 2 };
        expected.push_str(&format!("{k},{d}\n"));
    }
    assert_eq!(stdout(&out), expected);
}

#[test]
fn expand_json_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "affine.json", AFFINE);
    let args = ["expand", "--matrix", p.to_str().unwrap(), "--max-degree", "5", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["degrees"]["0"], 2);
    assert_eq!(v["degrees"]["-3"], 2);
}

#[test]
fn structure_summary() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "g.json", AFFINE_KM_PENTAD);
    let out = run(&["structure", "--pentad", p.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["dim_Z"].as_u64(), v["dim_Delta"].as_u64()), (Some(1), Some(1)));
}

#[test]
fn realize_modes() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "affine.json", AFFINE);
    let out = run(&["realize", "--matrix", p.to_str().unwrap(), "--mode", "full-km"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pentad"]["r"], 3);
    assert_eq!(v["certificate"]["holds"], true);

    let out = run(&["realize", "--matrix", p.to_str().unwrap(), "--mode", "symmetrizable"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pentad"]["r"], 1);

    let out = run(&["realize", "--matrix", p.to_str().unwrap(), "--mode", "derived", "--max-degree", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["derived_dims"]["0"], 2);

    let out = run(&["realize", "--matrix", p.to_str().unwrap(), "--mode", "invertible"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
}

#[test]
fn sl2fd_commands() {
    let out = run(&["sl2fd", "--indices", "(-1),(2,0)", "--minor", "--format", "csv"]);
    assert_eq!(stdout(&out), "2,-2\n-2,2\n");
    let out = run(&["sl2fd", "--indices", "(-1),(1,0),(2,0)", "--compare", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["agree"], true);
    let out = run(&["sl2fd", "--indices", "(-1)", "--expand", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "degree,dim\n-3,0\n-2,0\n-1,1\n0,1\n1,1\n2,0\n3,0\n");
}

#[test]
fn worked_examples_pass() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("fixtures passed"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["cartan", "--pentad", missing.to_str().unwrap()]).status.code(), Some(2));

    let garbage = write(&dir, "garbage.json", "{not json");
    assert_eq!(run(&["cartan", "--pentad", garbage.to_str().unwrap()]).status.code(), Some(2));

    let bad_rational = write(&dir, "bad.json", r#"{"C": [["1/0"]]}"#);
    let out = run(&["expand", "--matrix", bad_rational.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(2));

    assert_eq!(run(&["sl2fd", "--indices", "(0,0),(0,4)", "--compare", "3"]).status.code(), Some(1));
    assert_eq!(run(&["sl2fd", "--indices", "(1,", "--minor"]).status.code(), Some(2));

    let p = write(&dir, "affine.json", AFFINE);
    let out = Command::new(env!("CARGO_BIN_EXE_pentads"))
        .args(["expand", "--reduced-matrix", p.to_str().unwrap(), "--max-degree", "6"])
        .env("PENTAD_MAX_DIM", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));

    let zero = run(&["expand", "--matrix", p.to_str().unwrap(), "--max-degree", "0"]);
    assert_eq!(zero.status.code(), Some(1));
}
