use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const C4: &str = "p 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
const ALPHA: &str = "v 1 1\nv 2 6\nv 3 2\nv 4 3\ne 1 5\ne 2 4\ne 3 7\ne 4 8\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgemagic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_reports_valence() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let f = write(dir.path(), "alpha.txt", ALPHA);
    let out = run(&["verify", "--kind", "em", s(&g), s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "valence 12");

    let out = run(&["verify", "--kind", "sem", s(&g), s(&f)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_rejects_non_magic_labeling() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let f = write(dir.path(), "id.txt", "v 1 1\nv 2 2\nv 3 3\nv 4 4\ne 1 5\ne 2 6\ne 3 7\ne 4 8\n");
    let out = run(&["verify", s(&g), s(&f)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "not magic");
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "bad.txt", "p 4\ne 1 x\n");
    let f = write(dir.path(), "alpha.txt", ALPHA);
    let out = run(&["verify", s(&g), s(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let dup = write(dir.path(), "dup.txt", "v 1 1\nv 2 1\nv 3 2\nv 4 3\ne 1 5\ne 2 4\ne 3 7\ne 4 8\n");
    let g = write(dir.path(), "c4.txt", C4);
    assert_eq!(run(&["verify", s(&g), s(&dup)]).status.code(), Some(2));
    assert_eq!(run(&["verify", s(&g), "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn interval_of_crown() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("p 12\n");
    for i in 1..=4 {
        text += &format!("e {i} {}\n", i % 4 + 1);
    }
    for i in 1..=4 {
        text += &format!("e {i} {}\ne {i} {}\n", 3 + 2 * i, 4 + 2 * i);
    }
    let g = write(dir.path(), "crown.txt", &text);
    let out = run(&["interval", "--kind", "em", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["lo"].as_i64(), v["hi"].as_i64()), (Some(28), Some(47)));
    assert_eq!(v["raw_min"], "55/2");
    assert_eq!(v["raw_max"], "95/2");
}

#[test]
fn spectrum_with_certificate_and_witnesses() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let w = dir.path().join("w.json");
    let out = run(&["spectrum", "--kind", "em", "--witnesses", s(&w), "--cert", s(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["result"]["achieved"], serde_json::json!([12, 13, 14, 15]));
    assert_eq!(v["input_digest"][s(&g)].as_str().unwrap().len(), 64);
    let witnesses: Value = serde_json::from_str(&fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(witnesses.as_object().unwrap().len(), 4);
}

#[test]
fn spectrum_budget_is_input_error() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    assert_eq!(run(&["spectrum", "--kind", "em", "--cap", "4", s(&g)]).status.code(), Some(2));
}

#[test]
fn product_prediction_matches() {
    let dir = TempDir::new().unwrap();
    let d = write(
        dir.path(),
        "d.txt",
        "p 4\na 1 2\na 2 3\na 3 4\na 4 1\nv 1 1\nv 2 6\nv 3 2\nv 4 3\ne 1 5\ne 2 4\ne 3 7\ne 4 8\n",
    );
    let star = write(
        dir.path(),
        "star.txt",
        "p 3\na 1 1\na 1 2\na 1 3\nv 1 1\nv 2 2\nv 3 3\ne 1 6\ne 2 5\ne 3 4\n",
    );
    let out = run(&["product", "--d", s(&d), "--member", s(&star), "--mode", "spk"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["result"]["predicted_valence"], 32);
    assert_eq!(v["result"]["verified_valence"], 32);

    let out = run(&["product", "--d", s(&star), "--member", s(&d), "--mode", "tq"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["verified_valence"], 8 * 2 + 12);
}

#[test]
fn s2n_induced_labeling() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let f = write(dir.path(), "alpha.txt", ALPHA);
    let out = run(&["s2n", "--graph", s(&g), "--h1", "1,3", "--n", "2", "--labeling", s(&f), "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["result"]["predicted_valence"], 3 * (12 - 3) + 3 + 3);
}

#[test]
fn decompose_streams_all_splits() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "c4.txt", C4);
    let out = run(&["decompose", "--graph", s(&g), "--enumerate", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 14);
    assert!(lines.iter().all(|l| l["s2n_iso"] == true));
}

#[test]
fn repro_crown() {
    let out = run(&["repro", "c4-crown-20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verified"], true);
    assert_eq!(v["result"]["valences"].as_array().unwrap().len(), 20);
}

#[test]
fn repro_other_examples() {
    for example in ["c4-spectrum", "k1nl-perfect", "s2-k33"] {
        let out = run(&["repro", example]);
        assert_eq!(out.status.code(), Some(0), "{example}");
        assert_eq!(json(&out)["verified"], true, "{example}");
    }
}
