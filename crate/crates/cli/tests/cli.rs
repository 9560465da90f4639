//! Runs the built binary against the checked-in corpus.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn corpus(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rackcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rackcover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1, "one document per invocation");
    serde_json::from_str(&text).unwrap()
}

#[test]
fn gen_dihedral() {
    let v = ok_json(&["gen", "dihedral", "3"]);
    assert_eq!(v["type"], "rack");
    assert_eq!(v["op"], json!([[0, 2, 1], [2, 1, 0], [1, 0, 2]]));
    let v = ok_json(&["gen", "quaternion"]);
    assert_eq!(v["size"], 8);
    assert_eq!(run(&["gen", "cyclic"]).status.code(), Some(2));
}

#[test]
fn classify_morphism() {
    let v = ok_json(&["classify", &corpus("d6-mod3.json")]);
    assert_eq!(v["type"], "report");
    for flag in ["covering", "trivial_covering", "normal_covering"] {
        assert_eq!(v["flags"][flag], true, "{flag}");
    }
}

#[test]
fn classify_square_witness() {
    let v = ok_json(&["classify-square", &corpus("dihedral-3-6.json")]);
    assert_eq!(v["flags"]["double_extension"], true);
    assert_eq!(v["flags"]["double_covering"], false);
    let w = &v["witnesses"]["double_covering"];
    assert_eq!(w["xabcd"], json!([0, 0, 0, 0, 6]));
    assert_eq!(w["value"], 12);
    let v = ok_json(&["classify-square", &corpus("toy.json")]);
    assert_eq!(v["flags"]["double_covering"], true);
    assert_eq!(v["flags"]["normal_double_covering"], false);
}

#[test]
fn validation_exit_codes() {
    let bad_entry = r#"{"type":"rack","size":2,"op":[[0,2],[1,1]]}"#;
    assert_eq!(
        run_stdin(&["validate", "-"], bad_entry).status.code(),
        Some(2)
    );
    let not_rack = r#"{"type":"rack","size":3,"op":[[0,1,2],[1,2,0],[2,0,1]]}"#;
    assert_eq!(
        run_stdin(&["validate", "-"], not_rack).status.code(),
        Some(2)
    );
    assert_eq!(run_stdin(&["validate", "-"], "{").status.code(), Some(1));
    assert_eq!(
        run(&["validate", "/nonexistent.json"]).status.code(),
        Some(1)
    );
    let wrong_type = run(&["classify", &corpus("d3.json")]);
    assert_eq!(wrong_type.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&wrong_type.stderr).contains("expected a morphism"));
    let good = r#"{"type":"rack","size":2,"op":[[0,0],[1,1]]}"#;
    let out = run_stdin(&["validate", "-"], good);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn selftest_passes() {
    let v = ok_json(&["selftest"]);
    assert_eq!(v["failures"], 0);
    assert!(v["checks"].as_array().unwrap().len() >= 10);
}

#[test]
fn commutator_and_pi0() {
    let d3 = corpus("d3.json");
    let v = ok_json(&["commutator", &d3, "--r", "[[0,1]]", "--s", "[[0,2]]"]);
    assert_eq!(v, json!({"type": "congruence", "classes": [[0, 1, 2]]}));
    let w = ok_json(&[
        "commutator",
        &d3,
        "--r",
        "[[0,1]]",
        "--s",
        "[[0,2]]",
        "--variant",
        "iii",
    ]);
    assert_eq!(v, w);
    let v = ok_json(&["pi0", &d3]);
    assert_eq!(v["map"], json!([0, 0, 0]));
    let bad = run(&["commutator", &d3, "--r", "[[0,7]]", "--s", "[]"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn centralize_outputs() {
    let v = ok_json(&["centralize", &corpus("s3-sign.json")]);
    assert_eq!(v["quotient"]["type"], "morphism");
    assert_eq!(v["quotient"]["dom"]["size"], 4);
    let v = ok_json(&["centralize-square", &corpus("dihedral-3-6.json")]);
    assert_eq!(v["quotient"]["type"], "square");
    let q = v["quotient"].to_string();
    let out = run_stdin(&["classify-square", "-"], &q);
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["flags"]["double_covering"], true);
}

#[test]
fn oracle_volumes() {
    let sq = corpus("dihedral-3-6.json");
    let v = ok_json(&["oracle-volumes", &sq, "--stabilize"]);
    assert_eq!(v["stabilized"], true);
    let pairs = v["pairs"].as_array().unwrap();
    assert!(pairs.contains(&json!([0, 12])));
    let bounded = ok_json(&["oracle-volumes", &sq, "--max-len", "4"]);
    assert_eq!(bounded["pairs"], v["pairs"]);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["classify-square".to_string(), corpus("q-diamond-left.json")],
        vec!["selftest".to_string()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args).stdout;
        let b = run(&args).stdout;
        assert_eq!(a, b, "{args:?}");
    }
}
