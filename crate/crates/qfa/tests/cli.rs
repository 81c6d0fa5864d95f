//! Black-box checks of the command-line interface: worked examples,
//! JSON output shape, and exit codes.

use std::process::Command;

fn qfa(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_qfa"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

#[test]
fn worked_examples() {
    let (out, _, code) = qfa(&["gauss", "int", "2"]);
    assert_eq!(out.trim(), "v + v^-1");
    assert_eq!(code, Some(0));

    let (out, _, code) = qfa(&["gauss", "binom", "5", "2", "--ell", "5"]);
    assert_eq!(out.trim(), "0");
    assert_eq!(code, Some(0));

    let (out, _, code) = qfa(&["module", "tilting", "4", "--ell", "3"]);
    assert!(out.lines().next().unwrap().contains("dim 6"));
    assert_eq!(code, Some(0));

    let (out, _, code) = qfa(&["cocommutative", "--ell", "3", "--degree", "4"]);
    assert!(out.lines().next().unwrap().contains("dim 5"));
    assert_eq!(code, Some(0));

    let (out, _, code) = qfa(&["qmatrix-reduce", "--n", "2", "--expr", "X[2,2]*X[1,1]"]);
    assert_eq!(out.trim(), "1 + v^-1*X[1,2]*X[2,1]");
    assert_eq!(code, Some(0));
}

#[test]
fn filtration_json_report() {
    let (out, _, code) = qfa(&["filtration", "--ell", "3", "--block", "0", "--depth", "1", "--json"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ell"], 3);
    assert_eq!(v["block"], 0);
    assert_eq!(v["sequence"], serde_json::json!([0, 4]));
    assert_eq!(v["P_dims"], serde_json::json!([1, 26]));
    assert_eq!(v["loewy"]["layers"], serde_json::json!([1, 8, 17]));
    assert_eq!(v["loewy"]["rigid"], true);
    assert_eq!(v["loewy"]["indecomposable"], true);
    for iso in v["quotient_isos"].as_array().unwrap() {
        assert_eq!(iso["certified"], true);
    }
}

#[test]
fn exit_codes() {
    // usage errors exit with 2
    let (_, _, code) = qfa(&["qmatrix-reduce", "--n", "2", "--expr", "X["]);
    assert_eq!(code, Some(2));
    let (_, _, code) = qfa(&["module", "mystery", "4", "--ell", "3"]);
    assert_eq!(code, Some(2));
    let (_, _, code) = qfa(&["gauss", "int", "2", "--ell", "4"]);
    assert_eq!(code, Some(2));
    let (_, _, code) = qfa(&["no-such-command"]);
    assert_eq!(code, Some(2));
}

#[test]
fn deterministic_output() {
    let a = qfa(&["filtration", "--ell", "3", "--block", "1", "--depth", "1", "--seed", "42", "--json"]);
    let b = qfa(&["filtration", "--ell", "3", "--block", "1", "--depth", "1", "--seed", "42", "--json"]);
    assert_eq!(a, b);
}
