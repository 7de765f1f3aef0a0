use std::io::Write;
use std::process::{Command, Output, Stdio};

use bdcover_cli::schema::{BoundInput, CoverInput, DatumInput, HeckeInput, HilbertInput, IrrepInput};
use serde_json::{json, Value};

const BIN: &str = env!("CARGO_BIN_EXE_bdcover");

fn run_cli(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_out(args: &[&str], input: &str) -> Value {
    let out = run_cli(args, input);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn invariants_example() {
    let v = json_out(&["invariants"], r#"{"rank":1,"frobenius":[[1]],"order":1,"C":[[1]],"n":4}"#);
    assert_eq!(v["Ysharp"], json!([[2]]));
    assert_eq!(v["zind"], json!(2));
    assert_eq!(v["mu"], json!([2]));
    assert_eq!(v["nu_hat"], json!([2]));
}

#[test]
fn hilbert_example_under_both_conventions() {
    let input = r#"{"q":7,"n":2,"a":{"val":1,"unit_exp":0},"b":{"val":1,"unit_exp":0}}"#;
    for conv in ["inverse", "standard"] {
        assert_eq!(json_out(&["hilbert", "--symbol-convention", conv], input), json!({"zeta_exponent": 1}));
    }
    let mixed = r#"{"q":7,"n":3,"a":{"val":1,"unit_exp":0},"b":{"val":0,"unit_exp":1}}"#;
    assert_eq!(json_out(&["hilbert"], mixed), json!({"zeta_exponent": 1}));
    assert_eq!(json_out(&["hilbert", "--symbol-convention", "standard"], mixed), json!({"zeta_exponent": 2}));
}

#[test]
fn mult_bound_example() {
    assert_eq!(json_out(&["mult-bound"], r#"{"is_split":true}"#), json!({"bound": 1}));
}

#[test]
fn input_from_file() {
    let path = std::env::temp_dir().join(format!("bdcover-cli-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"is_split":false,"ker_sha":2,"sha_n":3}"#).unwrap();
    let v = json_out(&["mult-bound", "--input", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v, json!({"bound": 6}));
}

#[test]
fn schema_violations_exit_two_with_pointer() {
    let cases = [
        ("invariants", r#"{"C":[[1,2]],"n":4}"#, "/C/0"),
        ("invariants", r#"{"C":[[1]],"n":0}"#, "/n"),
        ("hilbert", r#"{"q":7,"n":2,"a":{"val":1,"unit_exp":0},"b":{"val":"x","unit_exp":0}}"#, "/b/val"),
        ("center", r#"{"q":7,"n":4,"C":[[1]]}"#, "/n"),
        ("mult-bound", r#"{"is_split":false}"#, "/ker_sha"),
        ("irrep", r#"{"q":5,"n":4,"C":[[1]],"character_index":99}"#, "/character_index"),
        ("hecke-table", r#"{"q":5,"n":2,"C":[[1]],"colour":1}"#, "/colour"),
        ("invariants", "not json", "(root)"),
    ];
    for (cmd, input, pointer) in cases {
        let out = run_cli(&[cmd], input);
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(out.status.code(), Some(2), "{cmd} {input}: {err}");
        assert!(err.contains(&format!("at {pointer}:")), "{err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn nonsplit_point_level_request_exits_three() {
    let input = r#"{"q":5,"n":2,"C":[[0,1],[1,0]],"frobenius":[[0,1],[1,0]],"order":2}"#;
    assert_eq!(run_cli(&["center"], input).status.code(), Some(3));
    assert_eq!(run_cli(&["irrep"], input).status.code(), Some(3));
    // The Hecke algebra only needs the lattice of fixed cocharacters.
    let v = json_out(&["hecke-table"], input);
    assert_eq!(v["lambda"], json!([[1, 1]]));
    assert_eq!(v["commutative"], json!(true));
}

#[test]
fn empty_grid_is_a_vacuous_pass_with_warning() {
    let out = run_cli(&["selftest", "--grid", "empty"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning:"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], json!(true));
    assert!(v["properties"].as_array().unwrap().iter().all(|p| p["status"] == "vacuous"));
}

#[test]
fn hecke_entries_are_sorted() {
    let v = json_out(&["hecke-table"], r#"{"q":13,"n":4,"C":[[1]],"bound":2}"#);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 25);
    let keys: Vec<(Vec<i64>, Vec<i64>)> = entries
        .iter()
        .map(|e| (serde_json::from_value(e["y1"].clone()).unwrap(), serde_json::from_value(e["y2"].clone()).unwrap()))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn irrep_reports_a_consistent_model() {
    let v = json_out(&["irrep"], r#"{"q":5,"n":4,"C":[[1]],"character":["3/8","0"]}"#);
    assert_eq!(v["dimension"], json!(2));
    assert_eq!(v["coset_reps"].as_array().unwrap().len(), 2);
    for g in v["generators"].as_array().unwrap() {
        assert_eq!(g["permutation"].as_array().unwrap().len(), 2);
    }
    let bad = run_cli(&["irrep"], r#"{"q":5,"n":4,"C":[[1]],"character":["0","1/3"]}"#);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn documented_inputs_round_trip() {
    fn check<T: PartialEq + std::fmt::Debug>(text: &str, parse: fn(&Value) -> Result<T, bdcover_cli::schema::SchemaError>, ser: fn(&T) -> Value) {
        let a = parse(&serde_json::from_str(text).unwrap()).unwrap();
        let b = parse(&serde_json::from_str(&ser(&a).to_string()).unwrap()).unwrap();
        assert_eq!(a, b, "{text}");
    }
    check(r#"{"rank":1,"frobenius":[[1]],"order":1,"C":[[1]],"n":4}"#, DatumInput::parse, DatumInput::to_json);
    check(r#"{"q":5,"n":4,"C":[[1]]}"#, CoverInput::parse, CoverInput::to_json);
    check(r#"{"q":7,"n":3,"C":[[1,0],[1,2]],"bound":2}"#, HeckeInput::parse, HeckeInput::to_json);
    check(r#"{"q":5,"n":4,"C":[[1]],"character_index":3,"free_denominator":8}"#, IrrepInput::parse, IrrepInput::to_json);
    check(r#"{"q":5,"n":4,"C":[[1]],"character":["3/8","0"]}"#, IrrepInput::parse, IrrepInput::to_json);
    check(r#"{"q":7,"n":2,"a":{"val":1,"unit_exp":0},"b":{"val":1,"unit_exp":0}}"#, HilbertInput::parse, HilbertInput::to_json);
    check(r#"{"is_split":true}"#, BoundInput::parse, BoundInput::to_json);
    check(r#"{"is_split":false,"ker_sha":2,"sha_n":4}"#, BoundInput::parse, BoundInput::to_json);
}
