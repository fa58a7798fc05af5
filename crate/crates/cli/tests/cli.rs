use std::io::Write;
use std::process::{Command, Output};

use qcyclic::quantum::QuantumParams;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcyclic"))
        .args(args)
        .env_remove("QCYCLIC_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn annotations(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn cosets_of_five() {
    let v = json(&["cosets", "-n", "5"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["cosets"][1]["members"], serde_json::json!([1, 4]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["cosets", "-n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["quantum", "-n", "11", "--qr"]).status.code(), Some(3));
    assert_eq!(run(&["distance", "-n", "7"]).status.code(), Some(2));
    assert_eq!(run(&["--workers", "0", "table"]).status.code(), Some(2));
}

#[test]
fn splittings_by_minus_two() {
    assert_eq!(json(&["splittings", "-n", "23", "--multiplier", "-2"])["count"], 1);
    assert_eq!(json(&["splittings", "-n", "11", "--multiplier", "-2"])["count"], 0);
    let v = json(&["splittings", "-n", "7"]);
    assert_eq!(v["splittings"][0]["s1_leaders"], serde_json::json!([1]));
}

#[test]
fn quantum_output_round_trips() {
    let text = stdout(&["--format", "json", "quantum", "-n", "13", "--qr"]);
    let p: QuantumParams = serde_json::from_str(&text).unwrap();
    assert_eq!(p.to_string(), "[[14,0,6]]");
    let again = serde_json::to_value(&p).unwrap();
    assert_eq!(again, serde_json::from_str::<Value>(&text).unwrap());
}

#[test]
fn quantum_formats() {
    let csv = stdout(&["--format", "csv", "quantum", "-n", "7", "--qr"]);
    assert_eq!(csv.lines().nth(1), Some("8,0,4,4,exact-enumeration,exact-enumeration,yes"));
    let text = stdout(&["--format", "text", "quantum", "-n", "5", "--leaders", "1"]);
    assert!(text.starts_with("[[6,0,4]]"), "{text}");
}

#[test]
fn binary_route_at_23() {
    let v = json(&["quantum", "-n", "23", "--leaders", "0,1", "--binary"]);
    assert_eq!((v["n"].as_u64(), v["d_lo"].as_u64(), v["d_hi"].as_u64()), (Some(24), Some(8), Some(8)));
}

#[test]
fn distances() {
    let v = json(&["distance", "-n", "5", "--leaders", "1"]);
    assert_eq!((v["lo"].as_u64(), v["hi"].as_u64()), (Some(3), Some(3)));
    assert_eq!(v["lo_src"], "exact-enumeration");
    let v = json(&["distance", "-n", "23", "--qr", "--via-binary"]);
    assert_eq!(v["lo"], 7);
}

#[test]
fn zero_budget_is_honest() {
    let v = json(&["--budget", "0", "distance", "-n", "23", "--qr"]);
    assert_eq!(v["lo_src"], "budget-exhausted");
    assert!(v["lo"].as_u64().unwrap() < 7);
}

#[test]
fn annotated_fixed_subcode_at_157() {
    let f = annotations(r#"[{"n": 157, "k": 40, "d": 36, "source": "tables", "kind": "classical"}]"#);
    let path = f.path().to_str().unwrap();
    let v = json(&["--annotations", path, "--budget", "0", "distance", "-n", "157", "--qr", "--fixed-subcode", "-1"]);
    assert_eq!((v["lo"].as_u64(), v["hi"].as_u64()), (Some(19), Some(36)));
    assert_eq!(v["lo_src"], "fixed-subcode");
    let v = json(&["--annotations", path, "--budget", "0", "quantum", "-n", "157", "--qr", "--fixed-subcode", "-1"]);
    assert_eq!((v["n"].as_u64(), v["d_lo"].as_u64(), v["d_hi"].as_u64()), (Some(158), Some(20), Some(36)));
}

#[test]
fn annotated_classical_code() {
    let f = annotations(r#"[{"n": 93, "k": 48, "d": 21, "source": "tables", "kind": "classical"}]"#);
    let v = json(&["--annotations", f.path().to_str().unwrap(), "quantum", "-n", "93", "--annotated", "48"]);
    assert_eq!((v["n"].as_u64(), v["d_lo"].as_u64()), (Some(96), Some(22)));
    assert!(v["d_hi"].is_null());
}

#[test]
fn secondary_chain() {
    let f = annotations(r#"[{"n": 240, "k": 0, "d": 32, "source": "tables"}]"#);
    let text = stdout(&["--annotations", f.path().to_str().unwrap(), "--format", "text", "secondary", "-n", "240", "-k", "0", "--steps", "9"]);
    let codes: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(codes.len(), 9);
    assert_eq!(codes[0], "[[239,0,31]]");
    assert_eq!(codes[8], "[[231,0,23]]");
    assert_eq!(run(&["secondary", "-n", "240", "-k", "0"]).status.code(), Some(2));
}

#[test]
fn table_rows() {
    let csv = stdout(&["table", "--max-n", "23"]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "n,leaders,type,params,source");
    assert_eq!(rows.len(), 6);
    assert!(rows[5].starts_with("23,1,QR,\"[[24,0,8]]\""), "{}", rows[5]);
    assert_eq!(stdout(&["table", "--max-n", "3"]).lines().count(), 1);
}

#[test]
fn expand_prints_members() {
    let v = json(&["--expand", "describe", "-n", "7", "--leaders", "1"]);
    assert_eq!(v["defining_set"], serde_json::json!([1, 2, 4]));
}

#[test]
fn output_does_not_depend_on_workers() {
    let args = ["table", "--max-n", "17"];
    let one = stdout(&[&["--workers", "1"], &args[..]].concat());
    let four = stdout(&[&["--workers", "4"], &args[..]].concat());
    assert_eq!(one, four);
    let one = stdout(&["--workers", "1", "--format", "json", "distance", "-n", "29", "--qr"]);
    let three = stdout(&["--workers", "3", "--format", "json", "distance", "-n", "29", "--qr"]);
    assert_eq!(one, three);
}
