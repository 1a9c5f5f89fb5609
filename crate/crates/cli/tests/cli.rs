use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const FILE: &str = "\
ring: char=32003, vars=[x,y,z,w]
ideal twisted_cubic:
  x*z - y^2
  y*w - z^2
  x*w - y*z
ideal quartic:
  x*w - y*z
  y^3 - x^2*z
  z^3 - y*w^2
  x*z^2 - y^2*w
ideal zero:
ideal non_gorenstein:
  x^2
  x*y
  y^2
forms lines:
  x + w
  y - z
";

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("syzygy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    path
}

fn syzygy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syzygy"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn input() -> String {
    write_temp("input.txt", FILE).to_string_lossy().into_owned()
}

#[test]
fn betti_of_twisted_cubic() {
    let out = syzygy(&["betti", &input(), "twisted_cubic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n"
    );
}

#[test]
fn betti_json_of_zero_ideal() {
    let out = syzygy(&["betti", &input(), "zero", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!([{"i": 0, "j": 0, "beta": 1}]));
}

#[test]
fn invariants_records() {
    let out = syzygy(&["invariants", &input(), "twisted_cubic", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"mu": 3, "a": 2, "dim": 2, "depth": 2, "codim": 2, "e": 3, "reg": 1})
    );
    let out = syzygy(&["invariants", &input(), "zero"]);
    let text = stdout(&out);
    assert!(text.contains("mu     0\n"));
    assert!(text.contains("a      none\n"));
}

#[test]
fn inhomogeneous_entry_is_a_usage_error() {
    let path = write_temp(
        "bad.txt",
        "ring: vars=[x,y]\nideal bad:\n  x^2\n  x + y^2\n",
    );
    let out = syzygy(&["betti", path.to_str().unwrap(), "bad"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn missing_ideal_and_unknown_claim_exit_two() {
    assert_eq!(syzygy(&["betti", &input(), "nope"]).status.code(), Some(2));
    assert_eq!(
        syzygy(&["verify", "--claims", "4.1,7.7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        syzygy(&["green", &input(), "quartic", "2", "--window", "3:1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn green_table_is_deterministic_and_has_two_rows() {
    let args = [
        "green",
        &input(),
        "quartic",
        "2",
        "--strong",
        "--seed",
        "5",
        "--format",
        "json",
    ];
    let a = stdout(&syzygy(&args));
    let b = stdout(&syzygy(&args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["certificate"], "strong");
    assert_eq!(v["forms"].as_array().unwrap().len(), 2);
    let mut rows: Vec<u64> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| !e["hf"].as_object().unwrap().is_empty())
        .map(|e| e["j"].as_u64().unwrap())
        .collect();
    rows.dedup();
    assert_eq!(rows, vec![1, 2]);
}

#[test]
fn green_with_named_forms() {
    let out = syzygy(&["green", &input(), "twisted_cubic", "2", "--forms", "lines"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("l1 = x + w"), "{text}");
    assert!(text.contains("H_2(l; H^2) 0:1 1:2"), "{text}");
}

#[test]
fn window_filters_degrees() {
    let out = syzygy(&[
        "green",
        &input(),
        "quartic",
        "2",
        "--strong",
        "--window=-1:1",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for e in v["entries"].as_array().unwrap() {
        for k in e["hf"].as_object().unwrap().keys() {
            let n: i32 = k.parse().unwrap();
            assert!((-1..=1).contains(&n));
        }
    }
}

#[test]
fn verify_gorenstein_variant_on_non_gorenstein_ideal() {
    let out = syzygy(&["verify", &input(), "--claims", "4.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let row = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["entry"] == "non_gorenstein")
        .unwrap();
    assert_eq!(row["verdict"], "hypothesis-not-met");
}

#[test]
fn verify_json_schema_and_determinism() {
    let args = [
        "verify",
        "--reading",
        "p-indexed",
        "--format",
        "json",
        "--seed",
        "3",
    ];
    let a = syzygy(&args);
    let b = syzygy(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    for r in v.as_array().unwrap() {
        for key in [
            "claim",
            "entry",
            "hypotheses",
            "lhs",
            "rhs",
            "verdict",
            "tight",
            "seed",
        ] {
            assert!(r.get(key).is_some(), "missing {key} in {r}");
        }
        for h in r["hypotheses"].as_array().unwrap() {
            assert!(h["name"].is_string() && h["holds"].is_boolean());
        }
    }
}

#[test]
fn literal_reading_reports_falsified_decomposition() {
    let out = syzygy(&["verify", "--claims", "5.5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let bad: Vec<&Value> = v
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["verdict"] == "FALSIFIED")
        .collect();
    assert!(!bad.is_empty());
    assert!(bad
        .iter()
        .all(|r| r["instance"].as_str().unwrap().ends_with("reading=literal")));
}

#[test]
fn empty_corpus() {
    let path = write_temp("empty.txt", "ring: vars=[x]\n");
    let out = syzygy(&["verify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "[]");
}
