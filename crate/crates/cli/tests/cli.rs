use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn tforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tforge"))
        .args(args)
        .env_remove("TFORGE_CACHE")
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = tforge(&all);
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    (out.status.code().expect("exit code"), v)
}

#[test]
fn transform_pure_quintic_collapses() {
    let (code, v) = run_json(&["transform", "--field", "Q", "--poly", "x^5-2", "--covariant", "hermite"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["image"], "y^5");
    assert_eq!(v["results"]["decomposition"], json!({ "h": "y", "m": 5 }));
}

#[test]
fn transform_over_f3_kills_a1_and_a3() {
    let (code, v) = run_json(&["transform", "--field", "GF(3)", "--poly", "x^5-x-1", "--covariant", "hermite"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["decomposition"]["m"], 1);
    assert_eq!(r["image"], "y^5 + y^3 + y + 1");
    assert_eq!(r["vanishing_coefficients"], json!(["a1", "a3"]));
    assert!(r["element"].as_str().is_some());
}

#[test]
fn joubert_rejects_characteristic_two() {
    let (code, v) = run_json(&["transform", "--field", "GF(2)", "--poly", "x^6+x+1", "--covariant", "joubert"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "CHAR2_UNSUPPORTED");
}

#[test]
fn joubert_transform_reports_the_image() {
    let (code, v) = run_json(&["transform", "--field", "GF(5)", "--poly", "x^6+x^4+x+2", "--covariant", "joubert"]);
    assert_eq!(code, 0);
    let image = v["results"]["image"].as_str().unwrap();
    assert!(image.starts_with("y^6"), "{image}");
    assert!(v["results"]["element"].is_null());
}

#[test]
fn normalize_exception_over_f2() {
    let (code, v) = run_json(&["normalize", "--field", "GF(2)", "--degree", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["transformed"], "y^5 + y^3 + 1");
}

#[test]
fn normalize_over_f8_uses_the_table() {
    let (code, v) = run_json(&["normalize", "--field", "GF(8)", "--degree", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["transformed"], "y^5 + b*y^3 + b*y + b");
    assert_eq!(v["results"]["field"], "GF(2^3;modulus=b^3 + b^2 + 1)");
}

#[test]
fn normalize_over_f41_searches() {
    let (code, v) = run_json(&["normalize", "--field", "GF(41)", "--poly", "x^5+2*x+1"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["route"], "hermite_search");
    assert_eq!(r["shape"], "quintic_bcc");
    assert_eq!(r["verification"]["element_ok"], true);
}

#[test]
fn normalize_exit_codes() {
    assert_eq!(run_json(&["normalize", "--field", "GF(2)", "--degree", "6"]).0, 3);
    assert_eq!(run_json(&["normalize", "--field", "GF(6)", "--degree", "3"]).0, 2);
    assert_eq!(run_json(&["normalize", "--field", "GF(41)", "--poly", "x^5+x+3"]).0, 2);
    assert_eq!(run_json(&["normalize", "--field", "Q", "--degree", "7"]).0, 2);
    assert_eq!(run_json(&["normalize", "--field", "Z", "--degree", "3"]).0, 2);
}

#[test]
fn table_reproduces_fourteen_entries() {
    let out = tforge(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS GF(")).count(), 14);
    let (code, v) = run_json(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["passed"], 14);
}

#[test]
fn corrupted_fixture_fails_itemized() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("corrupted-table.json");
    let mut entries: Vec<Value> =
        (0..14).map(|_| json!({ "field": "GF(3)", "polynomials": ["x^5 - x - 1"] })).collect();
    entries[2] = json!({ "field": "GF(7)", "polynomials": ["x^5 - x - 1"] });
    entries[5] = json!({ "field": "GF(6)", "polynomials": ["x^5 - x - 1"] });
    std::fs::write(&path, serde_json::to_vec(&entries).unwrap()).unwrap();
    let out = tforge(&["table", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("FAIL GF(")).count(), 2, "{text}");
    assert!(text.contains("FAIL 12/14 entries"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["joubert", "group-facts"] {
        let (code, v) = run_json(&["verify", suite]);
        assert_eq!(code, 0, "{suite}");
        let checks = v["results"]["checks"].as_array().unwrap();
        assert!(checks.iter().all(|c| c["passed"] == true));
    }
    let out = tforge(&["verify", "joubert"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS e5(psi) = -2^5 * delta"));
}

#[test]
fn output_is_deterministic() {
    let args = ["normalize", "--field", "GF(43)", "--degree", "5", "--json"];
    let a = tforge(&args);
    let b = tforge(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8(a.stdout).unwrap().contains("wall_time"));
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = run_json(&["verify", "group-facts", "--timing"]);
    assert!(v["wall_time_seconds"].as_f64().is_some());
}

#[test]
fn export_emits_components() {
    let (code, v) = run_json(&["export", "--covariant", "joubert"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["components"].as_array().unwrap().len(), 6);
}
