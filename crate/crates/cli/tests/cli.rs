use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn dtour(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dtour"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_valid(def: &str, doc: &Value) {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.schema.json")).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let wrapped = json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$defs": schema["$defs"],
        "$ref": format!("#/$defs/{def}"),
    });
    let validator = jsonschema::validator_for(&wrapped).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{def}: {errors:?}\n{doc}");
}

const EXAMPLE_1: &str = r#"{"n": 4, "d": 2, "signs": [1, -1, 1, -1]}"#;
const EXAMPLE_2: &str = r#"{"n": 4, "d": 2, "signs": [1, 1, 1, 1]}"#;

#[test]
fn cyclic_example_fails_acyclic_check_with_certificate() {
    let out = dtour(&["check", "--property", "acyclic"], Some(EXAMPLE_1));
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_valid("check", &v);
    assert_eq!(v["holds"], false);
    assert_eq!(v["certificate"]["kind"], "cycle");
    assert_eq!(v["certificate"]["weights"]["2,3,4"], "1/4");
}

#[test]
fn acyclic_example_passes_with_chamber_certificate() {
    let out = dtour(&["check", "--property", "acyclic", "-"], Some(EXAMPLE_2));
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_valid("check", &v);
    assert_eq!(v["certificate"]["kind"], "chamber");
}

#[test]
fn octahedron_gallery_entry_is_k2cycle_free() {
    let g = dtour(&["gallery", "--name", "octahedron"], None);
    assert_eq!(code(&g), 0);
    let entry = stdout_json(&g);
    assert_valid("fixture", &entry);
    let text = String::from_utf8(g.stdout).unwrap();
    let out = dtour(&["check", "--property", "k2cycle-free"], Some(&text));
    assert_eq!(code(&out), 0);
    assert_valid("check", &stdout_json(&out));

    let out = dtour(&["check", "--property", "zero-one-acyclic"], Some(&text));
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_valid("check", &v);
    assert_eq!(v["witness"]["faces"].as_array().unwrap().len(), 8);
}

#[test]
fn whole_gallery_passes() {
    let out = dtour(&["gallery"], None);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_valid("gallery", &v);
    assert_eq!(v.as_array().unwrap().len(), 7);
    assert_eq!(code(&dtour(&["gallery", "--name", "nope"], None)), 2);
}

#[test]
fn collapsible_check_reports_witness_or_residue() {
    let out = dtour(&["check", "--property", "collapsible"], Some(EXAMPLE_2));
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_valid("check", &v);
    assert!(!v["witness"]["steps"].as_array().unwrap().is_empty());

    let out = dtour(&["check", "--property", "collapsible"], Some(EXAMPLE_1));
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_valid("check", &v);
    assert_eq!(v["residue"]["signs"], json!([1, -1, 1, -1]));
}

#[test]
fn census_reports_fourteen_and_is_thread_independent() {
    let one = dtour(&["census", "--n", "4", "--d", "2", "--threads", "1"], None);
    let four = dtour(&["census", "--n", "4", "--d", "2", "--threads", "4"], None);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let v = stdout_json(&one);
    assert_valid("census", &v);
    assert_eq!(v["acyclic"], 14);
    assert_eq!(v["total"], 16);
}

#[test]
fn census_csv_and_predicate_selection() {
    let out = dtour(
        &["census", "--n", "4", "--d", "1", "--predicates", "acyclic,collapsible", "--format", "csv"],
        None,
    );
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,d,total,acyclic,collapsible,zero_one_acyclic,d2_cycle_free,realizable_hits");
    assert_eq!(lines[1], "4,1,64,24,24,,,");

    let bad = dtour(&["census", "--n", "4", "--d", "1", "--predicates", "cyclic"], None);
    assert_eq!(code(&bad), 2);
}

#[test]
fn census_beyond_budget_is_too_large() {
    let out = dtour(&["census", "--n", "7", "--d", "2"], None);
    assert_eq!(code(&out), 3);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_valid("error", &err);
}

#[test]
fn random_is_seeded() {
    let a = dtour(&["random", "--n", "6", "--d", "2", "--seed", "9"], None);
    let b = dtour(&["random", "--n", "6", "--d", "2", "--seed", "9"], None);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_valid("tournament", &v);
    assert_eq!(v["signs"].as_array().unwrap().len(), 20);
}

#[test]
fn max_acyclic_and_its_cap() {
    let out = dtour(&["max-acyclic"], Some(EXAMPLE_2));
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_valid("maxAcyclic", &v);
    assert_eq!(v["vertices"], json!([1, 2, 3, 4]));

    let big = dtour(&["random", "--n", "13", "--d", "2", "--seed", "1"], None);
    let text = String::from_utf8(big.stdout).unwrap();
    assert_eq!(code(&dtour(&["max-acyclic"], Some(&text))), 3);
}

#[test]
fn extract_emits_json_lines() {
    let big = dtour(&["random", "--n", "20", "--d", "2", "--seed", "5"], None);
    let text = String::from_utf8(big.stdout).unwrap();
    let out = dtour(&["extract"], Some(&text));
    assert_eq!(code(&out), 0);
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let (last, steps) = lines.split_last().unwrap();
    assert_valid("extractSummary", last);
    for s in steps {
        assert_valid("extractStep", s);
    }
}

#[test]
fn realize_from_points_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.json");
    std::fs::write(&path, r#"{"d": 2, "points": [["0", "0"], ["1", "0"], ["0", "1"]]}"#).unwrap();
    let out = dtour(&["realize", "--points", path.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out), json!({"n": 3, "d": 2, "signs": [1]}));

    std::fs::write(&path, r#"{"d": 2, "points": [["0", "0"], ["1", "1"], ["2", "2"]]}"#).unwrap();
    let out = dtour(&["realize", "--points", path.to_str().unwrap()], None);
    assert_eq!(code(&out), 2);
    let missing = dtour(&["realize", "--points", "/nonexistent/points.json"], None);
    assert_eq!(code(&missing), 2);
}

#[test]
fn chamber_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let t_path = dir.path().join("t.json");
    std::fs::write(&t_path, EXAMPLE_2).unwrap();
    let out = dtour(&["chamber", "--to-point", t_path.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    let point = stdout_json(&out);
    assert_valid("chamberPoint", &point);

    let x_path = dir.path().join("x.json");
    std::fs::write(&x_path, point.to_string()).unwrap();
    let back = dtour(&["chamber", "--from-point", x_path.to_str().unwrap()], None);
    assert_eq!(code(&back), 0);
    assert_eq!(stdout_json(&back), serde_json::from_str::<Value>(EXAMPLE_2).unwrap());

    std::fs::write(&t_path, EXAMPLE_1).unwrap();
    let cyc = dtour(&["chamber", "--to-point", t_path.to_str().unwrap()], None);
    assert_eq!(code(&cyc), 1);
    assert_valid("cycleCertificate", &stdout_json(&cyc));

    std::fs::write(&x_path, r#"{"x": {"1,2": "1", "1,3": "2", "2,3": "1"}}"#).unwrap();
    let on = dtour(&["chamber", "--from-point", x_path.to_str().unwrap()], None);
    assert_eq!(code(&on), 2);
}

#[test]
fn ramsey_demo_output() {
    let out = dtour(&["ramsey", "--demo", "8", "2", "11"], None);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_valid("ramsey", &v);
    assert_eq!(v["subsets"], 70);
    assert!(v["largest_blue_clique"].as_u64().unwrap() <= 4);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&dtour(&["frobnicate"], None)), 2);
    assert_eq!(code(&dtour(&["check", "--property", "acyclic"], Some("not json"))), 2);
    assert_eq!(
        code(&dtour(&["check", "--property", "acyclic"], Some(r#"{"n":4,"d":2,"signs":[2,1,1,1]}"#))),
        2
    );
    assert_eq!(code(&dtour(&["chamber"], None)), 2);
}
