use std::process::{Command, Output};

use serde_json::Value;
use symclass::cli::{self, CommandConfig, OutputFormat};

fn symclass(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symclass"));
    cmd.args(args).env_remove("SYMCLASS_WORK_CEILING");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("spawn symclass")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad line {l}: {e}")))
        .collect()
}

fn of_type<'a>(doc: &'a [Value], ty: &str) -> Vec<&'a Value> {
    doc.iter().filter(|v| v["type"] == ty).collect()
}

/// Every object carrying an `order` key is a cyclotomic scalar and must
/// have both exact coefficients and an approximation.
fn check_scalars(v: &Value) {
    match v {
        Value::Object(map) => {
            if map.contains_key("coeffs") || map.contains_key("approx") {
                assert!(map["order"].is_u64());
                assert!(map["coeffs"].as_array().unwrap().iter().all(Value::is_string));
                assert_eq!(map["approx"].as_array().unwrap().len(), 2);
            }
            map.values().for_each(check_scalars);
        }
        Value::Array(items) => items.iter().for_each(check_scalars),
        _ => {}
    }
}

#[test]
fn table_shows_psi1_of_s_as_i() {
    let out = symclass(&["table", "--n", "3"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let doc = lines(&out);
    assert_eq!(doc[0]["schema"], cli::SCHEMA);
    assert_eq!(doc[0]["version"], cli::SCHEMA_VERSION);
    let classes = of_type(&doc, "classes")[0]["classes"].as_array().unwrap().clone();
    let s_col = classes.iter().position(|c| c["representative"] == "r^0*s").unwrap();
    let psi1 = of_type(&doc, "character").into_iter().find(|c| c["character"]["name"] == "psi:1").unwrap();
    let value = &psi1["values"][s_col];
    // i = ζ_12^3
    assert_eq!(value["order"], 12);
    assert_eq!(value["coeffs"], serde_json::json!(["0", "0", "0", "1"]));
    assert!((value["approx"][1].as_f64().unwrap() - 1.0).abs() < 1e-12);
    doc.iter().for_each(check_scalars);
}

#[test]
fn verify_single_point_agrees() {
    let out = symclass(&["verify", "--theorem", "degree-two-brauer-poly", "--n", "2", "--p", "3", "--d", "2"], &[]);
    assert_eq!(out.status.code(), Some(cli::exit::OK));
    let doc = lines(&out);
    let records = of_type(&doc, "verification");
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["record"]["agrees"], true);
    assert_eq!(of_type(&doc, "summary")[0]["disagreements"], 0);
}

#[test]
fn obasis_reports_exhaustion() {
    let out = symclass(&["obasis", "--n", "3", "--d", "2", "--char", "chi:1"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let doc = lines(&out);
    assert_eq!(of_type(&doc, "verdict")[0]["verdict"], false);
    let exhausted: Vec<_> = of_type(&doc, "orbit-decision")
        .into_iter()
        .filter(|r| r["record"]["search"]["outcome"] == "exhausted")
        .collect();
    assert!(!exhausted.is_empty());
    assert!(exhausted.iter().all(|r| r["record"]["has_obasis"] == false));
    doc.iter().for_each(check_scalars);
}

#[test]
fn disagreement_sets_exit_status() {
    let out = symclass(&["verify", "--theorem", "degree-two-brauer-poly", "--n", "3", "--p", "5", "--d", "2"], &[]);
    assert_eq!(out.status.code(), Some(cli::exit::DISAGREEMENT));
    let doc = lines(&out);
    let rec = &of_type(&doc, "verification")[0]["record"];
    assert_eq!(rec["agrees"], false);
    assert!(rec["counterexample"]["gram"].is_array());
}

#[test]
fn invalid_parameters_name_the_precondition() {
    for (args, needle) in [
        (vec!["obasis", "--n", "3", "--d", "2"], "--char"),
        (vec!["brauer", "--n", "3", "--p", "4"], "prime"),
        (vec!["table", "--n", "0"], "n"),
        (vec!["gram", "--n", "2", "--d", "2", "--char", "chi:5"], "chi:5"),
    ] {
        let out = symclass(&args, &[]);
        assert_eq!(out.status.code(), Some(cli::exit::INVALID), "{args:?}");
        let all = format!("{}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
        assert!(all.contains(needle), "{args:?}: {all}");
    }
}

#[test]
fn work_ceiling_has_its_own_status() {
    let out = symclass(&["obasis", "--n", "3", "--d", "2", "--char", "chi:1"], &[("SYMCLASS_WORK_CEILING", "10")]);
    assert_eq!(out.status.code(), Some(cli::exit::WORK_CEILING));
    let out = symclass(&["obasis", "--n", "3", "--d", "2", "--char", "chi:1", "--work-ceiling", "10"], &[]);
    assert_eq!(out.status.code(), Some(cli::exit::WORK_CEILING));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["table", "--n", "4", "--p", "3"],
        vec!["orbits", "--n", "2", "--dim-v", "2"],
        vec!["gram", "--n", "2", "--d", "2", "--char", "chi:1", "--orbit", "2,0,0,0,0,0,0,0"],
        vec!["obasis", "--n", "2", "--d", "2", "--char", "psi:1", "--p", "3"],
    ] {
        let a = symclass(&args, &[]);
        let b = symclass(&args, &[]);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        lines(&a).iter().for_each(check_scalars);
    }
}

#[test]
fn output_flag_writes_the_same_document() {
    let dir = std::env::temp_dir().join(format!("symclass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("brauer.jsonl");
    let out = symclass(&["brauer", "--n", "3", "--p", "3", "--output", path.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    let direct = symclass(&["brauer", "--n", "3", "--p", "3"], &[]);
    assert_eq!(written, direct.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn library_entry_point_matches_binary() {
    let mut config = CommandConfig::new(cli::Command::Orbits, 2);
    config.degree = Some(2);
    let outcome = cli::run(&config);
    assert_eq!(outcome.status, 0);
    let bin = symclass(&["orbits", "--n", "2", "--d", "2"], &[]);
    assert_eq!(outcome.document.as_bytes(), bin.stdout.as_slice());
    let summary = of_type(&lines(&bin), "summary")[0].clone();
    assert_eq!(summary["tuples"], "36");

    config.format = OutputFormat::Human;
    let human = cli::run(&config);
    assert_eq!(human.status, 0);
    assert!(!human.document.trim_start().starts_with('{'));
}
