use serde_json::Value;
use std::process::{Command, Output};

fn qdaha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdaha")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report on stdout")
}

fn untimed(mut v: Value) -> Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("millis");
    }
    v
}

fn temp_path(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qdaha-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn passing_suite_exits_zero() {
    let out = qdaha(&["verify", "r-constants", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["suite"], "r-constants");
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn configuration_errors_exit_two() {
    assert_eq!(qdaha(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(qdaha(&["verify", "toroidal-relations", "--window", "3"]).status.code(), Some(2));
    assert_eq!(qdaha(&["verify", "dunkl-commutativity", "--mode", "sometimes"]).status.code(), Some(2));
    assert_eq!(qdaha(&["verify", "pbw-audit", "--presentation", "Foo"]).status.code(), Some(2));
}

#[test]
fn flags_override_the_config_file() {
    let cfg = temp_path("cfg.json");
    std::fs::write(&cfg, r#"{ "suite": "r-constants", "n": 4 }"#).unwrap();
    let from_file = json_of(&qdaha(&["verify", "--config", cfg.to_str().unwrap()]));
    assert_eq!(from_file["params"]["n"], 4);
    let overridden = json_of(&qdaha(&["verify", "--config", cfg.to_str().unwrap(), "--n", "2"]));
    assert_eq!(overridden["params"]["n"], 2);
    std::fs::write(&cfg, r#"{ "suite": "r-constants", "bogus": 1 }"#).unwrap();
    assert_eq!(qdaha(&["verify", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn json_file_output() {
    let path = temp_path("pbw.json");
    let out = qdaha(&["verify", "pbw-audit", "--presentation", "D1", "--degree", "2", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["params"]["dimension"], 45);
    assert!(String::from_utf8_lossy(&out.stdout).contains("pbw-audit"));
}

#[test]
fn repeated_runs_agree() {
    let args = ["verify", "dunkl-commutativity", "--n", "2", "--ell", "2", "--seed", "1,2"];
    let a = untimed(json_of(&qdaha(&args)));
    let b = untimed(json_of(&qdaha(&args)));
    assert_eq!(a, b);
    let c = untimed(json_of(&qdaha(&["verify", "dunkl-commutativity", "--n", "2", "--ell", "2", "--seed", "3"])));
    assert_ne!(a["params"], c["params"]);
}

#[test]
fn macdonald_expansion_is_printed() {
    let out = qdaha(&["compute", "macdonald", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "m[1,1]");
    let out = qdaha(&["compute", "macdonald", "--n", "2", "--lambda", "2"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("m[2] + ("), "{}", text);
    assert!(text.trim_end().ends_with("·m[1,1]"), "{}", text);
}
