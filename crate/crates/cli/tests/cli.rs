use std::path::PathBuf;
use std::process::{Command, Output};

fn wf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wf")).args(args).env_remove("WF_CACHE_DIR").output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("wf-test-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn ladder_output() {
    let out = wf(&["roots", "ladder", "--type", "A1~", "--word", "0,1", "--count", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    let roots: Vec<serde_json::Value> = v["forward"].as_array().unwrap().iter().map(|e| e["root"].clone()).collect();
    assert_eq!(serde_json::to_string(&roots).unwrap(), "[[0,1],[1,2],[2,3],[3,4]]");
    assert_eq!(v["backward"][0]["root"], serde_json::json!([1, 0]));
    assert_eq!(v["backward"][1]["root"], serde_json::json!([2, 1]));
}

#[test]
fn empty_ladder() {
    let v = json(&wf(&["roots", "ladder", "--count", "0"]));
    assert!(v["forward"].as_array().unwrap().is_empty());
}

#[test]
fn root_checks() {
    assert!(wf(&["roots", "verify-ord1", "--height", "8"]).status.success());
    assert!(wf(&["roots", "verify-shift", "--type", "A2~", "--word", "0,1,2,1", "--c", "2"]).status.success());
    assert_eq!(wf(&["roots", "ladder", "--type", "A2~", "--word", "0,1,2"]).status.code(), Some(2));
}

#[test]
fn module_validation_report() {
    let out = wf(&["module", "validate", "--spin", "one"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    assert!(v["checkedCoefficients"].as_u64().unwrap() > 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(wf(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(wf(&["compute"]).status.code(), Some(2));
    assert_eq!(wf(&["compute", "--n", "2", "--window", "3"]).status.code(), Some(2));
    assert_eq!(wf(&["verify", "classical", "--rank", "3"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    for args in [
        vec!["verify", "closed-form"],
        vec!["verify", "factorization", "--n", "1", "--modules", "spin-half,spin-one"],
        vec!["verify", "bethe", "--n", "2"],
        vec!["verify", "classical", "--rank", "1"],
    ] {
        let out = wf(&args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(json(&out)["status"], "pass");
    }
}

#[test]
fn compute_is_deterministic() {
    let a = wf(&["--threads", "1", "compute", "--n", "2"]);
    let b = wf(&["--threads", "4", "compute", "--n", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["vars"], serde_json::json!(["t1", "t2"]));
    let text = wf(&["compute", "--n", "2", "--window", "2,3", "--format", "text"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap().lines().count(), 4);
}

#[test]
fn cache_round_trip() {
    let dir = scratch("cache");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_wf")).args(["compute", "--n", "3", "--window", "3,5,7"]).env("WF_CACHE_DIR", &dir).output().unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, wf(&["compute", "--n", "3", "--window", "3,5,7"]).stdout);

    let path = dir.join(&files[0]);
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(run().stdout, first.stdout);
    std::fs::write(dir.join("straighten-r0.json"), r#"{"revision":0,"entries":{"f[1] | f[0]":[["f[0]","q"]]}}"#).unwrap();
    assert_eq!(run().stdout, first.stdout);
    let _ = std::fs::remove_dir_all(&dir);
}
