use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cgc::fixtures::fixtures;
use cgc::spec_file::CodeSpecFile;
use serde_json::Value;

fn cgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgc")).args(args).env("CGC_COLOR", "0").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_examples(dir: &Path) -> Vec<PathBuf> {
    let o = cgc(&["examples", "--out-dir", dir.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    stdout(&o).lines().map(PathBuf::from).collect()
}

fn write_spec(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const F3: &str = r#"{"construction": "p1", "field": {"p": 3, "m": 1},
    "family": {"a": 1, "b": 2, "n": 2}, "r": 1, "s": 1}"#;

#[test]
fn examples_emits_seven_specs() {
    let dir = tempfile::tempdir().unwrap();
    let paths = write_examples(dir.path());
    assert_eq!(paths.len(), 7);
    for (p, fx) in paths.iter().zip(fixtures()) {
        assert_eq!(p.file_stem().unwrap(), fx.name);
        let spec = CodeSpecFile::from_json(&fs::read_to_string(p).unwrap()).unwrap();
        assert_eq!(spec, fx.spec);
    }
    let all: Value = serde_json::from_str(&stdout(&cgc(&["examples"]))).unwrap();
    assert_eq!(all.as_object().unwrap().len(), 7);
}

#[test]
fn report_f3() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "f3.json", F3);
    let o = cgc(&["report", &spec]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generator"]["display"], serde_json::json!([["z+1", "z+2"]]));
    assert_eq!(v["dual"]["display"], serde_json::json!([["2/(z+1)", "1/(z+2)"]]));
    let code = &v["code"];
    assert_eq!((code["n"].as_u64(), code["k"].as_u64(), code["delta"].as_u64()), (Some(2), Some(1), Some(1)));
    assert_eq!(code["dFree"], 4);
    assert_eq!(code["isMds"], true);
    assert!(v.get("realization").is_none());

    let o = cgc(&["report", &spec, "--realize"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["realization"]["D"], serde_json::json!([[1, 2]]));
}

#[test]
fn report_elliptic_1_not_mds() {
    let dir = tempfile::tempdir().unwrap();
    let paths = write_examples(dir.path());
    let o = cgc(&["report", paths[5].to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["generator"]["display"], serde_json::json!([["1", "1", "1"], ["z²+z", "0", "z"]]));
    assert_eq!(v["code"]["dFree"], 2);
    assert_eq!(v["code"]["isMds"], false);
    let diags: Vec<&str> = v["diagnostics"].as_array().unwrap().iter().map(|d| d.as_str().unwrap()).collect();
    assert!(diags.iter().any(|d| d.starts_with("max distance for parameters is 3")), "{diags:?}");
}

#[test]
fn report_out_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    for p in write_examples(dir.path()) {
        let out = dir.path().join("out.json");
        let o = cgc(&["report", p.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
        let first = fs::read(&out).unwrap();
        let second = cgc(&["report", p.to_str().unwrap()]).stdout;
        assert_eq!(first, second, "{}", p.display());
        // the echoed spec re-parses to the input
        let v: Value = serde_json::from_slice(&first).unwrap();
        let echoed = CodeSpecFile::from_json(&v["spec"].to_string()).unwrap();
        assert_eq!(echoed, CodeSpecFile::from_json(&fs::read_to_string(&p).unwrap()).unwrap());
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write_spec(
        dir.path(),
        "dup.json",
        r#"{"construction": "p1", "field": {"p": 3, "m": 1}, "points": [[1, 1], [2, 1], [1, 1]], "r": 1, "s": 1}"#,
    );
    for cmd in ["report", "verify", "freedist"] {
        let o = cgc(&[cmd, &dup]);
        assert_eq!(o.status.code(), Some(3), "{cmd}");
        assert!(stderr(&o).contains("coincide"), "{}", stderr(&o));
    }

    let bad_key = write_spec(dir.path(), "key.json", &F3.replace("\"s\": 1", "\"s\": 1, \"gamma\": [[0, 0]]"));
    let o = cgc(&["report", &bad_key]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("`gamma`"), "{}", stderr(&o));

    let garbage = write_spec(dir.path(), "garbage.json", "{ not json");
    assert_eq!(cgc(&["report", &garbage]).status.code(), Some(2));
    assert_eq!(cgc(&["report", "/nonexistent/spec.json"]).status.code(), Some(2));

    let off_curve = fs::read_to_string(&write_examples(dir.path())[5]).unwrap().replacen(
        "\"y\": [\n        0,\n        0,\n        1,\n        1\n      ]",
        "\"y\": [1]",
        1,
    );
    let off = write_spec(dir.path(), "off.json", &off_curve);
    let o = cgc(&["report", &off]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("point 1"), "{}", stderr(&o));
}

#[test]
fn verify_prints_checks() {
    let dir = tempfile::tempdir().unwrap();
    let paths = write_examples(dir.path());
    for p in &paths {
        let o = cgc(&["verify", p.to_str().unwrap()]);
        assert!(o.status.success(), "{}: {}", p.display(), stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS ") || l.starts_with("INFO ")));
        assert!(!stdout(&o).contains('\x1b'));
    }
    let o = cgc(&["verify", paths[1].to_str().unwrap()]);
    assert!(stdout(&o).contains("PASS H·Gᵀ = 0"));
}

#[test]
fn freedist_values() {
    let dir = tempfile::tempdir().unwrap();
    let paths = write_examples(dir.path());
    let d = |i: usize, extra: &[&str]| {
        let mut args = vec!["freedist", paths[i].to_str().unwrap()];
        args.extend_from_slice(extra);
        let o = cgc(&args);
        assert!(o.status.success(), "{}", stderr(&o));
        stdout(&o).trim().to_owned()
    };
    assert_eq!(d(6, &[]), "4");
    assert_eq!(d(3, &[]), "9");
    assert_eq!(d(0, &["--oracle", "4"]), "4 4");
}
