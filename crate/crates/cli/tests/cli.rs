use std::process::Command;

use nilcent_cli::{run_with, EXIT_CHECK_FAILED, EXIT_GUARD, EXIT_INADMISSIBLE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nilcent").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("bad json ({e}): {out}\n{err}"));
    (code, v)
}

fn check<'a>(report: &'a Value, suffix: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"].as_str().unwrap().ends_with(suffix))
        .unwrap_or_else(|| panic!("no check ending in {suffix}"))
}

#[test]
fn info_sp42() {
    let (code, r) = json(&["info", "-k", "C", "-p", "4,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(check(&r, " dim")["actual"], "5");
    assert_eq!(check(&r, "index")["actual"], "3");
    assert_eq!(check(&r, "centre dim")["actual"], "2");
}

#[test]
fn info_regular_gl() {
    let (code, r) = json(&["info", "-k", "A", "-p", "5"]);
    assert_eq!(code, EXIT_OK);
    for suffix in [" dim", "index", "centre dim"] {
        assert_eq!(check(&r, suffix)["actual"], "5");
    }
    let ambient = |extra: &[&str]| {
        let mut args = vec!["info", "-k", "A", "-p", "5"];
        args.extend(extra);
        let (_, r) = json(&args);
        r["outputs"][0]["value"].as_str().unwrap().to_string()
    };
    assert_eq!(ambient(&[]), "sl_5");
    assert_eq!(ambient(&["--gl"]), "gl_5");
}

#[test]
fn info_orthogonal_kinds() {
    let (code, r) = json(&["info", "-k", "B", "-p", "3,1,1"]);
    assert_eq!(code, EXIT_OK, "{r}");
    assert_eq!(r["outputs"][1]["value"], "2");
    let (code, r) = json(&["info", "-k", "D", "-p", "3,3"]);
    assert_eq!(code, EXIT_OK, "{r}");
    assert_eq!(r["outputs"][1]["value"], "3");
}

#[test]
fn json_schema_and_key_order() {
    let (_, out, _) = run(&["info", "-k", "C", "-p", "4,2", "--format", "json"]);
    let keys = ["\"version\"", "\"input\"", "\"checks\"", "\"elapsed_ms\""];
    let pos: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    let v: Value = serde_json::from_str(&out).unwrap();
    for c in v["checks"].as_array().unwrap() {
        for k in ["name", "paper_anchor", "expected", "actual", "pass"] {
            assert!(c.get(k).is_some(), "missing {k}");
        }
    }
}

#[test]
fn inadmissible_partitions_exit_65() {
    for args in [["info", "-k", "C", "-p", "3"], ["info", "-k", "B", "-p", "4,2"], ["info", "-k", "D", "-p", "2,1"]] {
        let (code, _, err) = run(&args);
        assert_eq!(code, EXIT_INADMISSIBLE, "{args:?}");
        assert!(err.contains("nilcent:"));
    }
    let (code, _, _) = run(&["info", "-k", "D", "-p", "2,2"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn usage_errors_exit_64() {
    let cases: &[&[&str]] = &[
        &["bogus"],
        &[],
        &["info", "-k", "E", "-p", "2"],
        &["info", "-k", "A"],
        &["info", "-k", "A", "-p", "two"],
        &["verify", "--suite", "nonsense"],
        &["invariants", "-k", "C", "-p", "4,2", "--method", "monomial"],
        &["invariants", "-k", "A", "-p", "4,2", "--ell", "9"],
        &["groebner", "--ideal", "/nonexistent/ideal.txt"],
    ];
    for args in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?} printed no message");
    }
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
    let (code, out, _) = run(&["--version"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn invariants_methods() {
    let (code, r) = json(&["invariants", "-k", "A", "-p", "4,2", "--method", "both"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r["checks"].as_array().unwrap().len(), 6);
    let (code, r) = json(&["invariants", "-k", "A", "-p", "4,2", "--method", "monomial", "--ell", "5"]);
    assert_eq!(code, EXIT_OK);
    let outputs = r["outputs"].as_array().unwrap();
    assert_eq!(outputs.len(), 1);
    assert_eq!(outputs[0]["name"], "monomial l=5 degree=2");
    let (code, r) = json(&["invariants", "-k", "C", "-p", "4,2"]);
    assert_eq!(code, EXIT_OK);
    let degrees: Vec<&str> = r["outputs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["name"].as_str().unwrap().rsplit('=').next().unwrap())
        .collect();
    // degrees sum to (dim + rank) / 2 = 4
    assert_eq!(degrees, ["1", "1", "2"]);
}

fn strip_elapsed(s: &str) -> String {
    s.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["info", "-k", "C", "-p", "4,2", "--seed", "11", "--format", "json"][..],
        &["verify", "--suite", "index", "--max-n", "5", "--seed", "3", "--format", "json"][..],
        &["verify", "--suite", "commvar", "--max-n", "5", "--seed", "3", "--format", "json"][..],
    ] {
        let (c1, a, _) = run(args);
        let (c2, b, _) = run(args);
        assert_eq!(c1, c2);
        assert_eq!(strip_elapsed(&a), strip_elapsed(&b), "{args:?}");
    }
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["info", "-k", "A", "-p", "3,1", "-o", p, "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["input"]["partition"], "3,1");
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["structure", "centre", "index"] {
        let (code, out, _) = run(&["verify", "--suite", suite, "--max-n", "5", "--seed", "7"]);
        assert_eq!(code, EXIT_OK, "{suite}:\n{out}");
        assert!(out.contains("summary:"));
    }
}

#[test]
fn verify_pairs_exit_code_tracks_failures() {
    let (code, r) = json(&["verify", "--suite", "pairs", "--max-n", "10", "--seed", "7"]);
    let checks = r["checks"].as_array().unwrap();
    let gl: Vec<&Value> = checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("gl ")).collect();
    assert_eq!(gl.len(), (1..=10).map(partition_count).sum::<usize>());
    assert!(gl.iter().all(|c| c["pass"] == true));
    let any_fail = checks.iter().any(|c| c["pass"] == false);
    assert_eq!(code, if any_fail { EXIT_CHECK_FAILED } else { EXIT_OK });
}

fn partition_count(n: usize) -> usize {
    fn go(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| go(n - k, k)).sum()
    }
    go(n, n)
}

#[test]
fn groebner_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.txt");
    std::fs::write(&path, "# a point and a line\nx1*y1 - 1\nx1 - y1\n").unwrap();
    let (code, r) = json(&["groebner", "--ideal", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let dim = r["outputs"].as_array().unwrap().iter().find(|o| o["name"] == "dimension").unwrap();
    assert_eq!(dim["value"], "0");

    std::fs::write(&path, "x1 + + y1\n").unwrap();
    let (code, _, _) = run(&["groebner", "--ideal", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INADMISSIBLE);
}

#[test]
fn groebner_guard_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.txt");
    std::fs::write(&path, "x1*y1 - 1\nx1 - y1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_nilcent"))
        .args(["groebner", "--ideal", path.to_str().unwrap(), "--format", "json"])
        .env("NILCENT_MAX_VARS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_GUARD));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["skipped"].as_array().unwrap().len(), 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_nilcent");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["info", "-k", "C", "-p", "4,2"]), Some(EXIT_OK));
    assert_eq!(code(&["info", "-k", "C", "-p", "3"]), Some(EXIT_INADMISSIBLE));
    assert_eq!(code(&["frobnicate"]), Some(EXIT_USAGE));
}
