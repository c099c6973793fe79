use std::fs;
use std::process::{Command, Output};

fn fka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fka")).args(args).env_remove("FKA_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn read_csv(text: &str) -> Vec<(f64, f64, f64)> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,re,im"));
    lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect()
}

#[test]
fn transform_of_ground_state_is_itself() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let o = fka(&[
        "transform",
        "--N",
        "1",
        "--k",
        "0",
        "--a",
        "2",
        "--profile",
        "exppow:c=0.5",
        "--m",
        "0",
        "--grid",
        "0:6:31",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rows = read_csv(&fs::read_to_string(&out).unwrap());
    assert_eq!(rows.len(), 31);
    for (r, re, im) in rows {
        assert!((re - (-r * r / 2.0).exp()).abs() < 1e-6 && im.abs() < 1e-6, "r={r}");
    }
}

#[test]
fn transform_paths_agree() {
    let common = ["transform", "--N", "1", "--k", "0.5", "--a", "1", "--profile", "mode:l=3", "--grid", "0.05:6:25"];
    let mut outs = Vec::new();
    for path in ["hankel", "kernel", "spectral"] {
        let mut args = common.to_vec();
        args.extend(["--path", path]);
        let o = fka(&args);
        assert!(o.status.success(), "{path}: {}", stderr(&o));
        outs.push(read_csv(&stdout(&o)));
    }
    let sup = outs[0].iter().map(|r| r.1.hypot(r.2)).fold(0.0, f64::max);
    for other in &outs[1..] {
        for (a, b) in outs[0].iter().zip(other) {
            assert!((a.1 - b.1).hypot(a.2 - b.2) <= 1e-6 * sup, "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn nonpositive_a_is_a_usage_error() {
    let o = fka(&["transform", "--N", "1", "--k", "0", "--a", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("a+2<k>+N>2"), "{}", stderr(&o));
    let o = fka(&["transform", "--grid", "3:1:5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fka(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_hpw_sharp_saturates() {
    let o = fka(&["check", "hpw-sharp", "--N", "1", "--k", "0.5", "--a", "1", "--profile", "exppow:c=1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!((v["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-5);
    assert_eq!(v["pass"], true);
    assert_eq!(v["check"], "HPW_SHARP");
    assert_eq!(v["params"]["N"], 1);
    for key in ["anchor", "exponents", "lhs", "rhs", "mode", "tolerance", "notes"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn check_pitt_constraint_exit_code() {
    let o = fka(&["check", "pitt", "--p", "1.5", "--q", "4", "--alpha", "-0.5", "--l", "0.6"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("alpha > -D/q"), "{}", stderr(&o));
}

#[test]
fn check_entropy_of_gaussian() {
    let o = fka(&["check", "entropy", "--a", "2", "--k", "0", "--N", "1", "--profile", "gaussian:t=0.5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sum = v["values"]["sum"].as_f64().unwrap();
    assert!((sum - (1.0 + std::f64::consts::PI.ln())).abs() < 1e-6, "{sum}");
}

#[test]
fn suite_runs_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.json");
    fs::write(
        &cfg,
        r#"{"seed": 11, "params": [{"N": 1, "k": 0.5, "a": 1.0}], "profiles": ["exppow:c=1", "mode:l=2"],
            "random_mixtures": {"count": 2, "l_max": 4},
            "checks": [{"id": "HPW_SHARP"}, {"id": "NASH", "exponents": [{"s": 0.5}, {"s": 1}]}, {"id": "HY_FAIL_PROBE"}]}"#,
    )
    .unwrap();
    let mut reports = Vec::new();
    for (i, threads) in ["1", "2"].iter().enumerate() {
        let out = dir.path().join(format!("r{i}.json"));
        let o = Command::new(env!("CARGO_BIN_EXE_fka"))
            .args(["suite", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()])
            .env("FKA_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", stderr(&o));
        let text = stdout(&o);
        assert!(text.lines().any(|l| l.starts_with("HPW_SHARP") && l.contains("4/4 pass")), "{text}");
        reports.push(fs::read(&out).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let v: serde_json::Value = serde_json::from_slice(&reports[0]).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 4 + 8 + 1);
}

#[test]
fn suite_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    fs::write(&empty, r#"{"params": [{"N": 1, "k": 0, "a": 2}], "checks": []}"#).unwrap();
    let out = dir.path().join("out.json");
    let o = fka(&["suite", empty.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["reports"].as_array().unwrap().is_empty());

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"params": [{"N": 1, "k": 0, "a": 0.5}], "checks": []}"#).unwrap();
    assert_eq!(fka(&["suite", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(fka(&["suite", "/nonexistent/suite.json"]).status.code(), Some(2));

    let bad_threads = Command::new(env!("CARGO_BIN_EXE_fka"))
        .args(["suite", empty.to_str().unwrap()])
        .env("FKA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_threads.status.code(), Some(2));
}
