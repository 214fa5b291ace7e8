use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").canonicalize().unwrap()
}

fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

fn taucli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taucli")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn scenario(dir: &Path, statement: &str, m: &str, extra: &str) -> PathBuf {
    let path = dir.join(format!("{statement}.json"));
    let body = format!(
        r#"{{"split": {split:?}, "statement": "{statement}", "M": {m}{extra}}}"#,
        split = fixture("split.json")
    );
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn tau_of_first_example() {
    let o = taucli(&["module", "tau", "--module", &fixture("M1.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "3/4/5 ⊕ 4");
}

#[test]
fn bongartz_of_first_example() {
    let o = taucli(&["bongartz", "--module", &fixture("M1.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1/2/3 ⊕ 3/4");
}

#[test]
fn interval_arguments_need_an_algebra() {
    let o = taucli(&["module", "hom", "--algebra", &fixture("C.json"), "--module", "3/4", "--module", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn split_validate_reports_e() {
    let o = taucli(&["split", "validate", "--split", &fixture("split.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dim E = 3"), "{}", stdout(&o));
}

#[test]
fn first_example_check_holds() {
    let o = taucli(&["split", "check", "--scenario", &fixture("ex1-thm-main.json")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: holds"));
}

#[test]
fn second_example_report() {
    let o = taucli(&["--json", "split", "check", "--scenario", &fixture("ex2-thm-main3.json")]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["statement"], "THM-MAIN3");
    assert_eq!(v["left"], false);
    assert_eq!(v["right"], false);
    let confirmed: Vec<&str> = v["summands"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|row| row["inBongartzB"] == true)
        .map(|row| row["label"].as_str().unwrap())
        .collect();
    assert!(confirmed.contains(&"5") && confirmed.contains(&"2/3/4/5"), "{confirmed:?}");
}

#[test]
fn dot_node_counts() {
    for (alg, nodes) in [("C.json", 13), ("B.json", 20)] {
        let o = taucli(&["--no-cache", "catalogue", "export-dot", "--algebra", &fixture(alg)]);
        assert_eq!(code(&o), 0);
        let text = stdout(&o);
        assert!(text.starts_with("digraph"));
        assert_eq!(text.lines().filter(|l| l.trim_start().starts_with('n') && l.contains("[label=")).count(), nodes);
    }
}

#[test]
fn output_is_deterministic() {
    let cache = tempfile::tempdir().unwrap();
    let cache = cache.path().display().to_string();
    let runs: Vec<Vec<u8>> = (0..3)
        .map(|_| {
            let o = taucli(&["--json", "--cache-dir", &cache, "split", "check", "--scenario", &fixture("ex2-thm-main3.json")]);
            assert_eq!(code(&o), 0);
            o.stdout
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let dots: Vec<Vec<u8>> = (0..2)
        .map(|_| taucli(&["--no-cache", "catalogue", "export-dot", "--algebra", &fixture("B.json")]).stdout)
        .collect();
    assert_eq!(dots[0], dots[1]);
}

#[test]
fn cache_round_trip_matches_fresh_build() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().display().to_string();
    let args = ["--cache-dir", &cache, "catalogue", "export-dot", "--algebra", &fixture("B.json")];
    let first = taucli(&args);
    assert!(fs::read_dir(dir.path()).unwrap().count() >= 1, "nothing cached");
    let second = taucli(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn non_rigid_module_exits_one() {
    let o = taucli(&[
        "module",
        "check-rigid",
        "--algebra",
        &fixture("C.json"),
        "--module",
        r#"{"sum":[{"interval":"2/3"},{"interval":"3/4"}]}"#,
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn failed_hypothesis_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = scenario(dir.path(), "THM-MAIN", r#"{"sum":[{"interval":"2/3"},{"interval":"3/4"}]}"#, "");
    let o = taucli(&["split", "check", "--scenario", &path.display().to_string()]);
    assert_eq!(code(&o), 2, "{}", stdout(&o));
}

#[test]
fn malformed_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let bad = bad.display().to_string();
    assert_eq!(code(&taucli(&["algebra", "info", "--algebra", &bad])), 3);
    assert_eq!(code(&taucli(&["split", "check", "--scenario", &bad])), 3);
    assert_eq!(code(&taucli(&["module", "tau", "--algebra", &fixture("C.json"), "--module", "1/3"])), 3);
    assert_eq!(code(&taucli(&["module", "tau", "--module", "missing.json"])), 3);
    assert_eq!(code(&taucli(&["no-such-command"])), 3);
}

#[test]
fn small_limit_exits_four() {
    let o = taucli(&["--no-cache", "--max-count", "5", "catalogue", "build", "--algebra", &fixture("B.json")]);
    assert_eq!(code(&o), 4);
}

#[test]
fn scenario_run_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let path = scenario(dir.path(), "THM-MAIN", r#"{"interval":"3/4/5"}"#, r#", "U": "auto", "dot": true"#);
    let out = dir.path().join("out");
    let o = taucli(&["--out", &out.display().to_string(), "scenario", "run", "--scenario", &path.display().to_string()]);
    assert!(matches!(code(&o), 0..=2), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["statement"], "THM-MAIN");
    for name in ["ar-quiver-C.dot", "ar-quiver-B.dot"] {
        assert!(fs::read_to_string(out.join(name)).unwrap().starts_with("digraph"), "{name}");
    }
}
