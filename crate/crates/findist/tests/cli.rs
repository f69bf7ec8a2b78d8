use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_findist"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_config(dir: &Path, json: &str) -> PathBuf {
    let path = dir.join("config.json");
    std::fs::write(&path, json).unwrap();
    path
}

fn run(sub: &str, config: &Path, extra: &[&str]) -> (i32, String) {
    let out = bin().arg(sub).arg("--config").arg(config).args(extra).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn report(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn verify_two_points() {
    let dir = scratch("verify");
    let cfg = write_config(&dir, r#"{"field": {"p": 5}, "generator": {"kind": "points", "points": [[0, 0], [2, 0]]}}"#);
    let (code, out) = run("verify", &cfg, &[]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r["passed"], true);
    let hard: Vec<_> = r["findings"].as_array().unwrap().iter().filter(|f| f["hard"] == true).collect();
    assert!(hard.len() >= 5);
    assert!(hard.iter().all(|f| f["pass"] == true));
}

#[test]
fn kinematic_check_over_f3() {
    let dir = scratch("kinematic");
    let cfg = write_config(&dir, r#"{"field": {"p": 3}}"#);
    let (code, out) = run("kinematic-check", &cfg, &[]);
    assert_eq!(code, 0);
    let r = report(&out);
    let image = r["findings"].as_array().unwrap().iter().find(|f| f["name"] == "kappa_image_is_complement").unwrap();
    assert_eq!(image["lhs"], "36");
    let exceptional = r["findings"].as_array().unwrap().iter().find(|f| f["name"] == "exceptional_set_size").unwrap();
    assert_eq!(exceptional["rhs"], "4");
}

#[test]
fn clifford_check_and_field_override() {
    let dir = scratch("clifford");
    let cfg = write_config(&dir, r#"{"field": {"p": 7}, "samples": 200}"#);
    let (code, out) = run("clifford-check", &cfg, &["--field", "3"]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r["field"], "F_3");
    assert!(r["findings"].as_array().unwrap().iter().any(|f| f["name"] == "rho_star_surjective" && f["pass"] == true));
}

#[test]
fn sweep_writes_one_row_per_size() {
    let dir = scratch("sweep");
    let cfg = write_config(
        &dir,
        r#"{"field": {"p": 31}, "seed": 3, "sweep": {"fields": [{"p": 31}], "sizes": [20, 40, 60, 80, 97]}}"#,
    );
    let out = dir.join("report.json");
    let (code, _) = run("sweep", &cfg, &["--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let csv = std::fs::read_to_string(dir.join("report.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("field,q,generator,seed,size,pind,size_two_thirds,pind_ratio"));
}

#[test]
fn reports_do_not_depend_on_workers_or_runs() {
    let dir = scratch("determinism");
    let base = r#""field": {"p": 7}, "generator": {"kind": "random", "size": 12}, "seed": 42"#;
    let one = write_config(&dir, &format!("{{{base}, \"workers\": 1}}"));
    let (_, a) = run("reduce", &one, &[]);
    let (_, b) = run("reduce", &one, &[]);
    let four = dir.join("four.json");
    std::fs::write(&four, format!("{{{base}, \"workers\": 4}}")).unwrap();
    let (code, c) = run("reduce", &four, &[]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a, c);
    let (_, d) = run("reduce", &one, &["--seed", "43"]);
    assert_ne!(a, d);
}

#[test]
fn reduce_writes_discrepancy_witnesses() {
    let dir = scratch("witnesses");
    let witnesses = dir.join("witnesses.json");
    let cfg = write_config(
        &dir,
        &format!(
            r#"{{"field": {{"p": 5}}, "generator": {{"kind": "random", "size": 5}}, "outputs": {{"witnesses": {:?}}}}}"#,
            witnesses.to_str().unwrap()
        ),
    );
    let (code, out) = run("reduce", &cfg, &[]);
    assert_eq!(code, 0);
    let r = report(&out);
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&witnesses).unwrap()).unwrap();
    assert_eq!(saved.as_array().unwrap().len() as u64, r["details"]["discrepancies"].as_u64().unwrap());
}

#[test]
fn prune_and_stats() {
    let dir = scratch("prune");
    let cfg = write_config(&dir, r#"{"field": {"p": 11}, "generator": {"kind": "on-line", "line": [1, 2, 3]}}"#);
    let (code, out) = run("prune", &cfg, &[]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["details"]["remaining"], 0);
    let (code, out) = run("stats", &cfg, &[]);
    assert_eq!(code, 0);
    assert_eq!(report(&out)["details"]["stats"]["max_line"], 11);
}

#[test]
fn exit_codes() {
    let dir = scratch("exit");
    let missing = dir.join("missing.json");
    assert_eq!(run("stats", &missing, &[]).0, 2);
    let bad = write_config(&dir, r#"{"field": {"p": 7}, "unknown": true}"#);
    assert_eq!(run("stats", &bad, &[]).0, 2);
    let iso = dir.join("iso.json");
    std::fs::write(&iso, r#"{"field": {"p": 7}, "generator": {"kind": "isotropic-line"}}"#).unwrap();
    assert_eq!(run("stats", &iso, &[]).0, 2);
    assert_eq!(run("stats", &iso, &["--field", "13"]).0, 0);
    let strict = dir.join("strict.json");
    std::fs::write(
        &strict,
        r#"{"field": {"p": 11}, "sweep": {"fields": [{"p": 11}], "sizes": [10]},
            "thresholds": {"pind_ratio_min": 100.0, "enforce_monitors": true}}"#,
    )
    .unwrap();
    assert_eq!(run("sweep", &strict, &[]).0, 1);
    let soft = dir.join("soft.json");
    std::fs::write(&soft, r#"{"field": {"p": 11}, "sweep": {"fields": [{"p": 11}], "sizes": [10]}, "thresholds": {"pind_ratio_min": 100.0}}"#).unwrap();
    assert_eq!(run("sweep", &soft, &[]).0, 0);
    let out = bin().arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
