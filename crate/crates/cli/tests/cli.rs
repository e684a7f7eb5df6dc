use std::process::{Command, Output};

use harmonia_cli::{defaults, run, validate, ExperimentConfig, Format, CATALOG};

fn harmonia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonia")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn run_writes_csv_with_metadata() {
    let o = harmonia(&["run", "--experiment", "cosecant", "--out", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# config: {"));
    assert!(lines.next().unwrap().starts_with("# version: "));
    assert!(lines.next().unwrap().starts_with("# wall_clock_s: "));
    assert!(lines.next().unwrap().contains("pass"));
    assert!(stderr(&o).contains("all 4 rows pass"));
}

#[test]
fn json_output_parses() {
    let o = harmonia(&["run", "--experiment", "theta", "--format", "json", "--out", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["metadata"]["config"]["experiment"] == "theta");
    assert!(v["data"]["s"].as_array().is_some_and(|r| !r.is_empty()));
}

#[test]
fn validation_failures_exit_two() {
    let bad_n = harmonia(&["validate", "--experiment", "plancherel", "--set", "grid.n=100"]);
    assert_eq!(bad_n.status.code(), Some(2));
    let typo = harmonia(&["run", "--experiment", "plancherl"]);
    assert_eq!(typo.status.code(), Some(2));
    assert!(stderr(&typo).contains("plancherel"), "{}", stderr(&typo));
    let field = harmonia(&["config", "--experiment", "theta", "--set", "grdi.n=64"]);
    assert_eq!(field.status.code(), Some(2));
    assert!(stderr(&field).contains("grid"), "{}", stderr(&field));
    let nothing = harmonia(&["run"]);
    assert_eq!(nothing.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_one() {
    let o = harmonia(&["run", "--experiment", "theta", "--out", "/nonexistent/dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
}

#[test]
fn validate_ok_and_list() {
    let o = harmonia(&["validate", "--experiment", "czd"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "ok");
    let l = harmonia(&["list"]);
    for e in CATALOG {
        assert!(stdout(&l).contains(e.name));
    }
    let f = harmonia(&["list", "riesz"]);
    assert!(!stdout(&f).contains("plancherel"));
}

#[test]
fn config_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("harmonia-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("jump.json");
    let o = harmonia(&["config", "--experiment", "jump", "--seed", "9"]);
    std::fs::write(&path, stdout(&o)).unwrap();
    let p = path.to_str().unwrap();
    let cfg: ExperimentConfig = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cfg.seed, 9);
    let a = harmonia(&["run", "--config", p, "--out", "-"]);
    let b = harmonia(&["run", "--experiment", "jump", "--seed", "9", "--out", "-"]);
    let data = |o: &Output| stdout(o).lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n");
    assert_eq!(data(&a), data(&b));
    let clash = harmonia(&["run", "--config", p, "--experiment", "theta"]);
    assert_eq!(clash.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn set_overrides_apply() {
    let mut cfg = defaults("czd").unwrap();
    cfg.set("params.trials=3").unwrap();
    cfg.set("seed=11").unwrap();
    let t = run(&cfg).unwrap();
    assert_eq!(t.metadata.as_ref().unwrap().config.seed, 11);
    assert!(t.passed().unwrap());
    assert!(cfg.set("params.trials").is_err());
}

#[test]
fn every_default_validates() {
    for e in CATALOG {
        assert!(validate(&(e.defaults)()).is_empty(), "{}", e.name);
    }
}

#[test]
fn data_sections_are_reproducible() {
    for name in ["czd", "heisenberg", "riesz_projection"] {
        let mut cfg = defaults(name).unwrap();
        cfg.format = Format::Csv;
        assert_eq!(run(&cfg).unwrap().csv_data(), run(&cfg).unwrap().csv_data(), "{name}");
    }
}
