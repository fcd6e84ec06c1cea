// End-to-end runs of the binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qwgeo"))
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("qwgeo-cli-{}-{}", name, std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gamma-c", "--theta1=-3pi/8", "--theta2=pi/4"]).status.code(), Some(0));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["gamma-c", "--theta1=abc"]).status.code(), Some(2));
    assert_eq!(run(&["ssh", "--cells=0"]).status.code(), Some(2));
    // bands touch at k = 0: numerical failure
    let o = run(&["chern", "--theta1=3pi/2", "--theta2=pi"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn csv_header_and_rows() {
    let o = run(&["winding", "--theta1=-3pi/8", "--theta2=pi/8", "--gamma=0", "--gamma-to=0.3", "--points=4", "--kcount=501"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("theta1"));
    assert_eq!(lines.len(), 5);
    let cols = lines[0].split(',').count();
    assert!(lines[1..].iter().all(|l| l.split(',').count() == cols));
}

fn csv_with_workers(dir: &Path, workers: &str) -> Vec<u8> {
    let out = dir.join(format!("w{}.csv", workers));
    let o = bin()
        .env("QWGEO_WORKERS", workers)
        .args(["realspace-winding", "--theta1=-pi", "--theta1-to=pi", "--points=13", "--theta2=pi/4", "--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read(out).unwrap()
}

#[test]
fn output_independent_of_worker_count() {
    let d = scratch("workers");
    let one = csv_with_workers(&d, "1");
    let four = csv_with_workers(&d, "4");
    assert_eq!(one, four);
    let bad = bin().env("QWGEO_WORKERS", "zero").args(["gamma-c"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    std::fs::remove_dir_all(d).unwrap();
}

#[test]
fn manifest_records_run() {
    let d = scratch("manifest");
    let out = d.join("g.csv");
    let o = run(&["gamma-c", "--theta1=-3pi/8", "--theta2=5pi/8", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(d.join("g.manifest.json")).unwrap()).unwrap();
    assert_eq!(m["command"], "gamma-c");
    for key in ["inputs", "versions", "wall_time_s", "columns", "rows"] {
        assert!(m.get(key).is_some(), "manifest lacks {}", key);
    }
    let gc: f64 = stdout(&o).lines().find_map(|l| l.strip_prefix("gamma_c,")).unwrap().parse().unwrap();
    assert!((gc - 0.2832).abs() < 5e-4);
    std::fs::remove_dir_all(d).unwrap();
}

#[test]
fn recipes_run() {
    let d = scratch("recipes");
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("recipes");
    let mut count = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        let out = d.join(p.file_stem().unwrap()).with_extension("csv");
        let o = run(&["--config", p.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}: {}", p.display(), String::from_utf8_lossy(&o.stderr));
        let rows = std::fs::read_to_string(&out).unwrap().lines().count();
        assert!(rows > 2, "{} produced {} lines", p.display(), rows);
        count += 1;
    }
    assert_eq!(count, 5);
    std::fs::remove_dir_all(d).unwrap();
}

#[test]
fn config_values_yield_to_flags() {
    let d = scratch("config");
    let cfg = d.join("c.json");
    std::fs::write(&cfg, r#"{"command": "ssh", "v": 1.0, "w": 0.5, "cells": 20}"#).unwrap();
    let trivial = stdout(&run(&["--config", cfg.to_str().unwrap()]));
    let topo = stdout(&run(&["--config", cfg.to_str().unwrap(), "--v=0.5", "--w=1.0"]));
    assert_ne!(trivial, topo);
    std::fs::write(&cfg, r#"{"command": "ssh", "bogus": 1}"#).unwrap();
    assert_eq!(run(&["--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(d).unwrap();
}
