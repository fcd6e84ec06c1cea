//! Command-line front end.
//!
//! `qwgeo <command> [flags]`, optionally with `--config file.json`. Config keys are
//! the flag names (snake or kebab case) plus an optional `"command"`; flags given on
//! the command line override the file. Without `--out` the CSV goes to stdout; with
//! it, the CSV and a `<stem>.manifest.json` are written and a summary is printed.
//!
//! Exit codes: 0 success, 2 schema or input error, 3 numerical failure.

mod angle;
mod commands;

pub use angle::parse_angle;
pub use commands::{Cli, Cmd};

use crate::error::QwError;
use clap::Parser;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_SCHEMA: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "QWGEO_WORKERS";

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Numerical(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Schema(_) => EXIT_SCHEMA,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Schema(m) => write!(f, "schema error: {}", m),
            CliError::Numerical(m) => write!(f, "numerical error: {}", m),
        }
    }
}

impl From<QwError> for CliError {
    fn from(e: QwError) -> Self {
        if e.is_input_error() {
            CliError::Schema(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

/// One CSV field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    F(f64),
    I(i64),
    B(bool),
    S(String),
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::F(x) => fmt_float(*x),
            Cell::I(i) => i.to_string(),
            Cell::B(b) => b.to_string(),
            Cell::S(s) => s.clone(),
        }
    }
    fn to_json(&self) -> Value {
        match self {
            Cell::F(x) if x.is_finite() => json!(x),
            Cell::F(x) => json!(x.to_string()),
            Cell::I(i) => json!(i),
            Cell::B(b) => json!(b),
            Cell::S(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::F(x)
    }
}
impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::I(x)
    }
}
impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::I(x as i64)
    }
}
impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::B(x)
    }
}
impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::S(x.to_string())
    }
}

/// 13 significant digits in scientific notation.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{:.12e}", x)
    }
}

/// Result of one command: a table, summary values and the resolved inputs.
#[derive(Debug, Clone)]
pub struct Report {
    /// Column names with units in brackets.
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(String, Cell)>,
}

impl Report {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new(), summary: Vec::new() }
    }
    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }
    pub fn note(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.push((key.to_string(), value.into()));
    }
    pub fn summary_value(&self, key: &str) -> Option<&Cell> {
        self.summary.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.iter().map(Cell::render).collect::<Vec<_>>().join(","));
            s.push('\n');
        }
        s
    }
}

/// Pulls `--config <path>` (or `--config=<path>`) out of the argument list and splices
/// the file's keys in as flags right after the subcommand.
pub fn expand_config(argv: &[String]) -> Result<Vec<String>, CliError> {
    let mut rest = Vec::with_capacity(argv.len());
    let mut config: Option<PathBuf> = None;
    let mut i = 0;
    while i < argv.len() {
        let a = &argv[i];
        if a == "--config" {
            let p = argv.get(i + 1).ok_or_else(|| CliError::Schema("--config needs a path".into()))?;
            config = Some(PathBuf::from(p));
            i += 2;
            continue;
        }
        if let Some(p) = a.strip_prefix("--config=") {
            config = Some(PathBuf::from(p));
        } else {
            rest.push(a.clone());
        }
        i += 1;
    }
    let Some(path) = config else { return Ok(rest) };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Schema(format!("cannot read config {}: {}", path.display(), e)))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("config {} is not JSON: {}", path.display(), e)))?;
    let Value::Object(map) = value else {
        return Err(CliError::Schema("config must be a JSON object".into()));
    };
    let named = rest.get(1).filter(|s| !s.starts_with('-')).cloned();
    let mut flags = Vec::new();
    let mut command = None;
    for (k, v) in map {
        if k == "command" {
            match v {
                Value::String(s) => command = Some(s),
                _ => return Err(CliError::Schema("\"command\" must be a string".into())),
            }
            continue;
        }
        let flag = format!("--{}", k.replace('_', "-"));
        match v {
            Value::Null | Value::Bool(false) => {}
            Value::Bool(true) => flags.push(flag),
            Value::Number(n) => flags.push(format!("{}={}", flag, n)),
            Value::String(s) => flags.push(format!("{}={}", flag, s)),
            Value::Array(_) | Value::Object(_) => {
                return Err(CliError::Schema(format!("config key \"{}\" must be a scalar", k)));
            }
        }
    }
    let prog = rest.first().cloned().unwrap_or_else(|| "qwgeo".into());
    let (cmd, tail) = match (named, command) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Schema(format!("command \"{}\" conflicts with config command \"{}\"", a, b)));
        }
        (Some(a), _) => (a, rest[2..].to_vec()),
        (None, Some(b)) => (b, rest[1..].to_vec()),
        (None, None) => return Err(CliError::Schema("no command given on the command line or in the config".into())),
    };
    let mut out = vec![prog, cmd];
    out.extend(flags);
    out.extend(tail);
    Ok(out)
}

fn worker_count(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(w) = flag {
        return if w == 0 { Err(CliError::Schema("--workers must be at least 1".into())) } else { Ok(w) };
    }
    match std::env::var(WORKERS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(w) if w > 0 => Ok(w),
            _ => Err(CliError::Schema(format!("{} must be a positive integer, got \"{}\"", WORKERS_ENV, s))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

fn manifest_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "run".into());
    out.with_file_name(format!("{}.manifest.json", stem))
}

fn write_outputs(
    report: &Report,
    out: &Path,
    command: &str,
    inputs: Value,
    workers: usize,
    seconds: f64,
) -> Result<PathBuf, CliError> {
    let io = |e: std::io::Error| CliError::Schema(format!("cannot write {}: {}", out.display(), e));
    std::fs::write(out, report.to_csv()).map_err(io)?;
    let summary: serde_json::Map<String, Value> = report.summary.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
    let manifest = json!({
        "command": command,
        "inputs": inputs,
        "csv": out.display().to_string(),
        "columns": report.header,
        "rows": report.rows.len(),
        "summary": summary,
        "versions": { "qwgeo": env!("CARGO_PKG_VERSION") },
        "workers": workers,
        "wall_time_s": seconds,
    });
    let mp = manifest_path(out);
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    std::fs::write(&mp, text + "\n").map_err(io)?;
    Ok(mp)
}

/// Parses, runs and reports; returns the process exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    match run_inner(&argv, stdout) {
        Ok(()) => 0,
        Err(Failure::Clap(e)) => {
            let code = if e.use_stderr() { EXIT_SCHEMA } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{}", text);
            } else {
                let _ = write!(stderr, "{}", text);
            }
            code
        }
        Err(Failure::Cli(e)) => {
            let _ = writeln!(stderr, "qwgeo: {}", e);
            e.code()
        }
    }
}

enum Failure {
    Clap(clap::Error),
    Cli(CliError),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Cli(e)
    }
}

fn run_inner(argv: &[String], stdout: &mut dyn Write) -> Result<(), Failure> {
    let argv = expand_config(argv)?;
    let cli = Cli::try_parse_from(&argv).map_err(Failure::Clap)?;
    let common = cli.cmd.common().clone();
    let workers = worker_count(common.workers)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Numerical(format!("cannot start worker pool: {}", e)))?;
    let start = Instant::now();
    let report = pool.install(|| cli.cmd.execute())?;
    let seconds = start.elapsed().as_secs_f64();
    let io = |e: std::io::Error| Failure::Cli(CliError::Schema(format!("cannot write output: {}", e)));
    match &common.out {
        None => stdout.write_all(report.to_csv().as_bytes()).map_err(io)?,
        Some(out) => {
            let mp = write_outputs(&report, out, cli.cmd.name(), cli.cmd.inputs(), workers, seconds)?;
            for (k, v) in &report.summary {
                writeln!(stdout, "{},{}", k, v.render()).map_err(io)?;
            }
            writeln!(stdout, "csv,{}", out.display()).map_err(io)?;
            writeln!(stdout, "manifest,{}", mp.display()).map_err(io)?;
        }
    }
    Ok(())
}

/// Convenience wrapper: runs a command in-process and returns its report.
pub fn report_for<I, S>(args: I) -> Result<Report, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let argv = expand_config(&argv)?;
    let cli = Cli::try_parse_from(&argv).map_err(|e| CliError::Schema(e.to_string()))?;
    cli.cmd.execute()
}
