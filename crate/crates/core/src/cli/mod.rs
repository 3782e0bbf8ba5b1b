//! The `hopfrad` command line: validation, radicals, brute-force oracles and
//! corpus regression over JSON definition files.

pub mod definition;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub use definition::{DefinitionFile, Num, SCHEMA_VERSION};

use crate::algcore::fixtures::builtin_corpus;
use crate::algcore::ValidationReport;
use crate::error::{Error, Result};
use crate::exactla::{self, DEFAULT_CAP};
use crate::haction::{CheckLevel, HModuleAlgebra};
use crate::hradical::{
    comparison_report, fisher_radical, gt_radical, h_baer_radical, h_brown_mccoy_radical, h_jacobson_radical,
    h_locally_nilpotent_radical, oracle, wh_exact_set, BaseRadical, CheckStatus, Options, RadicalResult,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "hopfrad", version, about = "Radicals of finite-dimensional Hopf module algebras")]
pub struct Cli {
    /// Seed for randomized searches (decimal or 0x-prefixed hex).
    #[arg(long, global = true, default_value = "0xA1CEB", value_parser = parse_seed)]
    pub seed: u64,
    /// Bound on p^n for anything that enumerates a vector space.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Overrides the level declared in the definition file.
    #[arg(long, global = true)]
    pub check_level: Option<CheckLevel>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebra, Hopf and action axioms.
    Validate { path: PathBuf },
    /// Compute radicals: baer, jacobson, brownmccoy, gt, locnil, fisher:<base> or all.
    Radical {
        path: PathBuf,
        #[arg(long, default_value = "all")]
        which: String,
    },
    /// Recompute every radical by enumeration and diff against the fast routes.
    Oracle { path: PathBuf },
    /// Run every check on each definition file in a directory.
    Regress { dir: PathBuf },
    /// Manage the builtin fixture corpus.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    /// Write every builtin fixture as `<name>.json` into a directory.
    Export { dir: PathBuf },
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn options(cli: &Cli) -> Options {
    Options {
        seed: cli.seed,
        cap: cli.cap,
    }
}

fn emit(cli: &Cli, out: &mut dyn Write, value: &Value, text: &str) -> Result<()> {
    match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("serializable"))?,
        Format::Text => write!(out, "{text}")?,
    }
    Ok(())
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub fn load(path: &Path) -> Result<(DefinitionFile, HModuleAlgebra)> {
    let text = fs::read_to_string(path)?;
    let def = DefinitionFile::from_json(&text).map_err(|e| match e {
        Error::Parse(s) => Error::Parse(format!("{}: {s}", path.display())),
        other => Error::Parse(format!("{}: {other}", path.display())),
    })?;
    let m = def.build().map_err(|e| match e {
        Error::Parse(s) => Error::Parse(format!("{}: {s}", path.display())),
        Error::DimensionMismatch { .. } | Error::Precondition(_) | Error::InvalidField(_) => {
            Error::Parse(format!("{}: {e}", path.display()))
        }
        other => other,
    })?;
    Ok((def, m))
}

/// Algebra, Hopf and action reports at the given level.
pub fn validate_all(m: &HModuleAlgebra, level: CheckLevel) -> [(&'static str, ValidationReport); 3] {
    [
        ("algebra", m.r().validate()),
        ("hopf", m.h().validate()),
        ("action", m.validate_action(level)),
    ]
}

/// Per-structure validation reports as JSON.
pub fn validation_value(reports: &[(&'static str, ValidationReport); 3]) -> Value {
    let mut map = serde_json::Map::new();
    for (k, r) in reports {
        map.insert((*k).into(), json!({ "ok": r.is_ok(), "failures": r.failures }));
    }
    Value::Object(map)
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let opts = options(cli);
    match &cli.command {
        Command::Validate { path } => {
            let (def, m) = load(path)?;
            let level = cli.check_level.unwrap_or(def.expected_level);
            let reports = validate_all(&m, level);
            let ok = reports.iter().all(|(_, r)| r.is_ok());
            let value = json!({
                "command": "validate",
                "name": def.name,
                "level": level,
                "ok": ok,
                "reports": validation_value(&reports),
            });
            let mut text = String::new();
            for (k, r) in &reports {
                text.push_str(&format!("{k}: {}\n", if r.is_ok() { "ok".to_string() } else { r.to_string() }));
            }
            emit(cli, out, &value, &text)?;
            Ok(if ok { 0 } else { 2 })
        }
        Command::Radical { path, which } => {
            let (def, m) = load(path)?;
            let level = cli.check_level.unwrap_or(def.expected_level);
            let reports = validate_all(&m, level);
            if !reports.iter().all(|(_, r)| r.is_ok()) {
                let value = json!({"command": "radical", "ok": false, "reports": validation_value(&reports)});
                emit(cli, out, &value, "definition does not validate\n")?;
                return Ok(2);
            }
            let (value, text) = radical_command(&def, &m, which, &opts)?;
            emit(cli, out, &value, &text)?;
            Ok(0)
        }
        Command::Oracle { path } => {
            let (def, m) = load(path)?;
            if m.field().is_finite() {
                exactla::check_cap(m.field(), m.dim_r(), opts.cap)?;
            }
            let rep = oracle::oracle(&m, &opts)?;
            let value = json!({
                "command": "oracle",
                "name": def.name,
                "seed": opts.seed,
                "report": to_value(&rep),
            });
            let mut text = format!("{}: {} H-ideals\n", def.name, rep.h_ideal_count);
            for (k, p) in &rep.radicals {
                text.push_str(&format!("{k}: {}\n", p.note));
            }
            for d in &rep.diffs {
                text.push_str(&format!("DIFF {d}\n"));
            }
            emit(cli, out, &value, &text)?;
            Ok(if rep.diffs.is_empty() { 0 } else { 5 })
        }
        Command::Regress { dir } => {
            let (lines, code) = regress(dir, &opts, cli.check_level, err)?;
            let text: String = lines.iter().map(|l| format!("{l}\n")).collect();
            let value = json!({
                "command": "regress",
                "seed": opts.seed,
                "cap": opts.cap.to_string(),
                "results": to_value(&lines),
            });
            emit(cli, out, &value, &text)?;
            Ok(code)
        }
        Command::Fixtures {
            action: FixturesCommand::Export { dir },
        } => {
            let written = export_fixtures(dir)?;
            let text: String = written.iter().map(|p| format!("{p}\n")).collect();
            emit(cli, out, &json!({"command": "fixtures export", "written": written}), &text)?;
            Ok(0)
        }
    }
}

/// Writes the builtin corpus as definition files; returns the file names.
pub fn export_fixtures(dir: &Path) -> Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for fx in builtin_corpus()? {
        let name = format!("{}.json", fx.name);
        fs::write(dir.join(&name), DefinitionFile::from_fixture(&fx).to_json())?;
        written.push(name);
    }
    Ok(written)
}

fn radical_entry(r: Result<RadicalResult>) -> Result<Value> {
    match r {
        Ok(res) => {
            let mut v = to_value(&res);
            v["status"] = json!("computed");
            Ok(v)
        }
        Err(e @ Error::Contradiction(_)) => Err(e),
        Err(e) => Ok(json!({"status": "unsupported", "reason": e.to_string()})),
    }
}

fn entry_text(name: &str, v: &Value) -> String {
    if v.get("basis").is_some() {
        format!("{name}: {} via {}\n", v["basis"], v["method"].as_str().unwrap_or(""))
    } else {
        format!("{name}: {}\n", v.get("reason").and_then(Value::as_str).unwrap_or("unavailable"))
    }
}

/// JSON and text renderings of one radical (`baer`, `gt`, `fisher:<base>`, ...) or `all`.
pub fn radical_command(def: &DefinitionFile, m: &HModuleAlgebra, which: &str, opts: &Options) -> Result<(Value, String)> {
    let single = |name: &str, r: Result<RadicalResult>| -> Result<(Value, String)> {
        let v = radical_entry(r)?;
        let text = entry_text(name, &v);
        Ok((
            json!({"command": "radical", "name": def.name, "seed": opts.seed, "which": name, "result": v}),
            text,
        ))
    };
    match which {
        "baer" => single(which, h_baer_radical(m, opts)),
        "jacobson" => single(which, h_jacobson_radical(m, opts)),
        "brownmccoy" => single(which, h_brown_mccoy_radical(m, opts)),
        "locnil" => single(which, h_locally_nilpotent_radical(m, opts)),
        "gt" => {
            let t = def.integral()?;
            single(which, gt_radical(m, t.as_deref(), opts))
        }
        "all" => {
            let rep = comparison_report(m, opts)?;
            let mut text = String::new();
            let mut entries = serde_json::Map::new();
            for (k, e) in &rep.entries {
                let v = to_value(e);
                text.push_str(&entry_text(k, &v));
                entries.insert(k.clone(), v);
            }
            for c in &rep.checks {
                text.push_str(&format!("check {} {}: {}\n", c.name, status_word(c.status), c.detail));
            }
            for o in &rep.observations {
                text.push_str(&format!("note: {o}\n"));
            }
            Ok((
                json!({
                    "command": "radical",
                    "name": def.name,
                    "seed": opts.seed,
                    "which": "all",
                    "entries": entries,
                    "checks": to_value(&rep.checks),
                    "observations": rep.observations,
                }),
                text,
            ))
        }
        other => match other.strip_prefix("fisher:") {
            Some(base) => {
                let base: BaseRadical = base.parse()?;
                single(other, fisher_radical(m, base, opts))
            }
            None => Err(Error::Parse(format!(
                "unknown radical {other:?} (baer|jacobson|brownmccoy|gt|locnil|fisher:<base>|all)"
            ))),
        },
    }
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Unknown => "UNKNOWN",
        CheckStatus::Unsupported => "UNSUPPORTED",
    }
}

/// One line of a regression report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressLine {
    pub fixture: String,
    pub check: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl std::fmt::Display for RegressLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} {}", self.fixture, self.check, status_word(self.status))?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

/// Runs every check on every `*.json` file of `dir`, in file-name order.
/// The exit code is 0 when nothing failed, 5 after an internal contradiction
/// and 2 for any other failure.
pub fn regress(
    dir: &Path,
    opts: &Options,
    level: Option<CheckLevel>,
    err: &mut dyn Write,
) -> Result<(Vec<RegressLine>, i32)> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        writeln!(err, "warning: no definition files in {}", dir.display())?;
    }
    let mut lines = Vec::new();
    let mut contradiction = false;
    for path in &files {
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        match regress_one(path, opts, level) {
            Ok(mut ls) => lines.append(&mut ls),
            Err(e) => {
                contradiction |= matches!(e, Error::Contradiction(_));
                lines.push(RegressLine {
                    fixture: stem,
                    check: "run".into(),
                    status: CheckStatus::Fail,
                    detail: e.to_string(),
                });
            }
        }
    }
    let failed = lines.iter().any(|l| l.status == CheckStatus::Fail);
    let code = if contradiction {
        5
    } else if failed {
        2
    } else {
        0
    };
    Ok((lines, code))
}

fn regress_one(path: &Path, opts: &Options, level: Option<CheckLevel>) -> Result<Vec<RegressLine>> {
    let (def, m) = load(path)?;
    let name = def.name.clone();
    let mut lines = Vec::new();
    let mut push = |check: &str, status: CheckStatus, detail: String| {
        lines.push(RegressLine {
            fixture: name.clone(),
            check: check.into(),
            status,
            detail,
        })
    };
    let level = level.unwrap_or(def.expected_level);
    for (k, r) in validate_all(&m, level) {
        let status = if r.is_ok() { CheckStatus::Pass } else { CheckStatus::Fail };
        push(&format!("validate-{k}"), status, if r.is_ok() { String::new() } else { r.to_string() });
    }
    let rep = comparison_report(&m, opts)?;
    for c in &rep.checks {
        push(&c.name, c.status, if c.status == CheckStatus::Pass { String::new() } else { c.detail.clone() });
    }
    for (k, expected) in def.expected_spaces()? {
        let (status, detail) = match rep.space(&k) {
            None => (CheckStatus::Unsupported, format!("{k} unavailable")),
            Some(got) if got == &expected && m.is_h_stable(&expected) => (CheckStatus::Pass, String::new()),
            Some(got) => {
                let stable = if m.is_h_stable(&expected) { "" } else { " (expected subspace is not H-stable)" };
                (CheckStatus::Fail, format!("expected {expected}, computed {got}{stable}"))
            }
        };
        push(&format!("expected:{k}"), status, detail);
    }
    if m.field().is_finite() && exactla::check_cap(m.field(), m.dim_r(), opts.cap).is_ok() {
        let o = oracle::oracle(&m, opts)?;
        let status = if o.diffs.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail };
        push("oracle", status, o.diffs.join("; "));
        if let Some(l) = def.spanning_set()? {
            let wl = wh_exact_set(&m, Some(&l), opts.cap);
            let wh = wh_exact_set(&m, None, opts.cap)?;
            match wl {
                Ok(wl) => {
                    let bad = wl.iter().zip(&wh).filter(|(a, b)| a != b).count();
                    let status = if bad == 0 { CheckStatus::Pass } else { CheckStatus::Fail };
                    push("wl-spanning-set", status, if bad == 0 { String::new() } else { format!("{bad} elements differ") });
                }
                Err(e) => push("wl-spanning-set", CheckStatus::Fail, e.to_string()),
            }
        }
    } else {
        push("oracle", CheckStatus::Unsupported, "needs a prime field within the cap".into());
    }
    Ok(lines)
}
