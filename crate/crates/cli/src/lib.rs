//! `qcongr`: list the catalog, verify cases over instance ranges, and
//! cross-check the m-fold sum evaluator against enumeration.
//!
//! Exit status is 0 when every executed check holds, 1 when any fails and
//! 2 on a usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcongr::cases::{
    acceptance, find_case, list_cases, oracle, plan, run_suite, CaseReport, Engine, Instance, RunOptions,
};
use qcongr::congruence::DEFAULT_SEED;
use serde::{Deserialize, Serialize};

pub mod range;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "qcongr", version, about = "Exact checks of q-supercongruences and their p-adic shadows")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the catalog with anchors.
    List {
        /// Comma-separated ids or `prefix*` patterns.
        #[arg(long, default_value = "all")]
        case: String,
        #[arg(long)]
        experimental: bool,
    },
    /// Run cases and print one record per (case, instance).
    Verify(VerifyArgs),
    /// Compare the folded m-fold sums with brute-force enumeration.
    Oracle {
        #[arg(long, env = "QCONGR_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated ids or `prefix*` patterns; omit for the acceptance suite.
    #[arg(long)]
    pub case: Option<String>,
    /// `3..21` (values outside a case's constraints are skipped) or `3,7,11`.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long, env = "QCONGR_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Parameter draws per sampled case (at least 3).
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Leave out elapsed times so that runs compare byte for byte.
    #[arg(long)]
    pub no_timing: bool,
    /// Include cases kept out of the default suite.
    #[arg(long)]
    pub experimental: bool,
    #[arg(long, value_enum, default_value_t = EngineArg::Local)]
    pub engine: EngineArg,
    /// Largest modulus degree attempted.
    #[arg(long, default_value_t = RunOptions::default().degree_cap)]
    pub degree_cap: usize,
    /// Multiplication budget for one p-adic Gamma value.
    #[arg(long, default_value_t = RunOptions::default().work_cap)]
    pub work_cap: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Local,
    Exact,
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    #[serde(flatten)]
    pub report: CaseReport,
    pub engine_version: String,
    pub seed: u64,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<T> {
    pub version: u32,
    pub seed: u64,
    pub records: Vec<T>,
}

/// 0 iff every record holds.
pub fn exit_code(records: &[Record]) -> i32 {
    if records.iter().all(|r| r.report.holds) {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::List { case, experimental } => list(&case, experimental, out),
        Command::Verify(v) => verify(&v, out, err),
        Command::Oracle { seed, format } => run_oracle(seed, format, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Run(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Closed) => EXIT_OK,
    }
}

enum Failure {
    Usage(String),
    Run(String),
    /// The reader went away (`qcongr list | head`).
    Closed,
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        match e.kind() {
            std::io::ErrorKind::BrokenPipe => Failure::Closed,
            _ => Failure::Run(e.to_string()),
        }
    }
}

fn list(filter: &str, experimental: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    for c in list_cases() {
        if !qcongr::cases::matches_filter(c.id, filter) || (c.experimental && !experimental) {
            continue;
        }
        let kind = format!("{:?}", c.kind).to_lowercase();
        writeln!(out, "{:<26} {:<10} {:<36} {}", c.id, kind, c.anchor, c.target)?;
    }
    Ok(EXIT_OK)
}

fn instance_flags(v: &VerifyArgs) -> Result<Vec<(char, range::Values)>, Failure> {
    let given = [('n', &v.n), ('d', &v.d), ('m', &v.m), ('r', &v.r), ('p', &v.p), ('s', &v.s)];
    let mut out = Vec::new();
    for (k, text) in given {
        if let Some(t) = text {
            let vals = range::parse(t).map_err(|e| Failure::Usage(format!("--{k}: {e}")))?;
            out.push((k, vals));
        }
    }
    Ok(out)
}

fn set(inst: &mut Instance, k: char, x: u64) {
    let slot = match k {
        'n' => &mut inst.n,
        'd' => &mut inst.d,
        'm' => &mut inst.m,
        'r' => &mut inst.r,
        'p' => &mut inst.p,
        _ => &mut inst.s,
    };
    *slot = Some(x);
}

/// Instances for one case from the flags it reads; `None` when the flags
/// say nothing about this case.
fn instances_for(id: &str, flags: &[(char, range::Values)], skipped: &mut usize) -> Option<Vec<Instance>> {
    let info = find_case(id)?;
    let fields = info.schema.fields();
    let used: Vec<&(char, range::Values)> = flags.iter().filter(|(k, _)| fields.contains(*k)).collect();
    if used.is_empty() {
        return None;
    }
    let mut out = vec![Instance::default()];
    for (k, vals) in &used {
        out = out.into_iter().flat_map(|i| vals.values.iter().map(move |&x| { let mut j = i.clone(); set(&mut j, *k, x); j })).collect();
    }
    if fields.contains('s') && !used.iter().any(|(k, _)| *k == 's') {
        out.iter_mut().for_each(|i| i.s = Some(1));
    }
    let ranged = used.iter().any(|(_, v)| v.ranged);
    if ranged {
        let before = out.len();
        out.retain(|i| info.schema.admits(i));
        *skipped += before - out.len();
    }
    Some(out)
}

fn build_jobs(v: &VerifyArgs, err: &mut dyn Write) -> Result<Vec<(String, Instance)>, Failure> {
    let flags = instance_flags(v)?;
    let Some(filter) = &v.case else {
        if !flags.is_empty() {
            return Err(Failure::Usage("instance flags need --case".into()));
        }
        return Ok(acceptance::suite());
    };
    let mut skipped = 0;
    let mut jobs = Vec::new();
    let base = plan(filter, None, v.experimental);
    let mut seen: Vec<&str> = Vec::new();
    for (id, inst) in &base {
        if seen.last() == Some(&id.as_str()) {
            continue;
        }
        match instances_for(id, &flags, &mut skipped) {
            Some(xs) => {
                seen.push(id);
                jobs.extend(xs.into_iter().map(|i| (id.clone(), i)));
            }
            None => jobs.push((id.clone(), inst.clone())),
        }
    }
    if skipped > 0 {
        writeln!(err, "note: skipped {skipped} instance(s) outside case constraints")?;
    }
    if jobs.is_empty() {
        writeln!(err, "note: no case matches `{filter}`")?;
    }
    Ok(jobs)
}

fn verify(v: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if v.samples < 3 {
        return Err(Failure::Usage("--samples must be at least 3".into()));
    }
    let jobs = build_jobs(v, err)?;
    let opts = RunOptions {
        seed: v.seed,
        samples: v.samples,
        engine: match v.engine {
            EngineArg::Local => Engine::Local,
            EngineArg::Exact => Engine::Exact,
        },
        degree_cap: v.degree_cap,
        work_cap: v.work_cap,
        timing: !v.no_timing,
    };
    let reports = run_suite(&jobs, &opts, v.jobs).map_err(|e| Failure::Run(e.to_string()))?;
    let records: Vec<Record> = reports
        .into_iter()
        .map(|report| Record { report, engine_version: ENGINE_VERSION.into(), seed: v.seed })
        .collect();
    write!(out, "{}", emit_report(&records, v.format, v.seed))?;
    Ok(exit_code(&records))
}

/// Renders records as an aligned table (header plus one row each) or as
/// the version 1 JSON document.
pub fn emit_report(records: &[Record], format: Format, seed: u64) -> String {
    match format {
        Format::Json => {
            let doc = Document { version: 1, seed, records: records.to_vec() };
            let mut s = serde_json::to_string(&doc).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = format!("{:<26} {:<20} {:<12} {:>5} {:>7} {:>10}  {}\n", "case", "instance", "status", "val", "samples", "ms", "target");
            for r in records.iter().map(|r| &r.report) {
                let status = serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
                let val = r.valuation.map_or("-".into(), |v| v.to_string());
                let ms = r.elapsed_ms.map_or("-".into(), |t| format!("{t:.1}"));
                s += &format!("{:<26} {:<20} {:<12} {:>5} {:>7} {:>10}  {}\n", r.case, r.instance.to_string(), status, val, r.samples, ms, r.target);
            }
            s
        }
    }
}

fn run_oracle(seed: u64, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let records = oracle::oracle_suite(seed).map_err(|e| Failure::Run(e.to_string()))?;
    match format {
        Format::Json => {
            let doc = Document { version: 1, seed, records: records.clone() };
            writeln!(out, "{}", serde_json::to_string(&doc).map_err(|e| Failure::Run(e.to_string()))?)?;
        }
        Format::Table => {
            writeln!(out, "{:<26} {:<28} {:>2} {:>2}  agree", "family", "params", "m", "N")?;
            for r in &records {
                writeln!(out, "{:<26} {:<28} {:>2} {:>2}  {}", r.family, r.params, r.m, r.bound, r.agree)?;
            }
        }
    }
    Ok(if records.iter().all(|r| r.agree) { EXIT_OK } else { EXIT_FAIL })
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
