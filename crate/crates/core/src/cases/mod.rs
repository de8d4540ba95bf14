//! The executable catalog: every displayed congruence, identity and lemma
//! as a runnable case, plus the runner that turns cases into reports.

pub mod acceptance;
mod catalog;
mod identities;
pub mod manifest;
pub mod oracle;
mod properties;
mod qcong;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, QFrac, Rational};
use crate::congruence::{
    build_modulus, congruent, sample_params, verify_local, verify_local_qa, CongruenceVerdict, FactorCheck, DEFAULT_SEED,
};
use crate::error::{Error, Result};
use crate::padic::{run_numeric_case, DEFAULT_WORK_CAP};
use crate::qseries::{Atom, Exact, Params};

pub use catalog::{default_instances, find_case, list_cases, FAMILY_GRID};
pub use qcong::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    Congruence,
    Identity,
    Property,
    Numeric,
}

/// How parameters are bound during a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// No parameters, or parameters chosen by the case itself.
    Exact,
    /// `a` stays symbolic: coefficients live in Q(a).
    ExactOverQa,
    /// `a`, `b`, `c` drawn from the seeded sampler; every draw must pass.
    Sampled,
}

/// Which instance fields a case reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Schema {
    /// odd `n`
    OddN,
    /// `n = 1 (mod 3)`
    NOneMod3,
    /// `d, m, r, n` with `n = r (mod d)`
    Dmrn,
    /// `d, r, n` with `gcd(n, d) = 1`
    Drn,
    /// `d, m, n` with `n = 1 (mod d)`
    Dmn,
    /// truncation order `m`
    Trunc,
    /// nothing
    Empty,
    /// prime `p`, exponent `s`
    Ps,
    /// `p, s` and `d, m, r`
    Pdmr,
}

impl Schema {
    /// Instance fields the schema reads, as a subset of `dmrnps`.
    pub fn fields(&self) -> &'static str {
        match self {
            Schema::OddN | Schema::NOneMod3 => "n",
            Schema::Dmrn => "dmrn",
            Schema::Drn => "drn",
            Schema::Dmn => "dmn",
            Schema::Trunc => "m",
            Schema::Empty => "",
            Schema::Ps => "ps",
            Schema::Pdmr => "psdmr",
        }
    }

    /// Cheap test of the congruence condition on `n`; instances that pass
    /// can still be rejected by the case itself.
    pub fn admits(&self, inst: &Instance) -> bool {
        let Some(n) = inst.n else { return true };
        let gcd = |a: u64, b: u64| num_integer::Integer::gcd(&a, &b);
        match (self, inst.d, inst.r) {
            (Schema::OddN, _, _) => n % 2 == 1,
            (Schema::NOneMod3, _, _) => n % 3 == 1,
            (Schema::Dmrn, Some(d), Some(r)) => d > 0 && n >= r && n % d == r % d,
            (Schema::Drn, Some(d), _) => gcd(n, d) == 1,
            (Schema::Dmn, Some(d), _) => d > 0 && n % d == 1,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseInfo {
    pub id: &'static str,
    pub kind: CaseKind,
    pub mode: Mode,
    pub schema: Schema,
    /// Where the statement is displayed.
    pub anchor: &'static str,
    /// Modulus, or a short description of what is compared.
    pub target: &'static str,
    /// Sampled parameters, a subset of `abc`.
    pub needs: &'static str,
    /// Kept out of the default suite.
    pub experimental: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u64>,
}

impl Instance {
    pub fn n(n: u64) -> Self {
        Instance { n: Some(n), ..Self::default() }
    }

    pub fn dmrn(d: u64, m: u64, r: u64, n: u64) -> Self {
        Instance { d: Some(d), m: Some(m), r: Some(r), n: Some(n), ..Self::default() }
    }

    pub fn trunc(m: u64) -> Self {
        Instance { m: Some(m), ..Self::default() }
    }

    pub fn ps(p: u64, s: u64) -> Self {
        Instance { p: Some(p), s: Some(s), ..Self::default() }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields = [("d", self.d), ("m", self.m), ("r", self.r), ("n", self.n), ("p", self.p), ("s", self.s)];
        let parts: Vec<String> = fields.iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))).collect();
        if parts.is_empty() {
            write!(f, "-")
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    /// The difference has a denominator sharing a factor with the modulus.
    NotCoprime,
    OutOfDomain,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub instance: Instance,
    pub kind: CaseKind,
    pub mode: Mode,
    pub status: Status,
    pub holds: bool,
    pub denominator_coprime: bool,
    /// Valuation of the difference at `Phi_n` (minimum over samples);
    /// absent when it vanishes identically or the case has no such factor.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub valuation: Option<i64>,
    pub target: String,
    pub samples: usize,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub factors: Vec<FactorCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
}

/// Evaluation strategy for congruence cases.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// One local ring per irreducible modulus factor.
    #[default]
    Local,
    /// Full rational functions, then `gcd` and remainder against the expanded modulus.
    Exact,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub samples: usize,
    pub engine: Engine,
    /// Largest modulus degree attempted.
    pub degree_cap: usize,
    /// Bound on multiplications spent on one p-adic Gamma value.
    pub work_cap: u64,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: DEFAULT_SEED,
            samples: 3,
            engine: Engine::Local,
            degree_cap: 2500,
            work_cap: DEFAULT_WORK_CAP,
            timing: true,
        }
    }
}

/// What a single run established, before it becomes a report.
#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    pub holds: bool,
    pub coprime: bool,
    pub valuation: Option<i64>,
    pub factors: Vec<FactorCheck>,
    pub residue: Option<String>,
    pub samples: usize,
    pub note: Option<String>,
}

impl Outcome {
    pub(crate) fn equality(holds: bool, samples: usize) -> Self {
        Outcome { holds, coprime: true, samples, ..Self::default() }
    }

    fn start() -> Self {
        Outcome { holds: true, coprime: true, ..Self::default() }
    }

    fn absorb<F: Field>(&mut self, v: CongruenceVerdict<F>, n: u64) {
        let phi = format!("Phi_{n}");
        let val = v.factors.iter().find(|f| f.factor == phi).and_then(|f| f.valuation);
        self.valuation = match (self.valuation, val) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        if !v.holds && self.holds {
            self.residue = v.residue.as_ref().map(|r| r.to_string());
            self.factors = v.factors.clone();
        } else if self.factors.is_empty() && self.holds {
            self.factors = v.factors.clone();
        }
        self.holds &= v.holds;
        self.coprime &= v.denominator_coprime;
    }

    fn merge(&mut self, other: Outcome) {
        self.valuation = match (self.valuation, other.valuation) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        if !other.holds && self.holds {
            self.residue = other.residue;
            self.factors = other.factors;
            self.note = other.note;
        } else if self.factors.is_empty() {
            self.factors = other.factors;
        }
        self.holds &= other.holds;
        self.coprime &= other.coprime;
    }
}

fn modulus_degree<F: Field>(factors: &[(crate::qseries::Atom<F>, u32)]) -> usize {
    factors.iter().map(|(a, e)| a.degree() * *e as usize).sum()
}

type LocalCheck<F> = fn(&qcong::Check<F>, &[(Atom<F>, u32)]) -> Result<CongruenceVerdict<F>>;

fn verify_checks<F: Field>(
    id: &str,
    inst: &Instance,
    params: &Params<F>,
    opts: &RunOptions,
    local: LocalCheck<F>,
) -> Result<Outcome> {
    let checks = qcong::build::<F>(id, inst, params).ok_or_else(|| Error::UnknownCase(id.into()))??;
    let n = inst.n.ok_or_else(|| Error::OutOfDomain("missing n".into()))?;
    let mut out = Outcome::start();
    for c in &checks {
        let factors = c.modulus.local_factors(n, params)?;
        let degree = modulus_degree(&factors);
        if degree > opts.degree_cap {
            return Err(Error::DegreeCap { degree, cap: opts.degree_cap });
        }
        let v = match opts.engine {
            Engine::Local => local(c, &factors)?,
            Engine::Exact => {
                let b = Exact::<F>::new();
                let (l, r) = crate::congruence::Sides::eval(c, &b)?;
                congruent(&l, &r, &build_modulus(&c.modulus, n, params)?)?
            }
        };
        out.absorb(v, n);
    }
    Ok(out)
}

fn run_congruence(info: &CaseInfo, inst: &Instance, opts: &RunOptions) -> Result<Outcome> {
    match info.mode {
        Mode::Exact => verify_checks::<Rational>(info.id, inst, &Params::default(), opts, verify_local),
        Mode::ExactOverQa => verify_checks::<QFrac>(info.id, inst, &Params::with_a(QFrac::var()), opts, verify_local_qa),
        Mode::Sampled => {
            let mut out = Outcome::start();
            let samples = sample_params(opts.seed, opts.samples.max(3), info.needs);
            for s in &samples {
                out.merge(verify_checks::<Rational>(info.id, inst, &s.params, opts, verify_local)?);
            }
            out.samples = samples.len();
            Ok(out)
        }
    }
}

fn run_numeric(info: &CaseInfo, inst: &Instance, opts: &RunOptions) -> Result<Outcome> {
    let (Some(p), Some(s)) = (inst.p, inst.s) else {
        return Err(Error::OutOfDomain("needs p and s".into()));
    };
    let dmr = match (inst.d, inst.m, inst.r) {
        (Some(d), Some(m), Some(r)) => Some((d, m, r)),
        _ => None,
    };
    let r = run_numeric_case(info.id, p, s, dmr, opts.work_cap)?;
    let mut out = Outcome::equality(r.pass, 0);
    out.valuation = r.valuation;
    out.note = Some(format!("valuation needed {}", r.required));
    Ok(out)
}

fn status_of(e: &Error) -> Status {
    match e {
        Error::OutOfDomain(_) | Error::DegreeCap { .. } => Status::OutOfDomain,
        _ => Status::Error,
    }
}

/// Runs one case. An instance outside the case's domain (or over the degree
/// cap) is an error here; [`run_suite`] records it as a report instead.
pub fn run_case(id: &str, inst: &Instance, opts: &RunOptions) -> Result<CaseReport> {
    match evaluate(id, inst, opts)? {
        (_, Some(e @ (Error::OutOfDomain(_) | Error::DegreeCap { .. }))) => Err(e),
        (r, _) => Ok(r),
    }
}

fn evaluate(id: &str, inst: &Instance, opts: &RunOptions) -> Result<(CaseReport, Option<Error>)> {
    let info = find_case(id).ok_or_else(|| Error::UnknownCase(id.into()))?;
    let start = Instant::now();
    let result = match info.kind {
        CaseKind::Congruence => run_congruence(&info, inst, opts),
        CaseKind::Identity => identities::run(&info, inst, opts),
        CaseKind::Property => properties::run(&info, inst, opts),
        CaseKind::Numeric => run_numeric(&info, inst, opts),
    };
    let elapsed_ms = opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let mut report = CaseReport {
        case: info.id.to_string(),
        instance: inst.clone(),
        kind: info.kind,
        mode: info.mode,
        status: Status::Error,
        holds: false,
        denominator_coprime: true,
        valuation: None,
        target: info.target.to_string(),
        samples: 0,
        factors: Vec::new(),
        residue: None,
        note: None,
        elapsed_ms,
    };
    match result {
        Ok(o) => {
            report.status = if o.holds {
                Status::Holds
            } else if !o.coprime {
                Status::NotCoprime
            } else {
                Status::Fails
            };
            report.holds = o.holds;
            report.denominator_coprime = o.coprime;
            report.valuation = o.valuation;
            report.samples = o.samples;
            report.factors = o.factors;
            report.residue = o.residue;
            report.note = o.note;
        }
        Err(e) => {
            report.status = status_of(&e);
            report.note = Some(e.to_string());
            return Ok((report, Some(e)));
        }
    }
    Ok((report, None))
}

/// Does `id` match a filter? A filter is a comma-separated list of ids or
/// prefixes ending in `*`; `all` and `*` match everything.
pub fn matches_filter(id: &str, filter: &str) -> bool {
    filter.split(',').map(str::trim).any(|f| {
        f == "all" || f == id || f.strip_suffix('*').is_some_and(|p| id.starts_with(p))
    })
}

/// `(case, instance)` pairs for a filter: each matching case with its
/// default instances, or with `instances` when given. Experimental cases
/// are skipped unless asked for or named exactly.
pub fn plan(filter: &str, instances: Option<&[Instance]>, experimental: bool) -> Vec<(String, Instance)> {
    let mut jobs = Vec::new();
    for c in list_cases() {
        if !matches_filter(c.id, filter) {
            continue;
        }
        let named = filter.split(',').any(|f| f.trim() == c.id);
        if c.experimental && !experimental && !named {
            continue;
        }
        let insts = match instances {
            Some(xs) => xs.to_vec(),
            None => default_instances(c.id),
        };
        jobs.extend(insts.into_iter().map(|i| (c.id.to_string(), i)));
    }
    jobs
}

/// Runs every job on a pool of `threads` workers (0 = all cores) and
/// returns reports ordered by case id, then instance.
pub fn run_suite(jobs: &[(String, Instance)], opts: &RunOptions, threads: usize) -> Result<Vec<CaseReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::OutOfDomain(format!("thread pool: {e}")))?;
    let mut reports = pool.install(|| jobs.par_iter().map(|(id, inst)| evaluate(id, inst, opts).map(|(r, _)| r)).collect::<Result<Vec<_>>>())?;
    reports.sort_by(|a, b| (&a.case, &a.instance).cmp(&(&b.case, &b.instance)));
    Ok(reports)
}
