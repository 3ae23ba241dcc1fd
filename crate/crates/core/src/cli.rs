//! Command-line front end.
//!
//! Exit codes: 0 success, 1 scan counterexample or sweep violation, 2 usage
//! or invalid parameters, 3 search ceiling or node budget hit.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{bounds_for_noise, bounds_prefix_noise, bounds_two_element, BoundsReport};
use crate::cyclic::CyclicSet;
use crate::equivalence::{are_equivalent, canonicalize, size3_orbit};
use crate::error::Error;
use crate::sumfree::{is_sumfree, search_mu, SearchOptions, SumFreeParams};
use crate::verify::{
    conjecture_scan, sandwich_sweep, NoiseKind, ScanRanges, ScanReport, SweepRanges, SweepRow,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable giving the worker count when `--jobs` is absent.
pub const JOBS_ENV: &str = "NOISYSUM_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "noisysum",
    version,
    about = "Noisy Minkowski sums and sum-free sets in Z/nZ"
)]
pub struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true, display_order = 100)]
    json: bool,
    /// Worker threads (default: $NOISYSUM_JOBS, then the config file, then all cores).
    #[arg(long, global = true, display_order = 100)]
    jobs: Option<usize>,
    /// key=value file presetting jobs, budget, ceiling and witnesses.
    #[arg(long, global = true, display_order = 100)]
    config: Option<PathBuf>,
    /// Report every elapsed time as 0 so output is byte-stable.
    #[arg(long, global = true, display_order = 100)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact largest sum-free size with witnesses.
    Mu(MuArgs),
    /// Closed-form bounds with their intermediate values.
    Bounds(BoundsArgs),
    /// Whether one set is sum-free.
    Check(CheckArgs),
    /// Interval conjecture scan over prefix noise.
    Scan(ScanArgs),
    /// Bounds against the exact value over a grid.
    Sweep(SweepArgs),
    /// Residues d with {0,1,d} equivalent to {0,1,c} mod p.
    Orbit(OrbitArgs),
    /// Whether two noise sets are shift-mult equivalent.
    Equiv(EquivArgs),
}

#[derive(Args, Debug)]
struct Triple {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Largest modulus the optimizer accepts.
    #[arg(long)]
    ceiling: Option<usize>,
    /// Node budget per top-level branch of each fixed-size search.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct MuArgs {
    #[command(flatten)]
    triple: Triple,
    /// Noise set literal, e.g. 0,1,5.
    #[arg(long, conflicts_with_all = ["c", "s"])]
    noise: Option<String>,
    /// Shorthand for --noise 0,1,...,c-1.
    #[arg(long, conflicts_with = "s")]
    c: Option<usize>,
    /// Shorthand for --noise 0,s.
    #[arg(long)]
    s: Option<usize>,
    /// Witnesses to print.
    #[arg(long)]
    witnesses: Option<usize>,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    triple: Triple,
    /// Prefix noise {0,...,c-1}.
    #[arg(long, conflicts_with_all = ["s", "noise"])]
    c: Option<usize>,
    /// Two-element noise {0,s}.
    #[arg(long, conflicts_with = "noise")]
    s: Option<usize>,
    /// Any noise set literal.
    #[arg(long)]
    noise: Option<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    triple: Triple,
    #[arg(long)]
    set: String,
    #[arg(long)]
    noise: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    c_max: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    l_max: Option<usize>,
    /// Scan n < FACTOR (k + l).
    #[arg(long)]
    n_factor: Option<usize>,
    /// Additional cap on n.
    #[arg(long)]
    n_max: Option<usize>,
    /// Start from the full published range (c <= 10, l < 10, k < 20, n < 5(k+l)).
    /// Long running.
    #[arg(long)]
    full: bool,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Prefix,
    TwoElement,
    Custom,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "prefix")]
    kind: KindArg,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 30)]
    n_max: usize,
    #[arg(long, default_value_t = 6)]
    k_max: usize,
    #[arg(long, default_value_t = 5)]
    l_max: usize,
    #[arg(long, default_value_t = 4)]
    c_max: usize,
    /// Noise literal for --kind custom, read modulo each n.
    #[arg(long)]
    noise: Option<String>,
    #[command(flatten)]
    search: SearchArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct OrbitArgs {
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
    #[arg(long)]
    p: usize,
}

#[derive(Args, Debug)]
struct EquivArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    c1: String,
    #[arg(long)]
    c2: String,
}

/// Settings from a key=value config file.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config {
    pub jobs: Option<usize>,
    pub budget: Option<u64>,
    pub ceiling: Option<usize>,
    pub witnesses: Option<usize>,
}

impl Config {
    /// Blank lines and `#` comments are skipped; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: std::num::ParseIntError| format!("line {}: {key}: {e}", i + 1);
            match key {
                "jobs" => cfg.jobs = Some(value.parse().map_err(bad)?),
                "budget" => cfg.budget = Some(value.parse().map_err(bad)?),
                "ceiling" => cfg.ceiling = Some(value.parse().map_err(bad)?),
                "witnesses" => cfg.witnesses = Some(value.parse().map_err(bad)?),
                _ => return Err(format!("line {}: unknown key {key:?}", i + 1)),
            }
        }
        Ok(cfg)
    }
}

/// A failed command: message for stderr and an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchCeiling { .. } => EXIT_BUDGET,
            Error::SandwichViolation(_) => EXIT_FOUND,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text for humans, rows or payloads for JSON,
/// and the exit code.
struct Outcome {
    params: Value,
    results: Vec<Value>,
    text: String,
    code: i32,
    /// Set for table commands; printed as CSV by default.
    rows: Option<Vec<SweepRow>>,
    format: Option<Format>,
    out: Option<PathBuf>,
    stderr: String,
}

impl Outcome {
    fn single(params: Value, result: Value, text: String) -> Self {
        Self {
            params,
            results: vec![result],
            text,
            code: EXIT_OK,
            rows: None,
            format: None,
            out: None,
            stderr: String::new(),
        }
    }
}

struct Context {
    config: Config,
    no_timing: bool,
}

impl Context {
    fn search_options(&self, args: &SearchArgs) -> SearchOptions {
        let mut opts = SearchOptions::default();
        if let Some(c) = args.ceiling.or(self.config.ceiling) {
            opts.ceiling = c;
        }
        opts.node_budget = args.budget.or(self.config.budget);
        if let Some(w) = self.config.witnesses {
            opts.witness_cap = w;
        }
        opts
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    version: &'static str,
    command: &'a str,
    params: &'a Value,
    results: &'a [Value],
    elapsed_ms: u64,
}

/// Parses `args` (including the program name), runs the command, writes the
/// report to `stdout` and diagnostics to `stderr`, and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{rendered}");
            return EXIT_USAGE;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let config = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Config::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => Config::default(),
    };
    let env_jobs = match std::env::var(JOBS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|e| Failure::usage(format!("{JOBS_ENV}={v:?}: {e}")))?,
        ),
        Err(_) => None,
    };
    if let Some(jobs) = cli.jobs.or(env_jobs).or(config.jobs) {
        if jobs == 0 {
            return Err(Failure::usage("--jobs must be at least 1"));
        }
        // The global pool can only be set once per process; later calls keep it.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let ctx = Context {
        config,
        no_timing: cli.no_timing,
    };
    let started = Instant::now();
    let (name, outcome) = match &cli.command {
        Command::Mu(a) => ("mu", cmd_mu(&ctx, a)?),
        Command::Bounds(a) => ("bounds", cmd_bounds(a)?),
        Command::Check(a) => ("check", cmd_check(a)?),
        Command::Scan(a) => ("scan", cmd_scan(&ctx, a)?),
        Command::Sweep(a) => ("sweep", cmd_sweep(&ctx, a)?),
        Command::Orbit(a) => ("orbit", cmd_orbit(a)?),
        Command::Equiv(a) => ("equiv", cmd_equiv(a)?),
    };
    let elapsed_ms = if ctx.no_timing {
        0
    } else {
        started.elapsed().as_millis() as u64
    };
    emit(name, outcome, cli.json, elapsed_ms, stdout, stderr)
}

fn emit(
    name: &str,
    outcome: Outcome,
    json_flag: bool,
    elapsed_ms: u64,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::usage(e.to_string());
    let format = outcome
        .format
        .unwrap_or(if json_flag { Format::Json } else { Format::Csv });
    let body = match (&outcome.rows, json_flag || format == Format::Json) {
        (Some(rows), false) => rows_to_csv(rows)?,
        (_, true) => {
            let env = Envelope {
                version: env!("CARGO_PKG_VERSION"),
                command: name,
                params: &outcome.params,
                results: &outcome.results,
                elapsed_ms,
            };
            let mut s = serde_json::to_string_pretty(&env).expect("serializable");
            s.push('\n');
            s
        }
        (None, false) => outcome.text.clone(),
    };
    match &outcome.out {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => stdout.write_all(body.as_bytes()).map_err(io)?,
    }
    if !outcome.stderr.is_empty() {
        stderr.write_all(outcome.stderr.as_bytes()).map_err(io)?;
    }
    Ok(outcome.code)
}

/// Fixed column order: n,k,l,noise,lower,upper,mu,tight,witness,elapsed_ms.
fn rows_to_csv(rows: &[SweepRow]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Failure::usage(e.to_string());
    w.write_record([
        "n",
        "k",
        "l",
        "noise",
        "lower",
        "upper",
        "mu",
        "tight",
        "witness",
        "elapsed_ms",
    ])
    .map_err(err)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.l.to_string(),
            r.noise.clone(),
            r.formula_lower.to_string(),
            r.formula_upper.to_string(),
            r.oracle_mu.to_string(),
            r.tight.to_string(),
            r.witness.clone().unwrap_or_default(),
            r.elapsed_ms.to_string(),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn params_of(t: &Triple) -> Result<SumFreeParams, Failure> {
    Ok(SumFreeParams::new(t.n, t.k, t.l)?)
}

fn noise_from(
    n: usize,
    literal: Option<&str>,
    c: Option<usize>,
    s: Option<usize>,
) -> Result<CyclicSet, Failure> {
    match (literal, c, s) {
        (Some(lit), None, None) => Ok(CyclicSet::parse(n, lit)?),
        (None, Some(c), None) => {
            if c == 0 {
                return Err(Failure::usage("--c must be at least 1"));
            }
            Ok(CyclicSet::prefix(n, c)?)
        }
        (None, None, Some(s)) => Ok(CyclicSet::new(n, [0, s as i64])?),
        (None, None, None) => Err(Failure::usage("give one of --noise, --c or --s")),
        _ => Err(Failure::usage("give only one of --noise, --c or --s")),
    }
}

fn cmd_mu(ctx: &Context, a: &MuArgs) -> Result<Outcome, Failure> {
    let params = params_of(&a.triple)?;
    let noise = noise_from(params.n(), a.noise.as_deref(), a.c, a.s)?;
    let mut opts = ctx.search_options(&a.search);
    if let Some(w) = a.witnesses {
        opts.witness_cap = w;
    }
    let res = search_mu(&params, &noise, &opts)?;
    let witnesses: Vec<String> = res.witnesses.iter().map(CyclicSet::to_literal).collect();
    let mut text = format!(
        "mu = {}\nexhaustive = {}\nnodes = {}\n",
        res.mu, res.exhaustive, res.nodes_explored
    );
    for w in &witnesses {
        text.push_str(&format!("witness {w}\n"));
    }
    let mut out = Outcome::single(
        json!({"n": params.n(), "k": params.k(), "l": params.l(), "noise": noise.to_literal()}),
        json!({
            "mu": res.mu,
            "exhaustive": res.exhaustive,
            "nodes_explored": res.nodes_explored,
            "witnesses": witnesses,
        }),
        text,
    );
    if !res.exhaustive {
        out.code = EXIT_BUDGET;
        out.stderr = format!("node budget exhausted: mu >= {} is not certified\n", res.mu);
    }
    Ok(out)
}

fn bounds_text(b: &BoundsReport) -> String {
    let method = serde_json::to_value(b.method).expect("serializable");
    let mut text = format!(
        "lower = {}\nupper = {}\nraw_lower = {}\nraw_upper = {}\ndelta = {}\nchi = {}\nr = {}\nmethod = {}\n",
        b.lower,
        b.upper,
        b.raw_lower,
        b.raw_upper,
        b.delta,
        b.chi,
        b.r,
        method.as_str().unwrap_or_default()
    );
    if let Some(t) = b.coset_term {
        text.push_str(&format!("coset_term = {t}\n"));
    }
    for (d, t) in &b.per_divisor_terms {
        text.push_str(&format!("term[{d}] = {t}\n"));
    }
    text
}

fn cmd_bounds(a: &BoundsArgs) -> Result<Outcome, Failure> {
    let (n, k, l) = (a.triple.n, a.triple.k, a.triple.l);
    let (report, noise) = match (a.c, a.s, &a.noise) {
        (Some(c), None, None) => (bounds_prefix_noise(n, k, l, c)?, format!("c={c}")),
        (None, Some(s), None) => (bounds_two_element(n, k, l, s)?, format!("s={s}")),
        (None, None, Some(lit)) => {
            let c = CyclicSet::parse(n, lit)?;
            (bounds_for_noise(n, k, l, &c)?, c.to_literal())
        }
        (None, None, None) => return Err(Failure::usage("give one of --c, --s or --noise")),
        _ => return Err(Failure::usage("give only one of --c, --s or --noise")),
    };
    let text = bounds_text(&report);
    Ok(Outcome::single(
        json!({"n": n, "k": k, "l": l, "noise": noise}),
        serde_json::to_value(&report).expect("serializable"),
        text,
    ))
}

fn cmd_check(a: &CheckArgs) -> Result<Outcome, Failure> {
    let params = params_of(&a.triple)?;
    let set = CyclicSet::parse(params.n(), &a.set)?;
    let noise = CyclicSet::parse(params.n(), &a.noise)?;
    let ok = is_sumfree(&set, &noise, &params)?;
    Ok(Outcome::single(
        json!({
            "n": params.n(), "k": params.k(), "l": params.l(),
            "set": set.to_literal(), "noise": noise.to_literal(),
        }),
        json!({"sumfree": ok}),
        format!("{ok}\n"),
    ))
}

fn strip_timing(rows: &mut [SweepRow], no_timing: bool) {
    if no_timing {
        for r in rows {
            r.elapsed_ms = 0;
        }
    }
}

fn table_outcome(params: Value, rows: Vec<SweepRow>, output: &Output) -> Outcome {
    Outcome {
        params,
        results: rows
            .iter()
            .map(|r| serde_json::to_value(r).expect("serializable"))
            .collect(),
        text: String::new(),
        code: EXIT_OK,
        rows: Some(rows),
        format: output.format,
        out: output.out.clone(),
        stderr: String::new(),
    }
}

fn cmd_scan(ctx: &Context, a: &ScanArgs) -> Result<Outcome, Failure> {
    let base = if a.full {
        ScanRanges::full()
    } else {
        ScanRanges::desk()
    };
    let ranges = ScanRanges {
        c_max: a.c_max.unwrap_or(base.c_max),
        k_max: a.k_max.unwrap_or(base.k_max),
        l_max: a.l_max.unwrap_or(base.l_max),
        n_factor: a.n_factor.unwrap_or(base.n_factor),
        n_max: a.n_max.or(base.n_max),
    };
    let mut opts = ctx.search_options(&a.search);
    if a.full && a.search.ceiling.is_none() && ctx.config.ceiling.is_none() {
        opts.ceiling = crate::sumfree::KERNEL_MAX_MODULUS;
    }
    let mut report = conjecture_scan(&ranges, &opts)?;
    strip_timing(&mut report.rows, ctx.no_timing);
    let mut out = table_outcome(
        serde_json::to_value(ranges).expect("serializable"),
        report.rows.clone(),
        &a.output,
    );
    let (code, diag) = scan_verdict(&report);
    out.code = code;
    out.stderr = diag;
    Ok(out)
}

/// Exit code and stderr text for a finished scan: counterexamples win over
/// uncertified rows.
fn scan_verdict(report: &ScanReport) -> (i32, String) {
    let mut diag = String::new();
    for r in &report.counterexamples {
        diag.push_str(&format!(
            "counterexample: n={} k={} l={} c={} lower={} upper={} mu={} witness={}\n",
            r.n,
            r.k,
            r.l,
            r.c_or_s,
            r.formula_lower,
            r.formula_upper,
            r.oracle_mu,
            r.witness.as_deref().unwrap_or("")
        ));
    }
    if !report.counterexamples.is_empty() {
        return (EXIT_FOUND, diag);
    }
    if report.incomplete_rows > 0 {
        diag.push_str(&format!(
            "{} rows hit the node budget and are not certified\n",
            report.incomplete_rows
        ));
        return (EXIT_BUDGET, diag);
    }
    (EXIT_OK, diag)
}

fn cmd_sweep(ctx: &Context, a: &SweepArgs) -> Result<Outcome, Failure> {
    let kind = match a.kind {
        KindArg::Prefix => NoiseKind::Prefix,
        KindArg::TwoElement => NoiseKind::TwoElement,
        KindArg::Custom => NoiseKind::Custom,
    };
    let custom_noise = match (&a.noise, kind) {
        (Some(lit), NoiseKind::Custom) => Some(parse_residues(lit)?),
        (None, NoiseKind::Custom) => {
            return Err(Failure::usage("--kind custom needs --noise"));
        }
        (Some(_), _) => return Err(Failure::usage("--noise only applies to --kind custom")),
        (None, _) => None,
    };
    let ranges = SweepRanges {
        n_min: a.n_min,
        n_max: a.n_max,
        k_max: a.k_max,
        l_max: a.l_max,
        c_max: a.c_max,
        custom_noise,
    };
    let opts = ctx.search_options(&a.search);
    let mut rows = sandwich_sweep(kind, &ranges, &opts)?;
    strip_timing(&mut rows, ctx.no_timing);
    let incomplete = rows.iter().filter(|r| !r.exhaustive).count();
    let mut params = serde_json::to_value(&ranges).expect("serializable");
    params["kind"] = json!(kind.as_str());
    let mut out = table_outcome(params, rows, &a.output);
    if incomplete > 0 {
        out.code = EXIT_BUDGET;
        out.stderr = format!("{incomplete} rows hit the node budget and are not certified\n");
    }
    Ok(out)
}

/// A literal's integers, not yet reduced (the sweep reduces per modulus).
fn parse_residues(lit: &str) -> Result<Vec<i64>, Failure> {
    // Validate syntax against a large modulus, then keep the raw values.
    CyclicSet::parse(crate::cyclic::MAX_MODULUS, lit)?;
    Ok(lit
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().expect("validated"))
        .collect())
}

fn cmd_orbit(a: &OrbitArgs) -> Result<Outcome, Failure> {
    let orbit = size3_orbit(a.c, a.p)?;
    let list: Vec<String> = orbit.iter().map(usize::to_string).collect();
    Ok(Outcome::single(
        json!({"c": a.c, "p": a.p}),
        json!({"orbit": orbit}),
        format!("{}\n", list.join(",")),
    ))
}

fn cmd_equiv(a: &EquivArgs) -> Result<Outcome, Failure> {
    let c1 = CyclicSet::parse(a.n, &a.c1)?;
    let c2 = CyclicSet::parse(a.n, &a.c2)?;
    let eq = are_equivalent(&c1, &c2)?;
    let (f1, f2) = (canonicalize(&c1), canonicalize(&c2));
    let mut result = BTreeMap::new();
    result.insert("equivalent", json!(eq));
    result.insert("representative1", json!(f1.representative.to_literal()));
    result.insert("representative2", json!(f2.representative.to_literal()));
    result.insert("orbit_size1", json!(f1.orbit_size));
    result.insert("orbit_size2", json!(f2.orbit_size));
    let text = format!(
        "{}\nrepresentative1 = {}\nrepresentative2 = {}\n",
        if eq { "equivalent" } else { "not equivalent" },
        f1.representative,
        f2.representative
    );
    Ok(Outcome::single(
        json!({"n": a.n, "c1": c1.to_literal(), "c2": c2.to_literal()}),
        json!(result),
        text,
    ))
}
