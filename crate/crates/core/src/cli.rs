//! The `coincide` command line: documents, argument parsing and commands.
//!
//! Every command returns an [`Output`] or a [`CliError`]; the binary prints the
//! former and exits 0, or prints the error and exits 2. Verdicts live in the
//! output document, never in the exit status.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bench::{self, BenchReport, MIN_EXPONENT};
use crate::coincidence::{self, audit_battery, create_network, BatteryAudit, Query, Side};
use crate::error::Error;
use crate::interval::Interval;
use crate::oracle::oracle_decide;
use crate::partition::GcdPartition;
use crate::recurrence::{cycle_duration, SequenceSpec};
use crate::rng::SplitMix64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid input document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;

/// A component given by 0-based index or by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentRef {
    Index(usize),
    Name(String),
}

impl ComponentRef {
    pub fn resolve(&self, spec: &SequenceSpec) -> Result<usize, Error> {
        match self {
            ComponentRef::Index(i) => spec.check_index(*i).map(|_| *i),
            ComponentRef::Name(n) => spec.resolve(n),
        }
    }
}

impl std::str::FromStr for ComponentRef {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.parse::<usize>() {
            Ok(i) => ComponentRef::Index(i),
            Err(_) => ComponentRef::Name(s.to_string()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryDocument {
    pub x: SequenceSpec,
    pub y: SequenceSpec,
    pub p: ComponentRef,
    pub q: ComponentRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
}

impl QueryDocument {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Resolved `(p, q)`.
    pub fn indices(&self) -> Result<(usize, usize), Error> {
        Ok((self.p.resolve(&self.x)?, self.q.resolve(&self.y)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "gcd-partition")]
    GcdPartition,
    #[serde(rename = "oracle")]
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub coincides: bool,
    pub witness: Option<Interval>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub windows: Option<Vec<Interval>>,
    pub partition: GcdPartition,
    pub cycle: u64,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fired: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparisons: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub trials: u64,
    pub queries: u64,
    pub mismatches: u64,
    pub witness_failures: u64,
    pub commutativity_failures: u64,
    pub battery: BatteryAudit,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    X,
    Y,
}

/// Decide when two components of recurring sequences coincide.
#[derive(Debug, Parser)]
#[command(name = "coincide", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide coincidence with the gcd-partition method.
    Check(QueryArgs),
    /// Earliest coincidence window in the cycle.
    Witness(QueryArgs),
    /// All coincidence windows in one cycle (brute-force projection).
    Enumerate(QueryArgs),
    /// Show the gcd partition of the two sequences.
    Partition(QueryArgs),
    /// Show the slot network of one component.
    Network(NetworkArgs),
    /// Compare the gcd method against brute force on random instances.
    Verify(VerifyArgs),
    /// Operation-count scaling of both methods on worst-case instances.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct QueryArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Overrides the document's `p` (index or name).
    #[arg(long)]
    pub p: Option<ComponentRef>,
    /// Overrides the document's `q` (index or name).
    #[arg(long)]
    pub q: Option<ComponentRef>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct NetworkArgs {
    #[command(flatten)]
    pub query: QueryArgs,
    #[arg(long, value_enum, default_value_t = SideArg::X)]
    pub side: SideArg,
    /// Component index; defaults to the document's p or q for the side.
    #[arg(long)]
    pub index: Option<ComponentRef>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Optional document checked in addition to the random instances.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    pub max_exponent: u32,
    /// Accepted for interface uniformity; worst-case instances are fixed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the CSV here and print only the summary.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// What a successful command prints.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
}

impl From<String> for Output {
    fn from(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Check(a) => cmd_check(&a).map(Into::into),
        Command::Witness(a) => cmd_witness(&a).map(Into::into),
        Command::Enumerate(a) => cmd_enumerate(&a).map(Into::into),
        Command::Partition(a) => cmd_partition(&a).map(Into::into),
        Command::Network(a) => cmd_network(&a).map(Into::into),
        Command::Verify(a) => cmd_verify(&a).map(Into::into),
        Command::Bench(a) => cmd_bench(&a),
    }
}

struct Loaded {
    doc: QueryDocument,
    p: usize,
    q: usize,
}

fn load(args: &QueryArgs) -> Result<Loaded, CliError> {
    let mut doc = QueryDocument::load(&args.input)?;
    if let Some(p) = &args.p {
        doc.p = p.clone();
    }
    if let Some(q) = &args.q {
        doc.q = q.clone();
    }
    let (p, q) = doc.indices()?;
    Ok(Loaded { doc, p, q })
}

fn render(doc: &ResultDocument, loaded: &Loaded, format: Format) -> Result<String, CliError> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(doc)? + "\n");
    }
    let d = &loaded.doc;
    let unit = d.unit.as_deref().unwrap_or("units");
    let mut s = String::new();
    let _ = writeln!(
        s,
        "query: {}[{}] {} + {}[{}] {}",
        d.x.name(),
        loaded.p,
        d.x.components()[loaded.p].name,
        d.y.name(),
        loaded.q,
        d.y.components()[loaded.q].name
    );
    let part = doc.partition;
    let _ = writeln!(
        s,
        "partition: g={} R={} S={}",
        part.slot_dur, part.slots_x, part.slots_y
    );
    let _ = writeln!(s, "cycle: {} {unit}", doc.cycle);
    let _ = writeln!(s, "method: {}", method_name(doc.method));
    let _ = writeln!(s, "coincides: {}", doc.coincides);
    match &doc.witness {
        Some(w) => {
            let _ = writeln!(s, "witness: {w}");
        }
        None => s.push_str("witness: none\n"),
    }
    if let Some(ws) = &doc.windows {
        let list: Vec<String> = ws.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "windows ({}): {}", ws.len(), list.join(" "));
    }
    if let Some(f) = &doc.fired {
        let _ = writeln!(
            s,
            "fired: {}",
            if f.is_empty() {
                "none".to_string()
            } else {
                f.join(" ")
            }
        );
    }
    if let Some(c) = doc.comparisons {
        let _ = writeln!(s, "comparisons: {c}");
    }
    Ok(s)
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::GcdPartition => "gcd-partition",
        Method::Oracle => "oracle",
    }
}

fn base_document(l: &Loaded, method: Method) -> ResultDocument {
    ResultDocument {
        coincides: false,
        witness: None,
        windows: None,
        partition: GcdPartition::build(&l.doc.x, &l.doc.y),
        cycle: cycle_duration(&l.doc.x, &l.doc.y),
        method,
        fired: None,
        comparisons: None,
    }
}

/// Result document for `check`.
pub fn check_document(args: &QueryArgs) -> Result<(ResultDocument, Format), CliError> {
    let l = load(args)?;
    let decision = coincidence::decide(&l.doc.x, &l.doc.y, l.p, l.q)?;
    let query = Query::build(&l.doc.x, &l.doc.y, l.p, l.q)?;
    // Rules fired by the aligning slot pair.
    let fired = decision.via.map(|(r, s)| {
        let ex = query
            .x
            .entries
            .iter()
            .find(|e| e.slot == r)
            .expect("via slot in x network");
        let ey = query
            .y
            .entries
            .iter()
            .find(|e| e.slot == s)
            .expect("via slot in y network");
        query
            .fired(ex, ey)
            .iter()
            .map(|t| t.id().to_string())
            .collect()
    });
    let doc = ResultDocument {
        coincides: decision.coincides,
        witness: decision.witness,
        fired: Some(fired.unwrap_or_default()),
        ..base_document(&l, Method::GcdPartition)
    };
    Ok((doc, args.format))
}

pub fn cmd_check(args: &QueryArgs) -> Result<String, CliError> {
    let l = load(args)?;
    let (doc, format) = check_document(args)?;
    render(&doc, &l, format)
}

pub fn cmd_witness(args: &QueryArgs) -> Result<String, CliError> {
    let l = load(args)?;
    let first = coincidence::first_coincidence(&l.doc.x, &l.doc.y, l.p, l.q)?;
    let doc = ResultDocument {
        coincides: first.is_some(),
        witness: first,
        ..base_document(&l, Method::GcdPartition)
    };
    render(&doc, &l, args.format)
}

pub fn cmd_enumerate(args: &QueryArgs) -> Result<String, CliError> {
    let l = load(args)?;
    let report = oracle_decide(&l.doc.x, &l.doc.y, l.p, l.q)?;
    let doc = ResultDocument {
        coincides: report.decision.coincides,
        witness: report.decision.witness,
        windows: Some(report.windows),
        comparisons: Some(report.comparisons),
        ..base_document(&l, Method::Oracle)
    };
    render(&doc, &l, args.format)
}

pub fn cmd_partition(args: &QueryArgs) -> Result<String, CliError> {
    let l = load(args)?;
    let part = GcdPartition::build(&l.doc.x, &l.doc.y);
    if args.format == Format::Json {
        return Ok(serde_json::to_string_pretty(&part)? + "\n");
    }
    Ok(format!(
        "g: {}\nR: {}\nS: {}\ncycle: {}\n",
        part.slot_dur,
        part.slots_x,
        part.slots_y,
        part.cycle()
    ))
}

pub fn cmd_network(args: &NetworkArgs) -> Result<String, CliError> {
    let doc = QueryDocument::load(&args.query.input)?;
    let (spec, default_ref, override_ref) = match args.side {
        SideArg::X => (&doc.x, &doc.p, &args.query.p),
        SideArg::Y => (&doc.y, &doc.q, &args.query.q),
    };
    let index = args
        .index
        .as_ref()
        .or(override_ref.as_ref())
        .unwrap_or(default_ref)
        .resolve(spec)?;
    let g = GcdPartition::build(&doc.x, &doc.y).slot_dur;
    let net = create_network(spec, g, index)?;
    if args.query.format == Format::Json {
        return Ok(serde_json::to_string_pretty(&net)? + "\n");
    }
    let side = match args.side {
        SideArg::X => Side::X,
        SideArg::Y => Side::Y,
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        "network: side={} component={} ({}) window={} g={}",
        if side == Side::X { "x" } else { "y" },
        index,
        spec.components()[index].name,
        net.window,
        g
    );
    s.push_str("slot  relation       left_gap  right_gap  common\n");
    for e in &net.entries {
        let _ = writeln!(
            s,
            "{:<5} {:<14} {:<9} {:<10} {}",
            e.slot,
            e.relation.name(),
            e.left_gap,
            e.right_gap,
            e.common_dur
        );
    }
    let _ = writeln!(s, "flag: {}", net.flag);
    Ok(s)
}

/// Checks one instance on every `(p, q)` and folds the outcome into `summary`.
fn verify_instance(
    x: &SequenceSpec,
    y: &SequenceSpec,
    summary: &mut VerifySummary,
) -> Result<(), Error> {
    for p in 0..x.len() {
        for q in 0..y.len() {
            summary.queries += 1;
            let decision = coincidence::decide(x, y, p, q)?;
            let oracle = oracle_decide(x, y, p, q)?;
            if decision.coincides != oracle.decision.coincides {
                summary.mismatches += 1;
            }
            if let Some(w) = decision.witness {
                if !oracle.windows.contains(&w) {
                    summary.witness_failures += 1;
                }
            }
            let swapped = coincidence::decide(y, x, q, p)?;
            let swapped_oracle = oracle_decide(y, x, q, p)?;
            if swapped.coincides != decision.coincides || swapped_oracle.windows != oracle.windows {
                summary.commutativity_failures += 1;
            }
            summary.battery.merge(&audit_battery(x, y, p, q)?);
        }
    }
    Ok(())
}

pub fn verify(
    seed: u64,
    trials: u64,
    extra: Option<&QueryDocument>,
) -> Result<VerifySummary, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut summary = VerifySummary {
        seed,
        trials,
        queries: 0,
        mismatches: 0,
        witness_failures: 0,
        commutativity_failures: 0,
        battery: BatteryAudit::default(),
        passed: false,
    };
    if let Some(doc) = extra {
        verify_instance(&doc.x, &doc.y, &mut summary)?;
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let (x, y) = rng.instance();
        verify_instance(&x, &y, &mut summary)?;
    }
    summary.passed = summary.mismatches == 0
        && summary.witness_failures == 0
        && summary.commutativity_failures == 0
        && summary.battery.unsound == 0;
    Ok(summary)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<String, CliError> {
    let extra = args.input.as_deref().map(QueryDocument::load).transpose()?;
    let s = verify(args.seed, args.trials, extra.as_ref())?;
    if args.format == Format::Json {
        return Ok(serde_json::to_string_pretty(&s)? + "\n");
    }
    let b = &s.battery;
    Ok(format!(
        "verify: seed={} trials={}\n\
         queries: {}\n\
         mismatches: {}\n\
         witness_failures: {}\n\
         commutativity_failures: {}\n\
         battery_pairs: {} (overlapping {}, fired {})\n\
         battery_unsound: {}\n\
         battery_gaps: {}\n\
         result: {}\n",
        s.seed,
        s.trials,
        s.queries,
        s.mismatches,
        s.witness_failures,
        s.commutativity_failures,
        b.pairs,
        b.overlapping,
        b.fired,
        b.unsound,
        b.gaps,
        if s.passed { "PASS" } else { "FAIL" }
    ))
}

fn bench_summary(report: &BenchReport) -> String {
    format!(
        "rows: {}\ngcd_method_slope: {:.3}\noracle_slope: {:.3}\n",
        report.rows.len(),
        report.gcd_slope,
        report.oracle_slope
    )
}

pub fn cmd_bench(args: &BenchArgs) -> Result<Output, CliError> {
    if args.max_exponent < MIN_EXPONENT {
        return Err(CliError::Usage(format!(
            "--max-exponent must be at least {MIN_EXPONENT}"
        )));
    }
    if args.max_exponent > 16 {
        return Err(CliError::Usage("--max-exponent must be at most 16".into()));
    }
    let report = bench::run(args.max_exponent)?;
    if args.format == Format::Json {
        return Ok((serde_json::to_string_pretty(&report)? + "\n").into());
    }
    match &args.csv {
        Some(path) => {
            std::fs::write(path, report.to_csv()).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(bench_summary(&report).into())
        }
        None => Ok(Output {
            stdout: report.to_csv(),
            stderr: bench_summary(&report),
        }),
    }
}
