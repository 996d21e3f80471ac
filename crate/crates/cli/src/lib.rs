//! Front end for `qflop-core`: ring documents, the bundled registry,
//! command dispatch and reports.

pub mod commands;
pub mod error;
pub mod registry;
pub mod report;
pub mod spec;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Parser;
use qflop_core::{Budget, GradedRing};

pub use commands::Command;
pub use error::CliError;
pub use report::Report;
pub use spec::{parse_ring_spec, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qflop", version, about = "Partial compactifications and windows for graded rings")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Ring document (JSON) or the name of a bundled example.
    pub spec: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Reduction-step budget (default 1000000).
    #[arg(long, env = "QFLOP_BUDGET_STEPS")]
    pub budget_steps: Option<u64>,
    /// Cap on intermediate basis size (default 10000).
    #[arg(long)]
    pub budget_size: Option<usize>,
    /// Coarse degree window `lo:hi` (default -5:5).
    #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
    pub window: Option<(i64, i64)>,
    /// Highest Tor degree computed without a Koszul certificate (default 3).
    #[arg(long)]
    pub tor_bound: Option<usize>,
    /// Highest dg homology degree computed (default 3).
    #[arg(long)]
    pub homology_bound: Option<usize>,
    /// Twist i for `fm` (default 0).
    #[arg(long, allow_negative_numbers = true)]
    pub twist: Option<i64>,
    /// Adds wall-clock time to the report.
    #[arg(long)]
    pub timing: bool,
}

pub const DEFAULT_WINDOW: (i64, i64) = (-5, 5);
pub const DEFAULT_BOUND: usize = 3;

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected lo:hi, got '{s}'"))?;
    let lo: i64 = a.trim().parse().map_err(|e| format!("bad lower bound '{a}': {e}"))?;
    let hi: i64 = b.trim().parse().map_err(|e| format!("bad upper bound '{b}': {e}"))?;
    if lo > hi {
        return Err(format!("empty window {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Reads a document from disk, falling back to the registry by name.
pub fn load_spec(arg: &str) -> Result<(RingSpec, GradedRing), CliError> {
    let path = PathBuf::from(arg);
    if !path.exists() {
        if let Some(spec) = registry::lookup(arg) {
            let ring = spec.to_ring()?;
            return Ok((spec, ring));
        }
    }
    let text = std::fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Io(arg.to_string(), e))?;
    parse_ring_spec(&text)
}

/// Runs one command and returns its report.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let loaded = match (&cli.spec, cli.command) {
        (Some(s), _) => Some(load_spec(s)?),
        (None, Command::SelfTest) => None,
        (None, _) => return Err(CliError::Options(format!("{} needs a ring document", cli.command.name()))),
    };
    let spec_opts = loaded.as_ref().map(|(s, _)| s.options.clone()).unwrap_or_default();
    let options = report::Effective {
        tor_bound: cli.tor_bound.or(spec_opts.tor_bound).unwrap_or(DEFAULT_BOUND),
        homology_bound: cli.homology_bound.or(spec_opts.homology_bound).unwrap_or(DEFAULT_BOUND),
        window: cli.window.or(spec_opts.degree_window).unwrap_or(DEFAULT_WINDOW),
        twist: cli.twist,
    };
    if options.window.0 > options.window.1 {
        return Err(CliError::Options("empty degree window".into()));
    }
    let mut budget = Budget::new(
        cli.budget_steps.or(spec_opts.budget_steps).unwrap_or(Budget::DEFAULT_STEPS),
        cli.budget_size.or(spec_opts.budget_size).unwrap_or(Budget::DEFAULT_BASIS),
    );
    let empty = GradedRing::free(Vec::new(), qflop_core::WeightSystem::scalar(&[])).map_err(CliError::Core)?;
    let (spec, ring) = match &loaded {
        Some((s, r)) => (Some(s), r),
        None => (None, &empty),
    };
    let label = match spec.and_then(|s| s.name.clone()) {
        Some(n) => format!("{n} {}", ring.describe()),
        None if loaded.is_some() => ring.describe(),
        None => "built-in examples".to_string(),
    };
    let mut rep = Report::new(cli.command.name(), label, options.clone());
    let start = Instant::now();
    commands::dispatch(cli.command, spec, ring, &options, &mut rep, &mut budget)?;
    rep.budget = report::BudgetUsage {
        steps: budget.steps,
        max_steps: budget.max_steps,
        peak_basis: budget.peak_basis,
        max_basis: budget.max_basis,
    };
    if cli.timing {
        rep.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(rep)
}

pub fn render(rep: &Report, format: Format) -> String {
    match format {
        Format::Text => rep.to_text(),
        Format::Json => rep.to_json(),
    }
}
