mod bounds;
mod cut;
mod graph;
mod input;
mod poly;
mod reduce;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use xclab_core::acceptance::{self, AcceptanceConfig, GadgetSource};
use xclab_core::reductions::GADGET_ENV;
use xclab_core::Budget;

use report::{Outcome, Status};

/// Exact computations on cut polytopes, slack matrices and polytope
/// reductions.
///
/// Exit codes: 0 success, 1 verification failed, 2 input error, 3 refused
/// by budget.
#[derive(Parser)]
#[command(name = "xclab", version)]
struct Cli {
    /// Scale all enumeration budgets (overrides XCLAB_BUDGET).
    #[arg(long, global = true)]
    budget_scale: Option<f64>,
    /// Print the text artifact (graph, polytope, matrix, table) instead of
    /// the JSON report.
    #[arg(long, global = true)]
    text: bool,
    /// Also write the text artifact to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock durations in the report counters.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph families, minors and circular drawings.
    #[command(subcommand)]
    Graph(graph::GraphCmd),
    /// Facets, projections, faces, slack matrices and extensions.
    #[command(subcommand)]
    Poly(poly::PolyCmd),
    /// Cut polytopes, M*, and the negative-type row family.
    #[command(subcommand)]
    Cut(cut::CutCmd),
    /// Reductions with verifiable witnesses.
    #[command(subcommand)]
    Reduce(reduce::ReduceCmd),
    /// Nonnegative-rank bounds.
    #[command(subcommand)]
    Bounds(bounds::BoundsCmd),
    /// Run every acceptance check and print a pass/fail line for each.
    Selftest {
        /// Gadget file to use instead of the shipped one (also XCLAB_GADGET).
        #[arg(long)]
        gadget: Option<PathBuf>,
        /// Run only these criteria (1-based, repeatable).
        #[arg(long)]
        only: Vec<usize>,
    },
}

pub struct Ctx {
    pub budget: Budget,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        budget: match cli.budget_scale {
            Some(f) => Budget::scaled(f),
            None => Budget::from_env(),
        },
    };
    if let Command::Selftest { gadget, only } = &cli.command {
        return selftest(&ctx, gadget.clone(), only);
    }

    let start = Instant::now();
    let (name, result) = match &cli.command {
        Command::Graph(c) => (format!("graph {}", c.name()), graph::run(c, &ctx)),
        Command::Poly(c) => (format!("poly {}", c.name()), poly::run(c, &ctx)),
        Command::Cut(c) => (format!("cut {}", c.name()), cut::run(c, &ctx)),
        Command::Reduce(c) => (format!("reduce {}", c.name()), reduce::run(c, &ctx)),
        Command::Bounds(c) => (format!("bounds {}", c.name()), bounds::run(c, &ctx)),
        Command::Selftest { .. } => unreachable!("handled above"),
    };
    let mut outcome = result.unwrap_or_else(Outcome::from_error);
    if cli.timings {
        outcome.counters.insert("elapsed_ms".into(), serde_json::json!(start.elapsed().as_millis() as u64));
    }
    if let (Some(path), Some(text)) = (&cli.out, &outcome.artifact) {
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("xclab: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match (&outcome.artifact, cli.text) {
        (Some(text), true) => print!("{text}"),
        _ => println!("{}", outcome.to_json(&name)),
    }
    if let Some(msg) = &outcome.message {
        eprintln!("xclab: {msg}");
    }
    ExitCode::from(outcome.status.exit_code())
}

fn selftest(ctx: &Ctx, gadget: Option<PathBuf>, only: &[usize]) -> ExitCode {
    let path = gadget.or_else(|| std::env::var_os(GADGET_ENV).map(PathBuf::from));
    let cfg = AcceptanceConfig {
        budget: ctx.budget.clone(),
        gadget: match path {
            Some(p) => GadgetSource::from_path(&p),
            None => AcceptanceConfig::default().gadget,
        },
    };
    let ids: Vec<usize> = if only.is_empty() { (1..=acceptance::CRITERIA.len()).collect() } else { only.to_vec() };
    let results: Vec<_> = ids.iter().map(|&id| acceptance::run_criterion(id, &cfg)).collect();
    for r in &results {
        println!("{}", r.line());
    }
    let passed = results.iter().filter(|r| r.status == acceptance::Status::Pass).count();
    println!("{passed}/{} criteria passed", results.len());
    let code = acceptance::exit_code(&results);
    let status = match code {
        0 => Status::Verified,
        1 => Status::Failed,
        _ => Status::Refused,
    };
    ExitCode::from(status.exit_code())
}
