use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use lateops::adversaries::ADVERSARIES;
use lateops::algorithms::REGISTRY;
use lateops::harness::generators::generate;
use lateops::harness::report::{emit_reports, Format};
use lateops::harness::sweep::{sweep_small_graphs, SweepConfig};
use lateops::harness::{run_experiment, CompetitiveRatio, ExperimentConfig, Source};
use lateops::oracles::{self, OracleCaps};
use lateops::params::parse_rational;
use lateops::stream::{parse_events, serialize_events};
use lateops::{ArrivalKind, DecisionModel, Problem, Value};

#[derive(Parser)]
#[command(name = "lateops", version, about = "Online graph algorithms with late accepts and late rejects")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm on one input and report the ratio.
    Run(RunArgs),
    /// Run an algorithm against an adaptive adversary.
    Adversary(AdversaryArgs),
    /// Run an algorithm on every small graph in every arrival order.
    Sweep(SweepArgs),
    /// Print the offline optimum of an event file.
    Oracle(OracleArgs),
    /// Write a generated event file.
    Gen(GenArgs),
    /// List algorithms and adversaries.
    List,
}

#[derive(Args)]
struct Output {
    /// json or csv
    #[arg(long, default_value = "json")]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Assertions {
    /// Exit with status 2 if the ratio exceeds this (e.g. `3/2` or `2.598`).
    #[arg(long, value_parser = rational)]
    assert_max_ratio: Option<Value>,
    /// Exit with status 2 if the ratio is below this.
    #[arg(long, value_parser = rational)]
    assert_min_ratio: Option<Value>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    problem: Problem,
    /// Defaults to the algorithm's native model.
    #[arg(long)]
    model: Option<DecisionModel>,
    /// Registry name with parameters, e.g. `is.threshold:c=3`.
    #[arg(long)]
    algorithm: String,
    /// `adv.*` or `gen.*` spec, or an event file.
    #[arg(long)]
    source: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stop after this many events.
    #[arg(long)]
    budget: Option<usize>,
    /// Oracle size cap (overrides LATEOPS_CAP).
    #[arg(long)]
    cap: Option<usize>,
    /// Reject undecided items at the end of their step instead of failing.
    #[arg(long)]
    implicit_reject: bool,
    /// Include the wall time in JSON output.
    #[arg(long)]
    wall_time: bool,
    #[command(flatten)]
    output: Output,
    #[command(flatten)]
    assertions: Assertions,
}

#[derive(Args)]
struct AdversaryArgs {
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    problem: Problem,
    #[arg(long)]
    model: Option<DecisionModel>,
    #[arg(long)]
    algorithm: String,
    /// Largest vertex count, at most 7.
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Sizes up to this are enumerated exhaustively.
    #[arg(long, default_value_t = 5)]
    exhaustive_max: usize,
    /// Sampled (graph, order) pairs per larger size.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Arrival orders per sampled graph.
    #[arg(long, default_value_t = 10)]
    orders: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: Output,
    #[command(flatten)]
    assertions: Assertions,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    problem: Problem,
    /// Event file.
    #[arg(long, alias = "source")]
    input: PathBuf,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Generator spec, e.g. `gen.gnp:n=10,p=0.3,wmax=9,shuffle=1`.
    #[arg(long)]
    source: String,
    /// Picks vertex or edge arrival.
    #[arg(long)]
    problem: Problem,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn rational(s: &str) -> Result<Value, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a number or fraction"))
}

fn caps(cap: Option<usize>) -> OracleCaps {
    cap.map(OracleCaps::uniform).unwrap_or_else(OracleCaps::from_env)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// False when an assertion fails.
fn check(ratio: CompetitiveRatio, a: &Assertions) -> bool {
    let mut ok = true;
    if let Some(max) = a.assert_max_ratio {
        if ratio > CompetitiveRatio::Finite(max) {
            eprintln!("assertion failed: ratio {ratio} > {max}");
            ok = false;
        }
    }
    if let Some(min) = a.assert_min_ratio {
        if ratio < CompetitiveRatio::Finite(min) {
            eprintln!("assertion failed: ratio {ratio} < {min}");
            ok = false;
        }
    }
    ok
}

fn run(args: &RunArgs) -> Result<bool> {
    let config = ExperimentConfig {
        problem: args.problem,
        model: args.model,
        algorithm: args.algorithm.clone(),
        source: Source::parse(&args.source),
        seed: args.seed,
        caps: caps(args.cap),
        budget: args.budget,
        implicit_reject: args.implicit_reject,
    };
    let report = run_experiment(&config)?;
    write_out(args.output.out.as_deref(), &emit_reports(std::slice::from_ref(&report), args.output.format, args.wall_time))?;
    Ok(check(report.ratio(), &args.assertions))
}

fn sweep(args: &SweepArgs) -> Result<bool> {
    let config = SweepConfig {
        problem: args.problem,
        model: args.model,
        algorithm: args.algorithm.clone(),
        n_max: args.n_max,
        exhaustive_max: args.exhaustive_max,
        samples_per_n: args.samples,
        orders_per_graph: args.orders,
        seed: args.seed,
    };
    let summary = sweep_small_graphs(&config)?;
    let text = match args.output.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&summary.to_json())?),
        Format::Csv => summary.to_csv(),
    };
    write_out(args.output.out.as_deref(), &text)?;
    eprintln!("{} instances, max ratio {}", summary.records.len(), summary.max_ratio);
    Ok(check(summary.max_ratio, &args.assertions))
}

fn oracle(args: &OracleArgs) -> Result<()> {
    let text = std::fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let seq = parse_events(&text)?;
    if seq.kind != args.problem.arrival_kind() {
        bail!("{} needs {} arrival, {} has {}", args.problem, args.problem.arrival_kind(), args.input.display(), seq.kind);
    }
    let g = seq.snapshot()?;
    let result = oracles::opt(args.problem, &g, caps(args.cap))?;
    write_out(args.out.as_deref(), &format!("{}\n", serde_json::to_string_pretty(&result.to_json())?))
}

fn gen(args: &GenArgs) -> Result<()> {
    let seq = generate(&args.source, args.problem.arrival_kind(), args.seed)?;
    write_out(args.out.as_deref(), &serialize_events(&seq)?)
}

fn list() {
    println!("algorithms:");
    for (name, problem, native, supported) in REGISTRY {
        let models: Vec<String> = supported.iter().map(ToString::to_string).collect();
        println!("  {name:<14} {problem:<9} native {native}, supports {}", models.join(" "));
    }
    println!("adversaries:");
    for (name, problem) in ADVERSARIES {
        println!("  {name:<14} {problem}");
    }
    let kinds = [ArrivalKind::Vertex, ArrivalKind::Edge].map(|k| k.to_string());
    println!("generators (arrival {}): gen.gnp gen.path gen.cycle gen.bipartite", kinds.join("/"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(args) => run(args),
        Command::Adversary(args) => {
            if args.run.source.starts_with("adv.") {
                run(&args.run)
            } else {
                Err(anyhow::anyhow!("`adversary` needs an adv.* source, got `{}`", args.run.source))
            }
        }
        Command::Sweep(args) => sweep(args),
        Command::Oracle(args) => oracle(args).map(|()| true),
        Command::Gen(args) => gen(args).map(|()| true),
        Command::List => {
            list();
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
