use clap::{Args, Parser, Subcommand, ValueEnum};
use latdim::check::{CheckOptions, Suite};
use latdim::commands::{cmd_check, cmd_lat_dim, cmd_ring_dim, cmd_spec, CheckArgs, DimKind, LatDimArgs, RingDimArgs, SpecArgs, SpecWhat};
use latdim::dimension::Strategy;
use latdim::fault::Fault;
use latdim::report::{RunReport, Status};
use latdim::ring::{RingBudget, RingStrategy};
use std::path::PathBuf;
use std::process::ExitCode;

/// Dimension deciders for finitely presented distributive lattices and
/// Zariski lattices of rings.
///
/// Exit codes: 0 holds / pass, 1 fails, 2 error, 3 unknown.
#[derive(Parser)]
#[command(name = "latdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide Kdim, Jdim or Hdim ≤ ℓ for a lattice presentation.
    LatDim(LatDimCli),
    /// Print a spectrum of a lattice presentation.
    Spec(SpecCli),
    /// Decide Kdim, Jdim or Hdim ≤ ℓ for a ring.
    RingDim(RingDimCli),
    /// Cross-check the deciders against brute-force oracles.
    Check(CheckCli),
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct Output {
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock timings in text output.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct LatDimCli {
    /// Presentation JSON: {"generators": [...], "relations": [{"meet": [[...]], "join": [...]}]}.
    #[arg(long)]
    file: PathBuf,
    /// kdim, jdim or hdim.
    #[arg(long, default_value = "kdim")]
    kind: DimKind,
    #[arg(long, allow_hyphen_values = true)]
    leq: i64,
    /// Report a complementary sequence for every tuple.
    #[arg(long)]
    witness: bool,
    /// global, upper or lower.
    #[arg(long, default_value = "global")]
    strategy: Strategy,
    #[arg(long, default_value_t = 4096)]
    max_elements: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SpecCli {
    #[arg(long)]
    file: PathBuf,
    /// spec, max, min, jspec (primes that are meets of maximals) or Jspec (spectrum of He(T)).
    #[arg(long, default_value = "spec")]
    what: SpecWhat,
    #[arg(long, value_enum, default_value = "json")]
    format: SpecFormat,
    #[arg(long, default_value_t = 4096)]
    max_elements: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct RingDimCli {
    /// int, zmod:<n>, gf:<p>, poly:gf:<p> or table:<file>.
    #[arg(long)]
    ring: String,
    #[arg(long, default_value = "kdim")]
    kind: DimKind,
    #[arg(long, allow_hyphen_values = true)]
    leq: i64,
    #[arg(long)]
    witness: bool,
    /// witness, upper or lower.
    #[arg(long, default_value = "witness")]
    strategy: RingStrategy,
    /// Largest exponent tried in witness searches.
    #[arg(long, default_value_t = RingBudget::default().exp)]
    budget_exp: u32,
    /// Size bound on multipliers in witness searches.
    #[arg(long, default_value_t = RingBudget::default().coeff)]
    budget_coeff: u32,
    /// Random tuples checked on infinite rings, on top of fixed probes.
    #[arg(long, default_value_t = RingBudget::default().samples)]
    samples: usize,
    #[arg(long, default_value_t = RingBudget::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CheckCli {
    /// oracle, boundary, duality or ring-transport; repeatable, all by default.
    #[arg(long)]
    suite: Vec<Suite>,
    #[arg(long, default_value_t = CheckOptions::default().seed)]
    seed: u64,
    /// Random presentations in the corpus.
    #[arg(long, default_value_t = CheckOptions::default().count)]
    count: usize,
    #[arg(long, default_value_t = CheckOptions::default().max_gens)]
    max_gens: usize,
    #[arg(long, default_value_t = CheckOptions::default().max_rels)]
    max_rels: usize,
    #[arg(long, default_value_t = CheckOptions::default().max_elements)]
    max_elements: usize,
    #[arg(long, default_value_t = CheckOptions::default().max_points)]
    max_points: usize,
    #[arg(long, default_value_t = CheckOptions::default().posets)]
    posets: usize,
    #[arg(long, hide = true)]
    inject_fault: Option<Fault>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[command(flatten)]
    output: Output,
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(report: &RunReport, format: ReportFormat, output: &Output) -> String {
    match format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Text => report.to_text(output.timings),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::iter::once("latdim".to_string()).chain(std::env::args().skip(1)).collect();
    let (report, text, out) = match cli.command {
        Command::LatDim(c) => {
            let args = LatDimArgs { file: c.file, kind: c.kind, leq: c.leq, witness: c.witness, strategy: c.strategy, max_elements: c.max_elements };
            let r = cmd_lat_dim(argv, &args);
            let t = render(&r, c.format, &c.output);
            (r, t, c.output.out)
        }
        Command::Spec(c) => {
            let (r, dot) = cmd_spec(argv, &SpecArgs { file: c.file, what: c.what, max_elements: c.max_elements });
            let t = match (c.format, dot) {
                (SpecFormat::Dot, Some(d)) => d,
                (SpecFormat::Dot, None) => r.to_text(false),
                (SpecFormat::Json, _) => r.to_json() + "\n",
            };
            (r, t, c.output.out)
        }
        Command::RingDim(c) => {
            let budget = RingBudget { exp: c.budget_exp, coeff: c.budget_coeff, samples: c.samples, seed: c.seed, witnesses: c.witness };
            let r = cmd_ring_dim(argv, &RingDimArgs { ring: c.ring, kind: c.kind, leq: c.leq, strategy: c.strategy, budget });
            let t = render(&r, c.format, &c.output);
            (r, t, c.output.out)
        }
        Command::Check(c) => {
            let options = CheckOptions {
                seed: c.seed,
                count: c.count,
                max_gens: c.max_gens,
                max_rels: c.max_rels,
                max_elements: c.max_elements,
                max_points: c.max_points,
                posets: c.posets,
            };
            let r = cmd_check(argv, &CheckArgs { suites: c.suite, options, fault: c.inject_fault });
            let t = render(&r, c.format, &c.output);
            (r, t, c.output.out)
        }
    };
    if let Some(e) = &report.error {
        eprintln!("latdim: {e}");
    }
    if let Err(e) = emit(&text, &out) {
        eprintln!("latdim: {e}");
        return ExitCode::from(Status::Error.exit_code() as u8);
    }
    ExitCode::from(report.status.exit_code() as u8)
}
