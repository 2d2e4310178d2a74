//! `matroid-union`: axiom checks, unions, exchange chains, packing, covering
//! and the infinitary window demos from the command line.
//!
//! Exit codes: 0 when the verdict holds, 1 when it does not, 2 on usage or
//! schema errors.

mod commands;
mod load;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use matroid_union::axioms::CheckOptions;
use matroid_union::packing::SWEEP_LIMIT;

use commands::{DemoArgs, Failure, Inputs};
use report::{digest, Outcome, RunReport};

#[derive(Parser)]
#[command(name = "matroid-union", version, about = "Matroid union and packing toolkit")]
struct Cli {
    /// Print the JSON report; with PATH, write it there and print the summary.
    /// Place it after the positional arguments.
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH")]
    json: Option<Option<PathBuf>>,

    /// Parallelism width, recorded in the report.
    #[arg(long, global = true, env = "MATROID_THREADS", default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Sampling {
    /// Seed for sampled checks on large ground sets.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Number of random samples when a sweep is too large.
    #[arg(long, default_value_t = 2000)]
    samples: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check (I1), (I2), (I3), (I3'), (IM) and circuit elimination.
    CheckAxioms {
        file: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Decide whether a set splits into an M1-independent and an M2-independent part.
    Union {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Comma-separated element ids.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// A maximal set of the union, optionally inside `--within`.
    UnionBase {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        within: Option<String>,
    },
    /// Every element with an exchange chain ending at `--x`, with one shortest chain each.
    Chain {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value = "")]
        i1: String,
        #[arg(long, default_value = "")]
        i2: String,
        #[arg(long)]
        x: String,
    },
    /// k disjoint bases, or a set Y violating the rank condition.
    Pack {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Largest ground set on which every Y is checked; above it Y is sampled.
        #[arg(long, default_value_t = SWEEP_LIMIT)]
        max_y: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// A cover by k independent sets, or a rank-deficient set X.
    Cover {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// k edge-disjoint spanning trees of a graph.
    Trees {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// The finitarization of a symbolic family, checked on windows.
    Finitarize {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        windows: usize,
    },
    /// The nearly-finitary gap of a symbolic family.
    Gap {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 8)]
        to: usize,
    },
    /// The matroid M[k] of sets that extend by k more elements.
    Mk {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Growth chains on windows: claim32, claim31 (with --countable-analog), obs46a, obs46b, prop22, ladder.
    Demo {
        name: String,
        #[arg(long, default_value_t = 2)]
        window: usize,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[arg(long)]
        countable_analog: bool,
        /// A family with an infinitely repeated infinite circuit (prop22 only).
        #[arg(long)]
        family: Option<PathBuf>,
    },
}

fn options(s: &Sampling) -> CheckOptions {
    CheckOptions {
        samples: s.samples,
        seed: s.seed,
        ..CheckOptions::default()
    }
}

fn dispatch(cmd: &Command) -> Result<(Outcome, Inputs), Failure> {
    match cmd {
        Command::CheckAxioms { file, sampling } => commands::check_axioms(file, &options(sampling)),
        Command::Union { a, b, set } => commands::union(a, b, set),
        Command::UnionBase { a, b, within } => commands::union_base_cmd(a, b, within.as_deref()),
        Command::Chain { a, b, i1, i2, x } => commands::chain(a, b, i1, i2, x),
        Command::Pack {
            file,
            k,
            max_y,
            sampling,
        } => commands::pack(file, *k, *max_y, sampling.samples, sampling.seed),
        Command::Cover { file, k } => commands::cover(file, *k),
        Command::Trees { file, k } => commands::trees(file, *k),
        Command::Finitarize { file, windows } => commands::finitarize_cmd(file, *windows),
        Command::Gap { file, from, to } => commands::gap(file, *from, *to),
        Command::Mk { file, k, sampling } => commands::mk(file, *k, &options(sampling)),
        Command::Demo {
            name,
            window,
            steps,
            countable_analog,
            family,
        } => commands::demo(&DemoArgs {
            name,
            window: *window,
            steps: *steps,
            countable_analog: *countable_analog,
            family: family.as_deref(),
        }),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::CheckAxioms { .. } => "check-axioms",
        Command::Union { .. } => "union",
        Command::UnionBase { .. } => "union-base",
        Command::Chain { .. } => "chain",
        Command::Pack { .. } => "pack",
        Command::Cover { .. } => "cover",
        Command::Trees { .. } => "trees",
        Command::Finitarize { .. } => "finitarize",
        Command::Gap { .. } => "gap",
        Command::Mk { .. } => "mk",
        Command::Demo { .. } => "demo",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let (outcome, inputs) = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let name = command_name(&cli.command);
    let refs: Vec<&[u8]> = inputs.iter().map(|b| b.as_slice()).collect();
    let report = RunReport {
        command: std::env::args().skip(1).collect(),
        inputs_digest: digest(name, &refs),
        timing_ms: start.elapsed().as_millis(),
        threads: cli.threads,
        outcome,
    };
    let json = || serde_json::to_string_pretty(&report.to_json()).expect("reports serialize") + "\n";
    let text = match &cli.json {
        Some(None) => json(),
        Some(Some(path)) => {
            if let Err(e) = std::fs::write(path, json()) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
            report.human()
        }
        None => report.human(),
    };
    // A closed pipe is not an error of the run.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(if report.outcome.verdict { 0 } else { 1 })
}
