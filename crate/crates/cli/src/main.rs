//! `krak`: generate Clifford quasigroups, verify quasigroup laws, do
//! cracovian arithmetic and check cracovian representations.
//!
//! Exit codes: 0 success, 1 a law/homomorphism violation or an arithmetic
//! failure (dimension mismatch, singular table), 2 invalid input or schema,
//! 3 I/O failure.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use krak::Tolerance;

use error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "krak",
    version,
    about = "Cracovian algebra and quasigroups of groups with involution"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Absolute tolerance for floating-point comparisons.
    #[arg(long, global = true, value_parser = positive_f64, conflicts_with = "exact")]
    tol: Option<f64>,
    /// Compare entries exactly. Selected automatically when every input
    /// entry is a Gaussian integer and no tolerance is given.
    #[arg(long, global = true)]
    exact: bool,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

impl GlobalOpts {
    /// The tolerance to use for inputs that are (or are not) all Gaussian
    /// integers.
    fn tolerance(&self, gaussian_integer_inputs: bool) -> Tolerance {
        match (self.exact, self.tol) {
            (true, _) => Tolerance::Exact,
            (false, Some(eps)) => Tolerance::Absolute(eps),
            (false, None) if gaussian_integer_inputs => Tolerance::Exact,
            (false, None) => Tolerance::default(),
        }
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the Clifford group, its involution, the quasigroup and a
    /// cracovian representation for N generators.
    GenClifford {
        /// Number of generators.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=commands::GEN_CLIFFORD_MAX_N as i64))]
        n: u32,
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a group and involution and run the quasigroup law suite.
    Verify {
        group: PathBuf,
        involution: PathBuf,
        /// Longest chain for the multi-factor laws.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..=8))]
        depth: u32,
        /// Largest group order whose associativity is checked exhaustively.
        #[arg(long, default_value_t = krak::group::DEFAULT_ASSOCIATIVITY_CAP)]
        assoc_cap: usize,
    },
    /// Cracovian arithmetic on CSV or JSON tables (chosen by extension).
    Crac {
        op: CracOp,
        /// One input for inv/transpose, two for mul/commute.
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
        /// Write the result here instead of printing CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the cracovian homomorphism of a representation bundle against a
    /// quasigroup file and report commutant dimensions.
    RepCheck {
        quasigroup: PathBuf,
        representation: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CracOp {
    Mul,
    Inv,
    Transpose,
    Commute,
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| CliError::Input(format!("cannot configure {jobs} worker threads: {e}")))?;
    }
    match cli.command {
        Command::GenClifford { n, out } => commands::gen_clifford(n as usize, &out),
        Command::Verify {
            group,
            involution,
            depth,
            assoc_cap,
        } => commands::verify(&group, &involution, depth as usize, assoc_cap),
        Command::Crac { op, inputs, out } => commands::crac(op, &inputs, out.as_deref(), &cli.global),
        Command::RepCheck {
            quasigroup,
            representation,
        } => commands::rep_check(&quasigroup, &representation, &cli.global),
    }
}

/// Parses arguments; invalid ones exit 2 with the usage of the subcommand
/// they were given to.
fn parse_args() -> Cli {
    let err = match Cli::try_parse() {
        Ok(cli) => return cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => e,
    };
    let _ = err.print();
    let mut cmd = Cli::command();
    cmd.build();
    let sub = std::env::args().skip(1).find_map(|a| {
        cmd.get_subcommands()
            .find(|s| s.get_name() == a)
            .map(|s| s.get_name().to_string())
    });
    let usage = match sub.and_then(|name| cmd.find_subcommand_mut(&name).map(|s| s.render_usage())) {
        Some(u) => u,
        None => cmd.render_usage(),
    };
    if !err.to_string().contains("Usage:") {
        eprintln!("\n{usage}");
    }
    std::process::exit(2);
}

fn main() -> ExitCode {
    let cli = parse_args();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
