//! `toricsolve`: batch front end for the toric solving library.
//!
//! Each invocation reads one JSON job, runs one command and writes one JSON
//! result. Exit status 0 is success, 2 a mathematical degeneracy reported as
//! a structured result, 1 an input error.

mod commands;
mod job;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use toricsolve::resultant::MatrixCache;
use toricsolve::solver::Mode;
use toricsolve::Scalar;

#[derive(Parser)]
#[command(name = "toricsolve", version, about = "Exact solving of sparse polynomial systems via toric resultants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mixed volume of the supports.
    Mv(JobArgs),
    /// Essential subsets of the support tuple.
    Essential(JobArgs),
    /// Verify the job's `fill`, or construct an irreducible fill.
    Fill(JobArgs),
    /// Build (and cache) the resultant matrix for the supports plus `A`.
    Genmatrix(JobArgs),
    /// Whether the twisted Chow form over `A` vanishes identically.
    ChowTest(JobArgs),
    /// Evaluate the toric perturbation at the job's `u`.
    PertEval(JobArgs),
    /// Univariate encoding of the roots and the rational points it yields.
    Solve(JobArgs),
    /// Torus root counts.
    Count(JobArgs),
    /// Bounds on isolated roots from two perturbations.
    CountIsolated(JobArgs),
    /// Polynomial whose splitting field holds the torus-root coordinates.
    Splitting(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// Job document (JSON).
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Pert)]
    mode: ModeArg,
    /// Add the origin to every support so roots on coordinate hyperplanes are found.
    #[arg(long)]
    affine: bool,
    /// Directory of cached resultant matrices.
    #[arg(long, value_name = "DIR", env = "TORICSOLVE_CACHE")]
    cache: Option<PathBuf>,
    /// Comma-separated `u_1,...,u_n` instead of the ε schedule, e.g. "1/2,1".
    #[arg(long = "force-u", value_name = "LIST")]
    force_u: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Chow,
    Pert,
}

pub enum Failure {
    Input(String),
    Degenerate(Value),
}

pub struct Settings {
    pub seed: u64,
    pub mode: Mode,
    pub affine: bool,
    pub cache: MatrixCache,
    pub force_u: Option<Vec<Scalar>>,
}

type Handler = fn(&job::Job, &Settings) -> Result<Value, Failure>;

fn run(handler: Handler, args: JobArgs) -> Result<(Value, Option<PathBuf>), (Failure, Option<PathBuf>)> {
    let out = args.out.clone();
    let fail = |f| (f, out.clone());
    let job = job::load(&args.input).map_err(fail)?;
    let force_u = match &args.force_u {
        Some(list) => {
            let items: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            Some(job::force_u(&job.field, job.n, &items).map_err(fail)?)
        }
        None => None,
    };
    let settings = Settings {
        seed: args.seed,
        mode: match args.mode {
            ModeArg::Chow => Mode::Chow,
            ModeArg::Pert => Mode::Pert,
        },
        affine: args.affine,
        cache: MatrixCache::new(args.cache.clone()),
        force_u,
    };
    handler(&job, &settings).map(|v| (v, out.clone())).map_err(fail)
}

fn emit(doc: &Value, out: Option<&PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(doc).expect("JSON values serialize") + "\n";
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (handler, args): (Handler, JobArgs) = match cli.command {
        Command::Mv(a) => (commands::mv, a),
        Command::Essential(a) => (commands::essential, a),
        Command::Fill(a) => (commands::fill, a),
        Command::Genmatrix(a) => (commands::genmatrix, a),
        Command::ChowTest(a) => (commands::chow_test, a),
        Command::PertEval(a) => (commands::pert_eval_cmd, a),
        Command::Solve(a) => (commands::solve_cmd, a),
        Command::Count(a) => (commands::count, a),
        Command::CountIsolated(a) => (commands::count_isolated_cmd, a),
        Command::Splitting(a) => (commands::splitting, a),
    };
    let (doc, out, code) = match run(handler, args) {
        Ok((doc, out)) => (doc, out, ExitCode::SUCCESS),
        Err((Failure::Degenerate(doc), out)) => (doc, out, ExitCode::from(2)),
        Err((Failure::Input(msg), _)) => {
            eprintln!("toricsolve: {msg}");
            return ExitCode::from(1);
        }
    };
    match emit(&doc, out.as_ref()) {
        Ok(()) => code,
        Err(msg) => {
            eprintln!("toricsolve: {msg}");
            ExitCode::from(1)
        }
    }
}
