use std::process;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use zfr_cli::commands::{
    cmd_certify, cmd_counterexample, cmd_eval, cmd_gen_h, cmd_poly, cmd_roots, cmd_selftest,
    cmd_sweep, CmdOutput, EvalMode, PolyRoute,
};

/// Exact-arithmetic hypergraph independence polynomials and root
/// certificates for zero-free-region bounds.
#[derive(Parser)]
#[command(name = "zfr", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertifyModeArg {
    Explicit,
    Analytic,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalModeArg {
    Exact,
    Float,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the k-uniform, Δ-regular linear hypergraph on [k] × Z_p
    /// (hypergraph JSON on stdout, metadata JSON on stderr).
    GenH {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        delta: u32,
    },
    /// Build the full counterexample S_H for the odd-trimmed base hypergraph
    /// (hypergraph JSON on stdout, metadata JSON on stderr).
    Counterexample {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        delta: u32,
    },
    /// Apply the edge-extension transform to the input hypergraph.
    Transform {
        /// Hypergraph JSON file, or `-` for stdin.
        #[arg(long)]
        input: String,
    },
    /// Independence polynomial coefficients (decimal strings, ascending).
    Poly {
        #[arg(long)]
        input: String,
        /// Z of the input itself, by backtracking enumeration (default).
        #[arg(long, conflicts_with = "closed_form")]
        bruteforce: bool,
        /// Z of the TRANSFORM of the input, by the subset-sum closed form.
        #[arg(long)]
        closed_form: bool,
    },
    /// Evaluate an independence polynomial at an exact rational point.
    Eval {
        #[arg(long)]
        input: String,
        /// Evaluation point as NUM, NUM/DEN, or a decimal.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Evaluate Z of the transform via the streaming closed form.
        #[arg(long)]
        closed_form: bool,
        /// `exact` (rational output) or `float` (compensated summation,
        /// non-rigorous; requires --closed-form).
        #[arg(long, value_enum, default_value = "exact")]
        mode: EvalModeArg,
    },
    /// Locate roots of Z of the input: exact bisection brackets, and
    /// optionally all complex roots numerically.
    Roots {
        #[arg(long)]
        input: String,
        /// Interval to search for a real root (default: -1 0).
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
        real_interval: Option<Vec<String>>,
        /// Also run the Aberth–Ehrlich complex solver.
        #[arg(long)]
        complex: bool,
        /// Bracket width target (rational; default 1/10^9).
        #[arg(long)]
        tol: Option<String>,
    },
    /// Issue a root certificate for the counterexample family at (k, Δ).
    Certify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        delta: u32,
        #[arg(long, value_enum, default_value = "analytic")]
        mode: CertifyModeArg,
    },
    /// Compare certified bounds against conjectured zero-free radii over a
    /// list of Δ values; emits CSV.
    Sweep {
        #[arg(long)]
        k: u32,
        /// Comma-separated Δ values (empty for a header-only CSV).
        #[arg(long, value_delimiter = ',')]
        delta: Vec<u32>,
        /// Conjecture constant C as NUM, NUM/DEN, or a decimal.
        #[arg(long = "C")]
        c: String,
    },
    /// Run the deterministic desk-scale oracle and invariant checks.
    Selftest,
}

fn run(cli: Cli) -> Result<CmdOutput, String> {
    match cli.command {
        Command::GenH { k, delta } => cmd_gen_h(k, delta),
        Command::Counterexample { k, delta } => cmd_counterexample(k, delta),
        Command::Transform { input } => cmd_transform_entry(&input),
        Command::Poly { input, bruteforce: _, closed_form } => {
            let route = if closed_form { PolyRoute::ClosedForm } else { PolyRoute::Bruteforce };
            cmd_poly(&input, route)
        }
        Command::Eval { input, at, closed_form, mode } => {
            let mode = match mode {
                EvalModeArg::Exact => EvalMode::Exact,
                EvalModeArg::Float => EvalMode::Float,
            };
            cmd_eval(&input, &at, closed_form, mode)
        }
        Command::Roots { input, real_interval, complex, tol } => {
            let interval = real_interval.as_ref().map(|v| (v[0].as_str(), v[1].as_str()));
            cmd_roots(&input, interval, complex, tol.as_deref())
        }
        Command::Certify { k, delta, mode } => {
            let mode = match mode {
                CertifyModeArg::Explicit => zfr_core::certify::Mode::Explicit,
                CertifyModeArg::Analytic => zfr_core::certify::Mode::Analytic,
            };
            cmd_certify(k, delta, mode)
        }
        Command::Sweep { k, delta, c } => cmd_sweep(k, &delta, &c),
        Command::Selftest => cmd_selftest(),
    }
}

fn cmd_transform_entry(input: &str) -> Result<CmdOutput, String> {
    zfr_cli::commands::cmd_transform(input)
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            process::exit(1);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(err) = out.stderr {
                eprint!("{err}");
            }
            process::exit(out.code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            process::exit(1);
        }
    }
}
