use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use indpoly::bounds::Constants;
use indpoly::scalar::parse_rational;
use indpoly::Rational;
use indpoly_harness::config::{DEFAULT_CAP, DEFAULT_ORDERS};
use indpoly_harness::{
    cmd_bounds, cmd_cover, cmd_poly, cmd_report, cmd_verify, CheckKind, Format, PhiPolicy, RunConfig,
};

/// Exact independence polynomials and bound verification for regular graphs.
#[derive(Debug, Parser)]
#[command(name = "indpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the independence polynomial of one graph.
    Poly {
        /// graph6 string, gen: spec, or a file holding one graph.
        input: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Evaluate every applicable bound against the exact polynomial.
    Bounds {
        input: String,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Verify all checks over a corpus. Exit 0 = pass, 2 = counterexample, 1 = error.
    Verify {
        /// Corpus files, gen:/sweep: specs, graph6 strings, or - for stdin.
        #[arg(required = true)]
        inputs: Vec<String>,
        #[command(flatten)]
        opts: RunOpts,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Random vertex orders per graph for the ordering check.
        #[arg(long, default_value_t = DEFAULT_ORDERS)]
        orders: usize,
        /// Run only these checks (repeatable).
        #[arg(long = "check", value_parser = parse_check)]
        checks: Vec<CheckKind>,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Add per-graph wall-clock times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Build and verify a seed/cover certificate for an independent set.
    Cover {
        input: String,
        /// Comma-separated vertices, or "max" for a maximum independent set.
        #[arg(long, default_value = "max")]
        set: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Render a saved verify JSON file, flagged graphs first.
    Report {
        records: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct RunOpts {
    /// Activity "p/q" (repeatable); defaults to 1/2, 1 and 2.
    #[arg(long = "lambda", value_parser = parse_lambda)]
    lambdas: Vec<Rational>,
    /// Cover threshold; defaults to floor(sqrt(d log2 d)).
    #[arg(long)]
    phi: Option<usize>,
    #[arg(long = "const-C", default_value_t = 2.0)]
    big_c: f64,
    #[arg(long = "const-c", default_value_t = 1.0)]
    small_c: f64,
    /// Fixed C_lambda; derived from the c constant per activity when absent.
    #[arg(long = "const-Clambda")]
    c_lambda: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest vertex count for exact polynomial computation.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_lambda(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("expected p/q, got {text:?}"))
}

fn parse_check(text: &str) -> Result<CheckKind, String> {
    CheckKind::from_name(text).ok_or_else(|| {
        let names: Vec<&str> = CheckKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown check {text:?}; expected one of {}", names.join(", "))
    })
}

impl RunOpts {
    fn config(&self) -> RunConfig {
        let defaults = RunConfig::default();
        RunConfig {
            lambdas: if self.lambdas.is_empty() { defaults.lambdas.clone() } else { self.lambdas.clone() },
            phi: self.phi.map_or(PhiPolicy::Default, PhiPolicy::Explicit),
            constants: Constants { big_c: self.big_c, c: self.small_c, c_lambda: self.c_lambda, c_alpha: None },
            seed: self.seed,
            cap: self.cap,
            ..defaults
        }
    }
}

fn run(cli: Cli) -> indpoly_harness::Result<i32> {
    let (output, out) = match cli.command {
        Command::Poly { input, opts } => (cmd_poly(&input, &opts.config().validate()?)?, opts.out),
        Command::Bounds { input, opts, format } => (cmd_bounds(&input, &opts.config().validate()?, format)?, opts.out),
        Command::Verify { inputs, opts, format, orders, checks, jobs, timings } => {
            let mut cfg = RunConfig { orders, jobs, timings, ..opts.config() };
            if !checks.is_empty() {
                cfg.checks = checks.into_iter().collect();
            }
            (cmd_verify(&inputs, &cfg.validate()?, format)?, opts.out)
        }
        Command::Cover { input, set, opts } => (cmd_cover(&input, &set, &opts.config().validate()?)?, opts.out),
        Command::Report { records, format, out } => (cmd_report(&records, format)?, out),
    };
    output.emit(out.as_deref())?;
    Ok(output.exit_code)
}

fn main() -> ExitCode {
    // Usage errors exit 1 here; clap's own code 2 is reserved for counterexamples.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
