use std::process::ExitCode;

use affine_eulerian::verify::{Ceiling, Suite, SuiteOptions, DEFAULT_MAX_ELEMENTS};
use affine_eulerian::Family;
use affine_eulerian_cli::output::Format;
use affine_eulerian_cli::{
    compute, table1, verify, CliError, ComputeRequest, Form, Method, Outcome, Statistic,
};
use clap::{Parser, Subcommand};

/// Ordinary and affine Eulerian polynomials of Weyl groups.
#[derive(Parser, Debug)]
#[command(name = "affeuler", version)]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one polynomial.
    Compute {
        /// A, B, C, D, E6, E7, E8, F4 or G2.
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Coxeter rank (A_r is the symmetric group on r+1 letters).
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value = "affine")]
        statistic: Statistic,
        #[arg(long, value_enum, default_value = "univariate")]
        form: Form,
        #[arg(long, value_enum, default_value = "diagram")]
        method: Method,
        /// Series truncation for the egf method.
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: u64,
    },
    /// Recompute the table of affine Eulerian polynomials and compare.
    Table1,
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        max_rank: usize,
        /// Series truncation for the generating-function identities.
        #[arg(long, default_value_t = 40)]
        order: usize,
        /// Largest group enumerated directly; larger ones use other methods.
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: u64,
        /// Include per-check timings (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: affine_eulerian::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: affine_eulerian::Error| e.to_string())
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Compute {
            family,
            rank,
            statistic,
            form,
            method,
            order,
            max_elements,
        } => compute(&ComputeRequest {
            family,
            rank,
            statistic,
            form,
            method,
            order,
            max_elements,
            output: cli.output,
        }),
        Command::Table1 => table1(cli.output),
        Command::Verify {
            suite,
            max_rank,
            order,
            max_elements,
            timings,
        } => {
            let options = SuiteOptions {
                max_rank,
                order,
                ceiling: Ceiling::new(max_elements),
            };
            verify(suite, &options, cli.output, timings)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
