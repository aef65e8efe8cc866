//! Batch commands behind the `kgpart` binary.
//!
//! Exit statuses: 0 success, 1 infeasible input, 2 verification failure,
//! 3 parse or usage error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cable::{make_cable, run_protocol};
use crate::error::Error;
use crate::format;
use crate::partition::{construct_detailed, kg_violations, verify_kg, Violation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Matrices as `1`/`.` grids, partitions as set lists.
    #[default]
    Grid,
    /// Versioned JSON documents.
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "kgpart",
    version,
    about = "Knowlton-Graham partitions and cable wire identification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a symmetric partition pair on n elements.
    Construct {
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Order; defaults to the smallest feasible one.
        #[arg(long = "m", value_parser = clap::value_parser!(u64).range(1..))]
        m: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print m(m+1)/2 and J(m) for m = 1..=max-m.
    Bounds {
        #[arg(long = "max-m", value_parser = clap::value_parser!(u64).range(1..))]
        max_m: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check a serialized partition pair (`-` reads stdin).
    Verify { path: PathBuf },
    /// Run the two-ended labelling protocol over a seeded cable.
    Simulate {
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long = "m", value_parser = clap::value_parser!(u64).range(1..))]
        m: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(status: i32, stderr: String) -> Self {
        Outcome {
            status,
            stdout: String::new(),
            stderr,
        }
    }
}

fn status_for(err: &Error) -> i32 {
    match err {
        Error::NoOrder { .. } | Error::OutOfRange { .. } => EXIT_INFEASIBLE,
        Error::NotKg(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

fn fail_with(err: Error) -> Outcome {
    Outcome::fail(status_for(&err), format!("error: {err}\n"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    match command {
        Command::Construct { n, m, format } => {
            cmd_construct(n as usize, m.map(|m| m as usize), format)
        }
        Command::Bounds { max_m, format } => cmd_bounds(max_m as usize, format),
        Command::Verify { path } => {
            let text = if path.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).map(|_| buf)
            } else {
                std::fs::read_to_string(&path)
            };
            match text {
                Ok(text) => cmd_verify(&text),
                Err(e) => Outcome::fail(
                    EXIT_USAGE,
                    format!("error: cannot read {}: {e}\n", path.display()),
                ),
            }
        }
        Command::Simulate { n, m, seed, format } => {
            cmd_simulate(n as usize, m.map(|m| m as usize), seed, format)
        }
    }
}

pub fn cmd_construct(n: usize, m: Option<usize>, format: OutputFormat) -> Outcome {
    let c = match construct_detailed(n, m) {
        Ok(c) => c,
        Err(e) => return fail_with(e),
    };
    assert!(verify_kg(&c.partition), "construction failed verification");
    Outcome::ok(match format {
        OutputFormat::Grid => format::construction_to_text(&c),
        OutputFormat::Structured => format::construction_to_json(&c),
    })
}

pub fn cmd_bounds(max_m: usize, format: OutputFormat) -> Outcome {
    if max_m == 0 {
        return Outcome::fail(EXIT_USAGE, "error: --max-m must be at least 1\n".into());
    }
    Outcome::ok(match format {
        OutputFormat::Grid => format::bounds_to_text(max_m),
        OutputFormat::Structured => format::bounds_to_json(max_m),
    })
}

/// Verifies the text of a `kg-partition/v1` document.
pub fn cmd_verify(text: &str) -> Outcome {
    let p = match format::partition_from_json(text) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}\n")),
    };
    let violations = kg_violations(&p);
    if violations.is_empty() {
        return Outcome::ok(format!(
            "ok: n = {}, order {}, {} A-sets, {} B-sets\n",
            p.n,
            p.order(),
            p.a_sets.len(),
            p.b_sets.len()
        ));
    }
    let mut stderr = String::from("verification failed:\n");
    for v in &violations {
        stderr.push_str(&format!("  {}\n", Violation::to_string(v)));
    }
    Outcome::fail(EXIT_VERIFY_FAILED, stderr)
}

pub fn cmd_simulate(n: usize, m: Option<usize>, seed: u64, format: OutputFormat) -> Outcome {
    let c = match construct_detailed(n, m) {
        Ok(c) => c,
        Err(e) => return fail_with(e),
    };
    let cable = make_cable(n, seed);
    let transcript = match run_protocol(&c.partition, &cable) {
        Ok(t) => t,
        Err(e) => return fail_with(e),
    };
    Outcome::ok(match format {
        OutputFormat::Grid => format::transcript_to_text(&transcript, &cable),
        OutputFormat::Structured => format::transcript_to_json(&transcript, &cable),
    })
}
