mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chevalley_core::group::DEFAULT_BFS_CAP;
use chevalley_core::verify::DEFAULT_SEED;

/// Exact root systems, Chevalley bases and adjoint Chevalley groups.
///
/// Exit status: 0 when every requested check passes, 1 when a mathematical
/// check fails, 2 on a usage error.
#[derive(Debug, Parser)]
#[command(name = "chevalley", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the Cartan matrix comes from.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Type designation such as G2, a3 or E6.
    #[arg(long = "type", value_name = "TYPE")]
    pub kind: Option<String>,
    /// JSON file holding a Cartan matrix, either `[[2,-1],[-1,2]]` or
    /// `{"cartan": [[...]]}`.
    #[arg(long, value_name = "FILE")]
    pub raw: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots, heights and (optionally) all pairings.
    Roots {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
        /// Include the matrix of pairings (β, α^∨).
        #[arg(long)]
        pairings: bool,
    },
    /// One generator acting on the canonical adjoint model.
    Adjoint {
        #[command(flatten)]
        source: Source,
        /// `e<i>`, `f<i>`, `h<i>` (1-based) or `omega`.
        #[arg(long = "gen", value_name = "GENERATOR")]
        generator: String,
        #[arg(long)]
        json: bool,
    },
    /// The Lie algebra generated by the e_i and f_i, with its decompositions.
    Closure {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = commands::Report::Text)]
        report: commands::Report,
    },
    /// Chevalley basis and structure constants for one sign function.
    Chevbasis {
        #[command(flatten)]
        source: Source,
        /// One `+` or `-` per node; defaults to the coloring with node 1 positive.
        #[arg(long, value_name = "SIGNS", allow_hyphen_values = true)]
        eps: Option<String>,
        /// Print the reference G2 relation table.
        #[arg(long, conflicts_with_all = ["json", "csv"])]
        table: bool,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Enumerate the adjoint Chevalley group over a prime field.
    Group {
        #[arg(long = "type", value_name = "TYPE")]
        kind: String,
        /// Prime order of the field.
        #[arg(long)]
        q: u32,
        /// Compare the order with the classical formula; exit 1 on mismatch.
        #[arg(long)]
        order: bool,
        /// Abort after this many elements.
        #[arg(long, env = "CHEVALLEY_BFS_CAP", default_value_t = DEFAULT_BFS_CAP)]
        cap: usize,
        /// Write all elements to this file in binary form.
        #[arg(long, value_name = "FILE")]
        dump: Option<PathBuf>,
        /// Expand each BFS layer on all cores.
        #[arg(long)]
        parallel: bool,
        /// Permit groups with more than 100000 elements.
        #[arg(long)]
        allow_heavy: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the full invariant suite for one root system.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Permit root systems with more than 36 positive roots.
        #[arg(long)]
        allow_heavy: bool,
    },
}

/// Invalid input rather than a failed check.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Roots { source, json, pairings } => commands::roots(&mut out, &source, json, pairings),
        Command::Adjoint {
            source,
            generator,
            json,
        } => commands::adjoint(&mut out, &source, &generator, json),
        Command::Closure { source, report } => commands::closure(&mut out, &source, report),
        Command::Chevbasis {
            source,
            eps,
            table,
            json,
            csv,
        } => {
            let format = if table {
                commands::BasisFormat::Table
            } else if json {
                commands::BasisFormat::Json
            } else if csv {
                commands::BasisFormat::Csv
            } else {
                commands::BasisFormat::Text
            };
            commands::chevbasis(&mut out, &source, eps.as_deref(), format)
        }
        Command::Group {
            kind,
            q,
            order,
            cap,
            dump,
            parallel,
            allow_heavy,
            json,
        } => commands::group(
            &mut out,
            &commands::GroupRequest {
                kind,
                q,
                compare: order,
                cap,
                dump,
                parallel,
                allow_heavy,
                json,
            },
        ),
        Command::Verify {
            source,
            seed,
            json,
            allow_heavy,
        } => commands::verify(&mut out, &source, seed, json, allow_heavy),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e)
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
