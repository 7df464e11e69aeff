//! `pgl4`: run the verification suite and ad-hoc computations from the shell.
//!
//! Exit codes: 0 success, 1 a check failed (or a computation ran out of budget),
//! 2 usage error, 3 internal error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Relative `--output` paths are resolved against this directory when it is set.
pub const OUTPUT_DIR_ENV: &str = "PGL4_OUTPUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "pgl4", version, about = "Exact checks for finite collineation groups of P^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the registered checks and write a report.
    Verify(VerifyArgs),
    /// Orbit and stabilizer of a point.
    Orbit(OrbitArgs),
    /// Degree-one character multiplicities and invariant polynomials in one degree.
    Invariants(InvariantsArgs),
    /// Enumerate Riemann-Hurwitz solutions for a group acting on a curve.
    Rh(RhArgs),
    /// Groebner basis of a homogeneous ideal within a step budget.
    Groebner(GroebnerArgs),
    /// Catalog data.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// List registered checks with their tier, tags and location.
    ListChecks {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
    Text,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated globs matched against check ids and tags.
    #[arg(long)]
    pub filter: Option<String>,
    /// Fail on skipped or timed-out checks too; stretch and paper-level checks are left out unless --with-stretch.
    #[arg(long)]
    pub strict: bool,
    /// Include stretch and paper-level checks under --strict.
    #[arg(long)]
    pub with_stretch: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report file; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Step budget for Groebner computations.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// H, HH, G80, G160, G320 or G144.
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value = "projective")]
    pub mode: String,
    /// Work in Q(ζ_n); n must contain the roots the input needs.
    #[arg(long)]
    pub field: Option<u32>,
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Point literal such as "[1:0:i:0]".
    #[arg(long)]
    pub point: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    /// Catalog group; its linear lift is used.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub degree: u32,
    #[arg(long)]
    pub field: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct RhArgs {
    #[arg(long)]
    pub order: u64,
    /// Comma-separated orders of nontrivial stabilizers.
    #[arg(long, value_delimiter = ',', required = true)]
    pub stabilizers: Vec<u64>,
    #[arg(long)]
    pub genus_max: u64,
    #[arg(long, default_value_t = 0)]
    pub genus_min: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GroebnerArgs {
    /// Polynomial literal; repeatable.
    #[arg(long = "poly")]
    pub polys: Vec<String>,
    /// Catalog polynomial key; repeatable.
    #[arg(long = "key")]
    pub keys: Vec<String>,
    /// Replace the single input polynomial by its four partial derivatives.
    #[arg(long)]
    pub jacobian: bool,
    #[arg(long, default_value = "degrevlex")]
    pub order: String,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub field: Option<u32>,
    /// Print the reduced basis.
    #[arg(long)]
    pub print_basis: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Print catalog entries with their locations and errata.
    Export {
        /// Entry key; repeatable. All entries when absent.
        #[arg(long = "key")]
        keys: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::EXIT_USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify(a) => commands::verify(&a),
        Command::Orbit(a) => commands::orbit(&a),
        Command::Invariants(a) => commands::invariants(&a),
        Command::Rh(a) => commands::rh(&a),
        Command::Groebner(a) => commands::groebner(&a),
        Command::Catalog { action: CatalogAction::Export { keys, format, output } } => {
            commands::catalog_export(&keys, format, output.as_deref())
        }
        Command::ListChecks { format } => commands::list_checks(format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
