//! Argument parsing and dispatch for the `hopfgen` binary.
//!
//! Exit codes: 0 when every check passed (or the polynomial is an identity),
//! 1 when a check failed, 2 on a usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use hopfgen_core::identities::DEFAULT_WORD_CAP;

use crate::commands::{self, BaseCheck, BasisChoice, Output};
use crate::select::FamilyArgs;
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "hopfgen", version, about = "Exact computations with pointed Hopf algebras and their generic cocycles")]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads for the self-test.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the structure constants of an algebra.
    Describe {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the Hopf algebra axioms.
    Axioms {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Decide whether a noncommutative polynomial is an H-identity.
    Identity {
        #[command(flatten)]
        family: FamilyArgs,
        /// Polynomial in the variables `X[label]`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Two-cocycle in JSON form; the trivial cocycle when absent.
        #[arg(long)]
        cocycle: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        word_cap: usize,
    },
    /// Generators of the generic base algebra and the checks on them.
    Base {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "all")]
        check: BaseCheck,
        /// Laurent monomial to write over the generators, e.g. `t[x]^2*t[1]^-1`.
        #[arg(long, allow_hyphen_values = true)]
        decompose: Option<String>,
    },
    /// Basis and index of the degree-zero lattice of a group.
    Ygroup {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "auto")]
        basis: BasisChoice,
        /// `pq` also checks that the P and Q monomials span the lattice.
        #[arg(long, value_parser = ["pq"])]
        check: Option<String>,
    },
    /// Check the generic cocycle of a cocycle.
    Sigma {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        cocycle: Option<PathBuf>,
        /// Use the coboundary of a random form drawn from this seed.
        #[arg(long)]
        coboundary_seed: Option<u64>,
        /// Include the full table of generic cocycle values.
        #[arg(long)]
        values: bool,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Comma separated criterion numbers; all when absent.
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

fn execute(cli: Cli) -> Result<Output, CliError> {
    let Cli { seed, jobs, command } = cli;
    Ok(match command {
        Command::Describe { family, format } => commands::describe(&family.build()?, format == Format::Text),
        Command::Axioms { family } => commands::axioms(&family.build()?),
        Command::Identity { family, poly, cocycle, word_cap } => {
            commands::identity(&family.build()?, &poly, cocycle.as_deref(), word_cap)?
        }
        Command::Base { family, check, decompose } => commands::base(&family.build()?, check, decompose.as_deref(), seed)?,
        Command::Ygroup { group, basis, check } => commands::ygroup(&group, basis, check.is_some())?,
        Command::Sigma { family, cocycle, coboundary_seed, values } => {
            commands::sigma(&family.build()?, cocycle.as_deref(), coboundary_seed, values)?
        }
        Command::Selftest { format, only } => {
            if let Some(bad) = only.iter().find(|&&k| !(1..=commands_count()).contains(&k)) {
                return Err(CliError::Usage(format!("no criterion {bad}")));
            }
            commands::selftest(&only, seed, jobs, format == Format::Json)
        }
    })
}

fn commands_count() -> usize {
    crate::selftest::CRITERIA.len()
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.body);
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "hopfgen: {e}");
            e.exit_code()
        }
    }
}
