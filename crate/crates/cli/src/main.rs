//! Command-line front end for the Goeritz-matrix invariants.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

const FAMILY_HELP: &str = "\
Family specs have the form name:param[,param]:
  torus2:P       the torus link T[2,P], |P| >= 2
  twist:M        the twist knot Tw_M, M >= 1
  knot52         the knot 5_2
  pretzel332     the pretzel knot P(3,3,2) = 8_5
  rational:B,S   the rational knot R((8b+4)/(-12b-7)) with b = SB, B >= 0, S = + or -
  m10140         the Montesinos knot 10_140

Classical matrices exist for torus2, twist and knot52; quadruple matrices
for torus2 (P >= 3), twist, pretzel332, rational and m10140. Jones
polynomials of families without a classical matrix come from H(A = q^2).

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.";

#[derive(Parser, Debug)]
#[command(name = "goeritz", version, about = "Jones and HOMFLY-PT polynomials from Goeritz matrices", after_help = FAMILY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Largest number of cached submatrices during the recursion.
    #[arg(long, env = "GOERITZ_MEMO_LIMIT", value_name = "N", global = true,
          default_value_t = goeritz::goeritz::DEFAULT_MEMO_LIMIT)]
    memo_limit: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jones polynomial, normalized so that the unknot is q + q^-1.
    #[command(after_help = FAMILY_HELP)]
    Jones(Compute),
    /// HOMFLY-PT polynomial of a bipartite link.
    #[command(after_help = FAMILY_HELP)]
    Homfly(Compute),
    /// Build a family and compare its invariants with the closed forms.
    #[command(after_help = FAMILY_HELP)]
    Family(FamilyArgs),
    /// Compare brute-force state sums of a diagram with the matrix algorithms.
    Oracle(OracleArgs),
    /// Continued fraction of P/Q with even coefficients.
    Cf(CfArgs),
    /// Check that M reduces to mu of the precursor matrix.
    #[command(name = "reduce-check", after_help = FAMILY_HELP)]
    ReduceCheck(Compute),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in family, e.g. torus2:5.
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
    /// JSON matrix file.
    #[arg(long, value_name = "FILE")]
    pub matrix: Option<PathBuf>,
    /// JSON diagram file.
    #[arg(long, value_name = "FILE")]
    pub diagram: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Compute {
    #[command(flatten)]
    pub source: Source,
    /// Checkerboard coloring of a family or diagram.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2), conflicts_with = "matrix")]
    pub coloring: Option<u8>,
    /// Region deleted from the unreduced matrix.
    #[arg(long, value_name = "K")]
    pub delete: Option<usize>,
    /// Use the mirror image.
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Built-in family, e.g. twist:4.
    #[arg(long, value_name = "SPEC")]
    pub family: String,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub coloring: Option<u8>,
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// JSON diagram file.
    #[arg(long, value_name = "FILE")]
    pub diagram: PathBuf,
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Args, Debug)]
pub struct CfArgs {
    /// A fraction P/Q with coprime P and Q, or an integer.
    #[arg(allow_hyphen_values = true, value_name = "P/Q", value_parser = parse_fraction)]
    pub fraction: (i64, i64),
}

fn parse_fraction(s: &str) -> Result<(i64, i64), String> {
    let int = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?} is not an integer: {e}"));
    match s.split_once('/') {
        Some((p, q)) => Ok((int(p)?, int(q)?)),
        None => Ok((int(s)?, 1)),
    }
}

/// Failure of a command: a domain error exits with 1.
pub struct Failure {
    pub context: String,
    pub message: String,
}

impl Failure {
    pub fn new(context: impl Into<String>, message: impl ToString) -> Self {
        Failure { context: context.into(), message: message.to_string() }
    }
}

/// Rendered output and whether every check in it passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Ctx { format: cli.format, memo_limit: cli.memo_limit };
    let result = match &cli.command {
        Command::Jones(a) => commands::jones(&ctx, a),
        Command::Homfly(a) => commands::homfly(&ctx, a),
        Command::Family(a) => commands::family(&ctx, a),
        Command::Oracle(a) => commands::oracle(&ctx, a),
        Command::Cf(a) => commands::cf(&ctx, a),
        Command::ReduceCheck(a) => commands::reduce_check(&ctx, a),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}: {}", f.context, f.message);
            ExitCode::from(1)
        }
    }
}
