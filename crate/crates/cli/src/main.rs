//! `scaleshift`: scales from shift spaces on the command line.
//!
//! Exit codes: 0 success, 1 bad input or failed verification, 2 usage
//! error, 3 violated precondition (reducible matrix, cost guard, cap).

mod commands;
mod oeis;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "scaleshift",
    version,
    about = "Exact counts of musical scales induced by shift spaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum number of words any enumeration may generate.
    #[arg(long, global = true, default_value_t = scaleshift::shiftspace::DEFAULT_ENUMERATION_CAP,
          value_parser = positive)]
    cap: usize,
    /// Directory holding OEIS snapshots and sample inputs.
    #[arg(long, global = true, env = "SCALESHIFT_FIXTURES")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count wheels (scales up to rotation) of size n.
    Wheels(WheelsArgs),
    /// Computations on a vertex shift given by a transition matrix.
    Vertex {
        #[arg(value_enum)]
        what: VertexWhat,
        #[command(flatten)]
        args: VertexArgs,
    },
    /// Shifts of finite type given by forbidden blocks.
    Sft {
        #[command(subcommand)]
        command: SftCommand,
    },
    /// Scales from fixed points of substitutions.
    Subst {
        #[command(subcommand)]
        command: SubstCommand,
    },
    /// Run the regression suite.
    Verify(VerifyArgs),
    /// Compare a sequence prefix with an OEIS entry.
    Oeis {
        #[command(subcommand)]
        command: OeisCommand,
    },
}

#[derive(Args, Debug)]
pub struct WheelsArgs {
    /// Size of the scale (number of semitones).
    #[arg(long)]
    pub n: usize,
    /// Allowed parts: `all`, a list `1,2,3`, or a list ending in an open
    /// tail such as `2..`.
    #[arg(long, default_value = "all")]
    pub parts: String,
    /// Also print the counts split by number of parts.
    #[arg(long)]
    pub by_length: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VertexWhat {
    /// det(I - zA) and the zeta function.
    Zeta,
    /// First return loop systems.
    Loops,
    /// Dimensions of the language, or of one symbol's scales.
    Dims,
    /// Dimensions of the scales of all symbols together.
    Global,
    /// Words of one length.
    Language,
}

#[derive(Args, Debug)]
pub struct VertexArgs {
    /// Matrix file: a line of symbols, then one 0/1 row per symbol.
    #[arg(long)]
    pub matrix: PathBuf,
    /// Distinguished symbol.
    #[arg(long)]
    pub symbol: Option<String>,
    /// Truncation order (word length for `language`).
    #[arg(long, default_value_t = 64, value_parser = positive)]
    pub order: usize,
    /// Include tables refined by number of parts.
    #[arg(long)]
    pub bivariate: bool,
}

#[derive(Subcommand, Debug)]
enum SftCommand {
    /// First-return matrix and scales under the distinguished set rule.
    Scales(SftArgs),
}

#[derive(Args, Debug)]
pub struct SftArgs {
    /// Forbidden block file, one word per line.
    #[arg(long)]
    pub forbidden: PathBuf,
    /// Alphabet tokens separated by spaces, when the file has no
    /// `alphabet:` line (default `∘ •`).
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Distinguished vertices (blocks), comma separated. Defaults to the
    /// blocks starting with the first alphabet symbol.
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<String>>,
    /// Truncation order.
    #[arg(long, value_parser = positive)]
    pub order: usize,
}

#[derive(Subcommand, Debug)]
enum SubstCommand {
    /// Scales of the n-blocks of a fixed point.
    Scales(SubstArgs),
}

#[derive(Args, Debug)]
pub struct SubstArgs {
    /// Built-in morphism.
    #[arg(
        long,
        value_enum,
        required_unless_present = "rules",
        conflicts_with = "rules"
    )]
    pub preset: Option<PresetName>,
    /// JSON morphism: {"alphabet": [...], "rules": {sym: word}, "seed": sym}.
    #[arg(long)]
    pub rules: Option<PathBuf>,
    /// Block length.
    #[arg(long, value_parser = positive)]
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    ThueMorse,
    Fibonacci,
    Feigenbaum,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Paper)]
    pub suite: Suite,
    /// Largest size in the oracle grid.
    #[arg(long, default_value_t = 10, value_parser = grid_size)]
    pub max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
}

#[derive(Subcommand, Debug)]
enum OeisCommand {
    /// Check that the coefficients occur as a run of consecutive terms.
    Check(OeisArgs),
}

#[derive(Args, Debug)]
pub struct OeisArgs {
    /// Sequence id such as A000358.
    #[arg(long)]
    pub id: String,
    /// Comma separated integers.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    pub coeffs: Vec<String>,
    /// Use only the bundled snapshot.
    #[arg(long)]
    pub offline: bool,
}

/// Runtime settings shared by every command.
pub struct RunConfig {
    pub format: Format,
    pub cap: usize,
    pub fixtures: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        format: cli.format,
        cap: cli.cap,
        fixtures: cli
            .fixtures
            .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))),
    };
    let result = match cli.command {
        Command::Wheels(args) => commands::wheels(&config, &args),
        Command::Vertex { what, args } => commands::vertex(&config, what, &args),
        Command::Sft {
            command: SftCommand::Scales(args),
        } => commands::sft_scales(&config, &args),
        Command::Subst {
            command: SubstCommand::Scales(args),
        } => commands::subst_scales(&config, &args),
        Command::Verify(args) => commands::verify(&config, &args),
        Command::Oeis {
            command: OeisCommand::Check(args),
        } => oeis::check(&config, &args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn data(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<scaleshift::Error> for Failure {
    fn from(e: scaleshift::Error) -> Self {
        use scaleshift::Error::*;
        match e {
            Reducible => Failure::precondition(format!(
                "{e}: the closed forms need a strongly connected transition graph; use `vertex global` for enumeration"
            )),
            EnumerationCap { .. } => Failure::precondition(format!("{e}; lower --order or raise --cap")),
            CostGuard(_) | NotProlongable(_) => Failure::precondition(e.to_string()),
            _ => Failure::data(e.to_string()),
        }
    }
}

pub type CmdResult = Result<ExitCode, Failure>;

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn grid_size(s: &str) -> Result<usize, String> {
    let v = positive(s)?;
    if v > scaleshift::oracle::MAX_WORD_LEN {
        return Err(format!(
            "must be at most {}",
            scaleshift::oracle::MAX_WORD_LEN
        ));
    }
    Ok(v)
}
