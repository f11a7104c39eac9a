use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flagschur::cli::{self, CmdOutput, DiagramSpec, Format, JobConfig, MethodChoice};
use flagschur::error::Error;
use flagschur::oracle::OracleConfig;
use flagschur::perm::Permutation;
use flagschur::verify::BoxSpec;

#[derive(Parser)]
#[command(
    name = "flagschur",
    version,
    about = "Characters of flagged Schur modules of diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Column list ("2,3;2,3,5;3"), grid ("##/../.#"), rothe:<w> or repeat:<m>x<spec>
    #[arg(long, allow_hyphen_values = true, conflicts_with = "rothe")]
    diagram: Option<String>,
    /// Permutation in one-line notation ("146253", or comma-separated)
    #[arg(long)]
    rothe: Option<String>,
}

impl Input {
    fn spec(&self) -> Result<DiagramSpec, Error> {
        match (&self.diagram, &self.rothe) {
            (Some(d), None) => d.parse(),
            (None, Some(w)) => format!("rothe:{w}").parse(),
            _ => Err(Error::Parse("give exactly one of --diagram or --rothe".into())),
        }
    }
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value = "text")]
    format: String,
    /// Maximum number of fillings per diagram for the oracle
    #[arg(long, default_value_t = flagschur::oracle::DEFAULT_CAP_FILLINGS)]
    cap_fillings: usize,
    /// Maximum number of expanded terms per product of minors
    #[arg(long, default_value_t = flagschur::oracle::DEFAULT_CAP_TERMS)]
    cap_terms: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the character of a diagram
    Char {
        #[command(flatten)]
        input: Input,
        /// recursion, redwords, dd, oracle or auto
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        nvars: Option<usize>,
        /// Partial flag ranks, e.g. "1,2,5,6,7" (oracle only)
        #[arg(long)]
        rank_sequence: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Classify a diagram and list its descents
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// List the reduced words of a transparent diagram
    ReducedWords {
        #[command(flatten)]
        input: Input,
        /// Fail instead of listing more than this many words
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the Rothe diagram of a permutation
    Rothe {
        permutation: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Cross-check all methods and laws on every diagram in a box
    Verify {
        /// Box size RxC: rows R, at most C columns
        #[arg(long = "box", default_value = "3x3")]
        box_size: String,
        #[arg(long, default_value_t = 2)]
        max_multiplicity: usize,
        /// Restrict to Rothe diagrams of S_R
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn oracle_config(c: &Common) -> OracleConfig {
    OracleConfig {
        cap_fillings: Some(c.cap_fillings),
        cap_terms: Some(c.cap_terms),
        ..OracleConfig::default()
    }
}

fn dispatch(cmd: Command) -> Result<CmdOutput, Error> {
    Ok(match cmd {
        Command::Char {
            input,
            method,
            nvars,
            rank_sequence,
            common,
        } => {
            let cfg = JobConfig {
                method: method.parse::<MethodChoice>()?,
                nvars,
                rank_sequence: rank_sequence.as_deref().map(cli::parse_rank_sequence).transpose()?,
                format: common.format.parse()?,
                oracle: oracle_config(&common),
            };
            cli::cmd_char(&input.spec()?, &cfg)
        }
        Command::Classify { input, format } => cli::cmd_classify(&input.spec()?, format.parse()?),
        Command::ReducedWords { input, cap, format } => cli::cmd_reduced_words(&input.spec()?, cap, format.parse()?),
        Command::Rothe { permutation, format } => {
            cli::cmd_rothe(&permutation.parse::<Permutation>()?, format.parse::<Format>()?)
        }
        Command::Verify {
            box_size,
            max_multiplicity,
            only,
            common,
        } => {
            let (rows, cols) = cli::parse_box(&box_size)?;
            let only_rothe = match only.as_deref() {
                None => false,
                Some("rothe") => true,
                Some(other) => return Err(Error::Parse(format!("unknown --only {other:?}"))),
            };
            let cfg = JobConfig {
                format: common.format.parse()?,
                oracle: oracle_config(&common),
                ..JobConfig::default()
            };
            cli::cmd_verify(&BoxSpec::rectangle(rows, cols, max_multiplicity), only_rothe, &cfg)
        }
    })
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let out = dispatch(args.command).unwrap_or_else(CmdOutput::from);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
