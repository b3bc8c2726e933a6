use std::ffi::OsString;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfcalc::cli::{run, AlgorithmChoice, Command, InstanceChoice};
use hopfcalc::hopf::Algorithm;
use hopfcalc::report::Check;

const COMMANDS: [&str; 4] = ["antipode", "coproduct", "filtration", "verify"];

/// Exact antipode, coproduct and filtration computations in connected bialgebras.
#[derive(Debug, Parser)]
#[command(name = "hopfcalc", version)]
struct Cli {
    /// Instance to operate on.
    instance: InstanceName,

    /// Degree bound for verification.
    #[arg(long, global = true, env = "HOPFCALC_MAX_DEGREE", default_value_t = 8)]
    max_degree: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Letters used when enumerating shuffle and broken bases.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=26))]
    alphabet: u8,

    /// Largest letter weight used when enumerating quasi-shuffle bases.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_weight: u32,

    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InstanceName {
    Poly,
    Shuffle,
    Quasishuffle,
    Ck,
    Broken,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Series,
    RecLeft,
    RecRight,
    All,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Evaluate the antipode of an expression.
    Antipode {
        expression: String,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Series)]
        algorithm: AlgorithmArg,
    },
    /// Apply the (reduced) coproduct, optionally iterated.
    Coproduct {
        expression: String,
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        iterate: u64,
    },
    /// Report the conilpotency index and the reduced-coproduct chain.
    Filtration { expression: String },
    /// Run axiom checks up to the degree bound.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run every check.
    #[arg(long, conflicts_with = "checks")]
    all: bool,
    /// Comma-separated subset of checks.
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    checks: Vec<Check>,
}

fn parse_check(s: &str) -> Result<Check, String> {
    Check::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check `{s}` (expected one of {})", names.join(", "))
    })
}

/// Global options that consume the following token as their value.
const VALUE_OPTIONS: [&str; 4] = ["--max-degree", "--format", "--alphabet", "--max-weight"];

/// Accepts `<command> <instance>` as well as `<instance> <command>`.
fn normalize_args(mut args: Vec<OsString>) -> Vec<OsString> {
    let mut i = 1;
    while i < args.len() {
        let Some(tok) = args[i].to_str() else { return args };
        if tok == "--" {
            return args;
        }
        if tok.starts_with('-') {
            i += if VALUE_OPTIONS.contains(&tok) { 2 } else { 1 };
            continue;
        }
        let next_is_instance =
            args.get(i + 1).and_then(|a| a.to_str()).is_some_and(|a| InstanceChoice::NAMES.contains(&a));
        if COMMANDS.contains(&tok) && next_is_instance {
            args.swap(i, i + 1);
        }
        return args;
    }
    args
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(normalize_args(std::env::args_os().collect()));
    let choice = match cli.instance {
        InstanceName::Poly => InstanceChoice::Poly,
        InstanceName::Shuffle => InstanceChoice::Shuffle { alphabet_size: cli.alphabet },
        InstanceName::Quasishuffle => InstanceChoice::QuasiShuffle { max_weight: cli.max_weight },
        InstanceName::Ck => InstanceChoice::ConnesKreimer,
        InstanceName::Broken => InstanceChoice::Broken { alphabet_size: cli.alphabet.max(2) },
    };
    let command = match cli.command {
        CommandArgs::Antipode { expression, algorithm } => Command::Antipode {
            expression,
            algorithm: match algorithm {
                AlgorithmArg::Series => AlgorithmChoice::One(Algorithm::Series),
                AlgorithmArg::RecLeft => AlgorithmChoice::One(Algorithm::RecursiveLeft),
                AlgorithmArg::RecRight => AlgorithmChoice::One(Algorithm::RecursiveRight),
                AlgorithmArg::All => AlgorithmChoice::All,
            },
        },
        CommandArgs::Coproduct { expression, reduced, iterate } => {
            Command::Coproduct { expression, reduced, iterate: iterate as usize }
        }
        CommandArgs::Filtration { expression } => Command::Filtration { expression },
        CommandArgs::Verify(v) => {
            let checks = if v.all || v.checks.is_empty() { Check::ALL.to_vec() } else { v.checks };
            Command::Verify { checks }
        }
    };

    match run(choice, &command, cli.max_degree) {
        Ok(doc) => {
            let out = match cli.format {
                Format::Text => doc.to_text(),
                Format::Json => doc.to_json(),
            };
            print!("{out}");
            if doc.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
