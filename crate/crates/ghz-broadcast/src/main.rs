use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use ghz_broadcast::cli::{
    self, CloneMode, Command, OutputFormat, RunConfig, StateSource, DEFAULT_TOLERANCE,
};

/// Three-qubit entanglement measures and broadcasting via quantum cloning.
#[derive(Parser)]
#[command(name = "ghz-broadcast", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(clap::Args)]
#[command(group(ArgGroup::new("source").required(true).args(["ghz", "state"])))]
struct SourceArgs {
    /// Use the built-in GHZ state (|000> + |111>)/sqrt(2).
    #[arg(long)]
    ghz: bool,

    /// Read the state from an eight-line amplitude file.
    #[arg(long, value_name = "PATH")]
    state: Option<PathBuf>,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,

    /// Comparison tolerance for reference values.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Print the entanglement report of a three-qubit state.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run one cloning pipeline and print the resulting clones.
    Broadcast {
        /// Cloning pipeline: three local cloners or one 8-dimensional cloner.
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare simulated values against the published reference values.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Local,
    Nonlocal,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Text,
}

fn source_of(args: &SourceArgs) -> StateSource {
    match &args.state {
        Some(path) => StateSource::File(path.clone()),
        None => StateSource::BuiltinGhz,
    }
}

fn config_of(cli: Cli) -> RunConfig {
    let (command, mode, source, common) = match cli.command {
        CliCommand::Analyze { source, common } => {
            (Command::Analyze, None, source_of(&source), common)
        }
        CliCommand::Broadcast { mode, source, common } => {
            let mode = match mode {
                ModeArg::Local => CloneMode::Local,
                ModeArg::Nonlocal => CloneMode::Nonlocal,
            };
            (Command::Broadcast, Some(mode), source_of(&source), common)
        }
        CliCommand::Verify { common } => (Command::Verify, None, StateSource::BuiltinGhz, common),
    };
    RunConfig {
        command,
        mode,
        source,
        format: match common.format {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Text => OutputFormat::Text,
        },
        tolerance: common.tolerance,
    }
}

fn main() -> ExitCode {
    let config = config_of(Cli::parse());
    match cli::run(&config) {
        Ok(output) => {
            print!("{}", output.text);
            ExitCode::from(output.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(cli::exit_code_for(&err) as u8)
        }
    }
}
