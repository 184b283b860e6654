use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use inertia::cli::{parse_config, run_command, Command, Theory};

#[derive(Parser)]
#[command(name = "inertia", about = "Inertial products on abelian quotient stacks", version)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    K,
    Chow,
}

#[derive(clap::Args)]
struct Common {
    /// Stack description (JSON).
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// List sectors with ages and ring presentations.
    Sectors {
        #[command(flatten)]
        common: Common,
    },
    /// Product table of the sector units.
    Table {
        #[command(flatten)]
        common: Common,
        /// orbifold | virtual | vplus:NAME | vminus:NAME | localized
        #[arg(long, default_value = "orbifold")]
        product: String,
        #[arg(long, value_enum, default_value = "k")]
        theory: TheoryArg,
    },
    /// Check the inertial-pair axioms (all built-in pairs by default).
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        product: Option<String>,
    },
    /// Inertial Chern characters of the configured classes.
    Chern {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "orbifold")]
        product: String,
    },
    /// Support decomposition and the localized product table.
    Localize {
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (common, command) = match args.command {
        Cmd::Sectors { common } => (common, Command::Sectors),
        Cmd::Table { common, product, theory } => {
            let theory = match theory {
                TheoryArg::K => Theory::K,
                TheoryArg::Chow => Theory::Chow,
            };
            (common, Command::Table { product, theory })
        }
        Cmd::Check { common, product } => (common, Command::Check { product }),
        Cmd::Chern { common, product } => (common, Command::Chern { product }),
        Cmd::Localize { common } => (common, Command::Localize),
    };
    let result = parse_config(&common.config).and_then(|config| run_command(&config, &command));
    match result {
        Ok(out) => {
            match common.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
