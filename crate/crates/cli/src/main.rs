mod commands;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "wreathgen", version, about = "Idempotent generation in partition-preserving transformation monoids")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for closure computations.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Element budget for closure computations.
    #[arg(long, default_value_t = wreathgen::closure::DEFAULT_BUDGET, global = true)]
    pub budget: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of counts.
    Table(table::TableArgs),
    /// Run oracle checks.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
    },
    /// Build a minimal idempotent generating set from a seed.
    Construct {
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also compute the closure and compare it with |S|.
        #[arg(long)]
        verify_closure: bool,
    },
    /// Validate a spec or a raw generating set read from a JSON file.
    Check {
        path: std::path::PathBuf,
        /// Also compute the closure and confirm it is S.
        #[arg(long)]
        verify_closure: bool,
    },
    /// Compute a closure: of the given generators, or of all idempotents.
    Closure {
        m: usize,
        n: usize,
        /// JSON file holding an array of elements or a spec.
        #[arg(long)]
        gens: Option<std::path::PathBuf>,
        /// Semigroup closure instead of monoid closure.
        #[arg(long)]
        semigroup: bool,
        /// Write the sorted elements as JSON lines.
        #[arg(long)]
        dump: Option<std::path::PathBuf>,
    },
}

/// What a command wants the process to report.
pub enum Outcome {
    Success,
    Failure,
}

/// A problem with the invocation or its input (exit status 2).
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let result = match cli.command {
        Command::Table(args) => table::run(&args, g),
        Command::Verify { suite } => verify::run(suite, g),
        Command::Construct {
            m,
            n,
            seed,
            verify_closure,
        } => commands::construct(m, n, seed, verify_closure, g),
        Command::Check {
            path,
            verify_closure,
        } => commands::check(&path, verify_closure, g),
        Command::Closure {
            m,
            n,
            gens,
            semigroup,
            dump,
        } => commands::closure(m, n, gens.as_deref(), semigroup, dump.as_deref(), g),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
