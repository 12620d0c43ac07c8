use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use repherd::commands::{self, write_atomic, CliError, Outcome, SuiteChoice, EXIT_ERROR};
use repherd_core::{Budget, Exec};

/// Decide whether a bound quiver algebra is representation-hereditary and
/// run the related structural checks.
#[derive(Parser)]
#[command(name = "repherd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// maximum number of indecomposables to enumerate
    #[arg(long, default_value_t = Budget::default().max_modules)]
    budget_modules: usize,
    /// maximum summed dimension of the enumerated indecomposables
    #[arg(long, default_value_t = Budget::default().max_total_dim)]
    budget_dim: usize,
    /// maximum dimension of a single indecomposable
    #[arg(long, default_value_t = Budget::default().max_module_dim)]
    budget_module_dim: usize,
    /// run on the calling thread only
    #[arg(long)]
    sequential: bool,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        Budget { max_modules: self.budget_modules, max_total_dim: self.budget_dim, max_module_dim: self.budget_module_dim }
    }

    fn exec(self) -> Exec {
        if self.sequential { Exec::Sequential } else { Exec::Parallel }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Main,
    All,
    Tilted,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, path basis and digest of an algebra file
    Info { algebra: PathBuf },
    /// Run the main check and, optionally, the surrounding statements
    Check {
        algebra: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value = "main")]
        suite: SuiteArg,
        /// write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Auslander-Reiten quiver as a DOT graph
    ArQuiver {
        algebra: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// write the graph here instead of stdout
        #[arg(long)]
        dot: Option<PathBuf>,
        /// also write every indecomposable as a module file into this directory
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Kernel and cokernel conditions for one indecomposable module
    CheckModule {
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Sufficient conditions on a tilting module over a path algebra
    CheckTilted {
        hereditary: PathBuf,
        tilting: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (outcome, json, dot): (Outcome, Option<PathBuf>, Option<PathBuf>) = match cli.command {
        Command::Info { algebra } => (commands::info(&algebra)?, None, None),
        Command::Check { algebra, budget, suite, json } => {
            let suite = match suite {
                SuiteArg::Main => SuiteChoice::Main,
                SuiteArg::All => SuiteChoice::All,
                SuiteArg::Tilted => SuiteChoice::Tilted,
            };
            (commands::check(&algebra, budget.budget(), suite, budget.exec())?, json, None)
        }
        Command::ArQuiver { algebra, budget, dot, export } => {
            (commands::ar_quiver(&algebra, budget.budget(), budget.exec(), export.as_deref())?, None, dot)
        }
        Command::CheckModule { algebra, module, json } => (commands::check_module(&algebra, &module)?, json, None),
        Command::CheckTilted { hereditary, tilting, budget, json } => {
            (commands::check_tilted(&hereditary, &tilting, budget.budget(), budget.exec())?, json, None)
        }
    };
    if let (Some(path), Some(report)) = (json, &outcome.report) {
        write_atomic(&path, &report.to_json())?;
    }
    match dot {
        Some(path) if outcome.code == 0 => write_atomic(&path, &outcome.stdout)?,
        _ => print!("{}", outcome.stdout),
    }
    Ok(outcome.code)
}

fn main() -> ExitCode {
    // usage errors must not collide with the verdict codes
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR as u8 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("repherd: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
