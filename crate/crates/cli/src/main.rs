//! `taucli`: command-line frontend for taukit.

mod commands;
mod error;
mod load;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{code, CliError};

#[derive(Parser, Debug)]
#[command(name = "taucli", version, about = "τ-tilting computations over bound quiver algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Override the coefficient field: `rationals`, `q`, `prime:<p>` or `f<p>`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Largest module dimension allowed while knitting catalogues.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
    /// Largest number of indecomposables allowed in a catalogue.
    #[arg(long, global = true)]
    pub max_count: Option<usize>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the main artifact to this file (or directory for scenarios).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for cached catalogues.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Always knit catalogues from scratch.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect an algebra.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Operations on modules.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Indecomposable catalogues (AR quivers).
    #[command(subcommand)]
    Catalogue(CatalogueCmd),
    /// Bongartz complement of a τ-rigid module.
    Bongartz(ModuleOpts),
    /// Split extensions.
    #[command(subcommand)]
    Split(SplitCmd),
    /// Scenario files.
    #[command(subcommand)]
    Scenario(ScenarioCmd),
}

#[derive(Args, Debug)]
pub struct AlgebraOpts {
    #[arg(long)]
    pub algebra: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Dimensions, nilpotency and fingerprint.
    Info(AlgebraOpts),
    /// The normal-form path basis.
    Basis(AlgebraOpts),
}

/// A module is a JSON file, inline JSON, or an interval like `2/3/4`.
#[derive(Args, Debug)]
pub struct ModuleOpts {
    /// Defaults to the algebra named inside the module file.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    #[arg(long)]
    pub module: String,
}

#[derive(Args, Debug)]
pub struct PairOpts {
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    /// Two modules `M` and `N`, in that order.
    #[arg(long, num_args = 1, required = true)]
    pub module: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum ModuleCmd {
    /// `τM` and its decomposition.
    Tau(ModuleOpts),
    /// `τ⁻¹M` and its decomposition.
    Tauinv(ModuleOpts),
    /// `dim Hom(M, N)`.
    Hom(PairOpts),
    /// `dim Ext¹(M, N)`.
    Ext(PairOpts),
    /// Indecomposable summands with multiplicities.
    Decompose(ModuleOpts),
    /// Whether `Hom(M, τM) = 0`; exits 1 when not.
    CheckRigid(ModuleOpts),
}

#[derive(Subcommand, Debug)]
pub enum CatalogueCmd {
    /// Knit the AR quiver and list its vertices.
    Build(AlgebraOpts),
    /// Graphviz DOT of the AR quiver.
    ExportDot(AlgebraOpts),
}

#[derive(Args, Debug)]
pub struct SplitOpts {
    #[arg(long)]
    pub split: PathBuf,
}

#[derive(Args, Debug)]
pub struct SplitModuleOpts {
    #[arg(long)]
    pub split: PathBuf,
    #[arg(long)]
    pub module: String,
}

#[derive(Args, Debug)]
pub struct ScenarioOpts {
    #[arg(long)]
    pub scenario: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum SplitCmd {
    /// Check that the data is a split extension.
    Validate(SplitOpts),
    /// `M ⊗_C B` for a module over `C`.
    Induce(SplitModuleOpts),
    /// Restriction to `C` of a module over `B`.
    Restrict(SplitModuleOpts),
    /// `M ⊗_C E` for a module over `C`.
    TensorE(SplitModuleOpts),
    /// Run the statement of a scenario and print the report.
    Check(ScenarioOpts),
}

#[derive(Subcommand, Debug)]
pub enum ScenarioCmd {
    /// Run a scenario, writing the report (and DOT files if requested)
    /// under `--out`.
    Run(ScenarioOpts),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { code::INPUT as u8 } else { code::OK as u8 });
        }
    };
    // malformed input must never surface as a crash
    std::panic::set_hook(Box::new(|info| eprintln!("error: {info}")));
    let outcome = std::panic::catch_unwind(|| commands::run(&cli));
    let status = match outcome {
        Ok(Ok(status)) => status,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
        Err(_) => {
            eprintln!("error: internal failure while processing the input");
            code::INPUT
        }
    };
    ExitCode::from(status as u8)
}

pub type CliResult = Result<i32, CliError>;
