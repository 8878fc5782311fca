//! `leibniz` — exact checks for finite-dimensional Leibniz algebras.
//!
//! Exit codes: 0 = all checks passed, 1 = a mathematical check failed
//! (the report carries the witness), 2 = usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leibniz::centralizer::{CentralizerKind, XSelection};
use leibniz::scalar::rational_from_str;

use leibniz_cli::commands::{self, AlgebraSource, UsageError};
use leibniz_cli::report::Report;
use leibniz_cli::DEFAULT_SAMPLES;

#[derive(Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Exact centralizer and CL-condition checks for finite-dimensional Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Built-in catalog entry name (see `leibniz catalog`)
    #[arg(long)]
    catalog: Option<String>,
    /// Algebra document (JSON) to load instead of a catalog entry
    #[arg(long)]
    file: Option<PathBuf>,
    /// Parameter value P/Q for parametric catalog entries
    #[arg(long)]
    alpha: Option<String>,
}

impl AlgebraArgs {
    fn source(&self) -> Result<AlgebraSource, UsageError> {
        AlgebraSource::from_flags(self.catalog.clone(), self.file.clone(), self.alpha.clone())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Standard basis vectors e1..en
    Basis,
    /// Basis plus all pairwise sums ei + ej
    Pairs,
    /// Seeded random vectors with entries in -9..=9
    Sample,
}

#[derive(Args)]
struct SelectionArgs {
    /// Which elements x to quantify over
    #[arg(long, value_enum, default_value = "basis")]
    mode: ModeArg,
    /// Sample count for --mode sample
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Hexadecimal RNG seed for --mode sample
    #[arg(long, default_value = "4c656962")]
    seed: String,
}

impl SelectionArgs {
    fn selection(&self) -> Result<XSelection, UsageError> {
        Ok(match self.mode {
            ModeArg::Basis => XSelection::Basis,
            ModeArg::Pairs => XSelection::BasisPlusPairs,
            ModeArg::Sample => {
                if self.samples == 0 {
                    return Err(UsageError("--samples must be at least 1".into()));
                }
                XSelection::Sampled {
                    count: self.samples,
                    seed: commands::parse_seed(&self.seed)?,
                }
            }
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the machine-readable report to this path
    #[arg(long)]
    out: Option<PathBuf>,
    /// Stdout format
    #[arg(long, value_enum, default_value = "human")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Left,
    Right,
    TwoSided,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identity on all basis triples
    Validate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the centralizer of an element
    Centralizer {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Element: `e3` or comma-separated coordinates like `1,0,-1/2`
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "two-sided")]
        kind: KindArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the lower central and derived series
    Series {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify the CL-algebra conditions over a selection of elements
    ClCheck {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        selection: SelectionArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute the subspace of CL-elements relative to a selection
    ClElements {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        selection: SelectionArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List catalog entries, or export one as an algebra document
    Catalog {
        /// Entry to export (omit to list all entries)
        #[arg(long)]
        catalog: Option<String>,
        /// Parameter value for parametric entries
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Validate a finite group action and its centralizer/CL invariance
    ActionCheck {
        /// Action document (JSON)
        #[arg(long)]
        file: PathBuf,
        /// Carrier algebra from the catalog
        #[arg(long)]
        catalog: Option<String>,
        /// Carrier algebra from an algebra document
        #[arg(long)]
        algebra_file: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        selection: SelectionArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify the whole corpus: every nilpotent algebra of dim <= 4 is CL
    TheoremReport {
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value = "4c656962")]
        seed: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reproduce the non-nilpotent CL counterexample end to end
    Counterexample {
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value = "4c656962")]
        seed: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn emit(report: &Report, output: &OutputArgs) -> Result<u8, UsageError> {
    match output.format {
        FormatArg::Human => print!("{}", report.human()),
        FormatArg::Machine => print!("{}", report.machine()),
    }
    if let Some(path) = &output.out {
        std::fs::write(path, report.machine())
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(report.exit_code())
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    match cli.command {
        Command::Validate { algebra, output } => {
            let loaded = commands::load_source(&algebra.source()?)?;
            emit(&commands::cmd_validate(&loaded), &output)
        }
        Command::Centralizer {
            algebra,
            element,
            kind,
            output,
        } => {
            let loaded = commands::load_source(&algebra.source()?)?;
            let kind = match kind {
                KindArg::Left => CentralizerKind::Left,
                KindArg::Right => CentralizerKind::Right,
                KindArg::TwoSided => CentralizerKind::TwoSided,
            };
            emit(&commands::cmd_centralizer(&loaded, &element, kind), &output)
        }
        Command::Series { algebra, output } => {
            let loaded = commands::load_source(&algebra.source()?)?;
            emit(&commands::cmd_series(&loaded), &output)
        }
        Command::ClCheck {
            algebra,
            selection,
            output,
        } => {
            let loaded = commands::load_source(&algebra.source()?)?;
            emit(&commands::cmd_cl_check(&loaded, &selection.selection()?), &output)
        }
        Command::ClElements {
            algebra,
            selection,
            output,
        } => {
            let loaded = commands::load_source(&algebra.source()?)?;
            emit(
                &commands::cmd_cl_elements(&loaded, &selection.selection()?),
                &output,
            )
        }
        Command::Catalog {
            catalog,
            alpha,
            output,
        } => match catalog {
            None => emit(&commands::cmd_catalog_list(), &output),
            Some(name) => {
                let alpha = alpha
                    .map(|text| {
                        rational_from_str(&text)
                            .map_err(|e| UsageError(format!("--alpha {text}: {e}")))
                    })
                    .transpose()?;
                let doc = commands::catalog_export(&name, alpha.as_ref())?;
                let json = serde_json::to_string_pretty(&doc)
                    .expect("document serializes");
                println!("{json}");
                if let Some(path) = &output.out {
                    std::fs::write(path, format!("{json}\n"))
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                }
                Ok(0)
            }
        },
        Command::ActionCheck {
            file,
            catalog,
            algebra_file,
            alpha,
            selection,
            output,
        } => {
            let source = AlgebraSource::from_flags(catalog, algebra_file, alpha)?;
            let loaded = commands::load_source(&source)?;
            let report = commands::cmd_action_check(&loaded, &file, &selection.selection()?)?;
            emit(&report, &output)
        }
        Command::TheoremReport { samples, seed, output } => {
            let seed = commands::parse_seed(&seed)?;
            emit(&commands::cmd_theorem_report(samples, seed), &output)
        }
        Command::Counterexample { samples, seed, output } => {
            let seed = commands::parse_seed(&seed)?;
            emit(&commands::cmd_counterexample(samples, seed), &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
