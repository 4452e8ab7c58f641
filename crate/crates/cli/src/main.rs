use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gifss::decision;
use gifss::emit::{emit_report, emit_table, Format};
use gifss::io::{self, LoadError, LoadOptions};
use gifss::{Gifsr, Gifss, NormContext, NormPair, Precision};

/// Set algebra, soft relations and comparison-table ranking for generalised
/// intuitionistic fuzzy soft sets.
#[derive(Parser, Debug)]
#[command(name = "gifss", version, about)]
struct Cli {
    /// t-norm / t-conorm pair used by set and relation operations
    #[arg(long, global = true, value_enum, default_value_t = Norms::Product)]
    norms: Norms,

    /// Fractional digits kept after each operation (and accepted on input)
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=28))]
    precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Only print the final scores and the decision (rank)
    #[arg(long, global = true)]
    quiet: bool,

    /// Accept values with mu + nu > 1, e.g. already reduced tables
    #[arg(long, global = true)]
    allow_invalid_ifs: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a dataset file loads
    Validate { file: PathBuf },
    /// Union of two datasets
    Union { f: PathBuf, g: PathBuf },
    /// Intersection of two datasets
    Intersect { f: PathBuf, g: PathBuf },
    /// Exit 0 if the first dataset is a subset of the second, 3 if not
    Subset { f: PathBuf, g: PathBuf },
    /// Inverse of a relation file
    RelInverse { relation: PathBuf },
    /// Composition of two relation files
    RelCompose { first: PathBuf, second: PathBuf },
    /// Run the comparison-table ranking and print every table
    Rank { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Norms {
    Product,
    Minmax,
    Lukasiewicz,
}

impl Norms {
    fn pair(self) -> NormPair {
        match self {
            Norms::Product => NormPair::PRODUCT,
            Norms::Minmax => NormPair::MIN_MAX,
            Norms::Lukasiewicz => NormPair::LUKASIEWICZ,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Plain => Format::Plain,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

const SUBSET_FALSE: u8 = 3;

enum Failure {
    /// bad input files: unreadable or malformed
    Input(String),
    /// well-formed input that violates a domain rule
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Domain(m) => m,
        }
    }
}

fn load_failure(path: &Path, err: LoadError) -> Failure {
    let message = match &err {
        LoadError::Io { .. } => err.to_string(),
        _ => format!("{}: {err}", path.display()),
    };
    match err {
        LoadError::Invalid { .. } => Failure::Domain(message),
        _ => Failure::Input(message),
    }
}

fn domain(err: gifss::Error) -> Failure {
    Failure::Domain(err.to_string())
}

struct Session {
    ctx: NormContext,
    options: LoadOptions,
    format: Format,
    quiet: bool,
}

impl Session {
    fn load(&self, path: &Path) -> Result<Gifss, Failure> {
        io::load_gifss(path, &self.options).map_err(|e| load_failure(path, e))
    }

    fn load_relation(&self, path: &Path) -> Result<Gifsr, Failure> {
        io::load_gifsr(path, &self.options, &self.ctx).map_err(|e| load_failure(path, e))
    }

    /// Returns the text to print and the exit code.
    fn run(&self, command: &Command) -> Result<(String, u8), Failure> {
        let ok = |text: String| Ok((text, 0));
        match command {
            Command::Validate { file } => {
                let set = self.load(file)?;
                let text = match self.format {
                    Format::Json => format!(
                        "{{\"valid\": true, \"parameters\": {}, \"elements\": {}}}\n",
                        set.len(),
                        set.universe().len()
                    ),
                    _ => format!(
                        "{}: valid, {} parameters over {} elements\n",
                        file.display(),
                        set.len(),
                        set.universe().len()
                    ),
                };
                ok(text)
            }
            Command::Union { f, g } => {
                let set = self.load(f)?.union(&self.load(g)?, &self.ctx).map_err(domain)?;
                ok(emit_table(&set, self.format))
            }
            Command::Intersect { f, g } => {
                let set = self.load(f)?.intersect(&self.load(g)?, &self.ctx).map_err(domain)?;
                ok(emit_table(&set, self.format))
            }
            Command::Subset { f, g } => {
                let subset = self.load(f)?.is_subset(&self.load(g)?).map_err(domain)?;
                let text = match self.format {
                    Format::Json => format!("{{\"subset\": {subset}}}\n"),
                    _ => format!("{subset}\n"),
                };
                Ok((text, if subset { 0 } else { SUBSET_FALSE }))
            }
            Command::RelInverse { relation } => {
                let inverse = self.load_relation(relation)?.inverse();
                ok(emit_table(&inverse, self.format))
            }
            Command::RelCompose { first, second } => {
                let composed = self
                    .load_relation(first)?
                    .compose(&self.load_relation(second)?)
                    .map_err(domain)?;
                ok(emit_table(&composed, self.format))
            }
            Command::Rank { file } => {
                let report = decision::rank(&self.load(file)?, self.ctx.precision);
                ok(emit_report(&report, self.format, self.quiet))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let precision = Precision::digits(cli.precision).expect("range checked by the parser");
    let session = Session {
        ctx: NormContext::new(cli.norms.pair(), precision),
        options: LoadOptions { precision, allow_invalid_ifs: cli.allow_invalid_ifs },
        format: cli.format.into(),
        quiet: cli.quiet,
    };
    match session.run(&cli.command) {
        Ok((text, code)) => {
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
