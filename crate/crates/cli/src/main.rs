mod input;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cstar_core::hyperbolic::{cyclic_cover, defining_equations, dpd_from_generators};
use cstar_core::parabolic::dpd_from_generators_parabolic;
use cstar_core::report::{analyze_hyperbolic, analyze_parabolic, analyze_toric, AnalysisReport};
use cstar_core::ConeParams;
use serde::Serialize;

use input::{GeneratorInput, Surface, SurfaceInput};

#[derive(Parser)]
#[command(
    name = "cstar",
    version,
    about = "Invariants of normal affine C*-surfaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Markdown)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a hyperbolic, parabolic, toric or hypersurface input.
    Analyze {
        /// TOML or JSON file, or `-` for stdin.
        file: String,
        /// Replace a hyperbolic pair by its canonical representative first.
        #[arg(long)]
        canonical: bool,
        /// Cross-check invariants by independent routes; exit 2 on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Generators and defining equations of a hyperbolic surface.
    Equations { file: String },
    /// Normalization of the cyclic cover adjoining a d-th root of t·u^b.
    Cover {
        file: String,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        d: u64,
    },
    /// Recover the divisor data from homogeneous generators.
    Convert { file: String },
    /// The toric surface of the cone with parameters (d, e).
    Toric {
        d: i64,
        e: i64,
        #[arg(long)]
        oracle: bool,
    },
}

enum Failure {
    Input(String),
    Oracle(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load_surface(file: &str) -> Result<Surface, Failure> {
    let text = input::read_source(file).map_err(Failure::Input)?;
    let raw: SurfaceInput = input::parse(file, &text).map_err(Failure::Input)?;
    Ok(raw.into_surface()?)
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    markdown: impl FnOnce() -> String,
) -> Result<(), Failure> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Markdown => markdown(),
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit_report(format: Format, report: AnalysisReport) -> Result<(), Failure> {
    emit(format, &report, || report.to_markdown())?;
    let failed: Vec<&str> = report
        .checks()
        .unwrap_or_default()
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Oracle(format!(
            "oracle disagreement: {}",
            failed.join("; ")
        )))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Analyze {
            file,
            canonical,
            oracle,
        } => {
            let report = match load_surface(&file)? {
                Surface::Hyperbolic(pair) => {
                    let pair = if canonical { pair.canonical() } else { pair };
                    AnalysisReport::Hyperbolic(Box::new(analyze_hyperbolic(&pair, oracle)))
                }
                Surface::Parabolic(divisor) => {
                    AnalysisReport::Parabolic(analyze_parabolic(&divisor, oracle))
                }
                Surface::Toric(cone) => AnalysisReport::Toric(analyze_toric(cone, oracle)),
            };
            emit_report(format, report)
        }
        Command::Toric { d, e, oracle } => {
            let cone = ConeParams::new(d, e)?;
            emit_report(format, AnalysisReport::Toric(analyze_toric(cone, oracle)))
        }
        Command::Equations { file } => {
            let Surface::Hyperbolic(pair) = load_surface(&file)? else {
                return Err(Failure::Input(format!(
                    "{file}: equations need a hyperbolic or hypersurface input"
                )));
            };
            let eq = defining_equations(&pair);
            emit(format, &eq, || render::equations(&pair, &eq))
        }
        Command::Cover { file, b, d } => {
            let Surface::Hyperbolic(pair) = load_surface(&file)? else {
                return Err(Failure::Input(format!(
                    "{file}: covers need a hyperbolic or hypersurface input"
                )));
            };
            let cover = cyclic_cover(&pair, b, d)?;
            emit(format, &cover, || render::cover(&pair, &cover))
        }
        Command::Convert { file } => {
            let text = input::read_source(&file).map_err(Failure::Input)?;
            let gens: GeneratorInput = input::parse(&file, &text).map_err(Failure::Input)?;
            let list = |g: &[input::Generator]| {
                g.iter()
                    .map(|g| (g.roots.clone(), g.degree))
                    .collect::<Vec<_>>()
            };
            if !gens.generators.is_empty() {
                if !gens.neg.is_empty() || !gens.pos.is_empty() {
                    return Err(Failure::Input(format!(
                        "{file}: give either `generators` or `neg`/`pos`, not both"
                    )));
                }
                let divisor = dpd_from_generators_parabolic(&list(&gens.generators))?;
                emit(format, &divisor, || format!("- D = {divisor}\n"))
            } else {
                let pair = dpd_from_generators(&list(&gens.neg), &list(&gens.pos))?;
                emit(format, &pair, || render::pair(&pair))
            }
        }
    }
}

fn main() -> ExitCode {
    // usage errors exit 1; 2 is reserved for oracle disagreement
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
