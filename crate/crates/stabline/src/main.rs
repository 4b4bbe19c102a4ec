//! Thin command-line front end over the library.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use stabline::exact_geometry::parse_rational;
use stabline::io::{
    format_report_text, oracle_check, parse_instance, render_svg, run_report, OracleError,
    OracleOptions, RenderMode, ReportOptions, SelectorChoice,
};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "stabline",
    version,
    about = "Transversals of parallel vertical segments"
)]
struct Cli {
    /// Instance file to read; stdin when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    S1,
    S2,
    S3,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Primal,
    Dual,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a transversal exists and classify uniqueness.
    Check,
    /// Compute the selected transversal(s).
    Select {
        #[arg(long, value_enum, default_value_t = Algorithm::All)]
        algorithm: Algorithm,
    },
    /// Emit the dual feasibility polygon and its area.
    Dual,
    /// Render the primal scene or the dual polygon as SVG.
    Render {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Output file for the SVG document.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the independent oracles against the library's answers.
    Oracle {
        /// Grid spacing for the centroid oracle, as a rational.
        #[arg(long, default_value = "1/400")]
        grid_resolution: String,
    },
}

enum CliError {
    Validation(String),
    OracleMismatch(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::OracleMismatch(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) | CliError::OracleMismatch(m) | CliError::Io(m) => {
                write!(f, "{m}")
            }
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(path) => std::fs::read(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display()))),
        None => {
            use std::io::Read;
            let mut buffer = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buffer)
                .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
            Ok(buffer)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let bytes = read_input(&cli.input)?;
    let doc = parse_instance(&bytes).map_err(|e| CliError::Validation(e.to_string()))?;

    let report_options = match &cli.command {
        Command::Check => Some(ReportOptions::check()),
        Command::Select { algorithm } => Some(ReportOptions::selection(match algorithm {
            Algorithm::S1 => SelectorChoice::S1,
            Algorithm::S2 => SelectorChoice::S2,
            Algorithm::S3 => SelectorChoice::S3,
            Algorithm::All => SelectorChoice::All,
        })),
        Command::Dual => Some(ReportOptions::dual()),
        Command::Render { .. } | Command::Oracle { .. } => None,
    };

    if let Some(options) = report_options {
        let result = run_report(&doc, &options).map_err(|e| CliError::Validation(e.to_string()))?;
        match cli.format {
            Format::Json => print!("{}", result.to_json()),
            Format::Text => print!("{}", format_report_text(&result)),
        }
        return Ok(());
    }

    match cli.command {
        Command::Render { mode, out } => {
            let result = run_report(&doc, &ReportOptions::full())
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let mode = match mode {
                Mode::Primal => RenderMode::Primal,
                Mode::Dual => RenderMode::Dual,
            };
            let svg =
                render_svg(&doc, &result, mode).map_err(|e| CliError::Validation(e.to_string()))?;
            std::fs::write(&out, svg)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", out.display())))?;
            Ok(())
        }
        Command::Oracle { grid_resolution } => {
            let resolution = parse_rational(&grid_resolution)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            if !resolution.is_positive() {
                return Err(CliError::Validation(format!(
                    "grid resolution must be positive, got {grid_resolution}"
                )));
            }
            let options = OracleOptions {
                grid_resolution: resolution,
            };
            let report = oracle_check(&doc, &options).map_err(|e| match e {
                OracleError::Family(inner) => CliError::Validation(inner.to_string()),
                OracleError::Mismatch(_) => CliError::OracleMismatch(e.to_string()),
            })?;
            match cli.format {
                Format::Json => {
                    let mut text =
                        serde_json::to_string_pretty(&report).expect("report serializes");
                    text.push('\n');
                    print!("{text}");
                }
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(())
        }
        Command::Check | Command::Select { .. } | Command::Dual => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
