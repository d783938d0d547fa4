use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equiloc_cli::{run_text, CliError, RunOptions, RunReport, QUADRIC_SCENARIO};
use equiloc_core::schubert::calibrate;
use equiloc_core::symalg::DEFAULT_SEED;

/// Exact torus-equivariant localization and Bott residues.
#[derive(Parser)]
#[command(name = "equiloc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        output: Format,
        /// Also check the result at K generic integer points.
        #[arg(long, value_name = "K", default_value_t = 0)]
        check_substitutions: usize,
        /// Seed for the substitution sampler.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run a built-in example.
    Demo {
        #[arg(value_enum)]
        name: Demo,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        output: Format,
    },
    /// Test every Schubert convention candidate on S_2 .. S_n.
    CalibrateSchubert { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Quadric,
}

fn emit(report: &RunReport, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Math("a validation failed".into()))
    }
}

fn calibrate_report(n: usize) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Validation("calibration needs n >= 2".into()));
    }
    if n > 5 {
        return Err(CliError::Validation(
            "calibration is limited to n <= 5".into(),
        ));
    }
    let sizes: Vec<usize> = (2..=n).collect();
    let report = calibrate(&sizes)?;
    println!(
        "{} candidate conventions on {}",
        report.candidates.len(),
        sizes
            .iter()
            .map(|k| format!("S_{k}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("checks: fundamental class, point class, Bruhat support, smooth point at p_v");
    let mark = |b: bool| if b { "y" } else { "-" };
    for c in &report.candidates {
        if c.passed() || c.fundamental_class && c.point_class {
            println!(
                "  {} {} {} {}  {}",
                mark(c.fundamental_class),
                mark(c.point_class),
                mark(c.support),
                mark(c.smooth_point),
                c.convention
            );
        }
    }
    let passing = report.passing();
    println!("passing: {}", passing.len());
    let selected = report.selected()?;
    println!("selected: {selected}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run {
            file,
            output,
            check_substitutions,
            seed,
        } => std::fs::read_to_string(&file)
            .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", file.display())))
            .and_then(|text| {
                run_text(
                    &text,
                    &RunOptions {
                        check_substitutions,
                        seed,
                    },
                )
            })
            .and_then(|r| emit(&r, output)),
        Command::Demo {
            name: Demo::Quadric,
            output,
        } => run_text(QUADRIC_SCENARIO, &RunOptions::default()).and_then(|r| emit(&r, output)),
        Command::CalibrateSchubert { n } => calibrate_report(n),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("equiloc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
