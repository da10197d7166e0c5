use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use meyer::export::{self, DecomposeConfig, ExportFunction, ExportRequest, Format};
use meyer::signal::DEFAULT_CUTOFF;
use meyer::verify::{run_verification, VerifyConfig};
use meyer::MeyerError;

#[derive(Parser)]
#[command(
    name = "meyer",
    version,
    about = "Meyer wavelet closed forms: sampling, verification, decomposition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one function on a uniform grid
    Sample {
        #[arg(long)]
        function: ExportFunction,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, default_value_t = DEFAULT_CUTOFF, help = "low-pass cutoff for s_c/s_s")]
        cutoff: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Run the full property suite; exit status 0 iff every check passes
    Verify {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = 1.0)]
        tolerance_scale: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Export the in-phase/quadrature decomposition of the sampled wavelet
    Decompose {
        #[command(flatten)]
        grid: Grid,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Grid {
    #[arg(long, default_value_t = 1.0 / 64.0)]
    grid_dt: f64,
    #[arg(
        long,
        default_value_t = 16.0,
        help = "signal grid covers [-span, span]"
    )]
    grid_span: f64,
    #[arg(long, default_value_t = DEFAULT_CUTOFF)]
    cutoff: f64,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, help = "output file (default: stdout)")]
    output: Option<PathBuf>,
}

impl Output {
    fn open(&self) -> Result<Box<dyn Write>, MeyerError> {
        match &self.output {
            Some(path) => File::create(path)
                .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
                .map_err(|source| MeyerError::Write {
                    path: path.clone(),
                    source,
                }),
            None => Ok(Box::new(io::stdout().lock())),
        }
    }

    fn finish(&self, result: Result<(), MeyerError>) -> Result<(), MeyerError> {
        result.map_err(|e| match (e, &self.output) {
            (MeyerError::Io(source), Some(path)) => MeyerError::Write {
                path: path.clone(),
                source,
            },
            (e, _) => e,
        })
    }
}

fn exit_code(e: &MeyerError) -> u8 {
    match e {
        MeyerError::NoConvergence { .. } => 3,
        MeyerError::Write { .. } | MeyerError::Io(_) => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<u8, MeyerError> {
    match cli.command {
        Command::Sample {
            function,
            from,
            to,
            step,
            cutoff,
            out,
        } => {
            let format = out.format.unwrap_or_default();
            let req = ExportRequest {
                function,
                t_start: from,
                t_end: to,
                step,
                format,
            };
            let table = export::evaluate(&req, cutoff)?;
            out.finish(out.open().and_then(|w| table.write(format, w)))?;
            Ok(0)
        }
        Command::Verify {
            grid,
            tolerance_scale,
            out,
        } => {
            let cfg = VerifyConfig {
                grid_dt: grid.grid_dt,
                grid_span: grid.grid_span,
                cutoff: grid.cutoff,
                tolerance_scale,
                ..VerifyConfig::default()
            };
            cfg.validate()?;
            let report = run_verification(&cfg);
            eprint!("{}", report.table());
            out.finish(
                out.open()
                    .and_then(|w| report.write(out.format.unwrap_or(Format::Json), w)),
            )?;
            Ok(if report.overall_pass { 0 } else { 1 })
        }
        Command::Decompose { grid, out } => {
            let cfg = DecomposeConfig {
                dt: grid.grid_dt,
                span: grid.grid_span,
                cutoff: grid.cutoff,
            };
            let table = export::decomposition_table(&cfg)?;
            if let Some(err) = table.column("reconstruction_error") {
                let interior =
                    meyer::signal::interior_range(err.len(), meyer::signal::INTERIOR_FRACTION);
                let max = err[interior].iter().fold(0.0f64, |m, v| m.max(v.abs()));
                eprintln!("interior reconstruction error: {max:.3e}");
            }
            out.finish(
                out.open()
                    .and_then(|w| table.write(out.format.unwrap_or_default(), w)),
            )?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
