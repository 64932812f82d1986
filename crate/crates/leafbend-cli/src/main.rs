//! `leafbend` — bent-page model CLI: reproduce the curve figures, export
//! flatten tables, bend/dewarp raster images, and fit parameters.
//!
//! Exit codes: 0 success, 1 usage error, 2 model error, 3 I/O or format
//! error.

mod commands;
mod config;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use leafbend::{Error, GridAxis};

use commands::{cmd_fit, cmd_plot, cmd_table, cmd_warp, parse_axis, FitSpec, WarpDirection};
use config::{ConfigFlags, RunConfig, WeightFlag};

#[derive(Parser, Debug)]
#[command(
    name = "leafbend",
    version,
    about = "Model a bent page cross-section: plot curves, export flatten tables, warp images"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Write a curve polyline as `<out>.csv` and `<out>.svg`
    Plot {
        #[command(flatten)]
        flags: ConfigFlags,
        /// Output base path (extensions are added)
        out: PathBuf,
    },
    /// Write the flat-to-curved lookup table CSV
    Table {
        #[command(flatten)]
        flags: ConfigFlags,
        /// Output CSV path
        out: PathBuf,
    },
    /// Bend a flat page image (PGM/PPM in, same format out)
    Bend {
        #[command(flatten)]
        flags: ConfigFlags,
        /// Input image
        input: PathBuf,
        /// Output image
        output: PathBuf,
    },
    /// Flatten a bent page image (PGM/PPM in, same format out)
    Dewarp {
        #[command(flatten)]
        flags: ConfigFlags,
        /// Input image
        input: PathBuf,
        /// Output image
        output: PathBuf,
    },
    /// Fit model parameters to an observed profile polyline CSV
    Fit {
        #[command(flatten)]
        flags: ConfigFlags,
        #[command(flatten)]
        grid: GridFlags,
        /// Observed polyline (`s,x,y`, or `x,y` for chord-length arc)
        input: PathBuf,
    },
}

#[derive(Args, Debug)]
struct GridFlags {
    /// Search range for l as min:max:count
    #[arg(long = "grid-l", value_parser = parse_axis, default_value = "2:2.35:8", allow_hyphen_values = true)]
    grid_l: GridAxis,

    /// Search range for e as min:max:count
    #[arg(long = "grid-e", value_parser = parse_axis, default_value = "-0.9:-0.6:7", allow_hyphen_values = true)]
    grid_e: GridAxis,

    /// Search range for lambda as min:max:count
    #[arg(long = "grid-lambda", value_parser = parse_axis, default_value = "1.5:2.5:5", allow_hyphen_values = true)]
    grid_lambda: GridAxis,

    /// Search range for m (switches the fit to the euler family)
    #[arg(long = "grid-m", value_parser = parse_axis, allow_hyphen_values = true)]
    grid_m: Option<GridAxis>,

    /// Weight mode assumed by the fit
    #[arg(long = "fit-weight", value_enum, default_value = "end")]
    fit_weight: WeightFlag,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not errors; real usage errors exit 1.
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_class(&err))
        }
    }
}

fn run(cli: Cli) -> leafbend::Result<()> {
    match cli.cmd {
        Cmd::Plot { flags, out } => cmd_plot(&RunConfig::resolve(&flags)?, &out),
        Cmd::Table { flags, out } => cmd_table(&RunConfig::resolve(&flags)?, &out),
        Cmd::Bend { flags, input, output } => {
            cmd_warp(&RunConfig::resolve(&flags)?, WarpDirection::Bend, &input, &output)
        }
        Cmd::Dewarp { flags, input, output } => {
            cmd_warp(&RunConfig::resolve(&flags)?, WarpDirection::Dewarp, &input, &output)
        }
        Cmd::Fit { flags, grid, input } => {
            let spec = FitSpec {
                l: grid.grid_l,
                e: grid.grid_e,
                lambda: grid.grid_lambda,
                m: grid.grid_m,
                weight: grid.fit_weight,
            };
            let report = cmd_fit(&RunConfig::resolve(&flags)?, &spec, &input)?;
            print!("{report}");
            Ok(())
        }
    }
}

fn exit_class(err: &Error) -> u8 {
    match err {
        Error::InvalidArgument(_) => 1,
        Error::Domain(_)
        | Error::Geometry(_)
        | Error::NonMonotone { .. }
        | Error::OutOfDomain { .. }
        | Error::Numeric(_) => 2,
        Error::Format(_) | Error::Io(_) => 3,
    }
}
