use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use schoen_cli::commands::{
    cmd_amodel, cmd_bmodel, cmd_pf_check, cmd_regenerate_golden, cmd_theta_root, cmd_verify,
};
use schoen_cli::golden;
use schoen_cli::{CliError, Format, RunReport, Status};
use schoen_core::amodel::Route;

/// Exact A-model and B-model coefficient tables for the restricted mirror
/// check on Schoen's Calabi–Yau 3-fold.
#[derive(Parser, Debug)]
#[command(name = "schoen", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,

    /// Directory holding c.txt, a.txt and b.txt; overrides SCHOEN_GOLDEN_DIR.
    #[arg(long, global = true)]
    golden_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RouteArg {
    Jacobi,
    Lattice,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Jacobi => Route::Jacobi,
            RouteArg::Lattice => Route::Lattice,
            RouteArg::Both => Route::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// c_n from the restricted E8 theta function and a_n = c * eta factor.
    Amodel {
        #[arg(long, default_value_t = 50)]
        order: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Jacobi)]
        route: RouteArg,
    },
    /// b_n from the hypergeometric periods and the inverted mirror map.
    Bmodel {
        #[arg(long, default_value_t = 50)]
        order: usize,
    },
    /// a_n = b_n for every n up to the order, plus the golden tables.
    Verify {
        #[arg(long, default_value_t = 50)]
        order: usize,
        /// Overwrite the golden files in the golden directory and print a diff.
        #[arg(long)]
        regenerate_golden: bool,
    },
    /// Apply the Picard-Fuchs operators to the regular period.
    PfCheck {
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long, hide = true)]
        flip_d3_sign: bool,
    },
    /// Dump the E8 theta function graded by pairings with the simple roots.
    ThetaRoot {
        #[arg(long, default_value_t = 2)]
        qorder: u32,
    },
}

fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let golden_dir = cli.golden_dir.clone().or_else(golden::env_dir);
    let golden_dir = golden_dir.as_deref();
    match cli.command {
        Command::Amodel { order, route } => cmd_amodel(order, route.into(), golden_dir),
        Command::Bmodel { order } => cmd_bmodel(order, golden_dir),
        Command::Verify {
            order,
            regenerate_golden: false,
        } => cmd_verify(order, golden_dir),
        Command::Verify {
            order,
            regenerate_golden: true,
        } => {
            let dir = golden_dir.ok_or_else(|| {
                CliError::Usage(format!(
                    "--regenerate-golden needs --golden-dir or {}",
                    golden::GOLDEN_DIR_ENV
                ))
            })?;
            cmd_regenerate_golden(order, dir)
        }
        Command::PfCheck {
            degree,
            flip_d3_sign,
        } => cmd_pf_check(degree, flip_d3_sign),
        Command::ThetaRoot { qorder } => cmd_theta_root(qorder),
    }
}

fn exit(status: Status) -> ExitCode {
    ExitCode::from(status.code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit(Status::Usage) } else { exit(Status::Ok) };
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.wall_time_ms = start.elapsed().as_millis();
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(report.render(cli.format).as_bytes());
            eprintln!("wall time: {} ms", report.wall_time_ms);
            exit(report.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(e.status())
        }
    }
}
