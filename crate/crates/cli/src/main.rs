use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tetraproj_core::{PermClass, Tolerances};

mod commands;
mod input;
mod render;

use render::Format;

/// Rotation recovery from orthogonal projections of tetrahedra.
#[derive(Parser)]
#[command(name = "tetraproj", version)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Options {
    /// Relative singular-value threshold for numeric rank
    #[arg(long, global = true, default_value_t = Tolerances::default().rank_rel)]
    tol_rank: f64,
    /// Absolute tolerance on coordinates
    #[arg(long, global = true, default_value_t = Tolerances::default().geom_abs)]
    tol_geom: f64,
    /// Absolute tolerance on angles and axis components
    #[arg(long, global = true, default_value_t = Tolerances::default().angle_abs)]
    tol_angle: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random trials per cell (verify-lemmas) or checks (reproduce theorem)
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Recover every rotation mapping the tetrahedron onto the projection
    Solve {
        /// Tetrahedron file, or - for stdin
        #[arg(long)]
        tetrahedron: PathBuf,
        /// Projection file, or - for stdin
        #[arg(long)]
        projection: PathBuf,
        /// Treat the projection as labeled (sigma = identity)
        #[arg(long)]
        labeled: bool,
    },
    /// Compare the computed configuration-space dimension with the table
    Analyze {
        /// Rotation file, or - for stdin
        #[arg(long)]
        rotation: PathBuf,
        #[arg(long)]
        class: PermClass,
    },
    /// Draw tetrahedra from a configuration space
    Sample {
        #[arg(long)]
        rotation: PathBuf,
        #[arg(long)]
        class: PermClass,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Sweep the dimension table over every class and case cell
    VerifyLemmas,
    /// Replay a worked example: four-cycle, norm-prune, planar or theorem
    Reproduce { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.opts;
    let tol = match Tolerances::new(o.tol_rank, o.tol_geom, o.tol_angle, Tolerances::default().dedupe) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let trials = o.trials as usize;
    let outcome = match &cli.command {
        Command::Solve { tetrahedron, projection, labeled } => commands::solve(tetrahedron, projection, *labeled, &tol),
        Command::Analyze { rotation, class } => commands::analyze(rotation, *class, &tol),
        Command::Sample { rotation, class, count } => commands::sample(rotation, *class, *count as usize, o.seed, &tol),
        Command::VerifyLemmas => commands::verify_lemmas(trials, o.seed, &tol),
        Command::Reproduce { name } => commands::reproduce(name, trials, o.seed, &tol),
    };
    match outcome {
        Ok((report, ok)) => {
            print!("{}", render::render(&report, o.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
