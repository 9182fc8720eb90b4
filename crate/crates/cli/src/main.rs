mod commands;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "qtangle", version, about = "Entanglement flow through Grover search and HHL")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Directory for data files and meta.json
    #[arg(long, default_value = ".")]
    pub output_dir: PathBuf,
    /// Number of b0² grid points over [0, 1]
    #[arg(long, default_value_t = 101)]
    pub grid_points: usize,
    /// Ancilla rotation constant C
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl Common {
    pub fn rotation_constant(&self) -> f64 {
        self.c.unwrap_or_else(qtangle::algorithms::default_rotation_constant)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Three-tangle and pairwise concurrences after each Grover step
    GroverTable {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        target: usize,
        /// Defaults to floor(pi sqrt(N) / 4)
        #[arg(long)]
        iterations: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form tangles of the three HHL stages over b0²
    HhlSweep {
        #[command(flatten)]
        common: Common,
    },
    /// Characteristic curves of the rank-2 family at fixed x1
    Rank2Curve {
        #[arg(long)]
        x1: f64,
        #[arg(long, default_value_t = 8)]
        theta_steps: usize,
        #[arg(long, default_value_t = 101)]
        p_steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-validate simulation against closed forms and run the invariant checks
    Verify {
        /// Rotation constant for the closed forms only (defaults to --c)
        #[arg(long)]
        closed_form_c: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

fn usage_error(msg: String) -> ! {
    Cli::command().error(clap::error::ErrorKind::ValueValidation, msg).exit()
}

fn check_common(common: &Common) {
    if common.grid_points < 2 {
        usage_error(format!("--grid-points must be at least 2, got {}", common.grid_points));
    }
    let c = common.rotation_constant();
    if !(c > 0.0 && c <= 1.0) {
        usage_error(format!("--c must lie in (0, 1], got {c}"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::GroverTable {
            n,
            target,
            iterations,
            common,
        } => {
            check_common(&common);
            if n != 3 {
                usage_error(format!("the entanglement table needs --n 3, got {n}"));
            }
            if target >= 1 << n {
                usage_error(format!("--target {target} out of range for {n} qubits"));
            }
            let iterations = iterations.unwrap_or_else(|| qtangle::algorithms::optimal_iterations(n));
            commands::grover_table(target, iterations, &common)
        }
        Command::HhlSweep { common } => {
            check_common(&common);
            commands::hhl_sweep(&common)
        }
        Command::Rank2Curve {
            x1,
            theta_steps,
            p_steps,
            common,
        } => {
            check_common(&common);
            if !(0.0..=1.0).contains(&x1) {
                usage_error(format!("--x1 must lie in [0, 1], got {x1}"));
            }
            if theta_steps == 0 || p_steps < 2 {
                usage_error("--theta-steps must be positive and --p-steps at least 2".into());
            }
            commands::rank2_curve(x1, theta_steps, p_steps, &common)
        }
        Command::Verify { closed_form_c, common } => {
            check_common(&common);
            if let Some(c) = closed_form_c {
                if !(c > 0.0 && c <= 1.0) {
                    usage_error(format!("--closed-form-c must lie in (0, 1], got {c}"));
                }
            }
            verify::run(&common, closed_form_c)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
