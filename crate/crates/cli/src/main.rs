use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use zeno_ent::{
    execute, Format, Grid, InitialKind, Objective, Scenario, ScenarioConfig, SolverChoice,
};

const COLUMNS: &str = "\
Output columns:
  stationary-surface  r1, s, c_s, argmax (1 on the grid maximum)
  time-evolution      tau, c[r1=..;s=..] per (r1, s)
  zeno-compare        tau, c_unmeasured, c_measured[T=..] and c_closed[T=..] per interval
  solver-xcheck       big_r, s, r1, volterra_err, ode_err, bath_err, pass
  optimum             stationary: s, r1, c_s; transient: big_r, s, r1, tau, c

Grids accept a number, a comma list or start:stop:steps. Times are in units of 1/lambda.
Exit status: 0 ok, 2 bad configuration, 3 tolerance failure, 4 I/O error.";

#[derive(Debug, Parser)]
#[command(name = "zeno-ent", version, about, after_help = COLUMNS)]
struct Cli {
    #[arg(value_enum)]
    scenario: Scenario,
    /// TOML file with scenario keys; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum)]
    solver: Option<SolverChoice>,
    #[arg(long, allow_hyphen_values = true)]
    big_r: Option<Grid>,
    #[arg(long, allow_hyphen_values = true)]
    r1: Option<Grid>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<Grid>,
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<f64>,
    #[arg(long)]
    tau_max: Option<f64>,
    #[arg(long)]
    tau_steps: Option<usize>,
    #[arg(long)]
    meas_interval: Option<Grid>,
    #[arg(long, value_enum)]
    objective: Option<Objective>,
    #[arg(long, value_enum)]
    initial: Option<InitialKind>,
    /// Solver time step (default: resolves the vacuum Rabi period).
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    n_modes: Option<usize>,
    /// Half-width of the discretized band, in units of lambda.
    #[arg(long)]
    freq_window: Option<f64>,
    /// Skip the discretized-bath solver in solver-xcheck.
    #[arg(long)]
    no_bath: bool,
}

impl Cli {
    fn overrides(&self) -> ScenarioConfig {
        ScenarioConfig {
            scenario: Some(self.scenario),
            big_r: self.big_r.clone(),
            r1: self.r1.clone(),
            s: self.s.clone(),
            phi: self.phi,
            tau_max: self.tau_max,
            tau_steps: self.tau_steps,
            meas_interval: self.meas_interval.clone(),
            solver: self.solver,
            objective: self.objective,
            initial: self.initial,
            dt: self.dt,
            n_modes: self.n_modes,
            freq_window: self.freq_window,
            with_bath: self.no_bath.then_some(false),
            out: self.out.clone(),
            format: self.format,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli
        .config
        .as_deref()
        .map_or_else(|| Ok(ScenarioConfig::default()), ScenarioConfig::load)
        .and_then(|file| file.overlay(cli.overrides()).resolve())
        .and_then(|cfg| execute(&cfg));
    match result {
        Ok(outcome) => {
            for note in &outcome.table.notes {
                eprintln!("note: {note}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("zeno-ent: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
