//! Scenario runner for entanglement of two qubits in a common lossy
//! resonator: stationary and transient concurrence surfaces, measured
//! against free evolution, and solver cross-checks.
//!
//! A run is a [`RunConfig`] resolved from a TOML file and command-line
//! overrides; [`run`] turns it into a [`Table`] that [`execute`] writes
//! atomically as CSV or a JSON envelope.

pub mod config;
pub mod error;
pub mod optimum;
pub mod output;
pub mod scenarios;

pub use config::{
    Format, Grid, InitialKind, Objective, RunConfig, Scenario, ScenarioConfig, SolverChoice,
};
pub use error::{CliError, Result};
pub use optimum::{find_optimum, stationary_optimum, transient_optimum, Optimum};
pub use output::{write_atomic, Table};
pub use scenarios::{
    cross_check, run, run_solver_xcheck, run_stationary_surface, run_time_evolution,
    run_zeno_compare, CrossCheck, Outcome,
};

/// Runs the scenario and writes its output to `cfg.out`, or stdout when
/// unset. Tolerance failures are reported after the output is written.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    let outcome = run(cfg)?;
    let text = outcome.table.render(cfg);
    match &cfg.out {
        Some(path) => write_atomic(path, &text)?,
        None => {
            use std::io::Write;
            std::io::stdout()
                .lock()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::io("<stdout>", e))?;
        }
    }
    if !outcome.failures.is_empty() {
        return Err(CliError::Tolerance(outcome.failures.join("; ")));
    }
    Ok(outcome)
}
