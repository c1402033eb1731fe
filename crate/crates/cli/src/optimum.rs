//! Refined maxima of the stationary and transient concurrence.

use zeno_ent_core::{
    amplitudes_at, concurrence_closed, maximize_1d, maximize_2d, stationary_concurrence, Coupling,
    State,
};

use crate::config::{Objective, RunConfig};
use crate::error::Result;
use crate::output::Table;
use crate::scenarios::setup;

/// Refinement tolerance on the parameters.
pub const PARAM_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Optimum {
    pub r1: f64,
    /// Time of the maximum; `None` for the stationary objective.
    pub tau: Option<f64>,
    pub value: f64,
}

/// Best `r1 ∈ [0, 1]` for the stationary concurrence at fixed `(s, φ)`.
pub fn stationary_optimum(s: f64, phi: f64, grid: usize) -> Result<Optimum> {
    let init = State::from_separability(s, phi)?;
    let best = maximize_1d(
        |r1| Coupling::unit(r1).map_or(f64::NEG_INFINITY, |c| stationary_concurrence(&c, &init)),
        0.0,
        1.0,
        grid,
        PARAM_TOL,
    )?;
    Ok(Optimum {
        r1: best.at[0],
        tau: None,
        value: best.value,
    })
}

/// Best `(r1, τ) ∈ [0, 1] × [0, tau_max]` for the closed-form `C(τ)`.
pub fn transient_optimum(
    big_r: f64,
    s: f64,
    phi: f64,
    tau_max: f64,
    grid: (usize, usize),
) -> Result<Optimum> {
    let init = State::from_separability(s, phi)?;
    // bad R is caught here rather than swallowed by the objective
    setup(big_r, 0.5)?;
    let objective = |r1: f64, tau: f64| {
        setup(big_r, r1)
            .ok()
            .and_then(|(res, coup)| amplitudes_at(&res, &coup, &init, tau).ok())
            .and_then(|a| concurrence_closed(&a).ok())
            .unwrap_or(f64::NEG_INFINITY)
    };
    let best = maximize_2d(
        objective,
        (0.0, 1.0, grid.0),
        (0.0, tau_max, grid.1),
        PARAM_TOL,
    )?;
    Ok(Optimum {
        r1: best.at[0],
        tau: Some(best.at[1]),
        value: best.value,
    })
}

/// Stationary: columns `s, r1, c_s`, one row per `s`.
/// Transient: columns `big_r, s, r1, tau, c`, one row per `(R, s)`.
pub fn find_optimum(objective: Objective, cfg: &RunConfig) -> Result<Table> {
    let r1_points = cfg.r1.len().max(2);
    match objective {
        Objective::Stationary => {
            let mut table = Table::new(["s", "r1", "c_s"]);
            for &s in &cfg.s {
                let opt = stationary_optimum(s, cfg.phi, r1_points)?;
                table.rows.push(vec![s, opt.r1, opt.value]);
            }
            Ok(table)
        }
        Objective::Transient => {
            let mut table = Table::new(["big_r", "s", "r1", "tau", "c"]);
            let tau_max = cfg.tau_max.unwrap_or(1.0);
            let tau_points = cfg.tau_steps.min(1001);
            for &big_r in &cfg.big_r {
                for &s in &cfg.s {
                    let opt =
                        transient_optimum(big_r, s, cfg.phi, tau_max, (r1_points, tau_points))?;
                    table.rows.push(vec![
                        big_r,
                        s,
                        opt.r1,
                        opt.tau.unwrap_or(f64::NAN),
                        opt.value,
                    ]);
                }
            }
            Ok(table)
        }
    }
}
