use rayon::prelude::*;
use zeno_ent_core::{
    amplitudes_at, concurrence_closed, concurrence_measured_at, simulate_stroboscopic,
    solve_aux_ode, solve_discretized_bath, solve_volterra, stationary_concurrence, zeno_rate, Amps,
    Coupling, Error as ModelError, Kernel, Reservoir, Schedule, Solver, SolverMethod, State,
    Trajectory,
};

use crate::config::{InitialKind, RunConfig, Scenario, SolverChoice};
use crate::error::Result;
use crate::optimum::find_optimum;
use crate::output::Table;

pub const VOLTERRA_TOL: f64 = 1e-5;
pub const ODE_TOL: f64 = 1e-6;
pub const BATH_TOL: f64 = 1e-3;

/// A finished scenario. `failures` lists tolerance violations; the table is
/// still worth writing when it is nonempty.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub failures: Vec<String>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Self {
            table,
            failures: Vec::new(),
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    match cfg.scenario {
        Scenario::StationarySurface => run_stationary_surface(cfg).map(Into::into),
        Scenario::TimeEvolution => run_time_evolution(cfg).map(Into::into),
        Scenario::ZenoCompare => run_zeno_compare(cfg).map(Into::into),
        Scenario::SolverXcheck => run_solver_xcheck(cfg),
        Scenario::Optimum => find_optimum(cfg.objective, cfg).map(Into::into),
    }
}

pub(crate) fn setup(big_r: f64, r1: f64) -> Result<(Reservoir, Coupling)> {
    let coup = Coupling::unit(r1)?;
    Ok((Reservoir::for_ratio(big_r, &coup)?, coup))
}

pub(crate) fn initial_state(cfg: &RunConfig, coup: &Coupling, s: f64) -> Result<State> {
    Ok(match cfg.initial {
        InitialKind::Separable => State::from_separability(s, cfg.phi)?,
        InitialKind::SubRadiant => State::sub_radiant(coup),
        InitialKind::SuperRadiant => State::super_radiant(coup),
    })
}

/// Default solver step and horizon for a given `R`: the step resolves the
/// vacuum Rabi period, the horizon covers the dynamics of interest.
pub fn reference_step(big_r: f64) -> (f64, f64) {
    if big_r <= 1.0 {
        (1e-3, 10.0)
    } else {
        (1e-3 / big_r, 20.0 / big_r)
    }
}

fn solver_config(cfg: &RunConfig, method: SolverMethod, dt: f64, t_max: f64) -> Solver {
    let solver = Solver::new(method, dt, t_max);
    match method {
        SolverMethod::BathRk4 => solver.with_bath(cfg.n_modes, cfg.freq_window),
        _ => solver,
    }
}

/// Solves with `method` and returns the trajectory plus a remark when the
/// finite bath has recurred.
fn integrate(
    cfg: &RunConfig,
    method: SolverMethod,
    (res, coup, init): (&Reservoir, &Coupling, &State),
    dt: f64,
    t_max: f64,
) -> Result<(Trajectory<f64>, Option<String>)> {
    let solver = solver_config(cfg, method, dt, t_max);
    let kernel = Kernel::from_reservoir(res);
    Ok(match method {
        SolverMethod::TrapezoidVolterra => (solve_volterra(&kernel, coup, init, &solver)?, None),
        SolverMethod::AuxOdeRk4 => (solve_aux_ode(&kernel, coup, init, &solver)?, None),
        SolverMethod::BathRk4 => {
            let sol = solve_discretized_bath(res, coup, init, &solver)?;
            let note = sol.report.past_recurrence.then(|| {
                format!(
                    "bath with {} modes recurs at tau = {:.3}, before tau_max = {t_max}",
                    cfg.n_modes, sol.report.recurrence_time
                )
            });
            (sol.trajectory, note)
        }
    })
}

/// Amplitudes on the output time grid with the configured solver.
pub(crate) fn evolve(
    cfg: &RunConfig,
    big_r: f64,
    r1: f64,
    s: f64,
) -> Result<(Vec<Amps>, Option<String>)> {
    let (res, coup) = setup(big_r, r1)?;
    let init = initial_state(cfg, &coup, s)?;
    let taus = cfg.tau_grid();
    let method = match cfg.solver {
        SolverChoice::Closed => {
            let amps = taus
                .iter()
                .map(|&t| amplitudes_at(&res, &coup, &init, t))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok((amps, None));
        }
        SolverChoice::Volterra => SolverMethod::TrapezoidVolterra,
        SolverChoice::Ode => SolverMethod::AuxOdeRk4,
        SolverChoice::Bath => SolverMethod::BathRk4,
    };
    // solver step is the output step divided evenly, no coarser than asked
    let tau_max = *taus.last().expect("tau grid has at least two points");
    let h = tau_max / (taus.len() - 1) as f64;
    let wanted = cfg.dt.unwrap_or(reference_step(big_r).0);
    let sub = ((h / wanted) - 1e-9).ceil().max(1.0) as usize;
    let (traj, note) = integrate(cfg, method, (&res, &coup, &init), h / sub as f64, tau_max)?;
    let amps = taus
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let mut a = traj.amplitudes((i * sub).min(traj.len() - 1));
            a.tau = t;
            a
        })
        .collect();
    Ok((amps, note))
}

fn pairs(cfg: &RunConfig) -> Vec<(f64, f64)> {
    cfg.r1
        .iter()
        .flat_map(|&r1| cfg.s.iter().map(move |&s| (r1, s)))
        .collect()
}

/// Columns `r1, s, c_s, argmax`; `argmax` is 1 on the first grid maximum.
pub fn run_stationary_surface(cfg: &RunConfig) -> Result<Table> {
    let grid = pairs(cfg);
    let values = grid
        .par_iter()
        .map(|&(r1, s)| {
            let coup = Coupling::unit(r1)?;
            Ok(stationary_concurrence(
                &coup,
                &initial_state(cfg, &coup, s)?,
            ))
        })
        .collect::<Result<Vec<f64>>>()?;
    let best = values
        .iter()
        .enumerate()
        .fold(0, |b, (i, &v)| if v > values[b] { i } else { b });
    let mut table = Table::new(["r1", "s", "c_s", "argmax"]);
    table.rows = grid
        .iter()
        .zip(&values)
        .enumerate()
        .map(|(i, (&(r1, s), &c))| vec![r1, s, c, if i == best { 1.0 } else { 0.0 }])
        .collect();
    table.notes.push(format!(
        "grid maximum c_s = {} at r1 = {}, s = {}",
        values[best], grid[best].0, grid[best].1
    ));
    Ok(table)
}

pub fn curve_name(r1: f64, s: f64) -> String {
    format!("c[r1={r1};s={s}]")
}

/// Columns `tau` and `c[r1=..;s=..]` for every (r1, s), r1-major, for the
/// first `big_r`.
pub fn run_time_evolution(cfg: &RunConfig) -> Result<Table> {
    let big_r = cfg.big_r[0];
    let grid = pairs(cfg);
    let curves = grid
        .par_iter()
        .map(|&(r1, s)| {
            let (amps, note) = evolve(cfg, big_r, r1, s)?;
            let c = amps
                .iter()
                .map(concurrence_closed)
                .collect::<Result<Vec<_>, _>>()?;
            Ok((c, note))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new(
        std::iter::once("tau".to_string()).chain(grid.iter().map(|&(r1, s)| curve_name(r1, s))),
    );
    for (i, &tau) in cfg.tau_grid().iter().enumerate() {
        let mut row = vec![tau];
        row.extend(curves.iter().map(|(c, _)| c[i]));
        table.rows.push(row);
    }
    if let Some(note) = curves.iter().find_map(|(_, n)| n.clone()) {
        table.notes.push(note);
    }
    Ok(table)
}

/// Columns `tau`, `c_unmeasured`, then for each interval `T`:
/// `c_measured[T=..]` from the explicit measure-and-reset evolution and,
/// where the closed form applies, its envelope `c_closed[T=..]`.
pub fn run_zeno_compare(cfg: &RunConfig) -> Result<Table> {
    let (big_r, r1, s) = (cfg.big_r[0], cfg.r1[0], cfg.s[0]);
    let (res, coup) = setup(big_r, r1)?;
    let init = initial_state(cfg, &coup, s)?;
    let taus = cfg.tau_grid();
    let tau_max = *taus.last().expect("tau grid has at least two points");

    let (free, note) = evolve(cfg, big_r, r1, s)?;
    let mut columns = vec!["tau".to_string(), "c_unmeasured".to_string()];
    let mut data = vec![
        taus.clone(),
        free.iter()
            .map(concurrence_closed)
            .collect::<Result<Vec<_>, _>>()?,
    ];
    let mut notes: Vec<String> = note.into_iter().collect();

    for &t in &cfg.meas_interval {
        let count = ((tau_max / t) - 1e-9).ceil().max(1.0) as usize;
        let sched = Schedule::new(t, count)?;
        let run = simulate_stroboscopic(&res, &coup, &init, &sched)?;
        columns.push(format!("c_measured[T={t}]"));
        data.push(
            taus.iter()
                .map(|&tau| run.sample(tau).map(|x| x.concurrence))
                .collect::<Result<Vec<_>, _>>()?,
        );
        match zeno_rate(&res, &coup, t) {
            Err(ModelError::SurvivalZero(_)) => notes.push(format!(
                "T={t}: survival amplitude vanishes, closed-form rate undefined; measured curve only"
            )),
            Err(e) => return Err(e.into()),
            Ok(gz) if gz.oscillatory => notes.push(format!(
                "T={t}: E(T) = {} < 0, closed form not applicable; measured curve only",
                gz.survival
            )),
            Ok(_) => {
                columns.push(format!("c_closed[T={t}]"));
                data.push(
                    taus.iter()
                        .map(|&tau| concurrence_measured_at(&res, &coup, &init, t, tau))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
        }
    }
    let mut table = Table::new(columns);
    table.rows = (0..taus.len())
        .map(|i| data.iter().map(|col| col[i]).collect())
        .collect();
    table.notes = notes;
    Ok(table)
}

/// Max absolute amplitude errors of each solver against the closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossCheck {
    pub big_r: f64,
    pub s: f64,
    pub r1: f64,
    pub volterra: f64,
    pub ode: f64,
    pub bath: Option<f64>,
}

impl CrossCheck {
    pub fn passes(&self) -> bool {
        self.volterra <= VOLTERRA_TOL
            && self.ode <= ODE_TOL
            && self.bath.is_none_or(|b| b <= BATH_TOL)
    }
}

pub fn cross_check(cfg: &RunConfig, big_r: f64, s: f64, r1: f64) -> Result<CrossCheck> {
    let (res, coup) = setup(big_r, r1)?;
    let init = initial_state(cfg, &coup, s)?;
    let (ref_dt, ref_t) = reference_step(big_r);
    let dt = cfg.dt.unwrap_or(ref_dt);
    let t_max = cfg.tau_max.unwrap_or(ref_t);
    let error = |method| -> Result<f64> {
        let (traj, _) = integrate(cfg, method, (&res, &coup, &init), dt, t_max)?;
        Ok(traj.max_abs_error(|t| amplitudes_at(&res, &coup, &init, t))?)
    };
    Ok(CrossCheck {
        big_r,
        s,
        r1,
        volterra: error(SolverMethod::TrapezoidVolterra)?,
        ode: error(SolverMethod::AuxOdeRk4)?,
        bath: if cfg.with_bath {
            Some(error(SolverMethod::BathRk4)?)
        } else {
            None
        },
    })
}

/// Columns `big_r, s, r1, volterra_err, ode_err[, bath_err], pass`.
/// `s` is NaN for the fixed collective initial states.
pub fn run_solver_xcheck(cfg: &RunConfig) -> Result<Outcome> {
    let states = match cfg.initial {
        InitialKind::Separable => cfg.s.clone(),
        _ => vec![f64::NAN],
    };
    let grid: Vec<(f64, f64, f64)> = cfg
        .big_r
        .iter()
        .flat_map(|&b| {
            states
                .iter()
                .flat_map(move |&s| cfg.r1.iter().map(move |&r1| (b, s, r1)))
        })
        .collect();
    let checks = grid
        .par_iter()
        .map(|&(b, s, r1)| cross_check(cfg, b, s, r1))
        .collect::<Result<Vec<_>>>()?;

    let mut columns = vec!["big_r", "s", "r1", "volterra_err", "ode_err"];
    if cfg.with_bath {
        columns.push("bath_err");
    }
    columns.push("pass");
    let mut table = Table::new(columns);
    let mut failures = Vec::new();
    for c in &checks {
        let mut row = vec![c.big_r, c.s, c.r1, c.volterra, c.ode];
        row.extend(c.bath);
        row.push(if c.passes() { 1.0 } else { 0.0 });
        table.rows.push(row);
        if !c.passes() {
            failures.push(format!(
                "R={} s={} r1={}: volterra {:.2e}, ode {:.2e}, bath {}",
                c.big_r,
                c.s,
                c.r1,
                c.volterra,
                c.ode,
                c.bath.map_or("-".into(), |b| format!("{b:.2e}"))
            ));
        }
    }
    Ok(Outcome { table, failures })
}
