//! Scenario configuration: TOML file, command-line overrides, defaults.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// Stationary concurrence on an (r1, s) grid.
    StationarySurface,
    /// Concurrence against time for each (r1, s).
    TimeEvolution,
    /// Free against periodically measured evolution.
    ZenoCompare,
    /// Numerical solvers against the closed form.
    SolverXcheck,
    /// Refined maximum of the stationary or transient concurrence.
    Optimum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SolverChoice {
    #[default]
    Closed,
    Volterra,
    Ode,
    Bath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// Maximize the stationary concurrence over r1, per s.
    #[default]
    Stationary,
    /// Maximize C(τ) over (r1, τ), per (R, s).
    Transient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum InitialKind {
    /// Built from the separability `s` and phase `phi`.
    #[default]
    Separable,
    /// The decoherence-free state; `s` and `phi` are ignored.
    SubRadiant,
    /// The decaying collective state; `s` and `phi` are ignored.
    SuperRadiant,
}

/// A parameter axis: one value, an explicit list, or `steps` evenly spaced
/// points from `start` to `stop` inclusive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Grid {
    Value(f64),
    List(Vec<f64>),
    Range { start: f64, stop: f64, steps: usize },
}

impl Grid {
    pub fn range(start: f64, stop: f64, steps: usize) -> Self {
        Self::Range { start, stop, steps }
    }

    pub fn points(&self) -> Vec<f64> {
        match *self {
            Self::Value(v) => vec![v],
            Self::List(ref v) => v.clone(),
            Self::Range { start, stop, steps } => (0..steps)
                .map(|i| {
                    if steps == 1 {
                        start
                    } else if i + 1 == steps {
                        stop
                    } else {
                        start + (stop - start) * i as f64 / (steps - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

/// Accepts `0.5`, `0.1,0.2,0.3` or `start:stop:steps`.
impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {t:?}: {e}"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.len() {
            1 if s.contains(',') => {
                Ok(Self::List(s.split(',').map(num).collect::<Result<_, _>>()?))
            }
            1 => Ok(Self::Value(num(s)?)),
            3 => Ok(Self::Range {
                start: num(parts[0])?,
                stop: num(parts[1])?,
                steps: parts[2]
                    .trim()
                    .parse()
                    .map_err(|e| format!("bad step count {:?}: {e}", parts[2]))?,
            }),
            _ => Err(format!(
                "expected a number, a comma list or start:stop:steps, got {s:?}"
            )),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value(v) => write!(f, "{v}"),
            Self::List(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", s.join(","))
            }
            Self::Range { start, stop, steps } => write!(f, "{start}:{stop}:{steps}"),
        }
    }
}

/// Everything a run can be told, as read from a file or the command line.
/// Unset fields fall back to per-scenario defaults in [`ScenarioConfig::resolve`].
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub scenario: Option<Scenario>,
    pub big_r: Option<Grid>,
    pub r1: Option<Grid>,
    pub s: Option<Grid>,
    pub phi: Option<f64>,
    pub tau_max: Option<f64>,
    pub tau_steps: Option<usize>,
    pub meas_interval: Option<Grid>,
    pub solver: Option<SolverChoice>,
    pub objective: Option<Objective>,
    pub initial: Option<InitialKind>,
    pub dt: Option<f64>,
    pub n_modes: Option<usize>,
    pub freq_window: Option<f64>,
    pub with_bath: Option<bool>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

macro_rules! overlay {
    ($base:ident, $top:ident; $($field:ident),*) => {
        $(if $top.$field.is_some() { $base.$field = $top.$field; })*
    };
}

impl ScenarioConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_toml(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Fields set in `top` replace those in `self`.
    pub fn overlay(mut self, top: ScenarioConfig) -> Self {
        overlay!(self, top; scenario, big_r, r1, s, phi, tau_max, tau_steps, meas_interval,
            solver, objective, initial, dt, n_modes, freq_window, with_bath, out, format);
        self
    }

    pub fn resolve(self) -> Result<RunConfig> {
        let scenario = self
            .scenario
            .ok_or_else(|| CliError::config("no scenario given"))?;
        let objective = self.objective.unwrap_or_default();
        let unit = || Grid::range(0.0, 1.0, 201);
        let required = |g: Option<Grid>, name: &str| {
            g.ok_or_else(|| CliError::config(format!("{scenario:?} needs `{name}`")))
        };
        use Scenario::*;
        let (big_r, r1, s) = match scenario {
            StationarySurface => (
                self.big_r.unwrap_or(Grid::List(vec![])),
                self.r1.unwrap_or_else(unit),
                self.s.unwrap_or(Grid::range(-1.0, 1.0, 201)),
            ),
            TimeEvolution => (
                required(self.big_r, "big_r")?,
                required(self.r1, "r1")?,
                required(self.s, "s")?,
            ),
            ZenoCompare => (
                required(self.big_r, "big_r")?,
                self.r1
                    .unwrap_or(Grid::Value(std::f64::consts::FRAC_1_SQRT_2)),
                self.s.unwrap_or(Grid::Value(0.0)),
            ),
            SolverXcheck => (
                self.big_r.unwrap_or(Grid::List(vec![0.1, 0.5, 10.0])),
                self.r1.unwrap_or(Grid::List(vec![
                    0.0,
                    0.5,
                    std::f64::consts::FRAC_1_SQRT_2,
                    0.87,
                    1.0,
                ])),
                self.s.unwrap_or(Grid::List(vec![-1.0, 0.0, 1.0])),
            ),
            Optimum => (
                match objective {
                    Objective::Stationary => self.big_r.unwrap_or(Grid::List(vec![])),
                    Objective::Transient => required(self.big_r, "big_r")?,
                },
                self.r1.unwrap_or_else(unit),
                self.s.unwrap_or(Grid::Value(1.0)),
            ),
        };
        let tau_max = match (self.tau_max, scenario) {
            (Some(t), _) => Some(t),
            (None, TimeEvolution) => Some(10.0),
            (None, ZenoCompare) => Some(2.0),
            (None, Optimum) => Some(1.0),
            (None, _) => None,
        };
        let meas_interval = match scenario {
            ZenoCompare => required(self.meas_interval, "meas_interval")?,
            _ => self.meas_interval.unwrap_or(Grid::List(vec![])),
        };
        let cfg = RunConfig {
            scenario,
            big_r: big_r.points(),
            r1: r1.points(),
            s: s.points(),
            phi: self.phi.unwrap_or(0.0),
            tau_max,
            tau_steps: self.tau_steps.unwrap_or(2001),
            meas_interval: meas_interval.points(),
            solver: self.solver.unwrap_or_default(),
            objective,
            initial: self.initial.unwrap_or_default(),
            dt: self.dt,
            n_modes: self.n_modes.unwrap_or(2000),
            freq_window: self.freq_window.unwrap_or(20.0),
            with_bath: self.with_bath.unwrap_or(true),
            out: self.out,
            format: self.format.unwrap_or_default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

/// A fully resolved run. Serialized into the JSON envelope.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub big_r: Vec<f64>,
    pub r1: Vec<f64>,
    pub s: Vec<f64>,
    pub phi: f64,
    /// Scenario default when `None` (solver-xcheck picks it per R).
    pub tau_max: Option<f64>,
    pub tau_steps: usize,
    pub meas_interval: Vec<f64>,
    pub solver: SolverChoice,
    pub objective: Objective,
    pub initial: InitialKind,
    /// Solver step; a per-R reference value when `None`.
    pub dt: Option<f64>,
    pub n_modes: usize,
    pub freq_window: f64,
    pub with_bath: bool,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    pub format: Format,
}

fn check_axis(name: &str, v: &[f64], lo: f64, hi: f64) -> Result<()> {
    if v.is_empty() {
        return Err(CliError::config(format!("`{name}` grid is empty")));
    }
    if let Some(x) = v
        .iter()
        .find(|x| !(x.is_finite() && **x >= lo && **x <= hi))
    {
        return Err(CliError::config(format!(
            "`{name}` = {x} outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

impl RunConfig {
    fn needs_big_r(&self) -> bool {
        !matches!(
            (self.scenario, self.objective),
            (Scenario::StationarySurface, _) | (Scenario::Optimum, Objective::Stationary)
        )
    }

    pub fn validate(&self) -> Result<()> {
        if self.needs_big_r() {
            check_axis("big_r", &self.big_r, f64::MIN_POSITIVE, f64::MAX)?;
        }
        check_axis("r1", &self.r1, 0.0, 1.0)?;
        if self.initial == InitialKind::Separable {
            check_axis("s", &self.s, -1.0, 1.0)?;
        }
        if !self.phi.is_finite() {
            return Err(CliError::config("`phi` must be finite"));
        }
        if self.tau_steps < 2 {
            return Err(CliError::config("`tau_steps` must be at least 2"));
        }
        if let Some(t) = self.tau_max {
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::config(format!(
                    "`tau_max` = {t} must be positive"
                )));
            }
        }
        if let Some(dt) = self.dt {
            if !(dt.is_finite() && dt > 0.0) {
                return Err(CliError::config(format!("`dt` = {dt} must be positive")));
            }
        }
        if self.scenario == Scenario::ZenoCompare {
            check_axis(
                "meas_interval",
                &self.meas_interval,
                f64::MIN_POSITIVE,
                f64::MAX,
            )?;
            if self.r1.len() != 1 || self.s.len() != 1 {
                return Err(CliError::config("zeno-compare takes a single r1 and s"));
            }
        }
        if self.n_modes == 0 {
            return Err(CliError::config("`n_modes` must be positive"));
        }
        if !(self.freq_window.is_finite() && self.freq_window > 0.0) {
            return Err(CliError::config("`freq_window` must be positive"));
        }
        Ok(())
    }

    /// Output time grid `τ_i = tau_max · i / (tau_steps − 1)`.
    pub fn tau_grid(&self) -> Vec<f64> {
        let t = self.tau_max.unwrap_or(1.0);
        let n = self.tau_steps;
        (0..n)
            .map(|i| {
                if i + 1 == n {
                    t
                } else {
                    t * i as f64 / (n - 1) as f64
                }
            })
            .collect()
    }
}
