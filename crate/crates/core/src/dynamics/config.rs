use crate::error::{invalid, Error, Result};
use crate::scalar::Real;

/// Numerical scheme used by a solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverMethod {
    /// Predictor–corrector stepping with trapezoidal memory quadrature.
    TrapezoidVolterra,
    /// RK4 on the auxiliary (pseudomode) ODE of an exponential kernel.
    AuxOdeRk4,
    /// RK4 on a finite set of explicit bath modes.
    BathRk4,
}

/// Step size, horizon and bath discretization. Times are in units of `1/λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig<T> {
    pub dt: T,
    pub t_max: T,
    pub method: SolverMethod,
    /// Number of bath modes (bath solver only).
    pub n_modes: usize,
    /// Half-width `K` of the sampled band `[ω₀ − Kλ, ω₀ + Kλ]` (bath solver only).
    pub freq_window: T,
    /// Reserved; mode placement is deterministic.
    pub seed: u64,
}

impl<T: Real> SolverConfig<T> {
    pub fn new(method: SolverMethod, dt: T, t_max: T) -> Self {
        Self {
            dt,
            t_max,
            method,
            n_modes: 2000,
            freq_window: T::lit(20.0),
            seed: 0,
        }
    }

    pub fn with_bath(mut self, n_modes: usize, freq_window: T) -> Self {
        self.n_modes = n_modes;
        self.freq_window = freq_window;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.dt.is_finite() || !self.t_max.is_finite() || !self.freq_window.is_finite() {
            return Err(Error::NonFinite("solver config"));
        }
        if self.dt <= T::zero() {
            return Err(invalid("dt", "must be positive"));
        }
        if self.t_max <= T::zero() {
            return Err(invalid("t_max", "must be positive"));
        }
        if self.n_modes == 0 {
            return Err(invalid("n_modes", "need at least one mode"));
        }
        if self.freq_window <= T::zero() {
            return Err(invalid("freq_window", "must be positive"));
        }
        Ok(())
    }

    pub(crate) fn expect_method(&self, method: SolverMethod) -> Result<()> {
        if self.method != method {
            return Err(invalid(
                "method",
                format!("expected {method:?}, got {:?}", self.method),
            ));
        }
        Ok(())
    }

    /// Number of steps so that the grid `{0, dt, …}` reaches `t_max`.
    pub fn steps(&self) -> usize {
        let ratio = (self.t_max / self.dt).as_f64();
        (ratio - 1e-9).ceil().max(1.0) as usize
    }

    /// Rejects steps that cannot resolve the faster of `λ` and the Rabi
    /// frequency: `dt < 1 / (2·max(1, R))` in units of `1/λ`.
    pub(crate) fn check_resolution(&self, big_r: T) -> Result<()> {
        let limit = (T::lit(2.0) * big_r.max(T::one())).recip();
        if self.dt >= limit {
            return Err(Error::UnderResolved {
                dt: self.dt.as_f64(),
                limit: limit.as_f64(),
            });
        }
        Ok(())
    }
}
