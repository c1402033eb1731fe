//! Brute-force oracle: the qubits coupled to a finite set of explicit
//! reservoir modes.
//!
//! Modes sit at the midpoints of a uniform grid on `[ω₀ − Kλ, ω₀ + Kλ]` with
//! `g_k² = J(ω_k) Δω`. In the frame rotating with the mode detunings
//! (`b_k = e^{iδ_k t} c_k`, `δ_k = ω₀ − ω_k`) the amplitude equations are
//! autonomous:
//!
//! ```text
//! ċ_j = −i α_j Σ_k g_k b_k
//! ḃ_k =  i δ_k b_k − i g_k (α₁c₁ + α₂c₂)
//! ```
//!
//! A finite bath recurs after `2π/Δω`; results past that horizon are flagged.

use crate::dynamics::config::{SolverConfig, SolverMethod};
use crate::dynamics::rk4::Rk4;
use crate::dynamics::trajectory::Trajectory;
use crate::error::Result;
use crate::model::{CouplingSpec, InitialState, ReservoirSpec};
use crate::scalar::{Amp, Real};

/// One discretized reservoir mode, in physical frequency units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathMode<T> {
    pub omega: T,
    /// Real coupling amplitude, `g² = J(ω) Δω`.
    pub coupling: T,
    /// `ω₀ − ω`.
    pub detuning: T,
}

/// Diagnostics returned alongside the bath trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathReport<T> {
    /// `2π/Δω` in units of `1/λ`.
    pub recurrence_time: T,
    /// Set when `t_max` exceeds the recurrence time, after which the finite
    /// bath no longer represents the continuum.
    pub past_recurrence: bool,
    /// Largest deviation of the total excitation number from its initial value.
    pub max_norm_drift: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BathSolution<T> {
    pub trajectory: Trajectory<T>,
    pub report: BathReport<T>,
}

/// Deterministic uniform discretization of the Lorentzian.
pub fn bath_modes<T: Real>(
    reservoir: &ReservoirSpec<T>,
    n_modes: usize,
    freq_window: T,
) -> Vec<BathMode<T>> {
    let lambda = reservoir.lambda();
    let span = T::lit(2.0) * freq_window * lambda;
    let spacing = span / T::from_count(n_modes);
    let lower = reservoir.omega0() - freq_window * lambda;
    (0..n_modes)
        .map(|k| {
            let omega = lower + spacing * (T::from_count(k) + T::lit(0.5));
            BathMode {
                omega,
                coupling: (reservoir.spectral_density(omega) * spacing).sqrt(),
                detuning: reservoir.omega0() - omega,
            }
        })
        .collect()
}

pub fn solve_discretized_bath<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    cfg: &SolverConfig<T>,
) -> Result<BathSolution<T>> {
    cfg.validate()?;
    cfg.expect_method(SolverMethod::BathRk4)?;
    let lambda = reservoir.lambda();
    let big_r = coupling.alpha_t() * reservoir.w() / lambda;
    cfg.check_resolution(big_r.max(cfg.freq_window))?;

    let modes = bath_modes(reservoir, cfg.n_modes, cfg.freq_window);
    // dimensionless: frequencies over λ
    let g: Vec<T> = modes.iter().map(|m| m.coupling / lambda).collect();
    let delta: Vec<T> = modes.iter().map(|m| m.detuning / lambda).collect();
    let spacing = T::lit(2.0) * cfg.freq_window / T::from_count(cfg.n_modes);
    let recurrence_time = T::lit(2.0) * T::PI() / spacing;

    let (a1, a2) = (coupling.alpha1(), coupling.alpha2());
    let i = Amp::new(T::zero(), T::one());
    let dim = modes.len() + 2;
    let mut y = vec![Amp::new(T::zero(), T::zero()); dim];
    y[0] = init.c01();
    y[1] = init.c02();
    let initial_norm: T = y.iter().map(|z| z.norm_sqr()).sum();

    let n = cfg.steps();
    let dt = cfg.dt;
    let mut rk = Rk4::new(dim);
    let mut out = Trajectory::with_capacity(n + 1);
    out.push(T::zero(), y[0], y[1]);
    let mut max_norm_drift = T::zero();
    for step in 1..=n {
        rk.step(&mut y, dt, |s, d| {
            let source = (s[0] * a1 + s[1] * a2) * i;
            let mut field = Amp::new(T::zero(), T::zero());
            for k in 0..g.len() {
                let b = s[k + 2];
                field = field + b * g[k];
                d[k + 2] = b * i * delta[k] - source * g[k];
            }
            let field = field * i;
            d[0] = -field * a1;
            d[1] = -field * a2;
        });
        let norm: T = y.iter().map(|z| z.norm_sqr()).sum();
        max_norm_drift = max_norm_drift.max((norm - initial_norm).abs());
        out.push(T::from_count(step) * dt, y[0], y[1]);
    }

    Ok(BathSolution {
        trajectory: out,
        report: BathReport {
            recurrence_time,
            past_recurrence: recurrence_time < cfg.t_max,
            max_norm_drift,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_weights_follow_lorentzian() {
        let res = ReservoirSpec::<f64>::new(2.0, 0.5, 3.0).unwrap();
        let modes = bath_modes(&res, 400, 20.0);
        assert_eq!(modes.len(), 400);
        let dw = 2.0 * 20.0 * 0.5 / 400.0;
        for m in &modes {
            assert!(m.coupling >= 0.0);
            assert!((m.coupling.powi(2) - res.spectral_density(m.omega) * dw).abs() < 1e-14);
            assert!((m.detuning - (3.0 - m.omega)).abs() < 1e-14);
        }
        // symmetric placement around ω₀, no mode exactly on resonance
        assert!((modes[0].omega + modes[399].omega - 6.0).abs() < 1e-12);
    }

    #[test]
    fn flags_recurrence() {
        let coup = CouplingSpec::unit(0.5).unwrap();
        let res = ReservoirSpec::for_ratio(0.1, &coup).unwrap();
        let init = InitialState::from_separability(1.0, 0.0).unwrap();
        // Δ = 2·4/8 = 1 → recurrence 2π < 8
        let cfg = SolverConfig::new(SolverMethod::BathRk4, 0.01, 8.0).with_bath(8, 4.0);
        let sol = solve_discretized_bath(&res, &coup, &init, &cfg).unwrap();
        assert!(sol.report.past_recurrence);
        assert!((sol.report.recurrence_time - 2.0 * std::f64::consts::PI).abs() < 1e-12);
        let cfg = SolverConfig::new(SolverMethod::BathRk4, 0.01, 5.0).with_bath(8, 4.0);
        let sol = solve_discretized_bath(&res, &coup, &init, &cfg).unwrap();
        assert!(!sol.report.past_recurrence);
    }
}
