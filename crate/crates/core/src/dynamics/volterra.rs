//! Direct integration of the amplitude integro-differential equations
//!
//! ```text
//! ċ_j(τ) = −α_j ∫₀^τ f(τ − s) [α₁c₁(s) + α₂c₂(s)] ds
//! ```
//!
//! for an arbitrary kernel. The memory integral is evaluated with the
//! trapezoidal rule over the full history (O(n²) work) and the amplitudes are
//! advanced with a trapezoidal predictor–corrector, giving O(dt²) global
//! error.

use crate::dynamics::config::{SolverConfig, SolverMethod};
use crate::dynamics::kernel::KernelSpec;
use crate::dynamics::trajectory::Trajectory;
use crate::error::{Error, Result};
use crate::model::{CouplingSpec, InitialState};
use crate::scalar::{Amp, Real};

/// Corrector passes per step.
const CORRECTIONS: usize = 2;

pub fn solve_volterra<T: Real>(
    kernel: &KernelSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    cfg: &SolverConfig<T>,
) -> Result<Trajectory<T>> {
    cfg.validate()?;
    cfg.expect_method(SolverMethod::TrapezoidVolterra)?;
    kernel.validate()?;
    cfg.check_resolution(kernel.rabi_ratio(coupling)?)?;

    let n = cfg.steps();
    let dt = cfg.dt;
    let lags = (0..=n)
        .map(|k| {
            let v = kernel.scaled_at(T::from_count(k) * dt)?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite("kernel value"))
            }
        })
        .collect::<Result<Vec<T>>>()?;

    let (a1, a2) = (coupling.alpha1(), coupling.alpha2());
    let half = T::lit(0.5);
    let mix = |c1: Amp<T>, c2: Amp<T>| c1 * a1 + c2 * a2;

    let mut out = Trajectory::with_capacity(n + 1);
    let mut source: Vec<Amp<T>> = Vec::with_capacity(n + 1);

    let (mut c1, mut c2) = (init.c01(), init.c02());
    out.push(T::zero(), c1, c2);
    source.push(mix(c1, c2));
    // memory integral at the current grid point
    let mut memory = Amp::new(T::zero(), T::zero());

    for step in 1..=n {
        // all trapezoid terms except the unknown endpoint at `step`
        let mut history = source[0] * (lags[step] * half);
        for (m, &u) in source.iter().enumerate().skip(1) {
            history = history + u * lags[step - m];
        }
        history = history * dt;
        let endpoint = lags[0] * half * dt;

        let (d1, d2) = (-memory * a1, -memory * a2);
        let (mut p1, mut p2) = (c1 + d1 * dt, c2 + d2 * dt);
        let mut next_memory = history + mix(p1, p2) * endpoint;
        for _ in 0..CORRECTIONS {
            p1 = c1 + (d1 - next_memory * a1) * (dt * half);
            p2 = c2 + (d2 - next_memory * a2) * (dt * half);
            next_memory = history + mix(p1, p2) * endpoint;
        }

        c1 = p1;
        c2 = p2;
        memory = next_memory;
        source.push(mix(c1, c2));
        out.push(T::from_count(step) * dt, c1, c2);
    }
    Ok(out)
}
