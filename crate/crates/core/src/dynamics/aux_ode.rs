//! Exact ODE reduction for the exponential kernel.
//!
//! With `z(τ) = ∫₀^τ f(τ − s) [α₁c₁ + α₂c₂](s) ds` and `f(τ) = (W/λ)² e^{−τ}`
//! the memory equations close into
//!
//! ```text
//! ż = −z + (W/λ)² (α₁c₁ + α₂c₂),   ċ_j = −α_j z,
//! ```
//!
//! i.e. a single damped pseudomode. Integrated with RK4.

use crate::dynamics::config::{SolverConfig, SolverMethod};
use crate::dynamics::kernel::KernelSpec;
use crate::dynamics::rk4::Rk4;
use crate::dynamics::trajectory::Trajectory;
use crate::error::{Error, Result};
use crate::model::{CouplingSpec, InitialState};
use crate::scalar::{Amp, Real};

pub fn solve_aux_ode<T: Real>(
    kernel: &KernelSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    cfg: &SolverConfig<T>,
) -> Result<Trajectory<T>> {
    cfg.validate()?;
    cfg.expect_method(SolverMethod::AuxOdeRk4)?;
    kernel.validate()?;
    let strength = match kernel {
        KernelSpec::Exponential { w_sq, lambda } => *w_sq / (*lambda * *lambda),
        KernelSpec::Tabulated { .. } => {
            return Err(Error::Unsupported(
                "auxiliary ODE reduction requires an exponential kernel",
            ))
        }
    };
    cfg.check_resolution(kernel.rabi_ratio(coupling)?)?;

    let (a1, a2) = (coupling.alpha1(), coupling.alpha2());
    let n = cfg.steps();
    let dt = cfg.dt;
    let mut rk = Rk4::new(3);
    let mut y = [init.c01(), init.c02(), Amp::new(T::zero(), T::zero())];
    let mut out = Trajectory::with_capacity(n + 1);
    out.push(T::zero(), y[0], y[1]);
    for step in 1..=n {
        rk.step(&mut y, dt, |s, d| {
            d[0] = -s[2] * a1;
            d[1] = -s[2] * a2;
            d[2] = -s[2] + (s[0] * a1 + s[1] * a2) * strength;
        });
        out.push(T::from_count(step) * dt, y[0], y[1]);
    }
    Ok(out)
}
