//! Closed-form time evolution.
//!
//! The sub-radiant component never changes; the super-radiant component is
//! multiplied by the survival amplitude
//!
//! ```text
//! E(τ) = e^{−τ/2} [cosh(Ωτ/2) + sinh(Ωτ/2)/Ω],   Ω² = 1 − 4R²
//! ```
//!
//! with `τ = λt` and `R` the Rabi frequency over `λ`. For `Ω² < 0` the
//! hyperbolic functions turn into their trigonometric counterparts.

use crate::error::{Error, Result};
use crate::model::params::{CouplingSpec, RegimeParams, ReservoirSpec};
use crate::model::state::{Amplitudes, BellBasis, InitialState};
use crate::scalar::Real;

/// Half-width of the band around `Ω² = 0` where the critically damped
/// formula is used.
const CRITICAL_BAND: f64 = 1e-12;

fn sinc<T: Real>(y: T) -> T {
    if y.abs() < T::lit(1e-4) {
        T::one() - y * y / T::lit(6.0)
    } else {
        y.sin() / y
    }
}

fn sinhc<T: Real>(y: T) -> T {
    if y.abs() < T::lit(1e-4) {
        T::one() + y * y / T::lit(6.0)
    } else {
        y.sinh() / y
    }
}

/// Survival amplitude as a function of the dimensionless ratio `big_r` and
/// time `tau`. No validation.
pub(crate) fn survival_for_ratio<T: Real>(big_r: T, tau: T) -> T {
    let half_tau = tau * T::lit(0.5);
    let omega_sq = T::one() - T::lit(4.0) * big_r * big_r;
    if omega_sq.abs() < T::lit(CRITICAL_BAND) {
        return (-half_tau).exp() * (T::one() + half_tau);
    }
    let w = omega_sq.abs().sqrt();
    let y = w * half_tau;
    if omega_sq < T::zero() {
        (-half_tau).exp() * (y.cos() + half_tau * sinc(y))
    } else if y < T::lit(20.0) {
        (-half_tau).exp() * (y.cosh() + half_tau * sinhc(y))
    } else {
        // exponential form avoids overflowing cosh at late times
        let inv = w.recip();
        T::lit(0.5)
            * ((T::one() + inv) * (y - half_tau).exp() + (T::one() - inv) * (-y - half_tau).exp())
    }
}

fn check_tau<T: Real>(tau: T) -> Result<()> {
    if !tau.is_finite() {
        return Err(Error::NonFinite("tau"));
    }
    if tau < T::zero() {
        return Err(Error::NegativeTime(tau.as_f64()));
    }
    Ok(())
}

/// Survival amplitude `E(τ)` of the super-radiant state, `τ = λt`.
pub fn survival_amplitude<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    tau: T,
) -> Result<T> {
    check_tau(tau)?;
    let regime = RegimeParams::new(reservoir, coupling);
    if !regime.big_r.is_finite() {
        return Err(Error::NonFinite("bigR"));
    }
    Ok(survival_for_ratio(regime.big_r, tau))
}

/// Qubit amplitudes at `τ = λt`:
/// `c₁ = r₂β₋ + r₁E β₊`, `c₂ = −r₁β₋ + r₂E β₊`.
pub fn amplitudes_at<T: Real>(
    reservoir: &ReservoirSpec<T>,
    coupling: &CouplingSpec<T>,
    init: &InitialState<T>,
    tau: T,
) -> Result<Amplitudes<T>> {
    let e = survival_amplitude(reservoir, coupling, tau)?;
    let (c1, c2) = BellBasis::new(coupling, init).recombine(coupling, e);
    Ok(Amplitudes::new(c1, c2, tau))
}
