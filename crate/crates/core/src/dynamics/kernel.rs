use crate::error::{invalid, Error, Result};
use crate::model::{CouplingSpec, ReservoirSpec};
use crate::scalar::Real;

/// Memory kernel of the amplitude equations.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelSpec<T> {
    /// `f(t) = W² e^{−λt}`, the Lorentzian reservoir.
    Exponential { w_sq: T, lambda: T },
    /// Kernel sampled on a uniform grid of dimensionless lags
    /// `τ_i = i·step`, values in units of `λ²` (so that `f(0)` is the
    /// squared Rabi frequency per unit collective coupling over `λ²`).
    /// Linearly interpolated between samples.
    Tabulated { step: T, values: Vec<T> },
}

impl<T: Real> KernelSpec<T> {
    pub fn exponential(w_sq: T, lambda: T) -> Result<Self> {
        let k = Self::Exponential { w_sq, lambda };
        k.validate()?;
        Ok(k)
    }

    pub fn from_reservoir(reservoir: &ReservoirSpec<T>) -> Self {
        Self::Exponential {
            w_sq: reservoir.w() * reservoir.w(),
            lambda: reservoir.lambda(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Exponential { w_sq, lambda } => {
                if !w_sq.is_finite() || !lambda.is_finite() {
                    return Err(Error::NonFinite("kernel"));
                }
                if *w_sq <= T::zero() || *lambda <= T::zero() {
                    return Err(invalid("kernel", "W² and λ must be positive"));
                }
            }
            Self::Tabulated { step, values } => {
                if !step.is_finite() || values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::NonFinite("tabulated kernel"));
                }
                if *step <= T::zero() {
                    return Err(invalid("kernel", "tabulation step must be positive"));
                }
                if values.len() < 2 {
                    return Err(invalid("kernel", "need at least two samples"));
                }
            }
        }
        Ok(())
    }

    /// Kernel at dimensionless lag `τ`, in units of `λ²`.
    pub fn scaled_at(&self, tau: T) -> Result<T> {
        match self {
            Self::Exponential { w_sq, lambda } => Ok(*w_sq / (*lambda * *lambda) * (-tau).exp()),
            Self::Tabulated { step, values } => {
                let x = tau / *step;
                let i = x.floor();
                let last = values.len() - 1;
                let idx = i.to_usize().filter(|&i| i <= last).ok_or_else(|| {
                    invalid("kernel", format!("lag {tau} outside tabulated range"))
                })?;
                if idx == last {
                    return if x == i {
                        Ok(values[last])
                    } else {
                        Err(invalid(
                            "kernel",
                            format!("lag {tau} outside tabulated range"),
                        ))
                    };
                }
                let frac = x - i;
                Ok(values[idx] * (T::one() - frac) + values[idx + 1] * frac)
            }
        }
    }

    /// Dimensionless Rabi ratio `α_T √f(0) / λ` implied by this kernel.
    pub fn rabi_ratio(&self, coupling: &CouplingSpec<T>) -> Result<T> {
        Ok(coupling.alpha_t() * self.scaled_at(T::zero())?.max(T::zero()).sqrt())
    }
}
