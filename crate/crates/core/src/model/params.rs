//! Reservoir and coupling parameters.

use crate::error::{invalid, Error, Result};
use crate::scalar::Real;

/// Lorentzian reservoir: spectral density
/// `J(ω) = (W²/π) λ / ((ω − ω₀)² + λ²)` with correlation kernel `W² e^{−λτ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReservoirSpec<T> {
    w: T,
    lambda: T,
    omega0: T,
}

impl<T: Real> ReservoirSpec<T> {
    pub fn new(w: T, lambda: T, omega0: T) -> Result<Self> {
        if !w.is_finite() {
            return Err(Error::NonFinite("W"));
        }
        if !lambda.is_finite() {
            return Err(Error::NonFinite("lambda"));
        }
        if !omega0.is_finite() {
            return Err(Error::NonFinite("omega0"));
        }
        if w <= T::zero() {
            return Err(invalid("W", "coupling strength must be positive"));
        }
        if lambda <= T::zero() {
            return Err(invalid("lambda", "spectral width must be positive"));
        }
        Ok(Self { w, lambda, omega0 })
    }

    /// Reservoir with `λ = 1`, `ω₀ = 0` and `W` chosen so that the vacuum
    /// Rabi frequency over `λ` equals `big_r` for the given couplings.
    pub fn for_ratio(big_r: T, coupling: &CouplingSpec<T>) -> Result<Self> {
        if !big_r.is_finite() {
            return Err(Error::NonFinite("bigR"));
        }
        if big_r <= T::zero() {
            return Err(invalid("bigR", "must be positive"));
        }
        Self::new(big_r / coupling.alpha_t(), T::one(), T::zero())
    }

    pub fn w(&self) -> T {
        self.w
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// Resonance frequency. Carried along for bookkeeping; resonant dynamics
    /// never depend on it.
    pub fn omega0(&self) -> T {
        self.omega0
    }

    pub fn spectral_density(&self, omega: T) -> T {
        let d = omega - self.omega0;
        self.w * self.w / T::PI() * self.lambda / (d * d + self.lambda * self.lambda)
    }

    /// Correlation kernel at dimensionless lag `τ = λ·lag`, in frequency² units.
    pub fn correlation(&self, tau: T) -> T {
        self.w * self.w * (-tau).exp()
    }
}

/// Per-qubit couplings `α₁, α₂ ≥ 0` together with the collective coupling
/// `α_T = √(α₁² + α₂²)` and relative strengths `r_j = α_j / α_T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingSpec<T> {
    alpha1: T,
    alpha2: T,
    alpha_t: T,
    r1: T,
    r2: T,
}

impl<T: Real> CouplingSpec<T> {
    pub fn from_alphas(alpha1: T, alpha2: T) -> Result<Self> {
        if !alpha1.is_finite() || !alpha2.is_finite() {
            return Err(Error::NonFinite("alpha"));
        }
        if alpha1 < T::zero() || alpha2 < T::zero() {
            return Err(invalid("alpha", "couplings must be non-negative"));
        }
        let alpha_t = alpha1.hypot(alpha2);
        if alpha_t <= T::zero() {
            return Err(invalid("alpha", "at least one qubit must be coupled"));
        }
        Ok(Self {
            alpha1,
            alpha2,
            alpha_t,
            r1: alpha1 / alpha_t,
            r2: alpha2 / alpha_t,
        })
    }

    /// Builds couplings from the collective strength and `r₁ ∈ [0, 1]`;
    /// `r₂ = √(1 − r₁²)`.
    pub fn from_relative(alpha_t: T, r1: T) -> Result<Self> {
        if !alpha_t.is_finite() || !r1.is_finite() {
            return Err(Error::NonFinite("alpha_t/r1"));
        }
        if alpha_t <= T::zero() {
            return Err(invalid("alpha_t", "must be positive"));
        }
        if r1 < T::zero() || r1 > T::one() {
            return Err(invalid("r1", format!("must lie in [0, 1], got {r1}")));
        }
        let r2 = (T::one() - r1 * r1).max(T::zero()).sqrt();
        Ok(Self {
            alpha1: alpha_t * r1,
            alpha2: alpha_t * r2,
            alpha_t,
            r1,
            r2,
        })
    }

    /// Unit collective coupling with relative strength `r1`.
    pub fn unit(r1: T) -> Result<Self> {
        Self::from_relative(T::one(), r1)
    }

    pub fn alpha1(&self) -> T {
        self.alpha1
    }

    pub fn alpha2(&self) -> T {
        self.alpha2
    }

    pub fn alpha_t(&self) -> T {
        self.alpha_t
    }

    pub fn r1(&self) -> T {
        self.r1
    }

    pub fn r2(&self) -> T {
        self.r2
    }
}

/// Derived frequency scales of a reservoir/coupling pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeParams<T> {
    /// Vacuum Rabi frequency `α_T W`.
    pub rabi: T,
    /// Dimensionless ratio of the Rabi frequency to `λ`.
    pub big_r: T,
    /// Signed `Ω² = λ² − 4·rabi²`.
    pub omega_sq: T,
    /// Markovian decay rate `2·rabi²/λ`.
    pub markov_rate: T,
}

impl<T: Real> RegimeParams<T> {
    pub fn new(reservoir: &ReservoirSpec<T>, coupling: &CouplingSpec<T>) -> Self {
        let rabi = coupling.alpha_t() * reservoir.w();
        let lambda = reservoir.lambda();
        let two = T::lit(2.0);
        Self {
            rabi,
            big_r: rabi / lambda,
            omega_sq: lambda * lambda - T::lit(4.0) * rabi * rabi,
            markov_rate: two * rabi * rabi / lambda,
        }
    }

    /// Underdamped (good cavity) regime, where `Ω` is imaginary.
    pub fn is_oscillatory(&self) -> bool {
        self.omega_sq < T::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_strengths_are_normalized() {
        for &r1 in &[0.0, 0.3, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.87, 1.0] {
            let c = CouplingSpec::from_relative(2.5, r1).unwrap();
            assert!((c.r1() * c.r1() + c.r2() * c.r2() - 1.0).abs() < 1e-12);
            assert!(c.r2() >= 0.0);
            let back = CouplingSpec::from_alphas(c.alpha1(), c.alpha2()).unwrap();
            assert!((back.alpha_t() - 2.5).abs() < 1e-12);
            assert!((back.r1() - r1).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_couplings() {
        assert!(CouplingSpec::from_relative(1.0, 1.2).is_err());
        assert!(CouplingSpec::from_relative(1.0, -0.1).is_err());
        assert!(CouplingSpec::from_relative(0.0, 0.5).is_err());
        assert!(CouplingSpec::from_alphas(-1.0, 0.5).is_err());
        assert!(CouplingSpec::from_alphas(0.0, 0.0).is_err());
        assert!(CouplingSpec::from_alphas(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn rejects_bad_reservoir() {
        assert!(ReservoirSpec::new(0.0, 1.0, 0.0).is_err());
        assert!(ReservoirSpec::new(1.0, -1.0, 0.0).is_err());
        assert!(ReservoirSpec::new(1.0, f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn kernel_is_positive_and_decreasing() {
        let res = ReservoirSpec::new(3.0, 0.7, 5.0).unwrap();
        assert_eq!(res.correlation(0.0), 9.0);
        let mut prev = res.correlation(0.0);
        for i in 1..200 {
            let f = res.correlation(i as f64 * 0.1);
            assert!(f > 0.0 && f < prev);
            prev = f;
        }
        // peak height W²/(πλ) at resonance
        assert!((res.spectral_density(5.0) - 9.0 / (std::f64::consts::PI * 0.7)).abs() < 1e-12);
    }

    #[test]
    fn regime_classification() {
        let coup = CouplingSpec::unit(0.6).unwrap();
        for &(big_r, osc) in &[(0.1f64, false), (0.49, false), (0.51, true), (10.0, true)] {
            let res = ReservoirSpec::for_ratio(big_r, &coup).unwrap();
            let p = RegimeParams::new(&res, &coup);
            assert!((p.big_r - big_r).abs() < 1e-12);
            assert_eq!(p.is_oscillatory(), osc);
            assert!(p.markov_rate > 0.0);
            assert!((p.markov_rate - 2.0 * big_r * big_r).abs() < 1e-12);
        }
    }
}
