//! Single-excitation states of the qubit pair.

use num_complex::Complex;

use crate::error::{invalid, Error, Result};
use crate::model::params::CouplingSpec;
use crate::scalar::{is_finite_complex, real, Amp, Real};

/// Initial qubit state `c01 |10⟩ + c02 |01⟩` with the reservoir in vacuum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialState<T> {
    c01: Amp<T>,
    c02: Amp<T>,
    separability: Option<(T, T)>,
}

impl<T: Real> InitialState<T> {
    /// `c01 = √((1−s)/2)`, `c02 = √((1+s)/2)·e^{iφ}` with `s ∈ [−1, 1]`.
    pub fn from_separability(s: T, phi: T) -> Result<Self> {
        if !s.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite("s/phi"));
        }
        if s < -T::one() || s > T::one() {
            return Err(invalid("s", format!("must lie in [-1, 1], got {s}")));
        }
        let half = T::lit(0.5);
        let a = ((T::one() - s) * half).sqrt();
        let b = ((T::one() + s) * half).sqrt();
        Ok(Self {
            c01: real(a),
            c02: Complex::from_polar(b, phi),
            separability: Some((s, phi)),
        })
    }

    /// Arbitrary normalized amplitudes.
    pub fn from_amplitudes(c01: Amp<T>, c02: Amp<T>) -> Result<Self> {
        if !is_finite_complex(c01) || !is_finite_complex(c02) {
            return Err(Error::NonFinite("initial amplitudes"));
        }
        let norm = c01.norm_sqr() + c02.norm_sqr();
        if (norm - T::one()).abs() > T::tol(1e-12) {
            return Err(Error::NotNormalized(norm.as_f64()));
        }
        Ok(Self {
            c01,
            c02,
            separability: None,
        })
    }

    /// The decoherence-free state `r₂|10⟩ − r₁|01⟩`.
    pub fn sub_radiant(coupling: &CouplingSpec<T>) -> Self {
        Self {
            c01: real(coupling.r2()),
            c02: real(-coupling.r1()),
            separability: None,
        }
    }

    /// The decaying state `r₁|10⟩ + r₂|01⟩`.
    pub fn super_radiant(coupling: &CouplingSpec<T>) -> Self {
        Self {
            c01: real(coupling.r1()),
            c02: real(coupling.r2()),
            separability: None,
        }
    }

    pub fn c01(&self) -> Amp<T> {
        self.c01
    }

    pub fn c02(&self) -> Amp<T> {
        self.c02
    }

    /// `s`, when the state was built from `(s, φ)`.
    pub fn separability(&self) -> Option<T> {
        self.separability.map(|(s, _)| s)
    }

    /// `φ`, when the state was built from `(s, φ)`.
    pub fn phase(&self) -> Option<T> {
        self.separability.map(|(_, phi)| phi)
    }
}

/// Overlaps of a state with the sub-radiant (`ψ₋ = r₂|10⟩ − r₁|01⟩`) and
/// super-radiant (`ψ₊ = r₁|10⟩ + r₂|01⟩`) states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellBasis<T> {
    pub beta_minus: Amp<T>,
    pub beta_plus: Amp<T>,
}

impl<T: Real> BellBasis<T> {
    pub fn new(coupling: &CouplingSpec<T>, init: &InitialState<T>) -> Self {
        Self::decompose(coupling, init.c01, init.c02)
    }

    /// Projects arbitrary (possibly unnormalized) single-excitation
    /// amplitudes onto `ψ±`. The `r_j` are real, so the overlap needs no
    /// conjugation.
    pub fn decompose(coupling: &CouplingSpec<T>, c1: Amp<T>, c2: Amp<T>) -> Self {
        let (r1, r2) = (coupling.r1(), coupling.r2());
        Self {
            beta_minus: c1 * r2 - c2 * r1,
            beta_plus: c1 * r1 + c2 * r2,
        }
    }

    /// Recombines the components after the super-radiant part has been
    /// multiplied by `survival`.
    pub fn recombine(&self, coupling: &CouplingSpec<T>, survival: T) -> (Amp<T>, Amp<T>) {
        let (r1, r2) = (coupling.r1(), coupling.r2());
        let plus = self.beta_plus * survival;
        (
            self.beta_minus * r2 + plus * r1,
            -self.beta_minus * r1 + plus * r2,
        )
    }
}

/// Qubit amplitudes `c₁, c₂` at dimensionless time `τ = λt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Amplitudes<T> {
    pub c1: Amp<T>,
    pub c2: Amp<T>,
    pub tau: T,
}

impl<T: Real> Amplitudes<T> {
    pub fn new(c1: Amp<T>, c2: Amp<T>, tau: T) -> Self {
        Self { c1, c2, tau }
    }

    /// Probability that the excitation is still on the qubits.
    pub fn excited_population(&self) -> T {
        self.c1.norm_sqr() + self.c2.norm_sqr()
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !is_finite_complex(self.c1) || !is_finite_complex(self.c2) {
            return Err(Error::NonFinite("amplitudes"));
        }
        let norm = self.excited_population();
        if norm > T::one() + T::tol(1e-10) {
            return Err(Error::ExceedsUnitNorm(norm.as_f64()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn separability_parametrization() {
        let st = InitialState::<f64>::from_separability(0.3, 1.1).unwrap();
        assert!((st.c01().norm_sqr() + st.c02().norm_sqr() - 1.0).abs() < 1e-12);
        assert!((st.c01().re - 0.35f64.sqrt()).abs() < 1e-15);
        assert!((st.c02().arg() - 1.1).abs() < 1e-12);
        assert_eq!(st.separability(), Some(0.3));
        assert!(InitialState::from_separability(1.5, 0.0).is_err());
    }

    #[test]
    fn raw_amplitudes_must_be_normalized() {
        let z = Complex::new(0.6, 0.0);
        let w = Complex::new(0.0, 0.8);
        assert!(InitialState::from_amplitudes(z, w).is_ok());
        assert!(matches!(
            InitialState::from_amplitudes(z, z),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn bell_overlaps_are_unitary() {
        let coup = CouplingSpec::unit(0.87).unwrap();
        for &(s, phi) in &[(-1.0, 0.0), (0.0, PI), (0.4, 2.0), (1.0, 0.3)] {
            let init = InitialState::from_separability(s, phi).unwrap();
            let b = BellBasis::new(&coup, &init);
            assert!((b.beta_minus.norm_sqr() + b.beta_plus.norm_sqr() - 1.0).abs() < 1e-12);
            let (c1, c2) = b.recombine(&coup, 1.0);
            assert!((c1 - init.c01()).norm() < 1e-15);
            assert!((c2 - init.c02()).norm() < 1e-15);
        }
    }

    #[test]
    fn phi_pi_symmetric_state_is_sub_radiant() {
        let coup = CouplingSpec::unit(FRAC_1_SQRT_2).unwrap();
        let init = InitialState::from_separability(0.0, PI).unwrap();
        let b = BellBasis::new(&coup, &init);
        assert!(b.beta_plus.norm() < 1e-15);
        assert!((b.beta_minus.norm() - 1.0).abs() < 1e-15);
    }
}
