use num_complex::Complex;

use crate::error::Result;
use crate::model::state::Amplitudes;
use crate::scalar::{real, Amp, Real};

/// Reduced two-qubit state in the ordered basis `{|11⟩, |10⟩, |01⟩, |00⟩}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4<T> {
    entries: [[Amp<T>; 4]; 4],
}

impl<T: Real> DensityMatrix4<T> {
    /// Wraps raw entries without checking any physical constraint.
    pub fn from_entries(entries: [[Amp<T>; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[[Amp<T>; 4]; 4] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Amp<T> {
        self.entries[row][col]
    }

    pub fn trace(&self) -> Amp<T> {
        (0..4).map(|i| self.entries[i][i]).sum()
    }

    /// Largest `|ρ_ij − ρ_ji*|`.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..4 {
            for j in i..4 {
                worst = worst.max((self.entries[i][j] - self.entries[j][i].conj()).norm());
            }
        }
        worst
    }

    /// Population of `|00⟩`.
    pub fn ground_population(&self) -> T {
        self.entries[3][3].re
    }
}

/// Builds the reduced state: `|c₁|²`, `c₁c₂*`, `c₁*c₂`, `|c₂|²` in the
/// single-excitation block and `1 − |c₁|² − |c₂|²` on `|00⟩`.
pub fn density_matrix<T: Real>(amps: &Amplitudes<T>) -> Result<DensityMatrix4<T>> {
    amps.validate()?;
    let (c1, c2) = (amps.c1, amps.c2);
    let zero = Complex::new(T::zero(), T::zero());
    let mut entries = [[zero; 4]; 4];
    entries[1][1] = real(c1.norm_sqr());
    entries[1][2] = c1 * c2.conj();
    entries[2][1] = c1.conj() * c2;
    entries[2][2] = real(c2.norm_sqr());
    entries[3][3] = real(T::one() - c1.norm_sqr() - c2.norm_sqr());
    Ok(DensityMatrix4 { entries })
}
