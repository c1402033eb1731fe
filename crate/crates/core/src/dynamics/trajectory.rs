use crate::error::{invalid, Result};
use crate::model::{pair_concurrence, Amplitudes};
use crate::scalar::{Amp, Real};

/// Qubit amplitudes sampled on a uniform time grid `τ_i = i·dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T> {
    pub tau: Vec<T>,
    pub c1: Vec<Amp<T>>,
    pub c2: Vec<Amp<T>>,
}

impl<T: Real> Trajectory<T> {
    pub(crate) fn with_capacity(n: usize) -> Self {
        Self {
            tau: Vec::with_capacity(n),
            c1: Vec::with_capacity(n),
            c2: Vec::with_capacity(n),
        }
    }

    pub(crate) fn push(&mut self, tau: T, c1: Amp<T>, c2: Amp<T>) {
        self.tau.push(tau);
        self.c1.push(c1);
        self.c2.push(c2);
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn amplitudes(&self, i: usize) -> Amplitudes<T> {
        Amplitudes::new(self.c1[i], self.c2[i], self.tau[i])
    }

    pub fn concurrence(&self) -> Vec<T> {
        self.c1
            .iter()
            .zip(&self.c2)
            .map(|(&a, &b)| pair_concurrence(a, b))
            .collect()
    }

    /// Rows `(τ, Re c₁, Im c₁, Re c₂, Im c₂)`.
    pub fn rows(&self) -> impl Iterator<Item = [T; 5]> + '_ {
        (0..self.len()).map(move |i| {
            [
                self.tau[i],
                self.c1[i].re,
                self.c1[i].im,
                self.c2[i].re,
                self.c2[i].im,
            ]
        })
    }

    /// Largest `max(|Δc₁|, |Δc₂|)` over a shared grid.
    pub fn max_abs_difference(&self, other: &Self) -> Result<T> {
        if self.len() != other.len() {
            return Err(invalid(
                "trajectory",
                format!("grid lengths differ: {} vs {}", self.len(), other.len()),
            ));
        }
        let mut worst = T::zero();
        for i in 0..self.len() {
            let dt = (self.tau[i] - other.tau[i]).abs();
            if dt > T::tol(1e-9) * (T::one() + self.tau[i].abs()) {
                return Err(invalid("trajectory", format!("grids differ at index {i}")));
            }
            worst = worst
                .max((self.c1[i] - other.c1[i]).norm())
                .max((self.c2[i] - other.c2[i]).norm());
        }
        Ok(worst)
    }

    /// Largest deviation from a reference solution evaluated on this grid.
    pub fn max_abs_error<F>(&self, mut reference: F) -> Result<T>
    where
        F: FnMut(T) -> Result<Amplitudes<T>>,
    {
        let mut worst = T::zero();
        for i in 0..self.len() {
            let r = reference(self.tau[i])?;
            worst = worst
                .max((self.c1[i] - r.c1).norm())
                .max((self.c2[i] - r.c2).norm());
        }
        Ok(worst)
    }
}
