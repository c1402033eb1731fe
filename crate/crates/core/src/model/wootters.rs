//! General two-qubit concurrence from the spin-flipped density matrix.
//!
//! Works for any two-qubit state, so it serves as an independent check of the
//! closed-form `2|c₁c₂*|` used for the single-excitation family.
//!
//! With `ρ = X X†` (columns of `X` are the subnormalized eigenvectors
//! `√μ_i v_i`) and `X̃ = (σy⊗σy) X*`, the square roots of the eigenvalues of
//! `ρ (σy⊗σy) ρ* (σy⊗σy)` are the singular values of `X† X̃`. Taking singular
//! values directly avoids the square root of numerically tiny eigenvalues.

use nalgebra::{Complex, DMatrix, Matrix4, RealField};
use num_traits::Float;

use crate::error::{Error, Result};
use crate::model::density::DensityMatrix4;
use crate::scalar::Real;

/// Concurrence `max(0, √λ₁ − √λ₂ − √λ₃ − √λ₄)`, with `λ_i` the descending
/// eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)`.
pub fn concurrence_wootters<T>(rho: &DensityMatrix4<T>) -> Result<T>
where
    T: Real + RealField,
{
    let tol = <T as Real>::tol(1e-10);
    let defect = rho.hermiticity_defect();
    if !Float::is_finite(defect) {
        return Err(Error::NonFinite("density matrix"));
    }
    if defect > tol {
        return Err(Error::NotHermitian(defect.as_f64()));
    }

    let m = Matrix4::from_fn(|i, j| {
        let a = rho.get(i, j);
        let b = rho.get(j, i);
        let half = <T as Real>::lit(0.5);
        Complex::new((a.re + b.re) * half, (a.im - b.im) * half)
    });
    let eig = m.symmetric_eigen();

    let mut max_mu = T::zero();
    let mut min_mu = T::zero();
    for &mu in eig.eigenvalues.iter() {
        max_mu = Float::max(max_mu, mu);
        min_mu = Float::min(min_mu, mu);
    }
    if min_mu < -tol {
        return Err(Error::NotPositive(min_mu.as_f64()));
    }
    let cut = <T as Float>::epsilon() * <T as Real>::lit(64.0) * Float::max(max_mu, T::one());

    let kept: Vec<usize> = (0..4).filter(|&k| eig.eigenvalues[k] > cut).collect();
    if kept.is_empty() {
        return Ok(T::zero());
    }
    let x = DMatrix::from_fn(4, kept.len(), |i, k| {
        let col = kept[k];
        eig.eigenvectors[(i, col)] * Complex::new(Float::sqrt(eig.eigenvalues[col]), T::zero())
    });
    // σy⊗σy in the {|11⟩, |10⟩, |01⟩, |00⟩} ordering: reverses the basis and
    // flips the sign of the |11⟩ and |00⟩ components.
    let x_flip = DMatrix::from_fn(4, kept.len(), |i, k| {
        let sign = if i == 0 || i == 3 {
            -T::one()
        } else {
            T::one()
        };
        x[(3 - i, k)].conj() * Complex::new(sign, T::zero())
    });
    let overlap = x.adjoint() * x_flip;
    let mut sv: Vec<T> = overlap.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    let mut c = sv[0];
    for &s in &sv[1..] {
        c -= s;
    }
    Ok(Float::max(c, T::zero()))
}
