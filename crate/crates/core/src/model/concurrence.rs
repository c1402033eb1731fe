use crate::error::Result;
use crate::model::params::CouplingSpec;
use crate::model::state::{Amplitudes, BellBasis, InitialState};
use crate::scalar::Real;

/// Concurrence `2|c₁c₂*|` of the reduced state built from `amps`.
pub fn concurrence_closed<T: Real>(amps: &Amplitudes<T>) -> Result<T> {
    amps.validate()?;
    Ok(pair_concurrence(amps.c1, amps.c2))
}

#[inline]
pub(crate) fn pair_concurrence<T: Real>(c1: crate::scalar::Amp<T>, c2: crate::scalar::Amp<T>) -> T {
    T::lit(2.0) * (c1 * c2.conj()).norm()
}

/// Long-time concurrence `2 r₁ r₂ |β₋|²`, left behind by the sub-radiant
/// component once the super-radiant part has decayed.
pub fn stationary_concurrence<T: Real>(coupling: &CouplingSpec<T>, init: &InitialState<T>) -> T {
    let basis = BellBasis::new(coupling, init);
    T::lit(2.0) * coupling.r1() * coupling.r2() * basis.beta_minus.norm_sqr()
}
