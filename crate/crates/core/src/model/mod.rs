//! Domain types and the exact closed-form solution.

mod concurrence;
mod density;
mod evolution;
mod params;
mod state;
mod wootters;

pub(crate) use concurrence::pair_concurrence;
pub use concurrence::{concurrence_closed, stationary_concurrence};
pub use density::{density_matrix, DensityMatrix4};
pub(crate) use evolution::survival_for_ratio;
pub use evolution::{amplitudes_at, survival_amplitude};
pub use params::{CouplingSpec, RegimeParams, ReservoirSpec};
pub use state::{Amplitudes, BellBasis, InitialState};
pub use wootters::concurrence_wootters;
