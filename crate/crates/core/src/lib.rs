//! Exact entanglement dynamics of two qubits sharing a lossy resonator.
//!
//! Two resonant qubits couple with strengths `α₁, α₂` to a common reservoir
//! with Lorentzian spectral density of width `λ`. With at most one excitation
//! the reduced dynamics is solved exactly: the sub-radiant combination of the
//! qubits is decoherence-free, the super-radiant one decays with a survival
//! amplitude `E(τ)` that oscillates in the good-cavity regime.
//!
//! * [`model`]: parameters, states, the closed-form solution and concurrence.
//! * [`dynamics`]: independent numerical solvers used as oracles.
//! * [`zeno`]: protection of entanglement by repeated measurements.
//! * [`optimize`]: grid + golden-section maximization.
//!
//! All times are dimensionless, `τ = λt`. Everything is generic over the
//! scalar type through [`Real`]; the aliases below fix it to `f64`.

pub mod dynamics;
pub mod error;
pub mod model;
pub mod optimize;
pub mod scalar;
pub mod zeno;

pub use error::{Error, Result};
pub use optimize::{golden_section_max, maximize_1d, maximize_2d, Maximum};
pub use scalar::{Amp, Real};

pub use dynamics::{
    bath_modes, solve_aux_ode, solve_discretized_bath, solve_volterra, BathMode, BathReport,
    BathSolution, KernelSpec, SolverConfig, SolverMethod, Trajectory,
};
pub use model::{
    amplitudes_at, concurrence_closed, concurrence_wootters, density_matrix,
    stationary_concurrence, survival_amplitude, Amplitudes, BellBasis, CouplingSpec,
    DensityMatrix4, InitialState, RegimeParams, ReservoirSpec,
};
pub use zeno::{
    concurrence_measured, concurrence_measured_at, simulate_stroboscopic,
    survival_probability_measured, zeno_rate, MeasurementSchedule, StroboscopicRun,
    StroboscopicSample, ZenoRate,
};

pub type Reservoir = ReservoirSpec<f64>;
pub type Coupling = CouplingSpec<f64>;
pub type Regime = RegimeParams<f64>;
pub type State = InitialState<f64>;
pub type Bell = BellBasis<f64>;
pub type Amps = Amplitudes<f64>;
pub type Rho = DensityMatrix4<f64>;
pub type Kernel = KernelSpec<f64>;
pub type Solver = SolverConfig<f64>;
pub type Schedule = MeasurementSchedule<f64>;

pub type Reservoir32 = ReservoirSpec<f32>;
pub type Coupling32 = CouplingSpec<f32>;
pub type State32 = InitialState<f32>;
pub type Amps32 = Amplitudes<f32>;
