//! Independent numerical solvers for the qubit amplitudes.
//!
//! Three discretizations of the same dynamics: the memory-kernel form
//! ([`solve_volterra`]), its exact pseudomode reduction for the Lorentzian
//! kernel ([`solve_aux_ode`]) and an explicit finite bath
//! ([`solve_discretized_bath`]). None of them uses the closed-form survival
//! amplitude, so each can be checked against it.

mod aux_ode;
mod bath;
mod config;
mod kernel;
mod rk4;
mod trajectory;
mod volterra;

pub use aux_ode::solve_aux_ode;
pub use bath::{bath_modes, solve_discretized_bath, BathMode, BathReport, BathSolution};
pub use config::{SolverConfig, SolverMethod};
pub use kernel::KernelSpec;
pub use trajectory::Trajectory;
pub use volterra::solve_volterra;
