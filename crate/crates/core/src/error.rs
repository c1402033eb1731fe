use thiserror::Error;

/// Errors raised by model construction, evaluation and the numerical solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("non-finite value for {0}")]
    NonFinite(&'static str),

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("initial state is not normalized: |c01|^2 + |c02|^2 = {0}")]
    NotNormalized(f64),

    #[error("amplitudes exceed unit norm: |c1|^2 + |c2|^2 = {0}")]
    ExceedsUnitNorm(f64),

    #[error("density matrix is not Hermitian (max deviation {0})")]
    NotHermitian(f64),

    #[error("density matrix is not positive semidefinite (min eigenvalue {0})")]
    NotPositive(f64),

    #[error(
        "measurement interval {0} coincides with a zero of the survival amplitude; γ_z divergent"
    )]
    SurvivalZero(f64),

    #[error("step {dt} under-resolves the dynamics; need dt < {limit}")]
    UnderResolved { dt: f64, limit: f64 },

    #[error("{0}")]
    Unsupported(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
