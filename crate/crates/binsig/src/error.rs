use thiserror::Error;

/// Errors raised by configuration validation and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A configuration field violates its invariant. `path` names the field
    /// (e.g. `transmitter.priors`, `channel.sigma`).
    #[error("invalid config at {path}: {reason}")]
    InvalidConfig { path: String, reason: String },

    /// An operation that requires identical transmitter and receiver agent
    /// specs was called on a non-team config.
    #[error("transmitter and receiver specs differ: {0}")]
    NotTeamConfig(String),

    /// A signal level is NaN or infinite.
    #[error("signal levels must be finite, got ({s0}, {s1})")]
    NonFiniteSignal { s0: f64, s1: f64 },

    /// A signal pair violates the power constraints.
    #[error("signals ({s0}, {s1}) violate power limits (P0 = {p0}, P1 = {p1})")]
    PowerConstraint { s0: f64, s1: f64, p0: f64, p1: f64 },

    /// The transmitter risk-versus-distance curve is only defined for
    /// 0 < tau < infinity; outside that range the receiver ignores the channel.
    #[error("risk curve undefined: tau = {tau} is not in (0, inf)")]
    CurveUndefined { tau: f64 },

    /// A normalized distance outside [0, d_max] was requested.
    #[error("distance {d} outside [0, {d_max}]")]
    DistanceOutOfRange { d: f64, d_max: f64 },

    /// A subjective-priors operation was called on a config whose agents do
    /// not share a cost matrix.
    #[error("cost matrices differ between transmitter and receiver")]
    CostMatrixMismatch,

    /// A constructed equilibrium profile failed oracle validation. This
    /// indicates a solver bug, not a property of the input.
    #[error("constructed profile failed mutual-best-response validation: {0}")]
    EquilibriumValidationFailed(String),

    /// The perturbation bound is too large for the Nash robustness guarantee.
    #[error(
        "eps bound {bound} is not strictly below both receiver cost differences \
         ({dc0} and {dc1}); the sign of xi is no longer guaranteed"
    )]
    EpsBoundTooLarge { bound: f64, dc0: f64, dc1: f64 },

    /// A perturbed spec violates the type invariants (negative cost, prior
    /// outside [0,1], or broken prior sum).
    #[error("perturbation produces an invalid spec: {0}")]
    InvalidPerturbation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
