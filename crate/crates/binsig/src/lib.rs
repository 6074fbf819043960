//! Solvers for binary Gaussian signaling games.
//!
//! A transmitter sends one of two signal levels through additive Gaussian
//! noise and a receiver decides which hypothesis produced the observation.
//! Each side carries its own priors and decision costs, so the interaction
//! is a game rather than a plain detection problem. This crate computes and
//! classifies the equilibria of that game:
//!
//! - [`team::solve_team`] — the common-interest benchmark: identical priors
//!   and costs, solved by maximum separation plus a likelihood-ratio test
//!   whenever the cost-weighted prior ratio `tau` lies in `(0, inf)`.
//! - [`stackelberg::solve_stackelberg`] — the transmitter commits first.
//!   The optimal normalized signal distance follows a closed-form case
//!   analysis on `ln(tau) (k0 - k1)` and `k0 + k1`, including interior
//!   optima strictly between babbling and full separation.
//! - [`nash::classify_nash`] — simultaneous play, classified by the
//!   cost-difference ratios `xi0`, `xi1` and the power limits into unique
//!   informative, non-informative, or no pure equilibrium (best responses
//!   cycle forever); [`nash::best_response_dynamics`] exhibits the cycling.
//! - [`oracle`] — definitional grid-search verification of both equilibrium
//!   concepts, independent of the closed forms.
//! - [`robustness`] — perturbation sweeps around the team setup showing the
//!   Stackelberg solution flipping under tiny parameter shifts while the
//!   Nash classification stays put.
//! - [`presets`] — ready-made scenario builders, including the benchmark
//!   instance with interior optimum `d* = 0.4704`.

pub mod detection;
pub mod error;
pub mod nash;
pub mod oracle;
pub mod presets;
pub mod report;
pub mod rng;
pub mod robustness;
pub mod stackelberg;
pub mod team;

pub use detection::{
    agent_risk, bayes_risk, error_probabilities, lrt_best_response, prior_only_decision,
    q_function, AgentSpec, CostMatrix, DecisionRule, ErrorProbabilities, GameConfig, Priors,
    SignalPair,
};
pub use error::{Error, Result};
pub use nash::{
    best_response_dynamics, classify_nash, construct_nash, transmitter_best_response, xi_params,
    BrOutcome, BrStep, BrTrajectory, NashClassification, NashTag,
};
pub use oracle::{
    find_grid_nash_profile, grid_receiver_best_response, grid_transmitter_best_response,
    verify_nash, verify_stackelberg, GridSpec,
};
pub use presets::{
    biased_cost_config, figure1_config, subjective_priors_config, BiasedCostScenario,
};
pub use report::EquilibriumReport;
pub use robustness::{
    nash_robustness_check, perturb, stackelberg_corner_sweep, stackelberg_flip_witness,
    Perturbation, RobustnessRecord, RobustnessReport, RobustnessTarget,
};
pub use stackelberg::{
    classify_subjective_priors, derived_params, optimal_distance, risks_of_distance,
    solve_stackelberg, transmitter_risk_of_distance, PriorQuadrant, StackelbergParams,
    StackelbergSolution, SubjectivePriorsOutcome, TableCell,
};
pub use team::{solve_team, tau_is_informative, tau_of, TeamSolution};
