//! Common-interest (team) solution and its informativeness classification.
//!
//! With identical priors and costs the game collapses to classical Bayesian
//! detection: when `tau = pi0 (c10 - c00) / (pi1 (c01 - c11))` lies in
//! `(0, inf)` the observation is worth using and maximum signal separation is
//! optimal; otherwise one constant decision dominates and signaling is
//! pointless.

use serde::{Deserialize, Serialize};

use crate::detection::{
    agent_risk, lrt_best_response, prior_only_decision, AgentSpec, DecisionRule, GameConfig,
    SignalPair,
};
use crate::error::{Error, Result};

/// Cost-weighted prior ratio `pi0 (c10 - c00) / (pi1 (c01 - c11))`.
///
/// Returns `+inf`/`-inf` when only the denominator vanishes and NaN for the
/// fully degenerate 0/0 case; both are treated as non-informative.
pub fn tau_of(agent: &AgentSpec) -> f64 {
    (agent.priors.pi0 * agent.costs.delta0()) / (agent.priors.pi1 * agent.costs.delta1())
}

/// True when `tau` lies strictly inside `(0, inf)`.
pub fn tau_is_informative(tau: f64) -> bool {
    tau.is_finite() && tau > 0.0
}

/// Outcome of the team problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TeamSolution {
    pub tau: f64,
    pub informative: bool,
    pub signals: SignalPair,
    pub rule: DecisionRule,
    /// The common Bayes risk of both agents.
    pub risk: f64,
}

/// Solves the team problem for a config with identical agent specs.
///
/// Informative solutions use maximum separation in canonical orientation
/// (`s0 = -sqrt(P0)`, `s1 = +sqrt(P1)`) with the matching LRT rule;
/// non-informative ones send nothing and decide from priors. A config with
/// no signaling power (`P0 = P1 = 0`) is reported non-informative even when
/// `tau` lies in `(0, inf)`, since no separation is realizable.
pub fn solve_team(config: &GameConfig) -> Result<TeamSolution> {
    if !config.is_team() {
        return Err(Error::NotTeamConfig(
            "solve_team requires identical transmitter and receiver specs".into(),
        ));
    }
    let spec = &config.receiver;
    let tau = tau_of(spec);
    let (a0, a1) = config.max_amplitudes();
    let informative = tau_is_informative(tau) && a0 + a1 > 0.0;
    let (signals, rule) = if informative {
        let signals = SignalPair { s0: -a0, s1: a1 };
        let rule = lrt_best_response(spec, &signals, config.sigma)?;
        (signals, rule)
    } else {
        (SignalPair { s0: 0.0, s1: 0.0 }, prior_only_decision(spec))
    };
    let risk = agent_risk(spec, &signals, &rule, config.sigma)?;
    Ok(TeamSolution {
        tau,
        informative,
        signals,
        rule,
        risk,
    })
}
