//! Builders for the motivating scenarios.

use serde::{Deserialize, Serialize};

use crate::detection::{AgentSpec, CostMatrix, GameConfig, Priors};
use crate::error::{Error, Result};

/// Biased-transmitter-cost scenario: both agents share priors, the receiver
/// scores plain decision errors, and the transmitter's costs are flipped
/// with probability `1 - alpha` by a random bias bit. Taking the expectation
/// over the bit collapses the transmitter's matrix to
/// `c01 = c10 = alpha`, `c00 = c11 = 1 - alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiasedCostScenario {
    /// Shared prior of hypothesis 0, strictly inside (0, 1).
    pub pi0: f64,
    /// Probability that the two cost functions are aligned.
    pub alpha: f64,
    pub p0: f64,
    pub p1: f64,
    pub sigma: f64,
}

impl Default for BiasedCostScenario {
    fn default() -> Self {
        BiasedCostScenario {
            pi0: 0.5,
            alpha: 0.5,
            p0: 1.0,
            p1: 1.0,
            sigma: 1.0,
        }
    }
}

/// Builds the biased-cost game.
pub fn biased_cost_config(sc: &BiasedCostScenario) -> Result<GameConfig> {
    if !(sc.alpha >= 0.0 && sc.alpha <= 1.0) {
        return Err(Error::config(
            "alpha",
            format!("must lie in [0, 1], got {}", sc.alpha),
        ));
    }
    if !(sc.pi0 > 0.0 && sc.pi0 < 1.0) {
        return Err(Error::config(
            "pi0",
            format!("must lie strictly inside (0, 1), got {}", sc.pi0),
        ));
    }
    let priors = Priors::from_pi0(sc.pi0)?;
    let transmitter = AgentSpec::new(
        priors,
        CostMatrix::new(1.0 - sc.alpha, sc.alpha, sc.alpha, 1.0 - sc.alpha)?,
    );
    let receiver = AgentSpec::new(priors, CostMatrix::zero_one());
    GameConfig::new(transmitter, receiver, sc.p0, sc.p1, sc.sigma)
}

/// Builds the subjective-priors game: a shared cost matrix with per-agent
/// priors. The mutual-absolute-continuity requirement is enforced by
/// [`GameConfig::new`].
pub fn subjective_priors_config(
    pi0_t: f64,
    pi0_r: f64,
    costs: CostMatrix,
    p0: f64,
    p1: f64,
    sigma: f64,
) -> Result<GameConfig> {
    let transmitter = AgentSpec::new(Priors::from_pi0(pi0_t)?, costs);
    let receiver = AgentSpec::new(Priors::from_pi0(pi0_r)?, costs);
    GameConfig::new(transmitter, receiver, p0, p1, sigma)
}

/// The benchmark instance behind the transmitter risk-versus-distance curve:
/// receiver costs `(0, 0.4, 0.9, 0)`, transmitter costs
/// `(0.6, 0.4, 0.4, 0.6)`, shared `pi0 = 0.25`, unit power limits and
/// `sigma = 0.1`. Its optimal distance is `d* = 0.4704`.
pub fn figure1_config() -> GameConfig {
    let priors = Priors::from_pi0(0.25).expect("valid priors");
    let transmitter = AgentSpec::new(
        priors,
        CostMatrix::new(0.6, 0.4, 0.4, 0.6).expect("valid costs"),
    );
    let receiver = AgentSpec::new(
        priors,
        CostMatrix::new(0.0, 0.4, 0.9, 0.0).expect("valid costs"),
    );
    GameConfig::new(transmitter, receiver, 1.0, 1.0, 0.1).expect("valid config")
}
