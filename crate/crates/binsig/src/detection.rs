//! Gaussian binary detection primitives.
//!
//! The observation model is `H_i: Y = s_i + N` with `N ~ N(0, sigma^2)`.
//! Each agent carries its own priors and 2x2 cost matrix; `bayes_risk`
//! evaluates an agent's expected cost for a given error-probability profile,
//! and `lrt_best_response` produces the receiver's optimal decision rule for
//! a fixed signal pair.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for the prior-sum invariant `pi0 + pi1 = 1`.
pub const PRIOR_SUM_TOL: f64 = 1e-12;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Upper-tail probability of the standard normal, `Q(x) = P(Z > x)`.
///
/// Computed through the complementary error function,
/// `Q(x) = erfc(x / sqrt(2)) / 2`, which keeps full relative accuracy in the
/// far tails that the Stackelberg discriminant compares. Total on the
/// extended reals: `Q(-inf) = 1`, `Q(inf) = 0`.
pub fn q_function(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return 0.0;
    }
    if x == f64::NEG_INFINITY {
        return 1.0;
    }
    0.5 * libm::erfc(x * FRAC_1_SQRT_2)
}

/// Prior probabilities of the two hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Priors {
    pub pi0: f64,
    pub pi1: f64,
}

impl Priors {
    pub fn new(pi0: f64, pi1: f64) -> Result<Self> {
        if !pi0.is_finite() || !pi1.is_finite() || pi0 < 0.0 || pi1 < 0.0 {
            return Err(Error::config(
                "priors",
                format!("must be nonnegative and finite, got ({pi0}, {pi1})"),
            ));
        }
        if ((pi0 + pi1) - 1.0).abs() > PRIOR_SUM_TOL {
            return Err(Error::config(
                "priors",
                format!("must sum to 1, got {pi0} + {pi1} = {}", pi0 + pi1),
            ));
        }
        Ok(Priors { pi0, pi1 })
    }

    /// Builds `(pi0, 1 - pi0)`.
    pub fn from_pi0(pi0: f64) -> Result<Self> {
        Priors::new(pi0, 1.0 - pi0)
    }
}

/// Decision costs `c_ji`: the cost of deciding `H_j` when `H_i` is true.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostMatrix {
    pub c00: f64,
    pub c01: f64,
    pub c10: f64,
    pub c11: f64,
}

impl CostMatrix {
    pub fn new(c00: f64, c01: f64, c10: f64, c11: f64) -> Result<Self> {
        for (name, v) in [("c00", c00), ("c01", c01), ("c10", c10), ("c11", c11)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::config(
                    format!("costs.{name}"),
                    format!("must be nonnegative and finite, got {v}"),
                ));
            }
        }
        Ok(CostMatrix { c00, c01, c10, c11 })
    }

    /// Uniform error costs: wrong decisions cost 1, correct ones 0.
    pub fn zero_one() -> Self {
        CostMatrix {
            c00: 0.0,
            c01: 1.0,
            c10: 1.0,
            c11: 0.0,
        }
    }

    /// `c10 - c00`: net cost of a false alarm over a correct rejection.
    pub fn delta0(&self) -> f64 {
        self.c10 - self.c00
    }

    /// `c01 - c11`: net cost of a miss over a correct detection.
    pub fn delta1(&self) -> f64 {
        self.c01 - self.c11
    }
}

/// One player's view of the game: subjective priors plus a cost matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgentSpec {
    pub priors: Priors,
    pub costs: CostMatrix,
}

impl AgentSpec {
    pub fn new(priors: Priors, costs: CostMatrix) -> Self {
        AgentSpec { priors, costs }
    }
}

/// A full game instance: both agents, power limits and the noise level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GameConfig {
    pub transmitter: AgentSpec,
    pub receiver: AgentSpec,
    /// Power limit for the signal sent under `H_0` (`s0^2 <= p0`).
    pub p0: f64,
    /// Power limit for the signal sent under `H_1` (`s1^2 <= p1`).
    pub p1: f64,
    /// Noise standard deviation.
    pub sigma: f64,
}

impl GameConfig {
    pub fn new(
        transmitter: AgentSpec,
        receiver: AgentSpec,
        p0: f64,
        p1: f64,
        sigma: f64,
    ) -> Result<Self> {
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::config(
                "channel.sigma",
                format!("must be positive and finite, got {sigma}"),
            ));
        }
        for (name, p) in [("p0", p0), ("p1", p1)] {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::config(
                    format!("channel.{name}"),
                    format!("must be nonnegative and finite, got {p}"),
                ));
            }
        }
        // Mutual absolute continuity: a hypothesis is impossible for one
        // agent iff it is impossible for the other.
        let pairs = [
            ("pi0", transmitter.priors.pi0, receiver.priors.pi0),
            ("pi1", transmitter.priors.pi1, receiver.priors.pi1),
        ];
        for (name, t, r) in pairs {
            if (t == 0.0) != (r == 0.0) {
                return Err(Error::config(
                    format!("priors.{name}"),
                    format!(
                        "priors must be mutually absolutely continuous: \
                         transmitter {t}, receiver {r}"
                    ),
                ));
            }
        }
        Ok(GameConfig {
            transmitter,
            receiver,
            p0,
            p1,
            sigma,
        })
    }

    /// A common-interest instance: both sides share `spec`.
    pub fn team(spec: AgentSpec, p0: f64, p1: f64, sigma: f64) -> Result<Self> {
        GameConfig::new(spec, spec, p0, p1, sigma)
    }

    /// True when transmitter and receiver specs are identical.
    pub fn is_team(&self) -> bool {
        self.transmitter == self.receiver
    }

    /// Largest admissible signal magnitude under each hypothesis.
    pub fn max_amplitudes(&self) -> (f64, f64) {
        (self.p0.sqrt(), self.p1.sqrt())
    }

    /// Maximum normalized distance `(sqrt(P0) + sqrt(P1)) / sigma`.
    pub fn d_max(&self) -> f64 {
        (self.p0.sqrt() + self.p1.sqrt()) / self.sigma
    }

    /// Power-set membership, with a small relative slack so that amplitudes
    /// built from `sqrt(p)` stay admissible after rounding.
    pub fn admits(&self, s: &SignalPair) -> bool {
        let slack0 = 1e-12 * (1.0 + self.p0);
        let slack1 = 1e-12 * (1.0 + self.p1);
        s.s0 * s.s0 <= self.p0 + slack0 && s.s1 * s.s1 <= self.p1 + slack1
    }

    /// Signals realizing normalized distance `d` in canonical orientation:
    /// both amplitudes scaled by the same fraction of their limits, `s0`
    /// negative and `s1` positive.
    pub fn signals_at_distance(&self, d: f64) -> SignalPair {
        let (a0, a1) = self.max_amplitudes();
        let span = a0 + a1;
        if span == 0.0 || d == 0.0 {
            return SignalPair { s0: 0.0, s1: 0.0 };
        }
        let scale = (d * self.sigma / span).min(1.0);
        SignalPair {
            s0: -scale * a0,
            s1: scale * a1,
        }
    }
}

/// Transmitter strategy: the signal levels sent under each hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignalPair {
    pub s0: f64,
    pub s1: f64,
}

impl SignalPair {
    pub fn new(s0: f64, s1: f64) -> Result<Self> {
        if !s0.is_finite() || !s1.is_finite() {
            return Err(Error::NonFiniteSignal { s0, s1 });
        }
        Ok(SignalPair { s0, s1 })
    }

    /// Normalized distance `|s1 - s0| / sigma`.
    pub fn distance(&self, sigma: f64) -> f64 {
        (self.s1 - self.s0).abs() / sigma
    }
}

/// Receiver strategy: a single-threshold rule on the observation, or a
/// constant rule that ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecisionRule {
    /// Decide `H_1` when `y >= threshold`.
    ThresholdAbove { threshold: f64 },
    /// Decide `H_1` when `y <= threshold`.
    ThresholdBelow { threshold: f64 },
    /// Always decide `H_0`.
    Always0,
    /// Always decide `H_1`.
    Always1,
}

impl DecisionRule {
    pub fn is_constant(&self) -> bool {
        matches!(self, DecisionRule::Always0 | DecisionRule::Always1)
    }

    pub fn threshold(&self) -> Option<f64> {
        match self {
            DecisionRule::ThresholdAbove { threshold }
            | DecisionRule::ThresholdBelow { threshold } => Some(*threshold),
            _ => None,
        }
    }
}

impl std::fmt::Display for DecisionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DecisionRule::ThresholdAbove { threshold } => {
                write!(f, "decide H1 when y >= {threshold}")
            }
            DecisionRule::ThresholdBelow { threshold } => {
                write!(f, "decide H1 when y <= {threshold}")
            }
            DecisionRule::Always0 => write!(f, "always decide H0"),
            DecisionRule::Always1 => write!(f, "always decide H1"),
        }
    }
}

/// Conditional decision probabilities `p_ji = P(decide H_j | H_i true)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorProbabilities {
    pub p00: f64,
    pub p01: f64,
    pub p10: f64,
    pub p11: f64,
}

/// Conditional decision probabilities for a signal pair under a rule.
///
/// Columns sum to one exactly: `p00 = 1 - p10` and `p01 = 1 - p11` are
/// computed by subtraction.
pub fn error_probabilities(
    s: &SignalPair,
    rule: &DecisionRule,
    sigma: f64,
) -> Result<ErrorProbabilities> {
    if !s.s0.is_finite() || !s.s1.is_finite() {
        return Err(Error::NonFiniteSignal { s0: s.s0, s1: s.s1 });
    }
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::config(
            "sigma",
            format!("must be positive, got {sigma}"),
        ));
    }
    let (p10, p11) = match rule {
        DecisionRule::ThresholdAbove { threshold } => (
            q_function((threshold - s.s0) / sigma),
            q_function((threshold - s.s1) / sigma),
        ),
        DecisionRule::ThresholdBelow { threshold } => (
            1.0 - q_function((threshold - s.s0) / sigma),
            1.0 - q_function((threshold - s.s1) / sigma),
        ),
        DecisionRule::Always0 => (0.0, 0.0),
        DecisionRule::Always1 => (1.0, 1.0),
    };
    Ok(ErrorProbabilities {
        p00: 1.0 - p10,
        p01: 1.0 - p11,
        p10,
        p11,
    })
}

/// Bayes risk of an error profile under `agent`'s priors and costs:
/// `pi0 (c00 p00 + c10 p10) + pi1 (c01 p01 + c11 p11)`.
pub fn bayes_risk(agent: &AgentSpec, e: &ErrorProbabilities) -> f64 {
    let c = &agent.costs;
    agent.priors.pi0 * (c.c00 * e.p00 + c.c10 * e.p10)
        + agent.priors.pi1 * (c.c01 * e.p01 + c.c11 * e.p11)
}

/// Bayes risk of `agent` for the profile induced by `(s, rule)`.
pub fn agent_risk(
    agent: &AgentSpec,
    s: &SignalPair,
    rule: &DecisionRule,
    sigma: f64,
) -> Result<f64> {
    Ok(bayes_risk(agent, &error_probabilities(s, rule, sigma)?))
}

/// The receiver's likelihood-ratio best response to a fixed signal pair.
///
/// With `a = pi1 (c01 - c11)` and `b = pi0 (c10 - c00)` the LRT decides `H_1`
/// where `a p1(y) >= b p0(y)`. For Gaussian densities and distinct signals
/// this is a single threshold at `(s0 + s1)/2 + sigma^2 ln(tau) / (s1 - s0)`
/// with `tau = b / a`; the decide-`H_1` side is above the threshold iff
/// `sgn(a) (s1 - s0) > 0`. When the signals coincide or `tau` falls outside
/// `(0, inf)` the observation carries no usable information and the rule
/// degenerates to [`prior_only_decision`].
pub fn lrt_best_response(receiver: &AgentSpec, s: &SignalPair, sigma: f64) -> Result<DecisionRule> {
    if !s.s0.is_finite() || !s.s1.is_finite() {
        return Err(Error::NonFiniteSignal { s0: s.s0, s1: s.s1 });
    }
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::config(
            "sigma",
            format!("must be positive, got {sigma}"),
        ));
    }
    let a = receiver.priors.pi1 * receiver.costs.delta1();
    let b = receiver.priors.pi0 * receiver.costs.delta0();
    if s.s0 == s.s1 || a * b <= 0.0 {
        return Ok(prior_only_decision(receiver));
    }
    let tau = b / a;
    let threshold = 0.5 * (s.s0 + s.s1) + sigma * sigma * tau.ln() / (s.s1 - s.s0);
    let above = (s.s1 - s.s0) * a.signum() > 0.0;
    Ok(if above {
        DecisionRule::ThresholdAbove { threshold }
    } else {
        DecisionRule::ThresholdBelow { threshold }
    })
}

/// The receiver's best constant rule, using priors alone.
///
/// `Always1` wins when `pi1 (c01 - c11) > pi0 (c10 - c00)`, `Always0` when
/// the reverse strict inequality holds; ties (including the fully degenerate
/// case where both sides vanish) resolve to `Always0`.
pub fn prior_only_decision(receiver: &AgentSpec) -> DecisionRule {
    let a = receiver.priors.pi1 * receiver.costs.delta1();
    let b = receiver.priors.pi0 * receiver.costs.delta0();
    if a > b {
        DecisionRule::Always1
    } else {
        DecisionRule::Always0
    }
}
