//! Nash (simultaneous-move) equilibrium analysis.
//!
//! With both strategies announced at once, the equilibrium structure is
//! governed by the cost-difference ratios `xi0 = (c10_t - c00_t) / (c10_r -
//! c00_r)` and `xi1 = (c01_t - c11_t) / (c01_r - c11_r)`: positive ratios
//! align the transmitter with the receiver, negative ones make it prefer
//! wrong decisions, and mixed signs leave the outcome to the power limits.
//! When the transmitter profits from being misread, each receiver adaptation
//! provokes another signal swap and the best responses cycle forever — the
//! no-equilibrium regime.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::detection::{
    agent_risk, lrt_best_response, prior_only_decision, DecisionRule, GameConfig, SignalPair,
};
use crate::error::{Error, Result};
use crate::oracle::{verify_nash, GridSpec};
use crate::team::{tau_is_informative, tau_of};

/// Equilibrium classification tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NashTag {
    UniqueInformative,
    NonInformative,
    NoEquilibrium,
}

impl NashTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            NashTag::UniqueInformative => "unique-informative",
            NashTag::NonInformative => "non-informative",
            NashTag::NoEquilibrium => "no-equilibrium",
        }
    }
}

/// Classification plus the ratios that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NashClassification {
    pub tag: NashTag,
    pub tau: f64,
    pub xi0: f64,
    pub xi1: f64,
}

/// Cost-difference ratios `(xi0, xi1)`.
///
/// A zero receiver difference leaves the ratio undefined (NaN); such configs
/// have `tau` outside `(0, inf)` and classify as non-informative before the
/// ratios are consulted.
pub fn xi_params(config: &GameConfig) -> (f64, f64) {
    let xi0 = config.transmitter.costs.delta0() / config.receiver.costs.delta0();
    let xi1 = config.transmitter.costs.delta1() / config.receiver.costs.delta1();
    let nan_if_undefined = |num: f64, den: f64, xi: f64| {
        if den == 0.0 && num == 0.0 {
            f64::NAN
        } else {
            xi
        }
    };
    (
        nan_if_undefined(
            config.transmitter.costs.delta0(),
            config.receiver.costs.delta0(),
            xi0,
        ),
        nan_if_undefined(
            config.transmitter.costs.delta1(),
            config.receiver.costs.delta1(),
            xi1,
        ),
    )
}

/// Classifies the Nash equilibrium structure.
pub fn classify_nash(config: &GameConfig) -> NashClassification {
    let tau = tau_of(&config.receiver);
    let (xi0, xi1) = xi_params(config);
    let tag = if !tau_is_informative(tau) {
        NashTag::NonInformative
    } else {
        classify_from_signs(xi0, xi1, config.p0, config.p1)
    };
    NashClassification { tag, tau, xi0, xi1 }
}

fn classify_from_signs(xi0: f64, xi1: f64, p0: f64, p1: f64) -> NashTag {
    use std::cmp::Ordering;
    // The power comparison is on the configured limits, so exact equality
    // is meaningful.
    let power = p0.partial_cmp(&p1).expect("power limits are finite");
    match (sign(xi0), sign(xi1)) {
        (1, 1) => NashTag::UniqueInformative,
        (0, _) | (_, 0) => NashTag::NonInformative,
        (-1, -1) => NashTag::NoEquilibrium,
        (-1, 1) => match power {
            Ordering::Greater => NashTag::NoEquilibrium,
            Ordering::Equal => NashTag::NonInformative,
            Ordering::Less => NashTag::UniqueInformative,
        },
        (1, -1) => match power {
            Ordering::Greater => NashTag::UniqueInformative,
            Ordering::Equal => NashTag::NonInformative,
            Ordering::Less => NashTag::NoEquilibrium,
        },
        _ => unreachable!("signs are -1, 0 or 1"),
    }
}

fn sign(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Builds the equilibrium profile named by [`classify_nash`] and certifies
/// it as a mutual best response on the default grid.
///
/// Informative profiles saturate the power limits, with each signal pushed
/// to the side its cost ratio favors: aligned ratios separate canonically
/// (`-sqrt(P0)`, `+sqrt(P1)`), while a negative `xi` pushes that signal to
/// the opposite corner (the profile is then sustainable only under the power
/// ordering the classification demands). Non-informative profiles send
/// nothing and decide from priors. Returns `None` when no equilibrium
/// exists; a certification failure is an internal error.
pub fn construct_nash(config: &GameConfig) -> Result<Option<(SignalPair, DecisionRule)>> {
    let class = classify_nash(config);
    let (a0, a1) = config.max_amplitudes();
    let profile = match class.tag {
        NashTag::NoEquilibrium => return Ok(None),
        NashTag::NonInformative => {
            let s = SignalPair { s0: 0.0, s1: 0.0 };
            (s, prior_only_decision(&config.receiver))
        }
        NashTag::UniqueInformative => {
            let s0 = if class.xi0 > 0.0 { -a0 } else { a0 };
            let s1 = if class.xi1 > 0.0 { a1 } else { -a1 };
            let s = SignalPair { s0, s1 };
            let rule = lrt_best_response(&config.receiver, &s, config.sigma)?;
            (s, rule)
        }
    };
    let grid = GridSpec::default();
    if !verify_nash(config, &profile.0, &profile.1, &grid) {
        return Err(Error::EquilibriumValidationFailed(format!(
            "classification {:?} produced profile ({:?}, {:?})",
            class.tag, profile.0, profile.1
        )));
    }
    Ok(Some(profile))
}

/// Transmitter's analytic best response to a fixed decision rule.
///
/// Under a threshold rule the risk separates per signal and is monotone in
/// each, so every coordinate saturates at `+-sqrt(P_i)` according to the
/// sign of its cost coefficient and the rule direction; a zero coefficient
/// or a constant rule leaves the coordinate at the canonical 0.
pub fn transmitter_best_response(config: &GameConfig, rule: &DecisionRule) -> SignalPair {
    let (a0, a1) = config.max_amplitudes();
    let above = match rule {
        DecisionRule::ThresholdAbove { .. } => 1.0,
        DecisionRule::ThresholdBelow { .. } => -1.0,
        _ => return SignalPair { s0: 0.0, s1: 0.0 },
    };
    let w0 = config.transmitter.priors.pi0 * config.transmitter.costs.delta0();
    let w1 = config.transmitter.priors.pi1 * config.transmitter.costs.delta1();
    // Deciding H1 above the threshold: raising s0 raises p10, raising s1
    // lowers p01. Below-threshold rules mirror both effects.
    let s0 = if w0 == 0.0 {
        0.0
    } else {
        -above * w0.signum() * a0
    };
    let s1 = if w1 == 0.0 {
        0.0
    } else {
        above * w1.signum() * a1
    };
    SignalPair { s0, s1 }
}

/// One step of the alternating best-response play.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BrStep {
    pub signals: SignalPair,
    pub rule: DecisionRule,
    pub transmitter_risk: f64,
    pub receiver_risk: f64,
}

/// How a best-response trajectory ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BrOutcome {
    /// Two consecutive identical profiles.
    Converged,
    /// A profile recurred after at least one intervening different profile.
    CycleDetected,
    MaxItersReached,
}

/// Trajectory of alternating best responses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BrTrajectory {
    pub steps: Vec<BrStep>,
    pub outcome: BrOutcome,
}

/// Quantized profile key for float-stable convergence and cycle detection.
fn profile_key(s: &SignalPair, rule: &DecisionRule) -> (i64, i64, u8, i64) {
    let q = |x: f64| (x / 1e-9).round() as i64;
    let (kind, t) = match rule {
        DecisionRule::ThresholdAbove { threshold } => (0u8, q(*threshold)),
        DecisionRule::ThresholdBelow { threshold } => (1, q(*threshold)),
        DecisionRule::Always0 => (2, 0),
        DecisionRule::Always1 => (3, 0),
    };
    (q(s.s0), q(s.s1), kind, t)
}

/// Runs alternating best responses from an initial receiver rule: the
/// transmitter responds to the current rule, then the receiver re-optimizes
/// against the new signals. Stops on convergence (a repeated consecutive
/// profile), a detected cycle (any earlier profile revisited), or after
/// `max_iters` rounds.
pub fn best_response_dynamics(
    config: &GameConfig,
    init: &DecisionRule,
    max_iters: usize,
) -> Result<BrTrajectory> {
    assert!(max_iters >= 1, "max_iters must be at least 1");
    let mut steps = Vec::new();
    let mut seen: HashMap<(i64, i64, u8, i64), usize> = HashMap::new();
    let mut rule = *init;
    let mut outcome = BrOutcome::MaxItersReached;
    for iter in 0..max_iters {
        let signals = transmitter_best_response(config, &rule);
        rule = lrt_best_response(&config.receiver, &signals, config.sigma)?;
        steps.push(BrStep {
            signals,
            rule,
            transmitter_risk: agent_risk(&config.transmitter, &signals, &rule, config.sigma)?,
            receiver_risk: agent_risk(&config.receiver, &signals, &rule, config.sigma)?,
        });
        let key = profile_key(&signals, &rule);
        match seen.get(&key) {
            Some(&prev) if prev + 1 == iter => {
                outcome = BrOutcome::Converged;
                break;
            }
            Some(_) => {
                outcome = BrOutcome::CycleDetected;
                break;
            }
            None => {
                seen.insert(key, iter);
            }
        }
    }
    Ok(BrTrajectory { steps, outcome })
}
