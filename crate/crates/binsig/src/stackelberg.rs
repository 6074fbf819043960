//! Stackelberg (leader-follower) equilibrium analysis.
//!
//! The transmitter commits to a signal pair, the receiver best-responds with
//! an LRT. Because both risks then depend on the signals only through the
//! normalized distance `d = |s1 - s0| / sigma`, the transmitter's problem
//! reduces to a one-dimensional minimization over `d` in `[0, d_max]`, and
//! the optimum is characterized in closed form by the signs of
//! `ln(tau) (k0 - k1)` and `k0 + k1`.

use serde::{Deserialize, Serialize};

use crate::detection::{
    agent_risk, bayes_risk, error_probabilities, lrt_best_response, prior_only_decision,
    q_function, AgentSpec, DecisionRule, GameConfig, SignalPair,
};
use crate::error::{Error, Result};
use crate::team::{tau_is_informative, tau_of};

/// Derived Stackelberg parameters.
///
/// `k0` and `k1` fold the transmitter's stakes into the receiver-driven
/// geometry: `k0 = pi0_t zeta (c10_t - c00_t) tau^{-1/2}` and
/// `k1 = pi1_t zeta (c01_t - c11_t) tau^{1/2}`. They are NaN when `tau`
/// falls outside `(0, inf)`, where the whole curve is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StackelbergParams {
    pub tau: f64,
    pub ln_tau: f64,
    /// Sign of the receiver's miss-cost difference `c01 - c11`.
    pub zeta: i8,
    pub k0: f64,
    pub k1: f64,
    pub d_max: f64,
}

/// Which closed-form case produced the optimal distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableCell {
    /// `ln(tau)(k0-k1) < 0`, `k0+k1 < 0`: interior stationary point,
    /// `d* = min(d_max, sqrt(|2 ln(tau)(k0-k1) / (k0+k1)|))`.
    InteriorOptimum,
    /// `ln(tau)(k0-k1) >= 0`, `k0+k1 < 0`: risk increases with separation,
    /// `d* = 0`.
    ForcedNonInformative,
    /// `ln(tau)(k0-k1) < 0`, `k0+k1 >= 0`: risk decreases with separation,
    /// `d* = d_max`.
    MaxSeparation,
    /// Both signs nonnegative and the interior stationary point (a maximum)
    /// lies beyond `d_max`: the whole feasible range is uphill, `d* = 0`.
    EndpointBoundExceeded,
    /// Both signs nonnegative, stationary maximum inside range, endpoint
    /// comparison favors separation: `d* = d_max`.
    EndpointSeparation,
    /// Both signs nonnegative, endpoint comparison favors babbling (ties
    /// included): `d* = 0`.
    EndpointBabbling,
    /// `tau <= 0`, `tau = inf` or undefined: the receiver never uses the
    /// observation and every distance is equivalent; `d* = 0`.
    NonInformativeTau,
}

impl TableCell {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableCell::InteriorOptimum => "interior-optimum",
            TableCell::ForcedNonInformative => "forced-non-informative",
            TableCell::MaxSeparation => "max-separation",
            TableCell::EndpointBoundExceeded => "endpoint-bound-exceeded",
            TableCell::EndpointSeparation => "endpoint-separation",
            TableCell::EndpointBabbling => "endpoint-babbling",
            TableCell::NonInformativeTau => "non-informative-tau",
        }
    }
}

/// Full Stackelberg outcome.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StackelbergSolution {
    pub params: StackelbergParams,
    pub d_star: f64,
    pub informative: bool,
    pub signals: SignalPair,
    pub rule: DecisionRule,
    pub transmitter_risk: f64,
    pub receiver_risk: f64,
    pub cell: TableCell,
}

fn sgn(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

/// Computes `tau`, `zeta`, `k0`, `k1` and `d_max` for a config.
pub fn derived_params(config: &GameConfig) -> StackelbergParams {
    let tau = tau_of(&config.receiver);
    let zeta = sgn(config.receiver.costs.delta1());
    let (k0, k1) = if tau_is_informative(tau) {
        let zf = zeta as f64;
        (
            config.transmitter.priors.pi0 * zf * config.transmitter.costs.delta0() / tau.sqrt(),
            config.transmitter.priors.pi1 * zf * config.transmitter.costs.delta1() * tau.sqrt(),
        )
    } else {
        (f64::NAN, f64::NAN)
    };
    StackelbergParams {
        tau,
        ln_tau: tau.ln(),
        zeta,
        k0,
        k1,
        d_max: config.d_max(),
    }
}

/// Error probabilities of the receiver's LRT at normalized distance `d > 0`.
///
/// For `zeta = +1`: `p10 = Q(d/2 + ln(tau)/d)` and `p01 = Q(d/2 - ln(tau)/d)`;
/// for `zeta = -1` the decide-H1 region flips and both arguments negate.
fn lrt_error_probs(d: f64, ln_tau: f64, zeta: i8) -> (f64, f64) {
    let (a10, a01) = (0.5 * d + ln_tau / d, 0.5 * d - ln_tau / d);
    if zeta >= 0 {
        (q_function(a10), q_function(a01))
    } else {
        (q_function(-a10), q_function(-a01))
    }
}

fn curve_risk(agent: &AgentSpec, params: &StackelbergParams, d: f64) -> f64 {
    let (p10, p01) = lrt_error_probs(d, params.ln_tau, params.zeta);
    let base = agent.priors.pi0 * agent.costs.c00 + agent.priors.pi1 * agent.costs.c11;
    base + agent.priors.pi0 * agent.costs.delta0() * p10
        + agent.priors.pi1 * agent.costs.delta1() * p01
}

fn check_curve_domain(d: f64, params: &StackelbergParams) -> Result<()> {
    if !tau_is_informative(params.tau) {
        return Err(Error::CurveUndefined { tau: params.tau });
    }
    if !(0.0..=params.d_max * (1.0 + 1e-12)).contains(&d) {
        return Err(Error::DistanceOutOfRange {
            d,
            d_max: params.d_max,
        });
    }
    Ok(())
}

/// Transmitter's Bayes risk at normalized distance `d`, with the receiver
/// playing its LRT best response. At `d = 0` this is the risk under the
/// prior-only rule.
pub fn transmitter_risk_of_distance(d: f64, config: &GameConfig) -> Result<f64> {
    let params = derived_params(config);
    check_curve_domain(d, &params)?;
    if d == 0.0 {
        return prior_only_risks(config).map(|(t, _)| t);
    }
    Ok(curve_risk(&config.transmitter, &params, d))
}

/// Both agents' risks at normalized distance `d` under the receiver's LRT
/// best response. Used by the curve export.
pub fn risks_of_distance(d: f64, config: &GameConfig) -> Result<(f64, f64)> {
    let params = derived_params(config);
    check_curve_domain(d, &params)?;
    if d == 0.0 {
        return prior_only_risks(config);
    }
    Ok((
        curve_risk(&config.transmitter, &params, d),
        curve_risk(&config.receiver, &params, d),
    ))
}

fn prior_only_risks(config: &GameConfig) -> Result<(f64, f64)> {
    let s = SignalPair { s0: 0.0, s1: 0.0 };
    let rule = prior_only_decision(&config.receiver);
    Ok((
        agent_risk(&config.transmitter, &s, &rule, config.sigma)?,
        agent_risk(&config.receiver, &s, &rule, config.sigma)?,
    ))
}

/// The interior stationary point bound `sqrt(|2 ln(tau)(k0-k1) / (k0+k1)|)`,
/// taken as `+inf` when the denominator vanishes with a nonzero numerator.
fn stationary_bound(ln_tau: f64, k0: f64, k1: f64) -> f64 {
    let num = 2.0 * ln_tau * (k0 - k1);
    let den = k0 + k1;
    if den == 0.0 {
        if num == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (num / den).abs().sqrt()
    }
}

/// Optimal normalized distance and the closed-form case that produced it.
///
/// Requires `0 < tau < inf`; the non-informative short-circuit lives in
/// [`solve_stackelberg`].
pub fn optimal_distance(config: &GameConfig) -> Result<(f64, TableCell)> {
    let params = derived_params(config);
    if !tau_is_informative(params.tau) {
        return Err(Error::CurveUndefined { tau: params.tau });
    }
    Ok(optimal_distance_from_params(&params))
}

pub(crate) fn optimal_distance_from_params(params: &StackelbergParams) -> (f64, TableCell) {
    let StackelbergParams {
        ln_tau,
        k0,
        k1,
        d_max,
        tau,
        ..
    } = *params;
    let slope_sign = ln_tau * (k0 - k1);
    let ksum = k0 + k1;
    if slope_sign < 0.0 && ksum < 0.0 {
        let d = stationary_bound(ln_tau, k0, k1).min(d_max);
        return (d, TableCell::InteriorOptimum);
    }
    if slope_sign >= 0.0 && ksum < 0.0 {
        return (0.0, TableCell::ForcedNonInformative);
    }
    if slope_sign < 0.0 {
        return (d_max, TableCell::MaxSeparation);
    }
    // Both nonnegative: the stationary point is a maximum, so the minimum
    // sits at an endpoint of [0, d_max].
    if k0 == 0.0 && k1 == 0.0 {
        // Transmitter risk is constant in d; report the babbling convention.
        return (0.0, TableCell::EndpointBabbling);
    }
    let bound = stationary_bound(ln_tau, k0, k1);
    if d_max * d_max < bound * bound {
        return (0.0, TableCell::EndpointBoundExceeded);
    }
    // Endpoint comparison: positive discriminant picks d_max, otherwise
    // (ties included) babbling.
    let ratio_pow = match sgn(ln_tau) {
        1 => k1 / (k0 * tau),
        -1 => (k0 * tau) / k1,
        _ => 1.0,
    };
    let discriminant = ratio_pow * q_function(ln_tau.abs() / d_max - 0.5 * d_max)
        - q_function(ln_tau.abs() / d_max + 0.5 * d_max);
    if discriminant > 0.0 {
        (d_max, TableCell::EndpointSeparation)
    } else {
        (0.0, TableCell::EndpointBabbling)
    }
}

/// Full Stackelberg solution for any valid config.
pub fn solve_stackelberg(config: &GameConfig) -> Result<StackelbergSolution> {
    let params = derived_params(config);
    let (d_star, cell) = if tau_is_informative(params.tau) {
        optimal_distance_from_params(&params)
    } else {
        (0.0, TableCell::NonInformativeTau)
    };
    let informative = d_star > 0.0;
    let signals = config.signals_at_distance(d_star);
    let rule = if informative {
        lrt_best_response(&config.receiver, &signals, config.sigma)?
    } else {
        prior_only_decision(&config.receiver)
    };
    let e = error_probabilities(&signals, &rule, config.sigma)?;
    Ok(StackelbergSolution {
        params,
        d_star,
        informative,
        signals,
        rule,
        transmitter_risk: bayes_risk(&config.transmitter, &e),
        receiver_risk: bayes_risk(&config.receiver, &e),
        cell,
    })
}

/// Which quadrant of the subjective-priors analysis a config falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PriorQuadrant {
    /// `pi0_t/pi1_t < pi0_r/pi1_r` with `tau >= 1`, or
    /// `pi0_t/pi1_t >= pi0_r/pi1_r` with `tau < 1`: separation dominates.
    OffDiagonal,
    /// The remaining quadrants: endpoint analysis decides.
    Diagonal,
}

/// Outcome of the shared-costs, subjective-priors specialization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubjectivePriorsOutcome {
    pub quadrant: PriorQuadrant,
    pub tau: f64,
    pub transmitter_ratio: f64,
    pub receiver_ratio: f64,
    pub d_star: f64,
    pub cell: TableCell,
    pub informative: bool,
}

/// Classifies a shared-cost-matrix config by its prior-ratio quadrant.
///
/// With identical costs, `k0` and `k1` are both positive and
/// `sgn(k0 - k1) = sgn(pi0_t/pi1_t - pi0_r/pi1_r)`, so the quadrant of
/// (prior-ratio comparison, `tau` vs 1) determines the closed-form case
/// directly: off-diagonal quadrants give `d* = d_max`, diagonal ones fall to
/// the endpoint analysis. The result always agrees with [`optimal_distance`].
pub fn classify_subjective_priors(config: &GameConfig) -> Result<SubjectivePriorsOutcome> {
    if config.transmitter.costs != config.receiver.costs {
        return Err(Error::CostMatrixMismatch);
    }
    let params = derived_params(config);
    if !tau_is_informative(params.tau) {
        return Err(Error::CurveUndefined { tau: params.tau });
    }
    let t_ratio = config.transmitter.priors.pi0 / config.transmitter.priors.pi1;
    let r_ratio = config.receiver.priors.pi0 / config.receiver.priors.pi1;
    // sgn(ln tau (k0 - k1)) via the quadrant; strict opposition of the two
    // comparisons puts the slope sign below zero.
    let quadrant =
        if (t_ratio < r_ratio && params.tau > 1.0) || (t_ratio > r_ratio && params.tau < 1.0) {
            PriorQuadrant::OffDiagonal
        } else {
            PriorQuadrant::Diagonal
        };
    let (d_star, cell) = match quadrant {
        PriorQuadrant::OffDiagonal => (params.d_max, TableCell::MaxSeparation),
        PriorQuadrant::Diagonal => optimal_distance_from_params(&params),
    };
    Ok(SubjectivePriorsOutcome {
        quadrant,
        tau: params.tau,
        transmitter_ratio: t_ratio,
        receiver_ratio: r_ratio,
        d_star,
        cell,
        informative: d_star > 0.0,
    })
}
