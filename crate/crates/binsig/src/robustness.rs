//! Perturbation analysis around the team setup.
//!
//! The transmitter's priors and costs are shifted by a six-component
//! perturbation while the receiver stays fixed. The two solution concepts
//! react very differently: the Stackelberg optimum depends on the sign of
//! `ln(tau)(k0 - k1)`, which an arbitrarily small perturbation can flip when
//! the channel is weak, while the Nash classification depends only on the
//! cost-difference ratios and keeps its sign for any perturbation smaller
//! than the receiver's own cost differences.

use serde::{Deserialize, Serialize};

use crate::detection::{AgentSpec, CostMatrix, GameConfig, Priors};
use crate::error::{Error, Result};
use crate::nash::{classify_nash, NashTag};
use crate::rng::SplitMix64;
use crate::stackelberg::{derived_params, solve_stackelberg};
use crate::team::tau_is_informative;

/// Additive shift of the transmitter's parameters.
///
/// `eps_pi0 + eps_pi1` must vanish so the perturbed priors still sum to one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Perturbation {
    pub eps_pi0: f64,
    pub eps_pi1: f64,
    pub eps_00: f64,
    pub eps_01: f64,
    pub eps_10: f64,
    pub eps_11: f64,
}

impl Perturbation {
    pub fn zero() -> Self {
        Perturbation {
            eps_pi0: 0.0,
            eps_pi1: 0.0,
            eps_00: 0.0,
            eps_01: 0.0,
            eps_10: 0.0,
            eps_11: 0.0,
        }
    }

    /// Prior shift only, keeping the sum constraint.
    pub fn priors_only(eps_pi0: f64) -> Self {
        Perturbation {
            eps_pi0,
            eps_pi1: -eps_pi0,
            ..Perturbation::zero()
        }
    }

    pub fn neg(&self) -> Self {
        Perturbation {
            eps_pi0: -self.eps_pi0,
            eps_pi1: -self.eps_pi1,
            eps_00: -self.eps_00,
            eps_01: -self.eps_01,
            eps_10: -self.eps_10,
            eps_11: -self.eps_11,
        }
    }

    pub fn max_norm(&self) -> f64 {
        [
            self.eps_pi0,
            self.eps_pi1,
            self.eps_00,
            self.eps_01,
            self.eps_10,
            self.eps_11,
        ]
        .iter()
        .fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn components(&self) -> [f64; 6] {
        [
            self.eps_pi0,
            self.eps_pi1,
            self.eps_00,
            self.eps_01,
            self.eps_10,
            self.eps_11,
        ]
    }
}

/// Applies a perturbation to a team config: the transmitter spec becomes the
/// receiver spec shifted by `eps`; the receiver is untouched. Addition is
/// plain IEEE `+`, so applying `-eps` to the result restores the transmitter
/// exactly whenever the sums are exactly representable.
pub fn perturb(config: &GameConfig, eps: &Perturbation) -> Result<GameConfig> {
    if !config.is_team() {
        return Err(Error::NotTeamConfig(
            "perturbations are defined around the team setup".into(),
        ));
    }
    if eps.eps_pi0 + eps.eps_pi1 != 0.0 {
        return Err(Error::InvalidPerturbation(format!(
            "prior shifts must cancel, got {} + {}",
            eps.eps_pi0, eps.eps_pi1
        )));
    }
    let r = &config.receiver;
    let pi0 = r.priors.pi0 + eps.eps_pi0;
    let pi1 = r.priors.pi1 + eps.eps_pi1;
    if !(0.0..=1.0).contains(&pi0) || !(0.0..=1.0).contains(&pi1) {
        return Err(Error::InvalidPerturbation(format!(
            "perturbed priors ({pi0}, {pi1}) leave [0, 1]"
        )));
    }
    let priors = Priors::new(pi0, pi1).map_err(|e| Error::InvalidPerturbation(e.to_string()))?;
    let costs = CostMatrix::new(
        r.costs.c00 + eps.eps_00,
        r.costs.c01 + eps.eps_01,
        r.costs.c10 + eps.eps_10,
        r.costs.c11 + eps.eps_11,
    )
    .map_err(|e| Error::InvalidPerturbation(e.to_string()))?;
    GameConfig::new(
        AgentSpec::new(priors, costs),
        config.receiver,
        config.p0,
        config.p1,
        config.sigma,
    )
}

/// Which solution concept a robustness run targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RobustnessTarget {
    Nash,
    Stackelberg,
}

/// One perturbed evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RobustnessRecord {
    pub eps: Perturbation,
    pub nash: NashTag,
    pub stackelberg_informative: bool,
    pub tau: f64,
    pub k0: f64,
    pub k1: f64,
    pub xi0: f64,
    pub xi1: f64,
}

/// Aggregate of a perturbation sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobustnessReport {
    pub target: RobustnessTarget,
    pub base_nash: NashTag,
    pub base_stackelberg_informative: bool,
    pub records: Vec<RobustnessRecord>,
    /// True when any record's targeted classification differs from the base.
    pub flipped: bool,
    /// First perturbation (in deterministic scan order) that flipped.
    pub witness: Option<Perturbation>,
}

fn evaluate(config: &GameConfig, eps: &Perturbation) -> Result<RobustnessRecord> {
    let perturbed = perturb(config, eps)?;
    let nash = classify_nash(&perturbed);
    let stackelberg = solve_stackelberg(&perturbed)?;
    Ok(RobustnessRecord {
        eps: *eps,
        nash: nash.tag,
        stackelberg_informative: stackelberg.informative,
        tau: stackelberg.params.tau,
        k0: stackelberg.params.k0,
        k1: stackelberg.params.k1,
        xi0: nash.xi0,
        xi1: nash.xi1,
    })
}

/// All sign patterns of `(eps_pi0, eps_00, eps_01, eps_10, eps_11)` at the
/// given magnitude, with the prior pair kept sum-zero. 3^5 = 243 corners.
fn sign_corners(magnitude: f64) -> Vec<Perturbation> {
    let vals = [-1.0, 0.0, 1.0];
    let mut out = Vec::with_capacity(243);
    for &spi in &vals {
        for &s00 in &vals {
            for &s01 in &vals {
                for &s10 in &vals {
                    for &s11 in &vals {
                        out.push(Perturbation {
                            eps_pi0: spi * magnitude,
                            eps_pi1: -spi * magnitude,
                            eps_00: s00 * magnitude,
                            eps_01: s01 * magnitude,
                            eps_10: s10 * magnitude,
                            eps_11: s11 * magnitude,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Searches for a perturbation within `eps_bound` (max norm) that flips the
/// Stackelberg solution between informative and non-informative.
///
/// The flip is sign-driven, so the deterministic scan covers the sign
/// corners of the perturbation space at the full bound and at a few interior
/// magnitudes; perturbations that break the parameter invariants are skipped.
/// Requires a team base with `tau` in `(0, inf)` and `tau != 1`.
pub fn stackelberg_flip_witness(
    config: &GameConfig,
    eps_bound: f64,
) -> Result<Option<Perturbation>> {
    if !config.is_team() {
        return Err(Error::NotTeamConfig(
            "flip search perturbs around a team base point".into(),
        ));
    }
    let params = derived_params(config);
    if !tau_is_informative(params.tau) || params.tau == 1.0 {
        return Err(Error::config(
            "tau",
            format!(
                "flip search requires 0 < tau < inf, tau != 1, got {}",
                params.tau
            ),
        ));
    }
    if eps_bound < 0.0 {
        return Err(Error::config("eps_bound", "must be nonnegative"));
    }
    if eps_bound == 0.0 {
        return Ok(None);
    }
    let base_informative = solve_stackelberg(config)?.informative;
    for magnitude in [eps_bound, eps_bound * 0.5, eps_bound * 0.25] {
        for eps in sign_corners(magnitude) {
            let record = match evaluate(config, &eps) {
                Ok(r) => r,
                Err(Error::InvalidPerturbation(_)) => continue,
                Err(e) => return Err(e),
            };
            if record.stackelberg_informative != base_informative {
                return Ok(Some(eps));
            }
        }
    }
    Ok(None)
}

/// Samples random perturbations within `eps_bound` and reports the Nash
/// classification of each.
///
/// `eps_bound` must sit strictly below both receiver cost differences in
/// magnitude; inside that ball both cost-difference ratios stay positive, so
/// the classification cannot flip. Sampling is uniform on the max-norm ball
/// (priors resampled on the sum-zero line) and seeded for reproducibility.
pub fn nash_robustness_check(
    config: &GameConfig,
    eps_bound: f64,
    samples: usize,
    seed: u64,
) -> Result<RobustnessReport> {
    if !config.is_team() {
        return Err(Error::NotTeamConfig(
            "robustness is evaluated around a team base point".into(),
        ));
    }
    let dc0 = config.receiver.costs.delta0().abs();
    let dc1 = config.receiver.costs.delta1().abs();
    if !(eps_bound < dc0 && eps_bound < dc1) {
        return Err(Error::EpsBoundTooLarge {
            bound: eps_bound,
            dc0,
            dc1,
        });
    }
    let base_nash = classify_nash(config).tag;
    let base_stackelberg = solve_stackelberg(config)?.informative;
    let mut rng = SplitMix64::new(seed);
    let mut records = Vec::with_capacity(samples);
    let mut flipped = false;
    let mut witness = None;
    let mut produced = 0usize;
    while produced < samples {
        let pi_shift = rng.uniform(-eps_bound, eps_bound);
        let eps = Perturbation {
            eps_pi0: pi_shift,
            eps_pi1: -pi_shift,
            eps_00: rng.uniform(-eps_bound, eps_bound),
            eps_01: rng.uniform(-eps_bound, eps_bound),
            eps_10: rng.uniform(-eps_bound, eps_bound),
            eps_11: rng.uniform(-eps_bound, eps_bound),
        };
        let record = match evaluate(config, &eps) {
            Ok(r) => r,
            // Draws that leave the invariant region (e.g. a cost pushed
            // negative) are rejected and redrawn.
            Err(Error::InvalidPerturbation(_)) => continue,
            Err(e) => return Err(e),
        };
        if record.nash != base_nash && witness.is_none() {
            flipped = true;
            witness = Some(eps);
        }
        records.push(record);
        produced += 1;
    }
    Ok(RobustnessReport {
        target: RobustnessTarget::Nash,
        base_nash,
        base_stackelberg_informative: base_stackelberg,
        records,
        flipped,
        witness,
    })
}

/// Deterministic corner sweep used by the Stackelberg robustness report.
pub fn stackelberg_corner_sweep(config: &GameConfig, eps_bound: f64) -> Result<RobustnessReport> {
    if !config.is_team() {
        return Err(Error::NotTeamConfig(
            "robustness is evaluated around a team base point".into(),
        ));
    }
    let base_nash = classify_nash(config).tag;
    let base_stackelberg = solve_stackelberg(config)?.informative;
    let mut records = Vec::new();
    let mut flipped = false;
    let mut witness = None;
    for eps in sign_corners(eps_bound) {
        let record = match evaluate(config, &eps) {
            Ok(r) => r,
            Err(Error::InvalidPerturbation(_)) => continue,
            Err(e) => return Err(e),
        };
        if record.stackelberg_informative != base_stackelberg && witness.is_none() {
            flipped = true;
            witness = Some(eps);
        }
        records.push(record);
    }
    Ok(RobustnessReport {
        target: RobustnessTarget::Stackelberg,
        base_nash,
        base_stackelberg_informative: base_stackelberg,
        records,
        flipped,
        witness,
    })
}
