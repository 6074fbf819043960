//! Shared generators for the randomized oracle sweeps.
//!
//! Draws are floored away from degeneracies (cost differences at least 0.05
//! in magnitude, priors inside [0.15, 0.85], powers and noise bounded away
//! from zero) so that equilibrium margins stay above the verdict tolerances.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use binsig::rng::SplitMix64;
use binsig::{AgentSpec, CostMatrix, GameConfig, Priors};

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::new(seed)
}

/// A cost matrix whose differences `c10 - c00` and `c01 - c11` carry the
/// requested signs with magnitude in [0.05, 1].
pub fn costs_with_signs(r: &mut SplitMix64, sign0: f64, sign1: f64) -> CostMatrix {
    let base0 = r.uniform(0.0, 0.5);
    let base1 = r.uniform(0.0, 0.5);
    let d0 = sign0 * r.uniform(0.05, 1.0);
    let d1 = sign1 * r.uniform(0.05, 1.0);
    let (c00, c10) = if d0 >= 0.0 {
        (base0, base0 + d0)
    } else {
        (base0 - d0, base0)
    };
    let (c11, c01) = if d1 >= 0.0 {
        (base1, base1 + d1)
    } else {
        (base1 - d1, base1)
    };
    CostMatrix::new(c00, c01, c10, c11).expect("generated costs are nonnegative")
}

pub fn priors(r: &mut SplitMix64) -> Priors {
    Priors::from_pi0(r.uniform(0.15, 0.85)).expect("valid priors")
}

fn random_sign(r: &mut SplitMix64) -> f64 {
    if r.next_f64() < 0.5 {
        -1.0
    } else {
        1.0
    }
}

/// Channel draw: powers in [0.25, 2.25], sigma in [0.5, 2].
pub fn channel(r: &mut SplitMix64) -> (f64, f64, f64) {
    (
        r.uniform(0.25, 2.25),
        r.uniform(0.25, 2.25),
        r.uniform(0.5, 2.0),
    )
}

/// Random config with receiver tau in (0, inf); the transmitter's
/// cost-difference signs are free, so every Nash cell is reachable.
pub fn informative_config(r: &mut SplitMix64) -> GameConfig {
    // Both receiver differences share a sign so tau stays in (0, inf).
    let zeta = random_sign(r);
    let receiver = AgentSpec::new(priors(r), costs_with_signs(r, zeta, zeta));
    let t_sign0 = random_sign(r);
    let t_sign1 = random_sign(r);
    let transmitter = AgentSpec::new(priors(r), costs_with_signs(r, t_sign0, t_sign1));
    let (p0, p1, sigma) = channel(r);
    GameConfig::new(transmitter, receiver, p0, p1, sigma).expect("valid random config")
}

/// Random team config with tau in (0, inf).
pub fn informative_team_config(r: &mut SplitMix64) -> GameConfig {
    let zeta = random_sign(r);
    let spec = AgentSpec::new(priors(r), costs_with_signs(r, zeta, zeta));
    let (p0, p1, sigma) = channel(r);
    GameConfig::team(spec, p0, p1, sigma).expect("valid random team config")
}

/// Random team config with tau <= 0 or tau = inf.
pub fn non_informative_team_config(r: &mut SplitMix64) -> GameConfig {
    let spec = if r.next_f64() < 0.5 {
        // Opposite signs: tau < 0.
        let s = random_sign(r);
        AgentSpec::new(priors(r), costs_with_signs(r, s, -s))
    } else {
        // Zero miss difference: tau = +-inf (or 0 on the other side).
        let mut costs = costs_with_signs(r, 1.0, 1.0);
        if r.next_f64() < 0.5 {
            costs.c01 = costs.c11; // tau = inf
        } else {
            costs.c10 = costs.c00; // tau = 0
        }
        AgentSpec::new(priors(r), costs)
    };
    let (p0, p1, sigma) = channel(r);
    GameConfig::team(spec, p0, p1, sigma).expect("valid random team config")
}
