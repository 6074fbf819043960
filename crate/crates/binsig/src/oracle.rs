//! Brute-force verification by grid search.
//!
//! Everything here works definitionally from Bayes risks: receiver best
//! responses are found by scanning threshold rules (both directions, plus
//! the two constant rules) and transmitter best responses by scanning the
//! admissible signal box. No likelihood-ratio shortcuts are used, so these
//! routines serve as an independent check on the analytic solvers.
//!
//! Threshold candidates are seeded on a uniform grid spanning
//! `[min(s) - span * sigma, max(s) + span * sigma]` and the best seed is
//! polished by golden-section search (the receiver risk is unimodal in the
//! threshold for a fixed direction), so reported risks are accurate to far
//! below the verdict tolerance.

use serde::{Deserialize, Serialize};

use crate::detection::{agent_risk, prior_only_decision, DecisionRule, GameConfig, SignalPair};

/// Grid-search resolution and tolerances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Points per signal axis.
    pub signal_points: usize,
    /// Seed thresholds per direction.
    pub threshold_points: usize,
    /// Threshold span in multiples of sigma beyond the signal range.
    pub threshold_span: f64,
    /// Maximum tolerated improvement for equilibrium verdicts.
    pub tolerance: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            signal_points: 201,
            threshold_points: 101,
            threshold_span: 6.0,
            tolerance: 1e-6,
        }
    }
}

impl GridSpec {
    /// The tight tolerance used when the oracle is compared against the
    /// analytic solvers rather than judging equilibria.
    pub fn analytic_comparison() -> Self {
        GridSpec {
            tolerance: 1e-9,
            ..GridSpec::default()
        }
    }

    fn assert_valid(&self) {
        assert!(
            self.signal_points >= 3,
            "signal grid needs at least 3 points"
        );
        assert!(
            self.threshold_points >= 3,
            "threshold grid needs at least 3 points"
        );
        assert!(self.tolerance > 0.0, "tolerance must be positive");
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 {
        (hi - lo) / (n - 1) as f64
    } else {
        0.0
    };
    (0..n).map(move |i| lo + step * i as f64)
}

/// Golden-section minimization of `f` on `[a, b]`.
fn golden_minimize(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn receiver_risk(config: &GameConfig, s: &SignalPair, rule: &DecisionRule) -> f64 {
    agent_risk(&config.receiver, s, rule, config.sigma).expect("finite inputs")
}

fn transmitter_risk(config: &GameConfig, s: &SignalPair, rule: &DecisionRule) -> f64 {
    agent_risk(&config.transmitter, s, rule, config.sigma).expect("finite inputs")
}

/// Best rule of one threshold direction: coarse scan plus golden polish.
fn best_threshold(
    config: &GameConfig,
    s: &SignalPair,
    grid: &GridSpec,
    above: bool,
) -> (DecisionRule, f64) {
    let make = |t: f64| {
        if above {
            DecisionRule::ThresholdAbove { threshold: t }
        } else {
            DecisionRule::ThresholdBelow { threshold: t }
        }
    };
    let lo = s.s0.min(s.s1) - grid.threshold_span * config.sigma;
    let hi = s.s0.max(s.s1) + grid.threshold_span * config.sigma;
    let step = (hi - lo) / (grid.threshold_points - 1) as f64;
    let mut best_t = lo;
    let mut best = f64::INFINITY;
    for t in linspace(lo, hi, grid.threshold_points) {
        let r = receiver_risk(config, s, &make(t));
        if r < best {
            best = r;
            best_t = t;
        }
    }
    let (t, r) = golden_minimize(
        |t| receiver_risk(config, s, &make(t)),
        (best_t - step).max(lo),
        (best_t + step).min(hi),
        80,
    );
    if r < best {
        (make(t), r)
    } else {
        (make(best_t), best)
    }
}

/// Receiver's best response to `s` by exhaustive search over rule families.
///
/// Ties resolve toward the prior-only constant first, then the other
/// constant, then the lower-threshold rule.
pub fn grid_receiver_best_response(
    s: &SignalPair,
    config: &GameConfig,
    grid: &GridSpec,
) -> DecisionRule {
    grid.assert_valid();
    let preferred = prior_only_decision(&config.receiver);
    let other = match preferred {
        DecisionRule::Always0 => DecisionRule::Always1,
        _ => DecisionRule::Always0,
    };
    let mut candidates: Vec<(DecisionRule, f64)> = vec![
        (preferred, receiver_risk(config, s, &preferred)),
        (other, receiver_risk(config, s, &other)),
    ];
    candidates.push(best_threshold(config, s, grid, true));
    candidates.push(best_threshold(config, s, grid, false));
    let mut best = candidates[0];
    for cand in &candidates[1..] {
        let improves = cand.1 < best.1;
        let tie_lower_threshold = cand.1 == best.1
            && matches!(
                (cand.0.threshold(), best.0.threshold()),
                (Some(a), Some(b)) if a < b
            );
        if improves || tie_lower_threshold {
            best = *cand;
        }
    }
    best.0
}

/// Transmitter's best response to a fixed rule by scanning the signal box.
///
/// The transmitter risk separates across the two signals, so each coordinate
/// is minimized independently; ties resolve to the lowest grid value, which
/// matches a lexicographic scan of the full box.
pub fn grid_transmitter_best_response(
    rule: &DecisionRule,
    config: &GameConfig,
    grid: &GridSpec,
) -> SignalPair {
    grid.assert_valid();
    let (a0, a1) = config.max_amplitudes();
    let mut best = SignalPair { s0: -a0, s1: -a1 };
    let mut best_r0 = f64::INFINITY;
    let mut best_r1 = f64::INFINITY;
    for v in linspace(-a0, a0, grid.signal_points) {
        let r = transmitter_risk(config, &SignalPair { s0: v, s1: 0.0 }, rule);
        if r < best_r0 {
            best_r0 = r;
            best.s0 = v;
        }
    }
    for v in linspace(-a1, a1, grid.signal_points) {
        let r = transmitter_risk(config, &SignalPair { s0: 0.0, s1: v }, rule);
        if r < best_r1 {
            best_r1 = r;
            best.s1 = v;
        }
    }
    best
}

/// Checks the simultaneous-move equilibrium conditions on the grid: neither
/// agent's grid best response may improve its own risk by more than
/// `grid.tolerance`.
pub fn verify_nash(
    config: &GameConfig,
    s: &SignalPair,
    rule: &DecisionRule,
    grid: &GridSpec,
) -> bool {
    let r_rule = grid_receiver_best_response(s, config, grid);
    let receiver_gain = receiver_risk(config, s, rule) - receiver_risk(config, s, &r_rule);
    if receiver_gain > grid.tolerance {
        return false;
    }
    let t_signals = grid_transmitter_best_response(rule, config, grid);
    let transmitter_gain =
        transmitter_risk(config, s, rule) - transmitter_risk(config, &t_signals, rule);
    transmitter_gain <= grid.tolerance
}

/// Transmitter's committed value of a signal pair: its own risk with the
/// receiver best-responding.
fn leader_value(config: &GameConfig, s: &SignalPair, grid: &GridSpec) -> f64 {
    let rule = grid_receiver_best_response(s, config, grid);
    transmitter_risk(config, s, &rule)
}

/// Checks the leader-follower equilibrium condition on the grid: no signal
/// pair in the box may beat `s`'s committed value by more than
/// `grid.tolerance`.
pub fn verify_stackelberg(config: &GameConfig, s: &SignalPair, grid: &GridSpec) -> bool {
    grid.assert_valid();
    let v_star = leader_value(config, s, grid);
    let (a0, a1) = config.max_amplitudes();
    let s0s: Vec<f64> = linspace(-a0, a0, grid.signal_points).collect();
    let s1s: Vec<f64> = linspace(-a1, a1, grid.signal_points).collect();
    for &s0 in &s0s {
        for &s1 in &s1s {
            let v = leader_value(config, &SignalPair { s0, s1 }, grid);
            if v < v_star - grid.tolerance {
                return false;
            }
        }
    }
    true
}

/// Searches the grid for a mutual-best-response profile with an
/// observation-using (threshold) rule.
///
/// Profiles pairing identical signals with a constant rule are trivially
/// stable — the receiver is already prior-optimal and a constant rule makes
/// the transmitter's risk independent of its signals — so they carry no
/// information about whether signaling can be sustained. The scan therefore
/// covers every signal pair crossed with every threshold rule (both
/// directions), which is the profile family the cycling argument rules out.
///
/// Returns the first passing profile, or `None` as a grid-resolution
/// certificate that no such equilibrium exists.
pub fn find_grid_nash_profile(
    config: &GameConfig,
    grid: &GridSpec,
) -> Option<(SignalPair, DecisionRule)> {
    grid.assert_valid();
    let (a0, a1) = config.max_amplitudes();
    let s0s: Vec<f64> = linspace(-a0, a0, grid.signal_points).collect();
    let s1s: Vec<f64> = linspace(-a1, a1, grid.signal_points).collect();
    for &s0 in &s0s {
        for &s1 in &s1s {
            let s = SignalPair { s0, s1 };
            let br = grid_receiver_best_response(&s, config, grid);
            let br_risk = receiver_risk(config, &s, &br);
            let lo = s0.min(s1) - grid.threshold_span * config.sigma;
            let hi = s0.max(s1) + grid.threshold_span * config.sigma;
            for t in linspace(lo, hi, grid.threshold_points) {
                for rule in [
                    DecisionRule::ThresholdAbove { threshold: t },
                    DecisionRule::ThresholdBelow { threshold: t },
                ] {
                    if receiver_risk(config, &s, &rule) - br_risk > grid.tolerance {
                        continue;
                    }
                    let t_signals = grid_transmitter_best_response(&rule, config, grid);
                    let gain = transmitter_risk(config, &s, &rule)
                        - transmitter_risk(config, &t_signals, &rule);
                    if gain <= grid.tolerance {
                        return Some((s, rule));
                    }
                }
            }
        }
    }
    None
}
