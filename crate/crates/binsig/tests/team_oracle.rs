//! Grid-oracle checks of the team solution.

mod common;

use binsig::{
    agent_risk, grid_receiver_best_response, prior_only_decision, solve_team, tau_is_informative,
    tau_of, DecisionRule, GameConfig, GridSpec, SignalPair,
};

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + step * i as f64).collect()
}

/// Informative team solutions are grid-optimal: no signal pair with the
/// receiver best-responding comes out ahead.
#[test]
fn max_separation_is_grid_optimal() {
    let mut r = common::rng(0xA11CE);
    let grid = GridSpec {
        signal_points: 61,
        tolerance: 1e-9,
        ..GridSpec::default()
    };
    for _ in 0..3 {
        let cfg = common::informative_team_config(&mut r);
        let sol = solve_team(&cfg).unwrap();
        assert!(sol.informative);
        let (a0, a1) = cfg.max_amplitudes();
        for s0 in linspace(-a0, a0, grid.signal_points) {
            for s1 in linspace(-a1, a1, grid.signal_points) {
                let s = SignalPair { s0, s1 };
                let rule = grid_receiver_best_response(&s, &cfg, &grid);
                let risk = agent_risk(&cfg.receiver, &s, &rule, cfg.sigma).unwrap();
                assert!(
                    sol.risk <= risk + grid.tolerance,
                    "grid point {s:?} beats the team solution: {risk} < {}",
                    sol.risk
                );
            }
        }
    }
}

/// With tau outside (0, inf) information has no value: nothing on the
/// (signals x rules) grid beats the prior-only risk.
#[test]
fn non_informative_tau_makes_information_worthless() {
    let mut r = common::rng(0xBEE);
    for _ in 0..5 {
        let cfg = common::non_informative_team_config(&mut r);
        let sol = solve_team(&cfg).unwrap();
        assert!(!sol.informative);
        assert!(no_profile_beats_prior_only(&cfg, sol.risk, 41, 81));
    }
}

fn no_profile_beats_prior_only(
    cfg: &GameConfig,
    prior_risk: f64,
    signal_points: usize,
    threshold_points: usize,
) -> bool {
    let (a0, a1) = cfg.max_amplitudes();
    for s0 in linspace(-a0, a0, signal_points) {
        for s1 in linspace(-a1, a1, signal_points) {
            let s = SignalPair { s0, s1 };
            let lo = s0.min(s1) - 6.0 * cfg.sigma;
            let hi = s0.max(s1) + 6.0 * cfg.sigma;
            let mut rules = vec![DecisionRule::Always0, DecisionRule::Always1];
            for t in linspace(lo, hi, threshold_points) {
                rules.push(DecisionRule::ThresholdAbove { threshold: t });
                rules.push(DecisionRule::ThresholdBelow { threshold: t });
            }
            for rule in rules {
                let risk = agent_risk(&cfg.receiver, &s, &rule, cfg.sigma).unwrap();
                if risk < prior_risk - 1e-9 {
                    return false;
                }
            }
        }
    }
    true
}

/// Maximum separation strictly beats babbling for informative team configs.
#[test]
fn separation_margin_is_strictly_positive() {
    let mut r = common::rng(0xC0FFEE);
    for _ in 0..50 {
        let cfg = common::informative_team_config(&mut r);
        assert!(tau_is_informative(tau_of(&cfg.receiver)));
        let sol = solve_team(&cfg).unwrap();
        let babble = SignalPair { s0: 0.0, s1: 0.0 };
        let prior_rule = prior_only_decision(&cfg.receiver);
        let prior_risk = agent_risk(&cfg.receiver, &babble, &prior_rule, cfg.sigma).unwrap();
        assert!(
            sol.risk < prior_risk,
            "separation must strictly beat babbling: {} vs {prior_risk}",
            sol.risk
        );
    }
}
