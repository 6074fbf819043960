//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values. Run with `cargo test -p binsig-cli --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria).

use std::process::Command;
use std::time::Instant;

use binsig::rng::SplitMix64;
use binsig::{
    agent_risk, classify_nash, construct_nash, find_grid_nash_profile, lrt_best_response,
    nash_robustness_check, prior_only_decision, q_function, solve_stackelberg, solve_team,
    stackelberg_flip_witness, subjective_priors_config, verify_nash, verify_stackelberg, AgentSpec,
    BiasedCostScenario, CostMatrix, DecisionRule, GameConfig, GridSpec, NashTag, Priors,
    SignalPair, TableCell,
};

fn spec(pi0: f64, c: [f64; 4]) -> AgentSpec {
    AgentSpec::new(
        Priors::from_pi0(pi0).unwrap(),
        CostMatrix::new(c[0], c[1], c[2], c[3]).unwrap(),
    )
}

fn game(t: AgentSpec, r: AgentSpec, p0: f64, p1: f64, sigma: f64) -> GameConfig {
    GameConfig::new(t, r, p0, p1, sigma).unwrap()
}

fn biased(alpha: f64, pi0: f64) -> GameConfig {
    binsig::biased_cost_config(&BiasedCostScenario {
        pi0,
        alpha,
        p0: 1.0,
        p1: 1.0,
        sigma: 1.0,
    })
    .unwrap()
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_binsig"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// Composite-Simpson integration of the standard normal density on [x, 9];
/// the tail beyond 9 is under 2e-19. Independent of the erfc path.
fn q_by_quadrature(x: f64) -> f64 {
    if x >= 9.0 {
        return 0.0;
    }
    if x <= -9.0 {
        return 1.0 - q_by_quadrature(-x);
    }
    let phi = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let (a, b) = (x, 9.0);
    let n = 20_000;
    let h = (b - a) / n as f64;
    let mut acc = phi(a) + phi(b);
    for i in 1..n {
        let t = a + i as f64 * h;
        acc += phi(t) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * h / 3.0
}

#[test]
fn acceptance_1_figure1_reproduction() {
    let started = Instant::now();
    let (code, stdout, stderr) =
        run_cli(&["solve", "stackelberg", "--preset", "figure1", "--json"]);
    assert_eq!(code, 0, "{stderr}");
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let d_star = report["d_star"].as_f64().unwrap();
    assert!(
        (d_star - 0.4704).abs() <= 1e-3,
        "closed-form d* = {d_star}, expected 0.4704 +- 1e-3"
    );

    let (code, csv, stderr) = run_cli(&["curve", "--preset", "figure1", "--points", "2000"]);
    assert_eq!(code, 0, "{stderr}");
    let mut grid_rows = Vec::new();
    let mut optimum_row = None;
    let mut zero_row = None;
    let mut last_row = (0.0f64, 0.0f64);
    for line in csv.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let d: f64 = fields[0].parse().unwrap();
        let risk: f64 = fields[1].parse().unwrap();
        if fields[3] == "1" {
            optimum_row = Some((d, risk));
        } else if d == 0.0 {
            zero_row = Some((d, risk));
        } else {
            grid_rows.push((d, risk));
        }
        last_row = (d, risk);
    }
    let step = 20.0 / 2000.0;
    let (argmin_d, argmin_risk) = grid_rows
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    assert!(
        (argmin_d - 0.4704).abs() <= step,
        "curve argmin {argmin_d} not within one grid step of 0.4704"
    );
    let (d_marked, risk_marked) = optimum_row.expect("curve marks the optimum row");
    assert!((d_marked - d_star).abs() < 1e-12);
    assert!(risk_marked < zero_row.unwrap().1, "d* must beat d -> 0");
    assert!(risk_marked < last_row.1, "d* must beat d_max");
    assert!(risk_marked <= argmin_risk);

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!(
        "ACCEPTANCE 1 figure1-reproduction: PASS — d* = {d_star:.6}, curve argmin {argmin_d:.4}, {elapsed:?}"
    );
}

#[test]
fn acceptance_2_table_one_exhaustion() {
    let started = Instant::now();
    let fig1 = binsig::figure1_config();
    let fig1_weak = game(fig1.transmitter, fig1.receiver, 1.0, 1.0, 5.0);
    let tau2_receiver = spec(0.5, [0.0, 0.5, 1.0, 0.0]);
    // (name, config, expected cell, expected d*, tolerance on d*)
    let corpus: Vec<(&str, GameConfig, TableCell, f64, f64)> = vec![
        ("interior", fig1, TableCell::InteriorOptimum, 0.4704, 1e-3),
        (
            "interior-clamped",
            fig1_weak,
            TableCell::InteriorOptimum,
            0.4,
            1e-12,
        ),
        (
            "forced-dark-tau1",
            biased(0.3, 0.5),
            TableCell::ForcedNonInformative,
            0.0,
            0.0,
        ),
        (
            "forced-dark-tau-ne-1",
            biased(0.3, 0.6),
            TableCell::ForcedNonInformative,
            0.0,
            0.0,
        ),
        (
            "forced-dark-strict-slope",
            game(
                spec(0.5, [0.1, 0.0, 0.0, 0.15]),
                tau2_receiver,
                1.0,
                1.0,
                1.0,
            ),
            TableCell::ForcedNonInformative,
            0.0,
            0.0,
        ),
        (
            "max-sep-subjective",
            subjective_priors_config(0.5, 0.4, CostMatrix::zero_one(), 1.0, 1.0, 1.0).unwrap(),
            TableCell::MaxSeparation,
            2.0,
            1e-12,
        ),
        (
            "max-sep-zero-sum",
            game(
                spec(0.5, [0.2, 0.1, 0.0, 0.0]),
                tau2_receiver,
                1.0,
                1.0,
                1.0,
            ),
            TableCell::MaxSeparation,
            2.0,
            1e-12,
        ),
        (
            "endpoint-sep-team-fig1",
            GameConfig::team(fig1.receiver, 1.0, 1.0, 0.1).unwrap(),
            TableCell::EndpointSeparation,
            20.0,
            1e-12,
        ),
        (
            "endpoint-sep-team-01",
            GameConfig::team(spec(0.6, [0.0, 1.0, 1.0, 0.0]), 1.0, 1.0, 1.0).unwrap(),
            TableCell::EndpointSeparation,
            2.0,
            1e-12,
        ),
        (
            "endpoint-sep-biased",
            biased(0.8, 0.5),
            TableCell::EndpointSeparation,
            2.0,
            1e-12,
        ),
        (
            "endpoint-dark-discriminant",
            game(
                spec(0.5, [0.0, 0.0, 0.6, 0.1]),
                tau2_receiver,
                1.0,
                1.0,
                1.0,
            ),
            TableCell::EndpointBabbling,
            0.0,
            0.0,
        ),
        (
            "endpoint-dark-boundary",
            // d_max^2 sits a hair above |2 ln(tau)(k0-k1)/(k0+k1)| = 4 ln 2,
            // exercising the >= branch at the boundary.
            game(
                spec(0.5, [0.0, 0.0, 0.6, 0.1]),
                tau2_receiver,
                1.0,
                1.0,
                1.2011,
            ),
            TableCell::EndpointBabbling,
            0.0,
            0.0,
        ),
        (
            "endpoint-dark-bound-exceeded",
            subjective_priors_config(0.2, 0.4, CostMatrix::zero_one(), 1.0, 1.0, 4.0).unwrap(),
            TableCell::EndpointBoundExceeded,
            0.0,
            0.0,
        ),
    ];
    assert!(corpus.len() >= 12);
    let grid = GridSpec {
        signal_points: 201,
        threshold_points: 101,
        threshold_span: 6.0,
        tolerance: 1e-6,
    };
    let mut cells_seen = std::collections::BTreeSet::new();
    for (name, cfg, expected_cell, expected_d, tol) in &corpus {
        let sol = solve_stackelberg(cfg).unwrap();
        assert_eq!(sol.cell, *expected_cell, "{name}: wrong cell");
        assert!(
            (sol.d_star - expected_d).abs() <= *tol,
            "{name}: d* = {}, expected {expected_d}",
            sol.d_star
        );
        assert!(
            verify_stackelberg(cfg, &sol.signals, &grid),
            "{name}: oracle rejected the solution"
        );
        cells_seen.insert(format!("{:?}", sol.cell));
    }
    for required in [
        "InteriorOptimum",
        "ForcedNonInformative",
        "MaxSeparation",
        "EndpointSeparation",
        "EndpointBabbling",
        "EndpointBoundExceeded",
    ] {
        assert!(cells_seen.contains(required), "corpus misses {required}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "took {elapsed:?}, budget 30 s"
    );
    println!(
        "ACCEPTANCE 2 table-one-exhaustion: PASS — {} configs, all cells covered, {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn acceptance_3_table_three_exhaustion() {
    let started = Instant::now();
    let receiver = spec(0.5, [0.0, 1.0, 1.0, 0.0]);
    let t = |c: [f64; 4]| spec(0.5, c);
    use NashTag::*;
    // (name, transmitter costs, p0, p1, expected tag)
    let corpus: Vec<(&str, [f64; 4], f64, f64, NashTag)> = vec![
        ("pos-pos", [0.0, 1.0, 1.0, 0.0], 1.0, 1.0, UniqueInformative),
        ("pos-zero", [0.0, 0.3, 1.0, 0.3], 1.0, 1.0, NonInformative),
        (
            "pos-neg-p0-gt",
            [0.0, 0.0, 1.0, 0.5],
            2.0,
            1.0,
            UniqueInformative,
        ),
        (
            "pos-neg-p-eq",
            [0.0, 0.0, 1.0, 0.5],
            1.0,
            1.0,
            NonInformative,
        ),
        (
            "pos-neg-p0-lt",
            [0.0, 0.0, 1.0, 0.5],
            1.0,
            2.0,
            NoEquilibrium,
        ),
        ("zero-pos", [0.3, 1.0, 0.3, 0.0], 1.0, 1.0, NonInformative),
        ("zero-zero", [0.3, 0.3, 0.3, 0.3], 1.0, 1.0, NonInformative),
        ("zero-neg", [0.3, 0.0, 0.3, 0.5], 1.0, 1.0, NonInformative),
        (
            "neg-pos-p0-gt",
            [0.5, 1.0, 0.0, 0.0],
            2.0,
            1.0,
            NoEquilibrium,
        ),
        (
            "neg-pos-p-eq",
            [0.5, 1.0, 0.0, 0.0],
            1.0,
            1.0,
            NonInformative,
        ),
        (
            "neg-pos-p0-lt",
            [0.5, 1.0, 0.0, 0.0],
            1.0,
            2.0,
            UniqueInformative,
        ),
        ("neg-zero", [0.5, 0.3, 0.0, 0.3], 1.0, 1.0, NonInformative),
        ("neg-neg", [0.5, 0.0, 0.0, 0.5], 1.0, 1.0, NoEquilibrium),
        (
            "neg-neg-uneven",
            [0.5, 0.0, 0.0, 0.5],
            1.0,
            2.0,
            NoEquilibrium,
        ),
    ];
    let verdict_grid = GridSpec::default();
    let certificate_grid = GridSpec {
        signal_points: 51,
        threshold_points: 101,
        threshold_span: 6.0,
        tolerance: 1e-12,
    };
    let mut certificates = 0;
    for (name, costs, p0, p1, expected) in &corpus {
        let cfg = game(t(*costs), receiver, *p0, *p1, 1.0);
        let class = classify_nash(&cfg);
        assert_eq!(class.tag, *expected, "{name}: wrong tag");
        match class.tag {
            UniqueInformative => {
                let (s, rule) = construct_nash(&cfg).unwrap().expect("profile exists");
                assert!(
                    verify_nash(&cfg, &s, &rule, &verdict_grid),
                    "{name}: constructed profile rejected"
                );
            }
            NonInformative => {
                let (s, rule) = construct_nash(&cfg).unwrap().expect("profile exists");
                assert!(
                    rule.is_constant() || s.s0 == s.s1,
                    "{name}: profile not babbling"
                );
            }
            NoEquilibrium => {
                assert_eq!(construct_nash(&cfg).unwrap(), None);
                assert_eq!(
                    find_grid_nash_profile(&cfg, &certificate_grid),
                    None,
                    "{name}: certificate found a stable grid profile"
                );
                certificates += 1;
            }
        }
    }
    assert!(certificates >= 4);
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "took {elapsed:?}, budget 2 min"
    );
    println!(
        "ACCEPTANCE 3 table-three-exhaustion: PASS — {} configs, {certificates} absence certificates, {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn acceptance_4_team_informativeness() {
    let mut rng = SplitMix64::new(0x7EA4);
    // 50 informative draws: separation strictly beats babbling.
    let mut informative = 0;
    while informative < 50 {
        let zeta = if rng.next_f64() < 0.5 { -1.0 } else { 1.0 };
        let base0 = rng.uniform(0.0, 0.5);
        let base1 = rng.uniform(0.0, 0.5);
        let d0 = zeta * rng.uniform(0.05, 1.0);
        let d1 = zeta * rng.uniform(0.05, 1.0);
        let costs = [
            if d0 >= 0.0 { base0 } else { base0 - d0 },
            if d1 >= 0.0 { base1 + d1 } else { base1 },
            if d0 >= 0.0 { base0 + d0 } else { base0 },
            if d1 >= 0.0 { base1 } else { base1 - d1 },
        ];
        let cfg = GameConfig::team(
            spec(rng.uniform(0.15, 0.85), costs),
            rng.uniform(0.25, 2.25),
            rng.uniform(0.25, 2.25),
            rng.uniform(0.5, 2.0),
        )
        .unwrap();
        let sol = solve_team(&cfg).unwrap();
        assert!(sol.informative);
        let prior_rule = prior_only_decision(&cfg.receiver);
        let babble = SignalPair { s0: 0.0, s1: 0.0 };
        let prior_risk = agent_risk(&cfg.receiver, &babble, &prior_rule, cfg.sigma).unwrap();
        assert!(
            sol.risk < prior_risk,
            "informative team solution must strictly beat babbling"
        );
        informative += 1;
    }
    // 20 draws with tau outside (0, inf): nothing beats the prior-only rule.
    for i in 0..20 {
        let pi0 = rng.uniform(0.15, 0.85);
        let costs = match i % 3 {
            0 => [0.8, 1.0, 0.1, 0.0], // tau < 0
            1 => [0.0, 0.3, 1.0, 0.3], // tau = inf
            _ => [0.4, 1.0, 0.4, 0.0], // tau = 0
        };
        let cfg = GameConfig::team(
            spec(pi0, costs),
            rng.uniform(0.25, 2.25),
            rng.uniform(0.25, 2.25),
            rng.uniform(0.5, 2.0),
        )
        .unwrap();
        let sol = solve_team(&cfg).unwrap();
        assert!(!sol.informative);
        let (a0, a1) = cfg.max_amplitudes();
        for i0 in 0..26 {
            for i1 in 0..26 {
                let s = SignalPair {
                    s0: -a0 + 2.0 * a0 * i0 as f64 / 25.0,
                    s1: -a1 + 2.0 * a1 * i1 as f64 / 25.0,
                };
                let lo = s.s0.min(s.s1) - 6.0 * cfg.sigma;
                let hi = s.s0.max(s.s1) + 6.0 * cfg.sigma;
                for k in 0..51 {
                    let th = lo + (hi - lo) * k as f64 / 50.0;
                    for rule in [
                        DecisionRule::ThresholdAbove { threshold: th },
                        DecisionRule::ThresholdBelow { threshold: th },
                    ] {
                        let r = agent_risk(&cfg.receiver, &s, &rule, cfg.sigma).unwrap();
                        assert!(
                            r >= sol.risk - 1e-9,
                            "profile beats the prior-only rule under non-informative tau"
                        );
                    }
                }
            }
        }
    }
    println!("ACCEPTANCE 4 team-informativeness: PASS — 50 informative + 20 non-informative draws");
}

#[test]
fn acceptance_5_robustness_contrast() {
    // Team base points with tau != 1; a flip within eps = 1e-3 is admitted
    // exactly when the channel is weak enough for the endpoint bound test.
    let zero_one = [0.0, 1.0, 1.0, 0.0];
    let fig1_costs = [0.0, 0.4, 0.9, 0.0];
    let bases: Vec<(&str, GameConfig, bool)> = vec![
        (
            "01-weak",
            GameConfig::team(spec(0.4, zero_one), 1.0, 1.0, 2.0 / 0.03).unwrap(),
            true,
        ),
        (
            "01-strong",
            GameConfig::team(spec(0.4, zero_one), 1.0, 1.0, 1.0).unwrap(),
            false,
        ),
        (
            "fig1-strong",
            GameConfig::team(spec(0.25, fig1_costs), 1.0, 1.0, 0.1).unwrap(),
            false,
        ),
        (
            "fig1-weak",
            GameConfig::team(spec(0.25, fig1_costs), 1.0, 1.0, 40.0).unwrap(),
            true,
        ),
    ];
    let mut flips = 0;
    for (name, cfg, flip_expected) in &bases {
        let witness = stackelberg_flip_witness(cfg, 1e-3).unwrap();
        assert_eq!(
            witness.is_some(),
            *flip_expected,
            "{name}: flip admissibility mismatch"
        );
        if let Some(eps) = witness {
            flips += 1;
            let perturbed = binsig::perturb(cfg, &eps).unwrap();
            assert!(solve_stackelberg(cfg).unwrap().informative);
            assert!(!solve_stackelberg(&perturbed).unwrap().informative);
        }
        // Nash side: 1000 samples at half the smallest receiver difference.
        let dc0 = cfg.receiver.costs.delta0().abs();
        let dc1 = cfg.receiver.costs.delta1().abs();
        let report = nash_robustness_check(cfg, 0.5 * dc0.min(dc1), 1000, 0x5EED).unwrap();
        assert!(!report.flipped, "{name}: nash classification flipped");
        assert!(report
            .records
            .iter()
            .all(|r| r.nash == NashTag::UniqueInformative));
    }
    assert!(flips >= 1, "suite must include an admitting base point");
    println!(
        "ACCEPTANCE 5 robustness-contrast: PASS — {} base points, {flips} stackelberg flips, 0 nash flips",
        bases.len()
    );
}

#[test]
fn acceptance_6_motivating_examples() {
    // Biased-cost sweep.
    for alpha in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let cfg = biased(alpha, 0.5);
        let stackelberg = solve_stackelberg(&cfg).unwrap();
        assert_eq!(
            stackelberg.informative,
            alpha > 0.5,
            "stackelberg informativeness at alpha = {alpha}"
        );
        let expected = if alpha < 0.5 {
            NashTag::NoEquilibrium
        } else if alpha == 0.5 {
            NashTag::NonInformative
        } else {
            NashTag::UniqueInformative
        };
        assert_eq!(
            classify_nash(&cfg).tag,
            expected,
            "nash tag at alpha = {alpha}"
        );
    }
    // Subjective priors: ratios pinned at one, equilibrium untouched.
    let mut rng = SplitMix64::new(0xAB);
    for _ in 0..50 {
        let d0 = rng.uniform(0.05, 1.0);
        let d1 = rng.uniform(0.05, 1.0);
        let base = rng.uniform(0.0, 0.3);
        let costs = CostMatrix::new(base, base + d1, base + d0, base).unwrap();
        let cfg = subjective_priors_config(
            rng.uniform(0.1, 0.9),
            rng.uniform(0.1, 0.9),
            costs,
            rng.uniform(0.25, 2.25),
            rng.uniform(0.25, 2.25),
            rng.uniform(0.5, 2.0),
        )
        .unwrap();
        let class = classify_nash(&cfg);
        assert_eq!((class.xi0, class.xi1), (1.0, 1.0));
        assert!(binsig::tau_is_informative(class.tau));
        assert_eq!(class.tag, NashTag::UniqueInformative);
    }
    println!(
        "ACCEPTANCE 6 motivating-examples: PASS — biased-cost sweep + 50 subjective-priors draws"
    );
}

#[test]
fn acceptance_7_numeric_foundations() {
    // Q-function against quadrature.
    for i in 0..1000 {
        let x = -8.0 + 16.0 * i as f64 / 999.0;
        let oracle = q_by_quadrature(x);
        assert!(
            (q_function(x) - oracle).abs() < 1e-10,
            "Q({x}) = {} vs quadrature {oracle}",
            q_function(x)
        );
    }
    // LRT beats the grid oracle's best alternative on random instances.
    let mut rng = SplitMix64::new(0x417);
    let grid = GridSpec::analytic_comparison();
    for _ in 0..100 {
        let zeta = if rng.next_f64() < 0.5 { -1.0 } else { 1.0 };
        let d0 = zeta * rng.uniform(0.05, 1.0);
        let d1 = zeta * rng.uniform(0.05, 1.0);
        let b0 = rng.uniform(0.0, 0.5);
        let b1 = rng.uniform(0.0, 0.5);
        let receiver = spec(
            rng.uniform(0.15, 0.85),
            [
                if d0 >= 0.0 { b0 } else { b0 - d0 },
                if d1 >= 0.0 { b1 + d1 } else { b1 },
                if d0 >= 0.0 { b0 + d0 } else { b0 },
                b1,
            ],
        );
        let cfg = game(
            spec(0.5, [0.0, 1.0, 1.0, 0.0]),
            receiver,
            rng.uniform(0.25, 2.25),
            rng.uniform(0.25, 2.25),
            rng.uniform(0.5, 2.0),
        );
        let (a0, a1) = cfg.max_amplitudes();
        let s = SignalPair {
            s0: rng.uniform(-a0, a0),
            s1: rng.uniform(-a1, a1),
        };
        let lrt = lrt_best_response(&cfg.receiver, &s, cfg.sigma).unwrap();
        let lrt_risk = agent_risk(&cfg.receiver, &s, &lrt, cfg.sigma).unwrap();
        let oracle_rule = binsig::grid_receiver_best_response(&s, &cfg, &grid);
        let oracle_risk = agent_risk(&cfg.receiver, &s, &oracle_rule, cfg.sigma).unwrap();
        assert!(lrt_risk <= oracle_risk + 1e-9);
    }
    // Interior optimum is stationary under central differences.
    let fig1 = binsig::figure1_config();
    let sol = solve_stackelberg(&fig1).unwrap();
    assert_eq!(sol.cell, TableCell::InteriorOptimum);
    let h = 1e-5;
    let f = |d: f64| binsig::transmitter_risk_of_distance(d, &fig1).unwrap();
    let derivative = (f(sol.d_star + h) - f(sol.d_star - h)) / (2.0 * h);
    assert!(
        derivative.abs() < 1e-4,
        "risk-curve derivative at d* = {derivative}"
    );
    println!(
        "ACCEPTANCE 7 numeric-foundations: PASS — Q within 1e-10 of quadrature, LRT optimal on 100 draws, |curve'(d*)| = {:.2e}",
        derivative.abs()
    );
}
