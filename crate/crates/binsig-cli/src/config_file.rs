//! JSON game-config schema and preset resolution.
//!
//! The on-disk format mirrors the game structure:
//!
//! ```json
//! {
//!   "transmitter": { "priors": [0.25, 0.75], "costs": [0.6, 0.4, 0.4, 0.6] },
//!   "receiver":    { "priors": [0.25, 0.75], "costs": [0.0, 0.4, 0.9, 0.0] },
//!   "channel":     { "p0": 1.0, "p1": 1.0, "sigma": 0.1 }
//! }
//! ```
//!
//! `costs` is ordered `[c00, c01, c10, c11]`. Parse and validation errors
//! name the offending field path.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use binsig::{
    biased_cost_config, figure1_config, subjective_priors_config, AgentSpec, BiasedCostScenario,
    CostMatrix, GameConfig, Priors,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct AgentFile {
    pub priors: [f64; 2],
    pub costs: [f64; 4],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ChannelFile {
    pub p0: f64,
    pub p1: f64,
    pub sigma: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ConfigFile {
    pub transmitter: AgentFile,
    pub receiver: AgentFile,
    pub channel: ChannelFile,
}

impl ConfigFile {
    pub fn from_game(config: &GameConfig) -> Self {
        let agent = |a: &AgentSpec| AgentFile {
            priors: [a.priors.pi0, a.priors.pi1],
            costs: [a.costs.c00, a.costs.c01, a.costs.c10, a.costs.c11],
        };
        ConfigFile {
            transmitter: agent(&config.transmitter),
            receiver: agent(&config.receiver),
            channel: ChannelFile {
                p0: config.p0,
                p1: config.p1,
                sigma: config.sigma,
            },
        }
    }

    pub fn into_game(self) -> Result<GameConfig> {
        let agent = |name: &str, a: &AgentFile| -> Result<AgentSpec> {
            let priors =
                Priors::new(a.priors[0], a.priors[1]).map_err(|e| anyhow!("{name}.priors: {e}"))?;
            let costs = CostMatrix::new(a.costs[0], a.costs[1], a.costs[2], a.costs[3])
                .map_err(|e| anyhow!("{name}.costs: {e}"))?;
            Ok(AgentSpec::new(priors, costs))
        };
        let transmitter = agent("transmitter", &self.transmitter)?;
        let receiver = agent("receiver", &self.receiver)?;
        GameConfig::new(
            transmitter,
            receiver,
            self.channel.p0,
            self.channel.p1,
            self.channel.sigma,
        )
        .map_err(|e| anyhow!("{e}"))
    }
}

pub fn load(path: &Path) -> Result<GameConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config {}", path.display()))?;
    let file: ConfigFile = serde_json::from_str(&text)
        .with_context(|| format!("cannot parse config {}", path.display()))?;
    file.into_game()
}

pub fn dump(config: &GameConfig) -> String {
    serde_json::to_string_pretty(&ConfigFile::from_game(config)).expect("config serializes")
}

/// Scenario knobs shared by the preset builders.
#[derive(Debug, Clone, Default)]
pub struct PresetOptions {
    pub alpha: Option<f64>,
    pub pi0: Option<f64>,
    pub pi0_t: Option<f64>,
    pub pi0_r: Option<f64>,
    pub costs: Option<[f64; 4]>,
    pub p0: Option<f64>,
    pub p1: Option<f64>,
    pub sigma: Option<f64>,
}

pub fn build_preset(name: &str, opts: &PresetOptions) -> Result<GameConfig> {
    match name {
        "figure1" => Ok(figure1_config()),
        "biased-cost" => {
            let sc = BiasedCostScenario {
                pi0: opts.pi0.unwrap_or(0.5),
                alpha: opts
                    .alpha
                    .ok_or_else(|| anyhow!("preset biased-cost requires --alpha"))?,
                p0: opts.p0.unwrap_or(1.0),
                p1: opts.p1.unwrap_or(1.0),
                sigma: opts.sigma.unwrap_or(1.0),
            };
            biased_cost_config(&sc).map_err(|e| anyhow!("{e}"))
        }
        "subjective-priors" => {
            let c = opts.costs.unwrap_or([0.0, 1.0, 1.0, 0.0]);
            let costs =
                CostMatrix::new(c[0], c[1], c[2], c[3]).map_err(|e| anyhow!("costs: {e}"))?;
            let pi0_t = opts
                .pi0_t
                .ok_or_else(|| anyhow!("preset subjective-priors requires --pi0-t"))?;
            let pi0_r = opts
                .pi0_r
                .ok_or_else(|| anyhow!("preset subjective-priors requires --pi0-r"))?;
            subjective_priors_config(
                pi0_t,
                pi0_r,
                costs,
                opts.p0.unwrap_or(1.0),
                opts.p1.unwrap_or(1.0),
                opts.sigma.unwrap_or(1.0),
            )
            .map_err(|e| anyhow!("{e}"))
        }
        other => {
            bail!("unknown preset '{other}' (expected figure1, biased-cost or subjective-priors)")
        }
    }
}
