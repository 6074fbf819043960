//! Machine-readable summaries of solver outcomes.

use serde::{Deserialize, Serialize};

use crate::detection::{
    error_probabilities, DecisionRule, ErrorProbabilities, GameConfig, SignalPair,
};
use crate::error::Result;
use crate::nash::{BrOutcome, NashClassification, NashTag};
use crate::stackelberg::StackelbergSolution;
use crate::team::TeamSolution;

/// One solved game, flattened for serialization. Fields that do not apply
/// to the solution concept are omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    /// Solution concept: `team`, `stackelberg` or `nash`.
    pub concept: String,
    /// Classification tag (concept-specific).
    pub classification: String,
    pub informative: Option<bool>,
    pub tau: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signals: Option<SignalPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<DecisionRule>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transmitter_risk: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub receiver_risk: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_probabilities: Option<ErrorProbabilities>,
}

impl EquilibriumReport {
    pub fn from_team(sol: &TeamSolution, config: &GameConfig) -> Result<Self> {
        let e = error_probabilities(&sol.signals, &sol.rule, config.sigma)?;
        Ok(EquilibriumReport {
            concept: "team".into(),
            classification: if sol.informative {
                "informative".into()
            } else {
                "non-informative".into()
            },
            informative: Some(sol.informative),
            tau: sol.tau,
            zeta: None,
            k0: None,
            k1: None,
            xi0: None,
            xi1: None,
            d_max: Some(config.d_max()),
            d_star: None,
            signals: Some(sol.signals),
            rule: Some(sol.rule),
            transmitter_risk: Some(sol.risk),
            receiver_risk: Some(sol.risk),
            error_probabilities: Some(e),
        })
    }

    pub fn from_stackelberg(sol: &StackelbergSolution, config: &GameConfig) -> Result<Self> {
        let e = error_probabilities(&sol.signals, &sol.rule, config.sigma)?;
        Ok(EquilibriumReport {
            concept: "stackelberg".into(),
            classification: sol.cell.as_str().into(),
            informative: Some(sol.informative),
            tau: sol.params.tau,
            zeta: Some(sol.params.zeta),
            k0: Some(sol.params.k0),
            k1: Some(sol.params.k1),
            xi0: None,
            xi1: None,
            d_max: Some(sol.params.d_max),
            d_star: Some(sol.d_star),
            signals: Some(sol.signals),
            rule: Some(sol.rule),
            transmitter_risk: Some(sol.transmitter_risk),
            receiver_risk: Some(sol.receiver_risk),
            error_probabilities: Some(e),
        })
    }

    pub fn from_nash(
        class: &NashClassification,
        profile: Option<&(SignalPair, DecisionRule)>,
        config: &GameConfig,
    ) -> Result<Self> {
        let mut report = EquilibriumReport {
            concept: "nash".into(),
            classification: class.tag.as_str().into(),
            informative: Some(class.tag == NashTag::UniqueInformative),
            tau: class.tau,
            zeta: None,
            k0: None,
            k1: None,
            xi0: Some(class.xi0),
            xi1: Some(class.xi1),
            d_max: Some(config.d_max()),
            d_star: None,
            signals: None,
            rule: None,
            transmitter_risk: None,
            receiver_risk: None,
            error_probabilities: None,
        };
        if let Some((s, rule)) = profile {
            let e = error_probabilities(s, rule, config.sigma)?;
            report.signals = Some(*s);
            report.rule = Some(*rule);
            report.transmitter_risk = Some(crate::detection::bayes_risk(&config.transmitter, &e));
            report.receiver_risk = Some(crate::detection::bayes_risk(&config.receiver, &e));
            report.error_probabilities = Some(e);
        }
        Ok(report)
    }
}

/// Serializable trajectory outcome name.
pub fn outcome_name(outcome: BrOutcome) -> &'static str {
    match outcome {
        BrOutcome::Converged => "converged",
        BrOutcome::CycleDetected => "cycle-detected",
        BrOutcome::MaxItersReached => "max-iters-reached",
    }
}
