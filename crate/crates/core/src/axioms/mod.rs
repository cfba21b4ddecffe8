//! Executable axioms for menu-dependent preference families.
//!
//! Each axiom is a predicate over acts, menus and mixture weights. The
//! universally quantified statements are checked on seeded random
//! instances; generators construct the premises directly (indifferent pairs
//! by state permutation, block-constant menus for symmetry, dominated and
//! lifted acts for the menu-independence axioms) instead of waiting for
//! sampling to stumble on them.

mod generate;
mod instance;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem_file::json_error;
use crate::rules::Rule;

pub use generate::sample_instance;
pub use instance::{judge, Instance, Judgement, STRICT_MARGIN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomId {
    Monotonicity,
    Completeness,
    Nontriviality,
    MixtureContinuity,
    Transitivity,
    ConstantActMenuIndependence,
    Independence,
    Symmetry,
    AmbiguityAversion,
    Ina,
    Inwa,
}

impl AxiomId {
    pub const ALL: [AxiomId; 11] = [
        AxiomId::Monotonicity,
        AxiomId::Completeness,
        AxiomId::Nontriviality,
        AxiomId::MixtureContinuity,
        AxiomId::Transitivity,
        AxiomId::ConstantActMenuIndependence,
        AxiomId::Independence,
        AxiomId::Symmetry,
        AxiomId::AmbiguityAversion,
        AxiomId::Ina,
        AxiomId::Inwa,
    ];

    /// The ten axioms that characterize maximin safety.
    pub const SAFETY: [AxiomId; 10] = [
        AxiomId::Monotonicity,
        AxiomId::Completeness,
        AxiomId::Nontriviality,
        AxiomId::MixtureContinuity,
        AxiomId::Transitivity,
        AxiomId::ConstantActMenuIndependence,
        AxiomId::Independence,
        AxiomId::Symmetry,
        AxiomId::AmbiguityAversion,
        AxiomId::Inwa,
    ];

    /// The same list with INWA swapped for INA, as satisfied by minimax regret.
    pub const REGRET: [AxiomId; 10] = [
        AxiomId::Monotonicity,
        AxiomId::Completeness,
        AxiomId::Nontriviality,
        AxiomId::MixtureContinuity,
        AxiomId::Transitivity,
        AxiomId::ConstantActMenuIndependence,
        AxiomId::Independence,
        AxiomId::Symmetry,
        AxiomId::AmbiguityAversion,
        AxiomId::Ina,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AxiomId::Monotonicity => "monotonicity",
            AxiomId::Completeness => "completeness",
            AxiomId::Nontriviality => "nontriviality",
            AxiomId::MixtureContinuity => "mixture-continuity",
            AxiomId::Transitivity => "transitivity",
            AxiomId::ConstantActMenuIndependence => "constant-act-menu-independence",
            AxiomId::Independence => "independence",
            AxiomId::Symmetry => "symmetry",
            AxiomId::AmbiguityAversion => "ambiguity-aversion",
            AxiomId::Ina => "ina",
            AxiomId::Inwa => "inwa",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    /// Accepts the kebab-case names, a few short aliases, and the axiom
    /// numbers 1 to 10.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if let Some(id) = AxiomId::ALL.iter().find(|a| a.name() == s) {
            return Ok(*id);
        }
        let id = match s.as_str() {
            "continuity" => AxiomId::MixtureContinuity,
            "menu-independence" | "constant-acts" => AxiomId::ConstantActMenuIndependence,
            "ambiguity" => AxiomId::AmbiguityAversion,
            _ => match s.parse::<usize>() {
                Ok(n @ 1..=10) => AxiomId::SAFETY[n - 1],
                _ => return Err(Error::validation("axiom", format!("unknown axiom `{s}`"))),
            },
        };
        Ok(id)
    }
}

/// Controls instance generation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InstanceGenConfig {
    pub max_states: usize,
    pub max_generators: usize,
    pub max_prizes: usize,
    /// Prize utilities are `lo + k` for integers `k` with `lo + k <= hi`.
    pub utility_range: (f64, f64),
    /// Interior points tried when searching mixture weights.
    pub mixture_grid: usize,
    pub seed: u64,
    pub trials: u64,
    /// Trial 0 of the INA check replays the decoy-reversal example.
    pub include_fixtures: bool,
}

impl Default for InstanceGenConfig {
    fn default() -> Self {
        InstanceGenConfig {
            max_states: 6,
            max_generators: 5,
            max_prizes: 4,
            utility_range: (0.0, 10.0),
            mixture_grid: 99,
            seed: 0x5afe_7e57,
            trials: 10_000,
            include_fixtures: true,
        }
    }
}

impl InstanceGenConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, msg: &str| Err(Error::validation(field, msg));
        if self.max_states < 1 {
            return bad("max_states", "must be at least 1");
        }
        if self.max_generators < 1 {
            return bad("max_generators", "must be at least 1");
        }
        if self.max_prizes < 2 {
            return bad("max_prizes", "must be at least 2");
        }
        if self.mixture_grid < 3 {
            return bad("mixture_grid", "must be at least 3");
        }
        if self.trials < 1 {
            return bad("trials", "must be at least 1");
        }
        let (lo, hi) = self.utility_range;
        if !(lo.is_finite() && hi.is_finite() && hi - lo >= 1.0) {
            return bad("utility_range", "must be a finite interval at least 1 wide");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    HeldOnAllTrials,
    Violated,
}

/// A reproducible counterexample: the axiom, the rule and the instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub axiom: AxiomId,
    pub rule: Rule,
    pub trial: u64,
    #[serde(flatten)]
    pub instance: Instance,
}

impl Witness {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    /// `true` iff the instance still violates the axiom under the rule.
    pub fn replay(&self) -> Result<bool> {
        Ok(judge(self.axiom, self.rule, &self.instance)? == Judgement::Violated)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub rule: Rule,
    /// Trials run; the check stops at the first violation.
    pub trials: u64,
    /// Trials whose sampled instance did not meet the premise.
    pub vacuous: u64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomReport {
    pub fn held(&self) -> bool {
        self.verdict == Verdict::HeldOnAllTrials
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs `cfg.trials` seeded trials of one axiom against one rule.
pub fn check_axiom(axiom: AxiomId, rule: Rule, cfg: &InstanceGenConfig) -> Result<AxiomReport> {
    cfg.validate()?;
    let mut vacuous = 0;
    let mut first: Option<Witness> = None;
    for trial in 0..cfg.trials {
        let instance = sample_instance(axiom, rule, cfg, trial)?;
        let judgement = judge(axiom, rule, &instance)?;
        if axiom == AxiomId::Nontriviality {
            // existential: one strict preference anywhere suffices
            if judgement == Judgement::Held {
                return Ok(AxiomReport {
                    axiom,
                    rule,
                    trials: trial + 1,
                    vacuous,
                    verdict: Verdict::HeldOnAllTrials,
                    witness: None,
                });
            }
            first.get_or_insert(Witness {
                axiom,
                rule,
                trial,
                instance,
            });
            continue;
        }
        match judgement {
            Judgement::Vacuous => vacuous += 1,
            Judgement::Held => {}
            Judgement::Violated => {
                return Ok(AxiomReport {
                    axiom,
                    rule,
                    trials: trial + 1,
                    vacuous,
                    verdict: Verdict::Violated,
                    witness: Some(Witness {
                        axiom,
                        rule,
                        trial,
                        instance,
                    }),
                });
            }
        }
    }
    let verdict = if first.is_some() {
        Verdict::Violated
    } else {
        Verdict::HeldOnAllTrials
    };
    Ok(AxiomReport {
        axiom,
        rule,
        trials: cfg.trials,
        vacuous,
        verdict,
        witness: first,
    })
}

/// Checks each axiom in `axioms` against `rule`.
pub fn soundness_suite(
    rule: Rule,
    axioms: &[AxiomId],
    cfg: &InstanceGenConfig,
) -> Result<Vec<AxiomReport>> {
    axioms.iter().map(|&a| check_axiom(a, rule, cfg)).collect()
}

/// The ten characterizing axioms against maximin safety.
pub fn theorem1_soundness_suite(cfg: &InstanceGenConfig) -> Result<Vec<AxiomReport>> {
    soundness_suite(Rule::MaximinSafety, &AxiomId::SAFETY, cfg)
}

/// Re-judges a report's witness on its own.
pub fn replay_witness(report: &AxiomReport) -> Result<bool> {
    report
        .witness
        .as_ref()
        .ok_or_else(|| Error::contract("report carries no witness"))?
        .replay()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: u64) -> InstanceGenConfig {
        InstanceGenConfig {
            trials,
            ..InstanceGenConfig::default()
        }
    }

    #[test]
    fn axiom_names_parse() {
        for id in AxiomId::ALL {
            assert_eq!(id.name().parse::<AxiomId>().unwrap(), id);
        }
        assert_eq!("10".parse::<AxiomId>().unwrap(), AxiomId::Inwa);
        assert_eq!(
            "continuity".parse::<AxiomId>().unwrap(),
            AxiomId::MixtureContinuity
        );
        assert!("11".parse::<AxiomId>().is_err());
        assert!("sure-thing".parse::<AxiomId>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(InstanceGenConfig::default().validate().is_ok());
        let bad = [
            InstanceGenConfig {
                max_prizes: 1,
                ..Default::default()
            },
            InstanceGenConfig {
                mixture_grid: 2,
                ..Default::default()
            },
            InstanceGenConfig {
                max_states: 0,
                ..Default::default()
            },
            InstanceGenConfig {
                utility_range: (0.0, 0.5),
                ..Default::default()
            },
            InstanceGenConfig {
                trials: 0,
                ..Default::default()
            },
        ];
        for cfg in bad {
            assert!(check_axiom(AxiomId::Completeness, Rule::MaximinSafety, &cfg).is_err());
        }
    }

    #[test]
    fn reversal_fixture_violates_ina_for_safety() {
        let report = check_axiom(AxiomId::Ina, Rule::MaximinSafety, &small(10)).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
        let witness = report.witness.as_ref().unwrap();
        assert_eq!(witness.trial, 0);
        assert_eq!(witness.instance.roles["added"], "a4");
        assert!(replay_witness(&report).unwrap());
    }

    #[test]
    fn removing_the_decoy_removes_the_violation() {
        let report = check_axiom(AxiomId::Ina, Rule::MaximinSafety, &small(1)).unwrap();
        let mut witness = report.witness.unwrap();
        witness
            .instance
            .menus
            .get_mut("Ma")
            .unwrap()
            .retain(|a| a != "a4");
        assert!(!witness.replay().unwrap());
    }

    #[test]
    fn corrupted_witness_is_a_parse_error() {
        assert!(matches!(
            Witness::from_json("{\"axiom\": \"ina\", "),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Witness::from_json("{\"axiom\": \"zzz\"}"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn held_reports_have_no_witness() {
        let report = check_axiom(AxiomId::Inwa, Rule::MaximinSafety, &small(200)).unwrap();
        assert!(report.held());
        assert!(report.witness.is_none());
        assert!(replay_witness(&report).is_err());
    }

    #[test]
    fn maximin_utility_fails_independence() {
        let report =
            check_axiom(AxiomId::Independence, Rule::MaximinUtility, &small(2000)).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
        assert!(replay_witness(&report).unwrap());
    }

    #[test]
    fn regret_fails_inwa() {
        let report = check_axiom(AxiomId::Inwa, Rule::MinimaxRegret, &small(10_000)).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
        assert!(replay_witness(&report).unwrap());
    }
}
