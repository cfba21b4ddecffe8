//! The JSON problem document read by the CLI and embedded in axiom
//! witnesses.
//!
//! ```json
//! {
//!   "states": ["s1", "s2"],
//!   "acts": [{"name": "a1", "utilities": [4, 4]}, {"name": "a2", "utilities": [2, 6]}],
//!   "menu": ["a1", "a2"],
//!   "credal": [[0.5, 0.5]]
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::decision::{DecisionProblem, Menu};
use crate::error::{Error, Result};
use crate::rules::CredalSet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActEntry {
    pub name: String,
    pub utilities: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub states: Vec<String>,
    pub acts: Vec<ActEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub menu: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub credal: Option<Vec<Vec<f64>>>,
}

/// A validated problem document.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedProblem {
    pub problem: DecisionProblem,
    /// All acts unless the document names a menu.
    pub menu: Menu,
    pub credal: Option<CredalSet>,
}

impl ProblemFile {
    pub fn from_problem(problem: &DecisionProblem, menu: Option<&Menu>) -> Self {
        ProblemFile {
            states: problem.state_ids().to_vec(),
            acts: problem
                .act_ids()
                .iter()
                .zip(problem.rows())
                .map(|(name, row)| ActEntry {
                    name: name.clone(),
                    utilities: row.to_vec(),
                })
                .collect(),
            menu: menu.map(|m| m.iter().map(|a| problem.act_ids()[a].clone()).collect()),
            credal: None,
        }
    }

    pub fn to_problem(&self) -> Result<DecisionProblem> {
        DecisionProblem::new(
            self.states.clone(),
            self.acts.iter().map(|a| a.name.clone()).collect(),
            self.acts.iter().map(|a| a.utilities.clone()).collect(),
        )
    }

    pub fn validate(&self) -> Result<ParsedProblem> {
        let problem = self.to_problem()?;
        let menu = match &self.menu {
            Some(names) => Menu::from_names(&problem, names)?,
            None => Menu::all(&problem),
        };
        let credal = match &self.credal {
            Some(vectors) => {
                let set = CredalSet::new(vectors.clone())?;
                if set.dimension() != problem.n_states() {
                    return Err(Error::validation(
                        "credal",
                        format!(
                            "distributions have {} entries but there are {} states",
                            set.dimension(),
                            problem.n_states()
                        ),
                    ));
                }
                Some(set)
            }
            None => None,
        };
        Ok(ParsedProblem {
            problem,
            menu,
            credal,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem file serializes")
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses and validates a problem document.
pub fn parse_problem(text: &str) -> Result<ParsedProblem> {
    let file: ProblemFile = serde_json::from_str(text).map_err(json_error)?;
    file.validate()
}

pub fn read_problem(path: &Path) -> Result<ParsedProblem> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_problem(&text)
}

/// Serializes a problem (and optionally its menu) as a problem document.
pub fn serialize_problem(problem: &DecisionProblem, menu: Option<&Menu>) -> String {
    ProblemFile::from_problem(problem, menu).to_json()
}
