//! Finite decision problems without probabilities: a dense utility matrix
//! indexed by (act, state), menus of feasible acts, and the dominance
//! predicates the rules and axioms are built from.
//!
//! All comparisons are exact floating-point comparisons.

use crate::error::{Error, Result};

/// A finite decision problem: states, acts and the utility `U(a, s)` of
/// every act in every state.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    state_ids: Vec<String>,
    act_ids: Vec<String>,
    utilities: Vec<f64>,
}

fn check_unique(field: &str, labels: &[String]) -> Result<()> {
    let mut sorted: Vec<&str> = labels.iter().map(String::as_str).collect();
    sorted.sort_unstable();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::validation(
            field,
            format!("duplicate label `{}`", w[0]),
        )),
        None => Ok(()),
    }
}

impl DecisionProblem {
    /// Builds a problem from labelled rows, one row of utilities per act.
    pub fn new(state_ids: Vec<String>, act_ids: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if state_ids.is_empty() {
            return Err(Error::validation(
                "states",
                "at least one state is required",
            ));
        }
        if act_ids.is_empty() {
            return Err(Error::validation("acts", "at least one act is required"));
        }
        if rows.len() != act_ids.len() {
            return Err(Error::validation(
                "acts",
                format!("{} labels but {} utility rows", act_ids.len(), rows.len()),
            ));
        }
        check_unique("states", &state_ids)?;
        check_unique("acts", &act_ids)?;

        let n_states = state_ids.len();
        let mut utilities = Vec::with_capacity(n_states * rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_states {
                return Err(Error::validation(
                    format!("acts[{i}].utilities"),
                    format!("expected {n_states} values, found {}", row.len()),
                ));
            }
            if let Some(s) = row.iter().position(|u| !u.is_finite()) {
                return Err(Error::validation(
                    format!("acts[{i}].utilities[{s}]"),
                    "utility must be a finite number",
                ));
            }
            utilities.extend_from_slice(row);
        }
        Ok(DecisionProblem {
            state_ids,
            act_ids,
            utilities,
        })
    }

    /// Builds a problem with generated labels `s1..sn` and `a1..am`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n_states = rows.first().map_or(0, Vec::len);
        let states = (1..=n_states).map(|i| format!("s{i}")).collect();
        let acts = (1..=rows.len()).map(|i| format!("a{i}")).collect();
        Self::new(states, acts, rows)
    }

    pub fn n_states(&self) -> usize {
        self.state_ids.len()
    }

    pub fn n_acts(&self) -> usize {
        self.act_ids.len()
    }

    pub fn state_ids(&self) -> &[String] {
        &self.state_ids
    }

    pub fn act_ids(&self) -> &[String] {
        &self.act_ids
    }

    pub fn act_index(&self, name: &str) -> Option<usize> {
        self.act_ids.iter().position(|a| a == name)
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.state_ids.iter().position(|s| s == name)
    }

    pub(crate) fn check_act(&self, act: usize) -> Result<()> {
        if act < self.n_acts() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "act",
                index: act,
                len: self.n_acts(),
            })
        }
    }

    pub(crate) fn check_state(&self, state: usize) -> Result<()> {
        if state < self.n_states() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                what: "state",
                index: state,
                len: self.n_states(),
            })
        }
    }

    /// `U(act, state)`, exactly as stored.
    pub fn utility(&self, act: usize, state: usize) -> Result<f64> {
        self.check_act(act)?;
        self.check_state(state)?;
        Ok(self.utilities[act * self.n_states() + state])
    }

    /// The utility row of an act. Panics on an out-of-range index.
    pub fn row(&self, act: usize) -> &[f64] {
        let n = self.n_states();
        &self.utilities[act * n..(act + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.utilities.chunks_exact(self.n_states())
    }

    /// Returns a copy of the problem with one more act appended.
    pub fn with_act(&self, name: impl Into<String>, row: Vec<f64>) -> Result<Self> {
        let mut act_ids = self.act_ids.clone();
        act_ids.push(name.into());
        let mut rows: Vec<Vec<f64>> = self.rows().map(<[f64]>::to_vec).collect();
        rows.push(row);
        Self::new(self.state_ids.clone(), act_ids, rows)
    }

    /// Applies `u -> scale * u + shift` to every utility.
    pub fn affine(&self, scale: f64, shift: f64) -> Result<Self> {
        let rows = self
            .rows()
            .map(|r| r.iter().map(|u| scale * u + shift).collect())
            .collect();
        Self::new(self.state_ids.clone(), self.act_ids.clone(), rows)
    }
}

/// A nonempty set of acts of one problem, kept in the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Menu {
    members: Vec<usize>,
}

impl Menu {
    pub fn new(problem: &DecisionProblem, members: Vec<usize>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::validation(
                "menu",
                "a menu must contain at least one act",
            ));
        }
        let mut seen = vec![false; problem.n_acts()];
        for &m in &members {
            problem.check_act(m)?;
            if std::mem::replace(&mut seen[m], true) {
                return Err(Error::validation(
                    "menu",
                    format!("act `{}` listed twice", problem.act_ids()[m]),
                ));
            }
        }
        Ok(Menu { members })
    }

    /// Every act of the problem, in problem order.
    pub fn all(problem: &DecisionProblem) -> Self {
        Menu {
            members: (0..problem.n_acts()).collect(),
        }
    }

    /// Resolves act names to a menu.
    pub fn from_names<S: AsRef<str>>(problem: &DecisionProblem, names: &[S]) -> Result<Self> {
        let members = names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                problem
                    .act_index(n)
                    .ok_or_else(|| Error::validation("menu", format!("unknown act `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(problem, members)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, act: usize) -> bool {
        self.members.contains(&act)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// The menu with `act` appended. Errors if it is already a member.
    pub fn with(&self, problem: &DecisionProblem, act: usize) -> Result<Self> {
        problem.check_act(act)?;
        if self.contains(act) {
            return Err(Error::contract(format!(
                "act `{}` is already in the menu",
                problem.act_ids()[act]
            )));
        }
        let mut members = self.members.clone();
        members.push(act);
        Ok(Menu { members })
    }

    pub(crate) fn check_member(&self, problem: &DecisionProblem, act: usize) -> Result<()> {
        problem.check_act(act)?;
        if self.contains(act) {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "act `{}` is not a member of the menu",
                problem.act_ids()[act]
            )))
        }
    }

    pub(crate) fn check_against(&self, problem: &DecisionProblem) -> Result<()> {
        self.members.iter().try_for_each(|&m| problem.check_act(m))
    }
}

/// Strict dominance: `U(a, s) > U(b, s)` in every state.
pub fn dominates(problem: &DecisionProblem, a: usize, b: usize) -> Result<bool> {
    problem.check_act(a)?;
    problem.check_act(b)?;
    Ok(row_dominates(problem.row(a), problem.row(b)))
}

pub(crate) fn row_dominates(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x > y)
}

/// The members `act` is compared against: everyone but `act` itself,
/// unless `act` is the only member.
fn rivals(menu: &Menu, act: usize) -> Menu {
    let others: Vec<usize> = menu.iter().filter(|&m| m != act).collect();
    if others.is_empty() {
        menu.clone()
    } else {
        Menu { members: others }
    }
}

/// In every state some other menu member does no better than `act`.
pub fn is_never_strictly_worst(problem: &DecisionProblem, menu: &Menu, act: usize) -> Result<bool> {
    problem.check_act(act)?;
    menu.check_against(problem)?;
    Ok(row_never_strictly_worst(
        problem,
        &rivals(menu, act),
        problem.row(act),
    ))
}

/// In every state some other menu member does at least as well as `act`.
pub fn is_never_strictly_optimal(
    problem: &DecisionProblem,
    menu: &Menu,
    act: usize,
) -> Result<bool> {
    problem.check_act(act)?;
    menu.check_against(problem)?;
    Ok(row_never_strictly_optimal(
        problem,
        &rivals(menu, act),
        problem.row(act),
    ))
}

pub(crate) fn row_never_strictly_worst(
    problem: &DecisionProblem,
    menu: &Menu,
    row: &[f64],
) -> bool {
    row.iter()
        .enumerate()
        .all(|(s, &u)| menu.iter().any(|m| u >= problem.row(m)[s]))
}

pub(crate) fn row_never_strictly_optimal(
    problem: &DecisionProblem,
    menu: &Menu,
    row: &[f64],
) -> bool {
    row.iter()
        .enumerate()
        .all(|(s, &u)| menu.iter().any(|m| problem.row(m)[s] >= u))
}
