//! Dominance structure and decoy effects.
//!
//! A decoy is an act added to a menu; its effect is read off by ranking the
//! base menu before and after the addition.

use std::cmp::Ordering;

use serde::Serialize;

use crate::decision::{row_dominates, DecisionProblem, Menu};
use crate::error::{Error, Result};
use crate::rules::{rank, Ranking, Rule};

/// Every `(dominated, dominator)` pair within the menu.
pub fn find_dominated(problem: &DecisionProblem, menu: &Menu) -> Result<Vec<(usize, usize)>> {
    menu.check_against(problem)?;
    let mut pairs = Vec::new();
    for dominated in menu.iter() {
        for dominator in menu.iter() {
            if dominator != dominated
                && row_dominates(problem.row(dominator), problem.row(dominated))
            {
                pairs.push((dominated, dominator));
            }
        }
    }
    Ok(pairs)
}

/// Dominated by some menu member but not by every other member.
pub fn is_asymmetrically_dominated(
    problem: &DecisionProblem,
    menu: &Menu,
    act: usize,
) -> Result<bool> {
    menu.check_member(problem, act)?;
    if menu.len() < 3 {
        return Err(Error::contract(
            "asymmetric dominance needs a menu of at least three acts",
        ));
    }
    let row = problem.row(act);
    let others = || menu.iter().filter(|&b| b != act);
    let some = others().any(|a| row_dominates(problem.row(a), row));
    let not_all = others().any(|b| !row_dominates(problem.row(b), row));
    Ok(some && not_all)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecoyKind {
    /// Base order among the original acts is unchanged.
    NoEffect,
    /// `target` was tied for the top and is now the unique top.
    TieBreak { target: usize },
    /// `promoted` was strictly below `demoted` and is now strictly above it.
    Reversal { promoted: usize, demoted: usize },
    /// The base order changed in some other way (a lower tie broken, or a
    /// strict preference turned into indifference).
    OrderChanged,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecoyOutcome {
    pub kind: DecoyKind,
    pub before: Ranking,
    pub after: Ranking,
}

impl DecoyOutcome {
    /// One-line verdict such as `REVERSAL: a3 over a2`.
    pub fn verdict(&self, problem: &DecisionProblem) -> String {
        let name = |a: usize| problem.act_ids()[a].as_str();
        match self.kind {
            DecoyKind::NoEffect => "NO EFFECT".to_string(),
            DecoyKind::TieBreak { target } => format!("TIE-BREAK: {}", name(target)),
            DecoyKind::Reversal { promoted, demoted } => {
                format!("REVERSAL: {} over {}", name(promoted), name(demoted))
            }
            DecoyKind::OrderChanged => "ORDER CHANGED".to_string(),
        }
    }
}

fn classify(base: &[usize], before: &Ranking, after: &Ranking) -> DecoyKind {
    let top_before = before.top();
    if let Some(target) = after.unique_top() {
        if top_before.len() > 1 && top_before.contains(&target) {
            return DecoyKind::TieBreak { target };
        }
    }
    let cmp = |r: &Ranking, a, b| r.compare(a, b).unwrap_or(Ordering::Equal);
    for promoted in after
        .entries()
        .iter()
        .map(|e| e.act)
        .filter(|a| base.contains(a))
    {
        for demoted in before.entries().iter().map(|e| e.act) {
            if cmp(before, promoted, demoted) == Ordering::Less
                && cmp(after, promoted, demoted) == Ordering::Greater
            {
                return DecoyKind::Reversal { promoted, demoted };
            }
        }
    }
    let base_after = after.restricted_to(base);
    let unchanged = base.iter().all(|&a| {
        base.iter()
            .all(|&b| cmp(before, a, b) == cmp(&base_after, a, b))
    });
    if unchanged {
        DecoyKind::NoEffect
    } else {
        DecoyKind::OrderChanged
    }
}

/// Ranks `base_menu` with and without `decoy` and classifies the change.
pub fn decoy_effect(
    rule: Rule,
    problem: &DecisionProblem,
    base_menu: &Menu,
    decoy: usize,
) -> Result<DecoyOutcome> {
    let extended = base_menu.with(problem, decoy)?;
    let before = rank(rule, problem, base_menu)?;
    let after = rank(rule, problem, &extended)?;
    let kind = classify(base_menu.members(), &before, &after);
    Ok(DecoyOutcome {
        kind,
        before,
        after,
    })
}

fn fresh_name(problem: &DecisionProblem) -> String {
    let mut name = "decoy".to_string();
    let mut k = 1;
    while problem.act_index(&name).is_some() {
        k += 1;
        name = format!("decoy{k}");
    }
    name
}

/// Looks for a utility row, dominated by `target`, whose addition makes
/// `target` the unique maximin-safety choice.
///
/// The candidate sits `k` below the target in every state, which lowers
/// the column minimum wherever the target was worst. `k` runs over
/// `epsilon, 2 epsilon, 4 epsilon, 8 epsilon`; each candidate is checked
/// through [`decoy_effect`]. Returns `None` when none verifies, and also
/// when the target is already the unique choice.
pub fn synthesize_decoy(
    problem: &DecisionProblem,
    base_menu: &Menu,
    target: usize,
    epsilon: f64,
) -> Result<Option<Vec<f64>>> {
    base_menu.check_member(problem, target)?;
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::validation(
            "epsilon",
            "must be a positive finite number",
        ));
    }
    let before = rank(Rule::MaximinSafety, problem, base_menu)?;
    if before.unique_top() == Some(target) {
        return Ok(None);
    }
    let target_row = problem.row(target);
    let name = fresh_name(problem);
    for k in [1.0, 2.0, 4.0, 8.0].map(|m| m * epsilon) {
        let row: Vec<f64> = target_row.iter().map(|&u| u - k).collect();
        if !row_dominates(target_row, &row) {
            continue;
        }
        let extended = problem.with_act(name.clone(), row.clone())?;
        let decoy = extended.n_acts() - 1;
        let outcome = decoy_effect(Rule::MaximinSafety, &extended, base_menu, decoy)?;
        let promotes = match outcome.kind {
            DecoyKind::TieBreak { target: t } => t == target,
            DecoyKind::Reversal { promoted, .. } => promoted == target,
            _ => false,
        };
        if promotes && outcome.after.unique_top() == Some(target) {
            return Ok(Some(row));
        }
    }
    Ok(None)
}
