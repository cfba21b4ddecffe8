//! Matrix-level axiom instances and the predicates evaluated on them.
//!
//! A sampled instance is reduced to expected utilities before it is judged,
//! so the same predicate serves both fresh trials and witness replay.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::AxiomId;
use crate::decision::{
    row_never_strictly_optimal, row_never_strictly_worst, DecisionProblem, Menu,
};
use crate::error::{Error, Result};
use crate::problem_file::ProblemFile;
use crate::rules::Rule;

/// `f` is strictly preferred to `g` iff `V(f) - V(g)` exceeds this margin.
pub const STRICT_MARGIN: f64 = 1e-9;

/// Acts, menus over them and the roles an axiom assigns.
///
/// A menu lists the generators of a convex hull. Role acts may be listed in
/// a menu or be mixtures of its generators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub problem: ProblemFile,
    pub menus: BTreeMap<String, Vec<String>>,
    pub roles: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
}

/// Outcome of judging one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Judgement {
    /// The axiom's premise does not hold here.
    Vacuous,
    Held,
    Violated,
}

struct Resolved<'a> {
    rule: Rule,
    problem: DecisionProblem,
    instance: &'a Instance,
}

impl Resolved<'_> {
    fn menu(&self, name: &str) -> Result<Menu> {
        let names = self
            .instance
            .menus
            .get(name)
            .ok_or_else(|| Error::validation("menus", format!("missing menu `{name}`")))?;
        Menu::from_names(&self.problem, names)
    }

    fn row(&self, role: &str) -> Result<&[f64]> {
        let act = self
            .instance
            .roles
            .get(role)
            .ok_or_else(|| Error::validation("roles", format!("missing role `{role}`")))?;
        let index = self.problem.act_index(act).ok_or_else(|| {
            Error::validation("roles", format!("role `{role}` names unknown act `{act}`"))
        })?;
        Ok(self.problem.row(index))
    }

    fn param(&self, name: &str) -> Result<f64> {
        self.instance
            .params
            .get(name)
            .copied()
            .ok_or_else(|| Error::validation("params", format!("missing parameter `{name}`")))
    }

    fn value(&self, menu: &Menu, row: &[f64]) -> f64 {
        self.rule.row_value(&self.problem, menu, row)
    }

    fn strictly(&self, menu: &Menu, f: &[f64], g: &[f64]) -> bool {
        self.value(menu, f) - self.value(menu, g) > STRICT_MARGIN
    }

    fn weakly(&self, menu: &Menu, f: &[f64], g: &[f64]) -> bool {
        !self.strictly(menu, g, f)
    }

    fn same_order(
        &self,
        m1: &Menu,
        f1: &[f64],
        g1: &[f64],
        m2: &Menu,
        f2: &[f64],
        g2: &[f64],
    ) -> bool {
        self.weakly(m1, f1, g1) == self.weakly(m2, f2, g2)
            && self.weakly(m1, g1, f1) == self.weakly(m2, g2, f2)
    }
}

fn verdict(premise: bool, conclusion: bool) -> Judgement {
    match (premise, conclusion) {
        (false, _) => Judgement::Vacuous,
        (true, true) => Judgement::Held,
        (true, false) => Judgement::Violated,
    }
}

fn mixture(q: f64, f: &[f64], h: &[f64]) -> Vec<f64> {
    f.iter()
        .zip(h)
        .map(|(a, b)| q * a + (1.0 - q) * b)
        .collect()
}

/// Judges `instance` against `axiom` under `rule`.
///
/// For nontriviality a single instance is `Held` when it shows a strict
/// preference; the axiom as a whole fails only if no instance does.
pub fn judge(axiom: AxiomId, rule: Rule, instance: &Instance) -> Result<Judgement> {
    let r = Resolved {
        rule,
        problem: instance.problem.to_problem()?,
        instance,
    };
    let judgement = match axiom {
        AxiomId::Monotonicity => {
            let m = r.menu("M")?;
            let (f, g) = (r.row("f")?, r.row("g")?);
            let n = r.problem.n_states();
            let mut premise = true;
            for s in 0..n {
                let pair = DecisionProblem::from_rows(vec![vec![f[s]; n], vec![g[s]; n]])?;
                let both = Menu::all(&pair);
                let cf = rule.row_value(&pair, &both, pair.row(0));
                let cg = rule.row_value(&pair, &both, pair.row(1));
                if cg - cf > STRICT_MARGIN {
                    premise = false;
                    break;
                }
            }
            verdict(premise, r.weakly(&m, f, g))
        }
        AxiomId::Completeness => {
            let m = r.menu("M")?;
            let (f, g) = (r.row("f")?, r.row("g")?);
            verdict(true, r.weakly(&m, f, g) || r.weakly(&m, g, f))
        }
        AxiomId::Nontriviality => {
            let m = r.menu("M")?;
            let (f, g) = (r.row("f")?, r.row("g")?);
            verdict(true, r.strictly(&m, f, g) || r.strictly(&m, g, f))
        }
        AxiomId::MixtureContinuity => {
            let m = r.menu("M")?;
            let (f, g, h) = (r.row("f")?, r.row("g")?, r.row("h")?);
            let grid = r.param("grid")?;
            if !(grid >= 1.0 && grid.fract() == 0.0) {
                return Err(Error::validation(
                    "params.grid",
                    "must be a positive integer",
                ));
            }
            let premise = r.strictly(&m, f, g) && r.strictly(&m, g, h);
            let conclusion = premise && {
                let steps = grid as usize;
                let weights = || (1..=steps).map(|k| k as f64 / (steps + 1) as f64);
                let upper = weights().any(|q| r.strictly(&m, &mixture(q, f, h), g));
                let lower = weights().any(|q| r.strictly(&m, g, &mixture(q, f, h)));
                upper && lower
            };
            verdict(premise, conclusion)
        }
        AxiomId::Transitivity => {
            let m = r.menu("M")?;
            let (f, g, h) = (r.row("f")?, r.row("g")?, r.row("h")?);
            let premise = r.weakly(&m, f, g) && r.weakly(&m, g, h);
            verdict(premise, r.weakly(&m, f, h))
        }
        AxiomId::ConstantActMenuIndependence => {
            let (m1, m2) = (r.menu("M")?, r.menu("M2")?);
            let (f, g) = (r.row("f")?, r.row("g")?);
            let constant = |row: &[f64]| row.iter().all(|u| *u == row[0]);
            verdict(
                constant(f) && constant(g),
                r.same_order(&m1, f, g, &m2, f, g),
            )
        }
        AxiomId::Independence => {
            let (m, mixed) = (r.menu("M")?, r.menu("Mix")?);
            let (f, g) = (r.row("f")?, r.row("g")?);
            let (pf, pg) = (r.row("pf")?, r.row("pg")?);
            verdict(true, r.same_order(&m, f, g, &mixed, pf, pg))
        }
        AxiomId::Symmetry => {
            let (m, swapped) = (r.menu("M")?, r.menu("Ms")?);
            let (f, g) = (r.row("f")?, r.row("g")?);
            let (fs, gs) = (r.row("fs")?, r.row("gs")?);
            verdict(true, r.same_order(&m, f, g, &swapped, fs, gs))
        }
        AxiomId::AmbiguityAversion => {
            let m = r.menu("M")?;
            let (f, g, mix) = (r.row("f")?, r.row("g")?, r.row("mix")?);
            let indifferent = r.weakly(&m, f, g) && r.weakly(&m, g, f);
            verdict(indifferent, r.weakly(&m, mix, g))
        }
        AxiomId::Ina | AxiomId::Inwa => {
            let (m, extended) = (r.menu("M")?, r.menu("Ma")?);
            let (f, g, added) = (r.row("f")?, r.row("g")?, r.row("added")?);
            let premise = if axiom == AxiomId::Ina {
                row_never_strictly_optimal(&r.problem, &m, added)
            } else {
                row_never_strictly_worst(&r.problem, &m, added)
            };
            verdict(premise, r.same_order(&m, f, g, &extended, f, g))
        }
    };
    Ok(judgement)
}
