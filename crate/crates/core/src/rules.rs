//! Value functions and rankings.
//!
//! Every rule here ranks the acts of a menu by a value `V(a, M)`. Regret
//! and safety are menu-dependent: they measure an act against the best and
//! the worst utility the menu offers in each state. The anchored family
//! `V_t(a, M) = min_s (U(a, s) - t(s, M))` contains maximin utility
//! (`t = 0`), minimax regret (`t` = column max) and maximin safety
//! (`t` = column min) as special cases.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decision::{DecisionProblem, Menu};
use crate::error::{Error, Result};

/// A quantile level in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Quantile(f64);

impl Quantile {
    pub fn new(q: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&q) {
            Ok(Quantile(q))
        } else {
            Err(Error::validation(
                "quantile",
                format!("{q} is outside [0, 1]"),
            ))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// The state- and menu-dependent baseline subtracted from utilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Anchor {
    Zero,
    StateMax,
    StateMin,
    StateMean,
    StateMedian,
    StateQuantile(Quantile),
}

/// A decision rule. The first four are the named rules; `Anchored` covers
/// the whole anchoring family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Rule {
    MaximaxUtility,
    MaximinUtility,
    MinimaxRegret,
    MaximinSafety,
    Anchored(Anchor),
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anchor::Zero => f.write_str("zero"),
            Anchor::StateMax => f.write_str("max"),
            Anchor::StateMin => f.write_str("min"),
            Anchor::StateMean => f.write_str("mean"),
            Anchor::StateMedian => f.write_str("median"),
            Anchor::StateQuantile(q) => write!(f, "quantile:{}", q.0),
        }
    }
}

impl FromStr for Anchor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "zero" | "0" => return Ok(Anchor::Zero),
            "max" => return Ok(Anchor::StateMax),
            "min" => return Ok(Anchor::StateMin),
            "mean" => return Ok(Anchor::StateMean),
            "median" => return Ok(Anchor::StateMedian),
            _ => {}
        }
        let level = s
            .strip_prefix("quantile:")
            .or_else(|| s.strip_prefix("q"))
            .ok_or_else(|| Error::validation("anchor", format!("unknown anchor `{s}`")))?;
        let q: f64 = level
            .parse()
            .map_err(|_| Error::validation("anchor", format!("bad quantile level `{level}`")))?;
        Ok(Anchor::StateQuantile(Quantile::new(q)?))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::MaximaxUtility => f.write_str("maximax"),
            Rule::MaximinUtility => f.write_str("maximin"),
            Rule::MinimaxRegret => f.write_str("regret"),
            Rule::MaximinSafety => f.write_str("safety"),
            Rule::Anchored(a) => write!(f, "anchored:{a}"),
        }
    }
}

impl Rule {
    /// Human-readable rule name.
    pub fn title(&self) -> String {
        match self {
            Rule::MaximaxUtility => "maximax utility".into(),
            Rule::MaximinUtility => "maximin utility".into(),
            Rule::MinimaxRegret => "minimax regret".into(),
            Rule::MaximinSafety => "maximin safety".into(),
            Rule::Anchored(a) => format!("anchored ({a})"),
        }
    }

    /// The anchored rule that must agree with this one, if any.
    pub fn anchored_form(&self) -> Option<Anchor> {
        match self {
            Rule::MaximinUtility => Some(Anchor::Zero),
            Rule::MinimaxRegret => Some(Anchor::StateMax),
            Rule::MaximinSafety => Some(Anchor::StateMin),
            Rule::Anchored(a) => Some(*a),
            Rule::MaximaxUtility => None,
        }
    }

    /// Value of an arbitrary utility row judged against `menu`.
    ///
    /// The row need not belong to the problem; this is how mixtures of menu
    /// acts are evaluated. Its length must equal the number of states.
    pub fn row_value(&self, problem: &DecisionProblem, menu: &Menu, row: &[f64]) -> f64 {
        debug_assert_eq!(row.len(), problem.n_states());
        match self {
            Rule::MaximaxUtility => row.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Rule::MaximinUtility => min_of(row.iter().copied()),
            Rule::MinimaxRegret => {
                let worst = row
                    .iter()
                    .enumerate()
                    .map(|(s, &u)| column_max(problem, menu, s) - u)
                    .fold(f64::NEG_INFINITY, f64::max);
                -worst
            }
            Rule::MaximinSafety => min_of(
                row.iter()
                    .enumerate()
                    .map(|(s, &u)| u - column_min(problem, menu, s)),
            ),
            Rule::Anchored(anchor) => min_of(
                row.iter()
                    .enumerate()
                    .map(|(s, &u)| u - anchor_at(*anchor, problem, menu, s)),
            ),
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "maximax" | "maximax-utility" => Ok(Rule::MaximaxUtility),
            "maximin" | "maximin-utility" => Ok(Rule::MaximinUtility),
            "regret" | "minimax-regret" => Ok(Rule::MinimaxRegret),
            "safety" | "maximin-safety" => Ok(Rule::MaximinSafety),
            _ => match s.strip_prefix("anchored:") {
                Some(anchor) => Ok(Rule::Anchored(anchor.parse()?)),
                None => Err(Error::validation("rule", format!("unknown rule `{s}`"))),
            },
        }
    }
}

impl TryFrom<String> for Rule {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Rule> for String {
    fn from(rule: Rule) -> String {
        rule.to_string()
    }
}

fn min_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(f64::INFINITY, f64::min)
}

fn column<'a>(
    problem: &'a DecisionProblem,
    menu: &'a Menu,
    state: usize,
) -> impl Iterator<Item = f64> + 'a {
    let ms = menu.members();
    ms.iter().map(move |&m| problem.row(m)[state])
}

pub(crate) fn column_max(problem: &DecisionProblem, menu: &Menu, state: usize) -> f64 {
    column(problem, menu, state).fold(f64::NEG_INFINITY, f64::max)
}

pub(crate) fn column_min(problem: &DecisionProblem, menu: &Menu, state: usize) -> f64 {
    min_of(column(problem, menu, state))
}

fn sorted_column(problem: &DecisionProblem, menu: &Menu, state: usize) -> Vec<f64> {
    let mut xs: Vec<f64> = column(problem, menu, state).collect();
    xs.sort_by(f64::total_cmp);
    xs
}

fn anchor_at(anchor: Anchor, problem: &DecisionProblem, menu: &Menu, state: usize) -> f64 {
    match anchor {
        Anchor::Zero => 0.0,
        Anchor::StateMax => column_max(problem, menu, state),
        Anchor::StateMin => column_min(problem, menu, state),
        Anchor::StateMean => column(problem, menu, state).sum::<f64>() / menu.len() as f64,
        Anchor::StateMedian => {
            let xs = sorted_column(problem, menu, state);
            let n = xs.len();
            if n % 2 == 1 {
                xs[n / 2]
            } else {
                (xs[n / 2 - 1] + xs[n / 2]) / 2.0
            }
        }
        Anchor::StateQuantile(q) => {
            // Linear interpolation between the order statistics at
            // positions floor(h) and floor(h) + 1, where h = q (n - 1).
            let xs = sorted_column(problem, menu, state);
            let h = q.get() * (xs.len() - 1) as f64;
            let lo = h.floor() as usize;
            let hi = (lo + 1).min(xs.len() - 1);
            let frac = h - lo as f64;
            if frac == 0.0 {
                xs[lo]
            } else {
                xs[lo] + frac * (xs[hi] - xs[lo])
            }
        }
    }
}

/// Worst-case shortfall from the best menu utility, over states.
pub fn regret(problem: &DecisionProblem, menu: &Menu, act: usize) -> Result<f64> {
    menu.check_member(problem, act)?;
    let row = problem.row(act);
    Ok((0..problem.n_states())
        .map(|s| column_max(problem, menu, s) - row[s])
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Margin of `act` above the worst menu utility in one state.
pub fn safety_state(
    problem: &DecisionProblem,
    menu: &Menu,
    act: usize,
    state: usize,
) -> Result<f64> {
    menu.check_member(problem, act)?;
    problem.check_state(state)?;
    Ok(problem.row(act)[state] - column_min(problem, menu, state))
}

/// Smallest per-state safety margin of `act`.
pub fn safety(problem: &DecisionProblem, menu: &Menu, act: usize) -> Result<f64> {
    menu.check_member(problem, act)?;
    let row = problem.row(act);
    Ok(min_of(
        (0..problem.n_states()).map(|s| row[s] - column_min(problem, menu, s)),
    ))
}

/// `t(s, M)` for the given anchor.
pub fn anchor_value(
    anchor: Anchor,
    problem: &DecisionProblem,
    menu: &Menu,
    state: usize,
) -> Result<f64> {
    menu.check_against(problem)?;
    problem.check_state(state)?;
    Ok(anchor_at(anchor, problem, menu, state))
}

/// `V_t(a, M) = min_s (U(a, s) - t(s, M))`.
pub fn anchored_value(
    anchor: Anchor,
    problem: &DecisionProblem,
    menu: &Menu,
    act: usize,
) -> Result<f64> {
    menu.check_member(problem, act)?;
    Ok(Rule::Anchored(anchor).row_value(problem, menu, problem.row(act)))
}

/// Best-case utility of an act; menu-independent.
pub fn maximax_value(problem: &DecisionProblem, act: usize) -> Result<f64> {
    problem.check_act(act)?;
    Ok(problem
        .row(act)
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Worst-case utility of an act; menu-independent.
pub fn maximin_value(problem: &DecisionProblem, act: usize) -> Result<f64> {
    problem.check_act(act)?;
    Ok(min_of(problem.row(act).iter().copied()))
}

/// `V(act, menu)` under `rule`.
pub fn value(rule: Rule, problem: &DecisionProblem, menu: &Menu, act: usize) -> Result<f64> {
    match rule {
        Rule::MaximaxUtility | Rule::MaximinUtility => {
            menu.check_member(problem, act)?;
            if rule == Rule::MaximaxUtility {
                maximax_value(problem, act)
            } else {
                maximin_value(problem, act)
            }
        }
        Rule::MinimaxRegret => regret(problem, menu, act).map(|r| -r),
        Rule::MaximinSafety => safety(problem, menu, act),
        Rule::Anchored(anchor) => anchored_value(anchor, problem, menu, act),
    }
}

/// One act and its value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankEntry {
    pub act: usize,
    pub value: f64,
}

/// Menu acts ordered by value, best first. Equal values form a tie group;
/// within a group acts keep menu order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ranking {
    entries: Vec<RankEntry>,
}

impl Ranking {
    pub fn from_values(values: impl IntoIterator<Item = (usize, f64)>) -> Self {
        let mut entries: Vec<RankEntry> = values
            .into_iter()
            .map(|(act, value)| RankEntry { act, value })
            .collect();
        // stable: ties stay in input order
        entries.sort_by(|a, b| b.value.partial_cmp(&a.value).unwrap_or(Ordering::Equal));
        Ranking { entries }
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn groups(&self) -> Vec<&[RankEntry]> {
        self.entries.chunk_by(|a, b| a.value == b.value).collect()
    }

    /// Acts sharing the best value.
    pub fn top(&self) -> Vec<usize> {
        self.groups()
            .first()
            .map(|g| g.iter().map(|e| e.act).collect())
            .unwrap_or_default()
    }

    pub fn unique_top(&self) -> Option<usize> {
        match self.top().as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    pub fn value_of(&self, act: usize) -> Option<f64> {
        self.entries.iter().find(|e| e.act == act).map(|e| e.value)
    }

    /// `Greater` when `a` is strictly preferred to `b`.
    pub fn compare(&self, a: usize, b: usize) -> Option<Ordering> {
        let (va, vb) = (self.value_of(a)?, self.value_of(b)?);
        va.partial_cmp(&vb)
    }

    /// The ranking restricted to `acts`, keeping this ranking's order.
    pub fn restricted_to(&self, acts: &[usize]) -> Ranking {
        Ranking {
            entries: self
                .entries
                .iter()
                .filter(|e| acts.contains(&e.act))
                .copied()
                .collect(),
        }
    }
}

/// Ranks every menu member under `rule`.
pub fn rank(rule: Rule, problem: &DecisionProblem, menu: &Menu) -> Result<Ranking> {
    let values = menu
        .iter()
        .map(|a| value(rule, problem, menu, a).map(|v| (a, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ranking::from_values(values))
}

const PROBABILITY_TOLERANCE: f64 = 1e-12;

/// A finite set of probability vectors over states; the credal set is
/// their convex hull.
#[derive(Debug, Clone, PartialEq)]
pub struct CredalSet {
    generators: Vec<Vec<f64>>,
}

impl CredalSet {
    pub fn new(generators: Vec<Vec<f64>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::validation(
                "credal",
                "at least one distribution is required",
            ));
        }
        let dim = generators[0].len();
        for (i, p) in generators.iter().enumerate() {
            let field = format!("credal[{i}]");
            if p.is_empty() || p.len() != dim {
                return Err(Error::validation(
                    field,
                    "all distributions need the same nonzero length",
                ));
            }
            if p.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(Error::validation(
                    field,
                    "probabilities must be finite and nonnegative",
                ));
            }
            let total: f64 = p.iter().sum();
            if (total - 1.0).abs() > PROBABILITY_TOLERANCE {
                return Err(Error::validation(
                    field,
                    format!("probabilities sum to {total}, not 1"),
                ));
            }
        }
        Ok(CredalSet { generators })
    }

    /// The point masses on each state; their hull is the whole simplex.
    pub fn simplex_vertices(n_states: usize) -> Result<Self> {
        Self::new(
            (0..n_states)
                .map(|i| {
                    (0..n_states)
                        .map(|j| if i == j { 1.0 } else { 0.0 })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        self.generators[0].len()
    }

    fn check_dimension(&self, problem: &DecisionProblem) -> Result<()> {
        if self.dimension() == problem.n_states() {
            Ok(())
        } else {
            Err(Error::contract(format!(
                "credal set has dimension {} but the problem has {} states",
                self.dimension(),
                problem.n_states()
            )))
        }
    }
}

fn expectation(p: &[f64], xs: impl Iterator<Item = f64>) -> f64 {
    p.iter().zip(xs).map(|(w, x)| w * x).sum()
}

/// Smallest expected safety margin over the credal set.
///
/// The expectation is linear in the distribution, so the minimum over the
/// hull is attained at a generator.
pub fn expected_safety(
    problem: &DecisionProblem,
    menu: &Menu,
    act: usize,
    credal: &CredalSet,
) -> Result<f64> {
    menu.check_member(problem, act)?;
    credal.check_dimension(problem)?;
    let row = problem.row(act);
    let margins: Vec<f64> = (0..problem.n_states())
        .map(|s| row[s] - column_min(problem, menu, s))
        .collect();
    Ok(min_of(
        credal
            .generators()
            .iter()
            .map(|p| expectation(p, margins.iter().copied())),
    ))
}

/// Largest expected regret over the credal set.
pub fn expected_regret(
    problem: &DecisionProblem,
    menu: &Menu,
    act: usize,
    credal: &CredalSet,
) -> Result<f64> {
    menu.check_member(problem, act)?;
    credal.check_dimension(problem)?;
    let row = problem.row(act);
    let shortfalls: Vec<f64> = (0..problem.n_states())
        .map(|s| column_max(problem, menu, s) - row[s])
        .collect();
    Ok(credal
        .generators()
        .iter()
        .map(|p| expectation(p, shortfalls.iter().copied()))
        .fold(f64::NEG_INFINITY, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn menu(p: &DecisionProblem, names: &[&str]) -> Menu {
        Menu::from_names(p, names).unwrap()
    }

    #[test]
    fn regret_examples() {
        let t6 = fixtures::table6();
        assert_eq!(regret(&t6, &Menu::all(&t6), 2).unwrap(), 2.0);
        let single = menu(&t6, &["a2"]);
        assert_eq!(regret(&t6, &single, 1).unwrap(), 0.0);
        let t2 = fixtures::table2();
        assert_eq!(regret(&t2, &Menu::all(&t2), 2).unwrap(), 3.0);
        assert!(matches!(regret(&t2, &single, 0), Err(Error::Contract(_))));
    }

    #[test]
    fn safety_examples() {
        let t5 = fixtures::table5();
        let full = Menu::all(&t5);
        assert_eq!(safety_state(&t5, &full, 0, 1).unwrap(), 1.0);
        assert_eq!(safety_state(&t5, &full, 2, 1).unwrap(), 0.0);
        assert_eq!(safety_state(&t5, &full, 1, 0).unwrap(), 0.0);

        let t7 = fixtures::table7();
        let base = menu(&t7, &["a1", "a2", "a3"]);
        assert_eq!(safety(&t7, &base, 1).unwrap(), 1.0);
        assert_eq!(safety(&t7, &Menu::all(&t7), 2).unwrap(), 2.0);

        let t1 = fixtures::table1();
        assert_eq!(safety(&t1, &Menu::all(&t1), 1).unwrap(), 2.0);

        let no_decoy = menu(&t5, &["a1", "a2"]);
        assert!(safety(&t5, &no_decoy, 2).is_err());
    }

    #[test]
    fn anchor_examples() {
        let t5 = fixtures::table5();
        let full = Menu::all(&t5);
        assert_eq!(anchor_value(Anchor::StateMin, &t5, &full, 1).unwrap(), 3.0);
        assert_eq!(anchor_value(Anchor::Zero, &t5, &full, 0).unwrap(), 0.0);

        let t6 = fixtures::table6();
        let full6 = Menu::all(&t6);
        let q1 = Anchor::StateQuantile(Quantile::new(1.0).unwrap());
        assert_eq!(anchor_value(q1, &t6, &full6, 0).unwrap(), 4.0);
        let q0 = Anchor::StateQuantile(Quantile::new(0.0).unwrap());
        assert_eq!(anchor_value(q0, &t6, &full6, 0).unwrap(), 1.0);
        // s1 column of table 6 sorted: 1, 2, 3, 4
        assert_eq!(
            anchor_value(Anchor::StateMedian, &t6, &full6, 0).unwrap(),
            2.5
        );
        assert_eq!(
            anchor_value(Anchor::StateMean, &t6, &full6, 0).unwrap(),
            2.5
        );
        let q25 = Anchor::StateQuantile(Quantile::new(0.25).unwrap());
        assert_eq!(anchor_value(q25, &t6, &full6, 0).unwrap(), 1.75);
        let t2 = fixtures::table2();
        // odd count: s2 column 4, 6, 3
        assert_eq!(
            anchor_value(Anchor::StateMedian, &t2, &Menu::all(&t2), 1).unwrap(),
            4.0
        );
        assert!(anchor_value(Anchor::Zero, &t6, &full6, 2).is_err());
        assert!(Quantile::new(1.5).is_err());
        assert!(Quantile::new(-0.1).is_err());
    }

    #[test]
    fn anchored_value_examples() {
        let t5 = fixtures::table5();
        assert_eq!(
            anchored_value(Anchor::StateMin, &t5, &Menu::all(&t5), 0).unwrap(),
            1.0
        );
        let t6 = fixtures::table6();
        let full = Menu::all(&t6);
        assert_eq!(
            anchored_value(Anchor::StateMax, &t6, &full, 2).unwrap(),
            -2.0
        );
        assert_eq!(anchored_value(Anchor::Zero, &t6, &full, 3).unwrap(), 4.0);
    }

    #[test]
    fn maximax_examples() {
        assert_eq!(maximax_value(&fixtures::table6(), 0).unwrap(), 9.0);
        assert_eq!(maximax_value(&fixtures::table2(), 2).unwrap(), 3.0);
        let t1 = fixtures::table1();
        assert_eq!(
            maximax_value(&t1, t1.act_index("Hustle").unwrap()).unwrap(),
            6.0
        );
    }

    #[test]
    fn rank_examples() {
        let t6 = fixtures::table6();
        let full = Menu::all(&t6);
        assert_eq!(
            rank(Rule::MaximinSafety, &t6, &full).unwrap().unique_top(),
            Some(1)
        );
        assert_eq!(
            rank(Rule::MinimaxRegret, &t6, &full).unwrap().unique_top(),
            Some(2)
        );
        assert_eq!(
            rank(Rule::MaximaxUtility, &t6, &full).unwrap().unique_top(),
            Some(0)
        );
        assert_eq!(
            rank(Rule::MaximinUtility, &t6, &full).unwrap().unique_top(),
            Some(3)
        );

        let t5 = fixtures::table5();
        let r = rank(Rule::MaximinSafety, &t5, &menu(&t5, &["a1", "a2"])).unwrap();
        assert_eq!(r.top(), vec![0, 1]);
        assert_eq!(r.groups().len(), 1);
        assert_eq!(r.unique_top(), None);
    }

    #[test]
    fn ranking_groups_keep_menu_order() {
        let r = Ranking::from_values([(3, 1.0), (0, 2.0), (1, 1.0), (2, -0.0), (4, 0.0)]);
        let acts: Vec<Vec<usize>> = r
            .groups()
            .iter()
            .map(|g| g.iter().map(|e| e.act).collect())
            .collect();
        assert_eq!(acts, vec![vec![0], vec![3, 1], vec![2, 4]]);
        assert_eq!(r.compare(0, 3), Some(Ordering::Greater));
        assert_eq!(r.compare(2, 4), Some(Ordering::Equal));
        assert_eq!(r.restricted_to(&[1, 2]).len(), 2);
    }

    #[test]
    fn rule_strings_round_trip() {
        for s in [
            "maximax",
            "maximin",
            "regret",
            "safety",
            "anchored:zero",
            "anchored:median",
            "anchored:quantile:0.25",
        ] {
            let rule: Rule = s.parse().unwrap();
            assert_eq!(rule.to_string(), s);
        }
        assert!("anchored:quantile:2".parse::<Rule>().is_err());
        assert!("utility".parse::<Rule>().is_err());
        let json = serde_json::to_string(&Rule::MinimaxRegret).unwrap();
        assert_eq!(json, "\"regret\"");
        assert_eq!(
            serde_json::from_str::<Rule>(&json).unwrap(),
            Rule::MinimaxRegret
        );
    }

    #[test]
    fn credal_examples() {
        let t7 = fixtures::table7();
        let base = menu(&t7, &["a1", "a2", "a3"]);
        let vertices = CredalSet::simplex_vertices(3).unwrap();
        assert_eq!(expected_safety(&t7, &base, 1, &vertices).unwrap(), 1.0);

        let t5 = fixtures::table5();
        let full5 = Menu::all(&t5);
        let half = CredalSet::new(vec![vec![0.5, 0.5]]).unwrap();
        assert_eq!(expected_safety(&t5, &full5, 2, &half).unwrap(), 0.5);
        assert_eq!(expected_safety(&t5, &full5, 0, &half).unwrap(), 1.5);

        let t6 = fixtures::table6();
        let full6 = Menu::all(&t6);
        let v2 = CredalSet::simplex_vertices(2).unwrap();
        assert_eq!(expected_regret(&t6, &full6, 2, &v2).unwrap(), 2.0);
        assert_eq!(expected_regret(&t5, &full5, 0, &half).unwrap(), 1.0);
        let first = CredalSet::new(vec![vec![1.0, 0.0]]).unwrap();
        assert_eq!(expected_regret(&t6, &full6, 3, &first).unwrap(), 0.0);

        assert!(matches!(
            expected_safety(&t6, &full6, 0, &vertices),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn credal_validation() {
        assert!(CredalSet::new(vec![]).is_err());
        assert!(CredalSet::new(vec![vec![0.5, 0.4]]).is_err());
        assert!(CredalSet::new(vec![vec![1.5, -0.5]]).is_err());
        assert!(CredalSet::new(vec![vec![1.0], vec![0.5, 0.5]]).is_err());
        assert!(CredalSet::new(vec![vec![0.1, 0.2, 0.7]]).is_ok());
    }
}
