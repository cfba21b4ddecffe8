//! Fixed-width text rendering shared by the commands.

use std::fmt::Write;

use maxsafe_core::{DecisionProblem, Ranking, Rule};

/// Six decimals, with negative zero printed as zero.
pub fn num(v: f64) -> String {
    format!("{:.6}", v + 0.0)
}

/// What a rule's reported number is called.
pub fn quantity(rule: Rule, credal: bool) -> &'static str {
    match (rule, credal) {
        (Rule::MinimaxRegret, false) => "regret",
        (Rule::MinimaxRegret, true) => "expected regret",
        (Rule::MaximinSafety, false) => "safety",
        (Rule::MaximinSafety, true) => "expected safety",
        (Rule::MaximaxUtility, _) => "best utility",
        (Rule::MaximinUtility, _) => "worst utility",
        (Rule::Anchored(_), _) => "value",
    }
}

/// The number shown for a ranking value; regret is printed as regret, not
/// as its negation.
pub fn shown(rule: Rule, value: f64) -> f64 {
    match rule {
        Rule::MinimaxRegret => -value,
        _ => value,
    }
}

pub fn names(problem: &DecisionProblem, acts: &[usize]) -> String {
    acts.iter()
        .map(|&a| problem.act_ids()[a].as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Per-act values in menu order.
pub fn values_block(
    out: &mut String,
    problem: &DecisionProblem,
    rule: Rule,
    credal: bool,
    menu: &[usize],
    ranking: &Ranking,
) {
    let width = label_width(problem, menu);
    writeln!(out, "{:<width$}  {}", "act", quantity(rule, credal)).unwrap();
    for &a in menu {
        let v = ranking.value_of(a).expect("menu member is ranked");
        writeln!(
            out,
            "{:<width$}  {}",
            problem.act_ids()[a],
            num(shown(rule, v))
        )
        .unwrap();
    }
}

/// Ranking lines, one per tie group; tied acts are joined by `~`.
pub fn ranking_block(out: &mut String, problem: &DecisionProblem, rule: Rule, ranking: &Ranking) {
    let groups: Vec<String> = ranking
        .groups()
        .iter()
        .map(|g| {
            g.iter()
                .map(|e| problem.act_ids()[e.act].as_str())
                .collect::<Vec<_>>()
                .join(" ~ ")
        })
        .collect();
    let width = groups.iter().map(String::len).max().unwrap_or(0);
    for (i, (label, g)) in groups.iter().zip(ranking.groups()).enumerate() {
        writeln!(
            out,
            "  {}. {label:<width$}  {}",
            i + 1,
            num(shown(rule, g[0].value))
        )
        .unwrap();
    }
}

fn label_width(problem: &DecisionProblem, acts: &[usize]) -> usize {
    acts.iter()
        .map(|&a| problem.act_ids()[a].len())
        .chain(std::iter::once(3))
        .max()
        .unwrap_or(3)
}

/// Integer-valued vectors as `(a,b,c)`; any other value prints in full.
pub fn tuple(values: &[f64]) -> String {
    let parts: Vec<String> = values
        .iter()
        .map(|v| {
            if v.fract() == 0.0 {
                format!("{}", v + 0.0)
            } else {
                num(*v)
            }
        })
        .collect();
    format!("({})", parts.join(","))
}
