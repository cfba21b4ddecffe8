//! The reference tables, recomputed and compared against stored values.

use std::fmt::Write;

use maxsafe_core::{
    decoy_effect, find_dominated, fixtures, is_never_strictly_worst, rank, regret, safety_state,
    DecisionProblem, Menu, Result, Rule,
};

use crate::format::tuple;

enum Actual {
    Row(Vec<f64>),
    Text(String),
}

struct Check {
    label: String,
    ok: bool,
    actual: String,
    expected: String,
}

struct Block {
    title: &'static str,
    checks: Vec<Check>,
}

impl Block {
    fn new(title: &'static str) -> Self {
        Block {
            title,
            checks: Vec::new(),
        }
    }

    fn row(&mut self, label: String, expected: &[f64], actual: Vec<f64>) {
        self.push(label, Actual::Row(actual), tuple(expected), |a| match a {
            Actual::Row(r) => r.as_slice() == expected,
            Actual::Text(_) => false,
        });
    }

    fn text(&mut self, label: String, expected: &str, actual: String) {
        self.push(
            label,
            Actual::Text(actual),
            expected.to_string(),
            |a| match a {
                Actual::Text(t) => t == expected,
                Actual::Row(_) => false,
            },
        );
    }

    fn push(
        &mut self,
        label: String,
        actual: Actual,
        expected: String,
        same: impl Fn(&Actual) -> bool,
    ) {
        let ok = same(&actual);
        let actual = match actual {
            Actual::Row(r) => tuple(&r),
            Actual::Text(t) => t,
        };
        self.checks.push(Check {
            label,
            ok,
            actual,
            expected,
        });
    }
}

fn menu(p: &DecisionProblem, names: &[&str]) -> Result<Menu> {
    Menu::from_names(p, names)
}

fn safety_rows(
    b: &mut Block,
    p: &DecisionProblem,
    m: &Menu,
    panel: &str,
    expected: &[&[f64]],
) -> Result<()> {
    for (&a, want) in m.members().iter().zip(expected) {
        let got = (0..p.n_states())
            .map(|s| safety_state(p, m, a, s))
            .collect::<Result<Vec<_>>>()?;
        let label = if panel.is_empty() {
            format!("safety {}", p.act_ids()[a])
        } else {
            format!("safety {panel} {}", p.act_ids()[a])
        };
        b.row(label, want, got);
    }
    Ok(())
}

fn regret_columns(p: &DecisionProblem, m: &Menu, a: usize) -> Vec<f64> {
    (0..p.n_states())
        .map(|s| {
            let best = m
                .iter()
                .map(|x| p.row(x)[s])
                .fold(f64::NEG_INFINITY, f64::max);
            best - p.row(a)[s]
        })
        .collect()
}

fn top(p: &DecisionProblem, rule: Rule, m: &Menu) -> Result<String> {
    let r = rank(rule, p, m)?;
    Ok(r.top()
        .iter()
        .map(|&a| p.act_ids()[a].as_str())
        .collect::<Vec<_>>()
        .join(" ~ "))
}

fn dominated(p: &DecisionProblem, m: &Menu) -> Result<String> {
    let pairs = find_dominated(p, m)?;
    if pairs.is_empty() {
        return Ok("none".into());
    }
    Ok(pairs
        .iter()
        .map(|&(d, by)| format!("{} by {}", p.act_ids()[d], p.act_ids()[by]))
        .collect::<Vec<_>>()
        .join(", "))
}

fn verdict(rule: Rule, p: &DecisionProblem, base: &Menu, decoy: &str) -> Result<String> {
    let d = p.act_index(decoy).expect("fixture act");
    Ok(decoy_effect(rule, p, base, d)?.verdict(p))
}

fn hunters() -> Result<Block> {
    let p = fixtures::table1();
    let mut b = Block::new("Table 1");
    let pair = menu(&p, &["Sprint", "Hustle"])?;
    let all = Menu::all(&p);
    safety_rows(
        &mut b,
        &p,
        &pair,
        "without Jog",
        &[&[0.0, 3.0], &[2.0, 0.0]],
    )?;
    safety_rows(
        &mut b,
        &p,
        &all,
        "with Jog",
        &[&[0.0, 7.0], &[2.0, 4.0], &[1.0, 0.0]],
    )?;
    b.text("dominated".into(), "Jog by Hustle", dominated(&p, &all)?);
    let hustle = p.act_index("Hustle").expect("fixture act");
    b.text(
        "Hustle never strictly worst".into(),
        "true",
        is_never_strictly_worst(&p, &all, hustle)?.to_string(),
    );
    b.text(
        "safety verdict".into(),
        "TIE-BREAK: Hustle",
        verdict(Rule::MaximinSafety, &p, &pair, "Jog")?,
    );
    Ok(b)
}

fn camera() -> Result<Block> {
    let p = fixtures::table2();
    let mut b = Block::new("Table 2");
    b.text(
        "dominated".into(),
        "a3 by a1",
        dominated(&p, &Menu::all(&p))?,
    );
    b.text(
        "a3 asymmetrically dominated".into(),
        "true",
        maxsafe_core::is_asymmetrically_dominated(&p, &Menu::all(&p), 2)?.to_string(),
    );
    Ok(b)
}

fn standard_rules() -> Result<Block> {
    let p = fixtures::table2();
    let mut b = Block::new("Table 3");
    let expected = [
        (Rule::MaximaxUtility, "a2"),
        (Rule::MaximinUtility, "a1"),
        (Rule::MinimaxRegret, "a1 ~ a2"),
    ];
    for (label, m) in [
        ("{a1,a2}", menu(&p, &["a1", "a2"])?),
        ("{a1,a2,a3}", Menu::all(&p)),
    ] {
        for (rule, want) in expected {
            b.text(
                format!("best {} on {label}", rule.title()),
                want,
                top(&p, rule, &m)?,
            );
        }
    }
    Ok(b)
}

fn camera_safety() -> Result<Block> {
    let p = fixtures::table5();
    let mut b = Block::new("Table 5");
    let base = menu(&p, &["a1", "a2"])?;
    safety_rows(&mut b, &p, &base, "no decoy", &[&[2.0, 0.0], &[0.0, 2.0]])?;
    safety_rows(
        &mut b,
        &p,
        &Menu::all(&p),
        "with decoy",
        &[&[2.0, 1.0], &[0.0, 3.0], &[1.0, 0.0]],
    )?;
    b.text(
        "safety verdict".into(),
        "TIE-BREAK: a1",
        verdict(Rule::MaximinSafety, &p, &base, "a3")?,
    );
    b.text(
        "regret verdict".into(),
        "NO EFFECT",
        verdict(Rule::MinimaxRegret, &p, &base, "a3")?,
    );
    Ok(b)
}

fn four_rules() -> Result<Block> {
    let p = fixtures::table6();
    let m = Menu::all(&p);
    let mut b = Block::new("Table 6");
    let regrets: [&[f64]; 4] = [&[3.0, 0.0], &[1.0, 3.0], &[2.0, 2.0], &[0.0, 5.0]];
    for (a, want) in regrets.iter().enumerate() {
        b.row(
            format!("regret {}", p.act_ids()[a]),
            want,
            regret_columns(&p, &m, a),
        );
    }
    safety_rows(
        &mut b,
        &p,
        &m,
        "",
        &[&[0.0, 5.0], &[2.0, 2.0], &[1.0, 3.0], &[3.0, 0.0]],
    )?;
    for (rule, want) in [
        (Rule::MaximaxUtility, "a1"),
        (Rule::MaximinSafety, "a2"),
        (Rule::MinimaxRegret, "a3"),
        (Rule::MaximinUtility, "a4"),
    ] {
        b.text(
            format!("optimal for {}", rule.title()),
            want,
            top(&p, rule, &m)?,
        );
    }
    b.text(
        "worst-case regret a3".into(),
        "2",
        format!("{}", regret(&p, &m, 2)?),
    );
    b.text("dominated".into(), "none", dominated(&p, &m)?);
    Ok(b)
}

fn reversal() -> Result<Block> {
    let p = fixtures::table7();
    let mut b = Block::new("Table 7");
    let base = menu(&p, &["a1", "a2", "a3"])?;
    safety_rows(
        &mut b,
        &p,
        &base,
        "no decoy",
        &[&[5.0, 0.0, 0.0], &[1.0, 1.0, 1.0], &[0.0, 6.0, 2.0]],
    )?;
    safety_rows(
        &mut b,
        &p,
        &Menu::all(&p),
        "with a4",
        &[
            &[8.0, 0.0, 0.0],
            &[4.0, 1.0, 1.0],
            &[3.0, 6.0, 2.0],
            &[0.0, 3.0, 0.0],
        ],
    )?;
    b.text(
        "best safety without a4".into(),
        "a2",
        top(&p, Rule::MaximinSafety, &base)?,
    );
    b.text(
        "best safety with a4".into(),
        "a3",
        top(&p, Rule::MaximinSafety, &Menu::all(&p))?,
    );
    b.text(
        "dominated".into(),
        "a4 by a3",
        dominated(&p, &Menu::all(&p))?,
    );
    b.text(
        "safety verdict".into(),
        "REVERSAL: a3 over a2",
        verdict(Rule::MaximinSafety, &p, &base, "a4")?,
    );
    b.text(
        "regret verdict".into(),
        "NO EFFECT",
        verdict(Rule::MinimaxRegret, &p, &base, "a4")?,
    );
    Ok(b)
}

/// Renders every block; the flag is true when all checks match.
pub fn render() -> Result<(String, bool)> {
    let blocks = [
        hunters()?,
        camera()?,
        standard_rules()?,
        camera_safety()?,
        four_rules()?,
        reversal()?,
    ];
    let mut out = String::new();
    let (mut total, mut bad) = (0, 0);
    for block in &blocks {
        writeln!(out, "{}", block.title).unwrap();
        let width = block
            .checks
            .iter()
            .map(|c| c.label.len())
            .max()
            .unwrap_or(0);
        let shown = block
            .checks
            .iter()
            .map(|c| c.actual.len())
            .max()
            .unwrap_or(0);
        for c in &block.checks {
            total += 1;
            let label = &c.label;
            if c.ok {
                writeln!(out, "  {label:<width$}  {:<shown$}  ok", c.actual).unwrap();
            } else {
                bad += 1;
                writeln!(
                    out,
                    "  {label:<width$}  {:<shown$}  MISMATCH (expected {})",
                    c.actual, c.expected
                )
                .unwrap();
            }
        }
        out.push('\n');
    }
    if bad == 0 {
        writeln!(out, "all {total} checks match").unwrap();
    } else {
        writeln!(out, "{bad} of {total} checks differ").unwrap();
    }
    Ok((out, bad == 0))
}
