use maxsafe_core::problem_file::parse_problem;
use maxsafe_core::{
    decoy_effect, rank as rank_menu, synthesize_decoy, DecisionProblem, Menu, Ranking, Rule,
};
use serde_json::{json, Value};

type Reply = Result<Value, String>;

fn parse_menu(problem: &DecisionProblem, csv: &str) -> Result<Menu, String> {
    let names: Vec<&str> = csv
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Ok(Menu::all(problem));
    }
    Menu::from_names(problem, &names).map_err(|e| e.to_string())
}

fn ranking_json(problem: &DecisionProblem, rule: Rule, ranking: &Ranking) -> Value {
    let name = |a: usize| problem.act_ids()[a].clone();
    let shown = |v: f64| if rule == Rule::MinimaxRegret { -v } else { v } + 0.0;
    let groups: Vec<Value> = ranking
        .groups()
        .iter()
        .map(|g| {
            json!({
                "acts": g.iter().map(|e| name(e.act)).collect::<Vec<_>>(),
                "value": shown(g[0].value),
            })
        })
        .collect();
    json!({
        "groups": groups,
        "top": ranking.top().into_iter().map(name).collect::<Vec<_>>(),
    })
}

pub fn rank(problem: &str, rule: &str) -> Reply {
    let parsed = parse_problem(problem).map_err(|e| e.to_string())?;
    let rule: Rule = rule
        .parse()
        .map_err(|e: maxsafe_core::Error| e.to_string())?;
    let ranking = rank_menu(rule, &parsed.problem, &parsed.menu).map_err(|e| e.to_string())?;
    let p = &parsed.problem;
    let values: Vec<Value> = parsed
        .menu
        .iter()
        .map(|a| {
            let v = ranking.value_of(a).expect("ranked");
            json!({
                "act": p.act_ids()[a],
                "value": if rule == Rule::MinimaxRegret { -v } else { v } + 0.0,
            })
        })
        .collect();
    let mut out = ranking_json(p, rule, &ranking);
    out["rule"] = json!(rule.title());
    out["values"] = json!(values);
    Ok(out)
}

pub fn decoy_scan(problem: &str, rule: &str, base: &str) -> Reply {
    let parsed = parse_problem(problem).map_err(|e| e.to_string())?;
    let rule: Rule = rule
        .parse()
        .map_err(|e: maxsafe_core::Error| e.to_string())?;
    let p = &parsed.problem;
    let base = parse_menu(p, base)?;
    let mut scans = Vec::new();
    for d in (0..p.n_acts()).filter(|&a| !base.contains(a)) {
        let out = decoy_effect(rule, p, &base, d).map_err(|e| e.to_string())?;
        scans.push(json!({
            "added": p.act_ids()[d],
            "verdict": out.verdict(p),
            "before": ranking_json(p, rule, &out.before),
            "after": ranking_json(p, rule, &out.after),
        }));
    }
    Ok(json!({ "rule": rule.title(), "scans": scans }))
}

pub fn synthesize(problem: &str, base: &str, target: &str, epsilon: f64) -> Reply {
    let parsed = parse_problem(problem).map_err(|e| e.to_string())?;
    let p = &parsed.problem;
    let base = parse_menu(p, base)?;
    let t = p
        .act_index(target)
        .ok_or_else(|| format!("unknown act `{target}`"))?;
    let row = synthesize_decoy(p, &base, t, epsilon).map_err(|e| e.to_string())?;
    Ok(json!({ "target": target, "decoy": row }))
}
