use std::fmt::Write;
use std::fs;
use std::io::Read;
use std::path::Path;

use maxsafe_core::axioms::{check_axiom, AxiomId, InstanceGenConfig, Witness};
use maxsafe_core::problem_file::{parse_problem, serialize_problem, ParsedProblem};
use maxsafe_core::{
    decoy_effect, expected_regret, expected_safety, rank, synthesize_decoy, DecisionProblem, Menu,
    Ranking, Rule,
};

use crate::args::{AxiomArgs, DecoyScanArgs, RankArgs, SynthArgs};
use crate::format::{names, ranking_block, tuple, values_block};
use crate::{CliError, Report};

fn load(path: &Path) -> Result<ParsedProblem, CliError> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::io(path, e))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| CliError::io(path, e))?
    };
    Ok(parse_problem(&text)?)
}

fn pick_menu(
    problem: &DecisionProblem,
    names: Option<&[String]>,
    fallback: &Menu,
) -> Result<Menu, CliError> {
    match names {
        Some(names) => Ok(Menu::from_names(problem, names)?),
        None => Ok(fallback.clone()),
    }
}

fn act(problem: &DecisionProblem, name: &str) -> Result<usize, CliError> {
    problem
        .act_index(name)
        .ok_or_else(|| CliError::Usage(format!("unknown act `{name}`")))
}

pub fn rank_cmd(args: &RankArgs) -> Result<Report, CliError> {
    let parsed = load(&args.problem)?;
    let p = &parsed.problem;
    let menu = pick_menu(p, args.menu.as_deref(), &parsed.menu)?;
    let ranking = if args.credal {
        if !matches!(args.rule, Rule::MaximinSafety | Rule::MinimaxRegret) {
            return Err(CliError::Usage(
                "--credal applies to the safety and regret rules only".into(),
            ));
        }
        let credal = parsed.credal.as_ref().ok_or_else(|| {
            CliError::Usage("--credal needs a `credal` entry in the problem file".into())
        })?;
        let values = menu
            .iter()
            .map(|a| match args.rule {
                Rule::MaximinSafety => expected_safety(p, &menu, a, credal).map(|v| (a, v)),
                _ => expected_regret(p, &menu, a, credal).map(|v| (a, -v)),
            })
            .collect::<maxsafe_core::Result<Vec<_>>>()?;
        Ranking::from_values(values)
    } else {
        rank(args.rule, p, &menu)?
    };

    let mut out = String::new();
    let title = if args.credal {
        format!(
            "{} (credal, {} priors)",
            args.rule.title(),
            parsed.credal.as_ref().map_or(0, |c| c.generators().len())
        )
    } else {
        args.rule.title()
    };
    writeln!(out, "rule: {title}").unwrap();
    writeln!(out, "menu: {}", names(p, menu.members())).unwrap();
    values_block(
        &mut out,
        p,
        args.rule,
        args.credal,
        menu.members(),
        &ranking,
    );
    writeln!(out, "ranking").unwrap();
    ranking_block(&mut out, p, args.rule, &ranking);
    writeln!(out, "top: {}", names(p, &ranking.top()).replace(' ', " ~ ")).unwrap();
    Ok(Report::success(out))
}

pub fn decoy_scan_cmd(args: &DecoyScanArgs) -> Result<Report, CliError> {
    let parsed = load(&args.problem)?;
    let p = &parsed.problem;
    let base = Menu::from_names(p, &args.base_menu)?;
    let decoy = act(p, &args.decoy)?;
    let outcome = decoy_effect(args.rule, p, &base, decoy)?;

    let mut out = String::new();
    writeln!(out, "rule: {}", args.rule.title()).unwrap();
    writeln!(out, "base menu: {}", names(p, base.members())).unwrap();
    writeln!(out, "added: {}", args.decoy).unwrap();
    writeln!(out, "before").unwrap();
    ranking_block(&mut out, p, args.rule, &outcome.before);
    writeln!(out, "after").unwrap();
    ranking_block(&mut out, p, args.rule, &outcome.after);
    writeln!(out, "verdict: {}", outcome.verdict(p)).unwrap();
    Ok(Report::success(out))
}

/// The axioms selected by `--axiom`. `all` means the ten that characterize
/// the rule's own family: regret swaps the worst-act variant for the
/// optimal-act one.
pub fn select_axioms(spec: &str, rule: Rule) -> Result<Vec<AxiomId>, CliError> {
    match spec.trim() {
        "all" => Ok(match rule {
            Rule::MinimaxRegret => AxiomId::REGRET.to_vec(),
            _ => AxiomId::SAFETY.to_vec(),
        }),
        "every" => Ok(AxiomId::ALL.to_vec()),
        list => list
            .split(',')
            .map(|s| {
                s.parse()
                    .map_err(|e: maxsafe_core::Error| CliError::Usage(e.to_string()))
            })
            .collect(),
    }
}

pub fn axiom_config(args: &AxiomArgs) -> Result<InstanceGenConfig, CliError> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        }
        None => InstanceGenConfig::default(),
    };
    macro_rules! set {
        ($($flag:ident => $field:ident),*) => {$(
            if let Some(v) = args.$flag { cfg.$field = v; }
        )*};
    }
    set!(trials => trials, seed => seed, max_states => max_states, max_generators => max_generators,
        max_prizes => max_prizes, grid => mixture_grid);
    if let Some(lo) = args.utility_min {
        cfg.utility_range.0 = lo;
    }
    if let Some(hi) = args.utility_max {
        cfg.utility_range.1 = hi;
    }
    if args.no_fixtures {
        cfg.include_fixtures = false;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn axioms_cmd(args: &AxiomArgs) -> Result<Report, CliError> {
    let axioms = select_axioms(&args.axiom, args.rule)?;
    let cfg = axiom_config(args)?;
    let mut out = String::new();
    writeln!(out, "rule: {}", args.rule.title()).unwrap();
    writeln!(out, "seed: {}  trials: {}", cfg.seed, cfg.trials).unwrap();
    let width = axioms.iter().map(|a| a.name().len()).max().unwrap_or(0);
    let mut witnesses = Vec::new();
    for axiom in axioms {
        let report = check_axiom(axiom, args.rule, &cfg)?;
        let status = if report.held() { "held" } else { "VIOLATED" };
        write!(
            out,
            "{:<width$}  {status:<8}  trials={} vacuous={}",
            axiom.name(),
            report.trials,
            report.vacuous
        )
        .unwrap();
        if let Some(w) = &report.witness {
            write!(out, " witness-trial={}", w.trial).unwrap();
        }
        out.push('\n');
        witnesses.extend(report.witness);
    }
    if witnesses.is_empty() {
        return Ok(Report::success(out));
    }
    let json = serde_json::to_string_pretty(&witnesses).expect("witnesses serialize");
    fs::write(&args.witness_file, json + "\n").map_err(|e| CliError::io(&args.witness_file, e))?;
    writeln!(
        out,
        "{} witness(es) written to {}",
        witnesses.len(),
        args.witness_file.display()
    )
    .unwrap();
    Ok(Report::failure(out))
}

pub fn replay_cmd(path: &Path) -> Result<Report, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let values: Vec<serde_json::Value> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut out = String::new();
    let mut all = true;
    for v in values {
        let w = Witness::from_json(&v.to_string())?;
        let confirmed = w.replay()?;
        all &= confirmed;
        let status = if confirmed {
            "confirmed"
        } else {
            "NOT REPRODUCED"
        };
        writeln!(
            out,
            "{} under {} (trial {}): {status}",
            w.axiom, w.rule, w.trial
        )
        .unwrap();
    }
    Ok(if all {
        Report::success(out)
    } else {
        Report::failure(out)
    })
}

pub fn synth_cmd(args: &SynthArgs) -> Result<Report, CliError> {
    let parsed = load(&args.problem)?;
    let p = &parsed.problem;
    let base = pick_menu(p, args.menu.as_deref(), &parsed.menu)?;
    let target = act(p, &args.target)?;
    let mut out = String::new();
    writeln!(out, "base menu: {}", names(p, base.members())).unwrap();
    writeln!(out, "target: {}", args.target).unwrap();
    let Some(row) = synthesize_decoy(p, &base, target, args.epsilon)? else {
        writeln!(
            out,
            "decoy: none (target is already the unique choice or no candidate verified)"
        )
        .unwrap();
        return Ok(Report::success(out));
    };
    writeln!(out, "decoy: {}", tuple(&row)).unwrap();
    let extended = p.with_act(fresh_name(p), row)?;
    let d = extended.n_acts() - 1;
    let outcome = decoy_effect(Rule::MaximinSafety, &extended, &base, d)?;
    writeln!(out, "verdict: {}", outcome.verdict(&extended)).unwrap();
    ranking_block(&mut out, &extended, Rule::MaximinSafety, &outcome.after);
    if let Some(path) = &args.output {
        let menu = base.with(&extended, d)?;
        fs::write(path, serialize_problem(&extended, Some(&menu)) + "\n")
            .map_err(|e| CliError::io(path, e))?;
        writeln!(out, "written to {}", path.display()).unwrap();
    }
    Ok(Report::success(out))
}

fn fresh_name(p: &DecisionProblem) -> String {
    std::iter::once("decoy".to_string())
        .chain((2..).map(|k| format!("decoy{k}")))
        .find(|n| p.act_index(n).is_none())
        .expect("unbounded")
}
