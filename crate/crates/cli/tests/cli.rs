use std::path::PathBuf;
use std::process::{Command, Stdio};

use maxsafe_cli::{run, Invocation, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

fn problem(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("problems")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn maxsafe(args: &[&str]) -> Invocation {
    run(std::iter::once("maxsafe").chain(args.iter().copied()))
}

#[test]
fn rank_four_rules_by_safety() {
    let out = maxsafe(&["rank", &problem("four-rules"), "--rule", "safety"]);
    assert_eq!(out.code, EXIT_OK);
    let expected = "\
rule: maximin safety
menu: a1 a2 a3 a4
act  safety
a1   0.000000
a2   2.000000
a3   1.000000
a4   0.000000
ranking
  1. a2       2.000000
  2. a3       1.000000
  3. a1 ~ a4  0.000000
top: a2
";
    assert_eq!(out.stdout, expected);
}

#[test]
fn rank_four_rules_by_regret() {
    let out = maxsafe(&["rank", &problem("four-rules"), "--rule", "regret"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("a3   2.000000\n"));
    assert!(out.stdout.ends_with("top: a3\n"));
}

#[test]
fn rank_with_menu_reports_the_tie() {
    let out = maxsafe(&[
        "rank",
        &problem("camera"),
        "--rule",
        "safety",
        "--menu",
        "a1,a2",
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert!(
        out.stdout.contains("  1. a1 ~ a2  0.000000\n"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.ends_with("top: a1 ~ a2\n"));
}

#[test]
fn anchored_rules_parse_from_the_command_line() {
    let min = maxsafe(&["rank", &problem("four-rules"), "--rule", "anchored:min"]);
    let safety = maxsafe(&["rank", &problem("four-rules"), "--rule", "safety"]);
    assert_eq!(min.code, EXIT_OK);
    let body = |s: &str| {
        s.lines()
            .skip(3)
            .map(|l| l.split_whitespace().last().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(body(&min.stdout), body(&safety.stdout));
    let q = maxsafe(&[
        "rank",
        &problem("four-rules"),
        "--rule",
        "anchored:quantile:0.5",
    ]);
    assert_eq!(q.code, EXIT_OK, "{}", q.stderr);
}

#[test]
fn credal_ranking() {
    let out = maxsafe(&[
        "rank",
        &problem("camera-credal"),
        "--rule",
        "regret",
        "--credal",
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("expected regret"));
    let bad = maxsafe(&["rank", &problem("camera"), "--rule", "safety", "--credal"]);
    assert_eq!(bad.code, EXIT_USAGE);
    let wrong_rule = maxsafe(&[
        "rank",
        &problem("camera-credal"),
        "--rule",
        "maximin",
        "--credal",
    ]);
    assert_eq!(wrong_rule.code, EXIT_USAGE);
}

#[test]
fn decoy_scans() {
    let rev = maxsafe(&[
        "decoy-scan",
        &problem("reversal"),
        "--rule",
        "safety",
        "--base-menu",
        "a1,a2,a3",
        "--decoy",
        "a4",
    ]);
    assert_eq!(rev.code, EXIT_OK);
    assert!(
        rev.stdout.ends_with("verdict: REVERSAL: a3 over a2\n"),
        "{}",
        rev.stdout
    );

    let tie = maxsafe(&[
        "decoy-scan",
        &problem("camera"),
        "--rule",
        "safety",
        "--base-menu",
        "a1,a2",
        "--decoy",
        "a3",
    ]);
    assert!(tie.stdout.ends_with("verdict: TIE-BREAK: a1\n"));

    let none = maxsafe(&[
        "decoy-scan",
        &problem("reversal"),
        "--rule",
        "regret",
        "--base-menu",
        "a1,a2,a3",
        "--decoy",
        "a4",
    ]);
    assert!(none.stdout.ends_with("verdict: NO EFFECT\n"));

    let inside = maxsafe(&[
        "decoy-scan",
        &problem("reversal"),
        "--rule",
        "regret",
        "--base-menu",
        "a1,a2,a3",
        "--decoy",
        "a3",
    ]);
    assert_eq!(inside.code, EXIT_USAGE);
    assert!(inside.stderr.contains("already in the menu"));
}

#[test]
fn paper_tables_match() {
    let out = maxsafe(&["paper-tables"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(!out.stdout.contains("MISMATCH"));
    for line in [
        "safety with decoy a1  (2,1)",
        "safety with decoy a2  (0,3)",
        "safety with decoy a3  (1,0)",
        "optimal for maximax utility  a1",
        "optimal for maximin safety   a2",
        "optimal for minimax regret   a3",
        "optimal for maximin utility  a4",
        "safety verdict          REVERSAL: a3 over a2",
    ] {
        assert!(
            out.stdout.contains(line),
            "missing `{line}`\n{}",
            out.stdout
        );
    }
    assert!(out.stdout.trim_end().ends_with("checks match"));
}

#[test]
fn synthesized_decoys() {
    let a1 = maxsafe(&[
        "synth-decoy",
        &problem("camera"),
        "--menu",
        "a1,a2",
        "--target",
        "a1",
    ]);
    assert!(a1.stdout.contains("decoy: (3,3)\n"), "{}", a1.stdout);
    assert!(a1.stdout.contains("verdict: TIE-BREAK: a1\n"));
    let a2 = maxsafe(&[
        "synth-decoy",
        &problem("camera"),
        "--menu",
        "a1,a2",
        "--target",
        "a2",
    ]);
    assert!(a2.stdout.contains("decoy: (1,5)\n"));
    let top = maxsafe(&["synth-decoy", &problem("four-rules"), "--target", "a2"]);
    assert_eq!(top.code, EXIT_OK);
    assert!(top.stdout.contains("decoy: none"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("with-decoy.json");
    let written = maxsafe(&[
        "synth-decoy",
        &problem("camera"),
        "--menu",
        "a1,a2",
        "--target",
        "a1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(written.code, EXIT_OK);
    let scan = maxsafe(&[
        "decoy-scan",
        path.to_str().unwrap(),
        "--rule",
        "safety",
        "--base-menu",
        "a1,a2",
        "--decoy",
        "decoy",
    ]);
    assert!(
        scan.stdout.ends_with("verdict: TIE-BREAK: a1\n"),
        "{}",
        scan.stdout
    );
}

#[test]
fn axioms_exit_codes_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let wf = dir.path().join("w.json");
    let wf = wf.to_str().unwrap();

    let held = maxsafe(&[
        "axioms",
        "--rule",
        "safety",
        "--axiom",
        "all",
        "--trials",
        "500",
        "--witness-file",
        wf,
    ]);
    assert_eq!(held.code, EXIT_OK, "{}", held.stdout);
    assert_eq!(
        held.stdout.lines().filter(|l| l.contains(" held ")).count(),
        10
    );
    assert!(!std::path::Path::new(wf).exists());

    let ina = maxsafe(&[
        "axioms",
        "--rule",
        "safety",
        "--axiom",
        "ina",
        "--witness-file",
        wf,
    ]);
    assert_eq!(ina.code, EXIT_FAILURE);
    assert!(ina.stdout.contains("ina  VIOLATED"));
    let replay = maxsafe(&["replay", wf]);
    assert_eq!(replay.code, EXIT_OK);
    assert!(replay.stdout.contains("confirmed"));

    let indep = maxsafe(&[
        "axioms",
        "--rule",
        "maximin",
        "--axiom",
        "independence",
        "--witness-file",
        wf,
    ]);
    assert_eq!(indep.code, EXIT_FAILURE);

    let several = maxsafe(&[
        "axioms",
        "--rule",
        "regret",
        "--axiom",
        "ina,inwa",
        "--witness-file",
        wf,
    ]);
    assert_eq!(several.code, EXIT_FAILURE);
    assert!(several.stdout.contains("ina   held"));
    assert!(several.stdout.contains("inwa  VIOLATED"));
}

#[test]
fn axiom_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"trials": 50, "max_states": 3}"#).unwrap();
    let out = maxsafe(&[
        "axioms",
        "--rule",
        "safety",
        "--axiom",
        "symmetry",
        "--config",
        cfg.to_str().unwrap(),
        "--seed",
        "9",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("seed: 9  trials: 50"));

    std::fs::write(&cfg, r#"{"trails": 50}"#).unwrap();
    let typo = maxsafe(&[
        "axioms",
        "--rule",
        "safety",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(typo.code, EXIT_USAGE);

    let bad = maxsafe(&["axioms", "--rule", "safety", "--grid", "1"]);
    assert_eq!(bad.code, EXIT_USAGE);
    let unknown = maxsafe(&["axioms", "--rule", "safety", "--axiom", "associativity"]);
    assert_eq!(unknown.code, EXIT_USAGE);
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let p = path.to_str().unwrap();

    std::fs::write(&path, "{\n  \"states\": [\"s1\"],\n  \"acts\": [\n").unwrap();
    let out = maxsafe(&["rank", p, "--rule", "safety"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);

    std::fs::write(
        &path,
        r#"{"states": ["s1", "s2"], "acts": [{"name": "a", "utilities": [1]}]}"#,
    )
    .unwrap();
    let ragged = maxsafe(&["rank", p, "--rule", "safety"]);
    assert_eq!(ragged.code, EXIT_USAGE);
    assert!(
        ragged.stderr.contains("acts[0].utilities"),
        "{}",
        ragged.stderr
    );

    let missing = maxsafe(&[
        "rank",
        &problem("camera"),
        "--rule",
        "safety",
        "--menu",
        "a1,a9",
    ]);
    assert_eq!(missing.code, EXIT_USAGE);
    assert!(missing.stderr.contains("a9"));

    assert_eq!(
        maxsafe(&["rank", "/nonexistent.json", "--rule", "safety"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        maxsafe(&["rank", &problem("camera"), "--rule", "nope"]).code,
        EXIT_USAGE
    );
    assert_eq!(maxsafe(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(maxsafe(&["--help"]).code, EXIT_OK);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["paper-tables"],
        vec!["axioms", "--rule", "regret", "--trials", "200"],
        vec!["rank", "PROBLEM", "--rule", "anchored:median"],
    ] {
        let p = problem("reversal");
        let args: Vec<&str> = args
            .iter()
            .map(|a| if *a == "PROBLEM" { p.as_str() } else { a })
            .collect();
        assert_eq!(maxsafe(&args), maxsafe(&args));
    }
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_maxsafe");
    let text = std::fs::read_to_string(problem("four-rules")).unwrap();
    let mut child = Command::new(exe)
        .args(["rank", "-", "--rule", "maximax"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("top: a1\n"));

    let tables = Command::new(exe).arg("paper-tables").output().unwrap();
    assert_eq!(tables.status.code(), Some(0));
    let usage = Command::new(exe).args(["rank"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let violated = Command::new(exe)
        .args(["axioms", "--rule", "safety", "--axiom", "ina"])
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(violated.status.code(), Some(1));
    assert!(dir.path().join("maxsafe-witnesses.json").exists());
}
