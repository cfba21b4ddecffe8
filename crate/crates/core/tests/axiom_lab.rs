use maxsafe_core::axioms::*;
use maxsafe_core::{is_never_strictly_optimal, is_never_strictly_worst, Menu, Rule};

fn cfg(trials: u64) -> InstanceGenConfig {
    InstanceGenConfig {
        trials,
        ..InstanceGenConfig::default()
    }
}

fn failures(reports: &[AxiomReport]) -> Vec<AxiomId> {
    reports
        .iter()
        .filter(|r| !r.held())
        .map(|r| r.axiom)
        .collect()
}

#[test]
fn safety_satisfies_its_characterizing_axioms() {
    let reports = theorem1_soundness_suite(&cfg(2_000)).unwrap();
    assert_eq!(reports.len(), 10);
    assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
    for r in &reports {
        assert!(r.witness.is_none());
        if r.axiom != AxiomId::Nontriviality {
            assert_eq!(r.trials, 2_000);
            assert!(r.vacuous < r.trials, "{} never met its premise", r.axiom);
        }
    }
}

#[test]
fn regret_satisfies_its_characterizing_axioms() {
    let reports = soundness_suite(Rule::MinimaxRegret, &AxiomId::REGRET, &cfg(2_000)).unwrap();
    assert!(failures(&reports).is_empty(), "{:?}", failures(&reports));
}

#[test]
fn the_two_menu_independence_axioms_separate_safety_from_regret() {
    let c = cfg(10_000);
    let ina = check_axiom(AxiomId::Ina, Rule::MaximinSafety, &c).unwrap();
    assert!(!ina.held());
    assert!(ina.trials <= 1_000);
    assert!(replay_witness(&ina).unwrap());

    let inwa = check_axiom(AxiomId::Inwa, Rule::MinimaxRegret, &c).unwrap();
    assert!(!inwa.held());
    assert!(replay_witness(&inwa).unwrap());
}

#[test]
fn random_search_alone_finds_the_safety_ina_violation() {
    let c = InstanceGenConfig {
        include_fixtures: false,
        ..cfg(1_000)
    };
    let r = check_axiom(AxiomId::Ina, Rule::MaximinSafety, &c).unwrap();
    assert!(!r.held());
    assert!(r.witness.as_ref().unwrap().trial > 0);
    assert!(replay_witness(&r).unwrap());
}

#[test]
fn maximin_utility_fails_only_independence() {
    let reports = soundness_suite(Rule::MaximinUtility, &AxiomId::ALL, &cfg(2_000)).unwrap();
    assert_eq!(failures(&reports), vec![AxiomId::Independence]);
}

#[test]
fn maximax_utility_is_not_ambiguity_averse() {
    let r = check_axiom(
        AxiomId::AmbiguityAversion,
        Rule::MaximaxUtility,
        &cfg(2_000),
    )
    .unwrap();
    assert!(!r.held());
    assert!(replay_witness(&r).unwrap());
}

#[test]
fn reports_are_deterministic() {
    let c = cfg(300);
    for axiom in AxiomId::ALL {
        let a = check_axiom(axiom, Rule::MaximinSafety, &c)
            .unwrap()
            .to_json();
        let b = check_axiom(axiom, Rule::MaximinSafety, &c)
            .unwrap()
            .to_json();
        assert_eq!(a, b, "{axiom}");
    }
    let one = sample_instance(AxiomId::Symmetry, Rule::MaximinSafety, &c, 7).unwrap();
    let other = sample_instance(
        AxiomId::Symmetry,
        Rule::MaximinSafety,
        &InstanceGenConfig {
            seed: 1,
            ..c.clone()
        },
        7,
    )
    .unwrap();
    assert_ne!(one, other);
}

#[test]
fn witnesses_survive_a_json_round_trip() {
    let c = cfg(10_000);
    let cases = [
        (AxiomId::Ina, Rule::MaximinSafety),
        (AxiomId::Inwa, Rule::MinimaxRegret),
        (AxiomId::Independence, Rule::MaximinUtility),
    ];
    for (axiom, rule) in cases {
        let report = check_axiom(axiom, rule, &c).unwrap();
        let witness = report.witness.clone().unwrap();
        let back = Witness::from_json(&witness.to_json()).unwrap();
        assert_eq!(back, witness);
        assert!(back.replay().unwrap());
    }
}

#[test]
fn replaying_a_witness_under_the_other_rule_does_not_violate() {
    let ina = check_axiom(AxiomId::Ina, Rule::MaximinSafety, &cfg(1_000)).unwrap();
    let w = ina.witness.unwrap();
    assert_ne!(
        judge(AxiomId::Ina, Rule::MinimaxRegret, &w.instance).unwrap(),
        Judgement::Violated
    );
}

#[test]
fn ina_samples_that_are_also_never_worst_hold_for_safety() {
    let c = cfg(3_000);
    let mut both = 0;
    for trial in 0..c.trials {
        let inst = sample_instance(AxiomId::Ina, Rule::MaximinSafety, &c, trial).unwrap();
        let p = inst.problem.to_problem().unwrap();
        let m = Menu::from_names(&p, &inst.menus["M"]).unwrap();
        let added = p.act_index(&inst.roles["added"]).unwrap();
        assert!(!m.contains(added));
        assert!(is_never_strictly_optimal(&p, &m, added).unwrap());
        if is_never_strictly_worst(&p, &m, added).unwrap() {
            both += 1;
            let ina = judge(AxiomId::Ina, Rule::MaximinSafety, &inst).unwrap();
            let inwa = judge(AxiomId::Inwa, Rule::MaximinSafety, &inst).unwrap();
            assert_eq!(inwa, Judgement::Held, "trial {trial}");
            assert_eq!(ina, inwa, "trial {trial}");
        }
    }
    assert!(both > 0);
}

#[test]
fn continuity_grid_search_succeeds_on_every_strict_chain() {
    let c = cfg(3_000);
    let rules = [
        Rule::MaximinSafety,
        Rule::MinimaxRegret,
        Rule::MaximinUtility,
        Rule::MaximaxUtility,
        "anchored:median".parse().unwrap(),
    ];
    for rule in rules {
        let mut chains = 0;
        for trial in 0..c.trials {
            let inst = sample_instance(AxiomId::MixtureContinuity, rule, &c, trial).unwrap();
            assert_eq!(inst.params["grid"], 99.0);
            match judge(AxiomId::MixtureContinuity, rule, &inst).unwrap() {
                Judgement::Violated => panic!("{rule} trial {trial}"),
                Judgement::Held => chains += 1,
                Judgement::Vacuous => {}
            }
        }
        assert!(chains > 300, "{rule}: only {chains} strict chains");
    }
}

#[test]
fn malformed_witnesses_are_parse_errors() {
    assert!(matches!(
        Witness::from_json("{\"axiom\": \"ina\",\n oops}"),
        Err(maxsafe_core::Error::Parse { line: 2, .. })
    ));
    assert!(Witness::from_json("{\"axiom\": \"nope\"}").is_err());
}

#[test]
fn bad_configs_are_rejected() {
    let bad = InstanceGenConfig {
        max_prizes: 1,
        ..InstanceGenConfig::default()
    };
    assert!(check_axiom(AxiomId::Completeness, Rule::MaximinSafety, &bad).is_err());
}
