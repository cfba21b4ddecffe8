//! Worked example problems used by the golden checks, the CLI and the demo.

use crate::decision::DecisionProblem;

fn labelled(states: &[&str], acts: &[&str], rows: &[&[f64]]) -> DecisionProblem {
    DecisionProblem::new(
        states.iter().map(|s| s.to_string()).collect(),
        acts.iter().map(|a| a.to_string()).collect(),
        rows.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("fixture is well formed")
}

/// Hunters running from a bear; distance covered on a wet or dry road.
pub fn table1() -> DecisionProblem {
    labelled(
        &["WetRoad", "DryRoad"],
        &["Sprint", "Hustle", "Jog"],
        &[&[1.0, 9.0], &[3.0, 6.0], &[2.0, 2.0]],
    )
}

/// Camera purchase: travel camera, sports camera and the obsolete decoy.
pub fn table2() -> DecisionProblem {
    labelled(
        &["s1", "s2"],
        &["a1", "a2", "a3"],
        &[&[4.0, 4.0], &[2.0, 6.0], &[3.0, 3.0]],
    )
}

/// The camera problem again; the safety panels are computed with and
/// without `a3` in the menu.
pub fn table5() -> DecisionProblem {
    table2()
}

/// Four acts, each optimal under a different rule.
pub fn table6() -> DecisionProblem {
    labelled(
        &["s1", "s2"],
        &["a1", "a2", "a3", "a4"],
        &[&[1.0, 9.0], &[3.0, 6.0], &[2.0, 7.0], &[4.0, 4.0]],
    )
}

/// Adding `a4`, dominated by `a3`, reverses the safety order of `a2` and `a3`.
pub fn table7() -> DecisionProblem {
    labelled(
        &["s1", "s2", "s3"],
        &["a1", "a2", "a3", "a4"],
        &[
            &[9.0, 2.0, 6.0],
            &[5.0, 3.0, 7.0],
            &[4.0, 8.0, 8.0],
            &[1.0, 5.0, 6.0],
        ],
    )
}
