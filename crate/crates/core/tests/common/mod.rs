#![allow(dead_code)]

use maxsafe_core::{DecisionProblem, Menu};
use proptest::prelude::*;

/// Rows of small integer utilities, `acts x states`.
pub fn int_rows(
    max_acts: usize,
    max_states: usize,
    hi: i32,
) -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1..=max_acts, 1..=max_states).prop_flat_map(move |(a, s)| {
        prop::collection::vec(prop::collection::vec((0..=hi).prop_map(f64::from), s), a)
    })
}

/// Rows of arbitrary finite utilities.
pub fn real_rows(max_acts: usize, max_states: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1..=max_acts, 1..=max_states).prop_flat_map(move |(a, s)| {
        prop::collection::vec(prop::collection::vec(-1e6f64..1e6, s), a)
    })
}

/// A problem together with a nonempty menu, given as a member mask.
pub fn with_menu(
    rows: impl Strategy<Value = Vec<Vec<f64>>>,
) -> impl Strategy<Value = (DecisionProblem, Menu)> {
    rows.prop_flat_map(|rows| {
        let n = rows.len();
        (Just(rows), prop::collection::vec(any::<bool>(), n), 0..n)
    })
    .prop_map(|(rows, mask, forced)| {
        let p = DecisionProblem::from_rows(rows).unwrap();
        let members: Vec<usize> = (0..p.n_acts())
            .filter(|&i| mask[i] || i == forced)
            .collect();
        let m = Menu::new(&p, members).unwrap();
        (p, m)
    })
}

pub fn column(p: &DecisionProblem, m: &Menu, s: usize) -> Vec<f64> {
    m.iter().map(|a| p.row(a)[s]).collect()
}
