//! Menu-dependent decision rules for problems without probabilities.
//!
//! Maximin safety ranks acts by their worst-case margin above the poorest
//! alternative on the menu, the mirror image of minimax regret. The crate
//! provides the rules, the lottery layer needed to mix acts, executable
//! axiom checks, and decoy-effect analysis.

pub mod axioms;
pub mod decision;
pub mod decoy;
mod error;
pub mod fixtures;
pub mod lottery;
pub mod problem_file;
pub mod rules;

pub use decision::{
    dominates, is_never_strictly_optimal, is_never_strictly_worst, DecisionProblem, Menu,
};
pub use decoy::{
    decoy_effect, find_dominated, is_asymmetrically_dominated, synthesize_decoy, DecoyKind,
    DecoyOutcome,
};
pub use error::{Error, Result};
pub use rules::{
    anchor_value, anchored_value, expected_regret, expected_safety, maximax_value, maximin_value,
    rank, regret, safety, safety_state, value, Anchor, CredalSet, Quantile, RankEntry, Ranking,
    Rule,
};
