use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use maxsafe_core::Rule;

#[derive(Debug, Parser)]
#[command(
    name = "maxsafe",
    version,
    about = "Rank acts by menu-dependent decision rules, scan for decoy effects and test axioms."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every menu act under one rule and print the ranking.
    Rank(RankArgs),
    /// Rank a base menu with and without one extra act and classify the change.
    DecoyScan(DecoyScanArgs),
    /// Check axioms on seeded random instances.
    Axioms(AxiomArgs),
    /// Recompute the reference tables and compare against the stored values.
    PaperTables,
    /// Construct a dominated act that makes a target the unique safety choice.
    SynthDecoy(SynthArgs),
    /// Re-judge the witnesses in a witness file.
    Replay(ReplayArgs),
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse().map_err(|e: maxsafe_core::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// Problem file (JSON); `-` reads standard input.
    pub problem: PathBuf,
    /// maximax | maximin | regret | safety | anchored:<zero|max|min|mean|median|quantile:q>
    #[arg(long, value_parser = parse_rule)]
    pub rule: Rule,
    /// Comma-separated acts; defaults to the file's menu, else all acts.
    #[arg(long, value_delimiter = ',')]
    pub menu: Option<Vec<String>>,
    /// Use the file's credal set (safety and regret only).
    #[arg(long)]
    pub credal: bool,
}

#[derive(Debug, Args)]
pub struct DecoyScanArgs {
    pub problem: PathBuf,
    #[arg(long, value_parser = parse_rule)]
    pub rule: Rule,
    /// Comma-separated base menu.
    #[arg(long, value_delimiter = ',', required = true)]
    pub base_menu: Vec<String>,
    /// The act added to the base menu.
    #[arg(long)]
    pub decoy: String,
}

#[derive(Debug, Args)]
pub struct AxiomArgs {
    #[arg(long, value_parser = parse_rule)]
    pub rule: Rule,
    /// Axiom name or number, a comma-separated list, or `all`.
    #[arg(long, default_value = "all")]
    pub axiom: String,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// JSON file with generator settings; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub max_states: Option<usize>,
    #[arg(long)]
    pub max_generators: Option<usize>,
    #[arg(long)]
    pub max_prizes: Option<usize>,
    /// Grid points searched for mixture weights.
    #[arg(long)]
    pub grid: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub utility_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub utility_max: Option<f64>,
    /// Skip the stored reference instance and rely on random trials only.
    #[arg(long)]
    pub no_fixtures: bool,
    /// Where witnesses of violated axioms are written.
    #[arg(long, default_value = "maxsafe-witnesses.json")]
    pub witness_file: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    pub problem: PathBuf,
    /// Comma-separated base menu; defaults as for `rank`.
    #[arg(long, value_delimiter = ',')]
    pub menu: Option<Vec<String>>,
    #[arg(long)]
    pub target: String,
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Write the problem with the decoy appended to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub witness_file: PathBuf,
}
