//! Lotteries over prizes and acts that map states to lotteries.
//!
//! Acts can be mixed statewise, and a convex menu is the hull of finitely
//! many generator acts. Reducing a list of acts to expected utilities gives
//! an ordinary [`DecisionProblem`], so every rule applies unchanged.

use std::collections::HashSet;

use crate::decision::DecisionProblem;
use crate::error::{Error, Result};

const PROBABILITY_TOLERANCE: f64 = 1e-12;

/// Prizes and their utilities. At least two prizes must differ in utility.
#[derive(Debug, Clone, PartialEq)]
pub struct PrizeSpace {
    ids: Vec<String>,
    utilities: Vec<f64>,
}

impl PrizeSpace {
    pub fn new(ids: Vec<String>, utilities: Vec<f64>) -> Result<Self> {
        if ids.len() != utilities.len() {
            return Err(Error::validation(
                "prizes",
                "one utility per prize is required",
            ));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = ids.iter().find(|id| !seen.insert(id.as_str())) {
            return Err(Error::validation(
                "prizes",
                format!("duplicate prize `{dup}`"),
            ));
        }
        if utilities.iter().any(|u| !u.is_finite()) {
            return Err(Error::validation("prizes", "utilities must be finite"));
        }
        let distinct = utilities.iter().any(|u| *u != utilities[0]);
        if utilities.len() < 2 || !distinct {
            return Err(Error::validation(
                "prizes",
                "need at least two prizes with different utilities",
            ));
        }
        Ok(PrizeSpace { ids, utilities })
    }

    /// Prizes named `y1..yn`.
    pub fn from_utilities(utilities: Vec<f64>) -> Result<Self> {
        let ids = (1..=utilities.len()).map(|i| format!("y{i}")).collect();
        Self::new(ids, utilities)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn utility(&self, prize: usize) -> f64 {
        self.utilities[prize]
    }

    pub fn utilities(&self) -> &[f64] {
        &self.utilities
    }

    /// Index of a prize with the smallest utility.
    pub fn worst(&self) -> usize {
        (0..self.len())
            .min_by(|&a, &b| self.utilities[a].total_cmp(&self.utilities[b]))
            .expect("nonempty")
    }

    /// Index of a prize with the largest utility.
    pub fn best(&self) -> usize {
        (0..self.len())
            .max_by(|&a, &b| self.utilities[a].total_cmp(&self.utilities[b]))
            .expect("nonempty")
    }
}

/// A finitely supported probability over the prizes of one prize space.
///
/// The support is sorted by prize index and holds no zero entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Lottery {
    n_prizes: usize,
    support: Vec<(usize, f64)>,
}

impl Lottery {
    pub fn new(
        prizes: &PrizeSpace,
        weights: impl IntoIterator<Item = (usize, f64)>,
    ) -> Result<Self> {
        let mut support: Vec<(usize, f64)> = Vec::new();
        for (prize, p) in weights {
            if prize >= prizes.len() {
                return Err(Error::IndexOutOfRange {
                    what: "prize",
                    index: prize,
                    len: prizes.len(),
                });
            }
            if !p.is_finite() || p < 0.0 {
                return Err(Error::validation("lottery", format!("bad probability {p}")));
            }
            match support.iter_mut().find(|(y, _)| *y == prize) {
                Some(entry) => entry.1 += p,
                None => support.push((prize, p)),
            }
        }
        support.retain(|&(_, p)| p > 0.0);
        support.sort_by_key(|&(y, _)| y);
        let total: f64 = support.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > PROBABILITY_TOLERANCE {
            return Err(Error::validation(
                "lottery",
                format!("probabilities sum to {total}, not 1"),
            ));
        }
        Ok(Lottery {
            n_prizes: prizes.len(),
            support,
        })
    }

    /// All mass on one prize.
    pub fn point(prizes: &PrizeSpace, prize: usize) -> Result<Self> {
        Self::new(prizes, [(prize, 1.0)])
    }

    pub fn support(&self) -> &[(usize, f64)] {
        &self.support
    }

    pub fn probability(&self, prize: usize) -> f64 {
        self.support
            .iter()
            .find(|(y, _)| *y == prize)
            .map_or(0.0, |(_, p)| *p)
    }

    pub fn total_mass(&self) -> f64 {
        self.support.iter().map(|(_, p)| p).sum()
    }

    /// `alpha * self + (1 - alpha) * other`, on the union of supports.
    pub fn mix(&self, other: &Lottery, alpha: f64) -> Result<Lottery> {
        if self.n_prizes != other.n_prizes {
            return Err(Error::contract("lotteries are over different prize spaces"));
        }
        check_weight(alpha)?;
        let mut support = Vec::with_capacity(self.support.len() + other.support.len());
        let (mut i, mut j) = (0, 0);
        while i < self.support.len() || j < other.support.len() {
            let a = self.support.get(i);
            let b = other.support.get(j);
            let (prize, pa, pb) = match (a, b) {
                (Some(&(ya, pa)), Some(&(yb, pb))) if ya == yb => {
                    i += 1;
                    j += 1;
                    (ya, pa, pb)
                }
                (Some(&(ya, pa)), Some(&(yb, _))) if ya < yb => {
                    i += 1;
                    (ya, pa, 0.0)
                }
                (Some(&(ya, pa)), None) => {
                    i += 1;
                    (ya, pa, 0.0)
                }
                (_, Some(&(yb, pb))) => {
                    j += 1;
                    (yb, 0.0, pb)
                }
                (None, None) => unreachable!(),
            };
            let p = alpha * pa + (1.0 - alpha) * pb;
            if p > 0.0 {
                support.push((prize, p));
            }
        }
        Ok(Lottery {
            n_prizes: self.n_prizes,
            support,
        })
    }
}

fn check_weight(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::contract(format!(
            "mixture weight {alpha} is outside [0, 1]"
        )))
    }
}

/// Expected prize utility of a lottery.
pub fn lottery_utility(prizes: &PrizeSpace, lottery: &Lottery) -> f64 {
    lottery
        .support
        .iter()
        .map(|&(y, p)| p * prizes.utility(y))
        .sum()
}

/// An act: one lottery per state.
#[derive(Debug, Clone, PartialEq)]
pub struct AaAct {
    lotteries: Vec<Lottery>,
}

impl AaAct {
    pub fn new(lotteries: Vec<Lottery>) -> Result<Self> {
        let Some(first) = lotteries.first() else {
            return Err(Error::validation("act", "an act needs at least one state"));
        };
        if lotteries.iter().any(|l| l.n_prizes != first.n_prizes) {
            return Err(Error::contract(
                "act lotteries are over different prize spaces",
            ));
        }
        Ok(AaAct { lotteries })
    }

    pub fn n_states(&self) -> usize {
        self.lotteries.len()
    }

    pub fn lottery(&self, state: usize) -> &Lottery {
        &self.lotteries[state]
    }

    pub fn lotteries(&self) -> &[Lottery] {
        &self.lotteries
    }

    /// Expected utility in each state.
    pub fn utilities(&self, prizes: &PrizeSpace) -> Vec<f64> {
        self.lotteries
            .iter()
            .map(|l| lottery_utility(prizes, l))
            .collect()
    }

    fn compatible(&self, other: &AaAct) -> bool {
        self.n_states() == other.n_states()
            && self.lotteries[0].n_prizes == other.lotteries[0].n_prizes
    }
}

/// The act mapping each state `s` to `alpha f(s) + (1 - alpha) g(s)`.
pub fn mix_acts(f: &AaAct, g: &AaAct, alpha: f64) -> Result<AaAct> {
    if !f.compatible(g) {
        return Err(Error::contract(
            "acts are over different state or prize spaces",
        ));
    }
    check_weight(alpha)?;
    let lotteries = f
        .lotteries
        .iter()
        .zip(&g.lotteries)
        .map(|(a, b)| a.mix(b, alpha))
        .collect::<Result<_>>()?;
    Ok(AaAct { lotteries })
}

/// The act that plays `lottery` in every state.
pub fn constant_act(n_states: usize, lottery: &Lottery) -> Result<AaAct> {
    AaAct::new(vec![lottery.clone(); n_states])
}

/// The convex hull of a nonempty list of acts.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexMenu {
    generators: Vec<AaAct>,
}

impl ConvexMenu {
    pub fn new(generators: Vec<AaAct>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::validation(
                "menu",
                "a convex menu needs at least one generator",
            ));
        };
        if generators.iter().any(|g| !g.compatible(first)) {
            return Err(Error::contract("menu generators are over different spaces"));
        }
        Ok(ConvexMenu { generators })
    }

    pub fn generators(&self) -> &[AaAct] {
        &self.generators
    }

    pub fn n_states(&self) -> usize {
        self.generators[0].n_states()
    }

    /// The hull of `self` and `act`.
    pub fn with(&self, act: AaAct) -> Result<Self> {
        let mut generators = self.generators.clone();
        generators.push(act);
        Self::new(generators)
    }
}

/// `p M + (1 - p) h`: every generator mixed with the fixed act `h`.
///
/// Mixing with a fixed act is affine, so the hull of the mixed generators
/// is the mixed hull.
pub fn mix_menu(menu: &ConvexMenu, h: &AaAct, p: f64) -> Result<ConvexMenu> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::contract(format!(
            "menu mixture weight {p} is outside (0, 1)"
        )));
    }
    let generators = menu
        .generators
        .iter()
        .map(|g| mix_acts(g, h, p))
        .collect::<Result<_>>()?;
    ConvexMenu::new(generators)
}

/// The utility matrix of `acts`: entry `(i, s)` is the expected utility of
/// `acts[i]` in state `s`.
pub fn reduce_to_matrix(prizes: &PrizeSpace, acts: &[AaAct]) -> Result<DecisionProblem> {
    let Some(first) = acts.first() else {
        return Err(Error::validation("acts", "at least one act is required"));
    };
    if acts.iter().any(|a| !a.compatible(first)) || first.lotteries[0].n_prizes != prizes.len() {
        return Err(Error::contract(
            "acts are over different state or prize spaces",
        ));
    }
    DecisionProblem::from_rows(acts.iter().map(|a| a.utilities(prizes)).collect())
}
