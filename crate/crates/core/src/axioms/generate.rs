//! Seeded instance generators.
//!
//! Instances are built as lottery acts and reduced at the end. Prize
//! utilities are `lo + k` for integer `k` and lottery probabilities are
//! multiples of 1/4, so generator values differ by at least 1/4 whenever
//! they differ at all; the strictness margin never decides a comparison.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::instance::Instance;
use super::{AxiomId, InstanceGenConfig};
use crate::error::Result;
use crate::fixtures;
use crate::lottery::{
    constant_act, mix_acts, reduce_to_matrix, AaAct, ConvexMenu, Lottery, PrizeSpace,
};
use crate::problem_file::ProblemFile;
use crate::rules::Rule;

const QUARTERS: [f64; 3] = [0.25, 0.5, 0.75];
const SHADES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Per-trial seed; trials are independent of each other and of order.
pub(crate) fn trial_seed(seed: u64, axiom: AxiomId, trial: u64) -> u64 {
    splitmix(splitmix(seed ^ splitmix(axiom as u64 + 1)) ^ trial)
}

/// Named acts collected while building an instance.
struct Builder<'p> {
    prizes: &'p PrizeSpace,
    names: Vec<String>,
    acts: Vec<AaAct>,
    menus: BTreeMap<String, Vec<String>>,
    roles: BTreeMap<String, String>,
    params: BTreeMap<String, f64>,
}

impl<'p> Builder<'p> {
    fn new(prizes: &'p PrizeSpace) -> Self {
        Builder {
            prizes,
            names: Vec::new(),
            acts: Vec::new(),
            menus: BTreeMap::new(),
            roles: BTreeMap::new(),
            params: BTreeMap::new(),
        }
    }

    fn add(&mut self, name: impl Into<String>, act: AaAct) -> String {
        let name = name.into();
        self.names.push(name.clone());
        self.acts.push(act);
        name
    }

    fn act(&self, name: &str) -> &AaAct {
        let i = self
            .names
            .iter()
            .position(|n| n == name)
            .expect("known act");
        &self.acts[i]
    }

    fn menu(&mut self, name: &str, members: Vec<String>) {
        self.menus.insert(name.to_string(), members);
    }

    fn role(&mut self, role: &str, act: &str) {
        self.roles.insert(role.to_string(), act.to_string());
    }

    fn finish(self) -> Result<Instance> {
        let reduced = reduce_to_matrix(self.prizes, &self.acts)?;
        let mut problem = ProblemFile::from_problem(&reduced, None);
        for (entry, name) in problem.acts.iter_mut().zip(self.names) {
            entry.name = name;
        }
        Ok(Instance {
            problem,
            menus: self.menus,
            roles: self.roles,
            params: self.params,
        })
    }
}

struct Sampler<'c> {
    rng: ChaCha8Rng,
    cfg: &'c InstanceGenConfig,
}

impl Sampler<'_> {
    fn prizes(&mut self) -> PrizeSpace {
        let (lo, hi) = self.cfg.utility_range;
        let span = (hi - lo).floor() as u64;
        let n = self.rng.gen_range(2..=self.cfg.max_prizes.max(2));
        let mut utilities = vec![lo, lo + span as f64];
        while utilities.len() < n {
            let k = self.rng.gen_range(0..=span);
            utilities.push(lo + k as f64);
        }
        utilities.shuffle(&mut self.rng);
        PrizeSpace::from_utilities(utilities).expect("two distinct utilities")
    }

    fn n_states(&mut self, at_least: usize) -> usize {
        let max = self.cfg.max_states.max(at_least);
        self.rng.gen_range(at_least..=max)
    }

    fn n_generators(&mut self, at_least: usize) -> usize {
        let max = self.cfg.max_generators.max(at_least);
        self.rng.gen_range(at_least..=max)
    }

    fn lottery(&mut self, prizes: &PrizeSpace) -> Lottery {
        let weights: Vec<(usize, f64)> = (0..4)
            .map(|_| (self.rng.gen_range(0..prizes.len()), 0.25))
            .collect();
        Lottery::new(prizes, weights).expect("quarters sum to one")
    }

    fn act(&mut self, prizes: &PrizeSpace, n_states: usize) -> AaAct {
        AaAct::new((0..n_states).map(|_| self.lottery(prizes)).collect()).expect("nonempty")
    }

    fn quarter(&mut self) -> f64 {
        *QUARTERS.choose(&mut self.rng).expect("nonempty")
    }

    fn shade(&mut self) -> f64 {
        *SHADES.choose(&mut self.rng).expect("nonempty")
    }

    /// Adds `k` random generators named `{prefix}1..` and returns their names.
    fn generators(
        &mut self,
        b: &mut Builder,
        prefix: &str,
        k: usize,
        n_states: usize,
    ) -> Vec<String> {
        (1..=k)
            .map(|i| {
                let act = self.act(b.prizes, n_states);
                b.add(format!("{prefix}{i}"), act)
            })
            .collect()
    }

    /// A member of the hull of `members`: either a listed act or a mixture
    /// of two of them, in which case it is added under `name` and appended
    /// to `members`.
    fn hull_member(&mut self, b: &mut Builder, members: &mut Vec<String>, name: &str) -> String {
        if members.len() < 2 || self.rng.gen_bool(0.5) {
            return members.choose(&mut self.rng).expect("nonempty").clone();
        }
        let i = self.rng.gen_range(0..members.len());
        let mut j = self.rng.gen_range(0..members.len() - 1);
        if j >= i {
            j += 1;
        }
        let w = self.quarter();
        let act = mix_acts(b.act(&members[i]), b.act(&members[j]), w).expect("compatible");
        let added = b.add(name, act);
        members.push(added.clone());
        added
    }

    /// Two distinct hull members when the menu allows it.
    fn hull_pair(&mut self, b: &mut Builder, members: &mut Vec<String>) -> (String, String) {
        let f = self.hull_member(b, members, "f");
        let mut g = self.hull_member(b, members, "g");
        if g == f && members.len() > 1 {
            g = members
                .iter()
                .find(|m| **m != f)
                .expect("two members")
                .clone();
        }
        (f, g)
    }

    fn statewise(
        &mut self,
        b: &Builder,
        members: &[String],
        toward: usize,
        n_states: usize,
    ) -> AaAct {
        let target = Lottery::point(b.prizes, toward).expect("valid prize");
        let lotteries = (0..n_states)
            .map(|s| {
                let m = members.choose(&mut self.rng).expect("nonempty");
                let w = self.shade();
                b.act(m).lottery(s).mix(&target, w).expect("same prizes")
            })
            .collect();
        AaAct::new(lotteries).expect("nonempty")
    }
}

fn value_of(b: &Builder, rule: Rule, members: &[String], role: &str) -> f64 {
    let acts: Vec<AaAct> = members.iter().map(|m| b.act(m).clone()).collect();
    let problem = reduce_to_matrix(b.prizes, &acts).expect("compatible");
    let menu = crate::Menu::all(&problem);
    rule.row_value(&problem, &menu, &b.act(role).utilities(b.prizes))
}

fn swap_blocks(act: &AaAct, e: &[usize], f: &[usize]) -> AaAct {
    let from_e = act.lottery(e[0]).clone();
    let from_f = act.lottery(f[0]).clone();
    let lotteries = (0..act.n_states())
        .map(|s| {
            if f.contains(&s) {
                from_e.clone()
            } else if e.contains(&s) {
                from_f.clone()
            } else {
                act.lottery(s).clone()
            }
        })
        .collect();
    AaAct::new(lotteries).expect("nonempty")
}

fn permute_states(act: &AaAct, a: usize, c: usize) -> AaAct {
    let mut lotteries = act.lotteries().to_vec();
    lotteries.swap(a, c);
    AaAct::new(lotteries).expect("nonempty")
}

/// The decoy-reversal problem with `a4` as the added act.
fn reversal_fixture() -> Instance {
    let t7 = fixtures::table7();
    let mut menus = BTreeMap::new();
    menus.insert("M".to_string(), vec!["a1".into(), "a2".into(), "a3".into()]);
    menus.insert("Ma".to_string(), t7.act_ids().to_vec());
    let mut roles = BTreeMap::new();
    roles.insert("f".to_string(), "a3".to_string());
    roles.insert("g".to_string(), "a2".to_string());
    roles.insert("added".to_string(), "a4".to_string());
    Instance {
        problem: ProblemFile::from_problem(&t7, None),
        menus,
        roles,
        params: BTreeMap::new(),
    }
}

/// Builds the instance for one trial. Deterministic in
/// `(cfg.seed, axiom, trial)` and, where the construction orders acts by
/// value, in `rule`.
pub fn sample_instance(
    axiom: AxiomId,
    rule: Rule,
    cfg: &InstanceGenConfig,
    trial: u64,
) -> Result<Instance> {
    if axiom == AxiomId::Ina && cfg.include_fixtures && trial == 0 {
        return Ok(reversal_fixture());
    }
    let mut s = Sampler {
        rng: ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, axiom, trial)),
        cfg,
    };
    let prizes = s.prizes();
    let mut b = Builder::new(&prizes);

    match axiom {
        AxiomId::Monotonicity => {
            let n = s.n_states(1);
            let k = s.n_generators(1);
            let mut members = s.generators(&mut b, "m", k, n);
            let g = s.hull_member(&mut b, &mut members, "g");
            let best = Lottery::point(&prizes, prizes.best())?;
            let lotteries = (0..n)
                .map(|st| {
                    let w = s.shade();
                    b.act(&g).lottery(st).mix(&best, w)
                })
                .collect::<Result<Vec<_>>>()?;
            let f = b.add("f", AaAct::new(lotteries)?);
            members.push(f.clone());
            b.menu("M", members);
            b.role("f", &f);
            b.role("g", &g);
        }
        AxiomId::Completeness | AxiomId::Transitivity => {
            let n = s.n_states(1);
            let k = s.n_generators(1);
            let mut members = s.generators(&mut b, "m", k, n);
            let mut picks = vec![
                s.hull_member(&mut b, &mut members, "x1"),
                s.hull_member(&mut b, &mut members, "x2"),
                s.hull_member(&mut b, &mut members, "x3"),
            ];
            if axiom == AxiomId::Transitivity {
                let mut scored: Vec<(f64, String)> = picks
                    .drain(..)
                    .map(|p| (value_of(&b, rule, &members, &p), p))
                    .collect();
                scored.sort_by(|x, y| y.0.total_cmp(&x.0));
                picks = scored.into_iter().map(|(_, p)| p).collect();
                b.role("h", &picks[2]);
            }
            b.role("f", &picks[0]);
            b.role("g", &picks[1]);
            b.menu("M", members);
        }
        AxiomId::Nontriviality => {
            let n = s.n_states(1);
            let k = s.n_generators(1);
            let mut members = s.generators(&mut b, "m", k, n);
            let hi = b.add(
                "best",
                constant_act(n, &Lottery::point(&prizes, prizes.best())?)?,
            );
            let lo = b.add(
                "worst",
                constant_act(n, &Lottery::point(&prizes, prizes.worst())?)?,
            );
            members.push(hi.clone());
            members.push(lo.clone());
            b.menu("M", members);
            b.role("f", &hi);
            b.role("g", &lo);
        }
        AxiomId::MixtureContinuity => {
            let n = s.n_states(1);
            let k = s.n_generators(3);
            let mut members = s.generators(&mut b, "m", k, n);
            if s.rng.gen_bool(0.5) {
                // a constant worst-prize floor spreads the menu-relative values
                let floor = constant_act(n, &Lottery::point(&prizes, prizes.worst())?)?;
                members.push(b.add("floor", floor));
            }
            let mut scored: Vec<(f64, String)> = members
                .iter()
                .map(|m| (value_of(&b, rule, &members, m), m.clone()))
                .collect();
            scored.shuffle(&mut s.rng);
            let mut chain: Vec<(f64, String)> = Vec::new();
            for (v, m) in scored {
                if chain.len() < 3 && chain.iter().all(|(w, _)| *w != v) {
                    chain.push((v, m));
                }
            }
            // fewer than three distinct values leaves the premise unmet
            while chain.len() < 3 {
                chain.push(chain[0].clone());
            }
            chain.sort_by(|x, y| y.0.total_cmp(&x.0));
            b.role("f", &chain[0].1);
            b.role("g", &chain[1].1);
            b.role("h", &chain[2].1);
            b.params.insert("grid".into(), cfg.mixture_grid as f64);
            b.menu("M", members);
        }
        AxiomId::ConstantActMenuIndependence => {
            let n = s.n_states(1);
            let l1 = s.lottery(&prizes);
            let l2 = s.lottery(&prizes);
            let c1 = b.add("f", constant_act(n, &l1)?);
            let c2 = b.add("g", constant_act(n, &l2)?);
            let k1 = s.n_generators(1);
            let k2 = s.n_generators(1);
            let mut first = s.generators(&mut b, "m", k1, n);
            let mut second = s.generators(&mut b, "n", k2, n);
            for menu in [&mut first, &mut second] {
                menu.push(c1.clone());
                menu.push(c2.clone());
            }
            b.menu("M", first);
            b.menu("M2", second);
            b.role("f", &c1);
            b.role("g", &c2);
        }
        AxiomId::Independence => {
            let n = s.n_states(1);
            let k = s.n_generators(1);
            let mut members = s.generators(&mut b, "m", k, n);
            let (f, g) = s.hull_pair(&mut b, &mut members);
            let h_act = s.act(&prizes, n);
            let h = b.add("h", h_act.clone());
            let p = s.quarter();
            let hull = ConvexMenu::new(members.iter().map(|m| b.act(m).clone()).collect())?;
            let mixed = crate::lottery::mix_menu(&hull, &h_act, p)?;
            let mixed_names: Vec<String> = members
                .iter()
                .zip(mixed.generators())
                .map(|(m, act)| b.add(format!("p{m}"), act.clone()))
                .collect();
            b.role("f", &f);
            b.role("g", &g);
            b.role("pf", &format!("p{f}"));
            b.role("pg", &format!("p{g}"));
            b.role("h", &h);
            b.params.insert("p".into(), p);
            b.menu("M", members);
            b.menu("Mix", mixed_names);
        }
        AxiomId::Symmetry => {
            let n = s.n_states(2);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut s.rng);
            let e_len = s.rng.gen_range(1..n);
            let f_len = s.rng.gen_range(1..=n - e_len);
            let e_states = order[..e_len].to_vec();
            let f_states = order[e_len..e_len + f_len].to_vec();
            let k = s.n_generators(1);
            let mut members = Vec::with_capacity(k);
            for i in 1..=k {
                let mut act = s.act(&prizes, n);
                let on_e = s.lottery(&prizes);
                let on_f = s.lottery(&prizes);
                let lotteries = (0..n)
                    .map(|st| {
                        if e_states.contains(&st) {
                            on_e.clone()
                        } else if f_states.contains(&st) {
                            on_f.clone()
                        } else {
                            act.lottery(st).clone()
                        }
                    })
                    .collect();
                act = AaAct::new(lotteries)?;
                members.push(b.add(format!("m{i}"), act));
            }
            let (f, g) = s.hull_pair(&mut b, &mut members);
            let swapped: Vec<String> = members
                .clone()
                .iter()
                .map(|m| {
                    let act = swap_blocks(b.act(m), &e_states, &f_states);
                    b.add(format!("s{m}"), act)
                })
                .collect();
            b.role("f", &f);
            b.role("g", &g);
            b.role("fs", &format!("s{f}"));
            b.role("gs", &format!("s{g}"));
            b.menu("M", members);
            b.menu("Ms", swapped);
        }
        AxiomId::AmbiguityAversion => {
            let n = s.n_states(2);
            let a = s.rng.gen_range(0..n);
            let mut c = s.rng.gen_range(0..n - 1);
            if c >= a {
                c += 1;
            }
            let k = s.n_generators(1);
            let mut members = s.generators(&mut b, "m", k, n);
            let f = s.hull_member(&mut b, &mut members, "f");
            let mirrored: Vec<String> = members
                .clone()
                .iter()
                .map(|m| {
                    let act = permute_states(b.act(m), a, c);
                    b.add(format!("r{m}"), act)
                })
                .collect();
            members.extend(mirrored);
            let g = format!("r{f}");
            let p = s.quarter();
            let mix = mix_acts(b.act(&f), b.act(&g), p)?;
            let mix = b.add("mix", mix);
            b.role("f", &f);
            b.role("g", &g);
            b.role("mix", &mix);
            b.params.insert("p".into(), p);
            b.menu("M", members);
        }
        AxiomId::Ina | AxiomId::Inwa => {
            let n = s.n_states(1);
            let k = s.n_generators(1);
            let mut members = s.generators(&mut b, "m", k, n);
            let (f, g) = s.hull_pair(&mut b, &mut members);
            let toward = if axiom == AxiomId::Ina {
                prizes.worst()
            } else {
                prizes.best()
            };
            let added = s.statewise(&b, &members, toward, n);
            let added = b.add("added", added);
            let mut extended = members.clone();
            extended.push(added.clone());
            b.role("f", &f);
            b.role("g", &g);
            b.role("added", &added);
            b.menu("M", members);
            b.menu("Ma", extended);
        }
    }
    b.finish()
}
