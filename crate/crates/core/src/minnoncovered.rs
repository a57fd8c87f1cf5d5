//! Randomized bounded-search-tree scheme for MinNonCovered with element
//! frequencies bounded above by `p`.
//!
//! Each repetition runs a depth-K search: at every node a uniformly random
//! uncovered element is drawn and the search branches on each of the (at
//! most `p`) sets containing it. Repetition `r` draws from ChaCha8 stream
//! `r` of the user seed, so runs are reproducible on any platform and thread
//! count.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitset::Bitset;
use crate::combinatorics::ceil_snapped;
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};

/// Refuse runs whose repetition count would not finish in practice.
pub const MAX_REPETITIONS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomizedRun {
    pub repetitions: u64,
    pub best: Solution,
    pub per_rep_uncovered: Vec<usize>,
    pub seed: u64,
}

/// `⌈-ln ε · (β/(β-1))^K⌉`
pub fn repetition_count(beta: f64, epsilon: f64, k: usize) -> Result<u64> {
    if beta.is_nan() || beta <= 1.0 || !beta.is_finite() {
        return Err(Error::param(format!(
            "beta must be greater than 1, got {beta}"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::param(format!(
            "epsilon must lie in (0, 1), got {epsilon}"
        )));
    }
    let success = ((beta - 1.0) / beta).powi(k as i32);
    let count = ceil_snapped(-epsilon.ln() / success);
    if !count.is_finite() || count > MAX_REPETITIONS as f64 {
        return Err(Error::CeilingExceeded {
            count: if count.is_finite() {
                count as u128
            } else {
                u128::MAX
            },
            ceiling: u128::from(MAX_REPETITIONS),
        });
    }
    Ok(count as u64)
}

struct Search<'a> {
    masks: &'a [Bitset],
    incidence: &'a [Vec<usize>],
    /// Elements contained in no set; never sampled.
    unreachable: &'a Bitset,
    n: usize,
}

/// Best partial solution found below a node.
struct Leaf {
    chosen: Vec<usize>,
    uncovered: usize,
}

impl Search<'_> {
    fn recurse(
        &self,
        depth: usize,
        chosen: &mut Vec<usize>,
        covered: &Bitset,
        rng: &mut ChaCha8Rng,
    ) -> Leaf {
        let uncovered = self.n - covered.count();
        let mut open = covered.clone();
        open.union_with(self.unreachable);
        let open = open.complement();
        let candidates = open.count();
        if depth == 0 || candidates == 0 {
            return Leaf {
                chosen: chosen.clone(),
                uncovered,
            };
        }
        let element = open
            .select(rng.gen_range(0..candidates))
            .expect("rank is below the candidate count");
        let mut best: Option<Leaf> = None;
        let mut next = covered.clone();
        for &set in &self.incidence[element] {
            next.assign_union(covered, &self.masks[set]);
            chosen.push(set);
            let leaf = self.recurse(depth - 1, chosen, &next, rng);
            chosen.pop();
            if best.as_ref().is_none_or(|b| leaf.uncovered < b.uncovered) {
                best = Some(leaf);
            }
        }
        best.expect("sampled elements lie in at least one set")
    }
}

/// Generator for repetition `rep` of a run seeded with `seed`.
fn repetition_rng(seed: u64, rep: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(rep);
    rng
}

pub fn randomized_min_noncovered(
    inst: &Instance,
    p: usize,
    beta: f64,
    epsilon: f64,
    seed: u64,
) -> Result<RandomizedRun> {
    inst.check_frequency_bound(p)?;
    let k = inst.effective_k();
    let repetitions = repetition_count(beta, epsilon, k)?;

    let incidence = inst.incidence();
    let mut unreachable = Bitset::new(inst.n());
    for (e, sets) in incidence.iter().enumerate() {
        if sets.is_empty() {
            unreachable.insert(e);
        }
    }
    let masks = inst.masks();
    let search = Search {
        masks: &masks,
        incidence: &incidence,
        unreachable: &unreachable,
        n: inst.n(),
    };
    let run_rep = |rep: u64| {
        let mut rng = repetition_rng(seed, rep);
        let mut chosen = Vec::with_capacity(k);
        search.recurse(k, &mut chosen, &Bitset::new(inst.n()), &mut rng)
    };
    let leaves: Vec<Leaf> = if repetitions > 8 {
        (0..repetitions).into_par_iter().map(run_rep).collect()
    } else {
        (0..repetitions).map(run_rep).collect()
    };

    let per_rep_uncovered: Vec<usize> = leaves.iter().map(|l| l.uncovered).collect();
    // strictly fewer uncovered replaces the incumbent: lowest repetition wins ties
    let best_rep = (0..leaves.len()).fold(0, |best, i| {
        if per_rep_uncovered[i] < per_rep_uncovered[best] {
            i
        } else {
            best
        }
    });
    let best = match leaves.into_iter().nth(best_rep) {
        Some(leaf) => Solution::new(inst, leaf.chosen),
        None => Solution::empty(inst),
    };
    Ok(RandomizedRun {
        repetitions,
        best,
        per_rep_uncovered,
        seed,
    })
}
