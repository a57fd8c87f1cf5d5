//! Greedy maximum coverage with a per-step trace, and its guarantee for
//! instances whose element frequencies are bounded below.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};

/// Step-by-step record of a greedy run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreedyTrace {
    pub picks: Vec<usize>,
    /// Newly covered elements at each step.
    pub marginal_gains: Vec<usize>,
    /// Uncovered count after each step.
    pub uncovered_after: Vec<usize>,
}

/// Runs up to `steps` greedy picks over sets not yet `taken`, updating
/// `covered`. Each step takes the set with the most newly covered elements,
/// lowest index on ties, including zero-gain picks. Returns `(pick, gain)`.
pub(crate) fn extend_greedily(
    masks: &[Bitset],
    covered: &mut Bitset,
    taken: &mut [bool],
    steps: usize,
) -> Vec<(usize, usize)> {
    let mut picks = Vec::with_capacity(steps);
    for _ in 0..steps {
        let mut best: Option<(usize, usize)> = None;
        for (i, mask) in masks.iter().enumerate() {
            if taken[i] {
                continue;
            }
            let gain = mask.difference_count(covered);
            if best.is_none_or(|(_, g)| gain > g) {
                best = Some((i, gain));
            }
        }
        let Some((i, gain)) = best else { break };
        taken[i] = true;
        covered.union_with(&masks[i]);
        picks.push((i, gain));
    }
    picks
}

/// Greedy cover using `min(K, m)` picks.
pub fn greedy_cover(inst: &Instance) -> (Solution, GreedyTrace) {
    let masks = inst.masks();
    let mut covered = Bitset::new(inst.n());
    let mut taken = vec![false; inst.m()];
    let steps = extend_greedily(&masks, &mut covered, &mut taken, inst.effective_k());

    let mut trace = GreedyTrace::default();
    let mut uncovered = inst.n();
    for (pick, gain) in steps {
        uncovered -= gain;
        trace.picks.push(pick);
        trace.marginal_gains.push(gain);
        trace.uncovered_after.push(uncovered);
    }
    let solution = Solution::new(inst, trace.picks.clone());
    debug_assert_eq!(solution.uncovered, uncovered);
    (solution, trace)
}

/// `1 - e^(-max(pK/m, 1))` for minimum frequency `p`.
pub fn greedy_guarantee(p: usize, k: usize, m: usize) -> Result<f64> {
    if p == 0 || k == 0 || m == 0 {
        return Err(Error::param(format!(
            "greedy guarantee needs p, K, m >= 1 (got p={p}, K={k}, m={m})"
        )));
    }
    let exponent = (p as f64 * k as f64 / m as f64).max(1.0);
    Ok(1.0 - (-exponent).exp())
}

/// Upper bound `n (1 - p/m)^i` on the uncovered count after `i` greedy steps
/// when every element lies in at least `p` sets.
pub fn uncovered_bound(n: usize, p: usize, m: usize, step: usize) -> f64 {
    n as f64 * (1.0 - p as f64 / m as f64).powi(step as i32)
}
