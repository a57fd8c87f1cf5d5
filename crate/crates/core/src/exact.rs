//! Exhaustive search over k-subsets, used as the optimum oracle and as the
//! exact phase of the hybrid and pool-based solvers.
//!
//! Subsets are visited in lexicographic order of candidate positions, with
//! unions maintained incrementally along the search path. A subset replaces
//! the incumbent only when it scores strictly higher, so the winner is the
//! lexicographically smallest maximizer. The parallel path splits on the
//! first position and reduces with the same rule, so results do not depend
//! on the thread count.

use rayon::prelude::*;

use crate::bitset::Bitset;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};

/// Default cap on the number of subsets any solver will enumerate.
pub const DEFAULT_CEILING: u128 = 100_000_000;

/// Below this many subsets the scan stays on the calling thread.
const PARALLEL_THRESHOLD: u128 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub solution: Solution,
    pub opt: usize,
    pub subsets_scanned: u128,
}

/// Outcome of a subset scan: positions into the candidate list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Scan {
    pub best: Vec<usize>,
    pub score: usize,
    pub scanned: u128,
}

impl Scan {
    fn offer(&mut self, score: usize, combo: &[usize]) {
        if self.scanned == 0 || score > self.score {
            self.score = score;
            self.best.clear();
            self.best.extend_from_slice(combo);
        }
        self.scanned += 1;
    }

    fn merge(self, other: Scan) -> Scan {
        let scanned = self.scanned + other.scanned;
        let winner = match (self.scanned, other.scanned) {
            (0, _) => other,
            (_, 0) => self,
            _ => {
                if other.score > self.score || (other.score == self.score && other.best < self.best)
                {
                    other
                } else {
                    self
                }
            }
        };
        Scan { scanned, ..winner }
    }

    fn empty() -> Scan {
        Scan {
            best: Vec::new(),
            score: 0,
            scanned: 0,
        }
    }
}

/// Verifies `C(n, k)` against `ceiling` and returns it.
pub(crate) fn check_ceiling(n: usize, k: usize, ceiling: u128) -> Result<u128> {
    match binomial(n as u64, k as u64) {
        Some(count) if count <= ceiling => Ok(count),
        Some(count) => Err(Error::CeilingExceeded { count, ceiling }),
        None => Err(Error::CeilingExceeded {
            count: u128::MAX,
            ceiling,
        }),
    }
}

/// Scans every `k`-subset of `masks`, scoring each leaf with
/// `score(positions, union)`. Requires `k <= masks.len()`.
pub(crate) fn scan_subsets<F>(masks: &[Bitset], universe: usize, k: usize, score: F) -> Scan
where
    F: Fn(&[usize], &Bitset) -> usize + Sync,
{
    assert!(k <= masks.len());
    let total = binomial(masks.len() as u64, k as u64).unwrap_or(u128::MAX);
    if k == 0 || total < PARALLEL_THRESHOLD || rayon::current_num_threads() == 1 {
        let mut walker = Walker::new(masks, universe, k, &score);
        walker.descend(0);
        return walker.scan;
    }
    (0..=masks.len() - k)
        .into_par_iter()
        .map(|first| {
            let mut walker = Walker::new(masks, universe, k, &score);
            walker.push(first);
            walker.descend(first + 1);
            walker.scan
        })
        .reduce(Scan::empty, Scan::merge)
}

struct Walker<'a, F> {
    masks: &'a [Bitset],
    k: usize,
    score: &'a F,
    combo: Vec<usize>,
    /// `unions[d]` is the union of the first `d` chosen masks.
    unions: Vec<Bitset>,
    scan: Scan,
}

impl<'a, F> Walker<'a, F>
where
    F: Fn(&[usize], &Bitset) -> usize,
{
    fn new(masks: &'a [Bitset], universe: usize, k: usize, score: &'a F) -> Self {
        Walker {
            masks,
            k,
            score,
            combo: Vec::with_capacity(k),
            unions: vec![Bitset::new(universe); k + 1],
            scan: Scan::empty(),
        }
    }

    fn push(&mut self, i: usize) {
        let d = self.combo.len();
        let (below, above) = self.unions.split_at_mut(d + 1);
        above[0].assign_union(&below[d], &self.masks[i]);
        self.combo.push(i);
    }

    fn descend(&mut self, start: usize) {
        let d = self.combo.len();
        if d == self.k {
            let s = (self.score)(&self.combo, &self.unions[d]);
            self.scan.offer(s, &self.combo);
            return;
        }
        let last = self.masks.len() - (self.k - d);
        for i in start..=last {
            self.push(i);
            self.descend(i + 1);
            self.combo.pop();
        }
    }
}

/// Finds the lexicographically smallest `k`-subset of `masks` maximizing the
/// union size, under `ceiling`.
pub(crate) fn best_union(
    masks: &[Bitset],
    universe: usize,
    k: usize,
    ceiling: u128,
) -> Result<Scan> {
    check_ceiling(masks.len(), k, ceiling)?;
    Ok(scan_subsets(masks, universe, k, |_, union| union.count()))
}

/// Optimal MaxCover solution of size exactly `min(K, m)`.
pub fn brute_force(inst: &Instance) -> Result<ExactResult> {
    brute_force_with_ceiling(inst, DEFAULT_CEILING)
}

pub fn brute_force_with_ceiling(inst: &Instance, ceiling: u128) -> Result<ExactResult> {
    let masks = inst.masks();
    let scan = best_union(&masks, inst.n(), inst.effective_k(), ceiling)?;
    let solution = Solution::new(inst, scan.best);
    debug_assert_eq!(solution.covered, scan.score);
    Ok(ExactResult {
        opt: solution.covered,
        solution,
        subsets_scanned: scan.scanned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Combinations;

    fn inst(n: usize, sets: &[&[usize]], k: usize) -> Instance {
        Instance::new(n, sets.iter().map(|s| s.to_vec()).collect(), k).unwrap()
    }

    #[test]
    fn picks_best_pair() {
        let i = inst(3, &[&[0, 1], &[1, 2], &[2]], 2);
        let r = brute_force(&i).unwrap();
        assert_eq!(r.solution.chosen, vec![0, 1]);
        assert_eq!(r.opt, 3);
        assert_eq!(r.subsets_scanned, 3);
    }

    #[test]
    fn zero_budget_and_clamped_budget() {
        let i = inst(3, &[&[0, 1], &[1, 2], &[2]], 0);
        let r = brute_force(&i).unwrap();
        assert!(r.solution.chosen.is_empty());
        assert_eq!(r.opt, 0);

        let r = brute_force(&i.with_k(7)).unwrap();
        assert_eq!(r.solution.chosen, vec![0, 1, 2]);
        assert_eq!(r.opt, 3);
    }

    #[test]
    fn ceiling_refuses_with_count() {
        let sets: Vec<Vec<usize>> = (0..30).map(|i| vec![i]).collect();
        let i = Instance::new(30, sets, 15).unwrap();
        let err = brute_force_with_ceiling(&i, 1000).unwrap_err();
        assert_eq!(
            err,
            Error::CeilingExceeded {
                count: 155_117_520,
                ceiling: 1000
            }
        );
    }

    #[test]
    fn ties_resolve_to_lexicographic_minimum() {
        // every pair of disjoint singletons covers 2
        let i = inst(4, &[&[0], &[1], &[2], &[3]], 2);
        assert_eq!(brute_force(&i).unwrap().solution.chosen, vec![0, 1]);
        let i = inst(3, &[&[0], &[0, 1], &[2], &[1, 2]], 2);
        assert_eq!(brute_force(&i).unwrap().solution.chosen, vec![0, 3]);
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        // C(20, 6) = 38760 subsets, above the parallel threshold
        let sets: Vec<Vec<usize>> = (0..20)
            .map(|i| (0..24).filter(|e| (e * 7 + i * 3) % 5 < 2).collect())
            .collect();
        let i = Instance::new(24, sets, 6).unwrap();
        let masks = i.masks();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let par = pool.install(|| best_union(&masks, 24, 6, DEFAULT_CEILING).unwrap());
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let seq = single.install(|| best_union(&masks, 24, 6, DEFAULT_CEILING).unwrap());
        assert_eq!(par, seq);

        let naive = Combinations::new(20, 6)
            .map(|c| (i.coverage(&c).unwrap(), std::cmp::Reverse(c)))
            .max()
            .unwrap();
        assert_eq!(seq.score, naive.0);
        assert_eq!(seq.best, naive.1 .0);
    }
}
