//! Pool-based approximation scheme for MaxCover when every element lies in
//! at most `p` sets: keep only the `⌈2pK/(1-β) + K⌉` largest sets and search
//! their K-subsets exhaustively.

use crate::combinatorics::{binomial, ceil_snapped};
use crate::error::{Error, Result};
use crate::exact::{best_union, DEFAULT_CEILING};
use crate::instance::{Instance, Solution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolPlan {
    /// Pool size after clamping to `m`.
    pub pool_size: usize,
    /// Pool members ordered by (cardinality desc, index asc).
    pub pool: Vec<usize>,
    /// Number of K-subsets of the pool.
    pub combos: u128,
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::param(format!("beta must lie in (0, 1), got {beta}")));
    }
    Ok(())
}

/// Unclamped pool size `⌈2pK/(1-β) + K⌉`.
pub fn pool_size(p: usize, k: usize, beta: f64) -> Result<u64> {
    check_beta(beta)?;
    if p == 0 || k == 0 {
        return Err(Error::param(format!(
            "pool size needs p, K >= 1 (got p={p}, K={k})"
        )));
    }
    let raw = 2.0 * p as f64 * k as f64 / (1.0 - beta) + k as f64;
    let size = ceil_snapped(raw);
    if size >= u64::MAX as f64 {
        return Err(Error::Overflow(format!(
            "pool size {raw} does not fit in 64 bits"
        )));
    }
    Ok(size as u64)
}

/// The `size` highest-cardinality sets, lowest index first among equals.
pub fn largest_sets(inst: &Instance, size: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..inst.m()).collect();
    order.sort_by(|&a, &b| inst.set(b).len().cmp(&inst.set(a).len()).then(a.cmp(&b)));
    order.truncate(size);
    order
}

pub fn fpt_approx(inst: &Instance, p: usize, beta: f64) -> Result<(Solution, PoolPlan)> {
    fpt_approx_with_ceiling(inst, p, beta, DEFAULT_CEILING)
}

pub fn fpt_approx_with_ceiling(
    inst: &Instance,
    p: usize,
    beta: f64,
    ceiling: u128,
) -> Result<(Solution, PoolPlan)> {
    check_beta(beta)?;
    inst.check_frequency_bound(p)?;
    let k = inst.effective_k();
    if k == 0 {
        let plan = PoolPlan {
            pool_size: 0,
            pool: Vec::new(),
            combos: 1,
        };
        return Ok((Solution::empty(inst), plan));
    }
    // p = 0 only happens with every set empty; any pool is then optimal
    let size = pool_size(p.max(1), k, beta)?.min(inst.m() as u64) as usize;
    let pool = largest_sets(inst, size);
    let take = k.min(pool.len());
    let combos = binomial(pool.len() as u64, take as u64).unwrap_or(u128::MAX);

    // enumerate in index order so ties resolve like the exact solver
    let mut members = pool.clone();
    members.sort_unstable();
    let all_masks = inst.masks();
    let masks: Vec<_> = members.iter().map(|&i| all_masks[i].clone()).collect();
    let scan = best_union(&masks, inst.n(), take, ceiling)?;
    let chosen = scan.best.iter().map(|&pos| members[pos]).collect();
    let plan = PoolPlan {
        pool_size: size,
        pool,
        combos,
    };
    Ok((Solution::new(inst, chosen), plan))
}
