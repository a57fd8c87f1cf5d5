//! Exact/greedy hybrids for unrestricted MaxCover, their closed-form
//! guarantees, the frequency-ratio dispatcher, and guarantee-curve sampling.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::exact::{best_union, brute_force_with_ceiling, check_ceiling, scan_subsets};
use crate::greedy::{extend_greedily, greedy_cover};
use crate::instance::{Instance, Solution};

#[derive(Debug, Clone, PartialEq)]
pub struct HybridReport {
    pub x_split: usize,
    pub solution: Solution,
    pub guarantee: f64,
    pub combos_scanned: u128,
}

/// Which closed-form guarantee to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HybridMethod {
    /// Greedy for X sets, then exact: `1 - (X/K) e^(-X/K)`.
    GreedyThenExact,
    /// Exact for K-X sets, then greedy: `1 - (X/K) e^(-1)`.
    ExactThenGreedy,
    /// Exact-then-greedy with a 3/4 vertex-cover completion: `1 - X/(4K)`.
    ExactThenGreedyVertexCover,
    /// Single exact partial solution completed once: `X/K + β_a (1 - X/K)²`.
    CrocePaschos,
}

impl HybridMethod {
    /// Guarantee as a function of the fraction `X/K`.
    pub fn ratio_at(self, fraction: f64, beta_a: f64) -> f64 {
        match self {
            HybridMethod::GreedyThenExact => 1.0 - fraction * (-fraction).exp(),
            HybridMethod::ExactThenGreedy => 1.0 - fraction * (-1.0f64).exp(),
            HybridMethod::ExactThenGreedyVertexCover => 1.0 - fraction / 4.0,
            HybridMethod::CrocePaschos => fraction + beta_a * (1.0 - fraction).powi(2),
        }
    }
}

pub fn hybrid_ratio(method: HybridMethod, x: usize, k: usize, beta_a: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::param("hybrid ratio needs K >= 1"));
    }
    if x > k {
        return Err(Error::param(format!("split X={x} exceeds K={k}")));
    }
    if method == HybridMethod::CrocePaschos && !(beta_a > 0.0 && beta_a <= 1.0) {
        return Err(Error::param(format!(
            "beta_a must lie in (0, 1], got {beta_a}"
        )));
    }
    Ok(method.ratio_at(x as f64 / k as f64, beta_a))
}

fn check_split(inst: &Instance, x: usize) -> Result<()> {
    if x > inst.k() {
        return Err(Error::param(format!("split X={x} exceeds K={}", inst.k())));
    }
    Ok(())
}

fn guarantee_for(method: HybridMethod, inst: &Instance, x: usize) -> f64 {
    if inst.k() == 0 {
        1.0
    } else {
        method.ratio_at(x as f64 / inst.k() as f64, 1.0)
    }
}

/// X greedy picks, then an exact search over `(K-X)`-subsets of the unpicked
/// sets, scored on the elements the greedy phase left uncovered.
pub fn greedy_then_exact(inst: &Instance, x: usize, ceiling: u128) -> Result<HybridReport> {
    check_split(inst, x)?;
    let k = inst.effective_k();
    let greedy_steps = x.min(k);
    let exact_size = k - greedy_steps;
    let remaining = inst.m() - greedy_steps;
    check_ceiling(remaining, exact_size, ceiling)?;

    let masks = inst.masks();
    let mut covered = Bitset::new(inst.n());
    let mut taken = vec![false; inst.m()];
    let picks = extend_greedily(&masks, &mut covered, &mut taken, greedy_steps);

    let rest: Vec<usize> = (0..inst.m()).filter(|&i| !taken[i]).collect();
    let restricted: Vec<Bitset> = rest
        .iter()
        .map(|&i| {
            let mut m = masks[i].clone();
            m.difference_with(&covered);
            m
        })
        .collect();
    let scan = best_union(&restricted, inst.n(), exact_size, ceiling)?;

    let mut chosen: Vec<usize> = picks.iter().map(|&(i, _)| i).collect();
    chosen.extend(scan.best.iter().map(|&pos| rest[pos]));
    Ok(HybridReport {
        x_split: x,
        solution: Solution::new(inst, chosen),
        guarantee: guarantee_for(HybridMethod::GreedyThenExact, inst, x),
        combos_scanned: scan.scanned,
    })
}

/// Every `(K-X)`-subset of the family, each completed with X greedy picks;
/// the best completion wins, earliest prefix on ties.
pub fn exact_then_greedy(inst: &Instance, x: usize, ceiling: u128) -> Result<HybridReport> {
    check_split(inst, x)?;
    let k = inst.effective_k();
    let prefix_size = k.saturating_sub(x);
    let greedy_steps = k - prefix_size;
    check_ceiling(inst.m(), prefix_size, ceiling)?;

    let masks = inst.masks();
    let complete = |prefix: &[usize], union: &Bitset| {
        let mut covered = union.clone();
        let mut taken = vec![false; masks.len()];
        for &i in prefix {
            taken[i] = true;
        }
        let picks = extend_greedily(&masks, &mut covered, &mut taken, greedy_steps);
        (covered, picks)
    };
    let scan = scan_subsets(&masks, inst.n(), prefix_size, |prefix, union| {
        complete(prefix, union).0.count()
    });

    let prefix_union = inst.union_of(&scan.best);
    let (_, picks) = complete(&scan.best, &prefix_union);
    let mut chosen = scan.best.clone();
    chosen.extend(picks.iter().map(|&(i, _)| i));
    Ok(HybridReport {
        x_split: x,
        solution: Solution::new(inst, chosen),
        guarantee: guarantee_for(HybridMethod::ExactThenGreedy, inst, x),
        combos_scanned: scan.scanned,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DispatchBranch {
    Greedy,
    Exact,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispatchOutcome {
    pub solution: Solution,
    pub branch: DispatchBranch,
    /// `-(m/p_min) ln(1-β)`; greedy runs when `K` exceeds it.
    pub threshold: f64,
}

/// For instances with `p_min/m >= alpha`: greedy when the budget is large
/// enough for its frequency guarantee to reach `beta`, exhaustive otherwise.
pub fn ptas_dispatch(
    inst: &Instance,
    alpha: f64,
    beta: f64,
    ceiling: u128,
) -> Result<DispatchOutcome> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::param(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::param(format!("beta must lie in (0, 1), got {beta}")));
    }
    let m = inst.m();
    let p_min = inst.frequency_profile().p_min;
    let ratio = if m == 0 { 0.0 } else { p_min as f64 / m as f64 };
    if ratio < alpha {
        return Err(Error::AlphaViolated { ratio, alpha });
    }
    let threshold = -(m as f64 / p_min as f64) * (1.0 - beta).ln();
    if inst.k() as f64 > threshold {
        Ok(DispatchOutcome {
            solution: greedy_cover(inst).0,
            branch: DispatchBranch::Greedy,
            threshold,
        })
    } else {
        Ok(DispatchOutcome {
            solution: brute_force_with_ceiling(inst, ceiling)?.solution,
            branch: DispatchBranch::Exact,
            threshold,
        })
    }
}

/// Completion rule used for the exact-then-greedy curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alg5Form {
    MaxCover,
    VertexCover,
}

/// One sample of the guarantee comparison: `t = (K-X)/K` is the fraction
/// of the budget spent on exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    pub t: f64,
    pub ratio_alg5: f64,
    pub ratio_cp: f64,
}

/// Samples both guarantees at `grid` evenly spaced values of `t` in [0, 1].
///
/// Both curves use the exhaustive fraction `t` on the x-axis: the
/// exact-then-greedy curve is evaluated at `X/K = 1 - t`, and the
/// Croce–Paschos form takes the exhaustively solved share directly.
pub fn curve_points(beta_a: f64, grid: usize, form: Alg5Form) -> Result<Vec<RatioPoint>> {
    if grid < 2 {
        return Err(Error::param(format!(
            "curve grid needs at least 2 points, got {grid}"
        )));
    }
    if !(beta_a > 0.0 && beta_a <= 1.0) {
        return Err(Error::param(format!(
            "beta_a must lie in (0, 1], got {beta_a}"
        )));
    }
    let alg5 = match form {
        Alg5Form::MaxCover => HybridMethod::ExactThenGreedy,
        Alg5Form::VertexCover => HybridMethod::ExactThenGreedyVertexCover,
    };
    Ok((0..grid)
        .map(|i| {
            let t = i as f64 / (grid - 1) as f64;
            RatioPoint {
                t,
                ratio_alg5: alg5.ratio_at(1.0 - t, beta_a),
                ratio_cp: HybridMethod::CrocePaschos.ratio_at(t, beta_a),
            }
        })
        .collect())
}

/// CSV with header `t,alg5,croce_paschos` and `\n` line endings.
pub fn curves_csv(points: &[RatioPoint]) -> String {
    let mut out = String::from("t,alg5,croce_paschos\n");
    for p in points {
        out.push_str(&format!("{},{},{}\n", p.t, p.ratio_alg5, p.ratio_cp));
    }
    out
}
