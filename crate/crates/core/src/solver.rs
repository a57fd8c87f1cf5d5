//! Uniform front end over every solver, producing a serializable report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{brute_force_with_ceiling, DEFAULT_CEILING};
use crate::fpt::fpt_approx_with_ceiling;
use crate::greedy::{greedy_cover, greedy_guarantee};
use crate::hybrid::{exact_then_greedy, greedy_then_exact, ptas_dispatch, DispatchBranch};
use crate::instance::{Instance, Solution};
use crate::minnoncovered::randomized_min_noncovered;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Exact,
    Greedy,
    Fpt,
    MinNonCovered,
    GreedyExact,
    ExactGreedy,
    Ptas,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::Exact,
        Algorithm::Greedy,
        Algorithm::Fpt,
        Algorithm::MinNonCovered,
        Algorithm::GreedyExact,
        Algorithm::ExactGreedy,
        Algorithm::Ptas,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Fpt => "fpt",
            Algorithm::MinNonCovered => "minnc",
            Algorithm::GreedyExact => "greedy-exact",
            Algorithm::ExactGreedy => "exact-greedy",
            Algorithm::Ptas => "ptas",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| Error::param(format!("unknown algorithm '{s}'")))
    }
}

/// Solver parameters. `None` fields fall back to per-algorithm defaults:
/// beta 0.5 for `fpt`/`ptas` and 2 for `minnc`, the instance's maximum
/// frequency for the bound, `K/2` for the split, and the instance's own
/// `p_min/m` for alpha.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub beta: Option<f64>,
    pub epsilon: f64,
    pub x_split: Option<usize>,
    pub p_bound: Option<usize>,
    pub alpha: Option<f64>,
    pub seed: u64,
    pub ceiling: u128,
    pub with_opt: bool,
    pub timing: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            beta: None,
            epsilon: 0.1,
            x_split: None,
            p_bound: None,
            alpha: None,
            seed: 0,
            ceiling: DEFAULT_CEILING,
            with_opt: false,
            timing: true,
        }
    }
}

/// Per-algorithm diagnostics; every key is always present.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ReportDetails {
    pub beta: Option<f64>,
    pub epsilon: Option<f64>,
    pub p_bound: Option<usize>,
    pub pool_size: Option<usize>,
    pub repetitions: Option<u64>,
    pub seed: Option<u64>,
    pub x_split: Option<usize>,
    pub branch: Option<&'static str>,
    pub threshold: Option<f64>,
    pub subsets_scanned: Option<u128>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolverReport {
    pub algorithm: &'static str,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// 1-based set indices.
    pub chosen: Vec<usize>,
    pub covered: usize,
    pub uncovered: usize,
    /// A-priori lower bound on `covered / OPT`, where one exists.
    pub guarantee: Option<f64>,
    pub opt: Option<usize>,
    pub wall_time_ms: Option<f64>,
    pub details: ReportDetails,
}

pub fn solve(inst: &Instance, alg: Algorithm, cfg: &SolverConfig) -> Result<SolverReport> {
    let start = Instant::now();
    let mut details = ReportDetails::default();
    let profile = inst.frequency_profile();
    let k = inst.effective_k();

    let (solution, guarantee): (Solution, Option<f64>) = match alg {
        Algorithm::Exact => {
            let r = brute_force_with_ceiling(inst, cfg.ceiling)?;
            details.subsets_scanned = Some(r.subsets_scanned);
            (r.solution, Some(1.0))
        }
        Algorithm::Greedy => {
            let (sol, _) = greedy_cover(inst);
            let g = greedy_guarantee(profile.p_min.max(1), k, inst.m()).ok();
            (sol, g.or(Some(1.0)))
        }
        Algorithm::Fpt => {
            let beta = cfg.beta.unwrap_or(0.5);
            let p = cfg.p_bound.unwrap_or(profile.p_max);
            let (sol, plan) = fpt_approx_with_ceiling(inst, p, beta, cfg.ceiling)?;
            details.beta = Some(beta);
            details.p_bound = Some(p);
            details.pool_size = Some(plan.pool_size);
            details.subsets_scanned = Some(plan.combos);
            (sol, Some(beta))
        }
        Algorithm::MinNonCovered => {
            let beta = cfg.beta.unwrap_or(2.0);
            let p = cfg.p_bound.unwrap_or(profile.p_max);
            let run = randomized_min_noncovered(inst, p, beta, cfg.epsilon, cfg.seed)?;
            details.beta = Some(beta);
            details.epsilon = Some(cfg.epsilon);
            details.p_bound = Some(p);
            details.repetitions = Some(run.repetitions);
            details.seed = Some(cfg.seed);
            (run.best, None)
        }
        Algorithm::GreedyExact | Algorithm::ExactGreedy => {
            let x = cfg.x_split.unwrap_or(inst.k() / 2);
            let r = if alg == Algorithm::GreedyExact {
                greedy_then_exact(inst, x, cfg.ceiling)?
            } else {
                exact_then_greedy(inst, x, cfg.ceiling)?
            };
            details.x_split = Some(x);
            details.subsets_scanned = Some(r.combos_scanned);
            (r.solution, Some(r.guarantee))
        }
        Algorithm::Ptas => {
            let beta = cfg.beta.unwrap_or(0.5);
            let alpha = match cfg.alpha {
                Some(a) => a,
                None if inst.m() > 0 => profile.p_min as f64 / inst.m() as f64,
                None => 0.0,
            };
            let out = ptas_dispatch(inst, alpha, beta, cfg.ceiling)?;
            details.beta = Some(beta);
            details.branch = Some(match out.branch {
                DispatchBranch::Greedy => "greedy",
                DispatchBranch::Exact => "exact",
            });
            details.threshold = Some(out.threshold);
            (out.solution, Some(beta))
        }
    };

    let opt = if !cfg.with_opt {
        None
    } else if alg == Algorithm::Exact {
        Some(solution.covered)
    } else {
        match brute_force_with_ceiling(inst, cfg.ceiling) {
            Ok(r) => Some(r.opt),
            Err(Error::CeilingExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    };

    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    Ok(SolverReport {
        algorithm: alg.id(),
        n: inst.n(),
        m: inst.m(),
        k: inst.k(),
        chosen: solution.chosen_one_based(),
        covered: solution.covered,
        uncovered: solution.uncovered,
        guarantee,
        opt,
        wall_time_ms: cfg.timing.then_some(elapsed),
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Instance {
        Instance::new(4, vec![vec![0, 1, 2], vec![2, 3], vec![3]], 2).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.id().parse::<Algorithm>().unwrap(), a);
        }
        assert!("bogus".parse::<Algorithm>().is_err());
    }

    #[test]
    fn every_algorithm_solves_the_sample() {
        let cfg = SolverConfig {
            with_opt: true,
            ..SolverConfig::default()
        };
        for a in Algorithm::ALL {
            let r = solve(&sample(), a, &cfg).unwrap();
            assert_eq!(r.covered + r.uncovered, 4);
            assert_eq!(r.opt, Some(4));
            assert!(r.chosen.iter().all(|&i| (1..=3).contains(&i)));
        }
    }

    #[test]
    fn greedy_report_is_one_based() {
        let r = solve(&sample(), Algorithm::Greedy, &SolverConfig::default()).unwrap();
        assert_eq!(r.chosen, vec![1, 2]);
        assert_eq!(r.covered, 4);
        assert_eq!(r.opt, None);
    }

    #[test]
    fn oracle_above_ceiling_leaves_opt_empty() {
        let cfg = SolverConfig {
            with_opt: true,
            ceiling: 2,
            ..SolverConfig::default()
        };
        let r = solve(&sample(), Algorithm::Greedy, &cfg).unwrap();
        assert_eq!(r.opt, None);
        assert!(matches!(
            solve(&sample(), Algorithm::Exact, &cfg),
            Err(Error::CeilingExceeded { .. })
        ));
    }
}
