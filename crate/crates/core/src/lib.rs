//! Exact, greedy, pool-based, randomized and hybrid solvers for MaxCover and
//! MinNonCovered on set families with bounded element frequencies.
//!
//! Elements and sets are 0-based in the API and 1-based in the text formats
//! handled by [`io`].

pub mod bitset;
pub mod combinatorics;
pub mod election;
pub mod error;
pub mod exact;
pub mod fpt;
pub mod generators;
pub mod greedy;
pub mod hybrid;
pub mod instance;
pub mod io;
pub mod minnoncovered;
pub mod solver;

pub use election::ApprovalElection;
pub use error::{Error, Result};
pub use exact::{brute_force, brute_force_with_ceiling, ExactResult, DEFAULT_CEILING};
pub use fpt::{fpt_approx, fpt_approx_with_ceiling, pool_size, PoolPlan};
pub use generators::{
    gen_random, gen_random_frequencies, gen_tight_fpt, gen_tight_greedy, graph_to_maxvertexcover,
    Graph, TightFptSpec, TightGreedySpec,
};
pub use greedy::{greedy_cover, greedy_guarantee, uncovered_bound, GreedyTrace};
pub use hybrid::{
    curve_points, curves_csv, exact_then_greedy, greedy_then_exact, hybrid_ratio, ptas_dispatch,
    Alg5Form, DispatchBranch, DispatchOutcome, HybridMethod, HybridReport, RatioPoint,
};
pub use instance::{FrequencyProfile, Instance, Solution};
pub use minnoncovered::{randomized_min_noncovered, repetition_count, RandomizedRun};
pub use solver::{solve, Algorithm, ReportDetails, SolverConfig, SolverReport};
