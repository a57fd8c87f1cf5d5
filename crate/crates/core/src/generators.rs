//! Instance generators: the two tight families for the greedy and pool
//! solvers, seeded random instances with bounded frequencies, and the
//! graph-to-MaxVertexCover adapter.
//!
//! Both tight families index their blocks through colexicographic unranking
//! of combinations, so the layouts are identical on every platform.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{binomial_checked, colex_unrank};
use crate::error::{Error, Result};
use crate::instance::Instance;

/// Largest universe a generator will materialize.
pub const MAX_GENERATED_ELEMENTS: u128 = 50_000_000;

fn element_budget(n: u128) -> Result<usize> {
    if n > MAX_GENERATED_ELEMENTS {
        return Err(Error::param(format!(
            "construction needs {n} elements, above the limit of {MAX_GENERATED_ELEMENTS}"
        )));
    }
    Ok(n as usize)
}

/// Parameters of the family on which greedy is no better than `1 - e^(-pK/m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TightGreedySpec {
    pub m: usize,
    pub k: usize,
    pub p: usize,
}

impl TightGreedySpec {
    pub fn new(m: usize, k: usize, p: usize) -> Result<Self> {
        let spec = TightGreedySpec { m, k, p };
        spec.validate()?;
        Ok(spec)
    }

    /// Picks `p = alpha·m/K`, which must come out integral.
    pub fn from_alpha(alpha: f64, m: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("K must be at least 1"));
        }
        let p = alpha * m as f64 / k as f64;
        if (p - p.round()).abs() > 1e-9 {
            return Err(Error::param(format!(
                "p = alpha*m/K = {p} is not an integer"
            )));
        }
        Self::new(m, k, p.round() as usize)
    }

    pub fn alpha(&self) -> f64 {
        (self.p * self.k) as f64 / self.m as f64
    }

    fn validate(&self) -> Result<()> {
        let TightGreedySpec { m, k, p } = *self;
        if k == 0 || k >= m {
            return Err(Error::param(format!("need 1 <= K < m (got K={k}, m={m})")));
        }
        if p < 2 || p - 1 > m - k {
            return Err(Error::param(format!(
                "need 2 <= p <= m-K+1 (got p={p}, m-K={})",
                m - k
            )));
        }
        if p * k <= m {
            return Err(Error::param(format!(
                "need pK > m (got pK={}, m={m})",
                p * k
            )));
        }
        let total = self.block_size()?.checked_mul(k as u128);
        element_budget(total.ok_or_else(|| Error::Overflow("universe size".into()))?)?;
        Ok(())
    }

    /// Elements per block `N_i`: `C(m-K, p-1)`.
    pub fn block_size(&self) -> Result<u128> {
        binomial_checked((self.m - self.k) as u64, (self.p - 1) as u64)
    }

    /// Number of sets in the first subfamily; they come first in the output.
    pub fn first_family_len(&self) -> usize {
        self.m - self.k
    }
}

/// Blocks `N_1..N_K` of size `C(m-K, p-1)`. The first `m-K` sets put each
/// element of every block into the `p-1` sets named by its unranked
/// combination; the last `K` sets are the blocks themselves.
pub fn gen_tight_greedy(spec: &TightGreedySpec) -> Result<Instance> {
    spec.validate()?;
    let block = spec.block_size()? as usize;
    let first = spec.first_family_len();
    let mut sets = vec![Vec::new(); spec.m];
    for b in 0..spec.k {
        for rank in 0..block {
            let e = b * block + rank;
            for j in colex_unrank(rank as u128, spec.p - 1) {
                sets[j].push(e);
            }
            sets[first + b].push(e);
        }
    }
    Instance::new(block * spec.k, sets, spec.k)
}

/// Parameters of the family on which the pool solver is held near
/// `3/4 + 3β/4`. Requires `1/(1-β)` integral and `p | K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightFptSpec {
    pub p: usize,
    pub k: usize,
    pub beta: f64,
}

impl TightFptSpec {
    pub fn new(p: usize, k: usize, beta: f64) -> Result<Self> {
        let spec = TightFptSpec { p, k, beta };
        spec.pool_value()?;
        Ok(spec)
    }

    /// `x = 2pK/(1-β) + K`, checked integral and divisible by `p`.
    pub fn pool_value(&self) -> Result<usize> {
        let TightFptSpec { p, k, beta } = *self;
        if p == 0 || k == 0 {
            return Err(Error::param("p and K must be at least 1"));
        }
        if !(beta > 0.0 && beta < 1.0) {
            return Err(Error::param(format!("beta must lie in (0, 1), got {beta}")));
        }
        let inv = 1.0 / (1.0 - beta);
        if (inv - inv.round()).abs() > 1e-9 {
            return Err(Error::param(format!(
                "1/(1-beta) = {inv} is not an integer"
            )));
        }
        if k % p != 0 {
            return Err(Error::param(format!("p={p} must divide K={k}")));
        }
        let x = 2 * p * k * inv.round() as usize + k;
        if !x.is_multiple_of(p) {
            return Err(Error::param(format!("x={x} is not divisible by p={p}")));
        }
        Ok(x)
    }

    /// `|N_1| = C(x, p)`
    pub fn first_block_size(&self) -> Result<u128> {
        binomial_checked(self.pool_value()? as u64, self.p as u64)
    }

    /// Size of every set in the family: `C(x-1, p-1) = C(x,p)·p/x`.
    pub fn set_size(&self) -> Result<u128> {
        binomial_checked(self.pool_value()? as u64 - 1, self.p as u64 - 1)
    }
}

/// `x` sets over `N_1` (each element in the `p` sets named by its unranked
/// combination of `0..x`), then `K` disjoint sets partitioning `N_2`.
pub fn gen_tight_fpt(spec: &TightFptSpec) -> Result<Instance> {
    let x = spec.pool_value()?;
    let first = spec.first_block_size()?;
    let set_size = spec.set_size()?;
    let second = set_size
        .checked_mul(spec.k as u128)
        .ok_or_else(|| Error::Overflow("second block size".into()))?;
    let total = element_budget(first + second)?;
    let (first, set_size) = (first as usize, set_size as usize);

    let mut sets = vec![Vec::new(); x + spec.k];
    for rank in 0..first {
        for j in colex_unrank(rank as u128, spec.p) {
            sets[j].push(rank);
        }
    }
    for b in 0..spec.k {
        let start = first + b * set_size;
        sets[x + b].extend(start..start + set_size);
    }
    Instance::new(total, sets, spec.k)
}

/// Random instance: each element joins a uniformly random set of distinct
/// sets whose size is uniform in `[1, p_max]`.
pub fn gen_random(n: usize, m: usize, k: usize, p_max: usize, seed: u64) -> Result<Instance> {
    gen_random_frequencies(n, m, k, 1, p_max, seed)
}

/// As [`gen_random`], with frequencies uniform in `[p_min, p_max]`.
pub fn gen_random_frequencies(
    n: usize,
    m: usize,
    k: usize,
    p_min: usize,
    p_max: usize,
    seed: u64,
) -> Result<Instance> {
    if n == 0 || m == 0 {
        return Err(Error::param("n and m must be at least 1"));
    }
    if p_min == 0 || p_min > p_max || p_max > m {
        return Err(Error::param(format!(
            "need 1 <= p_min <= p_max <= m (got {p_min}, {p_max}, m={m})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = vec![Vec::new(); m];
    for e in 0..n {
        let size = rng.gen_range(p_min..=p_max);
        for j in sample(&mut rng, m, size) {
            sets[j].push(e);
        }
    }
    Instance::new(n, sets, k)
}

/// Simple undirected graph with a vertex budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    k: usize,
}

impl Graph {
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>, k: usize) -> Self {
        Graph {
            num_vertices,
            edges,
            k,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Edges become elements (in list order), vertices become sets of
    /// incident edges.
    pub fn to_maxvertexcover(&self) -> Result<Instance> {
        let mut seen = HashSet::with_capacity(self.edges.len());
        let mut sets = vec![Vec::new(); self.num_vertices];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if u >= self.num_vertices || v >= self.num_vertices {
                return Err(Error::InvalidGraph(format!(
                    "edge {} has an endpoint outside 1..={}",
                    id + 1,
                    self.num_vertices
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "self-loop at vertex {}",
                    u + 1
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {{{}, {}}}",
                    u + 1,
                    v + 1
                )));
            }
            sets[u].push(id);
            sets[v].push(id);
        }
        Instance::new(self.edges.len(), sets, self.k)
    }
}

pub fn graph_to_maxvertexcover(graph: &Graph) -> Result<Instance> {
    graph.to_maxvertexcover()
}
