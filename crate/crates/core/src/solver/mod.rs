//! Exact solver for proper and complete colorings.

mod brute;
mod search;
mod spectrum;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::combinatorics::binomial;
use crate::hypergraph::{Coloring, Hypergraph};

pub use brute::{
    brute_force_spectrum, brute_force_spectrum_with_cap, OracleRefusal, DEFAULT_ORACLE_CAP,
};
pub use spectrum::{spectrum, SpectrumReport};

use search::{Mode, Problem};

/// Limit on search-tree nodes (one node per tentative vertex assignment).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Budget(Option<u64>);

impl Budget {
    pub const fn unlimited() -> Self {
        Budget(None)
    }

    pub const fn nodes(n: u64) -> Self {
        Budget(Some(n))
    }

    pub fn limit(&self) -> Option<u64> {
        self.0
    }

    #[inline]
    pub fn exceeded(&self, used: u64) -> bool {
        self.0.is_some_and(|b| used > b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub budget: Budget,
    /// Only perturbs tie-breaking in the vertex order; 0 keeps id order.
    pub seed: u64,
    pub workers: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: Budget::unlimited(),
            seed: 0,
            workers: 1,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: Budget) -> Self {
        SolverConfig {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Coloring),
    /// The search space was exhausted without a witness.
    Infeasible,
    BudgetExhausted,
}

impl Outcome {
    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Outcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Outcome::Infeasible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("node budget exhausted while deciding t = {t}")]
    BudgetExhausted { t: usize },
}

/// Searches for a complete `t`-coloring.
pub fn exists_complete(h: &Hypergraph, t: usize, config: &SolverConfig) -> SearchResult {
    let p = Problem::new(h, t, Mode::Complete, config.seed);
    search::solve(&p, config)
}

/// Searches for a proper coloring with at most `t` colors.
pub fn proper_coloring(h: &Hypergraph, t: usize, config: &SolverConfig) -> SearchResult {
    let p = Problem::new(h, t, Mode::Proper, config.seed);
    search::solve(&p, config)
}

/// Size of a greedily grown clique of the 2-section; a lower bound on χ.
pub fn clique_lower_bound(h: &Hypergraph) -> usize {
    let shadow = h.shadow();
    let n = h.num_vertices();
    let deg: Vec<usize> = shadow.iter().map(BitSet::count).collect();
    let mut best = usize::from(n > 0);
    for start in 0..n {
        let mut cand = shadow[start].clone();
        let mut size = 1;
        while let Some(v) = cand.iter().max_by_key(|&v| (deg[v], std::cmp::Reverse(v))) {
            size += 1;
            cand.intersect_with(&shadow[v]);
        }
        best = best.max(size);
    }
    best
}

/// Number of colors used by first-fit in descending degree order.
pub fn greedy_upper_bound(h: &Hypergraph) -> usize {
    let shadow = h.shadow();
    let order = search::vertex_order(h, 0);
    let mut color = vec![usize::MAX; h.num_vertices()];
    let mut used = 0;
    for v in order {
        let c = (0..)
            .find(|&c| shadow[v].iter().all(|u| color[u] != c))
            .expect("some color is free");
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Least number of colors in a proper coloring; 1 for edgeless inputs.
pub fn chromatic_number(h: &Hypergraph) -> usize {
    if h.num_edges() == 0 {
        return 1;
    }
    let lo = clique_lower_bound(h).max(h.uniformity());
    let hi = greedy_upper_bound(h);
    (lo..hi)
        .find(|&t| {
            proper_coloring(h, t, &SolverConfig::default())
                .outcome
                .is_found()
        })
        .unwrap_or(hi)
}

/// Largest `t` with `C(t, k) <= |E|`, capped by the vertex count; 0 when
/// there are no edges.
pub fn psi_upper_bound(h: &Hypergraph) -> usize {
    let (k, m, n) = (h.uniformity(), h.num_edges() as u64, h.num_vertices());
    if m == 0 {
        return 0;
    }
    let mut t = k;
    while t < n && binomial(t + 1, k) <= m {
        t += 1;
    }
    t.min(n)
}

/// Largest `t` admitting a complete `t`-coloring, or 0 if there is none.
pub fn achromatic_number(h: &Hypergraph, config: &SolverConfig) -> Result<usize, SolverError> {
    let k = h.uniformity();
    for t in (k..=psi_upper_bound(h)).rev() {
        match exists_complete(h, t, config).outcome {
            Outcome::Found(_) => return Ok(t),
            Outcome::Infeasible => {}
            Outcome::BudgetExhausted => return Err(SolverError::BudgetExhausted { t }),
        }
    }
    Ok(0)
}
