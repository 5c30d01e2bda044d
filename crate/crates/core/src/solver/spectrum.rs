use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hypergraph::{Coloring, Hypergraph};

use super::{chromatic_number, exists_complete, psi_upper_bound, Outcome, SolverConfig};

/// All `t` admitting a complete `t`-coloring, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub chi: usize,
    /// Largest feasible `t`, 0 when nothing is feasible.
    pub psi: usize,
    pub feasible: Vec<usize>,
    /// Values whose search ran out of budget.
    pub unknown: Vec<usize>,
    pub interpolation_holds: bool,
    pub witnesses: BTreeMap<usize, Vec<usize>>,
    /// Instance features outside the usual setting (isolated vertices,
    /// several components, no edges).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

impl SpectrumReport {
    pub fn is_feasible(&self, t: usize) -> bool {
        self.feasible.binary_search(&t).is_ok()
    }

    pub fn is_unknown(&self, t: usize) -> bool {
        self.unknown.binary_search(&t).is_ok()
    }

    pub fn witness(&self, t: usize) -> Option<Coloring> {
        self.witnesses
            .get(&t)
            .map(|c| Coloring::new(c.clone(), t).expect("witness colors below t"))
    }

    /// Feasible values strictly between χ and ψ are missing.
    pub fn gaps(&self) -> Vec<usize> {
        match (self.feasible.first(), self.feasible.last()) {
            (Some(&lo), Some(&hi)) => (lo..=hi).filter(|t| !self.is_feasible(*t)).collect(),
            _ => Vec::new(),
        }
    }
}

fn instance_flags(h: &Hypergraph) -> Vec<String> {
    let mut flags = Vec::new();
    if h.num_edges() == 0 {
        flags.push("edgeless".to_string());
    }
    if h.degrees().contains(&0) && h.num_edges() > 0 {
        flags.push("isolated_vertices".to_string());
    }
    // components of the vertices that lie in some edge
    let n = h.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let nx = p[x];
            p[x] = r;
            x = nx;
        }
        r
    }
    for e in h.edges() {
        for w in e.windows(2) {
            let (a, b) = (
                find(&mut parent, w[0] as usize),
                find(&mut parent, w[1] as usize),
            );
            parent[a] = b;
        }
    }
    let deg = h.degrees();
    let mut roots: Vec<usize> = (0..n)
        .filter(|&v| deg[v] > 0)
        .map(|v| find(&mut parent, v))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    if roots.len() > 1 {
        flags.push("disconnected".to_string());
    }
    flags
}

/// Decides every `t` in `k..=psi_upper_bound(h)`.
pub fn spectrum(h: &Hypergraph, config: &SolverConfig) -> SpectrumReport {
    let chi = chromatic_number(h);
    let mut feasible = Vec::new();
    let mut unknown = Vec::new();
    let mut witnesses = BTreeMap::new();
    for t in h.uniformity()..=psi_upper_bound(h) {
        if t < chi {
            continue;
        }
        match exists_complete(h, t, config).outcome {
            Outcome::Found(c) => {
                feasible.push(t);
                witnesses.insert(t, c.colors().to_vec());
            }
            Outcome::Infeasible => {}
            Outcome::BudgetExhausted => unknown.push(t),
        }
    }
    let contiguous = feasible.windows(2).all(|w| w[1] == w[0] + 1);
    SpectrumReport {
        chi,
        psi: feasible.last().copied().unwrap_or(0),
        interpolation_holds: unknown.is_empty() && contiguous,
        feasible,
        unknown,
        witnesses,
        flags: instance_flags(h),
    }
}
