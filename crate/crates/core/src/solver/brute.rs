//! Exhaustive enumeration of all `t^n` colorings; a test oracle.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::combinatorics::SubsetRanker;
use crate::hypergraph::Hypergraph;

pub const DEFAULT_ORACLE_CAP: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumeration needs {needed} assignments, cap is {cap}")]
pub struct OracleRefusal {
    pub needed: u128,
    pub cap: u64,
}

pub fn brute_force_spectrum(
    h: &Hypergraph,
    t_max: usize,
) -> Result<BTreeSet<usize>, OracleRefusal> {
    brute_force_spectrum_with_cap(h, t_max, DEFAULT_ORACLE_CAP)
}

/// Feasible `t` in `1..=t_max`, found by trying every assignment.
pub fn brute_force_spectrum_with_cap(
    h: &Hypergraph,
    t_max: usize,
    cap: u64,
) -> Result<BTreeSet<usize>, OracleRefusal> {
    let n = h.num_vertices() as u32;
    let needed: u128 = (1..=t_max as u128)
        .map(|t| t.checked_pow(n).unwrap_or(u128::MAX))
        .fold(0u128, |a, b| a.saturating_add(b));
    if needed > cap as u128 {
        return Err(OracleRefusal { needed, cap });
    }
    Ok((1..=t_max).filter(|&t| any_complete(h, t)).collect())
}

fn any_complete(h: &Hypergraph, t: usize) -> bool {
    let (n, k) = (h.num_vertices(), h.uniformity());
    if h.num_edges() == 0 || t < k {
        return false;
    }
    let ranker = SubsetRanker::new(t, k);
    let subsets = ranker.count() as usize;
    let mut seen = vec![0u32; subsets];
    let mut stamp = 0u32;
    let mut colors = vec![0usize; n];
    let mut buf = vec![0usize; k];
    loop {
        stamp += 1;
        let mut hit = 0;
        let mut proper = true;
        for e in h.edges() {
            for (slot, &v) in buf.iter_mut().zip(e) {
                *slot = colors[v as usize];
            }
            buf.sort_unstable();
            if buf.windows(2).any(|w| w[0] == w[1]) {
                proper = false;
                break;
            }
            let r = ranker.rank(&buf);
            if seen[r] != stamp {
                seen[r] = stamp;
                hit += 1;
            }
        }
        if proper && hit == subsets {
            return true;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < t {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}
