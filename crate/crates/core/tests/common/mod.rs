#![allow(dead_code)]

pub mod triangulation_oracle;

use hypercolor::Hypergraph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random simple k-uniform hypergraph with at least one edge.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Hypergraph {
    let all: Vec<Vec<u32>> = {
        let mut out = Vec::new();
        hypercolor::combinatorics::for_each_subset(n, k, |s| {
            out.push(s.iter().map(|&x| x as u32).collect())
        });
        out
    };
    let m = rng.gen_range(1..=all.len());
    let edges: Vec<Vec<u32>> = all.choose_multiple(rng, m).cloned().collect();
    Hypergraph::from_edges_dedup(n, k, &edges).unwrap()
}
