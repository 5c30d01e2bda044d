use std::collections::BTreeMap;

use super::canon::{canonical_embedding, PlanarCode};
use super::{stacked, tetrahedron, Embedding};
use crate::error::EmbeddingError;

pub const MIN_VERTICES: usize = 4;
pub const MAX_VERTICES: usize = 13;

fn check_scale(n: usize) -> Result<(), EmbeddingError> {
    if (MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(EmbeddingError::ScaleRefused(n))
    }
}

/// All triangulations of the sphere with `n` vertices up to isomorphism
/// (reflections identified), as canonical representatives sorted by code.
///
/// Explores the flip graph, which is connected for each fixed `n`.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Embedding>, EmbeddingError> {
    Ok(enumerate_with_codes(n, 1)?.into_values().collect())
}

fn flip_neighbors(e: &Embedding) -> Vec<(PlanarCode, Embedding)> {
    e.edges()
        .into_iter()
        .filter_map(|(u, v)| e.flip(u, v).ok())
        .map(|f| canonical_embedding(&f))
        .collect()
}

/// Flip-graph BFS. Each frontier is split across `workers` threads; merging
/// happens in canonical order, so the result does not depend on `workers`.
pub fn enumerate_with_codes(
    n: usize,
    workers: usize,
) -> Result<BTreeMap<PlanarCode, Embedding>, EmbeddingError> {
    check_scale(n)?;
    let workers = workers.max(1);
    let mut seen = BTreeMap::new();
    let (code, rep) = canonical_embedding(&stacked(n));
    seen.insert(code.clone(), rep);
    let mut frontier = vec![code];
    while !frontier.is_empty() {
        let batch: Vec<&Embedding> = frontier.iter().map(|c| &seen[c]).collect();
        let expanded: Vec<Vec<(PlanarCode, Embedding)>> = if workers == 1
            || batch.len() < 2 * workers
        {
            batch.iter().map(|e| flip_neighbors(e)).collect()
        } else {
            let chunk = batch.len().div_ceil(workers);
            std::thread::scope(|s| {
                let handles: Vec<_> = batch
                    .chunks(chunk)
                    .map(|part| {
                        s.spawn(move || part.iter().map(|e| flip_neighbors(e)).collect::<Vec<_>>())
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("enumeration worker panicked"))
                    .collect()
            })
        };
        let mut next = Vec::new();
        for (c, rep) in expanded.into_iter().flatten() {
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), rep);
                next.push(c);
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    Ok(seen)
}

/// Same classes generated without flips: every triangulation on `n >= 5`
/// vertices arises from one on `n - 1` vertices by splitting a vertex.
pub fn enumerate_by_vertex_splitting(n: usize) -> Result<Vec<Embedding>, EmbeddingError> {
    check_scale(n)?;
    let mut level: BTreeMap<PlanarCode, Embedding> = BTreeMap::new();
    let (c, rep) = canonical_embedding(&tetrahedron());
    level.insert(c, rep);
    for _ in MIN_VERTICES..n {
        let mut next = BTreeMap::new();
        for e in level.values() {
            for v in 0..e.num_vertices() as u32 {
                let d = e.degree(v as usize);
                for i in 0..d {
                    for j in 0..d {
                        if i == j {
                            continue;
                        }
                        let s = e.vertex_split(v, i, j);
                        if s.degrees().iter().any(|&x| x < 3) {
                            continue;
                        }
                        let (c, rep) = canonical_embedding(&s);
                        next.entry(c).or_insert(rep);
                    }
                }
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}
