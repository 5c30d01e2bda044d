//! Uniform hypergraphs, colorings and the predicates defined on them.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::combinatorics::{binomial, SubsetRanker};
use crate::error::HypergraphError;

/// A simple k-uniform hypergraph on vertices `0..n`.
///
/// Edges are kept sorted (each edge increasing, the edge list
/// lexicographic) and stored flat with stride `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    flat: Vec<u32>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting duplicate edges.
    pub fn new<I, E>(n: usize, k: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        Self::build(n, k, edges, false)
    }

    /// Builds a hypergraph, silently merging duplicate edges.
    pub fn from_edges_dedup<I, E>(n: usize, k: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        Self::build(n, k, edges, true)
    }

    fn build<I, E>(n: usize, k: usize, edges: I, dedup: bool) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if k < 2 {
            return Err(HypergraphError::InvalidUniformity(k));
        }
        let mut list: Vec<Vec<u32>> = Vec::new();
        for e in edges {
            let mut e = e.as_ref().to_vec();
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex(e));
            }
            if e.len() != k {
                let found = e.len();
                return Err(HypergraphError::NonUniform {
                    edge: e,
                    expected: k,
                    found,
                });
            }
            list.push(e);
        }
        list.sort_unstable();
        if dedup {
            list.dedup();
        } else if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph {
            n,
            k,
            flat: list.concat(),
        })
    }

    /// Wraps an edge list that is already canonical (each edge strictly
    /// increasing, edges strictly lexicographically increasing).
    pub(crate) fn from_sorted_flat(n: usize, k: usize, flat: Vec<u32>) -> Self {
        debug_assert!(k >= 2 && flat.len().is_multiple_of(k));
        debug_assert!(flat
            .chunks_exact(k)
            .all(|e| e.windows(2).all(|w| w[0] < w[1])));
        debug_assert!(flat
            .chunks_exact(k)
            .zip(flat.chunks_exact(k).skip(1))
            .all(|(a, b)| a < b));
        debug_assert!(flat.iter().all(|&v| (v as usize) < n));
        Hypergraph { n, k, flat }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn num_edges(&self) -> usize {
        self.flat.len() / self.k
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.flat[i * self.k..(i + 1) * self.k]
    }

    pub fn edges(&self) -> std::slice::ChunksExact<'_, u32> {
        self.flat.chunks_exact(self.k)
    }

    pub fn contains_edge(&self, edge: &[u32]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        let m = self.num_edges();
        let (mut lo, mut hi) = (0, m);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(&e[..]) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &v in &self.flat {
            d[v as usize] += 1;
        }
        d
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn incidence_lists(&self) -> Vec<Vec<u32>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v as usize].push(i as u32);
            }
        }
        inc
    }

    /// Adjacency of the 2-section: `u ~ v` iff some edge contains both.
    pub fn shadow(&self) -> Vec<BitSet> {
        let mut rows = vec![BitSet::new(self.n); self.n];
        for e in self.edges() {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    rows[u as usize].insert(v as usize);
                    rows[v as usize].insert(u as usize);
                }
            }
        }
        rows
    }

    /// Applies a vertex relabeling `perm[old] = new`.
    pub fn relabel(&self, perm: &[u32]) -> Hypergraph {
        assert_eq!(perm.len(), self.n);
        Hypergraph::from_edges_dedup(
            self.n,
            self.k,
            self.edges()
                .map(|e| e.iter().map(|&v| perm[v as usize]).collect::<Vec<_>>()),
        )
        .expect("relabeling preserves validity")
    }

    /// Sub-hypergraph on the same vertex set keeping the selected edges.
    pub fn with_edges(&self, keep: impl Fn(usize, &[u32]) -> bool) -> Hypergraph {
        let flat = self
            .edges()
            .enumerate()
            .filter(|(i, e)| keep(*i, e))
            .flat_map(|(_, e)| e.iter().copied())
            .collect();
        Hypergraph::from_sorted_flat(self.n, self.k, flat)
    }

    pub fn to_document(&self) -> HypergraphDoc {
        HypergraphDoc {
            k: self.k,
            n: self.n,
            edges: self.edges().map(|e| e.to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("serializable")
    }

    /// Parses the JSON document format; the result is canonicalized.
    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        let doc: HypergraphDoc =
            serde_json::from_str(text).map_err(|e| HypergraphError::Malformed(e.to_string()))?;
        doc.try_into()
    }
}

/// Serialized form: `{"k": 3, "n": 6, "edges": [[0,1,2], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<u32>>,
}

impl TryFrom<HypergraphDoc> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(doc: HypergraphDoc) -> Result<Self, Self::Error> {
        Hypergraph::new(doc.n, doc.k, doc.edges)
    }
}

/// A total assignment of colors `0..t` to the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    t: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, t: usize) -> Result<Self, HypergraphError> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= t) {
            return Err(HypergraphError::ColorOutOfRange { vertex, color, t });
        }
        Ok(Coloring { colors, t })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Vertices of each color class.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut cls = vec![Vec::new(); self.t];
        for (v, &c) in self.colors.iter().enumerate() {
            cls[c].push(v as u32);
        }
        cls
    }
}

fn check_len(h: &Hypergraph, c: &Coloring) -> Result<(), HypergraphError> {
    if c.len() != h.num_vertices() {
        return Err(HypergraphError::LengthMismatch {
            expected: h.num_vertices(),
            found: c.len(),
        });
    }
    Ok(())
}

fn edge_is_rainbow(e: &[u32], c: &Coloring) -> bool {
    e.iter().enumerate().all(|(i, &u)| {
        e[i + 1..]
            .iter()
            .all(|&v| c.color(u as usize) != c.color(v as usize))
    })
}

/// No hyperedge contains two vertices of the same color.
pub fn is_proper(h: &Hypergraph, c: &Coloring) -> Result<bool, HypergraphError> {
    check_len(h, c)?;
    Ok(h.edges().all(|e| edge_is_rainbow(e, c)))
}

/// Proper, and every k-subset of the `t` colors is the color set of some
/// hyperedge. Edgeless hypergraphs have no complete coloring.
pub fn is_complete(h: &Hypergraph, c: &Coloring) -> Result<bool, HypergraphError> {
    if !is_proper(h, c)? {
        return Ok(false);
    }
    let (k, t, m) = (h.uniformity(), c.num_colors(), h.num_edges());
    if m == 0 || t < k || binomial(t, k) > m as u64 {
        return Ok(false);
    }
    let ranker = SubsetRanker::new(t, k);
    let mut seen = vec![false; ranker.count() as usize];
    let mut buf = vec![0usize; k];
    for e in h.edges() {
        for (slot, &v) in buf.iter_mut().zip(e) {
            *slot = c.color(v as usize);
        }
        buf.sort_unstable();
        seen[ranker.rank(&buf)] = true;
    }
    Ok(seen.iter().all(|&s| s))
}

/// All independent vertex sets of the given size, in lexicographic order.
pub fn independent_sets(h: &Hypergraph, size: usize) -> Vec<Vec<u32>> {
    let shadow = h.shadow();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    let candidates = BitSet::full(h.num_vertices());
    extend_independent(&shadow, size, &candidates, &mut current, &mut |s| {
        out.push(s.to_vec())
    });
    out
}

pub(crate) fn extend_independent(
    shadow: &[BitSet],
    size: usize,
    candidates: &BitSet,
    current: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if current.len() == size {
        emit(current);
        return;
    }
    let need = size - current.len();
    if candidates.count() < need {
        return;
    }
    for v in candidates.iter() {
        let mut next = candidates.clone();
        // only vertices after v keep the output lexicographic and duplicate-free
        for u in 0..=v {
            next.remove(u);
        }
        next.difference_with(&shadow[v]);
        current.push(v as u32);
        extend_independent(shadow, size, &next, current, emit);
        current.pop();
    }
}

/// Size of a largest independent set.
pub fn independence_number(h: &Hypergraph) -> usize {
    let shadow = h.shadow();
    let mut best = 0;
    let mut size = 1;
    while size <= h.num_vertices() {
        let mut found = false;
        let mut cur = Vec::new();
        let mut probe = |_: &[u32]| found = true;
        extend_independent(
            &shadow,
            size,
            &BitSet::full(h.num_vertices()),
            &mut cur,
            &mut probe,
        );
        if !found {
            break;
        }
        best = size;
        size += 1;
    }
    best
}

/// Every hyperedge meets `set`.
pub fn covers_all(h: &Hypergraph, set: &[u32]) -> bool {
    let members: BTreeSet<u32> = set.iter().copied().collect();
    h.edges().all(|e| e.iter().any(|v| members.contains(v)))
}

/// Bipartite vertex/edge membership graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub num_vertex_nodes: usize,
    pub num_edge_nodes: usize,
    /// `(vertex, edge index)` pairs, sorted.
    pub links: Vec<(u32, u32)>,
}

impl IncidenceGraph {
    pub fn vertex_degree(&self, v: u32) -> usize {
        self.links.iter().filter(|l| l.0 == v).count()
    }

    pub fn edge_degree(&self, e: u32) -> usize {
        self.links.iter().filter(|l| l.1 == e).count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph incidence {\n");
        for v in 0..self.num_vertex_nodes {
            let _ = writeln!(s, "  v{v} [shape=circle];");
        }
        for e in 0..self.num_edge_nodes {
            let _ = writeln!(s, "  e{e} [shape=box];");
        }
        for &(v, e) in &self.links {
            let _ = writeln!(s, "  v{v} -- e{e};");
        }
        s.push_str("}\n");
        s
    }
}

pub fn incidence_graph(h: &Hypergraph) -> IncidenceGraph {
    let mut links: Vec<(u32, u32)> = h
        .edges()
        .enumerate()
        .flat_map(|(i, e)| e.iter().map(move |&v| (v, i as u32)))
        .collect();
    links.sort_unstable();
    IncidenceGraph {
        num_vertex_nodes: h.num_vertices(),
        num_edge_nodes: h.num_edges(),
        links,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::regular15;

    fn single() -> Hypergraph {
        Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap()
    }

    fn col(c: &[usize], t: usize) -> Coloring {
        Coloring::new(c.to_vec(), t).unwrap()
    }

    #[test]
    fn proper_examples() {
        let h = single();
        assert!(!is_proper(&h, &col(&[0, 0, 1], 2)).unwrap());
        assert!(is_proper(&h, &col(&[0, 1, 2], 3)).unwrap());
        let r = regular15();
        let parts: Vec<usize> = (0..15).map(|v| v / 5).collect();
        assert!(is_proper(&r, &col(&parts, 3)).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let err = is_proper(&single(), &col(&[0, 1], 2)).unwrap_err();
        assert_eq!(
            err,
            HypergraphError::LengthMismatch {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn complete_examples() {
        assert!(is_complete(&single(), &col(&[0, 1, 2], 3)).unwrap());
        let r = regular15();
        let distinct: Vec<usize> = (0..15).collect();
        assert!(!is_complete(&r, &col(&distinct, 15)).unwrap());
        // t < k can never be complete
        assert!(!is_complete(&single(), &col(&[0, 1, 1], 2)).unwrap());
    }

    #[test]
    fn edgeless_is_never_complete() {
        let h = Hypergraph::new(3, 3, Vec::<Vec<u32>>::new()).unwrap();
        for t in 1..=3 {
            let c = col(&(0..3).map(|v| v % t).collect::<Vec<_>>(), t);
            assert!(!is_complete(&h, &c).unwrap());
        }
    }

    #[test]
    fn coloring_rejects_large_colors() {
        assert!(matches!(
            Coloring::new(vec![0, 3], 3),
            Err(HypergraphError::ColorOutOfRange { vertex: 1, .. })
        ));
    }

    #[test]
    fn independent_set_examples() {
        let r = regular15();
        let fives = independent_sets(&r, 5);
        let parts: Vec<Vec<u32>> = (0..3).map(|i| (i * 5..i * 5 + 5).collect()).collect();
        assert_eq!(fives, parts);
        assert_eq!(independent_sets(&r, 4).len(), 15);
        assert!(independent_sets(&single(), 2).is_empty());
        assert_eq!(independent_sets(&single(), 0), vec![Vec::<u32>::new()]);
        assert_eq!(independence_number(&r), 5);
    }

    #[test]
    fn cover_examples() {
        let r = regular15();
        assert!(covers_all(&r, &[0, 1, 2, 3, 4]));
        assert!(!covers_all(&r, &[]));
        assert!(covers_all(&single(), &[2]));
    }

    #[test]
    fn incidence_examples() {
        let g = incidence_graph(&single());
        assert_eq!(g.edge_degree(0), 3);
        assert!((0..3).all(|v| g.vertex_degree(v) == 1));
        let g = incidence_graph(&regular15());
        assert!((0..15).all(|v| g.vertex_degree(v) == 3 && g.edge_degree(v) == 3));
        let empty = Hypergraph::new(4, 3, Vec::<Vec<u32>>::new()).unwrap();
        let g = incidence_graph(&empty);
        assert!(g.links.is_empty());
        assert_eq!(g.num_vertex_nodes, 4);
        let dot = incidence_graph(&single()).to_dot();
        assert!(dot.contains("v0 -- e0;") && dot.contains("v2 -- e0;"));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            Hypergraph::from_json(r#"{"k":3,"n":4,"edges":[[0,1]]}"#),
            Err(HypergraphError::NonUniform { found: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::from_json(r#"{"k":3,"n":4,"edges":[[0,1,2],[2,1,0]]}"#),
            Err(HypergraphError::DuplicateEdge(_))
        ));
        assert!(matches!(
            Hypergraph::from_json(r#"{"k":3,"n":3,"edges":[[0,1,3]]}"#),
            Err(HypergraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Hypergraph::from_json(r#"{"k":3,"n":3,"edges":[[0,1,1]]}"#),
            Err(HypergraphError::RepeatedVertex(_))
        ));
        assert!(matches!(
            Hypergraph::from_json(r#"{"k":3,"edges":[]}"#),
            Err(HypergraphError::Malformed(_))
        ));
    }

    #[test]
    fn parse_canonicalizes() {
        let h = Hypergraph::from_json(r#"{"k":3,"n":5,"edges":[[4,3,2],[2,0,1]]}"#).unwrap();
        assert_eq!(h.to_json(), r#"{"k":3,"n":5,"edges":[[0,1,2],[2,3,4]]}"#);
        assert!(h.contains_edge(&[3, 4, 2]));
        assert!(!h.contains_edge(&[0, 1, 3]));
    }

    #[test]
    fn generators_dedup_silently() {
        let h = Hypergraph::from_edges_dedup(3, 3, [[0, 1, 2], [2, 1, 0]]).unwrap();
        assert_eq!(h.num_edges(), 1);
    }
}
