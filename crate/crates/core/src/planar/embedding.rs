use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use crate::error::EmbeddingError;
use crate::hypergraph::{Coloring, Hypergraph};

/// Combinatorial embedding of a simple connected plane graph: for every
/// vertex, its neighbors in cyclic (clockwise) order.
///
/// Faces are traced by following a dart `u -> v` with `v -> w`, where `w`
/// precedes `u` in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    rot: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlipRefusal {
    NotAnEdge,
    /// The two faces on the edge are not distinct triangles.
    NotTriangular,
    /// The opposite diagonal is already an edge.
    DiagonalPresent,
}

impl Embedding {
    pub fn new(rot: Vec<Vec<u32>>) -> Result<Self, EmbeddingError> {
        let n = rot.len();
        for (v, nbrs) in rot.iter().enumerate() {
            let v32 = v as u32;
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(EmbeddingError::ParallelEdge(v32, w[0]));
                }
            }
            for &u in nbrs {
                if u == v32 {
                    return Err(EmbeddingError::Loop(v32));
                }
                if u as usize >= n {
                    return Err(EmbeddingError::UnknownVertex(v32, u));
                }
                if !rot[u as usize].contains(&v32) {
                    return Err(EmbeddingError::Asymmetric(v32, u));
                }
            }
        }
        let e = Embedding { rot };
        if n > 0 {
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([0usize]);
            seen[0] = true;
            while let Some(v) = queue.pop_front() {
                for &u in &e.rot[v] {
                    if !std::mem::replace(&mut seen[u as usize], true) {
                        queue.push_back(u as usize);
                    }
                }
            }
            if seen.contains(&false) {
                return Err(EmbeddingError::Disconnected);
            }
            let faces = if e.num_edges() == 0 {
                1
            } else {
                e.faces().len()
            };
            let euler = n as i64 - e.num_edges() as i64 + faces as i64;
            if euler != 2 {
                return Err(EmbeddingError::NotPlanar(euler));
            }
        }
        Ok(e)
    }

    pub(crate) fn from_rotation_unchecked(rot: Vec<Vec<u32>>) -> Self {
        let e = Embedding { rot };
        debug_assert!(Embedding::new(e.rot.clone()).is_ok());
        e
    }

    /// Builds the embedding whose faces are the given consistently oriented
    /// triangles.
    pub fn from_faces(n: usize, faces: &[[u32; 3]]) -> Result<Self, EmbeddingError> {
        let mut succ: Vec<BTreeMap<u32, u32>> = vec![BTreeMap::new(); n];
        for f in faces {
            for i in 0..3 {
                let (a, b, c) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
                if [a, b, c].iter().any(|&x| x as usize >= n) {
                    return Err(EmbeddingError::UnknownVertex(a, b.max(c)));
                }
                if succ[a as usize].insert(b, c).is_some() {
                    return Err(EmbeddingError::NotTriangulation);
                }
            }
        }
        let mut rot = Vec::with_capacity(n);
        for s in &succ {
            let Some((&start, _)) = s.iter().next() else {
                rot.push(Vec::new());
                continue;
            };
            let mut cyc = vec![start];
            let mut cur = start;
            loop {
                cur = *s.get(&cur).ok_or(EmbeddingError::NotTriangulation)?;
                if cur == start {
                    break;
                }
                if cyc.len() > s.len() {
                    return Err(EmbeddingError::NotTriangulation);
                }
                cyc.push(cur);
            }
            if cyc.len() != s.len() {
                return Err(EmbeddingError::NotTriangulation);
            }
            rot.push(cyc);
        }
        Embedding::new(rot)
    }

    pub fn num_vertices(&self) -> usize {
        self.rot.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[u32] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<u32>] {
        &self.rot
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rot.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.rot[u as usize].contains(&v)
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .rot
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| {
                nb.iter()
                    .filter(move |&&v| (u as u32) < v)
                    .map(move |&v| (u as u32, v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn position(&self, v: u32, u: u32) -> usize {
        self.rot[v as usize]
            .iter()
            .position(|&x| x == u)
            .expect("symmetric adjacency")
    }

    /// Vertex before `u` in the rotation at `v`.
    fn pred(&self, v: u32, u: u32) -> u32 {
        let r = &self.rot[v as usize];
        let i = self.position(v, u);
        r[(i + r.len() - 1) % r.len()]
    }

    /// Faces as vertex cycles; every dart is used by exactly one face.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let offsets: Vec<usize> = self
            .rot
            .iter()
            .scan(0, |acc, r| {
                let o = *acc;
                *acc += r.len();
                Some(o)
            })
            .collect();
        let total: usize = self.rot.iter().map(Vec::len).sum();
        let mut used = vec![false; total];
        let mut faces = Vec::new();
        for u in 0..self.rot.len() {
            for i in 0..self.rot[u].len() {
                if used[offsets[u] + i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u as u32, self.rot[u][i]);
                loop {
                    let slot = offsets[a as usize] + self.position(a, b);
                    if used[slot] {
                        break;
                    }
                    used[slot] = true;
                    face.push(a);
                    let c = self.pred(b, a);
                    (a, b) = (b, c);
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn is_triangulation(&self) -> bool {
        self.num_vertices() >= 3 && self.faces().iter().all(|f| f.len() == 3)
    }

    pub fn is_eulerian(&self) -> bool {
        self.rot.iter().all(|r| r.len() % 2 == 0)
    }

    /// Proper 3-coloring of the graph, found by backtracking in BFS order.
    pub fn three_coloring(&self) -> Result<Coloring, EmbeddingError> {
        if !self.is_eulerian() {
            return Err(EmbeddingError::NotEulerian);
        }
        let colors = self.graph_coloring(3).ok_or(EmbeddingError::NotEulerian)?;
        Ok(Coloring::new(colors, 3).expect("colors below 3"))
    }

    /// Backtracking proper coloring of the underlying graph with `q` colors.
    pub fn graph_coloring(&self, q: usize) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &u in &self.rot[v] {
                    if !std::mem::replace(&mut seen[u as usize], true) {
                        queue.push_back(u as usize);
                    }
                }
            }
        }
        fn rec(e: &Embedding, order: &[usize], i: usize, q: usize, col: &mut [usize]) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            for c in 0..q {
                if e.rot[v].iter().all(|&u| col[u as usize] != c) {
                    col[v] = c;
                    if rec(e, order, i + 1, q, col) {
                        return true;
                    }
                }
            }
            col[v] = usize::MAX;
            false
        }
        let mut col = vec![usize::MAX; n];
        rec(self, &order, 0, q, &mut col).then_some(col)
    }

    /// Face hypergraph of a triangulation: one 3-edge per face.
    pub fn face_hypergraph(&self) -> Result<Hypergraph, EmbeddingError> {
        if !self.is_triangulation() {
            return Err(EmbeddingError::NotTriangulation);
        }
        let faces = self.faces();
        let h = Hypergraph::from_edges_dedup(self.num_vertices(), 3, &faces)
            .expect("faces of a simple triangulation are valid 3-sets");
        if h.num_edges() != faces.len() {
            log::warn!(
                "{} faces share a vertex set; face hypergraph keeps {}",
                faces.len(),
                h.num_edges()
            );
        }
        Ok(h)
    }

    /// Replaces edge `uv` by the other diagonal of the quadrilateral formed
    /// by its two incident triangles.
    pub fn flip(&self, u: u32, v: u32) -> Result<Embedding, FlipRefusal> {
        if (u as usize) >= self.rot.len() || !self.has_edge(u, v) {
            return Err(FlipRefusal::NotAnEdge);
        }
        let x = self.pred(v, u);
        let y = self.pred(u, v);
        if x == y || self.pred(x, v) != u || self.pred(y, u) != v {
            return Err(FlipRefusal::NotTriangular);
        }
        if self.has_edge(x, y) {
            return Err(FlipRefusal::DiagonalPresent);
        }
        let mut rot = self.rot.clone();
        rot[u as usize].retain(|&w| w != v);
        rot[v as usize].retain(|&w| w != u);
        // at x: u, v consecutive; put y between them
        let px = self.position(x, v);
        rot[x as usize].insert(px, y);
        // at y: v, u consecutive; put x between them
        let py = self.position(y, u);
        rot[y as usize].insert(py, x);
        Ok(Embedding::from_rotation_unchecked(rot))
    }

    /// Splits vertex `v` along the neighbors at rotation positions `i` and
    /// `j`: a new vertex takes the arc `i..=j`, both endpoints stay adjacent
    /// to `v`, and the new vertex is adjacent to `v`. Inverse of contracting
    /// the new edge.
    pub fn vertex_split(&self, v: u32, i: usize, j: usize) -> Embedding {
        let r = &self.rot[v as usize];
        let d = r.len();
        assert!(i < d && j < d && i != j, "split positions must be distinct");
        let w = self.rot.len() as u32;
        let arc_len = (j + d - i) % d + 1;
        let arc: Vec<u32> = (0..arc_len).map(|s| r[(i + s) % d]).collect();
        let rest_len = d - arc_len + 2;
        let rest: Vec<u32> = (0..rest_len).map(|s| r[(j + s) % d]).collect();
        let (ui, uj) = (r[i], r[j]);
        let mut rot = self.rot.clone();
        for &x in &arc[1..arc_len - 1] {
            for y in rot[x as usize].iter_mut() {
                if *y == v {
                    *y = w;
                }
            }
        }
        let p = rot[ui as usize].iter().position(|&y| y == v).unwrap();
        rot[ui as usize].insert(p, w);
        let p = rot[uj as usize].iter().position(|&y| y == v).unwrap();
        rot[uj as usize].insert(p + 1, w);
        let mut wrot = arc;
        wrot.push(v);
        let mut vrot = rest;
        vrot.push(w);
        rot[v as usize] = vrot;
        rot.push(wrot);
        Embedding::from_rotation_unchecked(rot)
    }

    /// `perm[old] = new`.
    pub fn relabel(&self, perm: &[u32]) -> Embedding {
        let mut rot = vec![Vec::new(); self.rot.len()];
        for (v, r) in self.rot.iter().enumerate() {
            rot[perm[v] as usize] = r.iter().map(|&u| perm[u as usize]).collect();
        }
        Embedding { rot }
    }

    /// Same graph with every rotation reversed.
    pub fn mirror(&self) -> Embedding {
        Embedding {
            rot: self
                .rot
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// One line per vertex: `i: n1 n2 ... nd`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, r) in self.rot.iter().enumerate() {
            let _ = write!(s, "{v}:");
            for u in r {
                let _ = write!(s, " {u}");
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Embedding, EmbeddingError> {
        let mut rows: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| EmbeddingError::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| err("expected `i: neighbors`"))?;
            let v: u32 = head.trim().parse().map_err(|_| err("bad vertex id"))?;
            let nbrs = tail
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| err("bad neighbor id")))
                .collect::<Result<Vec<_>, _>>()?;
            if rows.insert(v, nbrs).is_some() {
                return Err(err("vertex listed twice"));
            }
        }
        let n = rows.len();
        if rows.keys().enumerate().any(|(i, &v)| i as u32 != v) {
            return Err(EmbeddingError::Parse {
                line: 0,
                msg: format!("vertex ids must be 0..{n}"),
            });
        }
        Embedding::new(rows.into_values().collect())
    }
}

/// K4 with consistently oriented faces.
pub fn tetrahedron() -> Embedding {
    Embedding::from_faces(4, &[[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]).expect("K4")
}

/// Octahedron with poles 0 and 5 and equator 1, 2, 3, 4.
pub fn octahedron() -> Embedding {
    Embedding::from_faces(
        6,
        &[
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 1],
            [5, 2, 1],
            [5, 3, 2],
            [5, 4, 3],
            [5, 1, 4],
        ],
    )
    .expect("octahedron")
}

/// Triangulation built from K4 by repeatedly inserting a degree-3 vertex
/// into the most recently created face.
pub fn stacked(n: usize) -> Embedding {
    assert!(n >= 4, "stacked triangulations need at least 4 vertices");
    let mut faces: Vec<[u32; 3]> = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    for w in 4..n as u32 {
        let [a, b, c] = faces.pop().unwrap();
        faces.extend([[a, b, w], [b, c, w], [c, a, w]]);
    }
    Embedding::from_faces(n, &faces).expect("stacking keeps a triangulation")
}
