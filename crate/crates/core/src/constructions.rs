//! Generators for the explicit hypergraph families.
//!
//! Vertex layout for the part/position families is part-major: the vertex in
//! part `i` and position `j` (both zero-based) has id `i * r + j`.

use serde::{Deserialize, Serialize};

use crate::combinatorics::for_each_subset;
use crate::error::ConstructionError;
use crate::hypergraph::{Coloring, Hypergraph};

/// Parameters of the part/position construction: `k` parts of `r`
/// positions each.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Params {
    pub k: usize,
    pub r: usize,
}

impl Theorem3Params {
    pub fn new(k: usize, r: usize) -> Result<Self, ConstructionError> {
        if k < 3 {
            return Err(ConstructionError::Parameter {
                name: "k",
                value: k,
                bound: "k >= 3",
            });
        }
        if r < k {
            return Err(ConstructionError::Parameter {
                name: "r",
                value: r,
                bound: "r >= k",
            });
        }
        Ok(Theorem3Params { k, r })
    }

    pub fn vertex(&self, part: usize, position: usize) -> u32 {
        (part * self.r + position) as u32
    }

    pub fn part_of(&self, v: u32) -> usize {
        v as usize / self.r
    }

    pub fn position_of(&self, v: u32) -> usize {
        v as usize % self.r
    }

    /// Values of `t` for which no complete `t`-coloring exists once `r` is
    /// large enough: `ceil((k-2)/(k-1) * r) + k + 1 ..= r - 1`.
    pub fn gap_range(&self) -> std::ops::RangeInclusive<usize> {
        let (k, r) = (self.k, self.r);
        let lo = ((k - 2) * r).div_ceil(k - 1) + k + 1;
        lo..=r - 1
    }

    pub fn gap_nonempty(&self) -> bool {
        !self.gap_range().is_empty()
    }
}

/// Number of unordered pairs of positions at distance one in the sequence.
fn adjacent_pairs(seq: &[usize]) -> usize {
    let mut f = 0;
    for (a, &p) in seq.iter().enumerate() {
        for &q in &seq[a + 1..] {
            if p.abs_diff(q) == 1 {
                f += 1;
            }
        }
    }
    f
}

/// Edges are `{v(i, p_i)}` for sequences of distinct positions that have at
/// most one adjacent pair of positions, or that are strictly increasing.
pub fn theorem3(params: Theorem3Params) -> Hypergraph {
    let Theorem3Params { k, r } = params;
    let mut flat = Vec::new();
    let mut seq = Vec::with_capacity(k);
    let mut used = vec![false; r + 2];
    // positions are shifted by one inside `used` so p-1 never underflows
    fn rec(
        params: &Theorem3Params,
        seq: &mut Vec<usize>,
        used: &mut [bool],
        adjacent: usize,
        increasing: bool,
        flat: &mut Vec<u32>,
    ) {
        if seq.len() == params.k {
            flat.extend(seq.iter().enumerate().map(|(i, &p)| params.vertex(i, p)));
            return;
        }
        for p in 0..params.r {
            if used[p + 1] {
                continue;
            }
            let adj = adjacent + used[p] as usize + used[p + 2] as usize;
            let inc = increasing && seq.last().is_none_or(|&q| q < p);
            if adj > 1 && !inc {
                continue;
            }
            used[p + 1] = true;
            seq.push(p);
            rec(params, seq, used, adj, inc, flat);
            seq.pop();
            used[p + 1] = false;
        }
    }
    rec(&params, &mut seq, &mut used, 0, true, &mut flat);
    debug_assert!(flat.chunks_exact(k).all(|e| adjacent_pairs(
        &e.iter().map(|&v| params.position_of(v)).collect::<Vec<_>>()
    ) <= 1
        || e.windows(2)
            .all(|w| params.position_of(w[0]) < params.position_of(w[1]))));
    Hypergraph::from_sorted_flat(k * r, k, flat)
}

/// Color every vertex by its part (`t = k`).
pub fn theorem3_part_coloring(params: Theorem3Params) -> Coloring {
    let colors = (0..params.k * params.r).map(|v| v / params.r).collect();
    Coloring::new(colors, params.k).expect("part index below k")
}

/// Color every vertex by its position (`t = r`).
pub fn theorem3_position_coloring(params: Theorem3Params) -> Coloring {
    let colors = (0..params.k * params.r).map(|v| v % params.r).collect();
    Coloring::new(colors, params.r).expect("position index below r")
}

/// The 3-uniform 3-regular hypergraph on parts `X_1..X_3` of five vertices:
/// `e(i, j) = {v(i, j+1)} ∪ {v(t, j) : t != i}` with positions taken mod 5.
pub fn regular15() -> Hypergraph {
    let v = |i: usize, j: usize| (i * 5 + j % 5) as u32;
    let edges = (0..3).flat_map(|i| {
        (0..5).map(move |j| {
            let mut e = vec![v(i, j + 1)];
            e.extend((0..3).filter(|&t| t != i).map(|t| v(t, j)));
            e
        })
    });
    Hypergraph::from_edges_dedup(15, 3, edges).expect("valid by construction")
}

/// The complete k-uniform hypergraph on `m` vertices.
pub fn complete_uniform(m: usize, k: usize) -> Result<Hypergraph, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::Parameter {
            name: "k",
            value: k,
            bound: "k >= 2",
        });
    }
    if m < k {
        return Err(ConstructionError::Parameter {
            name: "m",
            value: m,
            bound: "m >= k",
        });
    }
    let mut flat = Vec::new();
    for_each_subset(m, k, |s| flat.extend(s.iter().map(|&v| v as u32)));
    Ok(Hypergraph::from_sorted_flat(m, k, flat))
}

/// A split lift of the complete k-uniform hypergraph on `base_m` vertices.
///
/// Each vertex in `split` is replaced by two copies. `lifts[e]` holds, for
/// the `e`-th base edge in lexicographic order, the copy (0 or 1) chosen for
/// each of its split vertices in increasing vertex order.
///
/// Copy 0 of a base vertex keeps its id; copy 1 of the `j`-th split vertex
/// gets id `base_m + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitPattern {
    #[serde(default = "default_k")]
    pub k: usize,
    pub base_m: usize,
    pub split: Vec<u32>,
    pub lifts: Vec<Vec<u8>>,
}

fn default_k() -> usize {
    3
}

impl SplitPattern {
    /// Base edges of the complete hypergraph, lexicographic.
    pub fn base_edges(base_m: usize, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for_each_subset(base_m, k, |s| {
            out.push(s.iter().map(|&v| v as u32).collect())
        });
        out
    }

    /// Number of split vertices in each base edge.
    pub fn lift_arity(base_m: usize, k: usize, split: &[u32]) -> Vec<usize> {
        Self::base_edges(base_m, k)
            .iter()
            .map(|e| e.iter().filter(|v| split.contains(v)).count())
            .collect()
    }

    /// Pattern choosing copy 0 everywhere.
    pub fn trivial(base_m: usize, k: usize, split: Vec<u32>) -> Self {
        let lifts = Self::lift_arity(base_m, k, &split)
            .into_iter()
            .map(|a| vec![0; a])
            .collect();
        SplitPattern {
            k,
            base_m,
            split,
            lifts,
        }
    }

    pub fn num_lifted_vertices(&self) -> usize {
        self.base_m + self.split.len()
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |m: String| Err(ConstructionError::InvalidPattern(m));
        if self.k < 2 || self.base_m < self.k {
            return bad(format!(
                "need 2 <= k <= base_m, got k={} base_m={}",
                self.k, self.base_m
            ));
        }
        if self.split.windows(2).any(|w| w[0] >= w[1]) {
            return bad("split list must be strictly increasing".into());
        }
        if let Some(&v) = self.split.iter().find(|&&v| v as usize >= self.base_m) {
            return bad(format!("split vertex {v} is not a base vertex"));
        }
        let arity = Self::lift_arity(self.base_m, self.k, &self.split);
        if self.lifts.len() != arity.len() {
            return bad(format!(
                "expected lifts for {} base edges, got {}",
                arity.len(),
                self.lifts.len()
            ));
        }
        for (i, (l, &a)) in self.lifts.iter().zip(&arity).enumerate() {
            if l.len() != a {
                return bad(format!(
                    "base edge {i} has {a} split vertices, lift has {}",
                    l.len()
                ));
            }
            if let Some(&x) = l.iter().find(|&&x| x > 1) {
                return bad(format!("invalid lift index {x} on base edge {i}"));
            }
        }
        Ok(())
    }

    /// Id of the given copy of a base vertex.
    pub fn copy_id(&self, v: u32, copy: u8) -> u32 {
        match (copy, self.split.binary_search(&v)) {
            (1, Ok(j)) => (self.base_m + j) as u32,
            _ => v,
        }
    }

    /// Base vertex a lifted vertex comes from.
    pub fn base_of(&self, id: u32) -> u32 {
        if (id as usize) < self.base_m {
            id
        } else {
            self.split[id as usize - self.base_m]
        }
    }
}

pub fn split_lift(pattern: &SplitPattern) -> Result<Hypergraph, ConstructionError> {
    pattern.validate()?;
    let edges = SplitPattern::base_edges(pattern.base_m, pattern.k)
        .into_iter()
        .zip(&pattern.lifts)
        .map(|(e, lift)| {
            let mut choices = lift.iter();
            e.iter()
                .map(|&v| {
                    if pattern.split.binary_search(&v).is_ok() {
                        pattern.copy_id(v, *choices.next().expect("validated arity"))
                    } else {
                        v
                    }
                })
                .collect::<Vec<u32>>()
        })
        .collect::<Vec<_>>();
    Ok(
        Hypergraph::from_edges_dedup(pattern.num_lifted_vertices(), pattern.k, edges)
            .expect("lifted edges are valid"),
    )
}
