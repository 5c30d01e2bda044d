//! Canonical labeling of small hypergraphs by partition refinement and
//! individualization, keeping the lexicographically least relabeled edge
//! list. Automorphisms discovered at equal leaves prune sibling branches.

use std::collections::BTreeMap;

use crate::hypergraph::Hypergraph;

/// Isomorphism-invariant encoding: equal iff the hypergraphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<u32>,
}

impl CanonicalForm {
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_sorted_flat(self.n, self.k, self.edges.clone())
    }
}

/// Ordered partition of the vertices into cells.
type Partition = Vec<Vec<u32>>;

struct Ctx<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<u32>>,
    best: Option<(Vec<u32>, Vec<u32>)>,
    automorphisms: Vec<Vec<u32>>,
}

fn cell_index(p: &Partition, n: usize) -> Vec<usize> {
    let mut idx = vec![0; n];
    for (i, cell) in p.iter().enumerate() {
        for &v in cell {
            idx[v as usize] = i;
        }
    }
    idx
}

/// Splits cells by the multiset of cell-profiles of each vertex's edges
/// until stable. Cell order depends only on invariant data.
fn refine(ctx: &Ctx, mut p: Partition) -> Partition {
    let n = ctx.h.num_vertices();
    loop {
        let idx = cell_index(&p, n);
        let mut changed = false;
        let mut next = Vec::with_capacity(p.len());
        for cell in &p {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<Vec<usize>>, Vec<u32>> = BTreeMap::new();
            for &v in cell {
                let mut sig: Vec<Vec<usize>> = ctx.incident[v as usize]
                    .iter()
                    .map(|&e| {
                        let mut prof: Vec<usize> = ctx
                            .h
                            .edge(e as usize)
                            .iter()
                            .filter(|&&u| u != v)
                            .map(|&u| idx[u as usize])
                            .collect();
                        prof.sort_unstable();
                        prof
                    })
                    .collect();
                sig.sort_unstable();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        p = next;
        if !changed {
            return p;
        }
    }
}

fn leaf_code(h: &Hypergraph, p: &Partition) -> (Vec<u32>, Vec<u32>) {
    let mut label = vec![0u32; h.num_vertices()];
    for (i, cell) in p.iter().enumerate() {
        label[cell[0] as usize] = i as u32;
    }
    let mut edges: Vec<Vec<u32>> = h
        .edges()
        .map(|e| {
            let mut r: Vec<u32> = e.iter().map(|&v| label[v as usize]).collect();
            r.sort_unstable();
            r
        })
        .collect();
    edges.sort_unstable();
    (edges.concat(), label)
}

fn search(ctx: &mut Ctx, p: Partition, fixed: &mut Vec<u32>) {
    let p = refine(ctx, p);
    let Some(target) = p.iter().position(|c| c.len() > 1) else {
        let (code, label) = leaf_code(ctx.h, &p);
        match &ctx.best {
            None => ctx.best = Some((code, label)),
            Some((best, best_label)) => {
                if code < *best {
                    ctx.best = Some((code, label));
                } else if code == *best {
                    // best_label⁻¹ ∘ label maps this leaf onto the best one
                    let mut inv = vec![0u32; label.len()];
                    for (v, &l) in best_label.iter().enumerate() {
                        inv[l as usize] = v as u32;
                    }
                    let auto: Vec<u32> = label.iter().map(|&l| inv[l as usize]).collect();
                    ctx.automorphisms.push(auto);
                }
            }
        }
        return;
    };
    let cell = p[target].clone();
    let mut explored: Vec<u32> = Vec::new();
    for &v in &cell {
        let redundant = ctx.automorphisms.iter().any(|g| {
            fixed.iter().all(|&f| g[f as usize] == f)
                && explored
                    .iter()
                    .any(|&e| g[e as usize] == v || g[v as usize] == e)
        });
        if redundant {
            continue;
        }
        let mut child = p.clone();
        let rest: Vec<u32> = cell.iter().copied().filter(|&u| u != v).collect();
        child.splice(target..=target, [vec![v], rest]);
        fixed.push(v);
        search(ctx, child, fixed);
        fixed.pop();
        explored.push(v);
    }
}

pub fn canonical_form(h: &Hypergraph) -> CanonicalForm {
    canonical_labeling(h).0
}

/// Canonical form together with the labeling `old -> new` producing it.
pub fn canonical_labeling(h: &Hypergraph) -> (CanonicalForm, Vec<u32>) {
    let n = h.num_vertices();
    let mut ctx = Ctx {
        h,
        incident: h.incidence_lists(),
        best: None,
        automorphisms: Vec::new(),
    };
    if n == 0 {
        return (
            CanonicalForm {
                n,
                k: h.uniformity(),
                edges: Vec::new(),
            },
            Vec::new(),
        );
    }
    let deg = h.degrees();
    let mut by_deg: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (v, &d) in deg.iter().enumerate() {
        by_deg.entry(d).or_default().push(v as u32);
    }
    let initial: Partition = by_deg.into_values().collect();
    search(&mut ctx, initial, &mut Vec::new());
    let (edges, label) = ctx.best.expect("at least one leaf");
    (
        CanonicalForm {
            n,
            k: h.uniformity(),
            edges,
        },
        label,
    )
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.uniformity() == b.uniformity()
        && a.num_edges() == b.num_edges()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_uniform, regular15};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shuffled(h: &Hypergraph, seed: u64) -> Hypergraph {
        let mut perm: Vec<u32> = (0..h.num_vertices() as u32).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        h.relabel(&perm)
    }

    #[test]
    fn invariant_under_relabeling() {
        for h in [regular15(), complete_uniform(6, 3).unwrap()] {
            let c = canonical_form(&h);
            for seed in 0..5 {
                assert_eq!(canonical_form(&shuffled(&h, seed)), c);
            }
        }
    }

    #[test]
    fn labeling_reproduces_form() {
        let h = regular15();
        let (c, label) = canonical_labeling(&h);
        assert_eq!(h.relabel(&label), c.to_hypergraph());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let a = Hypergraph::new(5, 3, [[0, 1, 2], [2, 3, 4]]).unwrap();
        let b = Hypergraph::new(5, 3, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert!(!is_isomorphic(&a, &b));
        assert!(is_isomorphic(&a, &shuffled(&a, 3)));
    }

    #[test]
    fn edgeless_is_cheap() {
        let h = Hypergraph::new(14, 3, Vec::<Vec<u32>>::new()).unwrap();
        assert!(canonical_form(&h).edges.is_empty());
    }
}
