use std::collections::VecDeque;

use super::Embedding;

/// Isomorphism-invariant code of an embedded triangulation. Two embeddings
/// have equal codes iff they are related by a relabeling, possibly combined
/// with a reflection.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarCode(Vec<u16>);

impl PlanarCode {
    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// Big-endian byte encoding.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_be_bytes()).collect()
    }
}

struct Traversal {
    code: Vec<u16>,
    label: Vec<u32>,
    first: Vec<usize>,
}

/// BFS from dart `(root, rot[root][start])`, reading rotations clockwise
/// (`forward`) or counterclockwise. Stops as soon as the code exceeds `bound`.
fn traverse(
    e: &Embedding,
    root: u32,
    start: usize,
    forward: bool,
    bound: Option<&[u16]>,
) -> Option<Traversal> {
    let n = e.num_vertices();
    let mut label = vec![u32::MAX; n];
    let mut first = vec![0usize; n];
    let mut code = Vec::with_capacity(n + 2 * e.num_edges());
    let mut queue = VecDeque::with_capacity(n);
    label[root as usize] = 0;
    first[root as usize] = start;
    queue.push_back(root);
    let mut next = 1u32;
    let mut tight = bound.is_some();
    let push = |code: &mut Vec<u16>, x: u16, tight: &mut bool| -> bool {
        if *tight {
            let b = bound.unwrap()[code.len()];
            if x > b {
                return false;
            }
            if x < b {
                *tight = false;
            }
        }
        code.push(x);
        true
    };
    while let Some(x) = queue.pop_front() {
        let r = e.rotation(x as usize);
        let d = r.len();
        if !push(&mut code, d as u16, &mut tight) {
            return None;
        }
        let f = first[x as usize];
        for s in 0..d {
            let j = if forward {
                (f + s) % d
            } else {
                (f + d - s) % d
            };
            let y = r[j];
            if label[y as usize] == u32::MAX {
                label[y as usize] = next;
                next += 1;
                first[y as usize] = e.position(y, x);
                queue.push_back(y);
            }
            if !push(&mut code, label[y as usize] as u16, &mut tight) {
                return None;
            }
        }
    }
    Some(Traversal { code, label, first })
}

fn best_traversal(e: &Embedding) -> (Traversal, bool) {
    let min_deg = e.degrees().into_iter().min().unwrap_or(0);
    let mut best: Option<(Traversal, bool)> = None;
    for root in 0..e.num_vertices() as u32 {
        if e.degree(root as usize) != min_deg {
            continue;
        }
        for start in 0..min_deg {
            for forward in [true, false] {
                let bound = best.as_ref().map(|(b, _)| b.code.as_slice());
                if let Some(t) = traverse(e, root, start, forward, bound) {
                    if best.as_ref().is_none_or(|(b, _)| t.code < b.code) {
                        best = Some((t, forward));
                    }
                }
            }
        }
    }
    best.expect("connected embedding with at least one edge")
}

pub fn canonical_code(e: &Embedding) -> PlanarCode {
    PlanarCode(best_traversal(e).0.code)
}

/// Canonical representative: vertices renumbered in canonical BFS order,
/// rotations starting at the discovering neighbor.
pub fn canonical_embedding(e: &Embedding) -> (PlanarCode, Embedding) {
    let (t, forward) = best_traversal(e);
    let n = e.num_vertices();
    let mut rot = vec![Vec::new(); n];
    for x in 0..n {
        let r = e.rotation(x);
        let d = r.len();
        let f = t.first[x];
        rot[t.label[x] as usize] = (0..d)
            .map(|s| {
                let j = if forward {
                    (f + s) % d
                } else {
                    (f + d - s) % d
                };
                t.label[r[j] as usize]
            })
            .collect();
    }
    (PlanarCode(t.code), Embedding::from_rotation_unchecked(rot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::{octahedron, stacked};

    #[test]
    fn invariant_under_relabel_and_mirror() {
        let s = stacked(9);
        let e = s
            .edges()
            .into_iter()
            .find_map(|(u, v)| s.flip(u, v).ok())
            .unwrap();
        let c = canonical_code(&e);
        let perm: Vec<u32> = vec![3, 7, 0, 8, 1, 5, 2, 6, 4];
        assert_eq!(canonical_code(&e.relabel(&perm)), c);
        assert_eq!(canonical_code(&e.mirror()), c);
        let (c2, rep) = canonical_embedding(&e);
        assert_eq!(c2, c);
        assert_eq!(canonical_code(&rep), c);
    }

    #[test]
    fn distinguishes_classes() {
        assert_ne!(canonical_code(&octahedron()), canonical_code(&stacked(6)));
        assert_eq!(canonical_code(&octahedron()).to_bytes().len() % 2, 0);
    }
}
