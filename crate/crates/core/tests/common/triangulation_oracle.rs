//! Edge-subset brute force: a graph with 3n - 6 edges and minimum degree 3
//! is a sphere triangulation iff every vertex admits an oriented cyclic order
//! of its neighbors (consecutive neighbors adjacent) such that consecutive
//! `(a, b)` at `v` forces `(b, v)` consecutive at `a`.

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn link_cycles(adj: &[Vec<bool>], v: usize) -> Vec<Vec<usize>> {
    let nb: Vec<usize> = (0..adj.len()).filter(|&u| adj[v][u]).collect();
    let mut out = Vec::new();
    let mut cyc = vec![nb[0]];
    fn rec(adj: &[Vec<bool>], nb: &[usize], cyc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cyc.len() == nb.len() {
            if adj[*cyc.last().unwrap()][cyc[0]] {
                out.push(cyc.clone());
            }
            return;
        }
        for &u in nb {
            if !cyc.contains(&u) && adj[*cyc.last().unwrap()][u] {
                cyc.push(u);
                rec(adj, nb, cyc, out);
                cyc.pop();
            }
        }
    }
    rec(adj, &nb, &mut cyc, &mut out);
    out
}

fn consistent(next: &[Vec<usize>], v: usize) -> bool {
    // next[x][a] = b means b follows a around x
    let n = next.len();
    for a in 0..n {
        let b = next[v][a];
        if b == usize::MAX {
            continue;
        }
        for (x, y, z) in [(a, b, v), (b, v, a)] {
            let w = next[x][y];
            if w != usize::MAX && w != z {
                return false;
            }
        }
    }
    true
}

fn embeds(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let options: Vec<Vec<Vec<usize>>> = (0..n).map(|v| link_cycles(adj, v)).collect();
    if options.iter().any(Vec::is_empty) {
        return false;
    }
    let mut next = vec![vec![usize::MAX; n]; n];
    fn rec(v: usize, options: &[Vec<Vec<usize>>], next: &mut Vec<Vec<usize>>) -> bool {
        if v == options.len() {
            return true;
        }
        for cyc in &options[v] {
            for i in 0..cyc.len() {
                next[v][cyc[i]] = cyc[(i + 1) % cyc.len()];
            }
            if consistent(next, v) && rec(v + 1, options, next) {
                return true;
            }
        }
        next[v].iter_mut().for_each(|x| *x = usize::MAX);
        false
    }
    rec(0, &options, &mut next)
}

fn mask(edges: &[(usize, usize)], perm: &[usize], index: &[Vec<usize>]) -> u64 {
    edges
        .iter()
        .fold(0u64, |m, &(a, b)| m | 1 << index[perm[a]][perm[b]])
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Isomorphism classes of triangulations on `n` vertices, each as its
/// minimum edge bitmask.
pub fn classes(n: usize) -> Vec<u64> {
    let all = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(a, b)) in all.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let perms = permutations(n);
    let m = 3 * n - 6;
    let mut seen = std::collections::HashSet::new();
    let mut reps = Vec::new();
    let total = all.len();
    for bits in 0u64..1 << total {
        if bits.count_ones() as usize != m || seen.contains(&bits) {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..total)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| all[i])
            .collect();
        let mut adj = vec![vec![false; n]; n];
        let mut deg = vec![0; n];
        for &(a, b) in &edges {
            adj[a][b] = true;
            adj[b][a] = true;
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().any(|&d| d < 3) || !embeds(&adj) {
            continue;
        }
        let images: Vec<u64> = perms.iter().map(|p| mask(&edges, p, &index)).collect();
        reps.push(*images.iter().min().unwrap());
        seen.extend(images);
    }
    reps.sort_unstable();
    reps
}

pub fn graph_mask(n: usize, edges: &[(u32, u32)]) -> u64 {
    let all = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(a, b)) in all.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let e: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| (a as usize, b as usize))
        .collect();
    permutations(n)
        .iter()
        .map(|p| mask(&e, p, &index))
        .min()
        .unwrap()
}
