//! Depth-first search for proper and complete colorings.
//!
//! Vertices are assigned in a fixed order; each vertex may take any color
//! already in use or the next unused one, so color classes are labeled by
//! first appearance. In complete mode the search keeps a count of how often
//! each k-subset of colors has been realized by a fully colored edge and
//! prunes with three admissible bounds:
//!
//! 1. uncovered subsets never exceed the number of edges still open;
//! 2. unused colors never exceed the number of unassigned vertices;
//! 3. for every used color `c`, the uncovered subsets avoiding `c` never
//!    exceed the open edges that do not already contain `c`. When a class
//!    meets every edge this forces failure, since no edge can then realize a
//!    subset without `c`.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::SubsetRanker;
use crate::hypergraph::{Coloring, Hypergraph};

use super::{Budget, Outcome, SearchResult, SolverConfig};

const UNSET: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Mode {
    Proper,
    Complete,
}

pub(crate) struct Problem<'a> {
    h: &'a Hypergraph,
    t: usize,
    k: usize,
    mode: Mode,
    order: Vec<usize>,
    neighbors: Vec<Vec<u32>>,
    incident: Vec<Vec<u32>>,
    ranker: Option<SubsetRanker>,
    num_subsets: usize,
}

/// Descending degree; ties go to the vertex sharing most edges with the
/// vertices already placed, then to `seed`-dependent or id order.
pub(crate) fn vertex_order(h: &Hypergraph, seed: u64) -> Vec<usize> {
    let n = h.num_vertices();
    let deg = h.degrees();
    let shadow = h.shadow();
    let mut tiebreak: Vec<usize> = (0..n).collect();
    if seed != 0 {
        tiebreak.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (deg[v], links[v], std::cmp::Reverse(tiebreak[v])))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for u in shadow[v].iter() {
            links[u] += 1;
        }
    }
    order
}

impl<'a> Problem<'a> {
    pub(crate) fn new(h: &'a Hypergraph, t: usize, mode: Mode, seed: u64) -> Self {
        let k = h.uniformity();
        let neighbors = h
            .shadow()
            .iter()
            .map(|row| row.iter().map(|u| u as u32).collect())
            .collect();
        let ranker = (mode == Mode::Complete && t >= k).then(|| SubsetRanker::new(t, k));
        let num_subsets = ranker.as_ref().map_or(0, |r| r.count() as usize);
        Problem {
            h,
            t,
            k,
            mode,
            order: vertex_order(h, seed),
            neighbors,
            incident: h.incidence_lists(),
            ranker,
            num_subsets,
        }
    }

    /// Cases decided without search.
    fn trivial_outcome(&self) -> Option<Outcome> {
        let (n, m) = (self.h.num_vertices(), self.h.num_edges());
        match self.mode {
            Mode::Proper => {
                if n == 0 {
                    return Some(Outcome::Found(Coloring::new(vec![], self.t).unwrap()));
                }
                if self.t == 0 || (m > 0 && self.t < self.k) {
                    return Some(Outcome::Infeasible);
                }
            }
            Mode::Complete => {
                if m == 0 || self.t < self.k || self.t > n || self.num_subsets > m {
                    return Some(Outcome::Infeasible);
                }
            }
        }
        None
    }
}

struct State {
    color: Vec<u32>,
    filled: Vec<u8>,
    cover: Vec<u32>,
    uncovered: usize,
    open_edges: usize,
    open_with: Vec<usize>,
    uncovered_with: Vec<usize>,
    used: usize,
    buf: Vec<usize>,
}

impl State {
    fn new(p: &Problem) -> Self {
        let per_color = if p.num_subsets > 0 {
            crate::combinatorics::binomial(p.t - 1, p.k - 1) as usize
        } else {
            0
        };
        State {
            color: vec![UNSET; p.h.num_vertices()],
            filled: vec![0; p.h.num_edges()],
            cover: vec![0; p.num_subsets],
            uncovered: p.num_subsets,
            open_edges: p.h.num_edges(),
            open_with: vec![0; p.t],
            uncovered_with: vec![per_color; p.t],
            used: 0,
            buf: vec![0; p.k],
        }
    }

    fn can_take(&self, p: &Problem, v: usize, c: u32) -> bool {
        p.neighbors[v].iter().all(|&u| self.color[u as usize] != c)
    }

    fn assign(&mut self, p: &Problem, v: usize, c: u32) {
        self.color[v] = c;
        if p.mode == Mode::Proper {
            return;
        }
        for &e in &p.incident[v] {
            let e = e as usize;
            self.filled[e] += 1;
            if (self.filled[e] as usize) < p.k {
                self.open_with[c as usize] += 1;
                continue;
            }
            let edge = p.h.edge(e);
            for (slot, &u) in self.buf.iter_mut().zip(edge) {
                *slot = self.color[u as usize] as usize;
            }
            for &u in edge {
                if u as usize != v {
                    self.open_with[self.color[u as usize] as usize] -= 1;
                }
            }
            self.open_edges -= 1;
            self.buf.sort_unstable();
            let r = p.ranker.as_ref().expect("complete mode").rank(&self.buf);
            self.cover[r] += 1;
            if self.cover[r] == 1 {
                self.uncovered -= 1;
                for &col in &self.buf {
                    self.uncovered_with[col] -= 1;
                }
            }
        }
    }

    fn unassign(&mut self, p: &Problem, v: usize) {
        let c = self.color[v];
        if p.mode == Mode::Complete {
            for &e in p.incident[v].iter().rev() {
                let e = e as usize;
                if (self.filled[e] as usize) < p.k {
                    self.open_with[c as usize] -= 1;
                } else {
                    let edge = p.h.edge(e);
                    for (slot, &u) in self.buf.iter_mut().zip(edge) {
                        *slot = self.color[u as usize] as usize;
                    }
                    for &u in edge {
                        if u as usize != v {
                            self.open_with[self.color[u as usize] as usize] += 1;
                        }
                    }
                    self.open_edges += 1;
                    self.buf.sort_unstable();
                    let r = p.ranker.as_ref().expect("complete mode").rank(&self.buf);
                    self.cover[r] -= 1;
                    if self.cover[r] == 0 {
                        self.uncovered += 1;
                        for &col in &self.buf {
                            self.uncovered_with[col] += 1;
                        }
                    }
                }
                self.filled[e] -= 1;
            }
        }
        self.color[v] = UNSET;
    }

    fn feasible(&self, p: &Problem, depth: usize) -> bool {
        let remaining = p.order.len() - depth;
        if p.mode == Mode::Proper {
            return true;
        }
        if p.t - self.used > remaining || self.uncovered > self.open_edges {
            return false;
        }
        (0..self.used)
            .all(|c| self.uncovered - self.uncovered_with[c] <= self.open_edges - self.open_with[c])
    }

    fn witness(&self, p: &Problem) -> Coloring {
        Coloring::new(self.color.iter().map(|&c| c as usize).collect(), p.t)
            .expect("colors below t")
    }
}

/// Shared between workers.
struct Shared {
    nodes: AtomicU64,
    budget: Budget,
    /// Lowest task index that has produced a witness.
    best_task: AtomicUsize,
}

enum Stop {
    Found,
    Budget,
    Preempted,
}

struct Runner<'p, 'a> {
    p: &'p Problem<'a>,
    shared: &'p Shared,
    task: usize,
    /// Global node count as of the last flush.
    seen: u64,
    local_nodes: u64,
}

impl Runner<'_, '_> {
    fn flush(&mut self) {
        self.seen = self
            .shared
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed)
            + self.local_nodes;
        self.local_nodes = 0;
    }

    fn dfs(&mut self, s: &mut State, depth: usize) -> Result<(), Stop> {
        if depth == self.p.order.len() {
            // feasibility at the last step leaves nothing uncovered
            return Err(Stop::Found);
        }
        let v = self.p.order[depth];
        let limit = (s.used + 1).min(self.p.t) as u32;
        for c in 0..limit {
            if !s.can_take(self.p, v, c) {
                continue;
            }
            self.local_nodes += 1;
            if self.shared.budget.exceeded(self.seen + self.local_nodes) {
                return Err(Stop::Budget);
            }
            if self.local_nodes >= 1024 {
                self.flush();
                if self.shared.best_task.load(Ordering::Relaxed) < self.task {
                    return Err(Stop::Preempted);
                }
            }
            let fresh = c as usize == s.used;
            if fresh {
                s.used += 1;
            }
            s.assign(self.p, v, c);
            let r = if s.feasible(self.p, depth + 1) {
                self.dfs(s, depth + 1)
            } else {
                Ok(())
            };
            r?;
            s.unassign(self.p, v);
            if fresh {
                s.used -= 1;
            }
        }
        Ok(())
    }
}

/// Enumerates feasible assignments of the first `depth` ordered vertices.
fn prefixes(p: &Problem, depth: usize) -> Vec<Vec<u32>> {
    fn rec(
        p: &Problem,
        s: &mut State,
        d: usize,
        depth: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if d == depth {
            out.push(cur.clone());
            return;
        }
        let v = p.order[d];
        for c in 0..(s.used + 1).min(p.t) as u32 {
            if !s.can_take(p, v, c) {
                continue;
            }
            let fresh = c as usize == s.used;
            if fresh {
                s.used += 1;
            }
            s.assign(p, v, c);
            if s.feasible(p, d + 1) {
                cur.push(c);
                rec(p, s, d + 1, depth, cur, out);
                cur.pop();
            }
            s.unassign(p, v);
            if fresh {
                s.used -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        p,
        &mut State::new(p),
        0,
        depth.min(p.order.len()),
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Witness if found, and whether the budget ran out.
type TaskResult = (Option<Coloring>, bool);

fn run_task(p: &Problem, shared: &Shared, task: usize, prefix: &[u32]) -> TaskResult {
    let mut s = State::new(p);
    for (d, &c) in prefix.iter().enumerate() {
        if c as usize == s.used {
            s.used += 1;
        }
        s.assign(p, p.order[d], c);
    }
    let mut runner = Runner {
        p,
        shared,
        task,
        seen: shared.nodes.load(Ordering::Relaxed),
        local_nodes: 0,
    };
    let r = runner.dfs(&mut s, prefix.len());
    runner.flush();
    match r {
        Err(Stop::Found) => {
            shared.best_task.fetch_min(task, Ordering::Relaxed);
            (Some(s.witness(p)), false)
        }
        Err(Stop::Budget) => (None, true),
        Err(Stop::Preempted) => (None, false),
        Ok(()) => (None, false),
    }
}

pub(crate) fn solve(p: &Problem, config: &SolverConfig) -> SearchResult {
    if let Some(outcome) = p.trivial_outcome() {
        return SearchResult { outcome, nodes: 0 };
    }
    let shared = Shared {
        nodes: AtomicU64::new(0),
        budget: config.budget,
        best_task: AtomicUsize::new(usize::MAX),
    };
    let workers = config.workers.max(1);
    let tasks: Vec<Vec<u32>> = if workers == 1 {
        vec![Vec::new()]
    } else {
        let mut depth = 1;
        let mut tasks = prefixes(p, depth);
        while tasks.len() < 4 * workers && depth < p.order.len().min(8) {
            depth += 1;
            tasks = prefixes(p, depth);
        }
        tasks
    };

    let results: Vec<TaskResult> = if workers == 1 {
        vec![run_task(p, &shared, 0, &tasks[0])]
    } else {
        let next = AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Option<TaskResult>>> =
            tasks.iter().map(|_| std::sync::Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= tasks.len() {
                        break;
                    }
                    let r = if shared.best_task.load(Ordering::Relaxed) < i {
                        (None, false)
                    } else {
                        run_task(p, &shared, i, &tasks[i])
                    };
                    *slots[i].lock().unwrap() = Some(r);
                });
            }
        });
        slots
            .into_iter()
            .map(|m| m.into_inner().unwrap().expect("every task ran"))
            .collect()
    };

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let outcome = if let Some(w) = results.iter().find_map(|(w, _)| w.clone()) {
        Outcome::Found(w)
    } else if results.iter().any(|(_, exhausted)| *exhausted) {
        Outcome::BudgetExhausted
    } else {
        Outcome::Infeasible
    };
    SearchResult { outcome, nodes }
}
