//! Search over split lifts of complete uniform hypergraphs for instances
//! whose complete-coloring spectrum has prescribed members and gaps.
//!
//! Small lift spaces are enumerated exhaustively, one pattern per orbit of
//! the base symmetry group. Larger ones use randomized restarts: each
//! restart plants a proper coloring with `min(require)` colors, draws
//! compatible lifts, then walks single-lift flips that keep the planted
//! coloring proper, preferring hypergraphs with fewer independent k-sets.
//! Recently visited isomorphism classes are tabu.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{split_lift, SplitPattern};
use crate::hypergraph::{covers_all, extend_independent, Hypergraph};
use crate::solver::{
    brute_force_spectrum, exists_complete, proper_coloring, spectrum, SolverConfig, SpectrumReport,
};

/// Predicate on a spectrum: every `require` value feasible, every `forbid`
/// value infeasible, and ψ equal to `psi` when given.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    pub require: BTreeSet<usize>,
    pub forbid: BTreeSet<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<usize>,
}

impl Target {
    pub fn new(
        require: impl IntoIterator<Item = usize>,
        forbid: impl IntoIterator<Item = usize>,
    ) -> Self {
        Target {
            require: require.into_iter().collect(),
            forbid: forbid.into_iter().collect(),
            psi: None,
        }
    }

    pub fn with_psi(mut self, psi: usize) -> Self {
        self.psi = Some(psi);
        self
    }

    pub fn matches(&self, r: &SpectrumReport) -> bool {
        self.require.iter().all(|&t| r.is_feasible(t))
            && self
                .forbid
                .iter()
                .all(|&t| !r.is_feasible(t) && !r.is_unknown(t))
            && self
                .psi
                .is_none_or(|p| p == r.psi && r.unknown.iter().all(|&u| u < p))
    }
}

/// Cheap independent-set features used to screen candidates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFeatures {
    pub independence_number: usize,
    /// Entry `s` counts independent sets of size `s`.
    pub independent_sets_by_size: Vec<usize>,
    pub maximum_independent_sets: usize,
    /// Every independent set one smaller than maximum lies in a maximum one.
    pub smaller_embed_in_maximum: bool,
    /// Every maximum independent set meets every edge.
    pub maximum_sets_cover_all: bool,
}

pub fn structural_filters(h: &Hypergraph) -> StructuralFeatures {
    let n = h.num_vertices();
    let shadow = h.shadow();
    let mut by_size: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new()]];
    loop {
        let size = by_size.len();
        if size > n {
            break;
        }
        let mut sets = Vec::new();
        extend_independent(&shadow, size, &BitSet::full(n), &mut Vec::new(), &mut |s| {
            sets.push(s.to_vec())
        });
        if sets.is_empty() {
            break;
        }
        by_size.push(sets);
    }
    let alpha = by_size.len() - 1;
    let maximum = &by_size[alpha];
    let smaller_embed_in_maximum = alpha == 0
        || by_size[alpha - 1]
            .iter()
            .all(|s| maximum.iter().any(|m| s.iter().all(|v| m.contains(v))));
    StructuralFeatures {
        independence_number: alpha,
        independent_sets_by_size: by_size.iter().map(Vec::len).collect(),
        maximum_independent_sets: maximum.len(),
        smaller_embed_in_maximum,
        maximum_sets_cover_all: maximum.iter().all(|m| covers_all(h, m)),
    }
}

fn count_independent(h: &Hypergraph, size: usize) -> usize {
    let mut count = 0;
    extend_independent(
        &h.shadow(),
        size,
        &BitSet::full(h.num_vertices()),
        &mut Vec::new(),
        &mut |_| count += 1,
    );
    count
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSearchConfig {
    pub base_m: usize,
    pub k: usize,
    pub split: Vec<u32>,
    pub target: Target,
    /// Maximum number of candidates sent through the evaluation pipeline.
    pub budget: u64,
    pub seed: u64,
    pub workers: usize,
    /// Stop once this many distinct hits are known.
    pub max_hits: Option<usize>,
    /// Candidate evaluations per randomized restart.
    pub restart_length: u64,
    /// Per-decision solver settings inside the pipeline.
    pub solver: SolverConfig,
}

impl SplitSearchConfig {
    pub fn new(base_m: usize, split: Vec<u32>, target: Target) -> Self {
        SplitSearchConfig {
            base_m,
            k: 3,
            split,
            target,
            budget: 200_000,
            seed: 0,
            workers: 1,
            max_hits: Some(1),
            restart_length: 400,
            solver: SolverConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub exhaustive: bool,
    pub lift_space_log2: u32,
    pub restarts: u64,
    pub candidates: u64,
    pub duplicates: u64,
    pub pruned_structural: u64,
    pub pruned_chi: u64,
    pub pruned_gap: u64,
    pub rejected_final: u64,
}

impl SearchStats {
    fn absorb(&mut self, o: &SearchStats) {
        self.restarts += o.restarts;
        self.candidates += o.candidates;
        self.duplicates += o.duplicates;
        self.pruned_structural += o.pruned_structural;
        self.pruned_chi += o.pruned_chi;
        self.pruned_gap += o.pruned_gap;
        self.rejected_final += o.rejected_final;
    }
}

/// How a hit was re-checked before being emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    BruteForce,
    ExhaustiveSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitHit {
    pub pattern: SplitPattern,
    #[serde(skip)]
    pub hypergraph: Option<Hypergraph>,
    #[serde(skip)]
    pub canonical: Option<CanonicalForm>,
    pub report: SpectrumReport,
    pub features: StructuralFeatures,
    pub verified_by: Verification,
}

impl SplitHit {
    pub fn hypergraph(&self) -> Hypergraph {
        self.hypergraph
            .clone()
            .unwrap_or_else(|| split_lift(&self.pattern).expect("hit pattern is valid"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub hits: Vec<SplitHit>,
    pub stats: SearchStats,
}

enum Verdict {
    Hit(SpectrumReport),
    Structural,
    Chi,
    Gap,
    Final,
}

/// Fail-fast pipeline: independence screen, χ, forbidden values in
/// increasing order, required values, then the full spectrum.
fn evaluate(h: &Hypergraph, target: &Target, solver: &SolverConfig) -> Verdict {
    let n = h.num_vertices();
    if let Some(&t0) = target.require.first() {
        let alpha_needed = n.div_ceil(t0.max(1));
        if count_independent(h, alpha_needed) == 0 {
            return Verdict::Structural;
        }
        if !proper_coloring(h, t0, solver).outcome.is_found() {
            return Verdict::Chi;
        }
    }
    for &t in &target.forbid {
        if !exists_complete(h, t, solver).outcome.is_infeasible() {
            return Verdict::Gap;
        }
    }
    for &t in &target.require {
        if !exists_complete(h, t, solver).outcome.is_found() {
            return Verdict::Gap;
        }
    }
    let report = spectrum(h, solver);
    if target.matches(&report) {
        Verdict::Hit(report)
    } else {
        Verdict::Final
    }
}

/// Independent confirmation of a hit: the brute-force oracle when it fits
/// its cap, otherwise unlimited exhaustive search at every forbidden value.
pub fn verify_hit(h: &Hypergraph, target: &Target) -> Option<Verification> {
    let t_max = target
        .require
        .iter()
        .chain(&target.forbid)
        .copied()
        .chain(target.psi)
        .max()
        .unwrap_or(h.uniformity());
    let unlimited = SolverConfig::default();
    if let Ok(feasible) = brute_force_spectrum(h, t_max) {
        let ok = target.require.iter().all(|t| feasible.contains(t))
            && target.forbid.iter().all(|t| !feasible.contains(t));
        let psi_ok = target.psi.is_none_or(|p| {
            (p == 0 || feasible.contains(&p))
                && !exists_complete(h, p + 1, &unlimited).outcome.is_found()
                && (p + 1..=t_max).all(|t| !feasible.contains(&t))
        });
        return (ok && psi_ok).then_some(Verification::BruteForce);
    }
    let ok = target
        .forbid
        .iter()
        .all(|&t| exists_complete(h, t, &unlimited).outcome.is_infeasible())
        && target
            .require
            .iter()
            .all(|&t| exists_complete(h, t, &unlimited).outcome.is_found());
    ok.then_some(Verification::ExhaustiveSearch)
}

/// Local bookkeeping for one restart or one exhaustive sweep.
struct Evaluator<'c> {
    cfg: &'c SplitSearchConfig,
    seen: HashSet<CanonicalForm>,
    hits: Vec<SplitHit>,
    stats: SearchStats,
}

impl<'c> Evaluator<'c> {
    fn new(cfg: &'c SplitSearchConfig) -> Self {
        Evaluator {
            cfg,
            seen: HashSet::new(),
            hits: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    fn consider(&mut self, pattern: &SplitPattern, h: Hypergraph, canon: CanonicalForm) {
        if !self.seen.insert(canon.clone()) {
            self.stats.duplicates += 1;
            return;
        }
        self.stats.candidates += 1;
        match evaluate(&h, &self.cfg.target, &self.cfg.solver) {
            Verdict::Hit(report) => {
                let Some(verified_by) = verify_hit(&h, &self.cfg.target) else {
                    self.stats.rejected_final += 1;
                    return;
                };
                self.hits.push(SplitHit {
                    pattern: pattern.clone(),
                    features: structural_filters(&h),
                    hypergraph: Some(h),
                    canonical: Some(canon),
                    report,
                    verified_by,
                });
            }
            Verdict::Structural => self.stats.pruned_structural += 1,
            Verdict::Chi => self.stats.pruned_chi += 1,
            Verdict::Gap => self.stats.pruned_gap += 1,
            Verdict::Final => self.stats.rejected_final += 1,
        }
    }
}

/// Lift choices flattened to one bit per (base edge, split vertex) slot.
struct LiftSpace {
    base_edges: Vec<Vec<u32>>,
    arity: Vec<usize>,
    offsets: Vec<usize>,
    bits: usize,
}

impl LiftSpace {
    fn new(cfg: &SplitSearchConfig) -> Self {
        let base_edges = SplitPattern::base_edges(cfg.base_m, cfg.k);
        let arity = SplitPattern::lift_arity(cfg.base_m, cfg.k, &cfg.split);
        let mut offsets = Vec::with_capacity(arity.len());
        let mut bits = 0;
        for &a in &arity {
            offsets.push(bits);
            bits += a;
        }
        LiftSpace {
            base_edges,
            arity,
            offsets,
            bits,
        }
    }

    fn pattern(&self, cfg: &SplitSearchConfig, bits: &[u8]) -> SplitPattern {
        SplitPattern {
            k: cfg.k,
            base_m: cfg.base_m,
            split: cfg.split.clone(),
            lifts: self
                .offsets
                .iter()
                .zip(&self.arity)
                .map(|(&o, &a)| bits[o..o + a].to_vec())
                .collect(),
        }
    }
}

/// Least pattern in the orbit under permutations of the base vertices that
/// fix the split set, combined with swaps of the two copies.
pub fn canonical_pattern(p: &SplitPattern) -> SplitPattern {
    let m = p.base_m;
    let split: Vec<usize> = p.split.iter().map(|&v| v as usize).collect();
    let unsplit: Vec<usize> = (0..m).filter(|v| !split.contains(v)).collect();
    let base_edges = SplitPattern::base_edges(m, p.k);
    let edge_index: BTreeMap<Vec<u32>, usize> = base_edges
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut best = p.clone();
    let split_perms = permutations(&split);
    let unsplit_perms = permutations(&unsplit);
    for sp in &split_perms {
        for up in &unsplit_perms {
            let mut perm = vec![0usize; m];
            for (from, to) in split.iter().zip(sp) {
                perm[*from] = *to;
            }
            for (from, to) in unsplit.iter().zip(up) {
                perm[*from] = *to;
            }
            for swaps in 0u32..(1 << split.len()) {
                let mut lifts = vec![Vec::new(); base_edges.len()];
                for (e, lift) in base_edges.iter().zip(&p.lifts) {
                    let mut image: Vec<(u32, Option<u8>)> = Vec::with_capacity(e.len());
                    let mut choice = lift.iter();
                    for &v in e {
                        let to = perm[v as usize] as u32;
                        match split.iter().position(|&s| s == v as usize) {
                            Some(_) => {
                                let j = split.iter().position(|&s| s == to as usize).unwrap();
                                let c = choice.next().unwrap() ^ ((swaps >> j) & 1) as u8;
                                image.push((to, Some(c)));
                            }
                            None => image.push((to, None)),
                        }
                    }
                    image.sort_unstable();
                    let key: Vec<u32> = image.iter().map(|x| x.0).collect();
                    lifts[edge_index[&key]] = image.iter().filter_map(|x| x.1).collect();
                }
                if lifts < best.lifts {
                    best.lifts = lifts;
                }
            }
        }
    }
    best
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn exhaustive<'c>(cfg: &'c SplitSearchConfig, space: &LiftSpace) -> Evaluator<'c> {
    let mut ev = Evaluator::new(cfg);
    ev.stats.exhaustive = true;
    let mut bits = vec![0u8; space.bits];
    loop {
        let pattern = space.pattern(cfg, &bits);
        if canonical_pattern(&pattern) == pattern {
            let h = split_lift(&pattern).expect("valid pattern");
            let c = canonical_form(&h);
            ev.consider(&pattern, h, c);
        } else {
            ev.stats.duplicates += 1;
        }
        if cfg.max_hits.is_some_and(|m| ev.hits.len() >= m) {
            break;
        }
        let mut i = 0;
        while i < bits.len() && bits[i] == 1 {
            bits[i] = 0;
            i += 1;
        }
        if i == bits.len() {
            break;
        }
        bits[i] = 1;
    }
    ev
}

fn restart_seed(master: u64, index: u64) -> u64 {
    // splitmix64 step
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Planted {
    /// Allowed bit patterns per base edge.
    options: Vec<Vec<Vec<u8>>>,
}

fn plant(
    cfg: &SplitSearchConfig,
    space: &LiftSpace,
    classes: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Planted> {
    let n = cfg.base_m + cfg.split.len();
    let probe = SplitPattern::trivial(cfg.base_m, cfg.k, cfg.split.clone());
    for _ in 0..64 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut class = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            class[v] = i % classes;
        }
        let mut options = Vec::with_capacity(space.base_edges.len());
        for (e, &a) in space.base_edges.iter().zip(&space.arity) {
            let mut ok = Vec::new();
            for mask in 0u32..(1 << a) {
                let choice: Vec<u8> = (0..a).map(|j| ((mask >> j) & 1) as u8).collect();
                let mut it = choice.iter();
                let mut cls: Vec<usize> = e
                    .iter()
                    .map(|&v| {
                        let id = if cfg.split.contains(&v) {
                            probe.copy_id(v, *it.next().unwrap())
                        } else {
                            v
                        };
                        class[id as usize]
                    })
                    .collect();
                cls.sort_unstable();
                if cls.windows(2).all(|w| w[0] != w[1]) {
                    ok.push(choice);
                }
            }
            if ok.is_empty() {
                break;
            }
            options.push(ok);
        }
        if options.len() == space.base_edges.len() {
            return Some(Planted { options });
        }
    }
    None
}

fn random_restart<'c>(cfg: &'c SplitSearchConfig, space: &LiftSpace, index: u64) -> Evaluator<'c> {
    let mut rng = ChaCha8Rng::seed_from_u64(restart_seed(cfg.seed, index));
    let mut ev = Evaluator::new(cfg);
    ev.stats.restarts = 1;
    let classes = cfg.target.require.first().copied();
    let planted = classes.and_then(|c| plant(cfg, space, c, &mut rng));

    let mut bits = vec![0u8; space.bits];
    match &planted {
        Some(pl) => {
            for (i, opts) in pl.options.iter().enumerate() {
                let o = space.offsets[i];
                bits[o..o + space.arity[i]].copy_from_slice(opts.choose(&mut rng).unwrap());
            }
        }
        None => bits.iter_mut().for_each(|b| *b = rng.gen_range(0..2)),
    }
    let build = |bits: &[u8]| {
        let pattern = space.pattern(cfg, bits);
        let h = split_lift(&pattern).expect("valid pattern");
        (pattern, h)
    };
    let (pattern, h) = build(&bits);
    let mut score = count_independent(&h, cfg.k);
    let canon = canonical_form(&h);
    let mut tabu: VecDeque<CanonicalForm> = VecDeque::new();
    let mut tabu_set: HashSet<CanonicalForm> = HashSet::new();
    tabu.push_back(canon.clone());
    tabu_set.insert(canon.clone());
    ev.consider(&pattern, h, canon);

    // edges whose lift can change at all
    let movable: Vec<usize> = (0..space.arity.len())
        .filter(|&i| match &planted {
            Some(pl) => pl.options[i].len() > 1,
            None => space.arity[i] > 0,
        })
        .collect();
    let mut attempts = 0u64;
    while ev.stats.candidates < cfg.restart_length
        && attempts < cfg.restart_length * 50
        && !movable.is_empty()
    {
        if cfg.max_hits.is_some_and(|m| ev.hits.len() >= m) {
            break;
        }
        attempts += 1;
        let edge = *movable.choose(&mut rng).unwrap();
        let (o, a) = (space.offsets[edge], space.arity[edge]);
        let previous = bits[o..o + a].to_vec();
        match &planted {
            Some(pl) => {
                let others: Vec<&Vec<u8>> = pl.options[edge]
                    .iter()
                    .filter(|c| **c != previous)
                    .collect();
                bits[o..o + a].copy_from_slice(others.choose(&mut rng).unwrap());
            }
            None => bits[o + rng.gen_range(0..a)] ^= 1,
        }
        let (pattern, h) = build(&bits);
        let canon = canonical_form(&h);
        if tabu_set.contains(&canon) {
            bits[o..o + a].copy_from_slice(&previous);
            continue;
        }
        let s = count_independent(&h, cfg.k);
        if s > score && !rng.gen_bool(0.1) {
            bits[o..o + a].copy_from_slice(&previous);
            continue;
        }
        score = s;
        tabu.push_back(canon.clone());
        tabu_set.insert(canon.clone());
        if tabu.len() > 1000 {
            let old = tabu.pop_front().unwrap();
            tabu_set.remove(&old);
        }
        ev.consider(&pattern, h, canon);
    }
    ev
}

/// Runs the search and returns verified hits sorted by canonical form,
/// pairwise non-isomorphic.
pub fn split_search(cfg: &SplitSearchConfig) -> SearchOutcome {
    let space = LiftSpace::new(cfg);
    let log2 = space.bits as u32;
    let fits = space.bits < 63 && (1u64 << space.bits) <= cfg.budget;

    let mut stats = SearchStats {
        lift_space_log2: log2,
        ..SearchStats::default()
    };
    let mut by_form: BTreeMap<CanonicalForm, SplitHit> = BTreeMap::new();
    if fits {
        let ev = exhaustive(cfg, &space);
        stats.absorb(&ev.stats);
        stats.exhaustive = true;
        for hit in ev.hits {
            by_form.entry(hit.canonical.clone().unwrap()).or_insert(hit);
        }
    } else {
        let restarts = cfg.budget.div_ceil(cfg.restart_length.max(1));
        let workers = cfg.workers.max(1) as u64;
        let mut next = 0u64;
        'waves: while next < restarts {
            let wave: Vec<u64> = (next..restarts.min(next + workers)).collect();
            next += wave.len() as u64;
            let results: Vec<Evaluator> = if workers == 1 {
                wave.iter()
                    .map(|&i| random_restart(cfg, &space, i))
                    .collect()
            } else {
                let slots: Vec<Mutex<Option<Evaluator>>> =
                    wave.iter().map(|_| Mutex::new(None)).collect();
                let cursor = AtomicUsize::new(0);
                std::thread::scope(|s| {
                    for _ in 0..wave.len() {
                        s.spawn(|| {
                            let j = cursor.fetch_add(1, Ordering::Relaxed);
                            *slots[j].lock().unwrap() = Some(random_restart(cfg, &space, wave[j]));
                        });
                    }
                });
                slots
                    .into_iter()
                    .map(|m| m.into_inner().unwrap().unwrap())
                    .collect()
            };
            for ev in results {
                stats.absorb(&ev.stats);
                for hit in ev.hits {
                    by_form.entry(hit.canonical.clone().unwrap()).or_insert(hit);
                }
                if cfg.max_hits.is_some_and(|m| by_form.len() >= m) {
                    break 'waves;
                }
            }
        }
    }
    SearchOutcome {
        hits: by_form.into_values().collect(),
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_uniform, regular15};

    #[test]
    fn features_regular15() {
        let f = structural_filters(&regular15());
        assert_eq!(f.independence_number, 5);
        assert_eq!(f.maximum_independent_sets, 3);
        assert!(f.maximum_sets_cover_all);
        assert!(f.smaller_embed_in_maximum);
        assert_eq!(f.independent_sets_by_size[4], 15);
    }

    #[test]
    fn features_k6() {
        let f = structural_filters(&complete_uniform(6, 3).unwrap());
        assert_eq!(f.independence_number, 1);
        assert_eq!(f.maximum_independent_sets, 6);
    }

    #[test]
    fn target_matching() {
        let r = spectrum(&regular15(), &SolverConfig::default());
        assert!(Target::new([3, 5], [4]).matches(&r));
        assert!(Target::new([3, 5], [4]).with_psi(5).matches(&r));
        assert!(!Target::new([4], []).matches(&r));
        assert!(!Target::new([], [5]).matches(&r));
        assert!(!Target::default().with_psi(0).matches(&r));
    }

    #[test]
    fn canonical_pattern_is_orbit_invariant() {
        let mut p = SplitPattern::trivial(4, 3, vec![0, 1, 2, 3]);
        p.lifts[1] = vec![1, 0, 1];
        let c = canonical_pattern(&p);
        assert_eq!(canonical_pattern(&c), c);
        assert!(c <= p);
        // relabeling-induced isomorphism is preserved
        let a = canonical_form(&split_lift(&p).unwrap());
        let b = canonical_form(&split_lift(&c).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn base4_psi_zero_has_no_hits() {
        let cfg = SplitSearchConfig {
            max_hits: None,
            ..SplitSearchConfig::new(4, vec![0, 1, 2, 3], Target::default().with_psi(0))
        };
        let out = split_search(&cfg);
        assert!(out.stats.exhaustive);
        assert_eq!(out.stats.lift_space_log2, 12);
        assert!(out.hits.is_empty());
        assert!(out.stats.candidates > 0);
    }
}
