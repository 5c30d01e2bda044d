//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Time limits are pinned below.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hypercolor::combinatorics::binomial;
use hypercolor::constructions::{
    regular15, theorem3, theorem3_part_coloring, theorem3_position_coloring, Theorem3Params,
};
use hypercolor::gap_search::{
    split_search, structural_filters, verify_hit, SplitSearchConfig, Target, Verification,
};
use hypercolor::hypergraph::{independent_sets, is_complete, is_proper};
use hypercolor::planar::{
    canonical_code, default_face_target, enumerate_by_vertex_splitting, enumerate_with_codes,
    find_gap_face_hypergraphs,
};
use hypercolor::solver::{brute_force_spectrum, exists_complete, proper_coloring, spectrum};
use hypercolor::{Budget, Hypergraph, SolverConfig, SpectrumReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

use common::{random_hypergraph, triangulation_oracle};

const REGULAR15_LIMIT: Duration = Duration::from_secs(60);
const THEOREM3_LIMIT: Duration = Duration::from_secs(120);
const ORDER9_LIMIT: Duration = Duration::from_secs(10 * 60);
const ORDER12_LIMIT: Duration = Duration::from_secs(2 * 60 * 60);
const ENUMERATION_LIMIT: Duration = Duration::from_secs(30 * 60);
const FACE_GAP_LIMIT: Duration = Duration::from_secs(2 * 60 * 60);

/// Counts of triangulation classes for n = 8..=12 as cross-validated by the
/// two generators.
const CLASS_COUNTS: [(usize, usize); 5] = [(8, 14), (9, 50), (10, 233), (11, 1249), (12, 7595)];

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let e = start.elapsed();
    ensure(e < limit, || format!("took {e:.1?}, limit {limit:?}"))?;
    Ok(e)
}

/// Every solved report passes through here for the counting bound.
#[derive(Default)]
struct Ledger {
    solved: usize,
    violations: Vec<String>,
}

impl Ledger {
    fn record(&mut self, h: &Hypergraph, r: &SpectrumReport) {
        self.solved += 1;
        if r.psi > 0 && binomial(r.psi, h.uniformity()) > h.num_edges() as u64 {
            self.violations.push(h.to_json());
        }
    }
}

fn regular15_criterion(ledger: &mut Ledger) -> Check {
    let start = Instant::now();
    let cfg = SolverConfig::with_budget(Budget::unlimited());
    let h = regular15();
    let four = exists_complete(&h, 4, &cfg);
    ensure(four.outcome.is_infeasible(), || {
        "complete 4-coloring not refuted".into()
    })?;
    let r = spectrum(&h, &cfg);
    ledger.record(&h, &r);
    ensure(r.chi == 3 && r.psi == 5, || {
        format!("chi={} psi={}", r.chi, r.psi)
    })?;
    ensure(r.feasible == [3, 5], || {
        format!("feasible {:?}", r.feasible)
    })?;
    let e = within(start, REGULAR15_LIMIT)?;
    Ok(format!(
        "chi=3 psi=5 spectrum {{3,5}}, t=4 refuted in {} nodes ({e:.1?})",
        four.nodes
    ))
}

fn theorem3_case(k: usize) -> Check {
    let r = (k - 1) * (k + 2) + 6;
    let start = Instant::now();
    let p = Theorem3Params::new(k, r).map_err(|e| e.to_string())?;
    let h = theorem3(p);
    let n = h.num_vertices();
    let mut pair = vec![false; n * n];
    for e in h.edges() {
        let mut parts = BTreeSet::new();
        let mut positions = BTreeSet::new();
        for &v in e {
            parts.insert(p.part_of(v));
            positions.insert(p.position_of(v));
        }
        ensure(positions.len() == k, || format!("(a1) fails on {e:?}"))?;
        ensure(parts.len() == k, || format!("(a2) fails on {e:?}"))?;
        for &a in e {
            for &b in e {
                pair[a as usize * n + b as usize] = true;
            }
        }
    }
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if p.part_of(a) != p.part_of(b) && p.position_of(a) != p.position_of(b) {
                ensure(pair[a as usize * n + b as usize], || {
                    format!("(a3) fails on {a},{b}")
                })?;
            }
        }
    }
    let part = theorem3_part_coloring(p);
    ensure(is_complete(&h, &part).unwrap(), || {
        "part coloring not complete".into()
    })?;
    let pos = theorem3_position_coloring(p);
    ensure(is_complete(&h, &pos).unwrap(), || {
        "position coloring not complete".into()
    })?;
    let e = within(start, THEOREM3_LIMIT)?;
    Ok(format!(
        "k={k} r={r}: {} edges, (a1)(a2)(a3) hold, part/position colorings complete, gap {:?} not verified ({e:.1?})",
        h.num_edges(),
        p.gap_range()
    ))
}

fn theorem3_criterion() -> Check {
    let mut lines = Vec::new();
    for k in 3..=5 {
        lines.push(theorem3_case(k)?);
    }
    Ok(lines.join("; "))
}

fn order9_criterion(ledger: &mut Ledger) -> Check {
    let start = Instant::now();
    let cfg = SplitSearchConfig::new(5, vec![0, 1, 2, 3], Target::new([3, 5], [4]));
    let out = split_search(&cfg);
    let hit = out.hits.first().ok_or("no hit within budget")?;
    let h = hit.hypergraph();
    ensure((h.num_vertices(), h.num_edges()) == (9, 10), || {
        format!(
            "hit has {} vertices, {} edges",
            h.num_vertices(),
            h.num_edges()
        )
    })?;
    let oracle = brute_force_spectrum(&h, 5).map_err(|e| e.to_string())?;
    ensure(oracle == BTreeSet::from([3, 5]), || {
        format!("oracle spectrum {oracle:?}")
    })?;
    ledger.record(&h, &hit.report);
    let e = within(start, ORDER9_LIMIT)?;
    Ok(format!(
        "hit after {} candidates, brute force confirms {{3,5}} ({e:.1?})",
        out.stats.candidates
    ))
}

fn order12_criterion(ledger: &mut Ledger) -> Check {
    let start = Instant::now();
    let mut cfg = SplitSearchConfig::new(6, (0..6).collect(), Target::new([3, 6], [4, 5]));
    cfg.budget = 5_000_000;
    let out = split_search(&cfg);
    let hit = out.hits.first().ok_or("no hit within budget")?;
    let h = hit.hypergraph();
    ensure((h.num_vertices(), h.num_edges()) == (12, 20), || {
        format!(
            "hit has {} vertices, {} edges",
            h.num_vertices(),
            h.num_edges()
        )
    })?;
    let full = SolverConfig::with_budget(Budget::unlimited());
    for t in [4, 5] {
        let res = exists_complete(&h, t, &full);
        ensure(res.outcome.is_infeasible(), || format!("t={t} not refuted"))?;
    }
    ensure(exists_complete(&h, 6, &full).outcome.is_found(), || {
        "t=6 not found".into()
    })?;
    let sets = independent_sets(&h, 4).len();
    let features = structural_filters(&h);
    ensure(sets == 3 && features.independence_number == 4, || {
        format!(
            "{sets} independent 4-sets, alpha {}",
            features.independence_number
        )
    })?;
    ensure(hit.report.psi >= 2 * hit.report.chi, || {
        "psi < 2 chi".into()
    })?;
    ensure(
        verify_hit(&h, &cfg.target) == Some(Verification::ExhaustiveSearch),
        || "re-verification failed".into(),
    )?;
    ledger.record(&h, &hit.report);
    let e = within(start, ORDER12_LIMIT)?;
    Ok(format!(
        "hit after {} candidates: chi={} psi={} feasible {:?}, three independent 4-sets ({e:.1?})",
        out.stats.candidates, hit.report.chi, hit.report.psi, hit.report.feasible
    ))
}

fn enumeration_criterion() -> Check {
    for (n, expected) in [(4, 1), (5, 1), (6, 2), (7, 5)] {
        let oracle = triangulation_oracle::classes(n);
        let classes = enumerate_with_codes(n, 1).map_err(|e| e.to_string())?;
        let mut ours: Vec<u64> = classes
            .values()
            .map(|e| triangulation_oracle::graph_mask(n, &e.edges()))
            .collect();
        ours.sort_unstable();
        ensure(oracle.len() == expected && ours == oracle, || {
            format!(
                "n={n}: oracle {} classes, enumeration {}",
                oracle.len(),
                ours.len()
            )
        })?;
    }
    let mut n12 = Duration::ZERO;
    for n in 4..=12 {
        let start = Instant::now();
        let classes = enumerate_with_codes(n, 1).map_err(|e| e.to_string())?;
        if n == 12 {
            n12 = within(start, ENUMERATION_LIMIT)?;
        }
        let codes: HashSet<_> = classes.keys().cloned().collect();
        for e in classes.values() {
            ensure(
                e.num_vertices() as i64 - e.num_edges() as i64 + e.faces().len() as i64 == 2,
                || format!("Euler fails at n={n}"),
            )?;
            ensure(e.is_triangulation(), || {
                format!("non-triangular face at n={n}")
            })?;
            for (u, v) in e.edges() {
                if let Ok(f) = e.flip(u, v) {
                    ensure(codes.contains(&canonical_code(&f)), || {
                        format!("flip escapes at n={n}")
                    })?;
                }
            }
        }
        if let Some(&(_, expected)) = CLASS_COUNTS.iter().find(|(m, _)| *m == n) {
            let split = enumerate_by_vertex_splitting(n).map_err(|e| e.to_string())?;
            let split_codes: HashSet<_> = split.iter().map(canonical_code).collect();
            ensure(
                classes.len() == expected && split.len() == expected && split_codes == codes,
                || {
                    format!(
                        "n={n}: flips {} classes, splitting {}",
                        classes.len(),
                        split.len()
                    )
                },
            )?;
        }
    }
    Ok(format!(
        "oracle agrees on (1,1,2,5); flip closure and Euler hold n<=12; generators agree on {:?}; n=12 in {n12:.1?}",
        CLASS_COUNTS.map(|c| c.1)
    ))
}

fn face_gap_criterion(ledger: &mut Ledger) -> Check {
    let start = Instant::now();
    let out = find_gap_face_hypergraphs(12, &default_face_target(), &SolverConfig::default())
        .map_err(|e| e.to_string())?;
    ensure(out.undecided.is_empty(), || {
        format!("{} classes undecided", out.undecided.len())
    })?;
    ensure(out.hits.len() == 1, || format!("{} hits", out.hits.len()))?;
    let hit = &out.hits[0];
    let r = &hit.report;
    ensure(hit.embedding.is_eulerian(), || "hit not Eulerian".into())?;
    ensure(
        r.chi == 3 && r.psi == 6 && hit.hypergraph.num_edges() == 20,
        || {
            format!(
                "chi={} psi={} edges={}",
                r.chi,
                r.psi,
                hit.hypergraph.num_edges()
            )
        },
    )?;
    ensure(r.is_feasible(6) && !r.is_feasible(5), || {
        format!("feasible {:?}", r.feasible)
    })?;
    for s in &out.hits {
        ledger.record(&s.hypergraph, &s.report);
    }
    let t4 = if r.is_feasible(4) {
        "feasible"
    } else if r.is_unknown(4) {
        "unknown"
    } else {
        "infeasible"
    };
    let e = within(start, FACE_GAP_LIMIT)?;
    Ok(format!(
        "{} Eulerian of {} classes, unique hit degrees {:?}, t=4 {t4} ({e:.1?})",
        out.eulerian, out.classes, hit.class.degrees
    ))
}

fn property_criterion(ledger: &mut Ledger) -> Check {
    let cfg = SolverConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for i in 0..200 {
        let n = rng.gen_range(2..=8);
        let h = random_hypergraph(&mut rng, n, 2);
        let r = spectrum(&h, &cfg);
        ledger.record(&h, &r);
        let expected: Vec<usize> = (r.chi..=r.psi).collect();
        ensure(r.unknown.is_empty() && r.feasible == expected, || {
            format!(
                "(i) instance {i} feasible {:?}: {}",
                r.feasible,
                h.to_json()
            )
        })?;
    }
    let mut disagreements = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=7);
        let h = random_hypergraph(&mut rng, n, 3);
        let oracle = brute_force_spectrum(&h, 5).map_err(|e| e.to_string())?;
        let r = spectrum(&h, &cfg);
        ledger.record(&h, &r);
        let ours: BTreeSet<usize> = r.feasible.iter().copied().filter(|&t| t <= 5).collect();
        if ours != oracle || !r.unknown.is_empty() {
            disagreements += 1;
        }
    }
    ensure(disagreements == 0, || {
        format!("(ii) {disagreements} disagreements")
    })?;
    let mut eulerian = 0;
    for n in 4..=10 {
        for e in enumerate_with_codes(n, 1)
            .map_err(|e| e.to_string())?
            .values()
        {
            let h = e.face_hypergraph().map_err(|e| e.to_string())?;
            let colorable = proper_coloring(&h, 3, &cfg).outcome.is_found();
            ensure(colorable == e.is_eulerian(), || {
                format!("(iv) fails at n={n}")
            })?;
            if colorable {
                eulerian += 1;
                let c = e.three_coloring().map_err(|e| e.to_string())?;
                ensure(is_proper(&h, &c).unwrap(), || "(iv) bad 3-coloring".into())?;
            }
        }
    }
    ensure(ledger.violations.is_empty(), || {
        format!("(iii) counting bound violated: {}", ledger.violations[0])
    })?;
    Ok(format!(
        "(i) 200 graphs interpolate; (ii) 0 disagreements in 200; (iii) C(psi,k) <= |E| on {} solved instances; (iv) {eulerian} Eulerian classes n<=10 all 3-colorable, others not",
        ledger.solved
    ))
}

fn main() -> ExitCode {
    let mut ledger = Ledger::default();
    let mut results: BTreeMap<usize, (&str, Check)> = BTreeMap::new();
    let t = Instant::now();
    results.insert(
        1,
        ("regular15 reproduction", regular15_criterion(&mut ledger)),
    );
    results.insert(2, ("theorem3 construction", theorem3_criterion()));
    results.insert(3, ("order-9 rediscovery", order9_criterion(&mut ledger)));
    results.insert(4, ("order-12 rediscovery", order12_criterion(&mut ledger)));
    results.insert(5, ("triangulation enumeration", enumeration_criterion()));
    results.insert(
        6,
        ("order-12 face hypergraph", face_gap_criterion(&mut ledger)),
    );
    results.insert(7, ("property suites", property_criterion(&mut ledger)));
    let mut failed = 0;
    for (i, (name, r)) in &results {
        match r {
            Ok(msg) => println!("PASS {i} {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {i} {name}: {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        results.len() - failed,
        results.len(),
        t.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
