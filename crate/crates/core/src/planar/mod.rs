//! Triangulations of the sphere, their face hypergraphs, and isomorph-free
//! enumeration.

mod canon;
mod embedding;
mod enumerate;

use serde::Serialize;

pub use canon::{canonical_code, canonical_embedding, PlanarCode};
pub use embedding::{octahedron, stacked, tetrahedron, Embedding, FlipRefusal};
pub use enumerate::{
    enumerate_by_vertex_splitting, enumerate_triangulations, enumerate_with_codes, MAX_VERTICES,
    MIN_VERTICES,
};

use crate::error::EmbeddingError;
use crate::gap_search::Target;
use crate::hypergraph::Hypergraph;
use crate::solver::{spectrum, SolverConfig, SpectrumReport};

/// Index entry for one triangulation class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub index: usize,
    /// Hex of the canonical code bytes.
    pub code: String,
    pub degrees: Vec<usize>,
    pub eulerian: bool,
}

impl ClassSummary {
    pub fn new(index: usize, e: &Embedding) -> Self {
        let mut degrees = e.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        ClassSummary {
            index,
            code: canonical_code(e)
                .to_bytes()
                .iter()
                .map(|b| format!("{b:02x}"))
                .collect(),
            degrees,
            eulerian: e.is_eulerian(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FaceGapHit {
    pub class: ClassSummary,
    pub embedding: Embedding,
    pub hypergraph: Hypergraph,
    pub report: SpectrumReport,
}

#[derive(Clone, Debug, Default)]
pub struct FaceGapSearch {
    pub classes: usize,
    pub eulerian: usize,
    pub hits: Vec<FaceGapHit>,
    /// Eulerian classes whose spectrum left a target value unknown.
    pub undecided: Vec<ClassSummary>,
}

/// Default target: complete 6-coloring exists, complete 5-coloring does not.
pub fn default_face_target() -> Target {
    Target::new([6], [5])
}

/// Scans the Eulerian triangulations on `n` vertices for face hypergraphs
/// whose spectrum matches `target`.
pub fn find_gap_face_hypergraphs(
    n: usize,
    target: &Target,
    cfg: &SolverConfig,
) -> Result<FaceGapSearch, EmbeddingError> {
    let all: Vec<Embedding> = enumerate_with_codes(n, cfg.workers)?
        .into_values()
        .collect();
    let mut out = FaceGapSearch {
        classes: all.len(),
        ..Default::default()
    };
    for (index, e) in all.into_iter().enumerate() {
        if !e.is_eulerian() {
            continue;
        }
        out.eulerian += 1;
        let h = e.face_hypergraph()?;
        let report = spectrum(&h, cfg);
        let class = ClassSummary::new(index, &e);
        if target.matches(&report) {
            out.hits.push(FaceGapHit {
                class,
                embedding: e,
                hypergraph: h,
                report,
            });
        } else if target
            .require
            .iter()
            .chain(&target.forbid)
            .any(|&t| report.is_unknown(t))
        {
            out.undecided.push(class);
        }
    }
    Ok(out)
}
