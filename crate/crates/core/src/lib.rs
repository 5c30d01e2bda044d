//! Exact complete-coloring toolkit for uniform hypergraphs.
//!
//! The crate is organised around a single instance type, [`Hypergraph`], and
//! a handful of layers built on top of it:
//!
//! - [`hypergraph`]: the data model, coloring predicates, independent sets,
//!   covers, incidence graphs and the JSON document format.
//! - [`solver`]: exact decision of complete `t`-colorings, chromatic and
//!   achromatic numbers, full spectra, plus a brute-force oracle.
//! - [`constructions`]: generators for the explicit families (part/position
//!   construction, the 15-vertex 3-regular instance, complete uniform
//!   hypergraphs, split lifts).
//! - [`gap_search`]: search over split lifts for prescribed spectrum gaps.
//! - [`planar`]: rotation-system embeddings, triangulation enumeration and
//!   face hypergraphs.
//! - [`canon`]: canonical labeling of small hypergraphs.

pub mod bitset;
pub mod canon;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod gap_search;
pub mod hypergraph;
pub mod planar;
pub mod solver;

pub use error::{ConstructionError, EmbeddingError, HypergraphError};
pub use hypergraph::{Coloring, Hypergraph, IncidenceGraph};
pub use solver::{Budget, Outcome, SolverConfig, SpectrumReport};
