//! Switching classes of graphs, their two-graphs, and which of them appear
//! among the 28 bitangents of a smooth plane quartic.
//!
//! A two-graph on a vertex set is a collection of unordered triples in which
//! every 4-subset contains an even number of members. Two-graphs on n
//! vertices are exactly the orbits of graphs under Seidel switching, and this
//! crate implements both sides of that correspondence:
//!
//! * [`Graph`] — graphs on up to 28 vertices as triangular edge bitsets, with
//!   switching, relabeling, triple parity, and Seidel matrices;
//! * [`TwoGraph`] — triple sets with validation, induced sub-two-graphs, and
//!   the isolated-vertex representative graph;
//! * [`canonical_key`] / [`equivalent`] — exact canonical forms for
//!   two-graphs on up to 8 vertices;
//! * [`enumerate_classes`] — the catalog of all two-graphs on n vertices up
//!   to equivalence (1, 1, 2, 3, 7, 16, 54, 243 for n = 1..=8);
//! * [`BitangentModel`] — the 28 bitangents as antipodal pairs of minimal
//!   vectors of the dual E7 lattice, with the syzygy two-graph they induce;
//! * [`classify_subsets`] and the `verify_*` checks — which two-graph classes
//!   are realized by n-subsets of bitangents, plus the structural lemmas the
//!   classification rests on.
//!
//! All arithmetic is exact: lattice vectors are stored with entries scaled by
//! 4 so every dot product is an integer, and everything else is bitset
//! combinatorics.

mod bits;
mod canon;
mod catalog;
mod classify;
mod comb;
mod e7;
mod error;
mod graph;
mod two_graph;

pub use bits::Bits;
pub use canon::{canonical_key, equivalent, CanonicalKey, MAX_CANONICAL_VERTICES};
pub use catalog::{enumerate_classes, CatalogClass, ClassCatalog, CLASS_COUNTS};
pub use classify::{
    classify_subsets, reduction_bound_report, verify_excluded_by_subgraph, verify_reduction_bound,
    verify_switching_parity, verify_unique_tetrad, verify_witness_lists, ClassOutcome, LemmaReport,
    RealizabilityReport, REALIZABLE_N5, REALIZABLE_N6, UNREALIZABLE_N5, UNREALIZABLE_N6,
    WITNESS_LISTS,
};
pub use comb::{binomial, MAX_VERTICES};
pub use e7::{
    graph_from_vectors, parse_vector_list, parse_vector_lists, BitangentModel, MinimalVector,
    BITANGENTS,
};
pub use error::Error;
pub use graph::{Graph, Parity, SeidelMatrix};
pub use two_graph::TwoGraph;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
