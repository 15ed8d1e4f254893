//! Edge-connectivity toolkit for small undirected multigraphs.
//!
//! The crate computes exact local and global edge connectivity with unit
//! capacity flows, decides and enforces edge-minimality, builds the quotient
//! of a `k`-edge-connected graph by its `(k+1)`-edge-connectivity classes,
//! decomposes exactly `k`-edge-connected graphs along non-trivial minimum
//! cuts, and extracts vertices of degree `k` from edge-minimal graphs.
//! The [`harness`] module checks all of these constructions exhaustively on
//! enumerated graphs.

pub mod connectivity;
pub mod decomposition;
mod error;
mod graph;
pub mod harness;
pub mod mgraph;
pub mod minimality;
pub mod quotient;

pub use connectivity::{
    class_connectivity, global_edge_connectivity, is_exactly_k_edge_connected,
    is_k_edge_connected, lambda_matrix, local_edge_connectivity, min_edge_cut, FlowNetwork, FlowResult,
};
pub use decomposition::{
    constructive_witnesses, count_nontrivial_min_cuts, decompose, find_nontrivial_min_cut,
    flow_nontrivial_cut, is_quasi_k_regular, is_trivial_cut, scan_witnesses, theorem_witnesses,
    vertex_split, Half, Provenance, SplitTree, VertexSplit, WitnessPair,
};
pub use error::{Error, Result};
pub use mgraph::{parse_mgraph, parse_mgraph_stream, to_mgraph};
pub use graph::{Edge, EdgeCut, EdgeId, Multigraph, Subdivision, VertexId};
pub use minimality::{
    cross_check_minimality, is_edge_minimal, reduce_to_edge_minimal, MinimalityReport,
};
pub use quotient::{
    check_quotient_properties, quotient_graph, r_k_classes, ClassPartition, QuotientCheck,
    QuotientGraph,
};
