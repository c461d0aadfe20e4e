//! Minimum cut bases and relevant cuts of weighted undirected graphs.
//!
//! A cut is *relevant* when it belongs to at least one minimum-weight basis
//! of the GF(2) cut space. Equivalently, it is a minimum u,v-cut for some
//! vertex pair. This crate lists the relevant cuts with three strategies
//! ([`Method::GusT`], [`Method::GusP`], [`Method::Yeh`]) and ships an
//! exhaustive [`oracle`] for small graphs.

pub mod bits;
pub mod cut;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod generate;
pub mod gomory_hu;
pub mod graph;
pub mod oracle;
pub mod pqdag;

pub use bits::BitSet;
pub use cut::{cut_from_side, is_bond, rank, xor, Cut, CutFamily};
pub use enumerate::{
    dedup_union, ordered_cut_enumeration, relevant_cuts, relevant_gus_p, relevant_gus_t,
    relevant_yeh, relevant_yeh_with_matrix, Method, RelevantCutSet, Stats, WeightMatrix,
};
pub use error::{Error, Result};
pub use flow::{max_flow, min_cut_side, FlowResult, ResidualGraph};
pub use gomory_hu::{
    basis_from_tree, build_gomory_hu, min_cut_weight, path_min_edges, GomoryHuTree, PathEdge,
    TreeEdge,
};
pub use graph::{Edge, Graph, Vertex, Weight};
pub use pqdag::{build_pqdag, contract, enumerate_closed_sets, ClosedSets, PqDag};
