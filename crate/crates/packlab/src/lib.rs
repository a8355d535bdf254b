//! Exact solvers, verifiers and constructions for packing and domination
//! invariants of graphs, with first-class support for prisms, graph
//! products and hypercubes.
//!
//! The crate computes five invariants exactly and with certificates: the
//! two-packing number, the open packing number, the domination number, the
//! total domination number, and the injective chromatic number. Packings
//! reduce to independent sets of a derived conflict graph; injective
//! colorings are partitions into open packings. Constructive routes
//! (perfect codes, doubling into prisms, layer projection, the bipartite
//! prism rewrite) produce certified packings far beyond search scale, and
//! every construction re-verifies its output before returning it.

pub mod certio;
pub mod constants;
pub mod constructions;
pub mod graph;
pub mod hypercube;
pub mod injective;
pub mod partition;
pub mod product;
pub mod solver;

pub use graph::{
    bipartition, conflict_graph, graph_from_edge_list, graph_to_edge_list, ConflictKind, Graph,
    VertexSet,
};
pub use hypercube::{hypercube, Hypercube, HypercubeLabeling};
pub use partition::Partition;
pub use product::{cartesian_product, chained_c5, direct_product, prism, PrismGraph, ProductGraph};
pub use solver::{
    brute_force_oracle, compute_invariant, max_independent_set, regular_sphere_bounds, verify_set,
    Budget, Certificate, InvariantKind, InvariantResult, PackingKind, SetKind, SolveStatus,
};
