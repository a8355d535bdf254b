//! Constructive routes to packings: doubling a packing into a prism,
//! projecting a prism packing back to a layer, rewriting an open packing of
//! a bipartite prism into doubled form, Hamming perfect codes with their
//! coset partitions, and the derived hypercube packing constructions.
//!
//! Every construction verifies its own output against the definitional
//! checkers before returning it.

mod hamming;
mod transform;

pub use hamming::{
    hamming_coset_partition, hamming_perfect_code, hypercube_packing_construction,
    q8_seventeen_set, CodeError, ConstructionError,
};
pub use transform::{
    bipartite_prism_transform, double_packing, project_packing_to_layer, TransformError,
    TransformTrace,
};
