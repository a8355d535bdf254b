//! Moving packings between a graph and its prism.
//!
//! Doubling sends a two-packing `P` of `G` to the open packing `P × {1,2}`
//! of the prism. Projection restricts a prism two-packing to its fuller
//! layer. The bipartite transform rewrites an arbitrary open packing of a
//! bipartite prism, without shrinking it, into doubled form `P' × {1,2}`,
//! which pins the prism's open packing number to twice the two-packing
//! number of the base.

use crate::graph::{Graph, VertexSet};
use crate::product::{prism, Layer, PrismGraph};
use crate::solver::{verify_set, SetKind, VerifyError, Violation};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("input is not a two-packing: {0}")]
    NotTwoPacking(Violation),
    #[error("input is not an open packing: {0}")]
    NotOpenPacking(Violation),
    #[error("the given parts are not a bipartition of the graph")]
    InvalidBipartition,
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

/// Doubles a two-packing of `base` into both layers of the prism.
///
/// The result has twice the cardinality and verifies as an open packing of
/// `prism(base)`.
pub fn double_packing(base: &Graph, packing: &VertexSet) -> Result<VertexSet, TransformError> {
    let check = verify_set(base, packing, SetKind::TwoPacking)?;
    if let Some(violation) = check.violation() {
        return Err(TransformError::NotTwoPacking(violation));
    }
    let host = prism(base);
    let m = base.vertex_count() as u32;
    let mut doubled = VertexSet::empty(2 * m as usize);
    for v in packing.iter() {
        doubled.insert(v);
        doubled.insert(m + v);
    }
    let check = verify_set(&host.graph, &doubled, SetKind::OpenPacking)?;
    if !check.passed() {
        return Err(TransformError::Internal(
            "doubled two-packing must be an open packing of the prism",
        ));
    }
    Ok(doubled)
}

/// Restricts a two-packing of the prism to its fuller layer (ties go to
/// layer one) and returns it as a set of base vertices.
///
/// The output is a two-packing of the base with at least half the input's
/// cardinality.
pub fn project_packing_to_layer(
    host: &PrismGraph,
    packing: &VertexSet,
) -> Result<VertexSet, TransformError> {
    let check = verify_set(&host.graph, packing, SetKind::TwoPacking)?;
    if let Some(violation) = check.violation() {
        return Err(TransformError::NotTwoPacking(violation));
    }
    let m = host.base_order();
    let in_layer_one = packing.iter().filter(|&v| (v as usize) < m).count();
    let keep = if 2 * in_layer_one >= packing.len() {
        Layer::One
    } else {
        Layer::Two
    };

    let mut projected = VertexSet::empty(m);
    for v in packing.iter() {
        let (base_vertex, layer) = host.split(v);
        if layer == keep {
            projected.insert(base_vertex);
        }
    }
    let check = verify_set(&host.base, &projected, SetKind::TwoPacking)?;
    if !check.passed() {
        return Err(TransformError::Internal(
            "layer restriction of a prism two-packing must be a two-packing",
        ));
    }
    Ok(projected)
}

/// How the transform classified the members of the input packing, using
/// post-relabel layer indices (0 and 1 for layers one and two).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformTrace {
    /// Layer labels were exchanged before applying the rewrite rules.
    pub swapped_layers: bool,
    /// Base vertices of members isolated in the induced packing subgraph,
    /// indexed by `[layer][side]` with side 0 = part A, 1 = part B.
    pub isolated: [[VertexSet; 2]; 2],
    /// Base vertices whose entire fiber lies in the packing.
    pub same_fiber_pairs: VertexSet,
    /// In-layer adjacent pairs `(a, b)` with `a` in part A and `b` in part
    /// B, indexed by layer.
    pub in_layer_pairs: [Vec<(u32, u32)>; 2],
    /// The resulting base set `P'`.
    pub output: VertexSet,
}

/// Rewrites an open packing `O` of `prism(g)` into doubled form.
///
/// `(part_a, part_b)` must be a bipartition of `g`. Returns the base set
/// `P'` and a trace of the rewrite. Guarantees checked before returning:
/// `P'` is a two-packing of `g`, `P' × {1,2}` is an open packing of the
/// prism, and `2·|P'| ≥ |O|`.
pub fn bipartite_prism_transform(
    g: &Graph,
    part_a: &VertexSet,
    part_b: &VertexSet,
    packing: &VertexSet,
) -> Result<(VertexSet, TransformTrace), TransformError> {
    let m = g.vertex_count();
    if part_a.universe() != m || part_b.universe() != m {
        return Err(TransformError::InvalidBipartition);
    }
    if !part_a.is_disjoint(part_b) || part_a.len() + part_b.len() != m {
        return Err(TransformError::InvalidBipartition);
    }
    for (u, v) in g.edges() {
        if part_a.contains(u) == part_a.contains(v) {
            return Err(TransformError::InvalidBipartition);
        }
    }

    let host = prism(g);
    let check = verify_set(&host.graph, packing, SetKind::OpenPacking)?;
    if let Some(violation) = check.violation() {
        return Err(TransformError::NotOpenPacking(violation));
    }

    // Split the packing into isolated members and adjacent pairs. In an
    // open packing no vertex has two members as neighbors, so the paired
    // part decomposes into fiber pairs and in-layer edges.
    let mut isolated_raw: Vec<(u32, Layer)> = Vec::new();
    let mut fiber_pairs = VertexSet::empty(m);
    let mut layer_pairs_raw: Vec<(u32, u32, Layer)> = Vec::new(); // (a-side, b-side, layer)
    for v in packing.iter() {
        let mut inside = host
            .graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| packing.contains(w));
        let partner = inside.next();
        if inside.next().is_some() {
            return Err(TransformError::Internal(
                "open packing member with two packing neighbors",
            ));
        }
        let (base_v, layer_v) = host.split(v);
        match partner {
            None => isolated_raw.push((base_v, layer_v)),
            Some(w) if w < v => {} // pair already recorded from its lower end
            Some(w) => {
                let (base_w, layer_w) = host.split(w);
                if base_v == base_w {
                    fiber_pairs.insert(base_v);
                } else {
                    debug_assert_eq!(layer_v, layer_w);
                    let (a, b) = if part_a.contains(base_v) {
                        (base_v, base_w)
                    } else {
                        (base_w, base_v)
                    };
                    layer_pairs_raw.push((a, b, layer_v));
                }
            }
        }
    }

    // Count isolated members per (layer, side); relabel layers if keeping
    // layer-one A-sides and layer-two B-sides would lose more than it keeps.
    let side_of = |v: u32| usize::from(!part_a.contains(v));
    let mut iso_count = [[0usize; 2]; 2];
    for &(v, layer) in &isolated_raw {
        iso_count[layer.index() as usize][side_of(v)] += 1;
    }
    let swapped = iso_count[0][0] + iso_count[1][1] < iso_count[1][0] + iso_count[0][1];
    let relabel = |layer: Layer| -> usize {
        (layer.index() as usize) ^ usize::from(swapped)
    };

    let mut isolated = [
        [VertexSet::empty(m), VertexSet::empty(m)],
        [VertexSet::empty(m), VertexSet::empty(m)],
    ];
    let mut output = VertexSet::empty(m);
    for &(v, layer) in &isolated_raw {
        let (l, s) = (relabel(layer), side_of(v));
        isolated[l][s].insert(v);
        // Keep layer-one/part-A and layer-two/part-B fibers, drop the rest.
        if (l == 0) == (s == 0) {
            output.insert(v);
        }
    }
    for v in fiber_pairs.iter() {
        output.insert(v);
    }
    let mut in_layer_pairs = [Vec::new(), Vec::new()];
    for &(a, b, layer) in &layer_pairs_raw {
        let l = relabel(layer);
        in_layer_pairs[l].push((a, b));
        // Layer one keeps the A endpoint, layer two keeps the B endpoint.
        output.insert(if l == 0 { a } else { b });
    }
    for pairs in &mut in_layer_pairs {
        pairs.sort_unstable();
    }

    let check = verify_set(g, &output, SetKind::TwoPacking)?;
    if !check.passed() {
        return Err(TransformError::Internal("transform output not a two-packing"));
    }
    let doubled = double_packing(g, &output)?;
    if doubled.len() < packing.len() {
        return Err(TransformError::Internal("transform lost cardinality"));
    }

    let trace = TransformTrace {
        swapped_layers: swapped,
        isolated,
        same_fiber_pairs: fiber_pairs,
        in_layer_pairs,
        output: output.clone(),
    };
    Ok((output, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, cycle, path, Graph, VertexSet};
    use crate::hypercube::hypercube;
    use crate::solver::{compute_invariant, Budget, InvariantKind};

    fn members(universe: usize, m: &[u32]) -> VertexSet {
        VertexSet::from_members(universe, m.iter().copied())
    }

    #[test]
    fn double_k1() {
        let k1 = Graph::empty(1);
        let doubled = double_packing(&k1, &members(1, &[0])).unwrap();
        assert_eq!(doubled.to_vec(), vec![0, 1]);
    }

    #[test]
    fn double_rejects_non_packing() {
        let p = path(3);
        let err = double_packing(&p, &members(3, &[0, 1])).unwrap_err();
        assert!(matches!(err, TransformError::NotTwoPacking(_)));
    }

    #[test]
    fn double_q5_packing_gives_q6_open_packing() {
        let q5 = hypercube(5).unwrap().graph;
        let r = compute_invariant(&q5, InvariantKind::TwoPacking, &Budget::UNLIMITED).unwrap();
        let packing = r.certificate.unwrap().as_set().unwrap().clone();
        assert_eq!(packing.len(), 4);
        let doubled = double_packing(&q5, &packing).unwrap();
        assert_eq!(doubled.len(), 8);
    }

    #[test]
    fn project_single_layer_keeps_size() {
        let host = prism(&path(8));
        // All of layer one: projection is the identity on base indices.
        let s = members(16, &[0, 3, 7]);
        let projected = project_packing_to_layer(&host, &s).unwrap();
        assert_eq!(projected.to_vec(), vec![0, 3, 7]);
    }

    #[test]
    fn project_majority_layer() {
        let host = prism(&path(8));
        // Layer one holds {0, 3}, layer two holds {15 -> base 7}.
        let s = members(16, &[0, 3, 15]);
        let projected = project_packing_to_layer(&host, &s).unwrap();
        assert_eq!(projected.to_vec(), vec![0, 3]);
    }

    #[test]
    fn project_tie_prefers_layer_one() {
        let host = prism(&path(8));
        let s = members(16, &[0, 12]); // base 0 layer one, base 4 layer two
        let projected = project_packing_to_layer(&host, &s).unwrap();
        assert_eq!(projected.to_vec(), vec![0]);
    }

    #[test]
    fn transform_fixed_point_on_doubled_input() {
        let g = cycle(8);
        let (a, b) = bipartition(&g).unwrap();
        let p = members(8, &[0, 4]);
        let doubled = double_packing(&g, &p).unwrap();
        let (out, trace) = bipartite_prism_transform(&g, &a, &b, &doubled).unwrap();
        assert_eq!(out, p);
        assert_eq!(trace.same_fiber_pairs, p);
        assert!(!trace.swapped_layers);
    }

    #[test]
    fn transform_in_layer_pair_on_c4() {
        // Adjacent pair in layer one of the C4 prism; rule keeps the A side.
        let g = cycle(4);
        let (a, b) = bipartition(&g).unwrap();
        let packing = members(8, &[0, 1]);
        let (out, trace) = bipartite_prism_transform(&g, &a, &b, &packing).unwrap();
        assert_eq!(out.to_vec(), vec![0]);
        assert_eq!(trace.in_layer_pairs[0], vec![(0, 1)]);
        assert!(trace.in_layer_pairs[1].is_empty());
    }

    #[test]
    fn transform_rejects_bad_bipartition() {
        let g = cycle(4);
        let a = members(4, &[0, 1]);
        let b = members(4, &[2, 3]);
        let err = bipartite_prism_transform(&g, &a, &b, &members(8, &[0])).unwrap_err();
        assert_eq!(err, TransformError::InvalidBipartition);
    }

    #[test]
    fn transform_on_solver_found_optimum() {
        let q5 = hypercube(5).unwrap().graph;
        let q6 = hypercube(6).unwrap().graph;
        let (a, b) = bipartition(&q5).unwrap();
        let r = compute_invariant(&q6, InvariantKind::OpenPacking, &Budget::UNLIMITED).unwrap();
        let packing = r.certificate.unwrap().as_set().unwrap().clone();
        assert_eq!(packing.len(), 8);
        let (out, _) = bipartite_prism_transform(&q5, &a, &b, &packing).unwrap();
        assert_eq!(out.len(), 4);
    }
}
