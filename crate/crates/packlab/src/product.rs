//! Cartesian and direct products, prisms, and the chained five-cycle family.
//!
//! Composite vertices are indexed arithmetically so certificates stay stable:
//! a product vertex `(g, h)` has index `g·|V(H)| + h`, and a prism vertex
//! `(v, layer)` has index `layer·m + v` (layer-major). With the layer-major
//! rule, `prism(hypercube(n-1))` is index-identical to `hypercube(n)`: the
//! layer bit is coordinate `n-1`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("product factors must be non-empty")]
    EmptyFactor,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("chained five-cycle parameter must be at least 1")]
    ChainTooShort,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Direct,
}

/// A product of two graphs together with its coordinate map.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub kind: ProductKind,
    pub left: Graph,
    pub right: Graph,
    pub graph: Graph,
}

impl ProductGraph {
    /// Composite index of `(g, h)`.
    pub fn composite_index(&self, g: u32, h: u32) -> u32 {
        g * self.right.vertex_count() as u32 + h
    }

    /// Factor coordinates of a composite vertex.
    pub fn coordinates(&self, v: u32) -> (u32, u32) {
        let r = self.right.vertex_count() as u32;
        (v / r, v % r)
    }
}

fn build_product(kind: ProductKind, left: &Graph, right: &Graph) -> Result<ProductGraph, ProductError> {
    if left.vertex_count() == 0 || right.vertex_count() == 0 {
        return Err(ProductError::EmptyFactor);
    }
    let (nl, nr) = (left.vertex_count(), right.vertex_count());
    let order = nl * nr;
    let idx = |g: u32, h: u32| g * nr as u32 + h;
    let mut edges = Vec::new();
    match kind {
        ProductKind::Cartesian => {
            for g in 0..nl as u32 {
                for (h1, h2) in right.edges() {
                    edges.push((idx(g, h1), idx(g, h2)));
                }
            }
            for h in 0..nr as u32 {
                for (g1, g2) in left.edges() {
                    edges.push((idx(g1, h), idx(g2, h)));
                }
            }
        }
        ProductKind::Direct => {
            for (g1, g2) in left.edges() {
                for (h1, h2) in right.edges() {
                    edges.push((idx(g1, h1), idx(g2, h2)));
                    edges.push((idx(g1, h2), idx(g2, h1)));
                }
            }
        }
    }
    let graph = Graph::from_edges(order, edges).expect("product edges are valid");
    Ok(ProductGraph {
        kind,
        left: left.clone(),
        right: right.clone(),
        graph,
    })
}

/// Cartesian product: `(g1,h1) ~ (g2,h2)` iff equal in one coordinate and
/// adjacent in the other.
pub fn cartesian_product(left: &Graph, right: &Graph) -> Result<ProductGraph, ProductError> {
    build_product(ProductKind::Cartesian, left, right)
}

/// Direct product: `(g1,h1) ~ (g2,h2)` iff adjacent in both coordinates.
pub fn direct_product(left: &Graph, right: &Graph) -> Result<ProductGraph, ProductError> {
    build_product(ProductKind::Direct, left, right)
}

/// The two layers of a prism, stored internally as 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    One,
    Two,
}

impl Layer {
    pub fn index(self) -> u32 {
        match self {
            Layer::One => 0,
            Layer::Two => 1,
        }
    }

    pub fn from_index(i: u32) -> Layer {
        if i == 0 {
            Layer::One
        } else {
            Layer::Two
        }
    }

    pub fn other(self) -> Layer {
        match self {
            Layer::One => Layer::Two,
            Layer::Two => Layer::One,
        }
    }
}

/// Two copies of a base graph joined by a perfect matching on fibers.
///
/// Layer-major indexing: base vertex `v` appears as `v` in layer one and as
/// `m + v` in layer two, where `m` is the base order.
#[derive(Debug, Clone)]
pub struct PrismGraph {
    pub base: Graph,
    pub graph: Graph,
}

impl PrismGraph {
    pub fn base_order(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn composite_index(&self, v: u32, layer: Layer) -> u32 {
        layer.index() * self.base_order() as u32 + v
    }

    /// Base vertex and layer of a composite vertex.
    pub fn split(&self, composite: u32) -> (u32, Layer) {
        let m = self.base_order() as u32;
        (composite % m, Layer::from_index(composite / m))
    }

    /// The other endpoint of the fiber edge through `composite`.
    pub fn fiber_partner(&self, composite: u32) -> u32 {
        let (v, layer) = self.split(composite);
        self.composite_index(v, layer.other())
    }
}

/// Builds the prism over `g` (two layers plus fiber edges).
pub fn prism(g: &Graph) -> PrismGraph {
    let m = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count() + m);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((m as u32 + u, m as u32 + v));
    }
    for v in 0..m as u32 {
        edges.push((v, m as u32 + v));
    }
    let graph = Graph::from_edges(2 * m, edges).expect("prism edges are valid");
    PrismGraph {
        base: g.clone(),
        graph,
    }
}

/// A row of `2k` five-cycles, consecutive cycles joined by a single bridge.
///
/// Cycle `c` occupies vertices `5c..5c+5` with edges `j ~ j+1 (mod 5)` inside
/// the cycle; the bridge joins vertex 4 of cycle `c` to vertex 0 of cycle
/// `c+1`. Under this indexing each bridge endpoint is adjacent on its cycle
/// to an antipode of the previous bridge endpoint.
pub fn chained_c5(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::ChainTooShort);
    }
    let cycles = 2 * k;
    let order = 5 * cycles;
    let mut edges = Vec::with_capacity(order + cycles - 1);
    for c in 0..cycles as u32 {
        for j in 0..5 {
            edges.push((5 * c + j, 5 * c + (j + 1) % 5));
        }
        if c + 1 < cycles as u32 {
            edges.push((5 * c + 4, 5 * (c + 1)));
        }
    }
    Ok(Graph::from_edges(order, edges).expect("chain edges are valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};
    use crate::hypercube::hypercube;

    fn k2() -> Graph {
        complete(2)
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let p = cartesian_product(&k2(), &k2()).unwrap();
        assert_eq!(p.graph.vertex_count(), 4);
        assert_eq!(p.graph.edge_count(), 4);
        for v in 0..4 {
            assert_eq!(p.graph.degree(v), 2);
        }
    }

    #[test]
    fn direct_k2_k2_is_two_disjoint_edges() {
        let p = direct_product(&k2(), &k2()).unwrap();
        assert_eq!(p.graph.vertex_count(), 4);
        assert_eq!(p.graph.edge_count(), 2);
        assert!(!p.graph.is_connected());
    }

    #[test]
    fn cartesian_c5_k2() {
        let p = cartesian_product(&cycle(5), &k2()).unwrap();
        assert_eq!(p.graph.vertex_count(), 10);
        assert_eq!(p.graph.edge_count(), 15);
    }

    #[test]
    fn empty_factor_rejected() {
        let e = Graph::empty(0);
        assert!(matches!(
            cartesian_product(&e, &k2()),
            Err(ProductError::EmptyFactor)
        ));
        assert!(matches!(
            direct_product(&k2(), &e),
            Err(ProductError::EmptyFactor)
        ));
    }

    #[test]
    fn coordinate_map_inverts() {
        let p = cartesian_product(&path(3), &cycle(4)).unwrap();
        for v in 0..12u32 {
            let (g, h) = p.coordinates(v);
            assert_eq!(p.composite_index(g, h), v);
        }
    }

    #[test]
    fn prism_of_k1_is_k2() {
        let p = prism(&Graph::empty(1));
        assert_eq!(p.graph.vertex_count(), 2);
        assert!(p.graph.has_edge(0, 1));
    }

    #[test]
    fn prism_of_q2_is_q3() {
        let q2 = hypercube(2).unwrap().graph;
        let q3 = hypercube(3).unwrap().graph;
        assert_eq!(prism(&q2).graph, q3);
    }

    #[test]
    fn prism_of_q5_is_q6() {
        let q5 = hypercube(5).unwrap().graph;
        let q6 = hypercube(6).unwrap().graph;
        assert_eq!(prism(&q5).graph, q6);
    }

    #[test]
    fn prism_layers_are_index_isomorphic_to_base() {
        let g = petersen_like();
        let p = prism(&g);
        let m = g.vertex_count() as u32;
        for (u, v) in g.edges() {
            assert!(p.graph.has_edge(u, v));
            assert!(p.graph.has_edge(m + u, m + v));
        }
        for v in 0..m {
            assert!(p.graph.has_edge(v, m + v));
        }
        assert_eq!(p.graph.edge_count(), 2 * g.edge_count() + g.vertex_count());
    }

    fn petersen_like() -> Graph {
        crate::graph::petersen()
    }

    #[test]
    fn prism_split_round_trip() {
        let p = prism(&path(6));
        for v in 0..12u32 {
            let (b, layer) = p.split(v);
            assert_eq!(p.composite_index(b, layer), v);
            assert_eq!(p.fiber_partner(p.fiber_partner(v)), v);
        }
    }

    #[test]
    fn chained_c5_shapes() {
        let g1 = chained_c5(1).unwrap();
        assert_eq!(g1.vertex_count(), 10);
        assert_eq!(g1.edge_count(), 11);
        assert!(g1.is_connected());

        let g2 = chained_c5(2).unwrap();
        assert_eq!(g2.vertex_count(), 20);
        assert_eq!(g2.edge_count(), 23);
        assert!(g2.is_connected());

        assert_eq!(chained_c5(0), Err(FamilyError::ChainTooShort));
    }

    #[test]
    fn chained_c5_prism_order() {
        let host = prism(&chained_c5(2).unwrap());
        assert_eq!(host.graph.vertex_count(), 40);
    }
}
