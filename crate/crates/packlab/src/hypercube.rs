//! Hypercubes and their binary-string labeling.
//!
//! Vertices of the dimension-`n` hypercube are the integers `0..2^n`; bit
//! `i` of a vertex is coordinate `i`, and two vertices are adjacent exactly
//! when they differ in a single bit. In the string form, the leftmost
//! character of an `n`-character binary string is coordinate `n-1`, so a
//! string is simply the binary numeral of its vertex.

use thiserror::Error;

use crate::graph::Graph;

/// Practical cap: `2^20` vertices is the largest explicit hypercube we build.
pub const MAX_DIMENSION: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypercubeError {
    #[error("hypercube dimension {0} outside 1..={MAX_DIMENSION}")]
    DimensionOutOfRange(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("label `{label}` is not a binary string of length {expected}")]
    BadLabel { label: String, expected: usize },
}

/// The vertex ↔ binary-string correspondence for a fixed dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypercubeLabeling {
    dimension: usize,
}

impl HypercubeLabeling {
    pub fn new(dimension: usize) -> Self {
        HypercubeLabeling { dimension }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.dimension
    }

    /// The `n`-character binary string of a vertex, highest coordinate first.
    pub fn label(&self, v: u32) -> String {
        debug_assert!((v as usize) < self.vertex_count());
        (0..self.dimension)
            .rev()
            .map(|i| if v >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Parses an `n`-character binary string back to a vertex.
    pub fn parse(&self, label: &str) -> Result<u32, LabelError> {
        if label.len() != self.dimension {
            return Err(LabelError::BadLabel {
                label: label.to_string(),
                expected: self.dimension,
            });
        }
        let mut v = 0u32;
        for c in label.chars() {
            v = match c {
                '0' => v << 1,
                '1' => v << 1 | 1,
                _ => {
                    return Err(LabelError::BadLabel {
                        label: label.to_string(),
                        expected: self.dimension,
                    })
                }
            };
        }
        Ok(v)
    }
}

/// A hypercube graph together with its labeling.
#[derive(Debug, Clone)]
pub struct Hypercube {
    pub graph: Graph,
    pub labeling: HypercubeLabeling,
}

/// Builds the dimension-`n` hypercube: `2^n` vertices, `n·2^(n-1)` edges.
pub fn hypercube(n: usize) -> Result<Hypercube, HypercubeError> {
    if n == 0 || n > MAX_DIMENSION {
        return Err(HypercubeError::DimensionOutOfRange(n));
    }
    let order = 1usize << n;
    let edges = (0..order as u32).flat_map(|v| {
        (0..n as u32).filter_map(move |i| {
            let w = v ^ (1 << i);
            (v < w).then_some((v, w))
        })
    });
    let graph = Graph::from_edges(order, edges).expect("hypercube edges are valid");
    Ok(Hypercube {
        graph,
        labeling: HypercubeLabeling::new(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;

    #[test]
    fn q3_shape() {
        let q3 = hypercube(3).unwrap().graph;
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3.regular_degree(), Some(3));
    }

    #[test]
    fn q1_is_k2() {
        let q1 = hypercube(1).unwrap().graph;
        assert_eq!(q1.vertex_count(), 2);
        assert!(q1.has_edge(0, 1));
    }

    #[test]
    fn dimension_bounds() {
        assert!(matches!(
            hypercube(0),
            Err(HypercubeError::DimensionOutOfRange(0))
        ));
        assert!(matches!(
            hypercube(MAX_DIMENSION + 1),
            Err(HypercubeError::DimensionOutOfRange(_))
        ));
    }

    #[test]
    fn neighbors_are_bit_flips() {
        let q5 = hypercube(5).unwrap().graph;
        for v in 0..32u32 {
            let expected: Vec<u32> = {
                let mut ns: Vec<u32> = (0..5).map(|i| v ^ (1 << i)).collect();
                ns.sort_unstable();
                ns
            };
            assert_eq!(q5.neighbors(v), expected.as_slice());
        }
    }

    #[test]
    fn bipartite_by_parity() {
        let q4 = hypercube(4).unwrap().graph;
        let (a, b) = bipartition(&q4).unwrap();
        assert_eq!(a.len(), 8);
        assert_eq!(b.len(), 8);
        for v in a.iter() {
            assert_eq!(v.count_ones() % 2, 0);
        }
        for v in b.iter() {
            assert_eq!(v.count_ones() % 2, 1);
        }
    }

    #[test]
    fn labels_round_trip() {
        let labeling = HypercubeLabeling::new(8);
        assert_eq!(labeling.label(0b00001110), "00001110");
        assert_eq!(labeling.parse("00001110"), Ok(14));
        for v in [0u32, 1, 37, 255] {
            assert_eq!(labeling.parse(&labeling.label(v)), Ok(v));
        }
        assert!(labeling.parse("0000111").is_err());
        assert!(labeling.parse("0000211x").is_err());
    }
}
