//! Analytic packing bounds for regular graphs.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("sphere bounds need a regular graph")]
    NotRegular,
    #[error("sphere bounds need degree at least 1")]
    ZeroDegree,
}

/// Sphere-packing upper bounds `(⌊n/(r+1)⌋, ⌊n/r⌋)` for the two-packing and
/// open packing numbers of an `r`-regular graph.
///
/// A two-packing's closed neighborhoods are disjoint and each holds `r+1`
/// vertices; an open packing's open neighborhoods each hold `r`.
pub fn regular_sphere_bounds(g: &Graph) -> Result<(usize, usize), BoundsError> {
    let r = g.regular_degree().ok_or(BoundsError::NotRegular)?;
    if r == 0 {
        return Err(BoundsError::ZeroDegree);
    }
    let n = g.vertex_count();
    Ok((n / (r + 1), n / r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, Graph};
    use crate::hypercube::hypercube;

    #[test]
    fn hypercube_bounds() {
        let q7 = hypercube(7).unwrap().graph;
        assert_eq!(regular_sphere_bounds(&q7), Ok((16, 18)));
        let q8 = hypercube(8).unwrap().graph;
        assert_eq!(regular_sphere_bounds(&q8), Ok((28, 32)));
        let q9 = hypercube(9).unwrap().graph;
        assert_eq!(regular_sphere_bounds(&q9), Ok((51, 56)));
    }

    #[test]
    fn rejects_irregular_and_edgeless() {
        assert_eq!(regular_sphere_bounds(&path(3)), Err(BoundsError::NotRegular));
        assert_eq!(
            regular_sphere_bounds(&Graph::empty(4)),
            Err(BoundsError::ZeroDegree)
        );
    }
}
