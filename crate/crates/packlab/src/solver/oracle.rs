//! Anti-regression oracle: exhaustive enumeration straight from the
//! definitions.
//!
//! The subset invariants are evaluated over all `2^n` subsets with the
//! neighborhoods expanded to plain bit masks; the injective chromatic
//! number enumerates vertex partitions (in restricted-growth order) and
//! checks each class against the literal open-neighborhood condition. None
//! of it shares code with the production solvers.

use thiserror::Error;

use crate::graph::Graph;
use crate::solver::result::InvariantKind;

pub const ORACLE_SUBSET_CAP: usize = 20;
pub const ORACLE_PARTITION_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph with {vertices} vertices exceeds the oracle cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("total domination undefined: the graph has an isolated vertex")]
    IsolatedVertex,
}

/// Exhaustive value of `kind` on `g`.
pub fn brute_force_oracle(g: &Graph, kind: InvariantKind) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    let cap = if kind == InvariantKind::InjectiveChromatic {
        ORACLE_PARTITION_CAP
    } else {
        ORACLE_SUBSET_CAP
    };
    if n > cap {
        return Err(OracleError::TooLarge { vertices: n, cap });
    }
    if kind == InvariantKind::TotalDomination && g.has_isolated_vertex() {
        return Err(OracleError::IsolatedVertex);
    }
    if kind == InvariantKind::InjectiveChromatic {
        return Ok(chi_by_partition_enumeration(g));
    }

    let open: Vec<u32> = (0..n as u32)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let closed: Vec<u32> = open
        .iter()
        .enumerate()
        .map(|(v, m)| m | 1 << v)
        .collect();
    let all = (1u32 << n) - 1;

    let passes = |mask: u32| -> bool {
        match kind {
            InvariantKind::TwoPacking => disjoint_balls(mask, &closed),
            InvariantKind::OpenPacking => disjoint_balls(mask, &open),
            InvariantKind::Domination => union_of(mask, &closed) & all == all,
            InvariantKind::TotalDomination => union_of(mask, &open) & all == all,
            InvariantKind::InjectiveChromatic => unreachable!(),
        }
    };

    let mut best: Option<usize> = None;
    for mask in 0..=all {
        if !passes(mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        best = Some(match best {
            None => size,
            Some(b) if kind.is_maximization() => b.max(size),
            Some(b) => b.min(size),
        });
    }
    // Maximization always admits the empty set; minimization admits the
    // full set (total domination needed the isolated-vertex check above).
    Ok(best.expect("some subset satisfies the predicate"))
}

fn disjoint_balls(mask: u32, balls: &[u32]) -> bool {
    let mut seen = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if seen & balls[v] != 0 {
            return false;
        }
        seen |= balls[v];
    }
    true
}

fn union_of(mask: u32, balls: &[u32]) -> u32 {
    let mut acc = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        acc |= balls[v];
    }
    acc
}

/// Minimum class count over all partitions into open packings, by DFS over
/// restricted-growth assignments. A vertex may only join a class if its
/// open neighborhood is disjoint from every member's; a violating prefix
/// can never be repaired, so pruning on it is safe.
fn chi_by_partition_enumeration(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }

    fn rec(g: &Graph, classes: &mut Vec<Vec<u32>>, v: u32, best: &mut usize) {
        if classes.len() >= *best {
            return;
        }
        if v as usize == g.vertex_count() {
            *best = classes.len();
            return;
        }
        for i in 0..classes.len() {
            let fits = classes[i]
                .iter()
                .all(|&m| g.common_neighbor(v, m).is_none());
            if fits {
                classes[i].push(v);
                rec(g, classes, v + 1, best);
                classes[i].pop();
            }
        }
        classes.push(vec![v]);
        rec(g, classes, v + 1, best);
        classes.pop();
    }

    let mut best = n + 1;
    let mut classes = Vec::new();
    rec(g, &mut classes, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};
    use InvariantKind::*;

    fn oracle(g: &Graph, kind: InvariantKind) -> usize {
        brute_force_oracle(g, kind).unwrap()
    }

    #[test]
    fn spec_derived_values() {
        assert_eq!(oracle(&cycle(4), OpenPacking), 2);
        assert_eq!(oracle(&cycle(5), TwoPacking), 1);
        assert_eq!(oracle(&path(4), TotalDomination), 2);
    }

    #[test]
    fn small_closed_forms() {
        assert_eq!(oracle(&complete(4), TwoPacking), 1);
        assert_eq!(oracle(&complete(4), Domination), 1);
        assert_eq!(oracle(&cycle(6), TwoPacking), 2);
        assert_eq!(oracle(&cycle(6), Domination), 2);
        assert_eq!(oracle(&path(3), InjectiveChromatic), 2);
        assert_eq!(oracle(&cycle(4), InjectiveChromatic), 2);
    }

    #[test]
    fn caps_enforced() {
        let g = Graph::empty(21);
        assert!(matches!(
            brute_force_oracle(&g, TwoPacking),
            Err(OracleError::TooLarge { .. })
        ));
        let g = Graph::empty(13);
        assert!(matches!(
            brute_force_oracle(&g, InjectiveChromatic),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn isolated_vertex_rejected_for_total_domination() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            brute_force_oracle(&g, TotalDomination),
            Err(OracleError::IsolatedVertex)
        );
    }
}
