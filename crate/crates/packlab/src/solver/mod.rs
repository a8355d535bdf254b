//! Exact invariant computation with certificates, bounds and budgets.
//!
//! The two packing numbers reduce to maximum independent set on the
//! matching conflict graph; the two domination numbers run a cover-style
//! branch and bound; the injective chromatic number colors the open
//! conflict graph. Every exact result carries a certificate that is
//! re-verified against the literal definitions before it is returned.

mod bounds;
pub(crate) mod budget;
mod coloring;
mod cover;
mod mis;
mod oracle;
mod result;
mod verify;

pub use bounds::{regular_sphere_bounds, BoundsError};
pub use budget::Budget;
pub use mis::{max_independent_set, max_independent_set_bounded};
pub use oracle::{brute_force_oracle, OracleError, ORACLE_PARTITION_CAP, ORACLE_SUBSET_CAP};
pub use result::{Certificate, InvariantKind, InvariantResult, SolveStatus};
pub use verify::{verify_set, PackingKind, SetCheck, SetKind, VerifyError, Violation};

use thiserror::Error;

use crate::graph::{conflict_graph, ConflictKind, Graph};
use crate::injective::verify_injective_coloring;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComputeError {
    #[error("total domination undefined: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: u32 },
}

/// Computes one invariant of `g` exactly, within `budget`.
///
/// Packings allow isolated vertices (an empty open neighborhood intersects
/// nothing); total domination rejects them.
pub fn compute_invariant(
    g: &Graph,
    kind: InvariantKind,
    budget: &Budget,
) -> Result<InvariantResult, ComputeError> {
    let result = match kind {
        InvariantKind::TwoPacking => {
            let conflicts = conflict_graph(g, ConflictKind::Closed);
            let hint = packing_hint(g, true);
            let mut r = mis::max_independent_set_bounded(&conflicts, budget, hint);
            r.kind = kind;
            r
        }
        InvariantKind::OpenPacking => {
            let conflicts = conflict_graph(g, ConflictKind::Open);
            let hint = packing_hint(g, false);
            let mut r = mis::max_independent_set_bounded(&conflicts, budget, hint);
            r.kind = kind;
            r
        }
        InvariantKind::Domination => cover::minimum_cover(g, false, budget),
        InvariantKind::TotalDomination => {
            if let Some(v) = (0..g.vertex_count() as u32).find(|&v| g.degree(v) == 0) {
                return Err(ComputeError::IsolatedVertex { vertex: v });
            }
            cover::minimum_cover(g, true, budget)
        }
        InvariantKind::InjectiveChromatic => {
            let conflicts = conflict_graph(g, ConflictKind::Open);
            coloring::chromatic_number(&conflicts, budget)
        }
    };

    if result.status == SolveStatus::Exact {
        check_certificate(g, &result);
    }
    Ok(result)
}

fn packing_hint(g: &Graph, closed: bool) -> Option<usize> {
    let (two, open) = regular_sphere_bounds(g).ok()?;
    Some(if closed { two } else { open })
}

/// Exact results must ship a certificate that passes the definitional
/// verifier and witnesses the claimed value. A failure here is a solver
/// bug, not a user error.
fn check_certificate(g: &Graph, result: &InvariantResult) {
    let cert = result
        .certificate
        .as_ref()
        .expect("exact result without certificate");
    assert_eq!(
        cert.witnessed_size(),
        if result.kind.is_maximization() {
            result.lower
        } else {
            result.upper
        },
        "certificate does not witness the reported bound"
    );
    match (result.kind, cert) {
        (InvariantKind::InjectiveChromatic, Certificate::Classes(p)) => {
            let check = verify_injective_coloring(g, p).expect("certificate partition is valid");
            assert!(check.passed(), "coloring certificate failed verification");
        }
        (kind, Certificate::Set(set)) => {
            let set_kind = match kind {
                InvariantKind::TwoPacking => SetKind::TwoPacking,
                InvariantKind::OpenPacking => SetKind::OpenPacking,
                InvariantKind::Domination => SetKind::Dominating,
                InvariantKind::TotalDomination => SetKind::TotalDominating,
                InvariantKind::InjectiveChromatic => unreachable!(),
            };
            let check = verify_set(g, set, set_kind).expect("certificate set is well-formed");
            assert!(
                check.passed(),
                "{} certificate failed verification: {:?}",
                set_kind.name(),
                check.violation()
            );
        }
        _ => panic!("certificate shape does not match invariant kind"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, Graph};
    use crate::hypercube::hypercube;
    use crate::product::chained_c5;

    #[test]
    fn hypercube_packings() {
        let q5 = hypercube(5).unwrap().graph;
        let r = compute_invariant(&q5, InvariantKind::TwoPacking, &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(4));

        let q6 = hypercube(6).unwrap().graph;
        let r = compute_invariant(&q6, InvariantKind::OpenPacking, &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(8));
    }

    #[test]
    fn hypercube_domination() {
        let q5 = hypercube(5).unwrap().graph;
        let r = compute_invariant(&q5, InvariantKind::Domination, &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(7));
    }

    #[test]
    fn chained_c5_two_packing() {
        let g = chained_c5(1).unwrap();
        let r = compute_invariant(&g, InvariantKind::TwoPacking, &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(2));

        let g = chained_c5(2).unwrap();
        let r = compute_invariant(&g, InvariantKind::TwoPacking, &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(4));
    }

    #[test]
    fn total_domination_rejects_isolated_vertices() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            compute_invariant(&g, InvariantKind::TotalDomination, &Budget::UNLIMITED),
            Err(ComputeError::IsolatedVertex { vertex: 2 })
        );
    }

    #[test]
    fn open_packing_allows_isolated_vertices() {
        // An isolated vertex has an empty open neighborhood and joins any
        // open packing.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = compute_invariant(&g, InvariantKind::OpenPacking, &Budget::UNLIMITED).unwrap();
        let cert = r.certificate.unwrap();
        assert!(cert.as_set().unwrap().contains(4));
    }

    #[test]
    fn injective_chromatic_small() {
        // chi_i(C6): distance-2 conflicts make two triangles.
        let r =
            compute_invariant(&cycle(6), InvariantKind::InjectiveChromatic, &Budget::UNLIMITED)
                .unwrap();
        assert_eq!(r.value(), Some(3));
    }
}
