//! Invariant kinds and solver results.

use crate::graph::VertexSet;
use crate::partition::Partition;

/// The five invariants the crate computes exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// Maximum set with pairwise disjoint closed neighborhoods.
    TwoPacking,
    /// Maximum set with pairwise disjoint open neighborhoods.
    OpenPacking,
    /// Minimum set whose closed neighborhoods cover every vertex.
    Domination,
    /// Minimum set whose open neighborhoods cover every vertex.
    TotalDomination,
    /// Minimum number of classes in a partition into open packings.
    InjectiveChromatic,
}

impl InvariantKind {
    pub fn is_maximization(self) -> bool {
        matches!(self, InvariantKind::TwoPacking | InvariantKind::OpenPacking)
    }

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::TwoPacking => "rho2",
            InvariantKind::OpenPacking => "rho-o",
            InvariantKind::Domination => "gamma",
            InvariantKind::TotalDomination => "gamma-t",
            InvariantKind::InjectiveChromatic => "chi-i",
        }
    }

    pub const ALL: [InvariantKind; 5] = [
        InvariantKind::TwoPacking,
        InvariantKind::OpenPacking,
        InvariantKind::Domination,
        InvariantKind::TotalDomination,
        InvariantKind::InjectiveChromatic,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Lower and upper bound met; the certificate witnesses the value.
    Exact,
    /// Bounds assembled without a completed search.
    BoundsOnly,
    /// The search budget ran out; bounds are the best found so far.
    Timeout,
}

/// Witness attached to a result: a set for the four subset invariants, a
/// partition (one class per color) for the injective chromatic number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Set(VertexSet),
    Classes(Partition),
}

impl Certificate {
    /// The bound this certificate witnesses: set cardinality or class count.
    pub fn witnessed_size(&self) -> usize {
        match self {
            Certificate::Set(s) => s.len(),
            Certificate::Classes(p) => p.class_count(),
        }
    }

    pub fn as_set(&self) -> Option<&VertexSet> {
        match self {
            Certificate::Set(s) => Some(s),
            Certificate::Classes(_) => None,
        }
    }

    pub fn as_classes(&self) -> Option<&Partition> {
        match self {
            Certificate::Set(_) => None,
            Certificate::Classes(p) => Some(p),
        }
    }
}

/// Outcome of one invariant computation.
///
/// `lower <= true value <= upper` always holds; `Exact` means the two met.
/// For maximization kinds the certificate witnesses `lower`, for
/// minimization kinds it witnesses `upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    pub lower: usize,
    pub upper: usize,
    pub status: SolveStatus,
    pub certificate: Option<Certificate>,
    pub elapsed_ms: u64,
    pub nodes: u64,
}

impl InvariantResult {
    pub fn is_exact(&self) -> bool {
        self.status == SolveStatus::Exact
    }

    /// The exact value, when the computation finished.
    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}
