//! Certificate verifiers: the literal defining condition of each set kind.
//!
//! These checks are the ground truth every solver and construction in the
//! crate is held against, so they stay close to the definitions: packings
//! check pairwise neighborhood disjointness, dominating sets check coverage,
//! perfect codes check both.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// What a vertex set claims to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// Pairwise disjoint closed neighborhoods.
    TwoPacking,
    /// Pairwise disjoint open neighborhoods.
    OpenPacking,
    /// Closed neighborhoods cover every vertex.
    Dominating,
    /// Open neighborhoods cover every vertex.
    TotalDominating,
    /// A two-packing whose closed neighborhoods cover every vertex.
    PerfectCode,
}

impl SetKind {
    pub fn name(self) -> &'static str {
        match self {
            SetKind::TwoPacking => "two-packing",
            SetKind::OpenPacking => "open-packing",
            SetKind::Dominating => "dominating",
            SetKind::TotalDominating => "total-dominating",
            SetKind::PerfectCode => "perfect-code",
        }
    }
}

/// The two packing flavors, with their conflict-graph and verifier views.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingKind {
    TwoPacking,
    OpenPacking,
}

impl PackingKind {
    pub fn set_kind(self) -> SetKind {
        match self {
            PackingKind::TwoPacking => SetKind::TwoPacking,
            PackingKind::OpenPacking => SetKind::OpenPacking,
        }
    }

    pub fn conflict_kind(self) -> crate::graph::ConflictKind {
        match self {
            PackingKind::TwoPacking => crate::graph::ConflictKind::Closed,
            PackingKind::OpenPacking => crate::graph::ConflictKind::Open,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("set is over universe {set_universe}, graph has {graph_order} vertices")]
    UniverseMismatch {
        set_universe: usize,
        graph_order: usize,
    },
    #[error("total domination undefined: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: u32 },
}

/// The first reason a verification failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Members `a` and `b` both reach `shared` with the neighborhood the
    /// kind cares about.
    NeighborhoodOverlap { a: u32, b: u32, shared: u32 },
    /// `vertex` has no member of the set in its closed neighborhood.
    NotDominated { vertex: u32 },
    /// `vertex` has no neighbor in the set.
    NotTotallyDominated { vertex: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NeighborhoodOverlap { a, b, shared } => {
                write!(f, "members {a} and {b} share neighborhood vertex {shared}")
            }
            Violation::NotDominated { vertex } => {
                write!(f, "vertex {vertex} is not dominated")
            }
            Violation::NotTotallyDominated { vertex } => {
                write!(f, "vertex {vertex} has no neighbor in the set")
            }
        }
    }
}

/// Outcome of a verification that could run to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetCheck {
    Pass,
    Fail(Violation),
}

impl SetCheck {
    pub fn passed(&self) -> bool {
        matches!(self, SetCheck::Pass)
    }

    pub fn violation(&self) -> Option<Violation> {
        match self {
            SetCheck::Pass => None,
            SetCheck::Fail(v) => Some(*v),
        }
    }
}

/// Checks the defining condition of `kind` for `set` in `g`.
///
/// Returns the first violation in deterministic (lowest member, lowest
/// neighbor) order. Errors are reserved for ill-posed queries: a set bound
/// to the wrong vertex range, or total domination on a graph with an
/// isolated vertex.
pub fn verify_set(g: &Graph, set: &VertexSet, kind: SetKind) -> Result<SetCheck, VerifyError> {
    let n = g.vertex_count();
    if set.universe() != n {
        return Err(VerifyError::UniverseMismatch {
            set_universe: set.universe(),
            graph_order: n,
        });
    }
    if kind == SetKind::TotalDominating {
        if let Some(v) = (0..n as u32).find(|&v| g.degree(v) == 0) {
            return Err(VerifyError::IsolatedVertex { vertex: v });
        }
    }

    match kind {
        SetKind::TwoPacking => Ok(packing_check(g, set, true)),
        SetKind::OpenPacking => Ok(packing_check(g, set, false)),
        SetKind::Dominating => Ok(coverage_check(g, set, true)),
        SetKind::TotalDominating => Ok(coverage_check(g, set, false)),
        SetKind::PerfectCode => {
            let packing = packing_check(g, set, true);
            if !packing.passed() {
                return Ok(packing);
            }
            Ok(coverage_check(g, set, true))
        }
    }
}

/// Pairwise disjointness of (closed or open) neighborhoods, tracked by
/// marking each reached vertex with its first owner.
fn packing_check(g: &Graph, set: &VertexSet, closed: bool) -> SetCheck {
    let mut owner: Vec<Option<u32>> = vec![None; g.vertex_count()];
    let claim = |member: u32, reached: u32, owner: &mut Vec<Option<u32>>| -> Option<Violation> {
        if let Some(first) = owner[reached as usize] {
            Some(Violation::NeighborhoodOverlap {
                a: first,
                b: member,
                shared: reached,
            })
        } else {
            owner[reached as usize] = Some(member);
            None
        }
    };
    for s in set.iter() {
        if closed {
            if let Some(v) = claim(s, s, &mut owner) {
                return SetCheck::Fail(v);
            }
        }
        for &w in g.neighbors(s) {
            if let Some(v) = claim(s, w, &mut owner) {
                return SetCheck::Fail(v);
            }
        }
    }
    SetCheck::Pass
}

fn coverage_check(g: &Graph, set: &VertexSet, closed: bool) -> SetCheck {
    let n = g.vertex_count();
    let mut covered = VertexSet::empty(n);
    for s in set.iter() {
        if closed {
            covered.insert(s);
        }
        for &w in g.neighbors(s) {
            covered.insert(w);
        }
    }
    for v in 0..n as u32 {
        if !covered.contains(v) {
            return SetCheck::Fail(if closed {
                Violation::NotDominated { vertex: v }
            } else {
                Violation::NotTotallyDominated { vertex: v }
            });
        }
    }
    SetCheck::Pass
}
