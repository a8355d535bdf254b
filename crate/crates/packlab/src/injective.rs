//! Injective colorings: partitions of a vertex set into open packings.
//!
//! Besides verification this module searches for partitions into packings
//! of a fixed class size (exact-cover backtracking), lifts a partition into
//! two-packings through a prism (doubling every class), and decides whether
//! a hypercube admits a partition into maximum open packings.

use thiserror::Error;

use crate::constants;
use crate::constructions::{double_packing, hamming_coset_partition, q8_seventeen_set};
use crate::graph::{conflict_graph, Graph, VertexSet};
use crate::hypercube::hypercube;
use crate::partition::Partition;
use crate::solver::budget::Ticker;
use crate::solver::{
    compute_invariant, verify_set, Budget, InvariantKind, PackingKind, VerifyError, Violation,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InjectiveError {
    #[error("class size {class_size} does not divide the vertex count {order}")]
    ClassSizeDoesNotDivide { class_size: usize, order: usize },
    #[error("class {class_index} is not a two-packing: {violation}")]
    ClassNotPacking {
        class_index: usize,
        violation: Violation,
    },
    #[error("obstruction bounds {lower}..{upper} are inverted")]
    BadObstructionBounds { lower: usize, upper: usize },
    #[error("obstruction applies to power-of-two vertex counts, got {vertex_count}")]
    NotPowerOfTwo { vertex_count: usize },
    #[error("hypercube dimension {n} outside 1..=9")]
    DimensionOutOfRange { n: usize },
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// Outcome of checking a partition's classes against the open-packing
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringCheck {
    Pass,
    Fail {
        class_index: usize,
        violation: Violation,
    },
}

impl ColoringCheck {
    pub fn passed(&self) -> bool {
        matches!(self, ColoringCheck::Pass)
    }
}

/// A partition is an injective coloring iff every class is an open packing.
/// Reports the first violating class.
pub fn verify_injective_coloring(
    g: &Graph,
    partition: &Partition,
) -> Result<ColoringCheck, VerifyError> {
    for (i, class) in partition.classes().iter().enumerate() {
        let check = verify_set(g, class, crate::solver::SetKind::OpenPacking)?;
        if let Some(violation) = check.violation() {
            return Ok(ColoringCheck::Fail {
                class_index: i,
                violation,
            });
        }
    }
    Ok(ColoringCheck::Pass)
}

/// Result of a partition search under a budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionSearch {
    Found(Partition),
    /// The whole space was enumerated; no partition exists.
    Exhausted,
    /// The budget ran out before the space was enumerated.
    OutOfBudget,
}

impl PartitionSearch {
    pub fn found(self) -> Option<Partition> {
        match self {
            PartitionSearch::Found(p) => Some(p),
            _ => None,
        }
    }
}

/// Searches for a partition of `V(g)` into packings of exactly
/// `class_size`, by exact-cover backtracking.
///
/// Classes are discovered lowest-uncovered-vertex first, members in
/// increasing index order, so the first partition found is canonical for
/// the instance. Every emitted class re-verifies against the definitional
/// packing check.
pub fn find_partition_into_packings(
    g: &Graph,
    kind: PackingKind,
    class_size: usize,
    budget: &Budget,
) -> Result<PartitionSearch, InjectiveError> {
    let n = g.vertex_count();
    if class_size == 0 || n % class_size != 0 {
        return Err(InjectiveError::ClassSizeDoesNotDivide {
            class_size,
            order: n,
        });
    }
    if n == 0 {
        return Ok(PartitionSearch::Found(
            Partition::new(0, Vec::new()).expect("empty partition"),
        ));
    }

    let conflicts = conflict_graph(g, kind.conflict_kind());
    let rows: Vec<VertexSet> = (0..n as u32)
        .map(|v| conflicts.open_neighborhood(v))
        .collect();
    let mut search = PartitionSearchState {
        g,
        kind,
        rows,
        class_size,
        classes: Vec::new(),
        members: Vec::new(),
        ticker: Ticker::start(budget),
    };
    match search.cover(VertexSet::full(n)) {
        Flow::Found => {
            let partition =
                Partition::new(n, search.classes).expect("search classes form a partition");
            Ok(PartitionSearch::Found(partition))
        }
        Flow::NotFound => Ok(PartitionSearch::Exhausted),
        Flow::Budget => Ok(PartitionSearch::OutOfBudget),
    }
}

enum Flow {
    Found,
    NotFound,
    Budget,
}

struct PartitionSearchState<'a> {
    g: &'a Graph,
    kind: PackingKind,
    rows: Vec<VertexSet>,
    class_size: usize,
    classes: Vec<VertexSet>,
    members: Vec<u32>,
    ticker: Ticker,
}

impl PartitionSearchState<'_> {
    fn cover(&mut self, uncovered: VertexSet) -> Flow {
        let Some(pivot) = uncovered.first() else {
            return Flow::Found;
        };
        let mut allowed = uncovered.clone();
        allowed.remove(pivot);
        allowed.subtract(&self.rows[pivot as usize]);
        self.members.push(pivot);
        let flow = self.extend(&uncovered, &allowed, self.class_size - 1);
        self.members.pop();
        flow
    }

    fn extend(&mut self, uncovered: &VertexSet, allowed: &VertexSet, need: usize) -> Flow {
        if !self.ticker.tick() {
            return Flow::Budget;
        }
        if need == 0 {
            // The current class is the top `class_size` entries of the
            // member stack; entries below belong to completed classes.
            let start = self.members.len() - self.class_size;
            let class = VertexSet::from_members(
                self.g.vertex_count(),
                self.members[start..].iter().copied(),
            );
            let check = verify_set(self.g, &class, self.kind.set_kind())
                .expect("class over the graph's range");
            assert!(check.passed(), "search class failed packing verification");
            let mut rest = uncovered.clone();
            rest.subtract(&class);
            self.classes.push(class);
            let flow = self.cover(rest);
            if !matches!(flow, Flow::NotFound) {
                return flow;
            }
            self.classes.pop();
            return Flow::NotFound;
        }
        if allowed.len() < need {
            return Flow::NotFound;
        }
        for v in allowed.to_vec() {
            // Members are chosen in increasing order.
            let mut next_allowed = allowed.clone();
            next_allowed.remove_below(v + 1);
            next_allowed.subtract(&self.rows[v as usize]);
            self.members.push(v);
            let flow = self.extend(uncovered, &next_allowed, need - 1);
            self.members.pop();
            if !matches!(flow, Flow::NotFound) {
                return flow;
            }
        }
        Flow::NotFound
    }
}

/// Doubles every class of a partition into two-packings through the prism.
///
/// Class counts are preserved, class sizes double, and the result is an
/// injective coloring of `prism(g)`.
pub fn lift_partition_to_prism(
    g: &Graph,
    partition: &Partition,
) -> Result<Partition, InjectiveError> {
    let m = g.vertex_count();
    for (i, class) in partition.classes().iter().enumerate() {
        let check = verify_set(g, class, crate::solver::SetKind::TwoPacking)?;
        if let Some(violation) = check.violation() {
            return Err(InjectiveError::ClassNotPacking {
                class_index: i,
                violation,
            });
        }
    }
    let host = crate::product::prism(g);
    let lifted: Vec<VertexSet> = partition
        .classes()
        .iter()
        .map(|class| {
            VertexSet::from_members(
                2 * m,
                class.iter().flat_map(|v| [v, v + m as u32]),
            )
        })
        .collect();
    let out = Partition::new(2 * m, lifted).expect("lift preserves partition structure");
    let check = verify_injective_coloring(&host.graph, &out)?;
    assert!(
        check.passed(),
        "lifted partition must be an injective coloring of the prism"
    );
    Ok(out)
}

/// True when no divisor of `vertex_count` lies in `[lower, upper]`: then no
/// partition into equal classes of any size in that interval can exist,
/// whatever the exact value is.
pub fn power_of_two_obstruction(
    vertex_count: usize,
    lower: usize,
    upper: usize,
) -> Result<bool, InjectiveError> {
    if !vertex_count.is_power_of_two() {
        return Err(InjectiveError::NotPowerOfTwo { vertex_count });
    }
    if lower > upper {
        return Err(InjectiveError::BadObstructionBounds { lower, upper });
    }
    let mut divisor = 1usize;
    loop {
        if (lower..=upper).contains(&divisor) {
            return Ok(false);
        }
        if divisor == vertex_count {
            return Ok(true);
        }
        divisor *= 2;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Why a hypercube cannot be partitioned into maximum open packings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    /// Rule identifier: `power-of-two` or `exhausted-search`.
    pub rule: &'static str,
    pub vertex_count: usize,
    pub lower: usize,
    pub upper: usize,
}

/// Answer to "is this hypercube partitionable into maximum open packings".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectInjectiveStatus {
    pub verdict: Verdict,
    pub witness: Option<Partition>,
    pub obstruction: Option<Obstruction>,
}

impl PerfectInjectiveStatus {
    fn yes(witness: Partition) -> Self {
        PerfectInjectiveStatus {
            verdict: Verdict::Yes,
            witness: Some(witness),
            obstruction: None,
        }
    }

    fn no(obstruction: Obstruction) -> Self {
        PerfectInjectiveStatus {
            verdict: Verdict::No,
            witness: None,
            obstruction: Some(obstruction),
        }
    }

    fn unknown() -> Self {
        PerfectInjectiveStatus {
            verdict: Verdict::Unknown,
            witness: None,
            obstruction: None,
        }
    }
}

/// Decides perfect injective colorability of the dimension-`n` hypercube.
///
/// Dimensions up to 5 are settled by direct partition search; 6 and 7 by
/// lifting a partition of the cube below into maximum two-packings; 8 by
/// lifting the Hamming coset partition; 9 is refuted by the power-of-two
/// obstruction against the verified interval for its open packing number.
pub fn perfect_injective_status(
    n: usize,
    budget: &Budget,
) -> Result<PerfectInjectiveStatus, InjectiveError> {
    if !(1..=9).contains(&n) {
        return Err(InjectiveError::DimensionOutOfRange { n });
    }
    match n {
        1..=5 => {
            let cube = hypercube(n).expect("dimension within cap").graph;
            let rho = match compute_invariant(&cube, InvariantKind::OpenPacking, budget)
                .expect("open packing never errors")
                .value()
            {
                Some(v) => v,
                None => return Ok(PerfectInjectiveStatus::unknown()),
            };
            let order = cube.vertex_count();
            if order % rho != 0 {
                return Ok(PerfectInjectiveStatus::no(Obstruction {
                    rule: "indivisible-class-size",
                    vertex_count: order,
                    lower: rho,
                    upper: rho,
                }));
            }
            match find_partition_into_packings(&cube, PackingKind::OpenPacking, rho, budget)? {
                PartitionSearch::Found(p) => Ok(PerfectInjectiveStatus::yes(p)),
                PartitionSearch::Exhausted => Ok(PerfectInjectiveStatus::no(Obstruction {
                    rule: "exhausted-search",
                    vertex_count: order,
                    lower: rho,
                    upper: rho,
                })),
                PartitionSearch::OutOfBudget => Ok(PerfectInjectiveStatus::unknown()),
            }
        }
        6 | 7 => {
            let below = hypercube(n - 1).expect("dimension within cap").graph;
            let rho2 = match compute_invariant(&below, InvariantKind::TwoPacking, budget)
                .expect("two-packing never errors")
                .value()
            {
                Some(v) => v,
                None => return Ok(PerfectInjectiveStatus::unknown()),
            };
            match find_partition_into_packings(&below, PackingKind::TwoPacking, rho2, budget)? {
                PartitionSearch::Found(p) => {
                    let lifted = lift_partition_to_prism(&below, &p)?;
                    Ok(PerfectInjectiveStatus::yes(lifted))
                }
                PartitionSearch::Exhausted => Ok(PerfectInjectiveStatus::unknown()),
                PartitionSearch::OutOfBudget => Ok(PerfectInjectiveStatus::unknown()),
            }
        }
        8 => {
            let q7 = hypercube(7).expect("dimension within cap").graph;
            let cosets = hamming_coset_partition(3).expect("parameter in range");
            let lifted = lift_partition_to_prism(&q7, &cosets)?;
            Ok(PerfectInjectiveStatus::yes(lifted))
        }
        9 => {
            let q8 = hypercube(8).expect("dimension within cap").graph;
            let doubled = double_packing(&q8, &q8_seventeen_set())
                .expect("embedded certificate doubles cleanly");
            let lower = doubled.len();
            let upper = constants::RHO_O_Q9_UPPER;
            let blocked = power_of_two_obstruction(512, lower, upper)?;
            assert!(blocked, "no power of two may lie in the verified interval");
            Ok(PerfectInjectiveStatus::no(Obstruction {
                rule: "power-of-two",
                vertex_count: 512,
                lower,
                upper,
            }))
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, VertexSet};
    use crate::partition::Partition;

    fn antipodal_q3() -> Partition {
        let classes = (0..4u32)
            .map(|v| VertexSet::from_members(8, [v, v ^ 7]))
            .collect();
        Partition::new(8, classes).unwrap()
    }

    #[test]
    fn singleton_partition_always_verifies() {
        let g = cycle(5);
        let p = Partition::singletons(5);
        assert!(verify_injective_coloring(&g, &p).unwrap().passed());
    }

    #[test]
    fn q3_antipodal_classes_verify() {
        let q3 = hypercube(3).unwrap().graph;
        let p = antipodal_q3();
        assert_eq!(p.class_count(), 4);
        assert!(verify_injective_coloring(&q3, &p).unwrap().passed());
    }

    #[test]
    fn c4_halves_fail() {
        let g = cycle(4);
        let classes = vec![
            VertexSet::from_members(4, [0, 2]),
            VertexSet::from_members(4, [1, 3]),
        ];
        let p = Partition::new(4, classes).unwrap();
        let check = verify_injective_coloring(&g, &p).unwrap();
        assert_eq!(
            check,
            ColoringCheck::Fail {
                class_index: 0,
                violation: Violation::NeighborhoodOverlap {
                    a: 0,
                    b: 2,
                    shared: 1
                }
            }
        );
    }

    #[test]
    fn q3_partition_search_finds_antipodal_pairs() {
        let q3 = hypercube(3).unwrap().graph;
        let found = find_partition_into_packings(
            &q3,
            PackingKind::TwoPacking,
            2,
            &Budget::UNLIMITED,
        )
        .unwrap()
        .found()
        .unwrap();
        assert_eq!(found, antipodal_q3());
    }

    #[test]
    fn class_size_must_divide() {
        let q3 = hypercube(3).unwrap().graph;
        assert!(matches!(
            find_partition_into_packings(&q3, PackingKind::TwoPacking, 3, &Budget::UNLIMITED),
            Err(InjectiveError::ClassSizeDoesNotDivide { .. })
        ));
    }

    #[test]
    fn q5_partitions_into_maximum_open_packings() {
        let q5 = hypercube(5).unwrap().graph;
        let found =
            find_partition_into_packings(&q5, PackingKind::OpenPacking, 4, &Budget::UNLIMITED)
                .unwrap()
                .found()
                .unwrap();
        assert_eq!(found.class_count(), 8);
        assert!(verify_injective_coloring(&q5, &found).unwrap().passed());
    }

    #[test]
    fn lift_k1() {
        let k1 = crate::graph::Graph::empty(1);
        let p = Partition::singletons(1);
        let lifted = lift_partition_to_prism(&k1, &p).unwrap();
        assert_eq!(lifted.class_count(), 1);
        assert_eq!(lifted.classes()[0].len(), 2);
    }

    #[test]
    fn lift_rejects_non_packing_classes() {
        let g = crate::graph::path(2);
        let p = Partition::new(2, vec![VertexSet::from_members(2, [0, 1])]).unwrap();
        assert!(matches!(
            lift_partition_to_prism(&g, &p),
            Err(InjectiveError::ClassNotPacking { class_index: 0, .. })
        ));
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(power_of_two_obstruction(512, 34, 60), Ok(true));
        assert_eq!(power_of_two_obstruction(256, 32, 32), Ok(false));
        assert_eq!(power_of_two_obstruction(64, 8, 8), Ok(false));
        assert!(matches!(
            power_of_two_obstruction(512, 60, 34),
            Err(InjectiveError::BadObstructionBounds { .. })
        ));
        assert!(matches!(
            power_of_two_obstruction(100, 3, 5),
            Err(InjectiveError::NotPowerOfTwo { .. })
        ));
    }

    #[test]
    fn status_q1_is_yes() {
        let status = perfect_injective_status(1, &Budget::UNLIMITED).unwrap();
        assert_eq!(status.verdict, Verdict::Yes);
        assert_eq!(status.witness.unwrap().class_count(), 1);
    }

    #[test]
    fn status_q9_is_no() {
        let status = perfect_injective_status(9, &Budget::UNLIMITED).unwrap();
        assert_eq!(status.verdict, Verdict::No);
        let obstruction = status.obstruction.unwrap();
        assert_eq!(obstruction.rule, "power-of-two");
        assert_eq!((obstruction.lower, obstruction.upper), (34, 60));
    }

    #[test]
    fn status_rejects_out_of_range() {
        assert!(perfect_injective_status(0, &Budget::UNLIMITED).is_err());
        assert!(perfect_injective_status(10, &Budget::UNLIMITED).is_err());
    }
}
