//! Partitions of a vertex range into labeled classes.

use thiserror::Error;

use crate::graph::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("vertex {vertex} appears in classes {first_class} and {second_class}")]
    Overlap {
        vertex: u32,
        first_class: usize,
        second_class: usize,
    },
    #[error("vertex {vertex} is not covered by any class")]
    Gap { vertex: u32 },
    #[error("class {index} is empty")]
    EmptyClass { index: usize },
    #[error("class {index} is over universe {found}, expected {expected}")]
    UniverseMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
}

/// An ordered list of pairwise-disjoint, non-empty vertex sets covering the
/// whole range `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: usize,
    classes: Vec<VertexSet>,
}

impl Partition {
    /// Validates disjointness, coverage and non-emptiness.
    pub fn new(universe: usize, classes: Vec<VertexSet>) -> Result<Self, PartitionError> {
        let mut owner: Vec<Option<usize>> = vec![None; universe];
        for (i, class) in classes.iter().enumerate() {
            if class.universe() != universe {
                return Err(PartitionError::UniverseMismatch {
                    index: i,
                    found: class.universe(),
                    expected: universe,
                });
            }
            if class.is_empty() {
                return Err(PartitionError::EmptyClass { index: i });
            }
            for v in class.iter() {
                if let Some(first) = owner[v as usize] {
                    return Err(PartitionError::Overlap {
                        vertex: v,
                        first_class: first,
                        second_class: i,
                    });
                }
                owner[v as usize] = Some(i);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(PartitionError::Gap { vertex: v as u32 });
        }
        Ok(Partition { universe, classes })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: u32) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// Partition of `0..universe` into singletons.
    pub fn singletons(universe: usize) -> Self {
        let classes = (0..universe as u32)
            .map(|v| VertexSet::from_members(universe, [v]))
            .collect();
        Partition { universe, classes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(universe: usize, members: &[u32]) -> VertexSet {
        VertexSet::from_members(universe, members.iter().copied())
    }

    #[test]
    fn valid_partition() {
        let p = Partition::new(4, vec![set(4, &[0, 2]), set(4, &[1, 3])]).unwrap();
        assert_eq!(p.class_count(), 2);
        assert_eq!(p.class_of(3), Some(1));
    }

    #[test]
    fn overlap_reported() {
        let err = Partition::new(3, vec![set(3, &[0, 1]), set(3, &[1, 2])]).unwrap_err();
        assert_eq!(
            err,
            PartitionError::Overlap {
                vertex: 1,
                first_class: 0,
                second_class: 1
            }
        );
    }

    #[test]
    fn gap_reported() {
        let err = Partition::new(3, vec![set(3, &[0, 2])]).unwrap_err();
        assert_eq!(err, PartitionError::Gap { vertex: 1 });
    }

    #[test]
    fn empty_class_rejected() {
        let err = Partition::new(2, vec![set(2, &[0, 1]), set(2, &[])]).unwrap_err();
        assert_eq!(err, PartitionError::EmptyClass { index: 1 });
    }

    #[test]
    fn singletons_cover() {
        let p = Partition::singletons(5);
        assert_eq!(p.class_count(), 5);
    }
}
