//! Hamming perfect codes, their coset partitions, the derived hypercube
//! packing constructions, and the embedded 17-vertex certificate for the
//! dimension-8 hypercube.

use thiserror::Error;

use crate::graph::VertexSet;
use crate::hypercube::{hypercube, HypercubeLabeling};
use crate::partition::Partition;
use crate::product::prism;
use crate::solver::{verify_set, PackingKind, SetKind};

use super::transform::{double_packing, project_packing_to_layer, TransformError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("code parameter {k} outside {min}..={max}")]
    ParameterOutOfRange { k: usize, min: usize, max: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("construction dimension {n} outside {min}..={max}")]
    DimensionOutOfRange { n: usize, min: usize, max: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// Syndrome of a word under the parity-check matrix whose column `j`
/// (1-indexed) is the binary expansion of `j`: coordinate `i` contributes
/// `i + 1`.
fn syndrome(word: u32) -> u32 {
    let mut s = 0u32;
    let mut rest = word;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        s ^= i + 1;
    }
    s
}

/// The Hamming perfect code of length `2^k - 1`, as a vertex set of the
/// matching hypercube: all words with zero syndrome.
///
/// The code has `2^(2^k - k - 1)` elements and is a 1-perfect code. For
/// `k <= 4` the output is checked against the explicit hypercube; for
/// `k = 5` the graph is out of reach and the check is algebraic (every
/// member re-checked against the parity matrix, cardinality pinned; the
/// parity columns 1..n are distinct and nonzero, so distinct codewords are
/// at distance at least 3 and the `2^(n-k)` radius-1 balls of size `n+1`
/// tile all `2^n` words).
pub fn hamming_perfect_code(k: usize) -> Result<VertexSet, CodeError> {
    if !(2..=5).contains(&k) {
        return Err(CodeError::ParameterOutOfRange { k, min: 2, max: 5 });
    }
    let n = (1usize << k) - 1;
    let data_positions: Vec<u32> = (0..n as u32).filter(|i| !(i + 1).is_power_of_two()).collect();
    debug_assert_eq!(data_positions.len(), n - k);

    let mut code = VertexSet::empty(1usize << n);
    for message in 0u32..1 << (n - k) {
        let mut word = 0u32;
        for (bit, &pos) in data_positions.iter().enumerate() {
            if message >> bit & 1 == 1 {
                word |= 1 << pos;
            }
        }
        let mut s = syndrome(word);
        // Parity coordinates sit at the power-of-two columns, so each
        // syndrome bit is cancelled by exactly one of them.
        while s != 0 {
            let t = s.trailing_zeros();
            s &= s - 1;
            word |= 1 << ((1u32 << t) - 1);
        }
        assert_eq!(syndrome(word), 0);
        code.insert(word);
    }
    assert_eq!(code.len(), 1usize << (n - k), "code cardinality");

    if k <= 4 {
        let cube = hypercube(n).expect("dimension within cap").graph;
        let check = verify_set(&cube, &code, SetKind::PerfectCode).expect("well-formed code set");
        assert!(check.passed(), "Hamming code failed the perfect-code check");
    }
    Ok(code)
}

/// Partitions the `2^k - 1`-cube into the `2^k` cosets of the Hamming code,
/// ordered by syndrome. Every class is itself a 1-perfect code.
pub fn hamming_coset_partition(k: usize) -> Result<Partition, CodeError> {
    if !(2..=4).contains(&k) {
        return Err(CodeError::ParameterOutOfRange { k, min: 2, max: 4 });
    }
    let n = (1usize << k) - 1;
    let code = hamming_perfect_code(k)?;
    let cube = hypercube(n).expect("dimension within cap").graph;

    let mut classes = Vec::with_capacity(n + 1);
    for s in 0..=n as u32 {
        // Syndrome s != 0 is reached by flipping the coordinate whose
        // parity column equals s.
        let translate = if s == 0 { 0 } else { 1 << (s - 1) };
        let class = VertexSet::from_members(1 << n, code.iter().map(|c| c ^ translate));
        let check = verify_set(&cube, &class, SetKind::PerfectCode).expect("well-formed class");
        assert!(check.passed(), "coset {s} is not a perfect code");
        classes.push(class);
    }
    Ok(Partition::new(1 << n, classes).expect("cosets partition the cube"))
}

pub const CONSTRUCTION_MIN_DIMENSION: usize = 2;
pub const CONSTRUCTION_MAX_DIMENSION: usize = 15;

/// Constructs a large packing of the dimension-`n` hypercube.
///
/// Two-packings come from the Hamming code of the next dimension of the
/// form `2^k - 1`, projected down one layer at a time; the code splits in
/// half under every projection, so the result has `2^(n - ⌊log n⌋ - 1)`
/// elements. Open packings double the two-packing construction one
/// dimension below, giving `2^(n - ⌊log(n-1)⌋ - 1)` elements.
pub fn hypercube_packing_construction(
    n: usize,
    kind: PackingKind,
) -> Result<VertexSet, ConstructionError> {
    if !(CONSTRUCTION_MIN_DIMENSION..=CONSTRUCTION_MAX_DIMENSION).contains(&n) {
        return Err(ConstructionError::DimensionOutOfRange {
            n,
            min: CONSTRUCTION_MIN_DIMENSION,
            max: CONSTRUCTION_MAX_DIMENSION,
        });
    }
    let result = match kind {
        PackingKind::TwoPacking => {
            let set = two_packing_construction(n)?;
            let floor_log = n.ilog2() as usize;
            assert!(set.len() >= 1 << (n - floor_log - 1), "construction too small");
            set
        }
        PackingKind::OpenPacking => {
            let below = two_packing_construction(n - 1)?;
            let base = hypercube(n - 1).expect("dimension within cap").graph;
            let set = double_packing(&base, &below)?;
            let floor_log = (n - 1).ilog2() as usize;
            assert!(set.len() >= 1 << (n - floor_log - 1), "construction too small");
            set
        }
    };
    Ok(result)
}

fn two_packing_construction(n: usize) -> Result<VertexSet, ConstructionError> {
    if n == 1 {
        // A single vertex of the 1-cube.
        return Ok(VertexSet::from_members(2, [0]));
    }
    let mut k = 2;
    while (1usize << k) - 1 < n {
        k += 1;
    }
    let mut current = hamming_perfect_code(k)?;
    for m in ((n + 1)..=(1usize << k) - 1).rev() {
        let host = prism(&hypercube(m - 1).expect("dimension within cap").graph);
        current = project_packing_to_layer(&host, &current)?;
    }
    Ok(current)
}

/// The 17 strings of the embedded two-packing of the dimension-8 hypercube.
pub const Q8_SEVENTEEN_STRINGS: [&str; 17] = [
    "00000000", "00001110", "00110010", "00111100", "01010110", "01011000", "01100100", "01101001",
    "01111111", "10010100", "10100101", "10101011", "11000111", "11001100", "11011011", "11100010",
    "11110001",
];

/// The embedded 17-element two-packing of the dimension-8 hypercube,
/// re-verified on every call.
pub fn q8_seventeen_set() -> VertexSet {
    let labeling = HypercubeLabeling::new(8);
    let set = VertexSet::from_members(
        256,
        Q8_SEVENTEEN_STRINGS
            .iter()
            .map(|s| labeling.parse(s).expect("embedded label is valid")),
    );
    assert_eq!(set.len(), 17);
    let q8 = hypercube(8).expect("dimension within cap").graph;
    let check = verify_set(&q8, &set, SetKind::TwoPacking).expect("well-formed set");
    assert!(check.passed(), "embedded set must be a two-packing");
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::hypercube;
    use crate::solver::{verify_set, SetKind};

    #[test]
    fn code_k2_is_antipodal_pair() {
        let code = hamming_perfect_code(2).unwrap();
        assert_eq!(code.to_vec(), vec![0b000, 0b111]);
    }

    #[test]
    fn code_k3_has_16_words() {
        let code = hamming_perfect_code(3).unwrap();
        assert_eq!(code.len(), 16);
        assert!(code.contains(0));
    }

    #[test]
    fn code_k4_has_2048_words() {
        let code = hamming_perfect_code(4).unwrap();
        assert_eq!(code.len(), 2048);
    }

    #[test]
    fn code_parameter_range() {
        assert!(hamming_perfect_code(1).is_err());
        assert!(hamming_perfect_code(6).is_err());
    }

    #[test]
    #[ignore = "allocates a 2^31-bit set; run on demand"]
    fn code_k5_cardinality() {
        let code = hamming_perfect_code(5).unwrap();
        assert_eq!(code.len(), 1 << 26);
    }

    #[test]
    fn coset_partition_k2() {
        let p = hamming_coset_partition(2).unwrap();
        assert_eq!(p.class_count(), 4);
        assert!(p.classes().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn coset_partition_k3() {
        let p = hamming_coset_partition(3).unwrap();
        assert_eq!(p.class_count(), 8);
        assert!(p.classes().iter().all(|c| c.len() == 16));
        // Distinct classes are disjoint, so unions have full combined size.
        let mut union = p.classes()[0].clone();
        union.union_with(&p.classes()[5]);
        assert_eq!(union.len(), 32);
    }

    #[test]
    fn construction_sizes_match_formulas() {
        for n in 2..=10 {
            let two = hypercube_packing_construction(n, PackingKind::TwoPacking).unwrap();
            assert_eq!(two.len(), 1 << (n - n.ilog2() as usize - 1), "two n={n}");
            let open = hypercube_packing_construction(n, PackingKind::OpenPacking).unwrap();
            assert_eq!(
                open.len(),
                1 << (n - (n - 1).ilog2() as usize - 1),
                "open n={n}"
            );
        }
    }

    #[test]
    fn construction_n7_is_hamming_code() {
        let two = hypercube_packing_construction(7, PackingKind::TwoPacking).unwrap();
        assert_eq!(two, hamming_perfect_code(3).unwrap());
        assert_eq!(two.len(), 16);
    }

    #[test]
    fn construction_n6_two_packing() {
        let two = hypercube_packing_construction(6, PackingKind::TwoPacking).unwrap();
        assert_eq!(two.len(), 8);
        let q6 = hypercube(6).unwrap().graph;
        assert!(verify_set(&q6, &two, SetKind::TwoPacking).unwrap().passed());
    }

    #[test]
    fn construction_n9_open_packing() {
        let open = hypercube_packing_construction(9, PackingKind::OpenPacking).unwrap();
        assert_eq!(open.len(), 32);
        let q9 = hypercube(9).unwrap().graph;
        assert!(verify_set(&q9, &open, SetKind::OpenPacking).unwrap().passed());
    }

    #[test]
    fn construction_range() {
        assert!(hypercube_packing_construction(1, PackingKind::TwoPacking).is_err());
        assert!(hypercube_packing_construction(16, PackingKind::TwoPacking).is_err());
    }

    #[test]
    fn embedded_q8_set() {
        let t = q8_seventeen_set();
        assert_eq!(t.len(), 17);
        assert!(t.contains(0));
        assert!(t.contains(0b11110001));
    }

    #[test]
    fn doubling_embedded_set_reaches_34_in_q9() {
        let q8 = hypercube(8).unwrap().graph;
        let doubled = double_packing(&q8, &q8_seventeen_set()).unwrap();
        assert_eq!(doubled.len(), 34);
        let q9 = hypercube(9).unwrap().graph;
        assert!(verify_set(&q9, &doubled, SetKind::OpenPacking)
            .unwrap()
            .passed());
    }
}
