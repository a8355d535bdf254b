//! Reference values for hypercube invariants up to dimension 9.
//!
//! Values beyond desk-scale search are stored here with their provenance so
//! reports can distinguish what was computed, what is certified by a bundled
//! construction, and what is quoted from the literature. Computed results
//! are cross-checked against this table and must never contradict it.

use crate::solver::InvariantKind;

/// A literature or certificate-backed reference for one table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceValue {
    Exact {
        value: usize,
        citation: &'static str,
    },
    /// Only an interval is known; the exact value is open.
    Interval {
        lower: usize,
        upper: usize,
        citation: &'static str,
    },
}

impl ReferenceValue {
    pub fn bounds(&self) -> (usize, usize) {
        match *self {
            ReferenceValue::Exact { value, .. } => (value, value),
            ReferenceValue::Interval { lower, upper, .. } => (lower, upper),
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            ReferenceValue::Exact { citation, .. } => citation,
            ReferenceValue::Interval { citation, .. } => citation,
        }
    }

    /// True when `lower..=upper` is consistent with this reference.
    pub fn admits(&self, lower: usize, upper: usize) -> bool {
        let (lo, hi) = self.bounds();
        lower <= hi && lo <= upper
    }
}

const GAMMA: [usize; 9] = [1, 2, 2, 4, 7, 12, 16, 32, 62];
const GAMMA_T: [usize; 9] = [2, 2, 4, 4, 8, 14, 24, 32, 64];
const RHO2: [usize; 7] = [1, 1, 2, 2, 4, 8, 16];
const RHO_O: [usize; 8] = [2, 2, 2, 4, 4, 8, 16, 32];

const CITE_SMALL_SEARCH: &str = "desk-scale exact search";
const CITE_GAMMA_FAMILIES: &str = "Harary-Livingston (1993); van Wee (1988)";
const CITE_GAMMA_Q9: &str = "Ostergard-Blass (2001)";
const CITE_GAMMA_T: &str = "Azarija-Henning-Klavzar (2017), doubling of gamma one dimension down";
const CITE_PERFECT_CODE: &str = "Hamming perfect code meets the sphere bound";
const CITE_RHO2_Q8: &str =
    "bundled 17-vertex certificate; upper bound by counting against a perfect-code layer";
const CITE_RHO_O_Q9: &str = "doubled 17-vertex certificate; doubled layer-counting upper bound";

/// Upper bound for the two-packing number of the dimension-8 hypercube.
pub const RHO2_Q8_UPPER: usize = 30;
/// Verified lower bound: the bundled 17-vertex certificate.
pub const RHO2_Q8_LOWER: usize = 17;
/// Bounds for the open packing number of the dimension-9 hypercube.
pub const RHO_O_Q9_LOWER: usize = 34;
pub const RHO_O_Q9_UPPER: usize = 60;

/// Reference value for `kind` on the dimension-`n` hypercube, when known.
pub fn hypercube_reference(kind: InvariantKind, n: usize) -> Option<ReferenceValue> {
    if n == 0 || n > 9 {
        return None;
    }
    let exact = |value, citation| Some(ReferenceValue::Exact { value, citation });
    match kind {
        InvariantKind::Domination => exact(
            GAMMA[n - 1],
            match n {
                7 | 8 => CITE_GAMMA_FAMILIES,
                9 => CITE_GAMMA_Q9,
                _ => CITE_SMALL_SEARCH,
            },
        ),
        InvariantKind::TotalDomination => exact(
            GAMMA_T[n - 1],
            if n >= 7 {
                CITE_GAMMA_T
            } else {
                CITE_SMALL_SEARCH
            },
        ),
        InvariantKind::TwoPacking => match n {
            1..=6 => exact(RHO2[n - 1], CITE_SMALL_SEARCH),
            7 => exact(16, CITE_PERFECT_CODE),
            8 => Some(ReferenceValue::Interval {
                lower: RHO2_Q8_LOWER,
                upper: RHO2_Q8_UPPER,
                citation: CITE_RHO2_Q8,
            }),
            _ => None, // open beyond dimension 8
        },
        InvariantKind::OpenPacking => match n {
            1..=6 => exact(RHO_O[n - 1], CITE_SMALL_SEARCH),
            7 => exact(16, "doubling a maximum two-packing one dimension down"),
            8 => exact(32, CITE_PERFECT_CODE),
            9 => Some(ReferenceValue::Interval {
                lower: RHO_O_Q9_LOWER,
                upper: RHO_O_Q9_UPPER,
                citation: CITE_RHO_O_Q9,
            }),
            _ => None,
        },
        InvariantKind::InjectiveChromatic => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        for n in 1..=9 {
            assert!(hypercube_reference(InvariantKind::Domination, n).is_some());
            assert!(hypercube_reference(InvariantKind::TotalDomination, n).is_some());
        }
        assert!(hypercube_reference(InvariantKind::TwoPacking, 9).is_none());
        assert!(hypercube_reference(InvariantKind::InjectiveChromatic, 3).is_none());
    }

    #[test]
    fn interval_admits() {
        let r = hypercube_reference(InvariantKind::OpenPacking, 9).unwrap();
        assert!(r.admits(34, 60));
        assert!(r.admits(34, usize::MAX)); // a lower bound alone is consistent
        assert!(!r.admits(61, 100));
        assert!(!r.admits(0, 33));
    }

    #[test]
    fn known_cells_match_sphere_arithmetic() {
        // gamma(Q_{2^k - 1}) equals the perfect-code cardinality.
        let (g7, _) = hypercube_reference(InvariantKind::Domination, 7)
            .unwrap()
            .bounds();
        assert_eq!(g7, 16);
        let (g_t8, _) = hypercube_reference(InvariantKind::TotalDomination, 8)
            .unwrap()
            .bounds();
        assert_eq!(g_t8, 2 * 16);
    }
}
