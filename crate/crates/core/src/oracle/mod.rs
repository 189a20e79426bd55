//! Brute-force structural ground truth for small rings.
//!
//! Nothing here uses classification results: radicals come from the
//! quasi-regularity definition, principal ideal tests from exhaustive
//! ideal scans and morphic tests from annihilator comparisons.

mod census;
mod idempotents;
mod lattice;
mod princrings;
mod radical;

pub use census::{
    annihilator_left, annihilator_right, is_left_morphic_element, is_morphic_ring,
    is_principal_ideal_ring, is_principal_ideal_ring_unsplit, is_right_morphic_element,
    principal_left_ideal, principal_right_ideal, MorphicReport, PirReport,
};
pub use idempotents::{
    central_idempotents, central_primitive_idempotents, idempotents, is_primitive_idempotent,
};
pub use lattice::{left_ideals, right_ideals};
pub use princrings::{check_princrings, BlockReport, PrincringsReport};
pub use radical::{is_division_ring, is_local, jacobson_radical};

use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// Default carrier cap for lattice, principal-ideal and morphic scans.
pub const DEFAULT_CAP: u64 = 4096;

/// Default cap on enumerated centers.
pub const DEFAULT_CENTER_CAP: u64 = 1 << 20;

/// Size limits for the exhaustive scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest carrier accepted by the quadratic scans.
    pub cap: u64,
    /// Largest center that may be enumerated.
    pub center_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_CAP,
            center_cap: DEFAULT_CENTER_CAP,
        }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: u64) -> Self {
        OracleConfig {
            cap,
            ..Self::default()
        }
    }

    pub(crate) fn admit(&self, ring: &FiniteRing) -> Result<()> {
        if ring.size() > self.cap {
            Err(Error::CapExceeded {
                size: ring.size(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}
