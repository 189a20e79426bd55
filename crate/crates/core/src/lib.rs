//! Finite rings, finite groups and their group rings, with exact decision
//! procedures for when a group ring is a principal ideal ring.

pub mod classify;
pub mod corpus;
pub mod crosscheck;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod group;
pub mod group_ring;
pub mod ideal;
pub mod oracle;
mod parse;
pub mod ring;

pub use classify::{decide, decide_local, Decision, Reason, Verdict};
pub use error::{Error, Result};
pub use graded::{associated_graded, GradedRing};
pub use group::{FiniteGroup, GroupSpec, Subgroup};
pub use group_ring::GroupRingView;
pub use ideal::{quotient_ring, AdditiveSpan, IdealSet, QuotientRing, Side};
pub use oracle::OracleConfig;
pub use ring::{Elem, ElementView, FiniteRing, RingAutomorphism, RingSpec};
