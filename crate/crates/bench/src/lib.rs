//! Benchmarks live in `benches/`; run them with `cargo bench -p morphic-bench`.

use morphic_core::{FiniteGroup, FiniteRing};

/// Builds a ring from a spec string, panicking on bad input.
pub fn ring(spec: &str) -> FiniteRing {
    FiniteRing::build(&spec.parse().expect("ring spec")).expect("ring builds")
}

pub fn group(spec: &str) -> FiniteGroup {
    FiniteGroup::build(&spec.parse().expect("group spec")).expect("group builds")
}

/// `R` with group `G` adjoined.
pub fn group_ring(r: &str, g: &str) -> FiniteRing {
    FiniteRing::group_ring(ring(r), group(g)).expect("group ring builds")
}
