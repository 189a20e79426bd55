use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{AdditiveSpan, IdealSet, Side};
use crate::ring::{Elem, FiniteRing};

/// Unit flags for every element from walks along powers `x, x², …`.
///
/// A walk stops at `1`, at `0`, at an element already classified, or on
/// closing a cycle; every element on it shares the verdict, since powers of
/// units are units and powers of non-units are not. Each element is
/// visited once.
pub(crate) fn unit_flags(ring: &FiniteRing) -> Vec<bool> {
    const UNKNOWN: u8 = 0;
    const UNIT: u8 = 1;
    const NON_UNIT: u8 = 2;
    const ON_WALK: u8 = 3;
    let n = ring.size() as usize;
    let mut state = vec![UNKNOWN; n];
    state[ring.one() as usize] = UNIT;
    if ring.zero() != ring.one() {
        state[ring.zero() as usize] = NON_UNIT;
    }
    let mut walk = Vec::new();
    for x in 0..n {
        if state[x] != UNKNOWN {
            continue;
        }
        walk.clear();
        let mut y = x as Elem;
        let verdict = loop {
            match state[y as usize] {
                UNKNOWN => {
                    state[y as usize] = ON_WALK;
                    walk.push(y);
                    y = ring.mul(y, x as Elem);
                }
                // a cycle of powers that misses 1
                ON_WALK => break NON_UNIT,
                known => break known,
            }
        };
        for &w in &walk {
            state[w as usize] = verdict;
        }
    }
    state.into_iter().map(|s| s == UNIT).collect()
}

/// A nilpotent `x` has `Rx ⊋ Rx² ⊋ … ⊋ 0`, so its index is below `log₂|R|`
/// and `x^(2^k) = 0` once `2^k ≥ |R|`.
fn is_nilpotent_fast(ring: &FiniteRing, x: Elem) -> bool {
    let mut y = x;
    let mut k = 1u64;
    while k < ring.size() && y != ring.zero() {
        y = ring.mul(y, y);
        k *= 2;
    }
    y == ring.zero()
}

/// `J(R) = {a : 1 - ra is a unit for every r}`.
///
/// Only nilpotent elements can qualify, so those are the candidates; each
/// accepted element brings its two-sided ideal along. The result is checked
/// to be nilpotent.
pub fn jacobson_radical(ring: &FiniteRing) -> Result<IdealSet> {
    let units = unit_flags(ring);
    let unit = |x: Elem| units[x as usize];
    let gens = ring.additive_generators();
    let mut span = AdditiveSpan::new(ring)?;
    for a in ring.elements() {
        if span.contains(a) || !is_nilpotent_fast(ring, a) {
            continue;
        }
        let quasi_regular = (0..ring.size())
            .into_par_iter()
            .all(|r| unit(ring.sub(ring.one(), ring.mul(r, a))));
        if quasi_regular {
            for &g in gens {
                let ga = ring.mul(g, a);
                for &h in gens {
                    span.insert(ring.mul(ga, h));
                }
            }
        }
    }
    let j = IdealSet::from_bits(ring, span.bits(), Side::TwoSided)?;
    if j.nilpotency_index()?.is_none() {
        return Err(Error::inconsistent(format!(
            "radical of {} is not nilpotent",
            ring.label()
        )));
    }
    Ok(j)
}

/// Local iff the non-units are closed under addition.
pub fn is_local(ring: &FiniteRing) -> Result<bool> {
    let units = unit_flags(ring);
    let non_units: Vec<Elem> = ring.elements().filter(|&x| !units[x as usize]).collect();
    let mut span = AdditiveSpan::new(ring)?;
    for &x in &non_units {
        span.insert(x);
        if span.len() > non_units.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every nonzero element is a unit.
pub fn is_division_ring(ring: &FiniteRing) -> bool {
    ring.size() >= 2
        && (0..ring.size())
            .into_par_iter()
            .all(|x| x == ring.zero() || ring.is_unit(x))
}
