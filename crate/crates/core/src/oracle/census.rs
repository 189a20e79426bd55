//! Principal ideals and annihilators of every element, and the principal
//! ideal ring and morphic tests built on them.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::idempotents::central_primitive_idempotents;
use super::radical::unit_flags;
use super::OracleConfig;
use crate::error::Result;
use crate::ideal::{AdditiveSpan, IdealSet, Side};
use crate::ring::{Elem, FiniteRing};

/// `Rx` as a left ideal.
pub fn principal_left_ideal(ring: &FiniteRing, x: Elem) -> Result<IdealSet> {
    IdealSet::principal(ring, x, Side::Left)
}

/// `xR` as a right ideal.
pub fn principal_right_ideal(ring: &FiniteRing, x: Elem) -> Result<IdealSet> {
    IdealSet::principal(ring, x, Side::Right)
}

fn annihilator_bits(ring: &FiniteRing, a: Elem, side: Side) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(ring.size() as usize);
    let hits: Vec<Elem> = (0..ring.size())
        .into_par_iter()
        .filter(|&x| {
            let p = if side == Side::Left {
                ring.mul(x, a)
            } else {
                ring.mul(a, x)
            };
            p == ring.zero()
        })
        .collect();
    for x in hits {
        bits.insert(x as usize);
    }
    bits
}

/// `ann_ℓ(a) = {x : xa = 0}`.
pub fn annihilator_left(ring: &FiniteRing, a: Elem) -> Result<IdealSet> {
    ring.check(a)?;
    IdealSet::from_bits(ring, &annihilator_bits(ring, a, Side::Left), Side::Left)
}

/// `ann_r(a) = {x : ax = 0}`.
pub fn annihilator_right(ring: &FiniteRing, a: Elem) -> Result<IdealSet> {
    ring.check(a)?;
    IdealSet::from_bits(ring, &annihilator_bits(ring, a, Side::Right), Side::Right)
}

/// Distinct ideals, numbered in order of first appearance.
#[derive(Default)]
struct Interner {
    sets: Vec<FixedBitSet>,
    gens: Vec<Vec<Elem>>,
    index: HashMap<FixedBitSet, u32>,
}

impl Interner {
    fn intern(&mut self, bits: FixedBitSet, gens: Vec<Elem>) -> u32 {
        if let Some(&id) = self.index.get(&bits) {
            return id;
        }
        let id = self.sets.len() as u32;
        self.index.insert(bits.clone(), id);
        self.sets.push(bits);
        self.gens.push(gens);
        id
    }

    fn get(&self, bits: &FixedBitSet) -> Option<u32> {
        self.index.get(bits).copied()
    }

    fn len(&self) -> usize {
        self.sets.len()
    }
}

/// Principal ideals on one side for every element.
struct SideCensus {
    side: Side,
    id: Vec<u32>,
    ideals: Interner,
}

fn side_census(ring: &FiniteRing, side: Side, units: &[bool]) -> Result<SideCensus> {
    let gens = ring.additive_generators();
    let whole = IdealSet::whole(ring)?;
    let spans: Vec<Option<(FixedBitSet, Vec<Elem>)>> = (0..ring.size())
        .into_par_iter()
        .map(|a| {
            if units[a as usize] {
                return Ok(None);
            }
            let mut span = AdditiveSpan::new(ring)?;
            for &g in gens {
                span.insert(if side == Side::Left {
                    ring.mul(g, a)
                } else {
                    ring.mul(a, g)
                });
            }
            Ok(Some(span.into_parts()))
        })
        .collect::<Result<_>>()?;
    let mut ideals = Interner::default();
    let whole_id = ideals.intern(whole.bits().clone(), whole.additive_generators().to_vec());
    let id = spans
        .into_iter()
        .map(|s| match s {
            None => whole_id,
            Some((bits, gens)) => ideals.intern(bits, gens),
        })
        .collect();
    Ok(SideCensus { side, id, ideals })
}

impl SideCensus {
    /// First sum of two principal ideals that is not principal.
    fn non_principal_sum(&self, ring: &FiniteRing) -> Result<Option<IdealSet>> {
        let n = self.ideals.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.ideals.sets[i].count_ones(..), i));
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[pos + 1..] {
                let (a, b) = (&self.ideals.sets[i], &self.ideals.sets[j]);
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let mut span = AdditiveSpan::new(ring)?;
                for &g in self.ideals.gens[i].iter().chain(&self.ideals.gens[j]) {
                    span.insert(g);
                }
                if self.ideals.get(span.bits()).is_none() {
                    return Ok(Some(IdealSet::from_bits(ring, span.bits(), self.side)?));
                }
            }
        }
        Ok(None)
    }
}

/// Outcome of the principal ideal ring scan.
#[derive(Debug, Clone)]
pub struct PirReport {
    pub principal: bool,
    /// A one-sided ideal generated by no single element, when one exists.
    pub witness: Option<IdealSet>,
    pub left_principal_count: usize,
    pub right_principal_count: usize,
}

/// Every left ideal is `Rx` and every right ideal is `xR`.
///
/// The ring is split into blocks `Re` over its centrally primitive
/// idempotents and each block is scanned on its own; see
/// [`is_principal_ideal_ring_unsplit`].
pub fn is_principal_ideal_ring(ring: &FiniteRing, cfg: &OracleConfig) -> Result<PirReport> {
    cfg.admit(ring)?;
    let blocks = central_primitive_idempotents(ring, cfg)?;
    if blocks.len() <= 1 {
        return pir_scan(ring);
    }
    let mut report = PirReport {
        principal: true,
        witness: None,
        left_principal_count: 1,
        right_principal_count: 1,
    };
    for e in blocks {
        let block = FiniteRing::corner(ring, e)?;
        let r = pir_scan(&block)?;
        report.left_principal_count *= r.left_principal_count;
        report.right_principal_count *= r.right_principal_count;
        if let (None, Some(w)) = (&report.witness, r.witness) {
            let (_, embed) = block.corner_embedding().expect("corner ring");
            let members: Vec<Elem> = w.elements().iter().map(|&x| embed[x as usize]).collect();
            report.witness = Some(IdealSet::from_elements(ring, &members, w.side())?);
            report.principal = false;
        }
    }
    Ok(report)
}

/// The principal ideal test on the whole ring at once.
///
/// All principal ideals are enumerated; since every ideal is a finite sum
/// of principal ones, the ring is a principal ideal ring exactly when each
/// sum of two principal ideals is again principal.
pub fn is_principal_ideal_ring_unsplit(ring: &FiniteRing, cfg: &OracleConfig) -> Result<PirReport> {
    cfg.admit(ring)?;
    pir_scan(ring)
}

fn pir_scan(ring: &FiniteRing) -> Result<PirReport> {
    let units = unit_flags(ring);
    let left = side_census(ring, Side::Left, &units)?;
    let right = side_census(ring, Side::Right, &units)?;
    let witness = match left.non_principal_sum(ring)? {
        Some(w) => Some(w),
        None => right.non_principal_sum(ring)?,
    };
    Ok(PirReport {
        principal: witness.is_none(),
        witness,
        left_principal_count: left.ideals.len(),
        right_principal_count: right.ideals.len(),
    })
}

/// Least `b` with `Ra = ann_ℓ(b)` and `Rb = ann_ℓ(a)`.
pub fn is_left_morphic_element(
    ring: &FiniteRing,
    a: Elem,
    cfg: &OracleConfig,
) -> Result<Option<Elem>> {
    morphic_element(ring, a, Side::Left, cfg)
}

/// Least `b` with `aR = ann_r(b)` and `bR = ann_r(a)`.
pub fn is_right_morphic_element(
    ring: &FiniteRing,
    a: Elem,
    cfg: &OracleConfig,
) -> Result<Option<Elem>> {
    morphic_element(ring, a, Side::Right, cfg)
}

fn morphic_element(
    ring: &FiniteRing,
    a: Elem,
    side: Side,
    cfg: &OracleConfig,
) -> Result<Option<Elem>> {
    cfg.admit(ring)?;
    ring.check(a)?;
    let principal = IdealSet::principal(ring, a, side)?;
    let ann = annihilator_bits(ring, a, side);
    let want = ann.count_ones(..);
    for b in ann.ones() {
        let b = b as Elem;
        let pb = IdealSet::principal(ring, b, side)?;
        if pb.len() != want || pb.bits() != &ann {
            continue;
        }
        if &annihilator_bits(ring, b, side) == principal.bits() {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// Outcome of the morphic scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphicReport {
    pub morphic: bool,
    /// Least element that fails, with the failing side.
    pub witness: Option<(Side, Elem)>,
}

/// Every element is left and right morphic.
///
/// `ann_ℓ(a)` depends only on `aR` and `ann_r(a)` only on `Ra`, so one
/// annihilator scan per distinct principal ideal suffices. Candidate
/// witnesses are looked up by the exact pair (annihilator, principal ideal).
pub fn is_morphic_ring(ring: &FiniteRing, cfg: &OracleConfig) -> Result<MorphicReport> {
    cfg.admit(ring)?;
    let units = unit_flags(ring);
    let left = side_census(ring, Side::Left, &units)?;
    let right = side_census(ring, Side::Right, &units)?;
    let left_fail = first_non_morphic(ring, &left, &right);
    let right_fail = first_non_morphic(ring, &right, &left);
    let witness = match (left_fail, right_fail) {
        (Some(a), _) => Some((Side::Left, a)),
        (None, Some(a)) => Some((Side::Right, a)),
        (None, None) => None,
    };
    Ok(MorphicReport {
        morphic: witness.is_none(),
        witness,
    })
}

/// `own` holds the principal ideals on the tested side; the annihilator on
/// that side of `a` is determined by `a`'s principal ideal in `other`.
fn first_non_morphic(ring: &FiniteRing, own: &SideCensus, other: &SideCensus) -> Option<Elem> {
    let n = ring.size() as usize;
    let mut rep = vec![u32::MAX as Elem; other.ideals.len()];
    for a in (0..n).rev() {
        rep[other.id[a] as usize] = a as Elem;
    }
    let ann_id: Vec<Option<u32>> = rep
        .par_iter()
        .map(|&a| own.ideals.get(&annihilator_bits(ring, a, own.side)))
        .collect();
    let ann_of = |a: usize| ann_id[other.id[a] as usize];
    let mut witness_for: HashMap<(u32, u32), Elem> = HashMap::new();
    for b in 0..n {
        if let Some(k) = ann_of(b) {
            witness_for.entry((k, own.id[b])).or_insert(b as Elem);
        }
    }
    (0..n)
        .find(|&a| match ann_of(a) {
            Some(k) => !witness_for.contains_key(&(own.id[a], k)),
            None => true,
        })
        .map(|a| a as Elem)
}
