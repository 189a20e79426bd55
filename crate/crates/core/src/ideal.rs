//! Additive subgroups and one- or two-sided ideals as carrier bitsets.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

/// Largest carrier on which ideals are materialized as bitsets.
pub const BITSET_CAP: u64 = 1 << 24;

fn bitset_for(ring: &FiniteRing) -> Result<FixedBitSet> {
    if ring.size() > BITSET_CAP {
        return Err(Error::CapExceeded {
            size: ring.size(),
            cap: BITSET_CAP,
        });
    }
    Ok(FixedBitSet::with_capacity(ring.size() as usize))
}

/// Incrementally grown additive subgroup `⟨g_1, …, g_k⟩`.
#[derive(Clone)]
pub struct AdditiveSpan {
    ring: FiniteRing,
    bits: FixedBitSet,
    elems: Vec<Elem>,
    gens: Vec<Elem>,
}

impl AdditiveSpan {
    /// The zero subgroup.
    pub fn new(ring: &FiniteRing) -> Result<Self> {
        let mut bits = bitset_for(ring)?;
        bits.insert(ring.zero() as usize);
        Ok(AdditiveSpan {
            ring: ring.clone(),
            bits,
            elems: vec![ring.zero()],
            gens: Vec::new(),
        })
    }

    pub fn of(ring: &FiniteRing, gens: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut s = Self::new(ring)?;
        for g in gens {
            s.insert(g);
        }
        Ok(s)
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x as usize)
    }

    /// Adds `x`; returns whether the span grew.
    pub fn insert(&mut self, x: Elem) -> bool {
        if self.contains(x) {
            return false;
        }
        let m = self.elems.len();
        let mut shift = x;
        while !self.contains(shift) {
            for i in 0..m {
                let y = self.ring.add(self.elems[i], shift);
                self.bits.insert(y as usize);
                self.elems.push(y);
            }
            shift = self.ring.add(shift, x);
        }
        self.gens.push(x);
        true
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    /// The inserted elements that enlarged the span.
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub(crate) fn into_parts(self) -> (FixedBitSet, Vec<Elem>) {
        (self.bits, self.gens)
    }
}

/// Which multiplications an ideal absorbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn absorbs_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    pub fn absorbs_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }

    fn meet(self, other: Side) -> Side {
        match (
            self.absorbs_left() && other.absorbs_left(),
            self.absorbs_right() && other.absorbs_right(),
        ) {
            (true, true) => Side::TwoSided,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

/// An ideal of a finite ring. Equality compares members only.
#[derive(Clone)]
pub struct IdealSet {
    ring: FiniteRing,
    side: Side,
    bits: FixedBitSet,
    gens: Vec<Elem>,
    len: usize,
}

impl PartialEq for IdealSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.bits == other.bits
    }
}

impl Eq for IdealSet {}

impl fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IdealSet({} {} ideal of size {}",
            self.side,
            self.ring.label(),
            self.len
        )?;
        if self.len <= 16 {
            write!(f, ": {:?}", self.elements())?;
        }
        write!(f, ")")
    }
}

impl IdealSet {
    fn from_span(ring: &FiniteRing, span: AdditiveSpan, side: Side) -> Self {
        let len = span.len();
        let (bits, gens) = span.into_parts();
        IdealSet {
            ring: ring.clone(),
            side,
            bits,
            gens,
            len,
        }
    }

    pub fn zero(ring: &FiniteRing) -> Result<Self> {
        Ok(Self::from_span(
            ring,
            AdditiveSpan::new(ring)?,
            Side::TwoSided,
        ))
    }

    pub fn whole(ring: &FiniteRing) -> Result<Self> {
        Self::generated(ring, &[ring.one()], Side::TwoSided)
    }

    /// The smallest ideal on `side` containing `gens`.
    pub fn generated(ring: &FiniteRing, gens: &[Elem], side: Side) -> Result<Self> {
        for &g in gens {
            ring.check(g)?;
        }
        let rg = ring.additive_generators();
        let mut span = AdditiveSpan::new(ring)?;
        for &x in gens {
            match side {
                Side::Left => rg.iter().for_each(|&a| {
                    span.insert(ring.mul(a, x));
                }),
                Side::Right => rg.iter().for_each(|&a| {
                    span.insert(ring.mul(x, a));
                }),
                Side::TwoSided => {
                    for &a in rg {
                        let ax = ring.mul(a, x);
                        for &b in rg {
                            span.insert(ring.mul(ax, b));
                        }
                    }
                }
            }
        }
        Ok(Self::from_span(ring, span, side))
    }

    /// `Rx`, `xR` or `RxR`.
    pub fn principal(ring: &FiniteRing, x: Elem, side: Side) -> Result<Self> {
        Self::generated(ring, &[x], side)
    }

    /// Wraps an explicit element set after checking it is an ideal on `side`.
    pub fn from_elements(ring: &FiniteRing, elems: &[Elem], side: Side) -> Result<Self> {
        let mut bits = bitset_for(ring)?;
        for &x in elems {
            ring.check(x)?;
            bits.insert(x as usize);
        }
        let span = AdditiveSpan::of(ring, elems.iter().copied())?;
        if span.bits() != &bits {
            return Err(Error::precondition(
                "element set is not an additive subgroup",
            ));
        }
        let ideal = Self::from_span(ring, span, side);
        if !ideal.absorbs(side) {
            return Err(Error::precondition(format!(
                "element set is not a {side} ideal of {}",
                ring.label()
            )));
        }
        Ok(ideal)
    }

    /// Ideal with members `bits`, trusted to be closed on `side`.
    pub(crate) fn from_bits(ring: &FiniteRing, bits: &FixedBitSet, side: Side) -> Result<Self> {
        let mut span = AdditiveSpan::new(ring)?;
        for x in bits.ones() {
            span.insert(x as Elem);
        }
        debug_assert_eq!(span.bits(), bits);
        Ok(Self::from_span(ring, span, side))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn with_side(mut self, side: Side) -> Self {
        self.side = side;
        self
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.len == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len as u64 == self.ring.size()
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.ring.size() && self.bits.contains(x as usize)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Members in index order.
    pub fn elements(&self) -> Vec<Elem> {
        self.bits.ones().map(|x| x as Elem).collect()
    }

    pub fn additive_generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn is_subset(&self, other: &IdealSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Whether multiplication on `side` by ring elements stays inside.
    pub fn absorbs(&self, side: Side) -> bool {
        let rg = self.ring.additive_generators();
        self.gens.iter().all(|&x| {
            rg.iter().all(|&a| {
                (!side.absorbs_left() || self.contains(self.ring.mul(a, x)))
                    && (!side.absorbs_right() || self.contains(self.ring.mul(x, a)))
            })
        })
    }

    pub fn sum(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring(other)?;
        let mut span = AdditiveSpan::new(&self.ring)?;
        for &g in self.gens.iter().chain(&other.gens) {
            span.insert(g);
        }
        Ok(Self::from_span(
            &self.ring,
            span,
            self.side.meet(other.side),
        ))
    }

    pub fn intersection(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self::from_bits(&self.ring, &bits, self.side.meet(other.side))
    }

    /// Additive closure of all products `xy` with `x ∈ self`, `y ∈ other`.
    pub fn product(&self, other: &IdealSet) -> Result<IdealSet> {
        self.same_ring(other)?;
        let mut span = AdditiveSpan::new(&self.ring)?;
        for &x in &self.gens {
            for &y in &other.gens {
                span.insert(self.ring.mul(x, y));
            }
        }
        let side = match (self.side.absorbs_left(), other.side.absorbs_right()) {
            (true, true) => Side::TwoSided,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => Side::Left,
        };
        Ok(Self::from_span(&self.ring, span, side))
    }

    /// `I^n`, built as `I^(n-1) · I` from additive generators.
    pub fn power(&self, n: u32) -> Result<IdealSet> {
        if n == 0 {
            return Err(Error::precondition("ideal powers start at 1"));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Least `k` with `I^k = 0`, if the powers reach zero.
    pub fn nilpotency_index(&self) -> Result<Option<u32>> {
        let mut acc = self.clone();
        let mut k = 1;
        loop {
            if acc.is_zero() {
                return Ok(Some(k));
            }
            let next = acc.product(self)?;
            if next == acc {
                return Ok(None);
            }
            acc = next;
            k += 1;
        }
    }

    fn same_ring(&self, other: &IdealSet) -> Result<()> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(Error::precondition("ideals live in different rings"))
        }
    }
}

/// `R/I` together with the projection and least coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    projection: Vec<u32>,
    reps: Vec<Elem>,
}

impl QuotientRing {
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize] as Elem
    }

    /// Least element of the coset `c`.
    pub fn representative(&self, c: Elem) -> Elem {
        self.reps[c as usize]
    }

    pub fn representatives(&self) -> &[Elem] {
        &self.reps
    }
}

/// Quotient by a two-sided ideal. Coset `c` has least representative
/// `reps[c]`, and cosets are numbered in order of their representatives.
pub fn quotient_ring(ring: &FiniteRing, ideal: &IdealSet) -> Result<QuotientRing> {
    quotient_ring_labeled(ring, ideal, format!("{}/I{}", ring.label(), ideal.len()))
}

pub fn quotient_ring_labeled(
    ring: &FiniteRing,
    ideal: &IdealSet,
    label: String,
) -> Result<QuotientRing> {
    if !ring.same(ideal.ring()) {
        return Err(Error::precondition("ideal belongs to another ring"));
    }
    if !ideal.absorbs(Side::TwoSided) {
        return Err(Error::precondition("quotient needs a two-sided ideal"));
    }
    let n = ring.size() as usize;
    let members = ideal.elements();
    let mut projection = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if projection[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x as Elem);
        for &i in &members {
            projection[ring.add(x as Elem, i) as usize] = c;
        }
    }
    let q = FiniteRing::quotient_from_parts(ring, reps.clone(), projection.clone(), label);
    Ok(QuotientRing {
        ring: q,
        projection,
        reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn principal_ideals_of_residues() {
        let z4 = ring("Zn(4)");
        let i = IdealSet::principal(&z4, 2, Side::Left).unwrap();
        assert_eq!(i.elements(), vec![0, 2]);
        assert!(IdealSet::principal(&z4, 1, Side::Left).unwrap().is_whole());
        assert!(IdealSet::principal(&z4, 0, Side::Right).unwrap().is_zero());
    }

    #[test]
    fn span_insertion_closes() {
        let z12 = ring("Zn(12)");
        let mut s = AdditiveSpan::new(&z12).unwrap();
        assert!(s.insert(8));
        assert_eq!(s.len(), 3);
        assert!(s.insert(6));
        assert_eq!(s.len(), 6);
        assert!(!s.insert(10));
    }

    #[test]
    fn augmentation_square_in_f2_c4() {
        let r = ring("GroupRing(GF(2,1),Cyclic(4))");
        // Δ = ideal generated by g - 1
        let g = r.parse_element("g").unwrap();
        let delta = IdealSet::principal(&r, r.sub(g, r.one()), Side::TwoSided).unwrap();
        assert_eq!(delta.len(), 8);
        let d2 = delta.power(2).unwrap();
        let expect = [
            r.parse_element("1 + g^2").unwrap(),
            r.parse_element("g + g^3").unwrap(),
        ];
        let span = AdditiveSpan::of(&r, expect).unwrap();
        assert_eq!(d2.bits(), span.bits());
        assert_eq!(delta.nilpotency_index().unwrap(), Some(4));
    }

    #[test]
    fn from_elements_validates() {
        let z4 = ring("Zn(4)");
        assert!(IdealSet::from_elements(&z4, &[0, 1], Side::Left).is_err());
        assert!(IdealSet::from_elements(&z4, &[0, 2], Side::TwoSided).is_ok());
        let m = ring("Mat(2,GF(2,1))");
        // first column matrices: a left ideal that is not a right ideal
        let col: Vec<Elem> = m
            .elements()
            .filter(|&x| matches!(m.view(x), crate::ring::ElementView::Matrix(ref r) if r[0][1] == 0 && r[1][1] == 0))
            .collect();
        assert!(IdealSet::from_elements(&m, &col, Side::Left).is_ok());
        assert!(IdealSet::from_elements(&m, &col, Side::Right).is_err());
    }

    #[test]
    fn quotients() {
        let z4 = ring("Zn(4)");
        let i = IdealSet::from_elements(&z4, &[0, 2], Side::TwoSided).unwrap();
        let q = quotient_ring(&z4, &i).unwrap();
        assert_eq!(q.ring.size(), 2);
        assert_eq!(q.ring.mul(1, 1), 1);
        q.ring.verify_axioms(0, 0).unwrap();
        for c in q.ring.elements() {
            assert_eq!(q.project(q.representative(c)), c);
        }
        let zero = IdealSet::zero(&z4).unwrap();
        let same = quotient_ring(&z4, &zero).unwrap();
        assert_eq!(same.ring.size(), 4);
        let m = ring("Mat(2,GF(2,1))");
        let left = IdealSet::principal(&m, 1, Side::Left).unwrap();
        assert!(quotient_ring(&m, &left).is_err());
    }
}
