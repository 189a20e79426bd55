//! Finite unital rings on dense carriers `0..N` with exact arithmetic.
//!
//! Every constructor uses a mixed-radix encoding of its structured form:
//! residues for `Zn`, polynomial coefficients for `GF`, coefficient vectors
//! `Σ a_i t^i` for truncated skew polynomials, row-major entries for
//! matrices, concatenated components for products and group-indexed
//! coefficients for group rings. The first digit is always the least
//! significant, so the zero element is index 0 for every structural ring.

mod auto;
mod field;
mod spec;
mod structure;
mod view;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

pub use auto::RingAutomorphism;
pub(crate) use field::GaloisField;
pub use spec::{FactorSpec, RingSpec, MAX_CARRIER};
pub use structure::{PowerBehaviour, ENUMERATION_CAP};
pub use view::ElementView;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Index of an element in a ring's carrier.
pub type Elem = u64;

pub(crate) type Digits = SmallVec<[u64; 32]>;

/// Rings at most this large get full operation tables on first use.
pub const TABLE_LIMIT: u64 = 256;

/// A finite unital ring. Cheap to clone; clones share arithmetic state.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

struct RingInner {
    size: u64,
    zero: Elem,
    one: Elem,
    kind: RingKind,
    label: String,
    spec: Option<RingSpec>,
    tables: OnceLock<Option<Tables>>,
    gens: OnceLock<Vec<Elem>>,
}

struct Tables {
    n: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

pub(crate) enum RingKind {
    Zn(u64),
    Field(GaloisField),
    SkewTrunc {
        base: FiniteRing,
        auto: RingAutomorphism,
        len: usize,
    },
    Matrix {
        dim: usize,
        entries: FiniteRing,
    },
    Product(Vec<FiniteRing>),
    GroupRing {
        base: FiniteRing,
        group: FiniteGroup,
    },
    Table(TableData),
    Quotient {
        parent: FiniteRing,
        reps: Vec<Elem>,
        proj: Vec<u32>,
    },
    Corner {
        parent: FiniteRing,
        elems: Vec<Elem>,
        index: HashMap<Elem, u32>,
    },
    Graded(GradedData),
}

pub(crate) struct TableData {
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// Carrier `⊕ J^i/J^{i+1}` of an associated graded ring.
pub(crate) struct GradedData {
    pub source: FiniteRing,
    /// Per degree: least representatives of the cosets of `J^{i+1}` in `J^i`.
    pub reps: Vec<Vec<Elem>>,
    /// Per degree: coset index of each source element lying in `J^i`.
    pub proj: Vec<HashMap<Elem, u32>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteRing({}, size {})",
            self.inner.label, self.inner.size
        )
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.label)
    }
}

#[inline]
pub(crate) fn decode(mut x: u64, radix: u64, len: usize) -> Digits {
    let mut out = Digits::with_capacity(len);
    for _ in 0..len {
        out.push(x % radix);
        x /= radix;
    }
    out
}

#[inline]
pub(crate) fn encode(digits: &[u64], radix: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

impl FiniteRing {
    fn from_kind(kind: RingKind, size: u64, label: String, spec: Option<RingSpec>) -> Self {
        let (zero, one) = kind.zero_one();
        FiniteRing {
            inner: Arc::new(RingInner {
                size,
                zero,
                one,
                kind,
                label,
                spec,
                tables: OnceLock::new(),
                gens: OnceLock::new(),
            }),
        }
    }

    /// Realizes a ring spec.
    pub fn build(spec: &RingSpec) -> Result<Self> {
        let size = spec.size()?;
        let ring = match spec {
            RingSpec::Zn(n) => Self::from_kind(RingKind::Zn(*n), size, spec.to_string(), None),
            RingSpec::Gf { p, k } => Self::from_kind(
                RingKind::Field(GaloisField::new(*p, *k as usize)),
                size,
                spec.to_string(),
                None,
            ),
            RingSpec::SkewTrunc { base, frob, len } => {
                let base = Self::build(base)?;
                let auto = RingAutomorphism::frobenius(&base, *frob)?;
                Self::skew_truncated(base, auto, *len)?
            }
            RingSpec::Mat { dim, inner } => Self::matrix(*dim, Self::build(inner)?)?,
            RingSpec::Prod(fs) => {
                Self::product(fs.iter().map(Self::build).collect::<Result<Vec<_>>>()?)?
            }
            RingSpec::GroupRing { base, group } => {
                Self::group_ring(Self::build(base)?, FiniteGroup::build(group)?)?
            }
        };
        let mut inner = Arc::try_unwrap(ring.inner).ok().expect("fresh ring");
        inner.label = spec.to_string();
        inner.spec = Some(spec.clone());
        Ok(FiniteRing {
            inner: Arc::new(inner),
        })
    }

    pub fn zn(n: u64) -> Result<Self> {
        Self::build(&RingSpec::Zn(n))
    }

    pub fn gf(p: u64, k: u32) -> Result<Self> {
        Self::build(&RingSpec::Gf { p, k })
    }

    fn checked_size(base: u64, exp: usize, label: &str) -> Result<u64> {
        u32::try_from(exp)
            .ok()
            .and_then(|e| base.checked_pow(e))
            .filter(|&s| s <= MAX_CARRIER)
            .ok_or_else(|| Error::RingSpec {
                node: label.to_string(),
                reason: format!("carrier exceeds {MAX_CARRIER} elements"),
            })
    }

    /// `base[t; auto]/(t^len)` with `t·a = auto(a)·t`.
    pub fn skew_truncated(base: FiniteRing, auto: RingAutomorphism, len: usize) -> Result<Self> {
        if !auto.domain().same(&base) {
            return Err(Error::precondition(
                "automorphism is not defined on the base ring",
            ));
        }
        if len < 2 {
            return Err(Error::precondition("truncation length must be at least 2"));
        }
        let label = format!("{}[t;{}]/(t^{len})", base.label(), auto.describe());
        let size = Self::checked_size(base.size(), len, &label)?;
        Ok(Self::from_kind(
            RingKind::SkewTrunc { base, auto, len },
            size,
            label,
            None,
        ))
    }

    pub fn matrix(dim: usize, entries: FiniteRing) -> Result<Self> {
        if dim == 0 {
            return Err(Error::precondition("matrix size must be at least 1"));
        }
        let label = format!("Mat({dim},{})", entries.label());
        let size = Self::checked_size(entries.size(), dim * dim, &label)?;
        Ok(Self::from_kind(
            RingKind::Matrix { dim, entries },
            size,
            label,
            None,
        ))
    }

    pub fn product(factors: Vec<FiniteRing>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::precondition("empty product"));
        }
        let label = format!(
            "Prod({})",
            factors
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
                .join(",")
        );
        let size = factors
            .iter()
            .try_fold(1u64, |acc, f| acc.checked_mul(f.size()))
            .filter(|&s| s <= MAX_CARRIER)
            .ok_or_else(|| Error::RingSpec {
                node: label.clone(),
                reason: "carrier too large".into(),
            })?;
        Ok(Self::from_kind(
            RingKind::Product(factors),
            size,
            label,
            None,
        ))
    }

    pub fn group_ring(base: FiniteRing, group: FiniteGroup) -> Result<Self> {
        let label = format!("GroupRing({},{})", base.label(), group.label());
        let size = Self::checked_size(base.size(), group.order(), &label)?;
        Ok(Self::from_kind(
            RingKind::GroupRing { base, group },
            size,
            label,
            None,
        ))
    }

    /// An opaque ring given by operation tables; the axioms are verified
    /// exhaustively.
    pub fn from_tables(
        label: impl Into<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Elem,
        one: Elem,
    ) -> Result<Self> {
        let n = (add.len() as f64).sqrt().round() as usize;
        if n * n != add.len() || mul.len() != add.len() || n < 1 {
            return Err(Error::precondition("operation tables must both be N×N"));
        }
        if add.iter().chain(&mul).any(|&e| e as usize >= n) {
            return Err(Error::precondition("table entry outside the carrier"));
        }
        let mut neg = vec![u32::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| add[a * n + b] as u64 == zero) {
                neg[a] = b as u32;
            } else {
                return Err(Error::precondition(format!(
                    "element {a} has no additive inverse"
                )));
            }
        }
        let ring = Self::from_kind(
            RingKind::Table(TableData { n, add, mul, neg }),
            n as u64,
            label.into(),
            None,
        );
        let mut inner = Arc::try_unwrap(ring.inner).ok().expect("fresh ring");
        inner.zero = zero;
        inner.one = one;
        let ring = FiniteRing {
            inner: Arc::new(inner),
        };
        ring.verify_axioms(0, 0)?;
        Ok(ring)
    }

    /// Copies this ring into an opaque table ring, relabelling the carrier
    /// through `perm` (element `x` becomes `perm[x]`).
    pub fn to_table_ring(&self, label: impl Into<String>, perm: &[u32]) -> Result<Self> {
        let n = self.size() as usize;
        if perm.len() != n {
            return Err(Error::precondition("relabelling must cover the carrier"));
        }
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (perm[a] as usize, perm[b] as usize);
                add[x * n + y] = perm[self.add(a as u64, b as u64) as usize];
                mul[x * n + y] = perm[self.mul(a as u64, b as u64) as usize];
            }
        }
        Self::from_tables(
            label,
            add,
            mul,
            perm[self.zero() as usize] as u64,
            perm[self.one() as usize] as u64,
        )
    }

    /// Quotient by the coset partition `proj` (coset index per element),
    /// with least representatives `reps`. The caller guarantees the kernel
    /// is a two-sided ideal.
    pub(crate) fn quotient_from_parts(
        parent: &FiniteRing,
        reps: Vec<Elem>,
        proj: Vec<u32>,
        label: String,
    ) -> Self {
        let size = reps.len() as u64;
        Self::from_kind(
            RingKind::Quotient {
                parent: parent.clone(),
                reps,
                proj,
            },
            size,
            label,
            None,
        )
    }

    /// The corner ring `f R f` of an idempotent `f`, with identity `f`.
    pub fn corner(parent: &FiniteRing, f: Elem) -> Result<Self> {
        parent.check(f)?;
        if parent.mul(f, f) != f {
            return Err(Error::precondition("corner ring needs an idempotent"));
        }
        let mut elems: Vec<Elem> = parent
            .elements()
            .map(|x| parent.mul(parent.mul(f, x), f))
            .collect();
        elems.sort_unstable();
        elems.dedup();
        let index: HashMap<Elem, u32> = elems
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        let label = format!("{}[{}]", parent.label(), parent.render(f));
        let size = elems.len() as u64;
        let ring = Self::from_kind(
            RingKind::Corner {
                parent: parent.clone(),
                elems,
                index,
            },
            size,
            label,
            None,
        );
        let mut inner = Arc::try_unwrap(ring.inner).ok().expect("fresh ring");
        if let RingKind::Corner { index, .. } = &inner.kind {
            inner.one = index[&f] as Elem;
            inner.zero = index[&parent.zero()] as Elem;
        }
        Ok(FiniteRing {
            inner: Arc::new(inner),
        })
    }

    pub(crate) fn graded(data: GradedData, label: String) -> Self {
        let size = data.reps.iter().map(|r| r.len() as u64).product();
        Self::from_kind(RingKind::Graded(data), size, label, None)
    }

    // ---- accessors ----------------------------------------------------

    pub fn size(&self) -> u64 {
        self.inner.size
    }

    pub fn zero(&self) -> Elem {
        self.inner.zero
    }

    pub fn one(&self) -> Elem {
        self.inner.one
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn spec(&self) -> Option<&RingSpec> {
        self.inner.spec.as_ref()
    }

    pub(crate) fn kind(&self) -> &RingKind {
        &self.inner.kind
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    /// Same underlying ring (shared handle, or identical spec).
    pub fn same(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.spec().is_some() && self.spec() == other.spec())
    }

    pub fn check(&self, x: Elem) -> Result<()> {
        if x < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                ring: self.label().to_string(),
                size: self.size(),
            })
        }
    }

    /// Base ring and group, when this is a group ring.
    pub fn group_ring_parts(&self) -> Option<(&FiniteRing, &FiniteGroup)> {
        match self.kind() {
            RingKind::GroupRing { base, group } => Some((base, group)),
            _ => None,
        }
    }

    /// Entry ring and size, when this is a matrix ring.
    pub fn matrix_parts(&self) -> Option<(usize, &FiniteRing)> {
        match self.kind() {
            RingKind::Matrix { dim, entries } => Some((*dim, entries)),
            _ => None,
        }
    }

    /// `(p, k)` when this ring is a `GF(p,k)` leaf.
    pub fn field_parameters(&self) -> Option<(u64, usize)> {
        match self.kind() {
            RingKind::Field(f) => Some((f.p, f.k)),
            RingKind::Zn(n) if crate::group::is_prime(*n) => Some((*n, 1)),
            _ => None,
        }
    }

    // ---- arithmetic ---------------------------------------------------

    fn tables(&self) -> Option<&Tables> {
        self.inner
            .tables
            .get_or_init(|| {
                let n = self.size();
                if n > TABLE_LIMIT {
                    return None;
                }
                let n = n as usize;
                let mut add = vec![0u8; n * n];
                let mut mul = vec![0u8; n * n];
                for a in 0..n {
                    for b in 0..n {
                        add[a * n + b] = self.raw_add(a as u64, b as u64) as u8;
                        mul[a * n + b] = self.raw_mul(a as u64, b as u64) as u8;
                    }
                }
                let neg = (0..n).map(|a| self.raw_neg(a as u64) as u8).collect();
                Some(Tables { n, add, mul, neg })
            })
            .as_ref()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match self.tables() {
            Some(t) => t.add[a as usize * t.n + b as usize] as Elem,
            None => self.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.tables() {
            Some(t) => t.mul[a as usize * t.n + b as usize] as Elem,
            None => self.raw_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match self.tables() {
            Some(t) => t.neg[a as usize] as Elem,
            None => self.raw_neg(a),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `n · 1`.
    pub fn from_int(&self, n: i64) -> Elem {
        let mut acc = self.zero();
        let mut base = if n < 0 {
            self.neg(self.one())
        } else {
            self.one()
        };
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: Elem) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != self.zero() {
            y = self.add(y, x);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> u64 {
        self.additive_order(self.one())
    }

    pub fn is_commutative(&self) -> bool {
        let gens = self.additive_generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    fn raw_add(&self, a: Elem, b: Elem) -> Elem {
        match self.kind() {
            RingKind::Zn(n) => (a + b) % n,
            RingKind::Field(f) => f.add(a, b),
            RingKind::SkewTrunc { base, len, .. } => digitwise2(base, *len, a, b, FiniteRing::add),
            RingKind::Matrix { dim, entries } => {
                digitwise2(entries, dim * dim, a, b, FiniteRing::add)
            }
            RingKind::GroupRing { base, group } => {
                digitwise2(base, group.order(), a, b, FiniteRing::add)
            }
            RingKind::Product(fs) => {
                let (da, db) = (split_product(fs, a), split_product(fs, b));
                let parts: Digits = fs
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.add(da[i], db[i]))
                    .collect();
                join_product(fs, &parts)
            }
            RingKind::Table(t) => t.add[a as usize * t.n + b as usize] as Elem,
            RingKind::Quotient { parent, reps, proj } => {
                proj[parent.add(reps[a as usize], reps[b as usize]) as usize] as Elem
            }
            RingKind::Corner {
                parent,
                elems,
                index,
            } => index[&parent.add(elems[a as usize], elems[b as usize])] as Elem,
            RingKind::Graded(g) => g.add(a, b),
        }
    }

    fn raw_neg(&self, a: Elem) -> Elem {
        match self.kind() {
            RingKind::Zn(n) => (n - a) % n,
            RingKind::Field(f) => f.neg(a),
            RingKind::SkewTrunc { base, len, .. } => digitwise1(base, *len, a, FiniteRing::neg),
            RingKind::Matrix { dim, entries } => digitwise1(entries, dim * dim, a, FiniteRing::neg),
            RingKind::GroupRing { base, group } => {
                digitwise1(base, group.order(), a, FiniteRing::neg)
            }
            RingKind::Product(fs) => {
                let da = split_product(fs, a);
                let parts: Digits = fs.iter().enumerate().map(|(i, f)| f.neg(da[i])).collect();
                join_product(fs, &parts)
            }
            RingKind::Table(t) => t.neg[a as usize] as Elem,
            RingKind::Quotient { parent, reps, proj } => {
                proj[parent.neg(reps[a as usize]) as usize] as Elem
            }
            RingKind::Corner {
                parent,
                elems,
                index,
            } => index[&parent.neg(elems[a as usize])] as Elem,
            RingKind::Graded(g) => g.neg(a),
        }
    }

    fn raw_mul(&self, a: Elem, b: Elem) -> Elem {
        match self.kind() {
            RingKind::Zn(n) => ((a as u128 * b as u128) % *n as u128) as u64,
            RingKind::Field(f) => f.mul(a, b),
            RingKind::SkewTrunc { base, auto, len } => {
                let r = base.size();
                let (da, db) = (decode(a, r, *len), decode(b, r, *len));
                let mut out: Digits = SmallVec::from_elem(base.zero(), *len);
                for j in 0..*len {
                    if db[j] == base.zero() {
                        continue;
                    }
                    // twisted[i] = auto^i(b_j)
                    let mut twisted = db[j];
                    for i in 0..(*len - j) {
                        if da[i] != base.zero() {
                            out[i + j] = base.add(out[i + j], base.mul(da[i], twisted));
                        }
                        twisted = auto.apply(twisted);
                    }
                }
                encode(&out, r)
            }
            RingKind::Matrix { dim, entries } => {
                let n = *dim;
                let r = entries.size();
                let (da, db) = (decode(a, r, n * n), decode(b, r, n * n));
                let mut out: Digits = SmallVec::from_elem(entries.zero(), n * n);
                for i in 0..n {
                    for l in 0..n {
                        let x = da[i * n + l];
                        if x == entries.zero() {
                            continue;
                        }
                        for j in 0..n {
                            let y = db[l * n + j];
                            if y != entries.zero() {
                                out[i * n + j] = entries.add(out[i * n + j], entries.mul(x, y));
                            }
                        }
                    }
                }
                encode(&out, r)
            }
            RingKind::GroupRing { base, group } => {
                let n = group.order();
                let r = base.size();
                let (da, db) = (decode(a, r, n), decode(b, r, n));
                let mut out: Digits = SmallVec::from_elem(base.zero(), n);
                for g in 0..n {
                    if da[g] == base.zero() {
                        continue;
                    }
                    for h in 0..n {
                        if db[h] != base.zero() {
                            let k = group.mul(g, h);
                            out[k] = base.add(out[k], base.mul(da[g], db[h]));
                        }
                    }
                }
                encode(&out, r)
            }
            RingKind::Product(fs) => {
                let (da, db) = (split_product(fs, a), split_product(fs, b));
                let parts: Digits = fs
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.mul(da[i], db[i]))
                    .collect();
                join_product(fs, &parts)
            }
            RingKind::Table(t) => t.mul[a as usize * t.n + b as usize] as Elem,
            RingKind::Quotient { parent, reps, proj } => {
                proj[parent.mul(reps[a as usize], reps[b as usize]) as usize] as Elem
            }
            RingKind::Corner {
                parent,
                elems,
                index,
            } => index[&parent.mul(elems[a as usize], elems[b as usize])] as Elem,
            RingKind::Graded(g) => g.mul(a, b),
        }
    }

    // ---- checks -------------------------------------------------------

    /// Checks the ring axioms: exhaustively when `|R| ≤ 256`, otherwise on
    /// `samples` random triples drawn with `seed`.
    pub fn verify_axioms(&self, samples: usize, seed: u64) -> Result<()> {
        let n = self.size();
        if n >= 2 && self.zero() == self.one() {
            return Err(Error::inconsistent(format!(
                "{}: zero equals one",
                self.label()
            )));
        }
        let check = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            let fail = |law: &str| {
                Err(Error::inconsistent(format!(
                    "{}: {law} fails at ({a}, {b}, {c})",
                    self.label()
                )))
            };
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity");
            }
            if self.add(a, b) != self.add(b, a) {
                return fail("additive commutativity");
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity");
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("left distributivity");
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail("right distributivity");
            }
            Ok(())
        };
        let unit_laws = |a: Elem| -> Result<()> {
            if self.mul(a, self.one()) != a
                || self.mul(self.one(), a) != a
                || self.add(a, self.zero()) != a
                || self.add(a, self.neg(a)) != self.zero()
            {
                return Err(Error::inconsistent(format!(
                    "{}: identity or inverse law fails at {a}",
                    self.label()
                )));
            }
            Ok(())
        };
        if n <= TABLE_LIMIT {
            for a in 0..n {
                unit_laws(a)?;
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                unit_laws(a)?;
                check(a, b, c)?;
            }
        }
        Ok(())
    }
}

impl RingKind {
    fn zero_one(&self) -> (Elem, Elem) {
        match self {
            RingKind::Zn(_) | RingKind::Field(_) => (0, 1),
            RingKind::SkewTrunc { base, .. } => (0, base.one()),
            RingKind::Matrix { dim, entries } => {
                let r = entries.size();
                let mut d: Digits = SmallVec::from_elem(entries.zero(), dim * dim);
                for i in 0..*dim {
                    d[i * dim + i] = entries.one();
                }
                (0, encode(&d, r))
            }
            RingKind::Product(fs) => {
                let ones: Digits = fs.iter().map(|f| f.one()).collect();
                (0, join_product(fs, &ones))
            }
            RingKind::GroupRing { base, group } => {
                let mut d: Digits = SmallVec::from_elem(base.zero(), group.order());
                d[group.identity()] = base.one();
                (0, encode(&d, base.size()))
            }
            RingKind::Table(_) | RingKind::Corner { .. } => (0, 1),
            RingKind::Quotient { parent, proj, .. } => (
                proj[parent.zero() as usize] as Elem,
                proj[parent.one() as usize] as Elem,
            ),
            RingKind::Graded(g) => {
                let one = g.proj[0][&g.source.one()] as Elem;
                (0, one)
            }
        }
    }
}

fn digitwise2(
    base: &FiniteRing,
    len: usize,
    a: Elem,
    b: Elem,
    op: fn(&FiniteRing, Elem, Elem) -> Elem,
) -> Elem {
    let r = base.size();
    let (da, db) = (decode(a, r, len), decode(b, r, len));
    let out: Digits = da.iter().zip(&db).map(|(&x, &y)| op(base, x, y)).collect();
    encode(&out, r)
}

fn digitwise1(base: &FiniteRing, len: usize, a: Elem, op: fn(&FiniteRing, Elem) -> Elem) -> Elem {
    let r = base.size();
    let out: Digits = decode(a, r, len).iter().map(|&x| op(base, x)).collect();
    encode(&out, r)
}

pub(crate) fn split_product(fs: &[FiniteRing], mut x: Elem) -> Digits {
    fs.iter()
        .map(|f| {
            let d = x % f.size();
            x /= f.size();
            d
        })
        .collect()
}

pub(crate) fn join_product(fs: &[FiniteRing], parts: &[Elem]) -> Elem {
    fs.iter()
        .zip(parts)
        .rev()
        .fold(0, |acc, (f, &p)| acc * f.size() + p)
}

impl GradedData {
    fn levels(&self) -> usize {
        self.reps.len()
    }

    fn split(&self, mut x: Elem) -> Digits {
        self.reps
            .iter()
            .map(|r| {
                let d = x % r.len() as u64;
                x /= r.len() as u64;
                d
            })
            .collect()
    }

    fn join(&self, d: &[Elem]) -> Elem {
        self.reps
            .iter()
            .zip(d)
            .rev()
            .fold(0, |acc, (r, &x)| acc * r.len() as u64 + x)
    }

    fn class(&self, level: usize, x: Elem) -> Elem {
        self.proj[level][&x] as Elem
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let (da, db) = (self.split(a), self.split(b));
        let s = &self.source;
        let out: Digits = (0..self.levels())
            .map(|i| {
                let sum = s.add(self.reps[i][da[i] as usize], self.reps[i][db[i] as usize]);
                self.class(i, sum)
            })
            .collect();
        self.join(&out)
    }

    fn neg(&self, a: Elem) -> Elem {
        let da = self.split(a);
        let s = &self.source;
        let out: Digits = (0..self.levels())
            .map(|i| self.class(i, s.neg(self.reps[i][da[i] as usize])))
            .collect();
        self.join(&out)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (da, db) = (self.split(a), self.split(b));
        let s = &self.source;
        let m = self.levels();
        let mut out: Digits = SmallVec::from_elem(0, m);
        for k in 0..m {
            let mut acc = s.zero();
            for i in 0..=k {
                let x = self.reps[i][da[i] as usize];
                let y = self.reps[k - i][db[k - i] as usize];
                acc = s.add(acc, s.mul(x, y));
            }
            out[k] = self.class(k, acc);
        }
        self.join(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn residue_arithmetic() {
        let z4 = ring("Zn(4)");
        assert_eq!(z4.size(), 4);
        assert_eq!(z4.add(2, 2), 0);
        assert_eq!(z4.mul(2, 2), 0);
        assert_eq!(z4.neg(1), 3);
        assert_eq!(z4.characteristic(), 4);
    }

    #[test]
    fn skew_relation_holds() {
        // t·a = a²·t in SkewTrunc(GF(4), Frobenius, 2)
        let r = ring("SkewTrunc(GF(2,2),frob^1,2)");
        let f = ring("GF(2,2)");
        assert_eq!(r.size(), 16);
        let t = 4; // digits (0, 1)
        for a in 0..4u64 {
            let lhs = r.mul(t, a);
            let rhs = r.mul(f.mul(a, a), t);
            assert_eq!(lhs, rhs);
        }
        assert_eq!(r.mul(t, t), 0);
        assert!(!r.is_commutative());
    }

    #[test]
    fn sizes_follow_the_tree() {
        for (s, n) in [
            ("Mat(2,Zn(3))", 81),
            ("Prod(Zn(2),GF(3,1),Zn(4))", 24),
            ("GroupRing(Zn(4),Cyclic(3))", 64),
            ("SkewTrunc(GF(3,1),id,3)", 27),
        ] {
            assert_eq!(ring(s).size(), n);
        }
    }

    #[test]
    fn axioms_hold_for_corpus_shapes() {
        for s in [
            "Zn(6)",
            "GF(2,3)",
            "GF(3,2)",
            "SkewTrunc(GF(2,2),frob^1,2)",
            "SkewTrunc(GF(2,2),frob^1,3)",
            "Mat(2,GF(2,1))",
            "Prod(GF(2,1),Zn(4))",
            "GroupRing(GF(2,1),Sym(3))",
            "GroupRing(Zn(4),Cyclic(3))",
            "Mat(2,Zn(4))",
        ] {
            ring(s).verify_axioms(10_000, 7).unwrap();
        }
        // above the table limit: random triples
        ring("GroupRing(SkewTrunc(GF(2,2),frob^1,2),Cyclic(3))")
            .verify_axioms(10_000, 11)
            .unwrap();
        ring("Mat(2,GF(2,2))").verify_axioms(0, 0).unwrap();
    }

    #[test]
    fn table_ring_copy_is_isomorphic() {
        let r = ring("Zn(6)");
        let perm: Vec<u32> = vec![3, 0, 5, 1, 4, 2];
        let t = r.to_table_ring("shuffled", &perm).unwrap();
        assert_eq!(t.zero(), 3);
        assert_eq!(t.one(), 0);
        for a in 0..6u64 {
            for b in 0..6u64 {
                assert_eq!(
                    t.mul(perm[a as usize] as u64, perm[b as usize] as u64),
                    perm[r.mul(a, b) as usize] as u64
                );
            }
        }
    }

    #[test]
    fn from_tables_rejects_bad_tables() {
        // multiplication that is not distributive
        let add = vec![0, 1, 1, 0];
        let mul = vec![1, 1, 1, 1];
        assert!(FiniteRing::from_tables("bad", add, mul, 0, 1).is_err());
    }

    #[test]
    fn from_int_and_pow() {
        let z9 = ring("Zn(9)");
        assert_eq!(z9.from_int(12), 3);
        assert_eq!(z9.from_int(-1), 8);
        assert_eq!(z9.pow(2, 6), 1);
        let m = ring("Mat(2,GF(2,1))");
        assert_eq!(m.from_int(2), 0);
    }
}
