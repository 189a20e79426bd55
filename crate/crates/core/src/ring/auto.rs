use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{decode, encode, Digits, Elem, FiniteRing, RingKind, TABLE_LIMIT};
use crate::error::{Error, Result};

/// A ring automorphism of a [`FiniteRing`].
#[derive(Clone)]
pub struct RingAutomorphism {
    domain: FiniteRing,
    map: AutoMap,
    name: String,
}

#[derive(Clone)]
enum AutoMap {
    Identity,
    Table(Arc<Vec<Elem>>),
    /// Applies a base-ring automorphism to every coefficient of a matrix,
    /// group ring or truncated skew polynomial ring.
    Digitwise(Box<RingAutomorphism>),
    /// `x ↦ z_inv · x · z`.
    Conjugate {
        z: Elem,
        z_inv: Elem,
    },
    /// `outer ∘ inner`.
    Compose(Box<RingAutomorphism>, Box<RingAutomorphism>),
}

impl fmt::Debug for RingAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingAutomorphism({} on {})",
            self.name,
            self.domain.label()
        )
    }
}

/// Tabulate maps on carriers up to this size.
const TABULATE_LIMIT: u64 = 1 << 20;

impl RingAutomorphism {
    pub fn identity(ring: &FiniteRing) -> Self {
        RingAutomorphism {
            domain: ring.clone(),
            map: AutoMap::Identity,
            name: "id".into(),
        }
    }

    /// `x ↦ x^(p^j)` on a finite field.
    pub fn frobenius(field: &FiniteRing, j: u32) -> Result<Self> {
        let (p, k) = field
            .field_parameters()
            .ok_or_else(|| Error::precondition(format!("{} is not a field", field.label())))?;
        let j = j as usize % k;
        if j == 0 {
            return Ok(Self::identity(field));
        }
        let e = p.pow(j as u32);
        let table: Vec<Elem> = field.elements().map(|x| field.pow(x, e)).collect();
        Ok(RingAutomorphism {
            domain: field.clone(),
            map: AutoMap::Table(Arc::new(table)),
            name: format!("frob^{j}"),
        })
    }

    /// All automorphisms of a finite field, `frob^0 .. frob^(k-1)`.
    pub fn field_automorphisms(field: &FiniteRing) -> Result<Vec<Self>> {
        let (_, k) = field
            .field_parameters()
            .ok_or_else(|| Error::precondition(format!("{} is not a field", field.label())))?;
        (0..k as u32).map(|j| Self::frobenius(field, j)).collect()
    }

    /// Wraps an explicit element map, checking that it is an automorphism.
    pub fn from_table(
        ring: &FiniteRing,
        table: Vec<Elem>,
        name: impl Into<String>,
    ) -> Result<Self> {
        if table.len() as u64 != ring.size() {
            return Err(Error::precondition("map must cover the carrier"));
        }
        let auto = RingAutomorphism {
            domain: ring.clone(),
            map: AutoMap::Table(Arc::new(table)),
            name: name.into(),
        };
        auto.verify(10_000, 0)?;
        Ok(auto)
    }

    /// Extends `base` coefficientwise to a matrix ring, group ring or
    /// truncated skew polynomial ring over its domain.
    pub fn coefficientwise(ring: &FiniteRing, base: &RingAutomorphism) -> Result<Self> {
        let inner = match ring.kind() {
            RingKind::Matrix { entries, .. } => entries,
            RingKind::GroupRing { base, .. } => base,
            RingKind::SkewTrunc { base, .. } => base,
            _ => {
                return Err(Error::precondition(format!(
                    "{} has no coefficient ring",
                    ring.label()
                )))
            }
        };
        if !inner.same(base.domain()) {
            return Err(Error::precondition(format!(
                "automorphism of {} does not act on the coefficients of {}",
                base.domain().label(),
                ring.label()
            )));
        }
        if let RingKind::SkewTrunc { auto, .. } = ring.kind() {
            // coefficientwise extension respects t·a = τ(a)·t only if it commutes with τ
            let commutes = inner
                .elements()
                .all(|a| base.apply(auto.apply(a)) == auto.apply(base.apply(a)));
            if !commutes {
                return Err(Error::precondition(
                    "coefficient map does not commute with the twist",
                ));
            }
        }
        Ok(RingAutomorphism {
            domain: ring.clone(),
            map: AutoMap::Digitwise(Box::new(base.clone())),
            name: format!("{}*", base.name),
        })
    }

    /// Inner automorphism `x ↦ z⁻¹ x z` for a unit `z`.
    pub fn conjugation(ring: &FiniteRing, z: Elem) -> Result<Self> {
        ring.check(z)?;
        let z_inv = ring
            .unit_inverse(z)
            .ok_or_else(|| Error::precondition(format!("{} is not a unit", ring.render(z))))?;
        Ok(RingAutomorphism {
            domain: ring.clone(),
            map: AutoMap::Conjugate { z, z_inv },
            name: format!("conj({})", ring.render(z)),
        })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RingAutomorphism) -> Result<Self> {
        if !self.domain.same(&inner.domain) {
            return Err(Error::precondition("automorphisms act on different rings"));
        }
        Ok(RingAutomorphism {
            domain: self.domain.clone(),
            map: AutoMap::Compose(Box::new(self.clone()), Box::new(inner.clone())),
            name: format!("{}∘{}", self.name, inner.name),
        })
    }

    /// Materializes the map as a table (carriers up to 2^20).
    pub fn tabulated(&self) -> Result<Self> {
        if self.domain.size() > TABULATE_LIMIT {
            return Err(Error::CapExceeded {
                size: self.domain.size(),
                cap: TABULATE_LIMIT,
            });
        }
        let table = self.domain.elements().map(|x| self.apply(x)).collect();
        Ok(RingAutomorphism {
            domain: self.domain.clone(),
            map: AutoMap::Table(Arc::new(table)),
            name: self.name.clone(),
        })
    }

    pub fn domain(&self) -> &FiniteRing {
        &self.domain
    }

    pub fn describe(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn apply(&self, x: Elem) -> Elem {
        match &self.map {
            AutoMap::Identity => x,
            AutoMap::Table(t) => t[x as usize],
            AutoMap::Digitwise(b) => {
                let (r, len) = match self.domain.kind() {
                    RingKind::Matrix { dim, entries } => (entries.size(), dim * dim),
                    RingKind::GroupRing { base, group } => (base.size(), group.order()),
                    RingKind::SkewTrunc { base, len, .. } => (base.size(), *len),
                    _ => unreachable!("checked at construction"),
                };
                let d: Digits = decode(x, r, len).iter().map(|&c| b.apply(c)).collect();
                encode(&d, r)
            }
            AutoMap::Conjugate { z, z_inv } => self.domain.mul(self.domain.mul(*z_inv, x), *z),
            AutoMap::Compose(outer, inner) => outer.apply(inner.apply(x)),
        }
    }

    /// Checks unit preservation, additivity and multiplicativity (all pairs
    /// when `|R| ≤ 256`, else `samples` random pairs) and bijectivity
    /// (carriers up to 2^20).
    pub fn verify(&self, samples: usize, seed: u64) -> Result<()> {
        let r = &self.domain;
        let fail = |what: String| Err(Error::precondition(format!("{}: {what}", self.name)));
        if self.apply(r.one()) != r.one() {
            return fail("does not fix 1".into());
        }
        let check = |a: Elem, b: Elem| -> Result<()> {
            if self.apply(r.add(a, b)) != r.add(self.apply(a), self.apply(b)) {
                return fail(format!("not additive at ({a}, {b})"));
            }
            if self.apply(r.mul(a, b)) != r.mul(self.apply(a), self.apply(b)) {
                return fail(format!("not multiplicative at ({a}, {b})"));
            }
            Ok(())
        };
        let n = r.size();
        if n <= TABLE_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    check(a, b)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                check(rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        if n <= TABULATE_LIMIT {
            let mut seen = fixedbitset::FixedBitSet::with_capacity(n as usize);
            for x in 0..n {
                let y = self.apply(x);
                if y >= n || seen.put(y as usize) {
                    return fail("not a bijection".into());
                }
            }
        }
        Ok(())
    }

    /// Agreement on an additive generating set, which pins down an additive map.
    pub fn agrees_with(&self, other: &RingAutomorphism) -> bool {
        self.domain.same(&other.domain)
            && self
                .domain
                .additive_generators()
                .iter()
                .all(|&g| self.apply(g) == other.apply(g))
    }

    pub fn is_identity(&self) -> bool {
        match &self.map {
            AutoMap::Identity => true,
            AutoMap::Digitwise(b) => b.is_identity(),
            _ => self
                .domain
                .additive_generators()
                .iter()
                .all(|&g| self.apply(g) == g),
        }
    }

    /// Order in the automorphism group: lcm of generator orbit lengths.
    pub fn order(&self) -> u64 {
        let gens = self.domain.additive_generators();
        gens.iter().fold(1, |acc, &g| {
            let mut k = 1u64;
            let mut y = self.apply(g);
            while y != g {
                y = self.apply(y);
                k += 1;
            }
            acc / crate::group::gcd(acc, k) * k
        })
    }
}
