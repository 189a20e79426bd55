//! Units, centers and additive generators.

use smallvec::SmallVec;

use super::{encode, Digits, Elem, FiniteRing, RingKind};
use crate::error::{Error, Result};
use crate::ideal::AdditiveSpan;

/// Largest carrier whose elements we are willing to list one by one.
pub const ENUMERATION_CAP: u64 = 1 << 22;

/// Where the powers `1, x, x², …` of an element end up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerBehaviour {
    /// The sequence returns to 1: `x` is a unit.
    Unit { order: u64 },
    /// The sequence reaches 0.
    Nilpotent { index: u64 },
    /// Eventually periodic away from both 0 and 1.
    Other,
}

impl FiniteRing {
    /// Cycle structure of the power sequence (Brent's cycle finding).
    pub fn power_behaviour(&self, x: Elem) -> PowerBehaviour {
        let step = |y: Elem| self.mul(y, x);
        // cycle length
        let mut power = 1u64;
        let mut lam = 1u64;
        let mut tortoise = self.one();
        let mut hare = step(tortoise);
        while tortoise != hare {
            if power == lam {
                tortoise = hare;
                power *= 2;
                lam = 0;
            }
            hare = step(hare);
            lam += 1;
        }
        // tail length
        let mut tortoise = self.one();
        let mut hare = self.one();
        for _ in 0..lam {
            hare = step(hare);
        }
        let mut mu = 0u64;
        while tortoise != hare {
            tortoise = step(tortoise);
            hare = step(hare);
            mu += 1;
        }
        if mu == 0 {
            PowerBehaviour::Unit { order: lam }
        } else if tortoise == self.zero() {
            PowerBehaviour::Nilpotent { index: mu }
        } else {
            PowerBehaviour::Other
        }
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        matches!(self.power_behaviour(x), PowerBehaviour::Unit { .. })
    }

    pub fn is_nilpotent(&self, x: Elem) -> bool {
        matches!(self.power_behaviour(x), PowerBehaviour::Nilpotent { .. })
    }

    /// Two-sided inverse, if `x` is a unit.
    pub fn unit_inverse(&self, x: Elem) -> Option<Elem> {
        match self.power_behaviour(x) {
            PowerBehaviour::Unit { order } => Some(self.pow(x, order - 1)),
            _ => None,
        }
    }

    fn enumerable(&self, cap: u64) -> Result<()> {
        if self.size() > cap {
            Err(Error::CapExceeded {
                size: self.size(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// All units in index order.
    pub fn units(&self) -> Result<Vec<Elem>> {
        self.enumerable(ENUMERATION_CAP)?;
        Ok(self.elements().filter(|&x| self.is_unit(x)).collect())
    }

    /// Additive generators: coefficient bases for structured rings, a greedy
    /// index-order basis otherwise.
    pub fn additive_generators(&self) -> &[Elem] {
        self.inner.gens.get_or_init(|| {
            let placed = |base: &FiniteRing, slots: usize| -> Vec<Elem> {
                let r = base.size();
                let mut out = Vec::new();
                for slot in 0..slots {
                    for &g in base.additive_generators() {
                        let mut d: Digits = SmallVec::from_elem(base.zero(), slots);
                        d[slot] = g;
                        out.push(encode(&d, r));
                    }
                }
                out
            };
            match self.kind() {
                RingKind::Zn(_) => vec![1],
                RingKind::Field(f) => (0..f.k as u32).map(|i| f.p.pow(i)).collect(),
                RingKind::SkewTrunc { base, len, .. } => placed(base, *len),
                RingKind::Matrix { dim, entries } => placed(entries, dim * dim),
                RingKind::GroupRing { base, group } => placed(base, group.order()),
                RingKind::Product(fs) => {
                    let mut out = Vec::new();
                    let mut scale = 1u64;
                    for f in fs {
                        out.extend(f.additive_generators().iter().map(|&g| g * scale));
                        scale *= f.size();
                    }
                    out
                }
                RingKind::Quotient { parent, proj, .. } => dedup_nonzero(
                    self,
                    parent
                        .additive_generators()
                        .iter()
                        .map(|&g| proj[g as usize] as Elem),
                ),
                RingKind::Corner {
                    parent,
                    elems,
                    index,
                } => {
                    let f = elems[self.one() as usize];
                    dedup_nonzero(
                        self,
                        parent
                            .additive_generators()
                            .iter()
                            .map(|&g| index[&parent.mul(parent.mul(f, g), f)] as Elem),
                    )
                }
                RingKind::Table(_) | RingKind::Graded(_) => {
                    let mut span = AdditiveSpan::new(self).expect("table rings are small");
                    for x in self.elements() {
                        if span.len() as u64 == self.size() {
                            break;
                        }
                        span.insert(x);
                    }
                    span.generators().to_vec()
                }
            }
        })
    }

    /// Embedding of a corner ring's elements into the parent ring.
    pub fn corner_embedding(&self) -> Option<(&FiniteRing, &[Elem])> {
        match self.kind() {
            RingKind::Corner { parent, elems, .. } => Some((parent, elems)),
            _ => None,
        }
    }

    /// The center, in index order.
    ///
    /// Matrix rings contribute scalar matrices over the entry center,
    /// products contribute tuples of centers and group rings contribute the
    /// span of class sums with central coefficients. Anything else is found
    /// by filtering the carrier against the additive generators. Refuses
    /// when the enumeration would exceed `cap` elements.
    pub fn center(&self, cap: u64) -> Result<Vec<Elem>> {
        let mut out = match self.kind() {
            RingKind::Zn(_) | RingKind::Field(_) => {
                self.enumerable(cap)?;
                self.elements().collect()
            }
            RingKind::Matrix { dim, entries } => {
                let zc = entries.center(cap)?;
                zc.iter()
                    .map(|&z| {
                        let mut d: Digits = SmallVec::from_elem(entries.zero(), dim * dim);
                        for i in 0..*dim {
                            d[i * dim + i] = z;
                        }
                        encode(&d, entries.size())
                    })
                    .collect()
            }
            RingKind::Product(fs) => {
                let centers = fs
                    .iter()
                    .map(|f| f.center(cap))
                    .collect::<Result<Vec<_>>>()?;
                let total = centers
                    .iter()
                    .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
                    .unwrap_or(u64::MAX);
                if total > cap {
                    return Err(Error::CapExceeded { size: total, cap });
                }
                let mut acc: Vec<Elem> = vec![0];
                let mut scale = 1u64;
                for (f, c) in fs.iter().zip(&centers) {
                    acc = acc
                        .iter()
                        .flat_map(|&a| c.iter().map(move |&z| a + z * scale))
                        .collect();
                    scale *= f.size();
                }
                acc
            }
            RingKind::GroupRing { base, group } => {
                let zc = base.center(cap)?;
                let classes = group.conjugacy_classes();
                let total = (zc.len() as u64)
                    .checked_pow(classes.len() as u32)
                    .unwrap_or(u64::MAX);
                if total > cap {
                    return Err(Error::CapExceeded { size: total, cap });
                }
                let r = base.size();
                let mut out = Vec::with_capacity(total as usize);
                let mut choice = vec![0usize; classes.len()];
                loop {
                    let mut d: Digits = SmallVec::from_elem(base.zero(), group.order());
                    for (ci, class) in classes.iter().enumerate() {
                        for &g in class {
                            d[g] = zc[choice[ci]];
                        }
                    }
                    out.push(encode(&d, r));
                    // odometer
                    let mut i = 0;
                    loop {
                        if i == choice.len() {
                            break;
                        }
                        choice[i] += 1;
                        if choice[i] < zc.len() {
                            break;
                        }
                        choice[i] = 0;
                        i += 1;
                    }
                    if i == choice.len() {
                        break;
                    }
                }
                out
            }
            _ => self.center_by_filter(cap)?,
        };
        out.sort_unstable();
        Ok(out)
    }

    /// Center by checking every element against the additive generators.
    pub fn center_by_filter(&self, cap: u64) -> Result<Vec<Elem>> {
        self.enumerable(cap)?;
        let gens = self.additive_generators();
        Ok(self
            .elements()
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect())
    }
}

fn dedup_nonzero(ring: &FiniteRing, it: impl Iterator<Item = Elem>) -> Vec<Elem> {
    let mut out: Vec<Elem> = it.filter(|&g| g != ring.zero()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::build(&s.parse().unwrap()).unwrap()
    }

    fn brute_units(r: &FiniteRing) -> Vec<Elem> {
        r.elements()
            .filter(|&x| {
                r.elements()
                    .any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
            })
            .collect()
    }

    #[test]
    fn unit_counts() {
        assert_eq!(ring("GF(2,2)").units().unwrap().len(), 3);
        assert_eq!(ring("Zn(4)").units().unwrap(), vec![1, 3]);
        let m = ring("Mat(2,GF(2,1))");
        assert_eq!(m.units().unwrap(), brute_units(&m));
        assert_eq!(m.units().unwrap().len(), 6);
        for s in [
            "SkewTrunc(GF(2,2),frob^1,2)",
            "GroupRing(Zn(4),Cyclic(2))",
            "Zn(12)",
        ] {
            let r = ring(s);
            assert_eq!(r.units().unwrap(), brute_units(&r), "{s}");
        }
    }

    #[test]
    fn inverses_are_two_sided() {
        let r = ring("Mat(2,Zn(4))");
        for x in r.elements() {
            if let Some(y) = r.unit_inverse(x) {
                assert_eq!(r.mul(x, y), r.one());
                assert_eq!(r.mul(y, x), r.one());
            }
        }
    }

    #[test]
    fn power_behaviour_classifies() {
        let z12 = ring("Zn(12)");
        assert_eq!(
            z12.power_behaviour(6),
            PowerBehaviour::Nilpotent { index: 2 }
        );
        assert_eq!(z12.power_behaviour(4), PowerBehaviour::Other);
        assert_eq!(z12.power_behaviour(5), PowerBehaviour::Unit { order: 2 });
        assert_eq!(
            z12.power_behaviour(0),
            PowerBehaviour::Nilpotent { index: 1 }
        );
    }

    #[test]
    fn centers_match_full_filter() {
        for s in [
            "Zn(4)",
            "Mat(2,GF(2,1))",
            "GroupRing(GF(2,1),Cyclic(3))",
            "GroupRing(GF(2,1),Sym(3))",
            "GroupRing(Zn(3),Sym(3))",
            "GroupRing(GF(2,1),Dihedral(4))",
            "Prod(Mat(2,GF(2,1)),Zn(3))",
            "SkewTrunc(GF(2,2),frob^1,2)",
            "GroupRing(SkewTrunc(GF(2,2),frob^1,2),Cyclic(2))",
        ] {
            let r = ring(s);
            assert_eq!(
                r.center(1 << 20).unwrap(),
                r.center_by_filter(1 << 20).unwrap(),
                "{s}"
            );
        }
        assert_eq!(ring("Mat(2,GF(2,1))").center(1 << 20).unwrap(), vec![0, 9]);
        assert_eq!(
            ring("GroupRing(GF(2,1),Cyclic(3))")
                .center(1 << 20)
                .unwrap()
                .len(),
            8
        );
    }

    #[test]
    fn center_refuses_over_cap() {
        let r = ring("GroupRing(GF(5,1),Cyclic(6))");
        assert!(r.center(1000).unwrap_err().is_cap_refusal());
    }

    #[test]
    fn additive_generators_span() {
        for s in [
            "Zn(6)",
            "GF(3,2)",
            "SkewTrunc(GF(2,2),frob^1,2)",
            "Prod(Zn(4),GF(2,2))",
            "GroupRing(Zn(3),Cyclic(2))",
        ] {
            let r = ring(s);
            let mut span = AdditiveSpan::new(&r).unwrap();
            for &g in r.additive_generators() {
                span.insert(g);
            }
            assert_eq!(span.len() as u64, r.size(), "{s}");
        }
    }
}
