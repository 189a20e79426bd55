//! Group rings `RG`: coefficients, augmentation and dimension subgroups.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::ideal::{AdditiveSpan, IdealSet, Side};
use crate::ring::{Elem, ElementView, FiniteRing, RingAutomorphism};

/// A group ring together with its base ring and group.
#[derive(Clone, Debug)]
pub struct GroupRingView {
    ring: FiniteRing,
}

impl GroupRingView {
    pub fn new(ring: &FiniteRing) -> Result<Self> {
        if ring.group_ring_parts().is_none() {
            return Err(Error::precondition(format!(
                "{} is not a group ring",
                ring.label()
            )));
        }
        Ok(GroupRingView { ring: ring.clone() })
    }

    pub fn build(base: &FiniteRing, group: &FiniteGroup) -> Result<Self> {
        Self::new(&FiniteRing::group_ring(base.clone(), group.clone())?)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn base(&self) -> &FiniteRing {
        self.ring.group_ring_parts().expect("checked").0
    }

    pub fn group(&self) -> &FiniteGroup {
        self.ring.group_ring_parts().expect("checked").1
    }

    /// `a_g` for every `g`, indexed by group element.
    pub fn coefficients(&self, x: Elem) -> Vec<Elem> {
        match self.ring.view(x) {
            ElementView::GroupVector(c) => c,
            _ => unreachable!("group ring view"),
        }
    }

    pub fn from_coefficients(&self, coeffs: &[Elem]) -> Result<Elem> {
        self.ring
            .from_view(&ElementView::GroupVector(coeffs.to_vec()))
    }

    /// `r·g`.
    pub fn monomial(&self, r: Elem, g: usize) -> Elem {
        let mut c = vec![self.base().zero(); self.group().order()];
        c[g] = r;
        self.from_coefficients(&c).expect("in range")
    }

    /// The group element `g` as a ring element.
    pub fn group_element(&self, g: usize) -> Elem {
        self.monomial(self.base().one(), g)
    }

    /// `ε(Σ a_g g) = Σ a_g`.
    pub fn augmentation(&self, x: Elem) -> Elem {
        let base = self.base();
        self.coefficients(x)
            .into_iter()
            .fold(base.zero(), |acc, c| base.add(acc, c))
    }

    /// `Δ = ker ε`, spanned additively by `r(g - 1)`.
    pub fn augmentation_ideal(&self) -> Result<IdealSet> {
        let base = self.base();
        let group = self.group();
        let mut gens = Vec::new();
        for g in 0..group.order() {
            if g == group.identity() {
                continue;
            }
            for &r in base.additive_generators() {
                let rg = self.monomial(r, g);
                gens.push(self.ring.sub(rg, self.monomial(r, group.identity())));
            }
        }
        let span = AdditiveSpan::of(&self.ring, gens)?;
        IdealSet::from_bits(&self.ring, span.bits(), Side::TwoSided)
    }

    /// `D_n = {g : g - 1 ∈ Δ^n}`.
    pub fn dimension_subgroup(&self, n: u32) -> Result<Subgroup> {
        Ok(self.dimension_subgroups(n)?.pop().expect("n ≥ 1"))
    }

    /// `D_1, …, D_n`, sharing the computation of the powers of `Δ`.
    pub fn dimension_subgroups(&self, n: u32) -> Result<Vec<Subgroup>> {
        if n == 0 {
            return Err(Error::precondition("dimension subgroups start at 1"));
        }
        let delta = self.augmentation_ideal()?;
        let group = self.group();
        let mut power = delta.clone();
        let mut out = Vec::new();
        for k in 1..=n {
            if k > 1 {
                power = power.product(&delta)?;
            }
            let members: Vec<usize> = (0..group.order())
                .filter(|&g| power.contains(self.ring.sub(self.group_element(g), self.ring.one())))
                .collect();
            out.push(group.subgroup(members)?);
        }
        Ok(out)
    }

    /// Sum of the group elements in a conjugacy class.
    pub fn class_sum(&self, class: &[usize]) -> Elem {
        let mut c = vec![self.base().zero(); self.group().order()];
        for &g in class {
            c[g] = self.base().one();
        }
        self.from_coefficients(&c).expect("in range")
    }

    /// `Σ a_g g ↦ Σ σ(a_g) g`.
    pub fn extend_automorphism(&self, sigma: &RingAutomorphism) -> Result<RingAutomorphism> {
        RingAutomorphism::coefficientwise(&self.ring, sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn view(s: &str) -> GroupRingView {
        GroupRingView::new(&FiniteRing::build(&s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn augmentation_values() {
        let v = view("GroupRing(GF(2,1),Cyclic(2))");
        let x = v.ring().parse_element("1 + g").unwrap();
        assert_eq!(v.augmentation(x), 0);
        let w = view("GroupRing(Zn(4),Cyclic(2))");
        let y = w.ring().parse_element("2 + 3*g").unwrap();
        assert_eq!(w.augmentation(y), 1);
        for g in 0..2 {
            assert_eq!(w.augmentation(w.group_element(g)), 1);
        }
    }

    #[test]
    fn augmentation_ideal_sizes() {
        let v = view("GroupRing(GF(2,1),Cyclic(2))");
        assert_eq!(v.augmentation_ideal().unwrap().elements(), vec![0, 3]);
        assert_eq!(
            view("GroupRing(Zn(4),Cyclic(2))")
                .augmentation_ideal()
                .unwrap()
                .len(),
            4
        );
        assert!(view("GroupRing(GF(3,1),Cyclic(1))")
            .augmentation_ideal()
            .unwrap()
            .is_zero());
        let s3 = view("GroupRing(Zn(3),Sym(3))");
        let d = s3.augmentation_ideal().unwrap();
        assert_eq!(d.len() as u64, s3.ring().size() / 3);
        assert!(d.absorbs(Side::TwoSided));
    }

    #[test]
    fn dimension_subgroups_of_f2_c4() {
        let v = view("GroupRing(GF(2,1),Cyclic(4))");
        let ds = v.dimension_subgroups(4).unwrap();
        assert_eq!(ds[0].len(), 4);
        assert_eq!(ds[1].elements(), &[0, 2]);
        assert_eq!(ds[2].elements(), &[0]);
        assert_eq!(ds[3].elements(), &[0]);
    }

    #[test]
    fn frobenius_extends_with_its_order() {
        let v = view("GroupRing(GF(2,2),Cyclic(3))");
        let frob = RingAutomorphism::frobenius(v.base(), 1).unwrap();
        let ext = v.extend_automorphism(&frob).unwrap();
        assert_eq!(ext.order(), 2);
        ext.verify(2_000, 5).unwrap();
        let id = v
            .extend_automorphism(&RingAutomorphism::identity(v.base()))
            .unwrap();
        assert!(id.is_identity());
        let wrong = RingAutomorphism::identity(&FiniteRing::gf(2, 1).unwrap());
        assert!(v.extend_automorphism(&wrong).is_err());
    }
}
