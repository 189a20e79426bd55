use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::OracleConfig;
use crate::error::Result;
use crate::ideal::{AdditiveSpan, IdealSet, Side};
use crate::ring::FiniteRing;

/// Every left ideal, ordered by size and then by least members.
pub fn left_ideals(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Vec<IdealSet>> {
    lattice(ring, Side::Left, cfg)
}

/// Every right ideal, ordered by size and then by least members.
pub fn right_ideals(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Vec<IdealSet>> {
    lattice(ring, Side::Right, cfg)
}

/// Seeds with the principal ideals and closes under sums with them.
fn lattice(ring: &FiniteRing, side: Side, cfg: &OracleConfig) -> Result<Vec<IdealSet>> {
    cfg.admit(ring)?;
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut principal: Vec<IdealSet> = Vec::new();
    for x in ring.elements() {
        let p = IdealSet::principal(ring, x, side)?;
        if seen.insert(p.bits().clone()) {
            principal.push(p);
        }
    }
    let mut all = principal.clone();
    let mut frontier = principal.clone();
    while let Some(i) = frontier.pop() {
        for p in &principal {
            if p.is_subset(&i) {
                continue;
            }
            let mut span = AdditiveSpan::new(ring)?;
            for &g in i
                .additive_generators()
                .iter()
                .chain(p.additive_generators())
            {
                span.insert(g);
            }
            if seen.insert(span.bits().clone()) {
                let s = IdealSet::from_bits(ring, span.bits(), side)?;
                frontier.push(s.clone());
                all.push(s);
            }
        }
    }
    all.sort_by_cached_key(|i| (i.len(), i.elements()));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_lattices() {
        let cfg = OracleConfig::default();
        let f4 = left_ideals(&ring("GF(2,2)"), &cfg).unwrap();
        assert_eq!(f4.len(), 2);
        let z4 = left_ideals(&ring("Zn(4)"), &cfg).unwrap();
        assert_eq!(
            z4.iter().map(|i| i.elements()).collect::<Vec<_>>(),
            vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]
        );
        // Mat(2, GF(2)): 0, three column-type ideals, whole ring
        assert_eq!(left_ideals(&ring("Mat(2,GF(2,1))"), &cfg).unwrap().len(), 5);
    }

    #[test]
    fn lattice_closed_under_intersection() {
        let cfg = OracleConfig::default();
        for s in [
            "GroupRing(Zn(4),Cyclic(2))",
            "Prod(Zn(4),GF(2,1))",
            "Zn(12)",
        ] {
            let r = ring(s);
            let ls = left_ideals(&r, &cfg).unwrap();
            for a in &ls {
                assert!(a.absorbs(Side::Left));
                for b in &ls {
                    let c = a.intersection(b).unwrap();
                    assert!(ls.contains(&c), "{s}");
                }
            }
        }
    }

    #[test]
    fn non_principal_member_present() {
        let cfg = OracleConfig::default();
        let r = ring("GroupRing(Zn(4),Cyclic(2))");
        let ls = left_ideals(&r, &cfg).unwrap();
        let principal: Vec<IdealSet> = r
            .elements()
            .map(|x| IdealSet::principal(&r, x, Side::Left).unwrap())
            .collect();
        assert!(ls.iter().any(|i| !principal.contains(i)));
    }
}
