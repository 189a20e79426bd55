use rayon::prelude::*;

use super::OracleConfig;
use crate::error::Result;
use crate::ring::{Elem, FiniteRing};

/// All `e` with `e² = e`, in index order.
pub fn idempotents(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Vec<Elem>> {
    cfg.admit(ring)?;
    Ok((0..ring.size())
        .into_par_iter()
        .filter(|&e| ring.mul(e, e) == e)
        .collect())
}

/// Idempotents of the center, in index order.
pub fn central_idempotents(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Vec<Elem>> {
    let center = ring.center(cfg.center_cap)?;
    Ok(center
        .into_iter()
        .filter(|&e| ring.mul(e, e) == e)
        .collect())
}

/// Atoms of the Boolean algebra of central idempotents (`e ≤ f` iff
/// `ef = e`), in index order.
pub fn central_primitive_idempotents(ring: &FiniteRing, cfg: &OracleConfig) -> Result<Vec<Elem>> {
    let central = central_idempotents(ring, cfg)?;
    Ok(atoms(ring, &central))
}

fn atoms(ring: &FiniteRing, idems: &[Elem]) -> Vec<Elem> {
    idems
        .iter()
        .copied()
        .filter(|&e| {
            e != ring.zero()
                && !idems.iter().any(|&f| {
                    f != ring.zero() && f != e && ring.mul(e, f) == f && ring.mul(f, e) == f
                })
        })
        .collect()
}

/// `f` is a nonzero idempotent with no idempotent strictly between 0 and
/// `f`, checked against the complete list `all` of idempotents.
pub fn is_primitive_idempotent(ring: &FiniteRing, f: Elem, all: &[Elem]) -> bool {
    f != ring.zero()
        && ring.mul(f, f) == f
        && !all
            .iter()
            .any(|&g| g != ring.zero() && g != f && ring.mul(f, g) == g && ring.mul(g, f) == g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::build(&s.parse().unwrap()).unwrap()
    }

    fn check_block_decomposition(r: &FiniteRing, es: &[Elem]) {
        let mut sum = r.zero();
        for (i, &e) in es.iter().enumerate() {
            sum = r.add(sum, e);
            for &g in r.additive_generators() {
                assert_eq!(r.mul(e, g), r.mul(g, e));
            }
            for &f in &es[i + 1..] {
                assert_eq!(r.mul(e, f), r.zero());
            }
        }
        assert_eq!(sum, r.one());
    }

    #[test]
    fn blocks_of_small_group_algebras() {
        let cfg = OracleConfig::default();
        let r = ring("GroupRing(GF(2,1),Cyclic(3))");
        let es = central_primitive_idempotents(&r, &cfg).unwrap();
        let expect = [
            r.parse_element("1 + g + g^2").unwrap(),
            r.parse_element("g + g^2").unwrap(),
        ];
        let mut sorted = expect.to_vec();
        sorted.sort();
        assert_eq!(es, sorted);
        check_block_decomposition(&r, &es);

        let r4 = ring("GroupRing(GF(2,2),Cyclic(3))");
        let es4 = central_primitive_idempotents(&r4, &cfg).unwrap();
        assert_eq!(es4.len(), 3);
        check_block_decomposition(&r4, &es4);

        for s in [
            "GroupRing(GF(2,1),Sym(3))",
            "GroupRing(GF(3,1),Cyclic(4))",
            "Prod(Zn(4),Mat(2,GF(2,1)))",
        ] {
            let r = ring(s);
            check_block_decomposition(&r, &central_primitive_idempotents(&r, &cfg).unwrap());
        }
    }

    #[test]
    fn local_rings_have_one_block() {
        let cfg = OracleConfig::default();
        for s in [
            "Zn(8)",
            "SkewTrunc(GF(2,2),frob^1,2)",
            "GroupRing(GF(2,1),Cyclic(4))",
        ] {
            let r = ring(s);
            assert_eq!(
                central_primitive_idempotents(&r, &cfg).unwrap(),
                vec![r.one()]
            );
            assert_eq!(idempotents(&r, &cfg).unwrap(), vec![0, r.one()]);
        }
    }

    #[test]
    fn primitive_idempotents_in_matrices() {
        let cfg = OracleConfig::default();
        let m = ring("Mat(2,GF(2,1))");
        let all = idempotents(&m, &cfg).unwrap();
        assert!(is_primitive_idempotent(&m, 1, &all)); // e_00
        assert!(!is_primitive_idempotent(&m, m.one(), &all));
        assert_eq!(
            all.iter()
                .filter(|&&f| is_primitive_idempotent(&m, f, &all))
                .count(),
            6
        );
    }
}
