use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::group_ring::GroupRingView;
use crate::ideal::{quotient_ring_labeled, IdealSet, QuotientRing, Side};
use crate::oracle::{self, OracleConfig};
use crate::ring::{Elem, FiniteRing, RingAutomorphism};

/// A local principal ideal ring with its radical, residue field and the
/// residue automorphism `σ` defined by `c·r = σ(r)·c`.
#[derive(Clone, Debug)]
pub struct LocalPirData {
    pub ring: FiniteRing,
    pub radical: IdealSet,
    /// Generator of the radical used to define `σ`; zero when `J = 0`.
    pub generator: Elem,
    pub residue: QuotientRing,
    pub residue_char: u64,
    pub sigma: RingAutomorphism,
}

/// Admissibility outcome with the idempotents it was judged on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub admissible: bool,
    /// Centrally primitive idempotents of `(S/J)G`, in index order.
    pub idempotents: Vec<Elem>,
    /// Whether `σ` fixes each of them.
    pub fixed: Vec<bool>,
}

/// Checks locality and the principal ideal property, trusting constructors
/// known to produce local principal ideal rings.
pub(crate) fn validate_local_pir(ring: &FiniteRing, cfg: &OracleConfig) -> Result<()> {
    if ring.spec().is_some_and(|s| s.is_local_by_construction()) {
        return Ok(());
    }
    if !oracle::is_local(ring)? {
        return Err(Error::precondition(format!(
            "{} is not local",
            ring.label()
        )));
    }
    if !oracle::is_principal_ideal_ring(ring, cfg)?.principal {
        return Err(Error::precondition(format!(
            "{} is not a principal ideal ring",
            ring.label()
        )));
    }
    Ok(())
}

impl LocalPirData {
    pub fn residue_size(&self) -> u64 {
        self.residue.ring.size()
    }

    pub fn is_division(&self) -> bool {
        self.radical.is_zero()
    }

    /// `j` with `σ(x) = x^(p^j)` on the residue field.
    pub fn frobenius_power(&self) -> Result<u32> {
        let f = &self.residue.ring;
        let p = self.residue_char;
        let d = degree(self.residue_size(), p);
        (0..d)
            .find(|&j| {
                let e = p.pow(j);
                f.elements().all(|x| self.sigma.apply(x) == f.pow(x, e))
            })
            .ok_or_else(|| Error::inconsistent("residue automorphism is not a Frobenius power"))
    }

    /// `id`, or `frob^j fixing GF(p^e)`.
    pub fn sigma_description(&self) -> Result<String> {
        let j = self.frobenius_power()?;
        if j == 0 {
            return Ok("id".into());
        }
        let p = self.residue_char;
        let d = degree(self.residue_size(), p);
        let fixed = crate::group::gcd(j as u64, d as u64);
        Ok(format!("frob^{j} fixing GF({p}^{fixed})"))
    }
}

fn degree(q: u64, p: u64) -> u32 {
    let mut d = 0;
    let mut x = 1;
    while x < q {
        x *= p;
        d += 1;
    }
    d
}

/// Computes `σ` from the least-index generator of `J` outside `J²`.
pub fn induced_sigma(ring: &FiniteRing, cfg: &OracleConfig) -> Result<LocalPirData> {
    induced_sigma_from(ring, None, cfg)
}

/// As [`induced_sigma`], with an explicit generator `c ∈ J ∖ J²`.
pub fn induced_sigma_with(ring: &FiniteRing, c: Elem, cfg: &OracleConfig) -> Result<LocalPirData> {
    induced_sigma_from(ring, Some(c), cfg)
}

fn induced_sigma_from(
    ring: &FiniteRing,
    c: Option<Elem>,
    cfg: &OracleConfig,
) -> Result<LocalPirData> {
    validate_local_pir(ring, cfg)?;
    let radical = oracle::jacobson_radical(ring)?;
    let residue = quotient_ring_labeled(ring, &radical, format!("{}/J", ring.label()))?;
    let residue_char = residue.ring.characteristic();
    if radical.is_zero() {
        if c.is_some_and(|c| c != ring.zero()) {
            return Err(Error::precondition(
                "radical is zero; no generator to choose",
            ));
        }
        return Ok(LocalPirData {
            sigma: RingAutomorphism::identity(&residue.ring),
            ring: ring.clone(),
            radical,
            generator: ring.zero(),
            residue,
            residue_char,
        });
    }
    let j2 = radical.power(2)?;
    let c = match c {
        Some(c) => {
            if !radical.contains(c) || j2.contains(c) {
                return Err(Error::precondition("generator must lie in J but not in J²"));
            }
            c
        }
        None => radical
            .elements()
            .into_iter()
            .find(|&x| !j2.contains(x))
            .expect("J ≠ J² for a nonzero nilpotent J"),
    };
    if IdealSet::principal(ring, c, Side::Left)? != radical
        || IdealSet::principal(ring, c, Side::Right)? != radical
    {
        return Err(Error::precondition(format!(
            "radical of {} is not generated by a single element on both sides",
            ring.label()
        )));
    }
    // solve c·r ≡ s·c (mod J²) over residue representatives r, s
    let reps = residue.representatives();
    let mut table = Vec::with_capacity(reps.len());
    for &r in reps {
        let cr = ring.mul(c, r);
        let s = reps
            .iter()
            .position(|&s| j2.contains(ring.sub(cr, ring.mul(s, c))))
            .ok_or_else(|| {
                Error::inconsistent(format!("no s with c·r = s·c for r = {}", ring.render(r)))
            })?;
        table.push(s as Elem);
    }
    let sigma = RingAutomorphism::from_table(&residue.ring, table, "σ")?;
    Ok(LocalPirData {
        ring: ring.clone(),
        radical,
        generator: c,
        residue,
        residue_char,
        sigma,
    })
}

/// `σ`, extended to `(S/J)G`, fixes every centrally primitive idempotent.
pub fn is_admissible(
    data: &LocalPirData,
    group: &FiniteGroup,
    cfg: &OracleConfig,
) -> Result<Admissibility> {
    let k = &data.residue.ring;
    if !k.is_unit(k.from_int(group.order() as i64)) {
        return Err(Error::precondition(format!(
            "|G|·1 = {} is not a unit in the residue field of {}",
            group.order(),
            data.ring.label()
        )));
    }
    let view = GroupRingView::build(k, group)?;
    let sigma = view.extend_automorphism(&data.sigma)?;
    let idempotents = oracle::central_primitive_idempotents(view.ring(), cfg)?;
    let fixed: Vec<bool> = idempotents.iter().map(|&e| sigma.apply(e) == e).collect();
    Ok(Admissibility {
        admissible: fixed.iter().all(|&f| f),
        idempotents,
        fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::build(&s.parse().unwrap()).unwrap()
    }

    fn group(s: &str) -> FiniteGroup {
        FiniteGroup::build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let cfg = OracleConfig::default();
        let z4 = induced_sigma(&ring("Zn(4)"), &cfg).unwrap();
        assert!(z4.sigma.is_identity());
        assert_eq!(z4.generator, 2);
        let sk = induced_sigma(&ring("SkewTrunc(GF(2,2),frob^1,2)"), &cfg).unwrap();
        assert_eq!(sk.frobenius_power().unwrap(), 1);
        assert_eq!(sk.sigma_description().unwrap(), "frob^1 fixing GF(2^1)");
        let f = induced_sigma(&ring("GF(3,1)"), &cfg).unwrap();
        assert!(f.is_division());
        assert_eq!(f.sigma_description().unwrap(), "id");
        let deep = induced_sigma(&ring("SkewTrunc(GF(2,2),frob^1,3)"), &cfg).unwrap();
        assert_eq!(deep.frobenius_power().unwrap(), 1);
    }

    #[test]
    fn non_local_rings_are_rejected() {
        let cfg = OracleConfig::default();
        assert!(induced_sigma(&ring("Prod(GF(2,1),GF(2,1))"), &cfg).is_err());
        assert!(induced_sigma(&ring("Mat(2,GF(2,1))"), &cfg).is_err());
    }

    #[test]
    fn admissibility_examples() {
        let cfg = OracleConfig::default();
        let z9 = induced_sigma(&ring("Zn(9)"), &cfg).unwrap();
        assert!(
            is_admissible(&z9, &group("Cyclic(2)"), &cfg)
                .unwrap()
                .admissible
        );
        let sk = induced_sigma(&ring("SkewTrunc(GF(2,2),frob^1,2)"), &cfg).unwrap();
        let a = is_admissible(&sk, &group("Cyclic(3)"), &cfg).unwrap();
        assert!(!a.admissible);
        assert_eq!(a.idempotents.len(), 3);
        assert_eq!(a.fixed.iter().filter(|&&f| !f).count(), 2);
        let f25 = induced_sigma(&ring("SkewTrunc(GF(5,2),frob^1,2)"), &cfg).unwrap();
        assert!(
            is_admissible(&f25, &group("Sym(3)"), &cfg)
                .unwrap()
                .admissible
        );
        let z4 = induced_sigma(&ring("Zn(4)"), &cfg).unwrap();
        assert!(is_admissible(&z4, &group("Cyclic(2)"), &cfg).is_err());
    }

    #[test]
    fn generator_choice_does_not_matter() {
        let cfg = OracleConfig::default();
        for s in [
            "SkewTrunc(GF(2,2),frob^1,2)",
            "Zn(9)",
            "SkewTrunc(GF(3,1),id,2)",
            "Zn(8)",
        ] {
            let r = ring(s);
            let base = induced_sigma(&r, &cfg).unwrap();
            let j2 = base.radical.power(2).unwrap();
            for c in base.radical.elements() {
                if j2.contains(c) {
                    continue;
                }
                let d = induced_sigma_with(&r, c, &cfg).unwrap();
                for g in ["Cyclic(1)", "Cyclic(3)", "Cyclic(2)"] {
                    let g = group(g);
                    let a = is_admissible(&base, &g, &cfg);
                    let b = is_admissible(&d, &g, &cfg);
                    assert_eq!(a.is_ok(), b.is_ok());
                    if let (Ok(a), Ok(b)) = (a, b) {
                        assert_eq!(a, b, "{s}");
                    }
                }
            }
        }
    }
}
