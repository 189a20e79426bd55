//! Exact decision of whether a group ring `RG` is a principal ideal ring,
//! for `R` a finite ring given by a spec.

mod local;
mod verdict;

pub use local::{induced_sigma, induced_sigma_with, is_admissible, Admissibility, LocalPirData};
pub use verdict::{Decision, FactorReport, Reason, Verdict};

use crate::error::{Error, Result};
use crate::group::{prime_divisors, FiniteGroup};
use crate::oracle::OracleConfig;
use crate::ring::{FiniteRing, RingSpec};
use local::validate_local_pir;

/// A validated local factor `Mat(matrix_size, ring)` of the input.
struct Factor {
    matrix_size: usize,
    ring: FiniteRing,
    residue_char: u64,
}

fn residue_char_of(ring: &FiniteRing) -> Result<u64> {
    match prime_divisors(ring.size()).as_slice() {
        [p] => Ok(*p),
        _ => Err(Error::precondition(format!(
            "{} has order {}, not a prime power",
            ring.label(),
            ring.size()
        ))),
    }
}

fn factors(spec: &RingSpec, cfg: &OracleConfig) -> Result<Vec<Factor>> {
    spec.size()?;
    spec.canonical_factors()
        .into_iter()
        .map(|f| {
            let ring = FiniteRing::build(&f.local)?;
            validate_local_pir(&ring, cfg).map_err(|e| match e {
                Error::Precondition(m) => Error::precondition(format!(
                    "{spec} is not a product of matrix rings over local principal ideal rings: {m}"
                )),
                e => e,
            })?;
            Ok(Factor {
                matrix_size: f.matrix_size,
                residue_char: residue_char_of(&ring)?,
                ring,
            })
        })
        .collect()
}

/// Residue characteristics of the local factors, sorted and deduplicated.
pub fn pi_set(spec: &RingSpec, cfg: &OracleConfig) -> Result<Vec<u64>> {
    Ok(primes_of(&factors(spec, cfg)?))
}

fn primes_of(fs: &[Factor]) -> Vec<u64> {
    let mut pi: Vec<u64> = fs.iter().map(|f| f.residue_char).collect();
    pi.sort_unstable();
    pi.dedup();
    pi
}

/// Decides whether `RG` is a principal ideal ring, where `R` is a finite
/// product of matrix rings over local principal ideal rings.
pub fn decide(spec: &RingSpec, group: &FiniteGroup, cfg: &OracleConfig) -> Result<Verdict> {
    let fs = factors(spec, cfg)?;
    decide_factors(spec.to_string(), &fs, group, cfg)
}

/// [`decide`] for a single local principal ideal ring, which may be given
/// by tables alone.
pub fn decide_local(ring: &FiniteRing, group: &FiniteGroup, cfg: &OracleConfig) -> Result<Verdict> {
    validate_local_pir(ring, cfg)?;
    let f = Factor {
        matrix_size: 1,
        residue_char: residue_char_of(ring)?,
        ring: ring.clone(),
    };
    decide_factors(ring.label().to_string(), &[f], group, cfg)
}

fn decide_factors(
    label: String,
    fs: &[Factor],
    group: &FiniteGroup,
    cfg: &OracleConfig,
) -> Result<Verdict> {
    let pi = primes_of(fs);
    let witness = group.pi_prime_by_cyclic_pi(&pi);
    let order = group.order() as i64;
    let mut reports = Vec::with_capacity(fs.len());
    let mut datas = Vec::with_capacity(fs.len());
    for f in fs {
        let data = induced_sigma(&f.ring, cfg)?;
        reports.push(FactorReport {
            spec: f.ring.label().to_string(),
            matrix_size: f.matrix_size,
            residue_char: f.residue_char,
            residue_size: data.residue_size(),
            division: data.is_division(),
            group_order_unit: f.ring.is_unit(f.ring.from_int(order)),
            sigma: None,
            admissible: None,
            idempotents: None,
        });
        datas.push(data);
    }
    let mut verdict = Verdict {
        ring: label,
        group: group.label().to_string(),
        decision: Decision::NotPir,
        reason: Reason::NotPiStructure,
        pi,
        witness_subgroup: witness.as_ref().map(|n| n.elements().to_vec()),
        violated_factor: None,
        factors: reports,
    };
    if witness.is_none() {
        return Ok(verdict);
    }
    let heavy = |r: &FactorReport| !r.division;
    if let Some(i) = verdict
        .factors
        .iter()
        .position(|r| heavy(r) && !r.group_order_unit)
    {
        verdict.reason = Reason::GroupOrderNotUnit;
        verdict.violated_factor = Some(i);
        return Ok(verdict);
    }
    for (i, data) in datas.iter().enumerate() {
        if !heavy(&verdict.factors[i]) {
            continue;
        }
        let a = is_admissible(data, group, cfg)?;
        let r = &mut verdict.factors[i];
        r.sigma = Some(data.sigma_description()?);
        r.admissible = Some(a.admissible);
        r.idempotents = Some(a.idempotents.len());
        if !a.admissible && verdict.violated_factor.is_none() {
            verdict.reason = Reason::NotAdmissible;
            verdict.violated_factor = Some(i);
        }
    }
    if verdict.violated_factor.is_none() {
        verdict.decision = Decision::Pir;
        verdict.reason = if verdict.factors.iter().any(heavy) {
            Reason::AdmissibleOk
        } else {
            Reason::SemisimpleGroupOk
        };
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(r: &str, g: &str) -> Verdict {
        let g = FiniteGroup::build(&g.parse().unwrap()).unwrap();
        decide(&r.parse().unwrap(), &g, &OracleConfig::default()).unwrap()
    }

    #[test]
    fn golden_pairs() {
        let cases = [
            (
                "GF(2,1)",
                "Sym(3)",
                Decision::Pir,
                Reason::SemisimpleGroupOk,
            ),
            (
                "Zn(4)",
                "Cyclic(2)",
                Decision::NotPir,
                Reason::GroupOrderNotUnit,
            ),
            ("Zn(4)", "Cyclic(3)", Decision::Pir, Reason::AdmissibleOk),
            (
                "SkewTrunc(GF(2,2),frob^1,2)",
                "Cyclic(3)",
                Decision::NotPir,
                Reason::NotAdmissible,
            ),
            (
                "SkewTrunc(GF(2,1),id,2)",
                "Cyclic(2)",
                Decision::NotPir,
                Reason::GroupOrderNotUnit,
            ),
            (
                "GF(3,1)",
                "Sym(3)",
                Decision::NotPir,
                Reason::NotPiStructure,
            ),
            (
                "SkewTrunc(GF(5,2),frob^1,2)",
                "Sym(3)",
                Decision::Pir,
                Reason::AdmissibleOk,
            ),
            (
                "Zn(12)",
                "Cyclic(6)",
                Decision::NotPir,
                Reason::GroupOrderNotUnit,
            ),
            (
                "Zn(6)",
                "Cyclic(6)",
                Decision::Pir,
                Reason::SemisimpleGroupOk,
            ),
        ];
        for (r, g, d, why) in cases {
            let v = run(r, g);
            assert_eq!((v.decision, v.reason), (d, why), "{r} {g}");
        }
    }

    #[test]
    fn zn12_with_c6_is_split() {
        // Zn(12) = Zn(4) × Zn(3), residue characteristics 2 and 3
        let v = run("Zn(12)", "Cyclic(6)");
        assert_eq!(v.pi, vec![2, 3]);
        assert!(!v.factors[0].division && !v.factors[0].group_order_unit);
    }

    #[test]
    fn violated_factor_is_reported() {
        let v = run("Prod(GF(3,1),SkewTrunc(GF(2,2),frob^1,2))", "Cyclic(3)");
        assert_eq!(v.reason, Reason::NotAdmissible);
        assert_eq!(v.violated_factor, Some(1));
        assert_eq!(v.factors[1].sigma.as_deref(), Some("frob^1 fixing GF(2^1)"));
    }

    #[test]
    fn non_pir_input_is_refused() {
        let g = FiniteGroup::build(&"Cyclic(2)".parse().unwrap()).unwrap();
        let spec = "GroupRing(Zn(4),Cyclic(2))".parse().unwrap();
        assert!(matches!(
            decide(&spec, &g, &OracleConfig::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pi_sets() {
        let cfg = OracleConfig::default();
        let pi = |s: &str| pi_set(&s.parse().unwrap(), &cfg).unwrap();
        assert_eq!(pi("Zn(12)"), vec![2, 3]);
        assert_eq!(pi("Mat(2,SkewTrunc(GF(5,2),frob^1,2))"), vec![5]);
        assert_eq!(pi("Prod(GF(2,3),Zn(9),Zn(2))"), vec![2, 3]);
    }
}
