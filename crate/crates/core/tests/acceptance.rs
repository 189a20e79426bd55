//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every expected value below is either recomputed here by the
//! exhaustive oracle or checked against it before being trusted.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use morphic_core::classify::{induced_sigma, is_admissible};
use morphic_core::corpus::{coefficient_rings, corpus_groups, decide_pairs, oracle_rings};
use morphic_core::crosscheck::{compare, group_ring, run_corpus, RowOutcome};
use morphic_core::fixtures::{shuffled, square_zero_two_generator};
use morphic_core::graded::graded_lift_check;
use morphic_core::graded::{decompose_matrix_automorphism, skew_matrix_iso};
use morphic_core::group::{gcd, is_prime, prime_divisors};
use morphic_core::oracle::{self, OracleConfig};
use morphic_core::{
    decide, Decision, FiniteGroup, FiniteRing, GroupRingView, Reason, RingAutomorphism, RingSpec,
};

type Outcome = Result<String, String>;

const CAP: u64 = 4096;
const CORPUS_BUDGET: Duration = Duration::from_secs(600);

fn spec(s: &str) -> RingSpec {
    s.parse().expect("spec parses")
}

fn group(s: &str) -> FiniteGroup {
    FiniteGroup::build(&s.parse().expect("group spec parses")).expect("group builds")
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn pir_iff_morphic() -> Outcome {
    let start = Instant::now();
    let cfg = OracleConfig::with_cap(CAP);
    let mut seen = BTreeSet::new();
    let mut rings: Vec<FiniteRing> = Vec::new();
    for s in oracle_rings() {
        if seen.insert(s.to_string()) {
            rings.push(FiniteRing::build(&s).map_err(err)?);
        }
    }
    for (r, g) in decide_pairs(CAP).map_err(err)? {
        let rg = group_ring(&r, &g.group).map_err(err)?;
        if seen.insert(format!("{r}·{}", g.name)) && rg.size() <= CAP {
            rings.push(rg);
        }
    }
    let fixture = square_zero_two_generator().map_err(err)?;
    rings.push(shuffled(&fixture, 11).map_err(err)?);
    rings.push(fixture);

    let (mut pir, mut not_pir) = (0, 0);
    for r in &rings {
        let p = oracle::is_principal_ideal_ring(r, &cfg)
            .map_err(err)?
            .principal;
        let m = oracle::is_morphic_ring(r, &cfg).map_err(err)?.morphic;
        if p != m {
            return Err(format!("{}: principal={p} morphic={m}", r.label()));
        }
        if p {
            pir += 1;
        } else {
            not_pir += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > CORPUS_BUDGET {
        return Err(format!("{} rings agree but took {elapsed:?}", rings.len()));
    }
    if pir == 0 || not_pir == 0 {
        return Err(format!("one-sided corpus: {pir} principal, {not_pir} not"));
    }
    Ok(format!(
        "{} rings ({pir} PIR, {not_pir} not) in {elapsed:.1?}",
        rings.len()
    ))
}

fn decide_matches_oracle() -> Outcome {
    let cfg = OracleConfig::with_cap(CAP);
    let pairs = decide_pairs(CAP).map_err(err)?;
    let required = [
        ("GF(2,1)", "Cyclic(1)"),
        ("GF(2,1)", "Cyclic(2)"),
        ("GF(2,1)", "Cyclic(3)"),
        ("GF(2,1)", "Cyclic(4)"),
        ("GF(2,1)", "Cyclic(5)"),
        ("GF(2,1)", "Cyclic(6)"),
        ("GF(2,1)", "DirectProduct(Cyclic(2),Cyclic(2))"),
        ("GF(2,1)", "Sym(3)"),
        ("GF(2,1)", "Dihedral(4)"),
        ("Zn(4)", "Cyclic(2)"),
        ("Zn(4)", "Cyclic(3)"),
        ("SkewTrunc(GF(2,1),id,2)", "Cyclic(2)"),
        ("SkewTrunc(GF(2,1),id,2)", "Cyclic(3)"),
        ("SkewTrunc(GF(2,2),frob^1,2)", "Cyclic(3)"),
    ];
    for (r, g) in required {
        let r = spec(r).to_string();
        if !pairs.iter().any(|(s, h)| s.to_string() == r && h.name == g) {
            return Err(format!("required pair ({r}, {g}) missing from the corpus"));
        }
    }
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let rows = run_corpus(&pairs, &cfg, workers).map_err(err)?;
    for row in &rows {
        match &row.outcome {
            RowOutcome::Agree(_) => {}
            RowOutcome::Disagree(c) => {
                return Err(format!(
                    "({}, {}): decide={} oracle PIR={} morphic={}",
                    row.ring, row.group, c.verdict.decision, c.pir.principal, c.morphic.morphic
                ))
            }
            RowOutcome::Refused(e) | RowOutcome::Failed(e) => {
                return Err(format!("({}, {}): {e}", row.ring, row.group))
            }
        }
    }

    let golden: [(&str, &str, Decision, Option<Reason>); 5] = [
        ("GF(2,1)", "Sym(3)", Decision::Pir, None),
        ("Zn(4)", "Cyclic(2)", Decision::NotPir, None),
        ("Zn(4)", "Cyclic(3)", Decision::Pir, None),
        (
            "SkewTrunc(GF(2,2),frob^1,2)",
            "Cyclic(3)",
            Decision::NotPir,
            Some(Reason::NotAdmissible),
        ),
        (
            "SkewTrunc(GF(2,1),id,2)",
            "Cyclic(2)",
            Decision::NotPir,
            Some(Reason::GroupOrderNotUnit),
        ),
    ];
    for (r, g, decision, reason) in golden {
        let c = compare(&spec(r), &group(g), &cfg).map_err(err)?;
        if c.pir.principal != decision.is_pir() {
            return Err(format!(
                "golden ({r}, {g}) = {decision} contradicts the oracle"
            ));
        }
        if c.verdict.decision != decision || reason.is_some_and(|x| x != c.verdict.reason) {
            return Err(format!(
                "({r}, {g}): decide gave {} / {}",
                c.verdict.decision, c.verdict.reason
            ));
        }
    }
    Ok(format!(
        "{} pairs agree, 5 golden outcomes confirmed",
        rows.len()
    ))
}

fn over_cap_spot_check() -> Outcome {
    let start = Instant::now();
    let cfg = OracleConfig::with_cap(CAP);
    let v = decide(&spec("GF(3,1)"), &group("Sym(3)"), &cfg).map_err(err)?;
    if v.decision != Decision::NotPir || v.reason != Reason::NotPiStructure {
        return Err(format!("decide gave {} / {}", v.decision, v.reason));
    }
    let rg = group_ring(&spec("GF(3,1)"), &group("Sym(3)")).map_err(err)?;
    let p = oracle::is_principal_ideal_ring(&rg, &cfg)
        .map_err(err)?
        .principal;
    let m = oracle::is_morphic_ring(&rg, &cfg).map_err(err)?.morphic;
    if p || m {
        return Err(format!(
            "oracle on {} elements: principal={p} morphic={m}",
            rg.size()
        ));
    }
    Ok(format!(
        "{} elements, NotPiStructure confirmed in {:.1?}",
        rg.size(),
        start.elapsed()
    ))
}

fn square_zero_admissibility() -> Outcome {
    let cfg = OracleConfig::with_cap(CAP);
    let groups = corpus_groups().map_err(err)?;
    let (mut admissible, mut not_admissible) = (0, 0);
    for s in coefficient_rings() {
        let r = FiniteRing::build(&s).map_err(err)?;
        if !oracle::is_local(&r).map_err(err)? {
            continue;
        }
        let j = oracle::jacobson_radical(&r).map_err(err)?;
        if !j.power(2).map_err(err)?.is_zero() {
            continue;
        }
        let data = induced_sigma(&r, &cfg).map_err(err)?;
        for g in &groups {
            let order = g.group.order() as u64;
            let fits = (r.size() as u128)
                .checked_pow(order as u32)
                .is_some_and(|n| n <= CAP as u128);
            if !fits || order % data.residue_char == 0 {
                continue;
            }
            let rg = group_ring(&s, &g.group).map_err(err)?;
            let p = oracle::is_principal_ideal_ring(&rg, &cfg)
                .map_err(err)?
                .principal;
            let a = is_admissible(&data, &g.group, &cfg)
                .map_err(err)?
                .admissible;
            if p != a {
                return Err(format!("({s}, {}): oracle PIR={p} admissible={a}", g.name));
            }
            if a {
                admissible += 1;
            } else {
                not_admissible += 1;
            }
        }
    }
    if not_admissible == 0 {
        return Err("no non-admissible pair exercised".into());
    }
    Ok(format!(
        "{} pairs ({admissible} admissible, {not_admissible} not)",
        admissible + not_admissible
    ))
}

fn graded_lift() -> Outcome {
    let cfg = OracleConfig::with_cap(CAP);
    let mut specs = vec![spec("Zn(4)"), spec("Zn(8)"), spec("Zn(9)")];
    specs.extend(
        coefficient_rings()
            .into_iter()
            .filter(|s| matches!(s, RingSpec::SkewTrunc { .. })),
    );
    let mut count = 0;
    for s in &specs {
        let r = FiniteRing::build(s).map_err(err)?;
        let rep = graded_lift_check(&r, &cfg).map_err(err)?;
        if !rep.source_principal || !rep.graded_principal {
            return Err(format!("{s}: expected principal on both sides"));
        }
        count += 1;
    }
    let fixture = square_zero_two_generator().map_err(err)?;
    let rep = graded_lift_check(&fixture, &cfg).map_err(err)?;
    if rep.source_principal || rep.graded_principal {
        return Err("non-principal fixture reported principal".into());
    }
    Ok(format!(
        "{count} principal rings and the non-principal fixture"
    ))
}

fn matrix_automorphism_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut total = 0;
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2)] {
        let field = FiniteRing::gf(p, k).map_err(err)?;
        let m = FiniteRing::matrix(2, field.clone()).map_err(err)?;
        let autos = RingAutomorphism::field_automorphisms(&field).map_err(err)?;
        let units = m.units().map_err(err)?;
        for round in 0..100 {
            let j = rng.gen_range(0..autos.len());
            let z0 = units[rng.gen_range(0..units.len())];
            let phi = RingAutomorphism::conjugation(&m, z0)
                .and_then(|c| c.compose(&RingAutomorphism::coefficientwise(&m, &autos[j])?))
                .map_err(err)?;
            let ctx = |what: &str| format!("GF({p},{k}) round {round} (z0={z0}, frob^{j}): {what}");
            let d = decompose_matrix_automorphism(&phi).map_err(|e| ctx(&e.to_string()))?;
            if !d.sigma.agrees_with(&autos[j]) {
                return Err(ctx("wrong field automorphism"));
            }
            let ratio = m.mul(d.z, m.unit_inverse(z0).expect("unit"));
            if m.elements().any(|x| m.mul(ratio, x) != m.mul(x, ratio)) {
                return Err(ctx("conjugator is not a central multiple of z0"));
            }
            let back = d.recompose().map_err(err)?;
            if m.elements().any(|x| back.apply(x) != phi.apply(x)) {
                return Err(ctx("recomposition differs"));
            }
            skew_matrix_iso(&phi)
                .and_then(|iso| iso.verify())
                .map_err(|e| ctx(&e.to_string()))?;
            total += 1;
        }
    }
    Ok(format!(
        "{total} automorphisms decomposed, recomposed and lifted"
    ))
}

fn group_quotient_properties() -> Outcome {
    let groups = corpus_groups().map_err(err)?;
    let (mut coprime_pairs, mut pi_sets) = (0, 0);
    for ng in &groups {
        let g = &ng.group;
        let n = g.order();
        let normals = g.normal_subgroups();
        let cyclic_index: Vec<Option<usize>> = normals
            .iter()
            .map(|h| Ok::<_, String>(g.quotient(h).map_err(err)?.is_cyclic().then(|| n / h.len())))
            .collect::<Result<_, _>>()?;
        for (h, a) in normals.iter().zip(&cyclic_index) {
            for (k, b) in normals.iter().zip(&cyclic_index) {
                let (Some(a), Some(b)) = (*a, *b) else {
                    continue;
                };
                if gcd(a as u64, b as u64) != 1 {
                    continue;
                }
                let q = g.quotient(&h.intersection(k)).map_err(err)?;
                if !q.is_cyclic() || q.order() != a * b {
                    return Err(format!(
                        "{}: G/H order {a}, G/K order {b}, G/(H∩K) order {} cyclic={}",
                        ng.name,
                        q.order(),
                        q.is_cyclic()
                    ));
                }
                if a > 1 && b > 1 {
                    coprime_pairs += 1;
                }
            }
        }

        let mut primes = prime_divisors(n as u64);
        let extra = (2..)
            .find(|&p| is_prime(p) && n as u64 % p != 0)
            .expect("a prime");
        primes.push(extra);
        let single: Vec<bool> = primes
            .iter()
            .map(|&p| g.pi_prime_by_cyclic_pi(&[p]).is_some())
            .collect();
        for mask in 0u32..(1 << primes.len()) {
            let pick = |i: usize| mask & (1 << i) != 0;
            let pi: Vec<u64> = (0..primes.len())
                .filter(|&i| pick(i))
                .map(|i| primes[i])
                .collect();
            let joint = g.pi_prime_by_cyclic_pi(&pi).is_some();
            let each = (0..primes.len()).filter(|&i| pick(i)).all(|i| single[i]);
            if joint != each {
                return Err(format!(
                    "{}: π={pi:?} joint={joint} per-prime={each}",
                    ng.name
                ));
            }
            pi_sets += 1;
        }
    }
    Ok(format!(
        "{} groups, {coprime_pairs} nontrivial coprime quotient pairs, {pi_sets} prime sets",
        groups.len()
    ))
}

fn dimension_subgroups_matrix_invariance() -> Outcome {
    let gf2 = FiniteRing::gf(2, 1).map_err(err)?;
    let m2 = FiniteRing::matrix(2, gf2.clone()).map_err(err)?;
    for name in [
        "Cyclic(2)",
        "Cyclic(4)",
        "DirectProduct(Cyclic(2),Cyclic(2))",
    ] {
        let g = group(name);
        let small = GroupRingView::build(&gf2, &g)
            .map_err(err)?
            .dimension_subgroups(4)
            .map_err(err)?;
        let big = GroupRingView::build(&m2, &g)
            .map_err(err)?
            .dimension_subgroups(4)
            .map_err(err)?;
        if small.len() != 4 || big.len() != 4 {
            return Err(format!("{name}: expected D_1..D_4"));
        }
        for (n, (a, b)) in small.iter().zip(&big).enumerate() {
            if a.elements() != b.elements() {
                return Err(format!(
                    "{name}: D_{} differs: {:?} vs {:?}",
                    n + 1,
                    a.elements(),
                    b.elements()
                ));
            }
        }
    }
    Ok("C2, C4, C2xC2 with n = 1..4".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("pir-iff-morphic", pir_iff_morphic),
        ("decide-matches-oracle", decide_matches_oracle),
        ("over-cap-spot-check", over_cap_spot_check),
        ("square-zero-admissibility", square_zero_admissibility),
        ("graded-lift", graded_lift),
        (
            "matrix-automorphism-round-trip",
            matrix_automorphism_round_trip,
        ),
        ("group-quotient-properties", group_quotient_properties),
        (
            "dimension-subgroups-matrix-invariance",
            dimension_subgroups_matrix_invariance,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
