use criterion::{black_box, criterion_group, criterion_main, Criterion};

use morphic_bench::{group, ring};
use morphic_core::graded::{associated_graded, decompose_matrix_automorphism};
use morphic_core::oracle::OracleConfig;
use morphic_core::{decide, FiniteRing, RingAutomorphism};

fn decision(c: &mut Criterion) {
    let cfg = OracleConfig::default();
    let mut g = c.benchmark_group("decide");
    for (r, grp) in [
        ("Zn(4)", "Cyclic(3)"),
        ("SkewTrunc(GF(2,2),frob^1,2)", "Cyclic(3)"),
        ("SkewTrunc(GF(5,2),frob^1,2)", "Sym(3)"),
        ("Prod(GF(3,1),SkewTrunc(GF(2,2),frob^1,2))", "Cyclic(7)"),
    ] {
        let spec = r.parse().unwrap();
        let grp_v = group(grp);
        g.bench_function(format!("{r}.{grp}"), |b| {
            b.iter(|| decide(black_box(&spec), black_box(&grp_v), &cfg).unwrap())
        });
    }
    g.finish();
}

fn graded(c: &mut Criterion) {
    let mut g = c.benchmark_group("graded");
    for r in ["Zn(27)", "SkewTrunc(GF(2,2),frob^1,3)"] {
        let s = ring(r);
        g.bench_function(format!("associated_graded/{r}"), |b| {
            b.iter(|| associated_graded(black_box(&s)).unwrap())
        });
    }
    let f = FiniteRing::gf(2, 2).unwrap();
    let m = FiniteRing::matrix(2, f.clone()).unwrap();
    let frob = RingAutomorphism::frobenius(&f, 1).unwrap();
    let z = m.units().unwrap()[5];
    let phi = RingAutomorphism::conjugation(&m, z)
        .unwrap()
        .compose(&RingAutomorphism::coefficientwise(&m, &frob).unwrap())
        .unwrap();
    g.bench_function("decompose/Mat(2,GF(2,2))", |b| {
        b.iter(|| decompose_matrix_automorphism(black_box(&phi)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, decision, graded);
criterion_main!(benches);
