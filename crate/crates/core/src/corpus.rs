//! Built-in rings and groups used by the cross-checks and the CLI.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::Result;
use crate::group::{direct_product_table, FiniteGroup, GroupSpec};
use crate::ring::RingSpec;

/// Largest group order in the corpus.
pub const MAX_CORPUS_GROUP_ORDER: usize = 24;

/// Group with the name the corpus knows it by.
#[derive(Clone, Debug)]
pub struct NamedGroup {
    pub name: String,
    pub group: FiniteGroup,
}

/// Closes `gens` under `mul`; the identity gets index 0.
fn generated<T: Clone + Eq + Hash>(
    identity: T,
    gens: &[T],
    mul: impl Fn(&T, &T) -> T,
    label: &str,
) -> Result<FiniteGroup> {
    let mut elems = vec![identity];
    let mut index: HashMap<T, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let x = mul(&elems[i], g);
            if !index.contains_key(&x) {
                index.insert(x.clone(), elems.len());
                elems.push(x);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elems {
        for b in &elems {
            table.push(index[&mul(a, b)] as u32);
        }
    }
    FiniteGroup::from_table_checked(n, table, label.to_string())
}

/// `C_m ⋊ C_n` with `b a b⁻¹ = a^r`; needs `r^n ≡ 1 (mod m)`.
pub fn semidirect_cyclic(m: usize, n: usize, r: usize, label: &str) -> Result<FiniteGroup> {
    let rpow = |j: usize| (0..j).fold(1, |acc, _| acc * r % m);
    generated(
        (0usize, 0usize),
        &[(1 % m, 0), (0, 1 % n)],
        |&(i1, j1), &(i2, j2)| ((i1 + rpow(j1) * i2) % m, (j1 + j2) % n),
        label,
    )
}

/// Dicyclic group of order `4n`: `a^(2n) = 1`, `x² = a^n`, `x a x⁻¹ = a⁻¹`.
pub fn dicyclic(n: usize, label: &str) -> Result<FiniteGroup> {
    let m = 2 * n;
    generated(
        (0usize, 0usize),
        &[(1, 0), (0, 1)],
        |&(i1, j1), &(i2, j2)| match (j1, j2) {
            (0, _) => ((i1 + i2) % m, j2),
            (_, 0) => ((i1 + m - i2) % m, 1),
            _ => ((i1 + m - i2 + n) % m, 0),
        },
        label,
    )
}

/// Even permutations of four points.
pub fn alternating4() -> Result<FiniteGroup> {
    let compose = |a: &[usize; 4], b: &[usize; 4]| [a[b[0]], a[b[1]], a[b[2]], a[b[3]]];
    generated([0, 1, 2, 3], &[[1, 2, 0, 3], [1, 0, 3, 2]], compose, "A4")
}

/// `SL(2,3)` as 2×2 matrices over `Z/3`, stored row-major.
pub fn special_linear_2_3() -> Result<FiniteGroup> {
    let mul = |a: &[u8; 4], b: &[u8; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    generated([1, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mul, "SL(2,3)")
}

fn direct(label: &str, factors: &[&FiniteGroup]) -> Result<FiniteGroup> {
    let fs: Vec<FiniteGroup> = factors.iter().map(|&g| g.clone()).collect();
    let n = fs.iter().map(FiniteGroup::order).product();
    FiniteGroup::from_table_checked(n, direct_product_table(&fs), label.to_string())
}

fn from_spec(s: &str) -> Result<NamedGroup> {
    let spec: GroupSpec = s.parse()?;
    Ok(NamedGroup {
        name: spec.to_string(),
        group: FiniteGroup::build(&spec)?,
    })
}

fn named(group: FiniteGroup) -> NamedGroup {
    NamedGroup {
        name: group.label().to_string(),
        group,
    }
}

/// Corpus groups, ordered by order and then by construction.
pub fn corpus_groups() -> Result<Vec<NamedGroup>> {
    let mut out = Vec::new();
    for n in 1..=MAX_CORPUS_GROUP_ORDER {
        out.push(from_spec(&format!("Cyclic({n})"))?);
    }
    for s in [
        "DirectProduct(Cyclic(2),Cyclic(2))",
        "Sym(3)",
        "DirectProduct(Cyclic(4),Cyclic(2))",
        "DirectProduct(Cyclic(2),Cyclic(2),Cyclic(2))",
        "Dihedral(4)",
        "DirectProduct(Cyclic(3),Cyclic(3))",
        "Dihedral(5)",
        "DirectProduct(Cyclic(2),Cyclic(6))",
        "Dihedral(6)",
        "Dihedral(7)",
        "DirectProduct(Cyclic(4),Cyclic(4))",
        "DirectProduct(Cyclic(8),Cyclic(2))",
        "DirectProduct(Cyclic(4),Cyclic(2),Cyclic(2))",
        "DirectProduct(Cyclic(2),Cyclic(2),Cyclic(2),Cyclic(2))",
        "Dihedral(8)",
        "DirectProduct(Cyclic(2),Dihedral(4))",
        "DirectProduct(Cyclic(3),Cyclic(6))",
        "Dihedral(9)",
        "DirectProduct(Cyclic(3),Sym(3))",
        "DirectProduct(Cyclic(2),Cyclic(10))",
        "Dihedral(10)",
        "Dihedral(11)",
        "DirectProduct(Cyclic(2),Cyclic(12))",
        "DirectProduct(Cyclic(2),Cyclic(2),Cyclic(6))",
        "Sym(4)",
        "Dihedral(12)",
        "DirectProduct(Cyclic(3),Dihedral(4))",
        "DirectProduct(Cyclic(4),Sym(3))",
        "DirectProduct(Cyclic(2),Dihedral(6))",
    ] {
        out.push(from_spec(s)?);
    }
    let q8 = dicyclic(2, "Q8")?;
    let dic3 = dicyclic(3, "Dic3")?;
    let a4 = alternating4()?;
    let c2 = FiniteGroup::build(&GroupSpec::Cyclic(2))?;
    let c3 = FiniteGroup::build(&GroupSpec::Cyclic(3))?;
    out.extend(
        [
            q8.clone(),
            a4.clone(),
            dic3.clone(),
            dicyclic(4, "Q16")?,
            direct("C2xQ8", &[&c2, &q8])?,
            semidirect_cyclic(8, 2, 5, "M16")?,
            semidirect_cyclic(8, 2, 3, "SD16")?,
            semidirect_cyclic(4, 4, 3, "C4:C4")?,
            dicyclic(5, "Dic5")?,
            semidirect_cyclic(5, 4, 2, "C5:C4")?,
            semidirect_cyclic(7, 3, 2, "C7:C3")?,
            special_linear_2_3()?,
            dicyclic(6, "Dic6")?,
            semidirect_cyclic(3, 8, 2, "C3:C8")?,
            direct("C2xA4", &[&c2, &a4])?,
            direct("C2xDic3", &[&c2, &dic3])?,
            direct("C3xQ8", &[&c3, &q8])?,
        ]
        .into_iter()
        .map(named),
    );
    out.sort_by_key(|g| g.group.order());
    Ok(out)
}

/// Corpus group by name, or `None`.
pub fn named_group(name: &str) -> Result<Option<FiniteGroup>> {
    Ok(corpus_groups()?
        .into_iter()
        .find(|g| g.name == name)
        .map(|g| g.group))
}

/// Coefficient rings accepted by the decision procedure: products of matrix
/// rings over local principal ideal rings.
pub fn coefficient_rings() -> Vec<RingSpec> {
    [
        "GF(2,1)",
        "GF(3,1)",
        "GF(2,2)",
        "GF(5,1)",
        "GF(2,3)",
        "Zn(4)",
        "Zn(8)",
        "Zn(9)",
        "Zn(6)",
        "Zn(12)",
        "SkewTrunc(GF(2,1),id,2)",
        "SkewTrunc(GF(2,1),id,3)",
        "SkewTrunc(GF(3,1),id,2)",
        "SkewTrunc(GF(2,2),id,2)",
        "SkewTrunc(GF(2,2),frob^1,2)",
        "SkewTrunc(GF(2,2),frob^1,3)",
        "SkewTrunc(GF(3,2),frob^1,2)",
        "SkewTrunc(GF(5,2),frob^1,2)",
        "Mat(2,GF(2,1))",
        "Prod(GF(2,1),GF(2,1))",
        "Prod(GF(2,1),GF(3,1))",
        "Prod(Zn(4),GF(3,1))",
        "Prod(GF(2,1),Zn(4))",
        "Prod(GF(3,1),SkewTrunc(GF(2,2),frob^1,2))",
    ]
    .iter()
    .map(|s| s.parse().expect("corpus spec parses"))
    .collect()
}

/// Rings for the ideal-theoretic cross-checks: coefficient rings, group
/// rings over them, and rings that fail the principal ideal property.
pub fn oracle_rings() -> Vec<RingSpec> {
    let mut out = coefficient_rings();
    out.extend(
        [
            "GroupRing(GF(2,1),Cyclic(1))",
            "GroupRing(GF(2,1),Cyclic(2))",
            "GroupRing(GF(2,1),Cyclic(3))",
            "GroupRing(GF(2,1),Cyclic(4))",
            "GroupRing(GF(2,1),Cyclic(5))",
            "GroupRing(GF(2,1),Cyclic(6))",
            "GroupRing(GF(2,1),DirectProduct(Cyclic(2),Cyclic(2)))",
            "GroupRing(GF(2,1),Sym(3))",
            "GroupRing(GF(2,1),Dihedral(4))",
            "GroupRing(Zn(4),Cyclic(2))",
            "GroupRing(Zn(4),Cyclic(3))",
            "GroupRing(SkewTrunc(GF(2,1),id,2),Cyclic(2))",
            "GroupRing(SkewTrunc(GF(2,1),id,2),Cyclic(3))",
            "GroupRing(SkewTrunc(GF(2,2),frob^1,2),Cyclic(3))",
            "GroupRing(GF(3,1),Cyclic(3))",
            "GroupRing(GF(3,1),Sym(3))",
            "Mat(2,Zn(4))",
            "Prod(Zn(4),Mat(2,GF(2,1)))",
            "Prod(GF(2,2),Zn(9))",
            "Mat(3,GF(2,1))",
        ]
        .iter()
        .map(|s| s.parse::<RingSpec>().expect("corpus spec parses")),
    );
    out
}

/// Pairs `(R, G)` from the coefficient rings and corpus groups with
/// `|R|^|G| ≤ cap`, in corpus order.
pub fn decide_pairs(cap: u64) -> Result<Vec<(RingSpec, NamedGroup)>> {
    let groups = corpus_groups()?;
    let mut out = Vec::new();
    for r in coefficient_rings() {
        let size = r.size()?;
        for g in &groups {
            let fits = (size as u128)
                .checked_pow(g.group.order() as u32)
                .is_some_and(|s| s <= cap as u128);
            if fits {
                out.push((r.clone(), g.clone()));
            }
        }
    }
    Ok(out)
}
