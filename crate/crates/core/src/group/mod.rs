//! Finite groups as Cayley tables, with the subgroup machinery needed by the
//! π′-by-cyclic-π structure test.

mod spec;
mod subgroup;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use spec::{GroupSpec, MAX_GROUP_ORDER};
pub use subgroup::Subgroup;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table on `0..order`.
///
/// Cheap to clone; all clones share one table.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

struct GroupInner {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    label: String,
    spec: Option<GroupSpec>,
    generator: Option<usize>,
    classes: OnceLock<Vec<Vec<usize>>>,
    normals: OnceLock<Vec<Subgroup>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({}, order {})",
            self.inner.label, self.inner.order
        )
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.table == other.inner.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds and validates the group described by `spec`.
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        let n = spec.order()?;
        let (table, generator) = match spec {
            GroupSpec::Cyclic(n) => {
                let n = *n;
                let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
                (table, (n > 1).then_some(1))
            }
            GroupSpec::Dihedral(m) => {
                // r^i s^j stored as i + m*j
                let m = *m;
                let mut table = vec![0u32; n * n];
                for a in 0..n {
                    for b in 0..n {
                        let (i, j) = (a % m, a / m);
                        let (k, l) = (b % m, b / m);
                        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                        table[a * n + b] = (rot + m * ((j + l) % 2)) as u32;
                    }
                }
                (table, None)
            }
            GroupSpec::Sym(d) => {
                let perms = permutations(*d);
                let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
                let mut table = vec![0u32; n * n];
                for (a, pa) in perms.iter().enumerate() {
                    for (b, pb) in perms.iter().enumerate() {
                        // (a·b)(x) = a(b(x))
                        let prod: Vec<usize> = (0..*d).map(|x| pa[pb[x]]).collect();
                        table[a * n + b] = index(&prod) as u32;
                    }
                }
                (table, None)
            }
            GroupSpec::DirectProduct(factors) => {
                let groups = factors
                    .iter()
                    .map(FiniteGroup::build)
                    .collect::<Result<Vec<_>>>()?;
                (direct_product_table(&groups), None)
            }
            GroupSpec::Table { order, entries } => {
                if entries.len() != order * order {
                    return Err(Error::GroupSpec {
                        node: spec.to_string(),
                        reason: format!(
                            "expected {} entries, found {}",
                            order * order,
                            entries.len()
                        ),
                    });
                }
                if let Some(bad) = entries.iter().find(|&&e| e >= *order) {
                    return Err(Error::GroupSpec {
                        node: spec.to_string(),
                        reason: format!("entry {bad} is outside 0..{order}"),
                    });
                }
                (entries.iter().map(|&e| e as u32).collect(), None)
            }
        };
        let group = Self::from_table_checked(n, table, spec.to_string())?;
        let mut inner = Arc::try_unwrap(group.inner).ok().expect("fresh group");
        inner.spec = Some(spec.clone());
        inner.generator = generator;
        Ok(FiniteGroup {
            inner: Arc::new(inner),
        })
    }

    /// Validates an arbitrary table against the group axioms.
    pub fn from_table_checked(order: usize, table: Vec<u32>, label: String) -> Result<Self> {
        let n = order;
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::GroupAxiom {
                law: "existence of identity",
                a: 0,
                b: 0,
                c: 0,
            })?;
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::GroupAxiom {
                            law: "associativity",
                            a,
                            b,
                            c,
                        });
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(Error::GroupAxiom {
                    law: "existence of inverses",
                    a,
                    b: identity,
                    c: identity,
                })?;
        }
        Ok(Self::from_parts(n, table, identity, inverse, label))
    }

    fn from_parts(
        order: usize,
        table: Vec<u32>,
        identity: usize,
        inverse: Vec<usize>,
        label: String,
    ) -> Self {
        FiniteGroup {
            inner: Arc::new(GroupInner {
                order,
                table,
                identity,
                inverse,
                label,
                spec: None,
                generator: None,
                classes: OnceLock::new(),
                normals: OnceLock::new(),
            }),
        }
    }

    /// Table of a group already known to satisfy the axioms (quotients).
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u32>, label: String) -> Self {
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x))
            .expect("trusted table has an identity");
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] as usize == identity)
                    .expect("trusted table has inverses")
            })
            .collect();
        Self::from_parts(order, table, identity, inverse, label)
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.inner.spec.as_ref()
    }

    /// The designated generator `g` of a group built as `Cyclic(n)`.
    pub fn designated_generator(&self) -> Option<usize> {
        self.inner.generator
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverse[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// True iff some element has order `|G|`.
    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.inner.classes.get_or_init(|| {
            let n = self.order();
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if seen[x] {
                    continue;
                }
                let mut class: Vec<usize> = (0..n)
                    .map(|g| self.mul(self.mul(g, x), self.inv(g)))
                    .collect();
                class.sort_unstable();
                class.dedup();
                for &y in &class {
                    seen[y] = true;
                }
                classes.push(class);
            }
            classes
        })
    }

    /// Conjugacy class index of every element.
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        for (c, class) in self.conjugacy_classes().iter().enumerate() {
            for &x in class {
                idx[x] = c;
            }
        }
        idx
    }

    /// Subgroup generated by `gens` as a sorted element list.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut member = vec![false; n];
        let mut elems = vec![self.identity()];
        member[self.identity()] = true;
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Whether a subset is a subgroup (closed, contains identity).
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in set {
            member[x] = true;
        }
        member[self.identity()]
            && set.iter().all(|&a| member[self.inv(a)])
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal_set(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in set {
            member[x] = true;
        }
        (0..self.order()).all(|g| {
            set.iter()
                .all(|&h| member[self.mul(self.mul(g, h), self.inv(g))])
        })
    }

    pub fn subgroup(&self, elements: Vec<usize>) -> Result<Subgroup> {
        Subgroup::new(self.clone(), elements)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trusted(self.clone(), vec![self.identity()], true)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::trusted(self.clone(), (0..self.order()).collect(), true)
    }

    /// All normal subgroups, ordered by size and then lexicographically.
    ///
    /// A normal subgroup is a union of conjugacy classes, so starting from the
    /// trivial subgroup and repeatedly closing `N ∪ C` for every class `C`
    /// reaches each of them.
    pub fn normal_subgroups(&self) -> &[Subgroup] {
        self.inner.normals.get_or_init(|| {
            let classes = self.conjugacy_classes();
            let mut found: Vec<Vec<usize>> = vec![vec![self.identity()]];
            let mut queue = vec![0usize];
            while let Some(i) = queue.pop() {
                let base = found[i].clone();
                for class in classes {
                    if class.iter().all(|x| base.binary_search(x).is_ok()) {
                        continue;
                    }
                    let mut gens = base.clone();
                    gens.extend_from_slice(class);
                    let closed = self.generated_by(&gens);
                    if !found.contains(&closed) {
                        found.push(closed);
                        queue.push(found.len() - 1);
                    }
                }
            }
            found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            found
                .into_iter()
                .map(|els| Subgroup::trusted(self.clone(), els, true))
                .collect()
        })
    }

    /// Coset group `G/N`.
    pub fn quotient(&self, normal: &Subgroup) -> Result<FiniteGroup> {
        if normal.group() != self {
            return Err(Error::precondition("subgroup belongs to a different group"));
        }
        if !normal.is_normal() {
            return Err(Error::precondition(format!(
                "subgroup {:?} is not normal in {}",
                normal.elements(),
                self.label()
            )));
        }
        let (coset_of, reps) = self.cosets(normal.elements());
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                table[a * m + b] = coset_of[self.mul(ra, rb)] as u32;
            }
        }
        Ok(FiniteGroup::from_trusted_table(
            m,
            table,
            format!("{}/{:?}", self.label(), normal.elements()),
        ))
    }

    /// Left cosets `gN`; returns the coset index of every element and the
    /// least representative of every coset.
    pub(crate) fn cosets(&self, subgroup: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &h in subgroup {
                coset_of[self.mul(g, h)] = reps.len();
            }
            reps.push(g);
        }
        (coset_of, reps)
    }

    /// Returns a normal subgroup `N` with `|N|` coprime to every prime in
    /// `primes` and `G/N` cyclic of order divisible only by primes in
    /// `primes`, if one exists. Ties resolve to the smallest `N`, then the
    /// lexicographically least element set.
    ///
    /// With `primes` empty the quotient must be trivial, so `N = G`.
    pub fn pi_prime_by_cyclic_pi(&self, primes: &[u64]) -> Option<Subgroup> {
        self.normal_subgroups()
            .iter()
            .find(|n| {
                let size = n.len() as u64;
                if primes.iter().any(|&p| size % p == 0) {
                    return false;
                }
                let index = (self.order() / n.len()) as u64;
                if !only_primes_from(index, primes) {
                    return false;
                }
                self.quotient(n).map(|q| q.is_cyclic()).unwrap_or(false)
            })
            .cloned()
    }
}

fn only_primes_from(mut n: u64, primes: &[u64]) -> bool {
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

pub(crate) fn direct_product_table(groups: &[FiniteGroup]) -> Vec<u32> {
    let n: usize = groups.iter().map(|g| g.order()).product();
    let split = |mut x: usize| -> Vec<usize> {
        groups
            .iter()
            .map(|g| {
                let d = x % g.order();
                x /= g.order();
                d
            })
            .collect()
    };
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let da = split(a);
        for b in 0..n {
            let db = split(b);
            let mut idx = 0;
            for (i, g) in groups.iter().enumerate().rev() {
                idx = idx * g.order() + g.mul(da[i], db[i]);
            }
            table[a * n + b] = idx as u32;
        }
    }
    table
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FiniteGroup {
        FiniteGroup::build(&s.parse().unwrap()).unwrap()
    }

    /// Independent oracle: every subset that is a normal subgroup.
    fn normal_subgroups_by_subsets(grp: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = grp.order();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if grp.is_subgroup(&set) && grp.is_normal_set(&set) {
                out.push(set);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn basic_groups() {
        let c6 = g("Cyclic(6)");
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian() && c6.is_cyclic());
        let s3 = g("Sym(3)");
        assert!(!s3.is_abelian() && !s3.is_cyclic());
        assert_eq!(s3.conjugacy_classes().len(), 3);
        let d4 = g("Dihedral(4)");
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.conjugacy_classes().len(), 5);
        assert!(g("DirectProduct(Cyclic(2),Cyclic(3))").is_cyclic());
        assert!(!g("DirectProduct(Cyclic(2),Cyclic(2))").is_cyclic());
        assert_eq!(g("Sym(4)").conjugacy_classes().len(), 5);
    }

    #[test]
    fn classes_partition_the_carrier() {
        for s in ["Sym(4)", "Dihedral(5)", "DirectProduct(Sym(3),Cyclic(2))"] {
            let grp = g(s);
            let mut all: Vec<usize> = grp.conjugacy_classes().concat();
            all.sort_unstable();
            assert_eq!(all, (0..grp.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn normal_subgroups_match_subset_oracle() {
        for s in [
            "Sym(3)",
            "Cyclic(4)",
            "Dihedral(4)",
            "DirectProduct(Cyclic(2),Cyclic(2))",
            "Cyclic(6)",
            "Dihedral(3)",
        ] {
            let grp = g(s);
            let found: Vec<Vec<usize>> = grp
                .normal_subgroups()
                .iter()
                .map(|n| n.elements().to_vec())
                .collect();
            assert_eq!(found, normal_subgroups_by_subsets(&grp), "{s}");
        }
        assert_eq!(g("Sym(3)").normal_subgroups().len(), 3);
        assert_eq!(g("Cyclic(4)").normal_subgroups().len(), 3);
        // {1}, Z(D4), <r>, two Klein subgroups, D4
        assert_eq!(g("Dihedral(4)").normal_subgroups().len(), 6);
    }

    #[test]
    fn quotients() {
        let s3 = g("Sym(3)");
        let a3 = s3.normal_subgroups()[1].clone();
        assert_eq!(a3.len(), 3);
        let q = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_cyclic());
        let same = s3.quotient(&s3.trivial_subgroup()).unwrap();
        assert_eq!(same.order(), 6);
        assert!(!same.is_abelian());
        let c6 = g("Cyclic(6)");
        let two_part = c6.subgroup(vec![0, 3]).unwrap();
        let q = c6.quotient(&two_part).unwrap();
        assert!(q.order() == 3 && q.is_cyclic());
        let not_normal = s3.subgroup(s3.generated_by(&[1])).unwrap();
        assert!(!not_normal.is_normal());
        assert!(matches!(
            s3.quotient(&not_normal),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pi_structure_examples() {
        let s3 = g("Sym(3)");
        let w = s3.pi_prime_by_cyclic_pi(&[2]).unwrap();
        assert_eq!(w.len(), 3);
        assert!(s3.pi_prime_by_cyclic_pi(&[3]).is_none());
        for s in ["Sym(3)", "Cyclic(5)", "Dihedral(4)"] {
            let grp = g(s);
            assert_eq!(grp.pi_prime_by_cyclic_pi(&[]).unwrap().len(), grp.order());
        }
        // C3 over characteristic 3: N = 1, quotient C3
        assert_eq!(g("Cyclic(3)").pi_prime_by_cyclic_pi(&[3]).unwrap().len(), 1);
    }

    #[test]
    fn table_validation_reports_failing_triple() {
        let bad: GroupSpec = "Table(3; 0 1 2 1 0 2 2 2 0)".parse().unwrap();
        assert!(matches!(
            FiniteGroup::build(&bad),
            Err(Error::GroupAxiom { .. })
        ));
        let no_identity: GroupSpec = "Table(2; 0 0 0 0)".parse().unwrap();
        assert!(matches!(
            FiniteGroup::build(&no_identity),
            Err(Error::GroupAxiom {
                law: "existence of identity",
                ..
            })
        ));
        let short: GroupSpec = "Table(2; 0 1 1)".parse().unwrap();
        assert!(matches!(
            FiniteGroup::build(&short),
            Err(Error::GroupSpec { .. })
        ));
    }

    #[test]
    fn lagrange_on_normal_subgroups() {
        for s in [
            "Sym(4)",
            "Dihedral(6)",
            "DirectProduct(Cyclic(2),Cyclic(2),Cyclic(2))",
        ] {
            let grp = g(s);
            for n in grp.normal_subgroups() {
                assert_eq!(grp.order() % n.len(), 0);
                assert_eq!(grp.quotient(n).unwrap().order() * n.len(), grp.order());
            }
        }
    }
}
