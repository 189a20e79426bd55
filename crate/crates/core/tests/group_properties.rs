use std::sync::OnceLock;

use proptest::prelude::*;

use morphic_core::corpus::{corpus_groups, NamedGroup};

fn groups() -> &'static [NamedGroup] {
    static GROUPS: OnceLock<Vec<NamedGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| corpus_groups().unwrap())
}

/// Subgroups reachable as closures of at most three elements.
fn small_generated(ng: &NamedGroup) -> Vec<Vec<usize>> {
    let g = &ng.group;
    let mut out = Vec::new();
    for a in 0..g.order() {
        for b in a..g.order() {
            for c in b..g.order() {
                let s = g.generated_by(&[a, b, c]);
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[test]
fn lagrange_on_generated_and_normal_subgroups() {
    for ng in groups().iter().filter(|g| g.group.order() <= 16) {
        let n = ng.group.order();
        for s in small_generated(ng) {
            assert!(ng.group.is_subgroup(&s), "{}", ng.name);
            assert_eq!(n % s.len(), 0, "{}: {s:?}", ng.name);
        }
    }
    for ng in groups() {
        for h in ng.group.normal_subgroups() {
            assert_eq!(ng.group.order() % h.len(), 0, "{}", ng.name);
        }
    }
}

#[test]
fn normal_subgroups_are_all_normal_subgroups() {
    for ng in groups().iter().filter(|g| g.group.order() <= 12) {
        let g = &ng.group;
        let mut expected: Vec<Vec<usize>> = small_generated(ng)
            .into_iter()
            .filter(|s| {
                s.iter()
                    .all(|&h| (0..g.order()).all(|x| s.contains(&g.mul(g.mul(g.inv(x), h), x))))
            })
            .collect();
        // every subgroup of a group of order at most 12 is three-generated
        expected.sort();
        let mut found: Vec<Vec<usize>> = g
            .normal_subgroups()
            .iter()
            .map(|h| h.elements().to_vec())
            .collect();
        found.sort();
        assert_eq!(found, expected, "{}", ng.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn quotient_order_times_kernel_is_group_order(gi in 0..groups().len(), pick in any::<prop::sample::Index>()) {
        let g = &groups()[gi].group;
        let normals = g.normal_subgroups();
        let h = &normals[pick.index(normals.len())];
        let q = g.quotient(h).unwrap();
        prop_assert_eq!(q.order() * h.len(), g.order());
        prop_assert_eq!(q.is_abelian(), {
            let comm: Vec<usize> = (0..g.order())
                .flat_map(|a| (0..g.order()).map(move |b| (a, b)))
                .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
                .collect();
            comm.iter().all(|&c| h.contains(c))
        });
    }

    #[test]
    fn intersection_of_normal_subgroups_is_normal(gi in 0..groups().len(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let g = &groups()[gi].group;
        let normals = g.normal_subgroups();
        let (h, k) = (&normals[a.index(normals.len())], &normals[b.index(normals.len())]);
        let both = h.intersection(k);
        prop_assert!(both.is_normal());
        prop_assert!(g.is_normal_set(both.elements()));
        prop_assert!(normals.iter().any(|n| n.elements() == both.elements()));
    }
}
