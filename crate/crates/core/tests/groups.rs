use proptest::prelude::*;
use sgi_core::algebra::{build_family, verify_group_axioms};
use sgi_core::classify::catalog;
use sgi_core::lattice::{enumerate_subgroups, sylow_count};
use sgi_core::{FamilySpec, FiniteGroup};

fn build(s: &str) -> FiniteGroup {
    build_family(&s.parse::<FamilySpec>().unwrap(), 512).unwrap()
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn has_element_of_order(g: &FiniteGroup, k: usize) -> bool {
    g.element_orders().contains(&k)
}

#[test]
fn catalog_groups_satisfy_axioms_and_lagrange() {
    for spec in catalog(128) {
        let g = build_family(&spec, 512).unwrap();
        assert_eq!(verify_group_axioms(&g), Ok(()), "{spec}");
        for h in enumerate_subgroups(&g).subgroups() {
            assert_eq!(g.order() % h.order(), 0, "{spec}");
        }
    }
}

#[test]
fn p_group_counts_are_one_mod_p() {
    let mut seen = 0;
    for spec in catalog(256) {
        let g = build_family(&spec, 512).unwrap();
        let f = prime_factors(g.order());
        let [(p, n)] = f[..] else { continue };
        seen += 1;
        let lat = enumerate_subgroups(&g);
        for s in 1..=n {
            assert_eq!(lat.count_of_order(p.pow(s)) % p, 1, "{spec}: order {}", p.pow(s));
        }
        if lat.count_of_order(p) == 1 {
            // cyclic, or a generalised quaternion group: nonabelian 2-group
            // with a cyclic subgroup of index 2 and a single involution
            let cyclic = has_element_of_order(&g, g.order());
            let quaternion = p == 2 && !g.is_abelian() && has_element_of_order(&g, g.order() / 2);
            assert!(cyclic || quaternion, "{spec} has a unique subgroup of order {p}");
        }
    }
    assert!(seen >= 30, "only {seen} p-groups");
}

#[test]
fn sylow_counts_are_one_mod_p() {
    for spec in catalog(200) {
        let g = build_family(&spec, 512).unwrap();
        let lat = enumerate_subgroups(&g);
        for (p, k) in prime_factors(g.order()) {
            let n = sylow_count(&lat, p as u64).unwrap();
            assert_eq!(n % p, 1, "{spec}: n_{p} = {n}");
            assert_eq!(n, lat.count_of_order(p.pow(k)));
            assert_eq!(g.order() % n, 0);
        }
    }
}

#[test]
fn matrix_action_has_elementary_abelian_base() {
    for (s, p) in [("mat:p=3,m=4", 3), ("mat:p=5,m=6", 5), ("mat:p=3,m=3", 3), ("mat:p=7,m=4", 7), ("mat:p=5,m=5", 5)] {
        let g = build(s);
        let lat = enumerate_subgroups(&g);
        let base = (0..lat.len()).find(|&i| {
            let h = &lat.subgroups()[i];
            lat.is_normal(i) && h.order() == p * p && h.elements().iter().all(|&x| x == 0 || g.element_order(x) == p)
        });
        assert!(base.is_some(), "{s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cyclic_abelian_dihedral_not(n in 3usize..60) {
        let c = build(&format!("cyclic:{n}"));
        prop_assert!(c.is_abelian());
        prop_assert!(has_element_of_order(&c, n));
        let d = build(&format!("dihedral:{}", 2 * n));
        prop_assert!(!d.is_abelian());
        prop_assert_eq!(verify_group_axioms(&d), Ok(()));
    }

    #[test]
    fn untwisted_semidirect_is_cyclic(qi in 0usize..6, pi in 0usize..3, a in 1u32..3) {
        let (q, p) = ([3usize, 5, 7, 11, 13, 17][qi], [2usize, 3, 5][pi]);
        prop_assume!(p != q);
        let g = build(&format!("sd:q={q},p={p},a={a},t=0"));
        prop_assert_eq!(g.order(), q * p.pow(a));
        prop_assert!(has_element_of_order(&g, g.order()));
    }

    /// Relabelling the elements does not change the lattice.
    #[test]
    fn enumeration_ignores_labels(idx in 0usize..40, seed in any::<u64>()) {
        let specs = catalog(48);
        let g = build_family(&specs[idx % specs.len()], 512).unwrap();
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (2..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let j = 1 + (state as usize) % i;
            perm.swap(i, j);
        }
        let mut inv = vec![0; n];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as u16;
            }
        }
        let h = FiniteGroup::from_table_checked(n, table, g.family().clone(), g.name().into()).unwrap();
        let mut left: Vec<Vec<usize>> = enumerate_subgroups(&g).subgroups().iter().map(|s| s.elements().to_vec()).collect();
        let mut right: Vec<Vec<usize>> = enumerate_subgroups(&h)
            .subgroups()
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.elements().iter().map(|&x| inv[x]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        left.sort();
        right.sort();
        prop_assert_eq!(left, right);
    }
}
