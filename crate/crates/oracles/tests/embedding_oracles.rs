use proptest::prelude::*;
use sgi_core::embed::{
    closed_form_genus, is_planar, nonorientable_genus, nonprojectivity_certificate, nontoroidality_certificate,
    orientable_genus, ClosedForm, GenusOptions,
};
use sgi_core::SimpleGraph;
use sgi_oracles::{brute_force_genus as brute_force, realises};

fn exact() -> GenusOptions {
    GenusOptions::default()
}

#[test]
fn closed_forms_for_complete_graphs() {
    for n in 3..=8 {
        let g = SimpleGraph::complete(n);
        let r = orientable_genus(&g, exact()).unwrap();
        assert_eq!(r.exact(), Some(closed_form_genus(ClosedForm::CompleteGenus(n)).unwrap()), "K{n}");
        assert!(realises(&g, &r, true), "K{n}");
    }
    for (n, want) in [(3, 0), (4, 0), (5, 1), (6, 1), (7, 3)] {
        let g = SimpleGraph::complete(n);
        let r = nonorientable_genus(&g, exact()).unwrap();
        assert_eq!(r.exact(), Some(want), "K{n}");
        assert_eq!(closed_form_genus(ClosedForm::CompleteCrosscap(n)).unwrap(), want);
        assert!(realises(&g, &r, false), "K{n}");
    }
}

#[test]
fn closed_forms_for_bicliques() {
    for (m, n) in [(2, 2), (2, 4), (3, 3), (3, 4), (4, 4), (3, 5), (3, 6)] {
        let g = SimpleGraph::complete_bipartite(m, n);
        let r = orientable_genus(&g, exact()).unwrap();
        assert_eq!(r.exact(), Some(closed_form_genus(ClosedForm::BipartiteGenus(m, n)).unwrap()), "K{m},{n}");
        assert!(realises(&g, &r, true));
    }
    for (m, n, want) in [(2, 4, 0), (3, 3, 1), (3, 4, 1), (4, 4, 2), (3, 5, 2)] {
        let g = SimpleGraph::complete_bipartite(m, n);
        let r = nonorientable_genus(&g, exact()).unwrap();
        assert_eq!(r.exact(), Some(want), "K{m},{n}");
        assert_eq!(closed_form_genus(ClosedForm::BipartiteCrosscap(m, n)).unwrap(), want);
        assert!(realises(&g, &r, false));
    }
}

#[test]
fn brute_force_agrees_on_named_graphs() {
    let mut petersen = SimpleGraph::new(10);
    for i in 0..5 {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    for (name, g) in [
        ("K4", SimpleGraph::complete(4)),
        ("K5", SimpleGraph::complete(5)),
        ("K3,3", SimpleGraph::complete_bipartite(3, 3)),
        ("Petersen", petersen),
    ] {
        assert_eq!(orientable_genus(&g, exact()).unwrap().exact(), Some(brute_force(&g, false)), "{name}");
        let crosscap = if is_planar(&g) { 0 } else { brute_force(&g, true) };
        assert_eq!(nonorientable_genus(&g, exact()).unwrap().exact(), Some(crosscap), "{name}");
    }
}

fn sparse_graph() -> impl Strategy<Value = SimpleGraph> {
    (3usize..=6).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let mut g = SimpleGraph::new(n);
            for (u, v) in pairs {
                if u != v && g.degree(u) < 4 && g.degree(v) < 4 {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

fn dense_graph() -> impl Strategy<Value = SimpleGraph> {
    (5usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(prop::bool::weighted(0.7), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn genus_matches_exhaustive_rotations(g in sparse_graph()) {
        let r = orientable_genus(&g, exact()).unwrap();
        prop_assert_eq!(r.exact(), Some(brute_force(&g, false)));
        prop_assert!(realises(&g, &r, true));
        prop_assert_eq!(is_planar(&g), r.exact() == Some(0));
        let n = nonorientable_genus(&g, exact()).unwrap();
        prop_assert!(realises(&g, &n, false));
        if is_planar(&g) {
            prop_assert_eq!(n.exact(), Some(0));
        } else {
            prop_assert_eq!(n.exact(), Some(brute_force(&g, true)));
        }
    }

    #[test]
    fn schemes_retrace_and_certificates_hold(g in dense_graph()) {
        let r = orientable_genus(&g, exact()).unwrap();
        let n = nonorientable_genus(&g, exact()).unwrap();
        prop_assert!(realises(&g, &r, true));
        prop_assert!(realises(&g, &n, false));
        if nontoroidality_certificate(&g).is_some() {
            prop_assert!(r.lower() >= 2);
        }
        if nonprojectivity_certificate(&g).is_some() {
            prop_assert!(n.lower() >= 2);
        }
        // Euler characteristic never beats the orientable embedding by more than a crosscap
        prop_assert!(n.exact().unwrap() <= 2 * r.exact().unwrap() + 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn genus_adds_over_disjoint_unions(a in dense_graph(), b in dense_graph()) {
        let ga = orientable_genus(&a, exact()).unwrap().exact().unwrap();
        let gb = orientable_genus(&b, exact()).unwrap().exact().unwrap();
        let u = a.disjoint_union(&b);
        let r = orientable_genus(&u, exact()).unwrap();
        prop_assert_eq!(r.exact(), Some(ga + gb));
        prop_assert!(realises(&u, &r, true));
    }
}
