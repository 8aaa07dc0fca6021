use proptest::prelude::*;
use sgi::formats::{export_graph, parse_adjacency, parse_scheme, scheme_to_text, to_adjacency, GraphFormat};
use sgi_core::algebra::build_family;
use sgi_core::classify::intersection_graph;
use sgi_core::embed::{orientable_genus, GenusOptions};
use sgi_core::lattice::enumerate_subgroups;
use sgi_core::SimpleGraph;

fn graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let mut g = SimpleGraph::new(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

#[test]
fn quaternion_graph_file() {
    let g = build_family(&"genq:8".parse().unwrap(), 64).unwrap();
    let text = export_graph(&intersection_graph(&enumerate_subgroups(&g)), GraphFormat::Adjacency);
    assert!(text.starts_with("4 6\n"));
    assert_eq!(text.lines().count(), 7);
    assert_eq!(export_graph(&SimpleGraph::complete(3), GraphFormat::Adjacency), "3 3\n0 1\n0 2\n1 2\n");
    assert_eq!(export_graph(&SimpleGraph::new(2), GraphFormat::Adjacency), "2 0\n");
    assert!("svg".parse::<GraphFormat>().is_err());
}

proptest! {
    #[test]
    fn adjacency_round_trip(g in graph()) {
        let text = to_adjacency(&g);
        let back = parse_adjacency(&text).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(to_adjacency(&back), text);
    }

    #[test]
    fn scheme_round_trip(g in graph()) {
        let r = orientable_genus(&g, GenusOptions::default()).unwrap();
        let s = r.scheme.unwrap();
        prop_assert_eq!(parse_scheme(&scheme_to_text(&s), g.n()).unwrap(), s);
    }
}
