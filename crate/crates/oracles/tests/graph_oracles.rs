use proptest::prelude::*;
use sgi_core::graph::{
    clique_cover_number, eval_expr, girth, has_subgraph, independence_number, is_isomorphic, structural_predicates,
    GraphExpr,
};
use sgi_core::SimpleGraph;
use sgi_oracles::{iso_by_permutations, permutations};

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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

fn relabel(g: &SimpleGraph, p: &[usize]) -> SimpleGraph {
    let mut h = SimpleGraph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(p[u], p[v]);
    }
    h
}

/// Shortest cycle by trying every edge as the closing edge of a BFS path.
fn girth_oracle(g: &SimpleGraph) -> Option<usize> {
    let mut best = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if (x, y) == (u, v) || (x, y) == (v, u) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            let c = dist[v] + 1;
            best = Some(best.map_or(c, |b: usize| b.min(c)));
        }
    }
    best
}

fn max_independent_oracle(g: &SimpleGraph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| g.edges().iter().all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

#[test]
fn isomorphism_matches_permutation_oracle_on_all_small_graphs() {
    // every graph on 5 vertices against every other
    let all: Vec<SimpleGraph> = (0u32..1 << 10)
        .map(|bits| {
            let mut g = SimpleGraph::new(5);
            let mut k = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if bits >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
        .collect();
    let mut classes: Vec<SimpleGraph> = Vec::new();
    for g in &all {
        if !classes.iter().any(|c| is_isomorphic(c, g)) {
            classes.push(g.clone());
        }
    }
    assert_eq!(classes.len(), 34);
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            assert!(!iso_by_permutations(a, b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn isomorphism_agrees_with_oracle(a in graph(7), b in graph(7), seed in any::<u64>()) {
        prop_assert_eq!(is_isomorphic(&a, &b), iso_by_permutations(&a, &b));
        let perms = permutations(a.n());
        let p = &perms[(seed % perms.len() as u64) as usize];
        prop_assert!(is_isomorphic(&a, &relabel(&a, p)));
    }

    #[test]
    fn girth_and_acyclicity(g in graph(9)) {
        let gi = girth(&g);
        prop_assert_eq!(gi, girth_oracle(&g));
        prop_assert_eq!(gi.is_none(), structural_predicates(&g).acyclic);
    }

    #[test]
    fn independence_below_cover(g in graph(9)) {
        let alpha = independence_number(&g, 1_000_000).unwrap().value;
        let cover = clique_cover_number(&g, 1_000_000).unwrap();
        prop_assert_eq!(alpha, max_independent_oracle(&g));
        prop_assert!(alpha <= cover.value);
        prop_assert_eq!(cover.witness.len(), cover.value);
        let mut covered: Vec<usize> = cover.witness.concat();
        covered.sort_unstable();
        prop_assert_eq!(covered, (0..g.n()).collect::<Vec<_>>());
        for c in &cover.witness {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn subgraph_reflexive_and_monotone(g in graph(7), u in 0usize..7, v in 0usize..7) {
        prop_assert!(has_subgraph(&g, &g).unwrap().0);
        let mut h = g.clone();
        if u < h.n() && v < h.n() && u != v {
            h.add_edge(u, v);
        }
        prop_assert!(has_subgraph(&h, &g).unwrap().0);
    }

    #[test]
    fn double_complement_and_bicliques(m in 1usize..6, n in 1usize..6) {
        let e = GraphExpr::union(GraphExpr::K(m), GraphExpr::Kbar(n));
        let twice = GraphExpr::complement(GraphExpr::complement(e.clone()));
        prop_assert!(is_isomorphic(&eval_expr(&twice).unwrap(), &eval_expr(&e).unwrap()));
        let join = GraphExpr::join(GraphExpr::Kbar(m), GraphExpr::Kbar(n));
        prop_assert!(is_isomorphic(&eval_expr(&join).unwrap(), &SimpleGraph::complete_bipartite(m, n)));
    }
}
