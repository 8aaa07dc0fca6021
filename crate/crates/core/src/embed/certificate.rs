//! Quick sufficient conditions for a graph not to embed in the torus or in
//! the projective plane. A certificate is a proof; its absence says nothing.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::genus::block_euler_bounds;
use super::planar::{is_planar, kuratowski_witness, KuratowskiWitness};
use crate::graph::{find_subgraph, for_each_subgraph};
use crate::SimpleGraph;

/// Node budget for each subgraph search made by the certificate finders.
pub const CERTIFICATE_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Certificate {
    /// A copy of the named graph; `vertices[i]` hosts pattern vertex `i`.
    Subgraph { pattern: String, vertices: Vec<usize> },
    /// A clique or biclique copy and a Kuratowski subgraph avoiding it.
    DisjointNonplanar { first: Vec<usize>, first_pattern: String, second: KuratowskiWitness },
    /// Euler genus lower bounds of the blocks, summing past the surface.
    Euler { block_bounds: Vec<usize> },
}

impl Certificate {
    pub fn describe(&self) -> String {
        match self {
            Certificate::Subgraph { pattern, .. } => alloc::format!("{pattern} subgraph"),
            Certificate::DisjointNonplanar { first_pattern, second, .. } => {
                alloc::format!("disjoint {first_pattern} and {} subdivision", second.kind)
            }
            Certificate::Euler { block_bounds } => alloc::format!("Euler bound {block_bounds:?}"),
        }
    }
}

fn named(g: &SimpleGraph, name: &str, pattern: &SimpleGraph) -> Option<Certificate> {
    let w = find_subgraph(g, pattern, CERTIFICATE_BUDGET).ok()??;
    Some(Certificate::Subgraph { pattern: name.into(), vertices: w })
}

/// A `K5` or `K3,3` copy whose removal leaves a nonplanar graph.
fn disjoint_nonplanar(g: &SimpleGraph) -> Option<Certificate> {
    if is_planar(g) {
        return None;
    }
    for (name, pattern) in [("K5", SimpleGraph::complete(5)), ("K3,3", SimpleGraph::complete_bipartite(3, 3))] {
        let mut tried = BTreeSet::new();
        let mut hit = None;
        let _ = for_each_subgraph(g, &pattern, CERTIFICATE_BUDGET, &mut |w| {
            let mut set = w.to_vec();
            set.sort_unstable();
            if !tried.insert(set.clone()) {
                return false;
            }
            let rest: Vec<usize> = (0..g.n()).filter(|v| set.binary_search(v).is_err()).collect();
            let h = g.induced(&rest);
            match kuratowski_witness(&h) {
                Some(mut k) => {
                    for v in k.branch_vertices.iter_mut() {
                        *v = rest[*v];
                    }
                    for e in k.edges.iter_mut() {
                        *e = (rest[e.0], rest[e.1]);
                    }
                    hit = Some((w.to_vec(), k));
                    true
                }
                None => false,
            }
        });
        if let Some((first, second)) = hit {
            return Some(Certificate::DisjointNonplanar { first, first_pattern: name.into(), second });
        }
    }
    None
}

/// `m` copies of `K5` sharing one edge: `K2` joined with `m` triangles.
///
/// Three copies do not embed in the torus. Every copy is nonplanar, so it
/// sits cellularly on the torus with five faces, and each end of the
/// shared edge has four corners there. A triangle joined to both ends fits
/// in a disc face only if the face boundary meets the ends alternately
/// twice each. Two more copies therefore need two such faces, or one face
/// with at least three corners at each end. Either way at most two corners
/// at the ends are left for the other faces, yet at most one face avoids
/// both ends (the triangle bounds a face on one side only).
///
/// Two copies do not embed in the projective plane; the exhaustive search
/// confirms this in the tests.
pub fn k5_fan(m: usize) -> SimpleGraph {
    let mut triangles = SimpleGraph::new(0);
    for _ in 0..m {
        triangles = triangles.disjoint_union(&SimpleGraph::complete(3));
    }
    SimpleGraph::complete(2).join(&triangles)
}

/// Proof that the orientable genus of `g` is at least 2.
pub fn nontoroidality_certificate(g: &SimpleGraph) -> Option<Certificate> {
    named(g, "K8", &SimpleGraph::complete(8))
        .or_else(|| named(g, "K4,5", &SimpleGraph::complete_bipartite(4, 5)))
        .or_else(|| named(g, "K3,7", &SimpleGraph::complete_bipartite(3, 7)))
        .or_else(|| named(g, "three K5 on one edge", &k5_fan(3)))
        .or_else(|| {
            let bounds = block_euler_bounds(g);
            (bounds.iter().map(|b| b.div_ceil(2)).sum::<usize>() >= 2)
                .then_some(Certificate::Euler { block_bounds: bounds })
        })
        .or_else(|| disjoint_nonplanar(g))
}

/// Proof that the nonorientable genus of `g` is at least 2.
pub fn nonprojectivity_certificate(g: &SimpleGraph) -> Option<Certificate> {
    named(g, "K7", &SimpleGraph::complete(7))
        .or_else(|| named(g, "K3,5", &SimpleGraph::complete_bipartite(3, 5)))
        .or_else(|| named(g, "K4,4", &SimpleGraph::complete_bipartite(4, 4)))
        .or_else(|| named(g, "two K5 on one edge", &k5_fan(2)))
        .or_else(|| {
            let bounds = block_euler_bounds(g);
            (bounds.iter().sum::<usize>() >= 2).then_some(Certificate::Euler { block_bounds: bounds })
        })
        .or_else(|| disjoint_nonplanar(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert!(matches!(nontoroidality_certificate(&SimpleGraph::complete(8)), Some(Certificate::Subgraph { .. })));
        let mut two_k7 = SimpleGraph::complete(7).disjoint_union(&SimpleGraph::complete(6));
        for v in 7..13 {
            two_k7.add_edge(0, v);
        }
        assert!(matches!(nontoroidality_certificate(&two_k7), Some(Certificate::Euler { .. })));
        assert!(nontoroidality_certificate(&SimpleGraph::complete(7)).is_none());
        assert!(nonprojectivity_certificate(&SimpleGraph::complete(6)).is_none());
        assert!(nonprojectivity_certificate(&SimpleGraph::complete(7)).is_some());
    }

    #[test]
    fn k5_fans() {
        use crate::embed::{nonorientable_genus, orientable_genus, GenusOptions};
        let two = k5_fan(2);
        assert_eq!((two.n(), two.edge_count()), (8, 19));
        assert_eq!(orientable_genus(&two, GenusOptions::default()).unwrap().exact(), Some(1));
        assert_eq!(nonorientable_genus(&two, GenusOptions::default()).unwrap().exact(), Some(2));
        assert!(nonprojectivity_certificate(&two).is_some());
        assert!(nontoroidality_certificate(&two).is_none());
        assert_eq!(k5_fan(3).edge_count(), 28);
        assert!(matches!(nontoroidality_certificate(&k5_fan(3)), Some(Certificate::Subgraph { .. })));
    }

    #[test]
    fn two_disjoint_k5() {
        let g = SimpleGraph::complete(5).disjoint_union(&SimpleGraph::complete(5));
        let c = nontoroidality_certificate(&g).unwrap();
        assert!(matches!(c, Certificate::Euler { .. }));
        // glue the copies by an edge so the bound sees one block per copy
        let mut h = SimpleGraph::complete(5).disjoint_union(&SimpleGraph::complete_bipartite(3, 3));
        h.add_edge(0, 5);
        assert!(nonprojectivity_certificate(&h).is_some());
    }
}
