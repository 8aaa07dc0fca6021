use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{SimpleGraph, SubgroupLattice};

/// Intersection graph of the proper nontrivial subgroups, in lattice
/// order. Vertex labels read `order:<generators>`.
pub fn intersection_graph(lat: &SubgroupLattice) -> SimpleGraph {
    let idx = lat.proper_nontrivial();
    let subs = lat.subgroups();
    let mut g = SimpleGraph::new(idx.len());
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate().skip(a + 1) {
            if subs[i].meet_order(&subs[j]) > 1 {
                g.add_edge(a, b);
            }
        }
    }
    let labels = idx
        .iter()
        .map(|&i| {
            let gens: Vec<String> = lat.generators(i).iter().map(|x| format!("{x}")).collect();
            format!("{}:<{}>", subs[i].order(), gens.join(","))
        })
        .collect();
    g.set_labels(labels);
    g
}
