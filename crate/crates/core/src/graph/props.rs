use alloc::collections::VecDeque;
use alloc::vec;

use super::SimpleGraph;

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(u) = q.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Structural facts about a graph.
///
/// Stars, trees and complete bipartite graphs are connected with at least
/// one vertex, and `K1` counts as each of them. Paths need at least one
/// edge. "Unicyclic" means exactly one cycle in the whole graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub struct Predicates {
    pub bipartite: bool,
    pub complete_bipartite: bool,
    pub star: bool,
    pub tree: bool,
    pub acyclic: bool,
    pub unicyclic: bool,
    pub path: bool,
    pub cycle: bool,
    pub totally_disconnected: bool,
}

pub fn structural_predicates(g: &SimpleGraph) -> Predicates {
    let n = g.n();
    let m = g.edge_count();
    let comps = g.components().len();
    let connected = n >= 1 && comps == 1;
    // two-colouring
    let mut side = vec![u8::MAX; n];
    let mut bipartite = true;
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    q.push_back(v);
                } else if side[v] == side[u] {
                    bipartite = false;
                }
            }
        }
    }
    let left = side.iter().filter(|&&s| s == 0).count();
    let right = n - left;
    let complete_bipartite = connected && bipartite && (n == 1 || m == left * right);
    let acyclic = m + comps == n;
    let tree = connected && acyclic;
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    Predicates {
        bipartite,
        complete_bipartite,
        star: complete_bipartite && left.min(right) <= 1,
        tree,
        acyclic,
        unicyclic: m + comps == n + 1,
        path: tree && m >= 1 && max_deg <= 2,
        cycle: connected && n >= 3 && (0..n).all(|v| g.degree(v) == 2),
        totally_disconnected: m == 0,
    }
}
