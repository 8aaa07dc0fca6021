//! Genus-preserving reductions: delete pendant and isolated vertices,
//! suppress degree-two vertices and merge the parallel edges this creates.
//! Each step is recorded so that an embedding of the reduced core can be
//! lifted back.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
enum Op {
    Isolated(usize),
    Pendant { v: usize, e: usize, w: usize },
    Suppress { v: usize, e1: usize, e2: usize, merged: usize },
    Parallel { keep: usize, drop: usize },
}

#[derive(Clone, Debug)]
pub(crate) struct Reduction {
    /// Endpoints of every edge id; ids below the input length are the input
    /// edges, later ones were created by suppression.
    ends: Vec<(usize, usize)>,
    input: usize,
    ops: Vec<Op>,
    /// Remaining vertices (sorted) and edges `(u, v, id)` with `u < v`,
    /// sorted.
    pub core_vertices: Vec<usize>,
    pub core_edges: Vec<(usize, usize, usize)>,
}

pub(crate) fn reduce(edges: &[(usize, usize)]) -> Reduction {
    let mut ends: Vec<(usize, usize)> = edges.to_vec();
    let mut adj: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj.entry(u).or_default().insert(v, id);
        adj.entry(v).or_default().insert(u, id);
    }
    let mut ops = Vec::new();
    let mut queue: Vec<usize> = adj.keys().rev().copied().collect();
    while let Some(v) = queue.pop() {
        let Some(nb) = adj.get(&v) else { continue };
        match nb.len() {
            0 => {
                adj.remove(&v);
                ops.push(Op::Isolated(v));
            }
            1 => {
                let (&w, &e) = nb.iter().next().unwrap();
                adj.remove(&v);
                adj.get_mut(&w).unwrap().remove(&v);
                ops.push(Op::Pendant { v, e, w });
                queue.push(w);
            }
            2 => {
                let mut it = nb.iter();
                let (&u, &e1) = it.next().unwrap();
                let (&w, &e2) = it.next().unwrap();
                adj.remove(&v);
                let merged = ends.len();
                ends.push((u, w));
                ops.push(Op::Suppress { v, e1, e2, merged });
                adj.get_mut(&u).unwrap().remove(&v);
                adj.get_mut(&w).unwrap().remove(&v);
                if let Some(&keep) = adj[&u].get(&w) {
                    ops.push(Op::Parallel { keep, drop: merged });
                    queue.push(u);
                    queue.push(w);
                } else {
                    adj.get_mut(&u).unwrap().insert(w, merged);
                    adj.get_mut(&w).unwrap().insert(u, merged);
                }
            }
            _ => {}
        }
    }
    let core_vertices: Vec<usize> = adj.keys().copied().collect();
    let mut core_edges = Vec::new();
    for (&u, nb) in &adj {
        for (&w, &e) in nb {
            if u < w {
                core_edges.push((u, w, e));
            }
        }
    }
    core_edges.sort_unstable();
    Reduction { ends, input: edges.len(), ops, core_vertices, core_edges }
}

impl Reduction {
    /// Lifts a scheme of the core to the input graph.
    ///
    /// `rotation[v]` (indexed by vertex, `n` entries) lists edge ids around
    /// `v`; `signs` is indexed by edge id and must cover the core edges. The
    /// result uses only input edge ids.
    pub(crate) fn lift(
        &self,
        n: usize,
        core_rotation: &[(usize, Vec<usize>)],
        core_signs: &[(usize, i8)],
    ) -> (Vec<Vec<usize>>, Vec<i8>) {
        let mut rot = vec![Vec::new(); n];
        for (v, r) in core_rotation {
            rot[*v] = r.clone();
        }
        let mut sign = vec![1i8; self.ends.len()];
        for &(e, s) in core_signs {
            sign[e] = s;
        }
        let other = |e: usize, v: usize| {
            let (a, b) = self.ends[e];
            if a == v {
                b
            } else {
                a
            }
        };
        for op in self.ops.iter().rev() {
            match *op {
                Op::Isolated(v) => rot[v].clear(),
                Op::Pendant { v, e, w } => {
                    rot[w].push(e);
                    rot[v] = vec![e];
                    sign[e] = 1;
                }
                Op::Suppress { v, e1, e2, merged } => {
                    let u = other(e1, v);
                    let w = other(e2, v);
                    for (x, e) in [(u, e1), (w, e2)] {
                        let i = rot[x].iter().position(|&f| f == merged).unwrap();
                        rot[x][i] = e;
                    }
                    rot[v] = vec![e1, e2];
                    sign[e1] = sign[merged];
                    sign[e2] = 1;
                }
                Op::Parallel { keep, drop } => {
                    let (u, w) = self.ends[keep];
                    let i = rot[u].iter().position(|&f| f == keep).unwrap();
                    rot[u].insert(i + 1, drop);
                    let j = rot[w].iter().position(|&f| f == keep).unwrap();
                    if sign[keep] == 1 {
                        rot[w].insert(j, drop);
                    } else {
                        rot[w].insert(j + 1, drop);
                    }
                    sign[drop] = sign[keep];
                }
            }
        }
        sign.truncate(self.input);
        (rot, sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::scheme::{trace_edge_list, EmbeddingScheme};

    #[test]
    fn subdivided_k4_with_tail_reduces_to_k4() {
        // K4 on 0..4 with edge 0-1 subdivided by 4 and a pendant path 3-5-6
        let edges = [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 5), (5, 6)];
        let r = reduce(&edges);
        assert_eq!(r.core_vertices, vec![0, 1, 2, 3]);
        assert_eq!(r.core_edges.len(), 6);
    }

    #[test]
    fn cycles_vanish() {
        let r = reduce(&[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(r.core_vertices.is_empty());
        let (rot, sign) = r.lift(4, &[], &[]);
        let s = EmbeddingScheme { rotation: rot, signs: sign };
        let t = trace_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &s).unwrap();
        assert_eq!(t.euler_genus, 0);
    }
}
