//! Planarity by path addition (Demoucron, Malgrange, Pertuiset) on each
//! biconnected block, plus Kuratowski subgraph extraction.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::scheme::{edge_index, EmbeddingScheme};
use crate::bits::BitSet;
use crate::graph::{find_subgraph, SimpleGraph};

/// Some cycle of a graph in which every vertex has degree at least two.
fn find_cycle(n: usize, adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let root = (0..n).find(|&v| !adj[v].is_empty())?;
    depth[root] = 0;
    let mut stack = vec![(root, 0usize)];
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i == adj[u].len() {
            stack.pop();
            continue;
        }
        let w = adj[u][*i];
        *i += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cyc = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cyc.push(x);
            }
            cyc.reverse();
            return Some(cyc);
        }
    }
    None
}

/// Faces, as consistently oriented vertex cycles, of a plane embedding of a
/// biconnected simple graph with at least three vertices.
pub(crate) fn dmp_faces(n: usize, adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let cycle = find_cycle(n, adj)?;
    let mut in_h = vec![false; n];
    let mut emb: Vec<BitSet> = vec![BitSet::new(n); n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        emb[a].insert(b);
        emb[b].insert(a);
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    let mut comp = vec![usize::MAX; n];
    loop {
        // fragments: (contacts, path between two contacts)
        let mut frags: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for u in 0..n {
            if !in_h[u] {
                continue;
            }
            for &v in &adj[u] {
                if v > u && in_h[v] && !emb[u].contains(v) {
                    frags.push((vec![u, v], vec![u, v]));
                }
            }
        }
        comp.fill(usize::MAX);
        for s in 0..n {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = s;
            comp[s] = id;
            let mut members = vec![s];
            let mut head = 0;
            let mut contacts = Vec::new();
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in &adj[u] {
                    if in_h[w] {
                        contacts.push(w);
                    } else if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            contacts.sort_unstable();
            contacts.dedup();
            if contacts.len() < 2 {
                return None; // not biconnected
            }
            // path from contacts[0] through the component to another contact
            let a = contacts[0];
            let mut from = vec![usize::MAX; n];
            let mut q = VecDeque::new();
            for &w in &adj[a] {
                if !in_h[w] && comp[w] == id && from[w] == usize::MAX {
                    from[w] = a;
                    q.push_back(w);
                }
            }
            let mut path = None;
            'bfs: while let Some(u) = q.pop_front() {
                for &w in &adj[u] {
                    if in_h[w] && w != a {
                        let mut p = vec![w, u];
                        let mut x = u;
                        while from[x] != a {
                            x = from[x];
                            p.push(x);
                        }
                        p.push(a);
                        p.reverse();
                        path = Some(p);
                        break 'bfs;
                    }
                    if !in_h[w] && from[w] == usize::MAX {
                        from[w] = u;
                        q.push_back(w);
                    }
                }
            }
            frags.push((contacts, path?));
        }
        if frags.is_empty() {
            return Some(faces);
        }
        let fsets: Vec<BitSet> = faces.iter().map(|f| BitSet::from_iter(n, f.iter().copied())).collect();
        let mut choice = None;
        for (i, (contacts, _)) in frags.iter().enumerate() {
            let mut adm = (0..faces.len()).filter(|&f| contacts.iter().all(|&c| fsets[f].contains(c)));
            // a fragment fitting no face means the block is nonplanar
            let first = adm.next()?;
            let single = adm.next().is_none();
            if choice.is_none() || single {
                choice = Some((i, first));
            }
            if single {
                break;
            }
        }
        let (fi, f) = choice.unwrap();
        let path = &frags[fi].1;
        for w in path.windows(2) {
            emb[w[0]].insert(w[1]);
            emb[w[1]].insert(w[0]);
        }
        for &x in path {
            in_h[x] = true;
        }
        let face = faces.swap_remove(f);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let interior = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut k = i;
        loop {
            f1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut k = j;
        loop {
            f2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
}

/// Cyclic neighbour order at each vertex from consistently oriented faces.
pub(crate) fn rotation_from_faces(n: usize, adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut next: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in faces {
        let l = f.len();
        for i in 0..l {
            let (p, v, w) = (f[(i + l - 1) % l], f[i], f[(i + 1) % l]);
            next[v].push((p, w));
        }
    }
    (0..n)
        .map(|v| {
            if adj[v].is_empty() {
                return Vec::new();
            }
            let start = adj[v][0];
            let mut out = vec![start];
            let mut x = start;
            loop {
                x = next[v].iter().find(|&&(p, _)| p == x).map(|&(_, w)| w).unwrap();
                if x == start {
                    break;
                }
                out.push(x);
            }
            out
        })
        .collect()
}

/// Rotation (as neighbour lists in global vertex ids) of a plane embedding
/// of one block, or `None` if the block is not planar.
pub(crate) fn block_rotation(block: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |x: usize| verts.binary_search(&x).unwrap();
    let k = verts.len();
    if block.len() == 1 {
        let (u, v) = block[0];
        return Some(vec![(u, vec![v]), (v, vec![u])]);
    }
    if block.len() + 6 > 3 * k {
        return None;
    }
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in block {
        adj[local(u)].push(local(v));
        adj[local(v)].push(local(u));
    }
    let faces = dmp_faces(k, &adj)?;
    let rot = rotation_from_faces(k, &adj, &faces);
    Some(rot.into_iter().enumerate().map(|(i, r)| (verts[i], r.into_iter().map(|x| verts[x]).collect())).collect())
}

/// A plane embedding of `g` (all signs positive), if one exists.
pub fn planar_embedding(g: &SimpleGraph) -> Option<EmbeddingScheme> {
    let edges = g.edges();
    let mut rotation = vec![Vec::new(); g.n()];
    for block in g.blocks() {
        for (v, nbrs) in block_rotation(&block)? {
            rotation[v].extend(nbrs.iter().map(|&w| edge_index(&edges, v, w).unwrap()));
        }
    }
    Some(EmbeddingScheme::orientable(rotation, edges.len()))
}

pub fn is_planar(g: &SimpleGraph) -> bool {
    if g.n() >= 3 && g.edge_count() + 6 > 3 * g.n() {
        return false;
    }
    g.blocks().iter().all(|b| block_rotation(b).is_some())
}

/// A subdivision of `K5` or `K3,3` inside a nonplanar graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KuratowskiWitness {
    /// `"K5"` or `"K3,3"`.
    pub kind: &'static str,
    /// Vertices of degree at least three in the witness.
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// Finds a Kuratowski subgraph: first as a plain `K5` / `K3,3` subgraph,
/// otherwise by deleting edges from a nonplanar block for as long as it
/// stays nonplanar.
pub fn kuratowski_witness(g: &SimpleGraph) -> Option<KuratowskiWitness> {
    if is_planar(g) {
        return None;
    }
    for (kind, pat) in [("K5", SimpleGraph::complete(5)), ("K3,3", SimpleGraph::complete_bipartite(3, 3))] {
        if let Ok(Some(w)) = find_subgraph(g, &pat, 200_000) {
            let mut edges: Vec<(usize, usize)> =
                pat.edges().iter().map(|&(a, b)| (w[a].min(w[b]), w[a].max(w[b]))).collect();
            edges.sort_unstable();
            let mut branch = w.clone();
            branch.sort_unstable();
            return Some(KuratowskiWitness { kind, branch_vertices: branch, edges });
        }
    }
    let block = g.blocks().into_iter().find(|b| block_rotation(b).is_none())?;
    let mut h = SimpleGraph::from_edges(g.n(), &block);
    for (u, v) in block {
        h.remove_edge(u, v);
        if is_planar(&h) {
            h.add_edge(u, v);
        }
    }
    let edges = h.edges();
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 { "K5" } else { "K3,3" };
    Some(KuratowskiWitness { kind, branch_vertices: branch, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::trace_faces;

    #[test]
    fn planar_graphs_get_genus_zero_schemes() {
        let cube = SimpleGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        );
        for g in [SimpleGraph::complete(4), cube, SimpleGraph::complete_bipartite(2, 5), SimpleGraph::path(3)] {
            let s = planar_embedding(&g).unwrap();
            let t = trace_faces(&g, &s).unwrap();
            assert_eq!(t.euler_genus, 0, "{g:?}");
        }
    }

    #[test]
    fn nonplanar_detection() {
        assert!(!is_planar(&SimpleGraph::complete(5)));
        assert!(!is_planar(&SimpleGraph::complete_bipartite(3, 3)));
        // Petersen graph
        let p = SimpleGraph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert!(!is_planar(&p));
        let w = kuratowski_witness(&p).unwrap();
        let h = SimpleGraph::from_edges(10, &w.edges);
        assert!(!is_planar(&h));
        for &(u, v) in &w.edges {
            let mut h2 = h.clone();
            h2.remove_edge(u, v);
            assert!(is_planar(&h2));
        }
    }
}
