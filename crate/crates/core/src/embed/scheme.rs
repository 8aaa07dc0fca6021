use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, SimpleGraph};

/// Rotation system with edge signature.
///
/// `rotation[v]` lists the ids of the edges at `v` in cyclic order, where
/// edge ids index the sorted edge list of the graph. `signs[e]` is `1` for
/// an untwisted edge and `-1` for a twisted one.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EmbeddingScheme {
    pub rotation: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
}

/// Faces of an embedding and the surface they determine.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FaceTrace {
    pub faces: usize,
    pub face_lengths: Vec<usize>,
    /// `2c - V + E - F` over `c` components, i.e. the Euler genus of the
    /// surface, summed over components.
    pub euler_genus: usize,
    pub orientable: bool,
}

impl EmbeddingScheme {
    /// Every edge untwisted.
    pub fn orientable(rotation: Vec<Vec<usize>>, edges: usize) -> Self {
        EmbeddingScheme { rotation, signs: vec![1; edges] }
    }
}

/// Face tracing on an explicit edge list. Dart `2e` sits at `edges[e].0`,
/// dart `2e + 1` at `edges[e].1`.
pub(crate) fn trace_edge_list(n: usize, edges: &[(usize, usize)], s: &EmbeddingScheme) -> Result<FaceTrace> {
    let m = edges.len();
    let bad = |msg: alloc::string::String| Err(Error::InvalidScheme(msg));
    if s.rotation.len() != n {
        return bad(alloc::format!("rotation has {} vertices, graph has {n}", s.rotation.len()));
    }
    if s.signs.len() != m {
        return bad(alloc::format!("signature has {} entries, graph has {m} edges", s.signs.len()));
    }
    if let Some(e) = s.signs.iter().position(|&x| x != 1 && x != -1) {
        return bad(alloc::format!("edge {e} has sign {}", s.signs[e]));
    }
    // succ[d] = next dart around the vertex of d
    let mut succ = vec![usize::MAX; 2 * m];
    let mut pred = vec![usize::MAX; 2 * m];
    let mut seen = vec![false; 2 * m];
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    for (v, rot) in s.rotation.iter().enumerate() {
        if rot.len() != deg[v] {
            return bad(alloc::format!("vertex {v} lists {} edges, degree is {}", rot.len(), deg[v]));
        }
        let mut darts = Vec::with_capacity(rot.len());
        for &e in rot {
            if e >= m {
                return bad(alloc::format!("vertex {v} lists unknown edge {e}"));
            }
            let d = if edges[e].0 == v {
                2 * e
            } else if edges[e].1 == v {
                2 * e + 1
            } else {
                return bad(alloc::format!("edge {e} is not incident to vertex {v}"));
            };
            if seen[d] {
                return bad(alloc::format!("edge {e} repeated at vertex {v}"));
            }
            seen[d] = true;
            darts.push(d);
        }
        for i in 0..darts.len() {
            let (a, b) = (darts[i], darts[(i + 1) % darts.len()]);
            succ[a] = b;
            pred[b] = a;
        }
    }
    // states (dart, flag); each face gives one cycle per flag class
    let mut visited = vec![false; 4 * m];
    let mut cycles = 0;
    let mut face_lengths = Vec::new();
    for start in 0..4 * m {
        if visited[start] {
            continue;
        }
        let mut st = start;
        let mut len = 0;
        while !visited[st] {
            visited[st] = true;
            len += 1;
            let (d, o) = (st / 2, st % 2);
            let o2 = o ^ usize::from(s.signs[d / 2] == -1);
            let arrive = d ^ 1;
            let next = if o2 == 0 { succ[arrive] } else { pred[arrive] };
            st = 2 * next + o2;
        }
        cycles += 1;
        face_lengths.push(len);
    }
    // components and orientability (switching potentials)
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut pot = vec![0i8; n];
    let mut comps = 0;
    let mut orientable = true;
    for r in 0..n {
        if pot[r] != 0 {
            continue;
        }
        comps += 1;
        pot[r] = 1;
        let mut stack = vec![r];
        while let Some(u) = stack.pop() {
            for &(v, e) in &adj[u] {
                let want = pot[u] * s.signs[e];
                if pot[v] == 0 {
                    pot[v] = want;
                    stack.push(v);
                } else if pot[v] != want {
                    orientable = false;
                }
            }
        }
    }
    let isolated = deg.iter().filter(|&&d| d == 0).count();
    face_lengths.sort_unstable();
    // each face appears as a pair of cycles with equal length
    let mut halved = Vec::with_capacity(face_lengths.len() / 2);
    for pair in face_lengths.chunks(2) {
        halved.push(pair[0]);
    }
    let faces = cycles / 2 + isolated;
    let euler = (2 * comps + m) as i64 - n as i64 - faces as i64;
    if euler < 0 {
        return bad("negative Euler genus".into());
    }
    Ok(FaceTrace { faces, face_lengths: halved, euler_genus: euler as usize, orientable })
}

/// Traces the faces of `s` on `g`.
pub fn trace_faces(g: &SimpleGraph, s: &EmbeddingScheme) -> Result<FaceTrace> {
    trace_edge_list(g.n(), &g.edges(), s)
}

/// Index of edge `(u, v)` in the sorted edge list.
pub fn edge_index(edges: &[(usize, usize)], u: usize, v: usize) -> Option<usize> {
    edges.binary_search(&(u.min(v), u.max(v))).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_planar_rotation() {
        // edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
        let g = SimpleGraph::complete(4);
        let s = EmbeddingScheme::orientable(vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]], 6);
        let t = trace_faces(&g, &s).unwrap();
        assert_eq!(t.faces, 4);
        assert_eq!(t.euler_genus, 0);
        assert!(t.orientable);
        assert_eq!(t.face_lengths, vec![3, 3, 3, 3]);
    }

    #[test]
    fn twisting_a_cycle_edge() {
        let g = SimpleGraph::cycle(3);
        let mut s = EmbeddingScheme::orientable(vec![vec![0, 1], vec![0, 2], vec![1, 2]], 3);
        s.signs[0] = -1;
        let t = trace_faces(&g, &s).unwrap();
        assert!(!t.orientable);
        assert_eq!((t.faces, t.euler_genus), (1, 1));
    }

    #[test]
    fn rejects_bad_rotation() {
        let g = SimpleGraph::cycle(3);
        let s = EmbeddingScheme::orientable(vec![vec![0, 0], vec![0, 2], vec![1, 2]], 3);
        assert!(matches!(trace_faces(&g, &s), Err(Error::InvalidScheme(_))));
    }
}
