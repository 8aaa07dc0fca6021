//! Slow, independent reference implementations used to cross-check
//! `sgi-core`: face tracing, exhaustive rotation search, isomorphism by
//! permutations.

use std::collections::HashSet;

use sgi_core::embed::{EmbeddingScheme, GenusResult};
use sgi_core::SimpleGraph;

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn iso_by_permutations(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(a.n()).iter().any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Faces of a signed rotation system, traced vertex by vertex: arrive at a
/// vertex along an edge carrying a local orientation, leave along the next
/// edge in that direction, and flip the orientation on twisted edges.
/// Returns the Euler genus and whether the surface is orientable.
pub fn surface_of(g: &SimpleGraph, s: &EmbeddingScheme) -> Option<(usize, bool)> {
    let edges = g.edges();
    if s.rotation.len() != g.n() || s.signs.len() != edges.len() {
        return None;
    }
    for v in 0..g.n() {
        let mut at: Vec<usize> = s.rotation[v].clone();
        at.sort_unstable();
        let want: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].0 == v || edges[e].1 == v).collect();
        if at != want {
            return None;
        }
    }
    let pos = |v: usize, e: usize| s.rotation[v].iter().position(|&x| x == e).unwrap();
    let other = |v: usize, e: usize| if edges[e].0 == v { edges[e].1 } else { edges[e].0 };
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for v in 0..g.n() {
        for &e in &s.rotation[v] {
            for dir in [1i8, -1] {
                if seen.contains(&(v, e, dir)) {
                    continue;
                }
                orbits += 1;
                let (mut cv, mut ce, mut cd) = (v, e, dir);
                while seen.insert((cv, ce, cd)) {
                    let w = other(cv, ce);
                    let d = cd * s.signs[ce];
                    let rot = &s.rotation[w];
                    let k = rot.len() as isize;
                    let i = pos(w, ce) as isize;
                    let next = rot[(i + d as isize).rem_euclid(k) as usize];
                    (cv, ce, cd) = (w, next, d);
                }
            }
        }
    }
    let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
    let faces = orbits / 2 + isolated;
    // two-colour the vertices by the signs; a clash is a one-sided cycle
    let mut side = vec![0i8; g.n()];
    let mut orientable = true;
    let comps = g.components();
    for c in &comps {
        side[c[0]] = 1;
        let mut stack = vec![c[0]];
        while let Some(u) = stack.pop() {
            for (e, &(a, b)) in edges.iter().enumerate() {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                let want = side[u] * s.signs[e];
                if side[w] == 0 {
                    side[w] = want;
                    stack.push(w);
                } else if side[w] != want {
                    orientable = false;
                }
            }
        }
    }
    let euler = 2 * comps.len() as isize - g.n() as isize + edges.len() as isize - faces as isize;
    Some((usize::try_from(euler).ok()?, orientable))
}

/// The result is exact and its scheme embeds `g` in exactly that surface.
pub fn realises(g: &SimpleGraph, r: &GenusResult, orientable: bool) -> bool {
    let (Some(k), Some(s)) = (r.exact(), &r.scheme) else { return false };
    scheme_embeds(g, s, k, orientable)
}

pub fn scheme_embeds(g: &SimpleGraph, s: &EmbeddingScheme, k: usize, orientable: bool) -> bool {
    match surface_of(g, s) {
        Some((eg, or)) if orientable => or && eg == 2 * k,
        Some((eg, or)) => eg == k && (k == 0 || !or),
        None => false,
    }
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Minimum surface over every rotation system of `g`: the orientable genus,
/// or with `signed` the crosscap number over every signature on the edges
/// outside a spanning forest. Only for tiny graphs.
pub fn brute_force_genus(g: &SimpleGraph, signed: bool) -> usize {
    let edges = g.edges();
    let rotations: Vec<Vec<Vec<usize>>> = (0..g.n())
        .map(|v| {
            let inc: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].0 == v || edges[e].1 == v).collect();
            if inc.len() <= 2 {
                return vec![inc];
            }
            let mut out = Vec::new();
            let mut rest = inc[1..].to_vec();
            permute(&mut rest, 0, &mut |p| {
                let mut r = vec![inc[0]];
                r.extend_from_slice(p);
                out.push(r);
            });
            out
        })
        .collect();
    let mut root: Vec<usize> = (0..g.n()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        if c[x] != x {
            c[x] = find(c, c[x]);
        }
        c[x]
    }
    let mut cotree = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        if a == b {
            cotree.push(e);
        } else {
            root[a] = b;
        }
    }
    let free: &[usize] = if signed { &cotree } else { &[] };
    let mut best = usize::MAX;
    let mut choice = vec![0usize; g.n()];
    loop {
        let rotation: Vec<Vec<usize>> = (0..g.n()).map(|v| rotations[v][choice[v]].clone()).collect();
        for mask in 0u64..1 << free.len() {
            let mut signs = vec![1i8; edges.len()];
            for (i, &e) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    signs[e] = -1;
                }
            }
            let (eg, or) = surface_of(g, &EmbeddingScheme { rotation: rotation.clone(), signs }).unwrap();
            if signed && or {
                continue;
            }
            best = best.min(if signed { eg } else { eg / 2 });
        }
        let mut v = 0;
        while v < g.n() {
            choice[v] += 1;
            if choice[v] < rotations[v].len() {
                break;
            }
            choice[v] = 0;
            v += 1;
        }
        if v == g.n() {
            break;
        }
    }
    best
}

/// Lower bound on the orientable genus from Euler's formula: a component
/// with `v >= 3` vertices and `e` edges needs `e <= 3(v - 2 + 2g)`.
pub fn euler_genus_floor(g: &SimpleGraph) -> usize {
    g.components()
        .iter()
        .filter(|c| c.len() >= 3)
        .map(|c| {
            let e = g.edges().iter().filter(|&&(u, _)| c.contains(&u)).count();
            (e + 6).saturating_sub(3 * c.len()).div_ceil(6)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_on_small_graphs() {
        assert_eq!(permutations(4).len(), 24);
        assert!(iso_by_permutations(&SimpleGraph::cycle(5), &SimpleGraph::cycle(5).complement()));
        assert!(!iso_by_permutations(&SimpleGraph::path(3), &SimpleGraph::complete_bipartite(1, 3)));
        assert_eq!(brute_force_genus(&SimpleGraph::complete(4), false), 0);
        assert_eq!(brute_force_genus(&SimpleGraph::complete(5), false), 1);
        assert_eq!(brute_force_genus(&SimpleGraph::complete(5), true), 1);
        assert_eq!(brute_force_genus(&SimpleGraph::complete_bipartite(3, 3), true), 1);
        assert_eq!(euler_genus_floor(&SimpleGraph::complete(7)), 1);
        assert_eq!(euler_genus_floor(&SimpleGraph::complete(8)), 2);
        assert_eq!(euler_genus_floor(&SimpleGraph::complete(8).disjoint_union(&SimpleGraph::complete(5))), 3);
    }
}
