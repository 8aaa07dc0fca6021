use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::SimpleGraph;

/// One joint refinement round: new colour = (old colour, sorted neighbour
/// colours), numbered consistently across both graphs.
fn refine_once(a: &SimpleGraph, ca: &[u32], b: &SimpleGraph, cb: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let sig = |g: &SimpleGraph, c: &[u32], v: usize| {
        let mut nb: Vec<u32> = g.neighbors(v).map(|w| c[w]).collect();
        nb.sort_unstable();
        (c[v], nb)
    };
    let sa: Vec<_> = (0..a.n()).map(|v| sig(a, ca, v)).collect();
    let sb: Vec<_> = (0..b.n()).map(|v| sig(b, cb, v)).collect();
    let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
    for s in sa.iter().chain(sb.iter()) {
        ids.insert(s, 0);
    }
    for (i, v) in ids.values_mut().enumerate() {
        *v = i as u32;
    }
    (sa.iter().map(|s| ids[s]).collect(), sb.iter().map(|s| ids[s]).collect())
}

fn histogram(c: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

/// Refines to a stable partition; `None` once the two sides disagree.
fn refine(a: &SimpleGraph, mut ca: Vec<u32>, b: &SimpleGraph, mut cb: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut classes = 0;
    loop {
        let (na, nb) = refine_once(a, &ca, b, &cb);
        let ha = histogram(&na);
        if ha != histogram(&nb) {
            return None;
        }
        if ha.len() == classes {
            return Some((na, nb));
        }
        classes = ha.len();
        ca = na;
        cb = nb;
    }
}

fn search(a: &SimpleGraph, ca: Vec<u32>, b: &SimpleGraph, cb: Vec<u32>) -> Option<Vec<usize>> {
    let hist = histogram(&ca);
    let target = hist.iter().filter(|(_, &k)| k > 1).min_by_key(|(_, &k)| k).map(|(&c, _)| c);
    let Some(c) = target else {
        let mut pos = BTreeMap::new();
        for (w, &col) in cb.iter().enumerate() {
            pos.insert(col, w);
        }
        let map: Vec<usize> = ca.iter().map(|col| pos[col]).collect();
        let ok = a.edges().iter().all(|&(u, v)| b.has_edge(map[u], map[v]));
        return ok.then_some(map);
    };
    let v = ca.iter().position(|&x| x == c)?;
    let fresh = hist.keys().next_back().map_or(0, |&m| m + 1);
    for w in (0..b.n()).filter(|&w| cb[w] == c) {
        let mut ca2 = ca.clone();
        let mut cb2 = cb.clone();
        ca2[v] = fresh;
        cb2[w] = fresh;
        if let Some((ra, rb)) = refine(a, ca2, b, cb2) {
            if let Some(m) = search(a, ra, b, rb) {
                return Some(m);
            }
        }
    }
    None
}

/// An isomorphism `a -> b` as a vertex map, found by colour refinement
/// with individualisation and backtracking.
pub fn find_isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let ca: Vec<u32> = a.degrees().iter().map(|&d| d as u32).collect();
    let cb: Vec<u32> = b.degrees().iter().map(|&d| d as u32).collect();
    let (ca, cb) = refine(a, ca, b, cb)?;
    search(a, ca, b, cb)
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Tries every vertex permutation. Only for small graphs.
pub fn is_isomorphic_brute(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let edges = a.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if edges.iter().all(|&(u, v)| b.has_edge(perm[u], perm[v])) {
            return true;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}
