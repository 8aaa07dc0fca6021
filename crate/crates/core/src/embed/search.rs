//! Exhaustive search for an embedding of prescribed Euler genus.
//!
//! Rotations are built one vertex at a time, one dart at a time. Each
//! successor assignment fixes two steps of the face-tracing permutation on
//! (dart, flag) states; the partial permutation is kept as a set of paths
//! and closed cycles. A branch is cut when even the most favourable
//! completion cannot reach the required number of faces, using the fact
//! that no face is shorter than the girth. Spanning tree edges are
//! untwisted, other edge signs are branched on when first needed.

use alloc::vec;
use alloc::vec::Vec;

use super::scheme::EmbeddingScheme;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Orientable,
    Nonorientable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(EmbeddingScheme),
    Infeasible,
    Budget,
}

const NONE: u32 = u32::MAX;
const PLUS: u8 = 1;
const SCALE: u64 = 1 << 32;
const MINUS: u8 = 2;

struct Rec {
    s: u32,
    t: u32,
    s1: u32,
    e2: u32,
    l1: u32,
    l2: u32,
    closed: bool,
}

enum Step {
    Found,
    No,
    Budget,
}

struct Engine<'a> {
    vorder: Vec<usize>,
    darts_at: Vec<Vec<usize>>,
    tree: Vec<bool>,
    sign: Vec<u8>,
    succ: Vec<u32>,
    placed: Vec<bool>,
    next: Vec<u32>,
    other: Vec<u32>,
    plen: Vec<u32>,
    closed: u32,
    /// Scaled upper bound on the number of cycles the open paths can still
    /// form: each path contributes `len / min_cycle_len`, rounded up.
    potential: u64,
    girth: u32,
    dist: Vec<u32>,
    n: usize,
    dart_vertex: Vec<u32>,
    need: u32,
    trail: Vec<Rec>,
    mode: Mode,
    negatives: u32,
    open_nontree: u32,
    sym: Option<(usize, usize, usize)>,
    nodes: &'a mut u64,
    budget: u64,
}

impl Engine<'_> {
    /// Contribution of the open path `start .. end` of length `len`. A path
    /// whose last dart ends away from the vertex where it starts needs at
    /// least that distance more steps to close up.
    #[inline]
    fn value(&self, len: u32, start: u32, end: u32) -> u64 {
        let x = self.dart_vertex[(start / 2) as usize] as usize;
        let y = self.dart_vertex[((end / 2) ^ 1) as usize] as usize;
        let min_len = (len + self.dist[y * self.n + x]).max(self.girth) as u64;
        (len as u64 * SCALE).div_ceil(min_len)
    }

    fn link(&mut self, s: u32, t: u32) {
        let s1 = self.other[s as usize];
        let e2 = self.other[t as usize];
        let l1 = self.plen[s as usize];
        let l2 = self.plen[t as usize];
        self.next[s as usize] = t;
        if s1 == t {
            self.potential -= self.value(l1, t, s);
            self.closed += 1;
            self.trail.push(Rec { s, t, s1, e2, l1, l2, closed: true });
        } else {
            self.potential -= self.value(l1, s1, s) + self.value(l2, t, e2);
            self.potential += self.value(l1 + l2, s1, e2);
            self.other[s1 as usize] = e2;
            self.other[e2 as usize] = s1;
            self.plen[s1 as usize] = l1 + l2;
            self.plen[e2 as usize] = l1 + l2;
            self.trail.push(Rec { s, t, s1, e2, l1, l2, closed: false });
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let r = self.trail.pop().unwrap();
            self.next[r.s as usize] = NONE;
            if r.closed {
                self.closed -= 1;
                self.potential += self.value(r.l1, r.t, r.s);
            } else {
                self.potential -= self.value(r.l1 + r.l2, r.s1, r.e2);
                self.potential += self.value(r.l1, r.s1, r.s) + self.value(r.l2, r.t, r.e2);
                self.other[r.s1 as usize] = r.s;
                self.other[r.s as usize] = r.s1;
                self.plen[r.s1 as usize] = r.l1;
                self.plen[r.s as usize] = r.l1;
                self.other[r.t as usize] = r.e2;
                self.other[r.e2 as usize] = r.t;
                self.plen[r.t as usize] = r.l2;
                self.plen[r.e2 as usize] = r.l2;
            }
        }
    }

    #[inline]
    fn neg(&self, d: usize) -> u32 {
        u32::from(self.sign[d / 2] == MINUS)
    }

    /// The two links created by `succ(a) = b`.
    #[inline]
    fn links(&self, a: usize, b: usize) -> [(u32, u32); 2] {
        let (na, nb) = (self.neg(a), self.neg(b));
        [(2 * (a ^ 1) as u32 + na, 2 * b as u32), (2 * (b ^ 1) as u32 + (1 ^ nb), 2 * a as u32 + 1)]
    }

    fn apply(&mut self, a: usize, b: usize) {
        for (s, t) in self.links(a, b) {
            self.link(s, t);
        }
    }

    #[inline]
    fn bound_ok(&self) -> bool {
        if self.mode == Mode::Nonorientable && self.negatives == 0 && self.open_nontree == 0 {
            return false;
        }
        self.closed as u64 * SCALE + self.potential >= self.need as u64 * SCALE
    }

    fn tick(&mut self) -> bool {
        *self.nodes += 1;
        *self.nodes <= self.budget
    }

    fn sign_options(&self, e: usize) -> &'static [u8] {
        if self.sign[e] != 0 {
            &[0]
        } else if self.tree[e] || self.mode == Mode::Orientable {
            &[PLUS]
        } else {
            &[PLUS, MINUS]
        }
    }

    fn set_sign(&mut self, e: usize, s: u8) {
        if s == 0 {
            return;
        }
        self.sign[e] = s;
        if !self.tree[e] {
            self.open_nontree -= 1;
            if s == MINUS {
                self.negatives += 1;
            }
        }
    }

    fn clear_sign(&mut self, e: usize, s: u8) {
        if s == 0 {
            return;
        }
        self.sign[e] = 0;
        if !self.tree[e] {
            self.open_nontree += 1;
            if s == MINUS {
                self.negatives -= 1;
            }
        }
    }

    fn vertex(&mut self, k: usize) -> Step {
        if k == self.vorder.len() {
            return if self.mode == Mode::Nonorientable && self.negatives == 0 { Step::No } else { Step::Found };
        }
        let v = self.vorder[k];
        let first = self.darts_at[v][0];
        let e = first / 2;
        for &s in self.sign_options(e) {
            self.set_sign(e, s);
            self.placed[first] = true;
            let deg = self.darts_at[v].len();
            let r = self.extend(k, v, first, first, deg - 1);
            if matches!(r, Step::Found) {
                return r;
            }
            self.placed[first] = false;
            self.clear_sign(e, s);
            if !matches!(r, Step::No) {
                return r;
            }
        }
        Step::No
    }

    fn extend(&mut self, k: usize, v: usize, first: usize, cur: usize, remaining: usize) -> Step {
        if !self.tick() {
            return Step::Budget;
        }
        if remaining == 0 {
            let mark = self.trail.len();
            self.succ[cur] = first as u32;
            self.apply(cur, first);
            let r = if self.bound_ok() { self.vertex(k + 1) } else { Step::No };
            if matches!(r, Step::Found) {
                return r;
            }
            self.undo_to(mark);
            self.succ[cur] = NONE;
            return r;
        }
        // candidate (dart, sign) pairs, most cycles closed first, then
        // shortest resulting paths
        let mut cands: Vec<(u32, u32, usize, u8)> = Vec::new();
        for &b in &self.darts_at[v] {
            if self.placed[b] {
                continue;
            }
            if let Some((root, x1, x2)) = self.sym {
                if v == root && b == x2 && !self.placed[x1] {
                    continue;
                }
            }
            let e = b / 2;
            for &s in self.sign_options(e) {
                let old = self.sign[e];
                if s != 0 {
                    self.sign[e] = s;
                }
                let mut closes = 0;
                let mut len = 0;
                for (x, y) in self.links(cur, b) {
                    if self.other[x as usize] == y {
                        closes += 1;
                    } else {
                        len += self.plen[x as usize] + self.plen[y as usize];
                    }
                }
                self.sign[e] = old;
                cands.push((2 - closes, len, b, s));
            }
        }
        cands.sort_unstable();
        for (_, _, b, s) in cands {
            let e = b / 2;
            self.set_sign(e, s);
            self.placed[b] = true;
            self.succ[cur] = b as u32;
            let mark = self.trail.len();
            self.apply(cur, b);
            let r = if self.bound_ok() { self.extend(k, v, first, b, remaining - 1) } else { Step::No };
            if matches!(r, Step::Found) {
                return r;
            }
            self.undo_to(mark);
            self.succ[cur] = NONE;
            self.placed[b] = false;
            self.clear_sign(e, s);
            if !matches!(r, Step::No) {
                return r;
            }
        }
        Step::No
    }
}

/// Searches for an embedding of the connected graph with edge list `ends`
/// on `n` vertices whose Euler genus is at most `euler_genus` (nonorientable
/// surfaces only in [`Mode::Nonorientable`], orientable only otherwise).
///
/// `nodes` is incremented per search node; the search gives up once it
/// exceeds `budget`.
pub(crate) fn search(
    n: usize,
    ends: &[(usize, usize)],
    euler_genus: usize,
    mode: Mode,
    nodes: &mut u64,
    budget: u64,
) -> Outcome {
    let m = ends.len();
    if m == 0 {
        return if mode == Mode::Orientable {
            Outcome::Found(EmbeddingScheme { rotation: vec![Vec::new(); n], signs: Vec::new() })
        } else {
            Outcome::Infeasible
        };
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[u].push((v, 2 * e));
        adj[v].push((u, 2 * e + 1));
    }
    // vertex order: start at a highest-degree vertex, then prefer vertices
    // with many ordered neighbours
    let mut pos = vec![usize::MAX; n];
    let mut vorder = Vec::with_capacity(n);
    let root = (0..n).max_by_key(|&v| (adj[v].len(), core::cmp::Reverse(v))).unwrap();
    pos[root] = 0;
    vorder.push(root);
    while vorder.len() < n {
        let v = (0..n)
            .filter(|&v| pos[v] == usize::MAX)
            .max_by_key(|&v| {
                let links = adj[v].iter().filter(|&&(w, _)| pos[w] != usize::MAX).count();
                (links, adj[v].len(), core::cmp::Reverse(v))
            })
            .unwrap();
        pos[v] = vorder.len();
        vorder.push(v);
    }
    let mut tree = vec![false; m];
    for &v in &vorder[1..] {
        if let Some(&(_, d)) = adj[v].iter().filter(|&&(w, _)| pos[w] < pos[v]).min_by_key(|&&(w, _)| pos[w]) {
            tree[d / 2] = true;
        }
    }
    let darts_at: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ds: Vec<(usize, usize)> = adj[v].iter().map(|&(w, d)| (pos[w], d)).collect();
            ds.sort_unstable();
            ds.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    let min_deg = (0..n).map(|v| adj[v].len()).min().unwrap_or(0);
    let girth = if min_deg >= 2 {
        crate::graph::girth(&crate::SimpleGraph::from_edges(n, ends)).unwrap_or(1) as u32
    } else {
        1
    };
    let mut dist = vec![u32::MAX / 4; n * n];
    for src in 0..n {
        dist[src * n + src] = 0;
        let mut queue = alloc::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &adj[u] {
                if dist[src * n + w] > dist[src * n + u] + 1 {
                    dist[src * n + w] = dist[src * n + u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut dart_vertex = vec![0u32; 2 * m];
    for (e, &(u, v)) in ends.iter().enumerate() {
        dart_vertex[2 * e] = u as u32;
        dart_vertex[2 * e + 1] = v as u32;
    }
    let faces = 2i64 - n as i64 + m as i64 - euler_genus as i64;
    let need = 2 * faces.max(1) as u32;
    let sym = (darts_at[root].len() >= 3).then(|| (root, darts_at[root][1], darts_at[root][2]));
    let nontree = tree.iter().filter(|&&t| !t).count() as u32;
    let mut eng = Engine {
        vorder,
        darts_at,
        tree,
        sign: vec![0; m],
        succ: vec![NONE; 2 * m],
        placed: vec![false; 2 * m],
        next: vec![NONE; 4 * m],
        other: (0..4 * m as u32).collect(),
        plen: vec![1; 4 * m],
        closed: 0,
        potential: 0,
        girth,
        dist,
        n,
        dart_vertex,
        need,
        trail: Vec::new(),
        mode,
        negatives: 0,
        open_nontree: nontree,
        sym,
        nodes,
        budget,
    };
    for st in 0..4 * m as u32 {
        eng.potential += eng.value(1, st, st);
    }
    if !eng.bound_ok() {
        return Outcome::Infeasible;
    }
    match eng.vertex(0) {
        Step::Budget => Outcome::Budget,
        Step::No => Outcome::Infeasible,
        Step::Found => {
            let rotation = (0..n)
                .map(|v| {
                    let first = eng.darts_at[v][0];
                    let mut out = vec![first / 2];
                    let mut d = eng.succ[first] as usize;
                    while d != first {
                        out.push(d / 2);
                        d = eng.succ[d] as usize;
                    }
                    out
                })
                .collect();
            let signs = eng.sign.iter().map(|&s| if s == MINUS { -1 } else { 1 }).collect();
            Outcome::Found(EmbeddingScheme { rotation, signs })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::scheme::trace_edge_list;
    use crate::SimpleGraph;

    fn run(g: &SimpleGraph, eg: usize, mode: Mode) -> Outcome {
        let mut nodes = 0;
        search(g.n(), &g.edges(), eg, mode, &mut nodes, 10_000_000)
    }

    fn check(g: &SimpleGraph, eg: usize, mode: Mode) {
        match run(g, eg, mode) {
            Outcome::Found(s) => {
                let t = trace_edge_list(g.n(), &g.edges(), &s).unwrap();
                assert!(t.euler_genus <= eg);
                assert_eq!(t.orientable, mode == Mode::Orientable);
            }
            other => panic!("expected an embedding, got {other:?}"),
        }
    }

    #[test]
    fn small_complete_graphs() {
        let k5 = SimpleGraph::complete(5);
        assert_eq!(run(&k5, 0, Mode::Orientable), Outcome::Infeasible);
        check(&k5, 2, Mode::Orientable);
        check(&k5, 1, Mode::Nonorientable);
        let k6 = SimpleGraph::complete(6);
        check(&k6, 1, Mode::Nonorientable);
        let k7 = SimpleGraph::complete(7);
        check(&k7, 2, Mode::Orientable);
        let k33 = SimpleGraph::complete_bipartite(3, 3);
        assert_eq!(run(&k33, 0, Mode::Orientable), Outcome::Infeasible);
        check(&k33, 1, Mode::Nonorientable);
    }
}

#[cfg(test)]
mod probe {
    extern crate std;
    use super::*;
    use crate::SimpleGraph;
    use std::println;

    fn time(name: &str, g: &SimpleGraph, eg: usize, mode: Mode) {
        let t = std::time::Instant::now();
        let mut nodes = 0;
        let r = search(g.n(), &g.edges(), eg, mode, &mut nodes, 2_000_000_000);
        let kind = match r {
            Outcome::Found(_) => "found",
            Outcome::Infeasible => "infeasible",
            Outcome::Budget => "budget",
        };
        println!("{name} eg={eg} {mode:?}: {kind} nodes={nodes} {:?}", t.elapsed());
    }

    #[test]
    #[ignore]
    fn probe() {
        let k7 = SimpleGraph::complete(7);
        time("K7", &k7, 2, Mode::Nonorientable);
        time("K7", &k7, 3, Mode::Nonorientable);
        time("K8", &SimpleGraph::complete(8), 4, Mode::Orientable);
        time("K8", &SimpleGraph::complete(8), 3, Mode::Orientable);
        let z36 = SimpleGraph::complete(3).join(&SimpleGraph::complete(2).disjoint_union(&SimpleGraph::complete(2)));
        time("K3+2K2", &z36, 1, Mode::Nonorientable);
        time("K3+2K2", &z36, 2, Mode::Orientable);
        time("K44", &SimpleGraph::complete_bipartite(4, 4), 2, Mode::Nonorientable);
        time("K35", &SimpleGraph::complete_bipartite(3, 5), 2, Mode::Nonorientable);
        time("K35", &SimpleGraph::complete_bipartite(3, 5), 1, Mode::Nonorientable);
        time("K36", &SimpleGraph::complete_bipartite(3, 6), 2, Mode::Orientable);
        time("K44", &SimpleGraph::complete_bipartite(4, 4), 1, Mode::Nonorientable);
        time("K6", &SimpleGraph::complete(6), 2, Mode::Orientable);
    }
}

#[cfg(test)]
mod probe_groups {
    extern crate std;
    use crate::algebra::build_family;
    use crate::classify::intersection_graph;
    use crate::embed::{nonorientable_genus, orientable_genus, GenusOptions};
    use crate::lattice::enumerate_subgroups;
    use std::println;

    #[test]
    #[ignore]
    fn probe_groups() {
        for s in ["mat:p=3,m=4", "mat:p=7,m=4", "abelian:10x2"] {
            let t = std::time::Instant::now();
            let g = build_family(&s.parse().unwrap(), 512).unwrap();
            let lat = enumerate_subgroups(&g);
            let ig = intersection_graph(&lat);
            let t1 = t.elapsed();
            let bounds = crate::embed::block_euler_bounds(&ig);
            let o = orientable_genus(&ig, GenusOptions { stop_above: Some(2), ..Default::default() }).unwrap();
            let t2 = t.elapsed();
            let n = nonorientable_genus(&ig, GenusOptions { stop_above: Some(2), ..Default::default() }).unwrap();
            println!("{s}: V={} E={} lattice {t1:?} bounds {bounds:?} genus {:?} ({} nodes) {t2:?} crosscap {:?} ({} nodes) {:?}", ig.n(), ig.edge_count(), o.status, o.nodes_explored, n.status, n.nodes_explored, t.elapsed());
        }
    }
}
