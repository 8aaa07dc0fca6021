use alloc::vec;
use alloc::vec::Vec;

use super::SimpleGraph;
use crate::bits::BitSet;
use crate::{Error, Result};

/// Default node budget for subgraph searches.
pub const DEFAULT_SUBGRAPH_BUDGET: u64 = 10_000_000;

struct Matcher<'a> {
    host: &'a SimpleGraph,
    order: Vec<usize>,
    /// For each position, earlier positions adjacent to it in the pattern.
    back: Vec<Vec<usize>>,
    pat_deg: Vec<usize>,
    host_deg: Vec<usize>,
    map: Vec<usize>,
    used: BitSet,
    nodes: u64,
    budget: u64,
    /// Called on every complete embedding; `true` stops the search.
    visit: &'a mut dyn FnMut(&[usize]) -> bool,
}

impl Matcher<'_> {
    fn candidates(&self, k: usize) -> BitSet {
        let mut c = match self.back[k].first() {
            Some(&j) => self.host.neighbor_set(self.map[self.order[j]]).clone(),
            None => BitSet::full(self.host.n()),
        };
        for &j in self.back[k].iter().skip(1) {
            c.intersect_with(self.host.neighbor_set(self.map[self.order[j]]));
        }
        c.difference_with(&self.used);
        c
    }

    fn extend(&mut self, k: usize) -> Result<bool> {
        if k == self.order.len() {
            return Ok((self.visit)(&self.map));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        let p = self.order[k];
        let need = self.pat_deg[p];
        let cands = self.candidates(k);
        for h in cands.iter() {
            if self.host_deg[h] < need {
                continue;
            }
            self.map[p] = h;
            self.used.insert(h);
            // forward check: every later vertex with a mapped neighbour
            // still has somewhere to go
            let alive = (k + 1..self.order.len()).filter(|&j| self.back[j].iter().any(|&i| i <= k)).all(|j| {
                let mut c = BitSet::full(self.host.n());
                for &i in self.back[j].iter().filter(|&&i| i <= k) {
                    c.intersect_with(self.host.neighbor_set(self.map[self.order[i]]));
                }
                c.difference_with(&self.used);
                !c.is_empty()
            });
            if alive && self.extend(k + 1)? {
                return Ok(true);
            }
            self.used.remove(h);
        }
        Ok(false)
    }
}

/// Finds an injective map `pattern -> host` preserving edges (not
/// necessarily non-edges). The witness is `w[pattern_vertex] = host_vertex`,
/// the first one met when pattern vertices are taken by descending degree.
pub fn find_subgraph(host: &SimpleGraph, pattern: &SimpleGraph, budget: u64) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_subgraph(host, pattern, budget, &mut |w| {
        found = Some(w.to_vec());
        true
    })?;
    Ok(found)
}

/// Calls `visit` on embeddings of `pattern` into `host` in search order
/// until it returns `true`. Returns whether some call returned `true`.
pub fn for_each_subgraph(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    budget: u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool> {
    let (n, k) = (host.n(), pattern.n());
    if k > n || pattern.edge_count() > host.edge_count() {
        return Ok(false);
    }
    let pat_deg = pattern.degrees();
    let host_deg = host.degrees();
    let mut need = pat_deg.clone();
    need.sort_unstable_by(|a, b| b.cmp(a));
    let mut have = host_deg.clone();
    have.sort_unstable_by(|a, b| b.cmp(a));
    if need.iter().zip(&have).any(|(p, h)| p > h) {
        return Ok(false);
    }
    // order: highest degree first, then most already-placed neighbours
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (links, pat_deg[v], core::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let back = (0..k).map(|i| (0..i).filter(|&j| pattern.has_edge(order[i], order[j])).collect()).collect();
    let mut m = Matcher {
        host,
        order,
        back,
        pat_deg,
        host_deg,
        map: vec![usize::MAX; k],
        used: BitSet::new(n),
        nodes: 0,
        budget,
        visit,
    };
    m.extend(0)
}

/// `(found, witness)` with the default node budget.
pub fn has_subgraph(host: &SimpleGraph, pattern: &SimpleGraph) -> Result<(bool, Option<Vec<usize>>)> {
    let w = find_subgraph(host, pattern, DEFAULT_SUBGRAPH_BUDGET)?;
    Ok((w.is_some(), w))
}

/// True when `pattern` does not occur as a subgraph of `host`.
pub fn x_free(host: &SimpleGraph, pattern: &SimpleGraph) -> Result<bool> {
    Ok(find_subgraph(host, pattern, DEFAULT_SUBGRAPH_BUDGET)?.is_none())
}
