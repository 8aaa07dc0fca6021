use alloc::vec;
use alloc::vec::Vec;

use super::SimpleGraph;
use crate::bits::BitSet;
use crate::{Error, Result};

/// Exact value together with a witness: an independent set for the
/// independence number, a partition into cliques for the clique cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub value: usize,
    pub witness: Vec<Vec<usize>>,
    pub nodes: u64,
}

struct MaxClique<'a> {
    g: &'a SimpleGraph,
    best: Vec<usize>,
    cur: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl MaxClique<'_> {
    /// Greedy colouring of `p`; returns vertices with their colour, colour
    /// nondecreasing.
    fn colour(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut left = p.clone();
        let mut c = 0;
        while !left.is_empty() {
            c += 1;
            let mut q = left.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(self.g.neighbor_set(v));
                left.remove(v);
                out.push((v, c));
            }
        }
        out
    }

    fn expand(&mut self, mut p: BitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        let coloured = self.colour(&p);
        for &(v, c) in coloured.iter().rev() {
            if self.cur.len() + c <= self.best.len() {
                return Ok(());
            }
            self.cur.push(v);
            let mut np = p.clone();
            np.intersect_with(self.g.neighbor_set(v));
            if np.is_empty() {
                if self.cur.len() > self.best.len() {
                    self.best = self.cur.clone();
                }
            } else {
                self.expand(np)?;
            }
            self.cur.pop();
            p.remove(v);
        }
        Ok(())
    }
}

fn max_clique(g: &SimpleGraph, budget: u64) -> Result<(Vec<usize>, u64)> {
    let mut m = MaxClique { g, best: Vec::new(), cur: Vec::new(), nodes: 0, budget };
    if g.n() > 0 {
        m.expand(BitSet::full(g.n()))?;
    }
    let mut best = m.best;
    best.sort_unstable();
    Ok((best, m.nodes))
}

/// Size of a largest independent set, by maximum clique search on the
/// complement.
pub fn independence_number(g: &SimpleGraph, budget: u64) -> Result<CoverResult> {
    let (set, nodes) = max_clique(&g.complement(), budget)?;
    Ok(CoverResult { value: set.len(), witness: vec![set], nodes })
}

struct Colouring<'a> {
    g: &'a SimpleGraph,
    colour: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    nodes: u64,
    budget: u64,
}

impl Colouring<'_> {
    /// Uncoloured vertex with most distinct neighbour colours, then highest
    /// degree.
    fn pick(&self) -> Option<usize> {
        (0..self.g.n()).filter(|&v| self.colour[v] == usize::MAX).max_by_key(|&v| {
            let mut seen = BitSet::new(self.best_k + 1);
            for w in self.g.neighbors(v) {
                if self.colour[w] != usize::MAX {
                    seen.insert(self.colour[w]);
                }
            }
            (seen.count(), self.g.degree(v), core::cmp::Reverse(v))
        })
    }

    fn solve(&mut self, used: usize, lower: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudget(self.budget));
        }
        let Some(v) = self.pick() else {
            if used < self.best_k {
                self.best_k = used;
                self.best = self.colour.clone();
            }
            return Ok(());
        };
        for c in 0..=used {
            if self.best_k <= lower {
                return Ok(());
            }
            let k = used.max(c + 1);
            if k >= self.best_k {
                break;
            }
            if self.g.neighbors(v).any(|w| self.colour[w] == c) {
                continue;
            }
            self.colour[v] = c;
            self.solve(k, lower)?;
            self.colour[v] = usize::MAX;
        }
        Ok(())
    }
}

/// Least number of cliques covering every vertex, i.e. the chromatic
/// number of the complement, by DSATUR branch and bound.
pub fn clique_cover_number(g: &SimpleGraph, budget: u64) -> Result<CoverResult> {
    let n = g.n();
    if n == 0 {
        return Ok(CoverResult { value: 0, witness: Vec::new(), nodes: 0 });
    }
    let h = g.complement();
    let (clique, mut nodes) = max_clique(&h, budget)?;
    let mut c = Colouring {
        g: &h,
        colour: vec![usize::MAX; n],
        best: (0..n).collect(),
        best_k: n + 1,
        nodes: 0,
        budget: budget.saturating_sub(nodes),
    };
    // seed the largest clique of the complement with distinct colours
    for (i, &v) in clique.iter().enumerate() {
        c.colour[v] = i;
    }
    c.solve(clique.len(), clique.len())?;
    nodes += c.nodes;
    let k = c.best_k;
    let mut classes = vec![Vec::new(); k];
    for v in 0..n {
        classes[c.best[v]].push(v);
    }
    Ok(CoverResult { value: k, witness: classes, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(independence_number(&c5, 1000).unwrap().value, 2);
        assert_eq!(clique_cover_number(&c5, 1000).unwrap().value, 3);
        let k4 = SimpleGraph::complete(4);
        assert_eq!(clique_cover_number(&k4, 1000).unwrap().value, 1);
        let e = SimpleGraph::new(3);
        assert_eq!(independence_number(&e, 1000).unwrap().value, 3);
        assert_eq!(clique_cover_number(&e, 1000).unwrap().value, 3);
    }

    #[test]
    fn cover_is_partition_into_cliques() {
        let g = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]);
        let r = clique_cover_number(&g, 10_000).unwrap();
        let mut all: Vec<usize> = r.witness.concat();
        all.sort_unstable();
        assert_eq!(all, (0..7).collect::<Vec<_>>());
        for class in &r.witness {
            for i in 0..class.len() {
                for j in i + 1..class.len() {
                    assert!(g.has_edge(class[i], class[j]));
                }
            }
        }
        assert_eq!(r.value, independence_number(&g, 10_000).unwrap().value);
    }
}
