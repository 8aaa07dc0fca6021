use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::BitSet;

/// Undirected graph without loops or multiple edges on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BitSet>,
    edges: usize,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: (0..n).map(|_| BitSet::new(n)).collect(), edges: 0, labels: None }
    }

    /// Builds a graph from an edge list; loops and repeated edges are
    /// ignored, endpoints must be `< n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// Path with `k` edges.
    pub fn path(k: usize) -> Self {
        let mut g = Self::new(k + 1);
        for i in 0..k {
            g.add_edge(i, i + 1);
        }
        g
    }

    /// Adds `{u, v}`; returns false for loops and existing edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.edges -= 1;
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for u in 0..self.n() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n();
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vs`, vertex `i` of the result being `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> SimpleGraph {
        let mut g = Self::new(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let k = self.n();
        let mut g = Self::new(k + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + k, v + k);
        }
        g
    }

    pub fn join(&self, other: &SimpleGraph) -> SimpleGraph {
        let k = self.n();
        let mut g = self.disjoint_union(other);
        for u in 0..k {
            for v in 0..other.n() {
                g.add_edge(u, v + k);
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = alloc::vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = alloc::vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Edges grouped into biconnected blocks (bridges are blocks of one
    /// edge). Isolated vertices belong to no block.
    pub fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        let n = self.n();
        let mut disc = alloc::vec![usize::MAX; n];
        let mut low = alloc::vec![0usize; n];
        let mut time = 0;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::new();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| self.neighbors(v).collect()).collect();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, parent, next neighbour index)
            let mut dfs: Vec<(usize, usize, usize)> = alloc::vec![(root, usize::MAX, 0)];
            while let Some(&mut (u, parent, ref mut i)) = dfs.last_mut() {
                if *i < nbrs[u].len() {
                    let v = nbrs[u][*i];
                    *i += 1;
                    if disc[v] == usize::MAX {
                        stack.push((u.min(v), u.max(v)));
                        disc[v] = time;
                        low[v] = time;
                        time += 1;
                        dfs.push((v, u, 0));
                    } else if v != parent && disc[v] < disc[u] {
                        stack.push((u.min(v), u.max(v)));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    dfs.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            let mut block = Vec::new();
                            let key = (parent.min(u), parent.max(u));
                            while let Some(e) = stack.pop() {
                                block.push(e);
                                if e == key {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            out.push(block);
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_of_bowtie_with_tail() {
        // two triangles sharing vertex 2, plus a pendant edge 4-5
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]);
        let mut b = g.blocks();
        b.sort();
        assert_eq!(b.len(), 3);
        assert!(b.contains(&alloc::vec![(4, 5)]));
        assert!(b.contains(&alloc::vec![(0, 1), (0, 2), (1, 2)]));
    }

    #[test]
    fn join_and_complement() {
        let g = SimpleGraph::complete(1).join(&SimpleGraph::new(3));
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.complement().edge_count(), 3);
        assert_eq!(SimpleGraph::complete(5).edge_count(), 10);
    }
}
