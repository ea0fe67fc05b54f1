//! Undirected simple graphs over dense vertex ids with bit-set adjacency.

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// An immutable simple graph. Vertex ids are `0..n`, adjacency is symmetric,
/// and there are no self-loops. `labels` remembers the source names so that
/// parsed files round-trip; generated graphs label vertex `v` as `v`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Panics on self-loops or duplicate
    /// edges; parsers validate before calling this.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge endpoint out of range");
            assert_ne!(u, v, "self-loop");
            assert!(!adj[u].contains(v), "duplicate edge ({u}, {v})");
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph {
            n,
            adj,
            labels: (0..n as u64).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<u64>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label_of(&self, v: usize) -> u64 {
        self.labels[v]
    }

    /// Dense id carrying the given source label, if any.
    pub fn vertex_with_label(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Max-degree vertex, smallest id among ties.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.n).max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Open neighborhood N(S) = N[S] \ S.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.remove_all(s);
        out
    }

    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut out = self.adj[v].clone();
        out.insert(v);
        out
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Connected components of `G - removed`, ordered by minimum vertex id.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut queue = vec![start];
            seen.insert(start);
            comp.insert(start);
            while let Some(u) = queue.pop() {
                for w in self.adj[u].minus(&seen).iter() {
                    seen.insert(w);
                    comp.insert(w);
                    queue.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.components(&VertexSet::empty(self.n)).len() == 1
    }

    /// Solver precondition guard.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// True iff `G - s` has at least two components.
    pub fn is_cutset(&self, s: &VertexSet) -> bool {
        self.components(s).len() >= 2
    }

    /// An independent cutset is both at once; this is the witness check used
    /// before any solver returns "yes".
    pub fn is_independent_cutset(&self, s: &VertexSet) -> bool {
        self.is_independent(s) && self.is_cutset(s)
    }

    /// True iff `a \ s` and `b \ s` are nonempty and no component of `G - s`
    /// meets both.
    pub fn separates(&self, s: &VertexSet, a: &VertexSet, b: &VertexSet) -> bool {
        let ra = a.minus(s);
        let rb = b.minus(s);
        if ra.is_empty() || rb.is_empty() {
            return false;
        }
        self.components(s)
            .iter()
            .all(|c| !(c.intersects(&ra) && c.intersects(&rb)))
    }

    /// Induced subgraph on `keep`; returns the new graph plus the map from
    /// new ids to old ids (ascending).
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let k = old_ids.len();
        let mut adj = vec![VertexSet::empty(k); k];
        for (i, &v) in old_ids.iter().enumerate() {
            for w in self.adj[v].intersect(keep).iter() {
                adj[i].insert(new_id[w]);
            }
        }
        let labels = old_ids.iter().map(|&v| self.labels[v]).collect();
        (Graph { n: k, adj, labels }, old_ids)
    }

    /// Contracts each class to a single vertex. Non-class vertices survive as
    /// singleton classes. New ids are assigned by ascending minimum original
    /// id per class; parallel edges merge and loops vanish.
    pub fn contract(&self, classes: &[VertexSet]) -> Result<(Graph, ContractionMap)> {
        let mut assigned = VertexSet::empty(self.n);
        for c in classes {
            if !assigned.is_disjoint(c) {
                return Err(Error::OverlappingClasses);
            }
            assigned.union_with(c);
        }
        // Groups: explicit classes plus singleton classes for the rest.
        let mut groups: Vec<VertexSet> =
            classes.iter().filter(|c| !c.is_empty()).cloned().collect();
        for v in assigned.complement().iter() {
            groups.push(VertexSet::singleton(self.n, v));
        }
        groups.sort_by_key(|g| g.first().unwrap());
        let k = groups.len();
        let mut forward = vec![usize::MAX; self.n];
        for (i, g) in groups.iter().enumerate() {
            for v in g.iter() {
                forward[v] = i;
            }
        }
        let mut adj = vec![VertexSet::empty(k); k];
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                let (gu, gv) = (forward[u], forward[v]);
                if gu != gv {
                    adj[gu].insert(gv);
                    adj[gv].insert(gu);
                }
            }
        }
        let labels = groups
            .iter()
            .map(|g| self.labels[g.first().unwrap()])
            .collect();
        Ok((
            Graph { n: k, adj, labels },
            ContractionMap {
                forward,
                inverse: groups,
            },
        ))
    }

    /// Independence number of `G[s]` by plain branching; meant for small sets
    /// (decomposition bags, dominating sets).
    pub fn alpha_of(&self, s: &VertexSet) -> usize {
        fn go(g: &Graph, avail: VertexSet) -> usize {
            match avail.first() {
                None => 0,
                Some(v) => {
                    let mut without = avail.clone();
                    without.remove(v);
                    let skip = go(g, without.clone());
                    without.remove_all(g.neighbors(v));
                    let take = 1 + go(g, without);
                    skip.max(take)
                }
            }
        }
        go(self, s.clone())
    }

    pub fn independence_number(&self) -> usize {
        self.alpha_of(&VertexSet::full(self.n))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Mapping produced by [`Graph::contract`]: `forward` sends original vertices
/// to super-vertices, `inverse` lists each super-vertex's originals.
#[derive(Clone, Debug)]
pub struct ContractionMap {
    pub forward: Vec<usize>,
    pub inverse: Vec<VertexSet>,
}

impl ContractionMap {
    /// Expands a set of super-vertices back to original vertices.
    pub fn expand(&self, s: &VertexSet, n_orig: usize) -> VertexSet {
        let mut out = VertexSet::empty(n_orig);
        for sv in s.iter() {
            out.union_with(&self.inverse[sv]);
        }
        out
    }
}
