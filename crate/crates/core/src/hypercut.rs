//! Hypergraph global minimum edge cut (Queyranne-style pendant pairs over
//! the symmetric cut function) and the shrink-to-minimum step it powers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Hypergraph over `0..vertex_count`. `edge_tags[i]` back-references the
/// graph vertex that hyperedge `i` encodes when built by
/// [`shrink_independent_cutset`].
#[derive(Clone, Debug)]
pub struct Hypergraph {
    pub vertex_count: usize,
    pub edges: Vec<VertexSet>,
    pub edge_tags: Vec<usize>,
}

impl Hypergraph {
    pub fn new(vertex_count: usize, edges: Vec<VertexSet>) -> Hypergraph {
        let tags = (0..edges.len()).collect();
        Hypergraph {
            vertex_count,
            edges,
            edge_tags: tags,
        }
    }

    fn crossing(&self, side: &VertexSet) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.intersects(side) && !e.is_subset_of(side))
            .map(|(i, _)| i)
            .collect()
    }

    fn cut_value(&self, side: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|e| e.intersects(side) && !e.is_subset_of(side))
            .count()
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.vertex_count, 0);
        loop {
            let mut grew = false;
            for e in &self.edges {
                if e.intersects(&seen) && !e.is_subset_of(&seen) {
                    seen.union_with(e);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        seen.len() == self.vertex_count
    }

    fn component_of_zero(&self) -> VertexSet {
        let mut seen = VertexSet::singleton(self.vertex_count, 0);
        loop {
            let mut grew = false;
            for e in &self.edges {
                if e.intersects(&seen) && !e.is_subset_of(&seen) {
                    seen.union_with(e);
                    grew = true;
                }
            }
            if !grew {
                return seen;
            }
        }
    }
}

/// Global minimum edge cut: a bipartition minimizing the number of
/// hyperedges meeting both sides. Returns `(value, side, crossing edge
/// indices)`; among optimal cuts the first one found under the fixed
/// 0..n vertex ordering is returned.
pub fn min_edge_cut(h: &Hypergraph) -> Result<(usize, VertexSet, Vec<usize>)> {
    let n = h.vertex_count;
    if n < 2 {
        return Err(Error::CutTooSmall);
    }
    if !h.is_connected() {
        let side = h.component_of_zero();
        return Ok((0, side, Vec::new()));
    }

    // classes of original vertices, kept sorted by minimum member
    let mut classes: Vec<VertexSet> = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
    let mut best: Option<(usize, VertexSet)> = None;

    while classes.len() > 1 {
        // pendant-pair sweep: grow W from the first class, always appending
        // the class minimizing f(W + u) - f({u})
        let m = classes.len();
        let mut in_w = vec![false; m];
        in_w[0] = true;
        let mut w_set = classes[0].clone();
        let mut order = vec![0usize];
        for _ in 1..m {
            let mut pick = usize::MAX;
            let mut pick_key = isize::MAX;
            for (i, c) in classes.iter().enumerate() {
                if in_w[i] {
                    continue;
                }
                let joined = w_set.union(c);
                let key = h.cut_value(&joined) as isize - h.cut_value(c) as isize;
                if key < pick_key {
                    pick_key = key;
                    pick = i;
                }
            }
            in_w[pick] = true;
            w_set.union_with(&classes[pick]);
            order.push(pick);
        }
        let t = order[m - 1];
        let s = order[m - 2];
        let side = classes[t].clone();
        let value = h.cut_value(&side);
        if best.as_ref().is_none_or(|(bv, _)| value < *bv) {
            best = Some((value, side));
        }
        // merge the pendant pair
        let (lo, hi) = (s.min(t), s.max(t));
        let merged = classes[lo].union(&classes[hi]);
        classes.remove(hi);
        classes[lo] = merged;
        classes.sort_by_key(|c| c.first().unwrap());
    }

    let (value, side) = best.unwrap();
    let cut_edges = h.crossing(&side);
    debug_assert_eq!(cut_edges.len(), value);
    Ok((value, side, cut_edges))
}

/// The smallest independent cutset of `g` contained in the independent
/// cutset `sp`: hypergraph vertices are the components of `G - sp`, and the
/// hyperedge tagged by `v` in `sp` collects the components adjacent to `v`.
/// Crossing hyperedges of a minimum cut name exactly the vertices to keep.
pub fn shrink_independent_cutset(g: &Graph, sp: &VertexSet) -> Result<VertexSet> {
    g.require_connected()?;
    if !g.is_independent(sp) || !g.is_cutset(sp) {
        return Err(Error::NotIndependentCutset);
    }
    let comps = g.components(sp);
    let c = comps.len();
    let mut edges = Vec::new();
    let mut tags = Vec::new();
    for v in sp.iter() {
        let mut e = VertexSet::empty(c);
        for (i, comp) in comps.iter().enumerate() {
            if g.neighbors(v).intersects(comp) {
                e.insert(i);
            }
        }
        debug_assert!(!e.is_empty());
        edges.push(e);
        tags.push(v);
    }
    let h = Hypergraph {
        vertex_count: c,
        edges,
        edge_tags: tags,
    };
    let (_, _, cut_edges) = min_edge_cut(&h)?;
    let mut s = VertexSet::empty(g.n());
    for e in cut_edges {
        s.insert(h.edge_tags[e]);
    }
    if !g.is_independent(&s) || !g.is_cutset(&s) {
        return Err(Error::Internal(
            "shrunk set is not an independent cutset".into(),
        ));
    }
    Ok(s)
}
