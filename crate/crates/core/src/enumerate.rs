//! Combinatorial enumeration engines: maximal independent sets, minimal
//! vertex covers, dominating-set partitions, and small-structure finders.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Partition of a ground set X into a nonempty part A and an independent
/// part Xp.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition2 {
    pub a: VertexSet,
    pub xp: VertexSet,
}

/// Partition of X into nonempty A and B with no A-B edge plus an
/// independent Xp.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition3 {
    pub a: VertexSet,
    pub b: VertexSet,
    pub xp: VertexSet,
}

/// Side constraints for partition enumeration: pinned subsets that must end
/// up in A, B and Xp respectively.
#[derive(Clone, Debug)]
pub struct PartitionFilter {
    pub a_star: VertexSet,
    pub b_star: VertexSet,
    pub x_star: VertexSet,
}

impl PartitionFilter {
    pub fn none(n: usize) -> Self {
        PartitionFilter {
            a_star: VertexSet::empty(n),
            b_star: VertexSet::empty(n),
            x_star: VertexSet::empty(n),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.a_star.is_empty() && self.b_star.is_empty() && self.x_star.is_empty()
    }

    /// Orientation canonicalization is suspended once a side is pinned.
    fn pins_sides(&self) -> bool {
        !self.a_star.is_empty() || !self.b_star.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Maximal independent sets (pivoting Bron-Kerbosch on the complement)
// ---------------------------------------------------------------------------

struct MisFrame {
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    cands: Vec<usize>,
    i: usize,
    emit: bool,
}

/// Streams every maximal independent set exactly once, in a fixed order.
pub struct MaximalIndependentSets<'a> {
    g: &'a Graph,
    stack: Vec<MisFrame>,
}

impl<'a> MaximalIndependentSets<'a> {
    fn make_frame(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet) -> MisFrame {
        if p.is_empty() {
            let emit = x.is_empty();
            return MisFrame {
                r,
                p,
                x,
                cands: Vec::new(),
                i: 0,
                emit,
            };
        }
        // pivot: maximize |P \ N[u]| over P union X, ties to the smallest id
        let mut pivot = usize::MAX;
        let mut best = usize::MAX;
        for u in p.iter().chain(x.iter()) {
            let covered = p.intersection_len(g.neighbors(u)) + if p.contains(u) { 1 } else { 0 };
            let score = p.len() - covered; // |P \ N[u]|
            if pivot == usize::MAX || score > p.len() - best {
                pivot = u;
                best = covered;
            }
        }
        let mut branch = p.intersect(g.neighbors(pivot));
        if p.contains(pivot) {
            branch.insert(pivot);
        }
        MisFrame {
            r,
            p,
            x,
            cands: branch.to_vec(),
            i: 0,
            emit: false,
        }
    }
}

impl Iterator for MaximalIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let g = self.g;
            let top = self.stack.last_mut()?;
            if top.emit {
                top.emit = false;
                return Some(top.r.clone());
            }
            if top.i >= top.cands.len() {
                self.stack.pop();
                continue;
            }
            let v = top.cands[top.i];
            top.i += 1;
            if !top.p.contains(v) {
                continue;
            }
            let mut r = top.r.clone();
            r.insert(v);
            let closed = g.closed_neighbors(v);
            let p = top.p.minus(&closed);
            let x = top.x.minus(&closed);
            top.p.remove(v);
            top.x.insert(v);
            let frame = Self::make_frame(g, r, p, x);
            self.stack.push(frame);
        }
    }
}

pub fn maximal_independent_sets(g: &Graph) -> MaximalIndependentSets<'_> {
    let n = g.n();
    let root = MaximalIndependentSets::make_frame(
        g,
        VertexSet::empty(n),
        VertexSet::full(n),
        VertexSet::empty(n),
    );
    MaximalIndependentSets {
        g,
        stack: vec![root],
    }
}

/// Top-level branches of the enumeration, for sharding across threads. Each
/// returned enumerator covers a disjoint slice of the stream, in order.
pub fn maximal_independent_set_shards(g: &Graph) -> Vec<MaximalIndependentSets<'_>> {
    let n = g.n();
    let root = MaximalIndependentSets::make_frame(
        g,
        VertexSet::empty(n),
        VertexSet::full(n),
        VertexSet::empty(n),
    );
    let mut shards = Vec::new();
    let mut p = root.p.clone();
    let mut x = root.x.clone();
    if root.emit {
        // n == 0: single empty set
        return vec![MaximalIndependentSets {
            g,
            stack: vec![root],
        }];
    }
    for &v in &root.cands {
        let mut r = VertexSet::empty(n);
        r.insert(v);
        let closed = g.closed_neighbors(v);
        let frame = MaximalIndependentSets::make_frame(g, r, p.minus(&closed), x.minus(&closed));
        shards.push(MaximalIndependentSets {
            g,
            stack: vec![frame],
        });
        p.remove(v);
        x.insert(v);
    }
    shards
}

/// All maximal independent sets containing `seed`: enumerate on
/// `G - N[seed]` minus the seed itself, then re-add the seed.
pub fn maximal_independent_supersets(
    g: &Graph,
    seed: &VertexSet,
) -> Result<impl Iterator<Item = VertexSet>> {
    if !g.is_independent(seed) {
        return Err(Error::SeedNotIndependent);
    }
    let keep = g.closed_neighborhood(seed).complement();
    let (h, old_ids) = g.induced(&keep);
    let n = g.n();
    let seed = seed.clone();
    let sets: Vec<VertexSet> = maximal_independent_sets(&h).collect();
    Ok(sets.into_iter().map(move |s| {
        let mut out = seed.clone();
        for v in s.iter() {
            out.insert(old_ids[v]);
        }
        debug_assert_eq!(out.universe(), n);
        out
    }))
}

// ---------------------------------------------------------------------------
// Independent subsets
// ---------------------------------------------------------------------------

/// Streams independent subsets of `ground` (seeded with `seed`) in pre-order;
/// subsets larger than `limit` are not explored.
pub struct IndependentSubsets<'a> {
    g: &'a Graph,
    ground: Vec<usize>,
    limit: usize,
    stack: Vec<(VertexSet, usize)>,
}

impl Iterator for IndependentSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let (cur, start) = self.stack.pop()?;
        if cur.len() < self.limit {
            for j in (start..self.ground.len()).rev() {
                let v = self.ground[j];
                if self.g.neighbors(v).is_disjoint(&cur) {
                    let mut child = cur.clone();
                    child.insert(v);
                    self.stack.push((child, j + 1));
                }
            }
        }
        Some(cur)
    }
}

pub fn independent_subsets<'a>(
    g: &'a Graph,
    ground: &VertexSet,
    seed: VertexSet,
    limit: usize,
) -> IndependentSubsets<'a> {
    let stack = if g.is_independent(&seed) && seed.len() <= limit {
        vec![(seed, 0)]
    } else {
        Vec::new()
    };
    IndependentSubsets {
        g,
        ground: ground.to_vec(),
        limit,
        stack,
    }
}

// ---------------------------------------------------------------------------
// Minimal vertex covers
// ---------------------------------------------------------------------------

struct VcFrame {
    cover: VertexSet,
    forbidden: VertexSet,
}

/// Streams every inclusion-minimal vertex cover of size at most `k` exactly
/// once, via the pick-an-edge branching tree.
pub struct MinimalVertexCovers<'a> {
    g: &'a Graph,
    k: usize,
    stack: Vec<VcFrame>,
}

impl MinimalVertexCovers<'_> {
    fn first_uncovered_edge(&self, cover: &VertexSet) -> Option<(usize, usize)> {
        for u in 0..self.g.n() {
            if cover.contains(u) {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).minus(cover).iter().find(|&v| v > u) {
                return Some((u, v));
            }
        }
        None
    }

    fn is_minimal(&self, cover: &VertexSet) -> bool {
        cover
            .iter()
            .all(|c| !self.g.neighbors(c).minus(cover).is_empty())
    }
}

impl Iterator for MinimalVertexCovers<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let frame = self.stack.pop()?;
            match self.first_uncovered_edge(&frame.cover) {
                None => {
                    if self.is_minimal(&frame.cover) {
                        return Some(frame.cover);
                    }
                }
                Some((u, v)) => {
                    if frame.cover.len() == self.k {
                        continue;
                    }
                    // push B first so the take-u branch pops first
                    if !frame.forbidden.contains(v) {
                        let mut cover = frame.cover.clone();
                        cover.insert(v);
                        let mut forbidden = frame.forbidden.clone();
                        forbidden.insert(u);
                        self.stack.push(VcFrame { cover, forbidden });
                    }
                    if !frame.forbidden.contains(u) {
                        let mut cover = frame.cover.clone();
                        cover.insert(u);
                        self.stack.push(VcFrame {
                            cover,
                            forbidden: frame.forbidden.clone(),
                        });
                    }
                }
            }
        }
    }
}

pub fn minimal_vertex_covers_upto(g: &Graph, k: usize) -> MinimalVertexCovers<'_> {
    let n = g.n();
    MinimalVertexCovers {
        g,
        k,
        stack: vec![VcFrame {
            cover: VertexSet::empty(n),
            forbidden: VertexSet::empty(n),
        }],
    }
}

// ---------------------------------------------------------------------------
// Partitions of a dominating set
// ---------------------------------------------------------------------------

/// All (A, Xp) partitions of X with A nonempty and Xp independent. Since A is
/// forced to X \ Xp, this walks the independent subsets of X.
pub fn partitions2<'a>(g: &'a Graph, x: &VertexSet) -> impl Iterator<Item = Partition2> + 'a {
    partitions2_filtered(g, x, &PartitionFilter::none(g.n()))
}

pub fn partitions2_filtered<'a>(
    g: &'a Graph,
    x: &VertexSet,
    filter: &PartitionFilter,
) -> impl Iterator<Item = Partition2> + 'a {
    let x = x.clone();
    let ground = x.minus(&filter.a_star).minus(&filter.x_star);
    let ok = filter.x_star.is_subset_of(&x) && filter.a_star.is_subset_of(&x);
    let subsets = independent_subsets(g, &ground, filter.x_star.clone(), x.len());
    subsets.filter_map(move |xp| {
        if !ok {
            return None;
        }
        let a = x.minus(&xp);
        if a.is_empty() {
            return None;
        }
        Some(Partition2 { a, xp })
    })
}

enum P3Slot {
    A,
    B,
    Xp,
}

struct P3Frame {
    a: VertexSet,
    b: VertexSet,
    xp: VertexSet,
    idx: usize,
}

/// All (A, B, Xp) partitions of X with A, B nonempty, no A-B edge and Xp
/// independent. Without side pins the orientation is canonical: the smallest
/// vertex of A union B lands in A. Pinned filters suspend canonicalization.
pub struct Partitions3<'a> {
    g: &'a Graph,
    xs: Vec<usize>,
    filter: PartitionFilter,
    suspended: bool,
    stack: Vec<P3Frame>,
    count: u64,
}

impl Partitions3<'_> {
    pub fn emitted(&self) -> u64 {
        self.count
    }

    fn try_child(&mut self, frame: &P3Frame, v: usize, slot: P3Slot) {
        let g = self.g;
        match slot {
            P3Slot::A => {
                if g.neighbors(v).intersects(&frame.b) {
                    return;
                }
                if !self.suspended && frame.a.is_empty() && !frame.b.is_empty() {
                    return; // canonical: first side vertex goes to A
                }
                let mut a = frame.a.clone();
                a.insert(v);
                self.stack.push(P3Frame {
                    a,
                    b: frame.b.clone(),
                    xp: frame.xp.clone(),
                    idx: frame.idx + 1,
                });
            }
            P3Slot::B => {
                if g.neighbors(v).intersects(&frame.a) {
                    return;
                }
                if !self.suspended && frame.a.is_empty() {
                    return;
                }
                let mut b = frame.b.clone();
                b.insert(v);
                self.stack.push(P3Frame {
                    a: frame.a.clone(),
                    b,
                    xp: frame.xp.clone(),
                    idx: frame.idx + 1,
                });
            }
            P3Slot::Xp => {
                if g.neighbors(v).intersects(&frame.xp) {
                    return;
                }
                let mut xp = frame.xp.clone();
                xp.insert(v);
                self.stack.push(P3Frame {
                    a: frame.a.clone(),
                    b: frame.b.clone(),
                    xp,
                    idx: frame.idx + 1,
                });
            }
        }
    }
}

impl Iterator for Partitions3<'_> {
    type Item = Partition3;

    fn next(&mut self) -> Option<Partition3> {
        loop {
            let frame = self.stack.pop()?;
            if frame.idx == self.xs.len() {
                if !frame.a.is_empty() && !frame.b.is_empty() {
                    self.count += 1;
                    return Some(Partition3 {
                        a: frame.a,
                        b: frame.b,
                        xp: frame.xp,
                    });
                }
                continue;
            }
            let v = self.xs[frame.idx];
            // push in reverse of the visit order A, B, Xp
            if self.filter.a_star.contains(v) {
                self.try_child(&frame, v, P3Slot::A);
            } else if self.filter.b_star.contains(v) {
                self.try_child(&frame, v, P3Slot::B);
            } else if self.filter.x_star.contains(v) {
                self.try_child(&frame, v, P3Slot::Xp);
            } else {
                self.try_child(&frame, v, P3Slot::Xp);
                self.try_child(&frame, v, P3Slot::B);
                self.try_child(&frame, v, P3Slot::A);
            }
        }
    }
}

pub fn partitions3<'a>(
    g: &'a Graph,
    x: &VertexSet,
    filter: Option<&PartitionFilter>,
) -> Partitions3<'a> {
    let n = g.n();
    let filter = filter.cloned().unwrap_or_else(|| PartitionFilter::none(n));
    let suspended = filter.pins_sides();
    Partitions3 {
        g,
        xs: x.to_vec(),
        suspended,
        filter,
        stack: vec![P3Frame {
            a: VertexSet::empty(n),
            b: VertexSet::empty(n),
            xp: VertexSet::empty(n),
            idx: 0,
        }],
        count: 0,
    }
}

// ---------------------------------------------------------------------------
// Bounded-independence partition enumeration
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum BoundedPartition {
    Two(Partition2),
    Three(Partition3),
}

/// Enumerates the same families as [`partitions2`] and [`partitions3`] in
/// O(|X|^c 2^c) emissions, assuming the independence number of G[X] is at
/// most `c`. The bound is checked lazily: the walk stops with an error as
/// soon as an independent set of size c+1 surfaces.
pub struct BoundedAlphaPartitions<'a> {
    g: &'a Graph,
    x: VertexSet,
    c: usize,
    filter: PartitionFilter,
    subsets: IndependentSubsets<'a>,
    pending: Vec<BoundedPartition>,
    fused: bool,
    count: u64,
}

impl BoundedAlphaPartitions<'_> {
    pub fn emitted(&self) -> u64 {
        self.count
    }

    fn expand(&mut self, xp: VertexSet) -> Result<()> {
        let rest = self.x.minus(&xp);
        let comps = self.g.components(&rest.complement());
        if comps.len() > self.c {
            let witness: Vec<usize> = comps.iter().map(|c| c.first().unwrap()).collect();
            return Err(Error::AlphaBoundExceeded {
                bound: self.c,
                witness,
            });
        }
        let f = &self.filter;
        // Partition2: A = X \ Xp, valid only without a pinned B side.
        if !rest.is_empty() && f.b_star.is_empty() && f.a_star.is_subset_of(&rest) {
            self.pending.push(BoundedPartition::Two(Partition2 {
                a: rest.clone(),
                xp: xp.clone(),
            }));
        }
        if comps.len() >= 2 {
            // classify components against the pinned sides
            let mut forced_a = Vec::new();
            let mut forced_b = Vec::new();
            let mut free = Vec::new();
            let mut consistent = true;
            for comp in &comps {
                let in_a = comp.intersects(&f.a_star);
                let in_b = comp.intersects(&f.b_star);
                match (in_a, in_b) {
                    (true, true) => {
                        consistent = false;
                        break;
                    }
                    (true, false) => forced_a.push(comp.clone()),
                    (false, true) => forced_b.push(comp.clone()),
                    (false, false) => free.push(comp.clone()),
                }
            }
            if consistent {
                let suspended = f.pins_sides();
                if !suspended {
                    // canonical: the component holding the minimum vertex is in A
                    forced_a.push(free.remove(0));
                }
                let n = self.g.n();
                for mask in 0..1u64 << free.len() {
                    let mut a = VertexSet::empty(n);
                    let mut b = VertexSet::empty(n);
                    for s in &forced_a {
                        a.union_with(s);
                    }
                    for s in &forced_b {
                        b.union_with(s);
                    }
                    for (i, s) in free.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            b.union_with(s);
                        } else {
                            a.union_with(s);
                        }
                    }
                    if !a.is_empty() && !b.is_empty() {
                        self.pending.push(BoundedPartition::Three(Partition3 {
                            a,
                            b,
                            xp: xp.clone(),
                        }));
                    }
                }
            }
        }
        self.pending.reverse();
        Ok(())
    }
}

impl Iterator for BoundedAlphaPartitions<'_> {
    type Item = Result<BoundedPartition>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.fused {
                return None;
            }
            if let Some(p) = self.pending.pop() {
                self.count += 1;
                return Some(Ok(p));
            }
            let xp = self.subsets.next()?;
            if xp.len() > self.c {
                self.fused = true;
                return Some(Err(Error::AlphaBoundExceeded {
                    bound: self.c,
                    witness: xp.to_vec(),
                }));
            }
            if let Err(e) = self.expand(xp) {
                self.fused = true;
                return Some(Err(e));
            }
        }
    }
}

pub fn bounded_alpha_partitions<'a>(
    g: &'a Graph,
    x: &VertexSet,
    c: usize,
) -> BoundedAlphaPartitions<'a> {
    bounded_alpha_partitions_filtered(g, x, c, &PartitionFilter::none(g.n()))
}

pub fn bounded_alpha_partitions_filtered<'a>(
    g: &'a Graph,
    x: &VertexSet,
    c: usize,
    filter: &PartitionFilter,
) -> BoundedAlphaPartitions<'a> {
    let ground = x
        .minus(&filter.a_star)
        .minus(&filter.b_star)
        .minus(&filter.x_star);
    let subsets = independent_subsets(g, &ground, filter.x_star.clone(), c + 1);
    BoundedAlphaPartitions {
        g,
        x: x.clone(),
        c,
        filter: filter.clone(),
        subsets,
        pending: Vec::new(),
        fused: false,
        count: 0,
    }
}

// ---------------------------------------------------------------------------
// Small-structure finders
// ---------------------------------------------------------------------------

/// Lexicographically first triangle (u, v, w) with u < v < w.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for u in 0..g.n() {
        for v in g.neighbors(u).iter() {
            if v <= u {
                continue;
            }
            let common = g.neighbors(u).intersect(g.neighbors(v));
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Smallest-id vertex whose neighborhood is independent, i.e. a vertex in no
/// triangle.
pub fn vertex_in_no_triangle(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.is_independent(g.neighbors(v)))
}

/// First induced path on five vertices in DFS order, with the smaller
/// endpoint first.
pub fn find_induced_p5(g: &Graph) -> Option<[usize; 5]> {
    find_induced_p5_avoiding(g, &VertexSet::empty(g.n()))
}

/// Induced-P5 search restricted to `G - removed`.
pub fn find_induced_p5_avoiding(g: &Graph, removed: &VertexSet) -> Option<[usize; 5]> {
    let n = g.n();
    for a in 0..n {
        if removed.contains(a) {
            continue;
        }
        for b in g.neighbors(a).minus(removed).iter() {
            let na = g.neighbors(a);
            for c in g.neighbors(b).minus(removed).iter() {
                if c == a || na.contains(c) {
                    continue;
                }
                let nb = g.neighbors(b);
                for d in g.neighbors(c).minus(removed).iter() {
                    if d == a || d == b || na.contains(d) || nb.contains(d) {
                        continue;
                    }
                    let nc = g.neighbors(c);
                    for e in g.neighbors(d).minus(removed).iter() {
                        if e == a || e == b || e == c {
                            continue;
                        }
                        if na.contains(e) || nb.contains(e) || nc.contains(e) {
                            continue;
                        }
                        if a < e {
                            return Some([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// First set of `t` pairwise nonadjacent disjoint edges (an induced tK2),
/// as a flat vertex list.
pub fn find_induced_tk2(g: &Graph, t: usize) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        edges: &[(usize, usize)],
        start: usize,
        blocked: &VertexSet,
        chosen: &mut Vec<usize>,
        t: usize,
    ) -> bool {
        if chosen.len() == 2 * t {
            return true;
        }
        for (i, &(u, v)) in edges.iter().enumerate().skip(start) {
            if blocked.contains(u) || blocked.contains(v) {
                continue;
            }
            let mut blocked2 = blocked.clone();
            blocked2.union_with(&g.closed_neighbors(u));
            blocked2.union_with(&g.closed_neighbors(v));
            chosen.push(u);
            chosen.push(v);
            if go(g, edges, i + 1, &blocked2, chosen, t) {
                return true;
            }
            chosen.pop();
            chosen.pop();
        }
        false
    }
    let edges = g.edges();
    let mut chosen = Vec::new();
    if go(g, &edges, 0, &VertexSet::empty(g.n()), &mut chosen, t) {
        Some(chosen)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{clique, cycle, path};

    fn collect_mis(g: &Graph) -> Vec<VertexSet> {
        maximal_independent_sets(g).collect()
    }

    /// Brute-force maximal independent sets for cross-checking.
    pub(crate) fn brute_mis(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 0..1u64 << n {
            let s = VertexSet::from_slice(
                n,
                &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
            );
            if !g.is_independent(&s) {
                continue;
            }
            let maximal = (0..n).all(|v| s.contains(v) || g.neighbors(v).intersects(&s));
            if maximal {
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn mis_k4_singletons() {
        let sets = collect_mis(&clique(4));
        assert_eq!(sets.len(), 4);
        assert!(sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn mis_c5_five_pairs() {
        let sets = collect_mis(&cycle(5));
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));
        let mut brute = brute_mis(&cycle(5));
        let mut got = sets.clone();
        brute.sort();
        got.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn mis_triangle_union_counts() {
        // 10 disjoint triangles: 3^10 maximal independent sets
        let mut edges = Vec::new();
        for t in 0..10 {
            let b = 3 * t;
            edges.extend_from_slice(&[(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        let g = Graph::from_edges(30, &edges);
        assert_eq!(maximal_independent_sets(&g).count(), 59049);
    }

    #[test]
    fn mis_matches_brute_force_small() {
        for seed in 0..30u64 {
            let g = crate::generate::gnp_connected(3 + (seed % 8) as usize, 0.4, seed)
                .unwrap_or_else(|_| path(4));
            let mut got = collect_mis(&g);
            let mut want = brute_mis(&g);
            got.sort();
            want.sort();
            assert_eq!(got, want, "seed {seed}");
        }
    }

    #[test]
    fn mis_shards_cover_stream() {
        let g = crate::generate::gnp_connected(9, 0.4, 3).unwrap();
        let serial: Vec<VertexSet> = collect_mis(&g);
        let sharded: Vec<VertexSet> = maximal_independent_set_shards(&g)
            .into_iter()
            .flatten()
            .collect();
        assert_eq!(serial, sharded);
    }

    #[test]
    fn supersets_examples() {
        let g = cycle(4);
        let got: Vec<_> = maximal_independent_supersets(&g, &VertexSet::singleton(4, 0))
            .unwrap()
            .collect();
        assert_eq!(got, vec![VertexSet::from_slice(4, &[0, 2])]);

        // empty seed degenerates to the full enumeration
        let g = path(4);
        let a: Vec<_> = maximal_independent_supersets(&g, &VertexSet::empty(4))
            .unwrap()
            .collect();
        let b: Vec<_> = collect_mis(&g);
        assert_eq!(a, b);

        // P4 seeded with an endpoint
        let mut got: Vec<_> = maximal_independent_supersets(&g, &VertexSet::singleton(4, 0))
            .unwrap()
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                VertexSet::from_slice(4, &[0, 2]),
                VertexSet::from_slice(4, &[0, 3])
            ]
        );

        assert!(
            maximal_independent_supersets(&path(2), &VertexSet::from_slice(2, &[0, 1])).is_err()
        );
    }

    #[test]
    fn vertex_covers_examples() {
        // P3: only {b}
        let got: Vec<_> = minimal_vertex_covers_upto(&path(3), 1).collect();
        assert_eq!(got, vec![VertexSet::singleton(3, 1)]);

        // K4 has minimum cover 3
        assert_eq!(minimal_vertex_covers_upto(&clique(4), 2).count(), 0);

        // C6 with k=3: the two alternating covers
        let mut got: Vec<_> = minimal_vertex_covers_upto(&cycle(6), 3).collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                VertexSet::from_slice(6, &[0, 2, 4]),
                VertexSet::from_slice(6, &[1, 3, 5])
            ]
        );
    }

    #[test]
    fn vertex_covers_are_minimal_and_unique() {
        for seed in 0..20u64 {
            let g = crate::generate::gnp_connected(7, 0.5, seed).unwrap();
            let covers: Vec<_> = minimal_vertex_covers_upto(&g, 5).collect();
            let mut sorted = covers.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), covers.len(), "duplicate cover emitted");
            for c in &covers {
                // really a cover
                assert!(g
                    .edges()
                    .iter()
                    .all(|&(u, v)| c.contains(u) || c.contains(v)));
                // inclusion-minimal: complement of each member has a private edge
                for v in c.iter() {
                    let mut smaller = c.clone();
                    smaller.remove(v);
                    assert!(!g
                        .edges()
                        .iter()
                        .all(|&(a, b)| smaller.contains(a) || smaller.contains(b)));
                }
                // complement is independent
                assert!(g.is_independent(&c.complement()));
            }
        }
    }

    #[test]
    fn partitions2_examples() {
        // X = {u, v} with uv an edge: 3 partitions
        let g = path(2);
        let got: Vec<_> = partitions2(&g, &VertexSet::full(2)).collect();
        assert_eq!(got.len(), 3);
        assert!(got
            .iter()
            .all(|p| !p.a.is_empty() && g.is_independent(&p.xp)));

        // X a triangle: direct listing by definition gives 4
        let g = clique(3);
        let got: Vec<_> = partitions2(&g, &VertexSet::full(3)).collect();
        assert_eq!(got.len(), 4);

        // X empty: empty stream
        let g = path(2);
        assert_eq!(partitions2(&g, &VertexSet::empty(2)).count(), 0);
    }

    #[test]
    fn partitions3_examples() {
        // X = {u, v} nonadjacent: exactly one canonical partition
        let g = Graph::from_edges(2, &[]);
        let got: Vec<_> = partitions3(&g, &VertexSet::full(2), None).collect();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].a.to_vec(), vec![0]);
        assert_eq!(got[0].b.to_vec(), vec![1]);

        // X a triangle: no way to split a clique
        assert_eq!(
            partitions3(&clique(3), &VertexSet::full(3), None).count(),
            0
        );

        // X = {u, v, w} with only uv an edge
        let g = Graph::from_edges(3, &[(0, 1)]);
        let mut got: Vec<_> = partitions3(&g, &VertexSet::full(3), None).collect();
        got.sort_by_key(|p| (p.a.to_vec(), p.b.to_vec()));
        assert_eq!(got.len(), 3);
        for p in &got {
            assert!(p.b.to_vec() == vec![2] || p.a.to_vec() == vec![0, 1]);
            assert!(g.is_independent(&p.xp));
        }
    }

    #[test]
    fn partitions3_xp_is_separator_within_x() {
        for seed in 0..10u64 {
            let g = crate::generate::gnp_connected(7, 0.4, seed).unwrap();
            let x = VertexSet::from_slice(7, &[0, 2, 3, 5, 6]);
            for p in partitions3(&g, &x, None) {
                let (gx, ids) = g.induced(&x);
                let back: std::collections::HashMap<usize, usize> =
                    ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let to_local = |s: &VertexSet| {
                    VertexSet::from_slice(gx.n(), &s.iter().map(|v| back[&v]).collect::<Vec<_>>())
                };
                let xp = to_local(&p.xp);
                assert!(gx.is_independent(&xp));
                assert!(gx.separates(&xp, &to_local(&p.a), &to_local(&p.b)));
            }
        }
    }

    #[test]
    fn pinned_filters_enumerate_mirrored_orientations() {
        for seed in 0..10u64 {
            let g = crate::generate::gnp_connected(7, 0.4, seed).unwrap();
            let x = VertexSet::from_slice(7, &[0, 1, 2, 4, 5]);
            let fwd = PartitionFilter {
                a_star: VertexSet::singleton(7, 0),
                b_star: VertexSet::singleton(7, 4),
                x_star: VertexSet::empty(7),
            };
            let rev = PartitionFilter {
                a_star: VertexSet::singleton(7, 4),
                b_star: VertexSet::singleton(7, 0),
                x_star: VertexSet::empty(7),
            };
            let mut a: Vec<_> = partitions3(&g, &x, Some(&fwd))
                .map(|p| (p.a.to_vec(), p.b.to_vec(), p.xp.to_vec()))
                .collect();
            let mut b: Vec<_> = partitions3(&g, &x, Some(&rev))
                .map(|p| (p.b.to_vec(), p.a.to_vec(), p.xp.to_vec()))
                .collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "seed {seed}");
        }
    }

    #[test]
    fn bounded_alpha_clique_and_p3() {
        // clique with c = 1
        let g = clique(5);
        let items: Vec<_> = bounded_alpha_partitions(&g, &VertexSet::full(5), 1)
            .map(|r| r.unwrap())
            .collect();
        let twos = items
            .iter()
            .filter(|p| matches!(p, BoundedPartition::Two(_)))
            .count();
        let threes = items.len() - twos;
        assert_eq!(threes, 0);
        assert_eq!(twos, 6); // Xp = empty set or one of 5 singletons

        // P3 with c = 2: exactly one Partition3
        let g = path(3);
        let items: Vec<_> = bounded_alpha_partitions(&g, &VertexSet::full(3), 2)
            .map(|r| r.unwrap())
            .collect();
        let threes: Vec<_> = items
            .iter()
            .filter_map(|p| match p {
                BoundedPartition::Three(t) => Some(t.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(threes.len(), 1);
        assert_eq!(threes[0].a.to_vec(), vec![0]);
        assert_eq!(threes[0].b.to_vec(), vec![2]);
        assert_eq!(threes[0].xp.to_vec(), vec![1]);
    }

    #[test]
    fn bounded_alpha_violation_reported() {
        // independent triple inside X with c = 1
        let g = Graph::from_edges(3, &[]);
        let items: Vec<_> = bounded_alpha_partitions(&g, &VertexSet::full(3), 1).collect();
        assert!(items.iter().any(|r| r.is_err()));
    }

    #[test]
    fn bounded_alpha_equals_plain_families() {
        for seed in 0..40u64 {
            let n = 5 + (seed % 4) as usize;
            let g = crate::generate::gnp_connected(n, 0.5, seed).unwrap();
            for mask in 1..1u32 << n {
                let x = VertexSet::from_slice(
                    n,
                    &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
                );
                let c = g.alpha_of(&x);
                let mut plain: Vec<String> = partitions2(&g, &x)
                    .map(|p| format!("2|{:?}|{:?}", p.a.to_vec(), p.xp.to_vec()))
                    .chain(partitions3(&g, &x, None).map(|p| {
                        format!(
                            "3|{:?}|{:?}|{:?}",
                            p.a.to_vec(),
                            p.b.to_vec(),
                            p.xp.to_vec()
                        )
                    }))
                    .collect();
                let mut bounded: Vec<String> = bounded_alpha_partitions(&g, &x, c)
                    .map(|r| r.expect("alpha bound holds"))
                    .map(|p| match p {
                        BoundedPartition::Two(p) => {
                            format!("2|{:?}|{:?}", p.a.to_vec(), p.xp.to_vec())
                        }
                        BoundedPartition::Three(p) => format!(
                            "3|{:?}|{:?}|{:?}",
                            p.a.to_vec(),
                            p.b.to_vec(),
                            p.xp.to_vec()
                        ),
                    })
                    .collect();
                plain.sort();
                bounded.sort();
                assert_eq!(plain, bounded, "seed {seed} mask {mask:b}");
            }
        }
    }

    #[test]
    fn structure_finders() {
        assert_eq!(find_triangle(&cycle(5)), None);
        assert_eq!(find_induced_p5(&cycle(5)), None);
        assert_eq!(find_induced_p5(&path(5)), Some([0, 1, 2, 3, 4]));
        assert_eq!(find_triangle(&clique(4)), Some([0, 1, 2]));
        assert_eq!(vertex_in_no_triangle(&clique(4)), None);
        assert_eq!(vertex_in_no_triangle(&cycle(5)), Some(0));
        assert!(find_induced_tk2(&cycle(6), 2).is_some());
        assert!(find_induced_tk2(&cycle(4), 2).is_none());
        assert!(find_induced_tk2(&clique(6), 2).is_none());
    }
}
