//! Chordal tooling (maximum cardinality search, clique trees), nice tree
//! decompositions, refined decompositions with a residual independence
//! number, and the cut[t, S, A, B] dynamic program.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::vset::VertexSet;
use std::collections::HashMap;

// ---------------------------------------------------------------------------
// Chordality
// ---------------------------------------------------------------------------

/// Maximum cardinality search; `Ok` carries a perfect elimination ordering
/// (first vertex eliminated first), `Err` a chordless cycle of length >= 4.
pub fn recognize_chordal(g: &Graph) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        picked[v] = true;
        visit.push(v);
        for w in g.neighbors(v).iter() {
            if !picked[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    let peo = visit;

    // verify: later neighbors of each vertex must form a clique, checked
    // through the earliest later neighbor
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &peo {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&m) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &u in &later {
            if u != m && !g.has_edge(m, u) {
                return Err(find_hole(g));
            }
        }
    }
    Ok(peo)
}

/// Locates a chordless cycle of length at least four in a non-chordal graph:
/// some vertex has two nonadjacent neighbors joined by a path avoiding the
/// rest of its closed neighborhood.
fn find_hole(g: &Graph) -> Vec<usize> {
    let n = g.n();
    for x in 0..n {
        let nbrs = g.neighbors(x).to_vec();
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in nbrs.iter().skip(i + 1) {
                if g.has_edge(y, z) {
                    continue;
                }
                let mut blocked = g.closed_neighbors(x);
                blocked.remove(y);
                blocked.remove(z);
                if let Some(path) = shortest_path_avoiding(g, y, z, &blocked) {
                    let mut hole = vec![x];
                    hole.extend(path);
                    return hole;
                }
            }
        }
    }
    panic!("find_hole called on a chordal graph");
}

fn shortest_path_avoiding(
    g: &Graph,
    from: usize,
    to: usize,
    blocked: &VertexSet,
) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = blocked.clone();
    seen.insert(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).minus(&seen).iter() {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Tree decompositions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks the three decomposition axioms plus tree-ness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let nb = self.bags.len();
        if nb == 0 {
            return Err(Error::InvalidDecomposition("no nodes".into()));
        }
        if self.edges.len() + 1 != nb {
            return Err(Error::InvalidDecomposition(format!(
                "{} edges for {} nodes",
                self.edges.len(),
                nb
            )));
        }
        let adj = self.adjacency();
        // connectivity of the tree
        let mut seen = vec![false; nb];
        let mut queue = vec![self.root];
        seen[self.root] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push(w);
                }
            }
        }
        if reached != nb {
            return Err(Error::InvalidDecomposition("tree is disconnected".into()));
        }
        // (T1) every vertex in some bag
        let mut covered = VertexSet::empty(g.n());
        for b in &self.bags {
            covered.union_with(b);
        }
        if covered.len() != g.n() {
            return Err(Error::InvalidDecomposition("bags do not cover V".into()));
        }
        // (T2) every edge in some bag
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(Error::InvalidDecomposition(format!(
                    "edge ({u}, {v}) in no bag"
                )));
            }
        }
        // (T3) each vertex's nodes induce a subtree
        for v in 0..g.n() {
            let holders: Vec<usize> = (0..nb).filter(|&t| self.bags[t].contains(v)).collect();
            if holders.is_empty() {
                continue;
            }
            let mut seen = vec![false; nb];
            let mut queue = vec![holders[0]];
            seen[holders[0]] = true;
            let mut count = 1;
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if !seen[w] && self.bags[w].contains(v) {
                        seen[w] = true;
                        count += 1;
                        queue.push(w);
                    }
                }
            }
            if count != holders.len() {
                return Err(Error::InvalidDecomposition(format!(
                    "vertex {v} induces a disconnected subtree"
                )));
            }
        }
        Ok(())
    }
}

/// Clique tree of a connected chordal graph: bags are exactly the maximal
/// cliques, joined by a maximum-weight spanning tree on intersection sizes.
pub fn clique_tree(g: &Graph) -> Result<TreeDecomposition> {
    g.require_connected()?;
    let peo = recognize_chordal(g).map_err(|hole| Error::NotChordal { hole })?;
    clique_tree_of_chordal(g, &peo)
}

fn clique_tree_of_chordal(g: &Graph, peo: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Ok(TreeDecomposition {
            bags: vec![VertexSet::empty(0)],
            edges: Vec::new(),
            root: 0,
        });
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    // candidate cliques {v} + later neighbors, keep the maximal ones
    let mut cliques: Vec<VertexSet> = Vec::new();
    for &v in peo {
        let mut c = VertexSet::singleton(n, v);
        for u in g.neighbors(v).iter() {
            if pos[u] > pos[v] {
                c.insert(u);
            }
        }
        cliques.push(c);
    }
    cliques.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut maximal: Vec<VertexSet> = Vec::new();
    for c in cliques {
        if !maximal.iter().any(|m| c.is_subset_of(m)) {
            maximal.push(c);
        }
    }
    maximal.sort_by_key(|c| c.to_vec());
    // maximum-weight spanning tree over pairwise intersections (Prim)
    let nb = maximal.len();
    let mut in_tree = vec![false; nb];
    in_tree[0] = true;
    let mut edges = Vec::new();
    for _ in 1..nb {
        let mut best: Option<(usize, usize, usize)> = None; // (weight, from, to)
        for a in 0..nb {
            if !in_tree[a] {
                continue;
            }
            for t in 0..nb {
                if in_tree[t] {
                    continue;
                }
                let w = maximal[a].intersection_len(&maximal[t]);
                let better = match best {
                    None => true,
                    Some((bw, bf, bt)) => w > bw || (w == bw && (a, t) < (bf, bt)),
                };
                if better {
                    best = Some((w, a, t));
                }
            }
        }
        let (_, a, t) = best.expect("connected chordal graph yields a connected clique graph");
        in_tree[t] = true;
        edges.push((a, t));
    }
    let td = TreeDecomposition {
        bags: maximal,
        edges,
        root: 0,
    };
    td.validate(g)?;
    Ok(td)
}

/// Clique forest for possibly disconnected chordal graphs, linked into one
/// tree so the result is still a valid decomposition.
fn clique_tree_general(g: &Graph) -> Result<TreeDecomposition> {
    if g.n() == 0 {
        return Ok(TreeDecomposition {
            bags: vec![VertexSet::empty(0)],
            edges: Vec::new(),
            root: 0,
        });
    }
    let comps = g.components(&VertexSet::empty(g.n()));
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut first_nodes = Vec::new();
    for comp in comps {
        let (sub, old_ids) = g.induced(&comp);
        let peo = recognize_chordal(&sub).map_err(|hole| Error::NotChordal {
            hole: hole.into_iter().map(|v| old_ids[v]).collect(),
        })?;
        let td = clique_tree_of_chordal(&sub, &peo)?;
        let offset = bags.len();
        first_nodes.push(offset);
        for b in &td.bags {
            let mut bag = VertexSet::empty(g.n());
            for v in b.iter() {
                bag.insert(old_ids[v]);
            }
            bags.push(bag);
        }
        for &(a, b) in &td.edges {
            edges.push((a + offset, b + offset));
        }
    }
    for w in first_nodes.windows(2) {
        edges.push((w[0], w[1]));
    }
    Ok(TreeDecomposition {
        bags,
        edges,
        root: 0,
    })
}

// ---------------------------------------------------------------------------
// Nice decompositions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub kind: Vec<NodeKind>,
    pub children: Vec<Vec<usize>>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Post-order traversal of node indices.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                out.push(t);
            } else {
                stack.push((t, true));
                for &c in &self.children[t] {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Checks the niceness axioms on top of the decomposition axioms.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let td = TreeDecomposition {
            bags: self.bags.clone(),
            edges: (0..self.len())
                .flat_map(|t| self.children[t].iter().map(move |&c| (t, c)))
                .collect(),
            root: self.root,
        };
        td.validate(g)?;
        if !self.bags[self.root].is_empty() {
            return Err(Error::InvalidDecomposition("root bag not empty".into()));
        }
        for t in 0..self.len() {
            match &self.kind[t] {
                NodeKind::Leaf => {
                    if !self.children[t].is_empty() || !self.bags[t].is_empty() {
                        return Err(Error::InvalidDecomposition(format!(
                            "leaf node {t} malformed"
                        )));
                    }
                }
                NodeKind::Introduce(v) => {
                    let [c] = self.children[t][..] else {
                        return Err(Error::InvalidDecomposition(format!(
                            "introduce node {t} needs one child"
                        )));
                    };
                    let mut expect = self.bags[c].clone();
                    if expect.contains(*v) {
                        return Err(Error::InvalidDecomposition(format!(
                            "introduce node {t} re-adds {v}"
                        )));
                    }
                    expect.insert(*v);
                    if expect != self.bags[t] {
                        return Err(Error::InvalidDecomposition(format!(
                            "introduce node {t} bag mismatch"
                        )));
                    }
                }
                NodeKind::Forget(w) => {
                    let [c] = self.children[t][..] else {
                        return Err(Error::InvalidDecomposition(format!(
                            "forget node {t} needs one child"
                        )));
                    };
                    if !self.bags[c].contains(*w) {
                        return Err(Error::InvalidDecomposition(format!(
                            "forget node {t} drops absent {w}"
                        )));
                    }
                    let mut expect = self.bags[c].clone();
                    expect.remove(*w);
                    if expect != self.bags[t] {
                        return Err(Error::InvalidDecomposition(format!(
                            "forget node {t} bag mismatch"
                        )));
                    }
                }
                NodeKind::Join => {
                    let [c1, c2] = self.children[t][..] else {
                        return Err(Error::InvalidDecomposition(format!(
                            "join node {t} needs two children"
                        )));
                    };
                    if self.bags[c1] != self.bags[t] || self.bags[c2] != self.bags[t] {
                        return Err(Error::InvalidDecomposition(format!(
                            "join node {t} children bags differ"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

struct NiceBuilder {
    bags: Vec<VertexSet>,
    kind: Vec<NodeKind>,
    children: Vec<Vec<usize>>,
}

impl NiceBuilder {
    fn push(&mut self, bag: VertexSet, kind: NodeKind, children: Vec<usize>) -> usize {
        self.bags.push(bag);
        self.kind.push(kind);
        self.children.push(children);
        self.bags.len() - 1
    }

    /// Chain from `below` (top bag `from`) to bag `to`: forget the surplus,
    /// then introduce the missing, ascending ids.
    fn adapt(&mut self, mut below: usize, from: &VertexSet, to: &VertexSet) -> usize {
        let mut bag = from.clone();
        for w in from.minus(to).iter() {
            bag.remove(w);
            below = self.push(bag.clone(), NodeKind::Forget(w), vec![below]);
        }
        for v in to.minus(from).iter() {
            bag.insert(v);
            below = self.push(bag.clone(), NodeKind::Introduce(v), vec![below]);
        }
        below
    }
}

/// Rewrites any valid tree decomposition into a nice one of the same width:
/// empty leaf and root bags, and only introduce, forget and join nodes.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    td.validate(g)?;
    let adj = td.adjacency();
    let mut b = NiceBuilder {
        bags: Vec::new(),
        kind: Vec::new(),
        children: Vec::new(),
    };

    // iterative pre-order to find parents, then build bottom-up
    let nb = td.bags.len();
    let mut parent = vec![usize::MAX; nb];
    let mut order = Vec::new();
    let mut stack = vec![td.root];
    let mut seen = vec![false; nb];
    seen[td.root] = true;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &c in &adj[t] {
            if !seen[c] {
                seen[c] = true;
                parent[c] = t;
                stack.push(c);
            }
        }
    }
    let mut tops: Vec<Option<usize>> = vec![None; nb];
    for &t in order.iter().rev() {
        let mut kids: Vec<usize> = adj[t].iter().copied().filter(|&c| parent[c] == t).collect();
        kids.sort_by_key(|&c| (td.bags[c].first().unwrap_or(usize::MAX), c));
        let mut adapted = Vec::new();
        for c in kids {
            let sub = tops[c].expect("children built first");
            adapted.push(b.adapt(sub, &td.bags[c], &td.bags[t]));
        }
        let top = match adapted.len() {
            0 => {
                let leaf = b.push(VertexSet::empty(g.n()), NodeKind::Leaf, Vec::new());
                b.adapt(leaf, &VertexSet::empty(g.n()), &td.bags[t])
            }
            1 => adapted[0],
            _ => {
                let mut cur = adapted[0];
                for &next in &adapted[1..] {
                    cur = b.push(td.bags[t].clone(), NodeKind::Join, vec![cur, next]);
                }
                cur
            }
        };
        tops[t] = Some(top);
    }
    let body = tops[td.root].unwrap();
    let root = b.adapt(body, &td.bags[td.root], &VertexSet::empty(g.n()));
    let nice = NiceTreeDecomposition {
        bags: b.bags,
        kind: b.kind,
        children: b.children,
        root,
    };
    assert!(
        nice.len() <= 8 * (td.width() + 2) * (g.n().max(nb) + 1),
        "nice decomposition node count out of bounds"
    );
    nice.validate(g)?;
    Ok(nice)
}

// ---------------------------------------------------------------------------
// Refined decompositions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct RefinedNiceTreeDecomposition {
    pub nice: NiceTreeDecomposition,
    /// Marked subset U_t of each bag.
    pub refined: Vec<VertexSet>,
    /// max |U_t|
    pub ell: usize,
    /// max independence number over the unmarked bag remainders
    pub residual_alpha: usize,
}

/// Marks `U` inside every bag: U_t = U intersect X_t. The residual
/// independence number is computed exactly per bag.
pub fn refine_with_deletion_set(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    u: &VertexSet,
) -> RefinedNiceTreeDecomposition {
    let refined: Vec<VertexSet> = ntd.bags.iter().map(|b| b.intersect(u)).collect();
    let ell = refined.iter().map(|r| r.len()).max().unwrap_or(0);
    let residual_alpha = ntd
        .bags
        .iter()
        .zip(&refined)
        .map(|(b, r)| g.alpha_of(&b.minus(r)))
        .max()
        .unwrap_or(0);
    RefinedNiceTreeDecomposition {
        nice: ntd.clone(),
        refined,
        ell,
        residual_alpha,
    }
}

// ---------------------------------------------------------------------------
// The dynamic program
// ---------------------------------------------------------------------------

pub type DpKey = (VertexSet, VertexSet, VertexSet); // (S, A, B)

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpProv {
    None,
    FromChild,
    FreshSide,
    ForgetToA,
    ForgetToB,
    ForgetToS,
    JoinBoth,
    JoinLeft,
    JoinRight,
    JoinFresh,
}

#[derive(Clone, Copy, Debug)]
pub struct DpEntry {
    pub value: bool,
    pub prov: DpProv,
}

/// Per-node tables of cut[t, S, A, B] plus the forget-descendant flags.
pub struct DpTable {
    pub tables: Vec<HashMap<DpKey, DpEntry>>,
    pub has_forget_in_subtree: Vec<bool>,
    pub total_keys: u64,
}

/// Every potential t-partition of `bag`: S independent, no A-B edge. The
/// marked part is assigned three ways, the remainder walks independent
/// subsets and distributes the leftover components.
pub fn enumerate_keys(g: &Graph, bag: &VertexSet, marked: &VertexSet) -> Vec<DpKey> {
    let n = g.n();
    let rest = bag.minus(marked);
    let mut keys = Vec::new();
    let marked_vec = marked.to_vec();
    let mut assignments = Vec::new();
    fn assign(
        g: &Graph,
        vs: &[usize],
        i: usize,
        s: &mut VertexSet,
        a: &mut VertexSet,
        b: &mut VertexSet,
        out: &mut Vec<(VertexSet, VertexSet, VertexSet)>,
    ) {
        if i == vs.len() {
            out.push((s.clone(), a.clone(), b.clone()));
            return;
        }
        let v = vs[i];
        if g.neighbors(v).is_disjoint(s) {
            s.insert(v);
            assign(g, vs, i + 1, s, a, b, out);
            s.remove(v);
        }
        if !g.neighbors(v).intersects(b) {
            a.insert(v);
            assign(g, vs, i + 1, s, a, b, out);
            a.remove(v);
        }
        if !g.neighbors(v).intersects(a) {
            b.insert(v);
            assign(g, vs, i + 1, s, a, b, out);
            b.remove(v);
        }
    }
    assign(
        g,
        &marked_vec,
        0,
        &mut VertexSet::empty(n),
        &mut VertexSet::empty(n),
        &mut VertexSet::empty(n),
        &mut assignments,
    );

    for (s_u, a_u, b_u) in assignments {
        let ground = rest.minus(&g.neighborhood(&s_u));
        for s_r in crate::enumerate::independent_subsets(g, &ground, VertexSet::empty(n), n) {
            let s = s_u.union(&s_r);
            let leftovers = rest.minus(&s_r);
            let comps = if leftovers.is_empty() {
                Vec::new()
            } else {
                g.components(&leftovers.complement())
            };
            // components forced towards a side by marked neighbors
            let mut forced_a = Vec::new();
            let mut forced_b = Vec::new();
            let mut free = Vec::new();
            let mut ok = true;
            for comp in comps {
                let na = g.neighborhood(&comp);
                match (na.intersects(&a_u), na.intersects(&b_u)) {
                    (true, true) => {
                        ok = false;
                        break;
                    }
                    (true, false) => forced_a.push(comp),
                    (false, true) => forced_b.push(comp),
                    (false, false) => free.push(comp),
                }
            }
            if !ok {
                continue;
            }
            for mask in 0..1u64 << free.len() {
                let mut a = a_u.clone();
                let mut b = b_u.clone();
                for c in &forced_a {
                    a.union_with(c);
                }
                for c in &forced_b {
                    b.union_with(c);
                }
                for (i, c) in free.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        b.union_with(c);
                    } else {
                        a.union_with(c);
                    }
                }
                keys.push((s.clone(), a, b));
            }
        }
    }
    keys
}

fn key_bound(bag_len: usize, ell: usize, k: usize) -> u128 {
    let mut binom_sum: u128 = 0;
    let mut c: u128 = 1;
    for i in 0..=k.min(bag_len) {
        if i > 0 {
            c = c * (bag_len - i + 1) as u128 / i as u128;
        }
        binom_sum = binom_sum.saturating_add(c);
    }
    3u128
        .saturating_pow(ell as u32)
        .saturating_mul(binom_sum)
        .saturating_mul(1u128 << k.min(100))
}

fn lookup(table: &HashMap<DpKey, DpEntry>, key: &DpKey) -> bool {
    table.get(key).map(|e| e.value).unwrap_or(false)
}

/// Bottom-up evaluation of the full transition system.
pub fn compute_dp_table(g: &Graph, rtd: &RefinedNiceTreeDecomposition) -> Result<DpTable> {
    let nice = &rtd.nice;
    let order = nice.post_order();
    let mut tables: Vec<HashMap<DpKey, DpEntry>> = vec![HashMap::new(); nice.len()];
    let mut has_forget = vec![false; nice.len()];
    let mut total_keys = 0u64;

    for &t in &order {
        has_forget[t] = matches!(nice.kind[t], NodeKind::Forget(_))
            || nice.children[t].iter().any(|&c| has_forget[c]);

        let keys = enumerate_keys(g, &nice.bags[t], &rtd.refined[t]);
        let bound = key_bound(nice.bags[t].len(), rtd.ell, rtd.residual_alpha);
        assert!(
            (keys.len() as u128) <= bound,
            "table size {} exceeds the 3^l (2n)^k shape bound {}",
            keys.len(),
            bound
        );
        total_keys += keys.len() as u64;

        let mut table = HashMap::with_capacity(keys.len());
        match &nice.kind[t] {
            NodeKind::Leaf => {
                table.insert(
                    (
                        VertexSet::empty(g.n()),
                        VertexSet::empty(g.n()),
                        VertexSet::empty(g.n()),
                    ),
                    DpEntry {
                        value: false,
                        prov: DpProv::None,
                    },
                );
            }
            NodeKind::Introduce(v) => {
                let c = nice.children[t][0];
                let forget_below = has_forget[c];
                for key in keys {
                    let (s, a, b) = &key;
                    let entry = if a.contains(*v) {
                        let mut a2 = a.clone();
                        a2.remove(*v);
                        if lookup(&tables[c], &(s.clone(), a2.clone(), b.clone())) {
                            DpEntry {
                                value: true,
                                prov: DpProv::FromChild,
                            }
                        } else if a2.is_empty() && (!b.is_empty() || forget_below) {
                            DpEntry {
                                value: true,
                                prov: DpProv::FreshSide,
                            }
                        } else {
                            DpEntry {
                                value: false,
                                prov: DpProv::None,
                            }
                        }
                    } else if b.contains(*v) {
                        let mut b2 = b.clone();
                        b2.remove(*v);
                        if lookup(&tables[c], &(s.clone(), a.clone(), b2.clone())) {
                            DpEntry {
                                value: true,
                                prov: DpProv::FromChild,
                            }
                        } else if b2.is_empty() && (!a.is_empty() || forget_below) {
                            DpEntry {
                                value: true,
                                prov: DpProv::FreshSide,
                            }
                        } else {
                            DpEntry {
                                value: false,
                                prov: DpProv::None,
                            }
                        }
                    } else {
                        let mut s2 = s.clone();
                        s2.remove(*v);
                        if lookup(&tables[c], &(s2, a.clone(), b.clone())) {
                            DpEntry {
                                value: true,
                                prov: DpProv::FromChild,
                            }
                        } else {
                            DpEntry {
                                value: false,
                                prov: DpProv::None,
                            }
                        }
                    };
                    table.insert(key, entry);
                }
            }
            NodeKind::Forget(w) => {
                let c = nice.children[t][0];
                for key in keys {
                    let (s, a, b) = &key;
                    let mut a2 = a.clone();
                    a2.insert(*w);
                    let mut b2 = b.clone();
                    b2.insert(*w);
                    let mut s2 = s.clone();
                    s2.insert(*w);
                    let entry = if lookup(&tables[c], &(s.clone(), a2, b.clone())) {
                        DpEntry {
                            value: true,
                            prov: DpProv::ForgetToA,
                        }
                    } else if lookup(&tables[c], &(s.clone(), a.clone(), b2)) {
                        DpEntry {
                            value: true,
                            prov: DpProv::ForgetToB,
                        }
                    } else if lookup(&tables[c], &(s2, a.clone(), b.clone())) {
                        DpEntry {
                            value: true,
                            prov: DpProv::ForgetToS,
                        }
                    } else {
                        DpEntry {
                            value: false,
                            prov: DpProv::None,
                        }
                    };
                    table.insert(key, entry);
                }
            }
            NodeKind::Join => {
                let c1 = nice.children[t][0];
                let c2 = nice.children[t][1];
                for key in keys {
                    let (_, a, b) = &key;
                    let v1 = lookup(&tables[c1], &key);
                    let v2 = lookup(&tables[c2], &key);
                    let entry = if !a.is_empty() && !b.is_empty() {
                        if v1 && v2 {
                            DpEntry {
                                value: true,
                                prov: DpProv::JoinBoth,
                            }
                        } else {
                            DpEntry {
                                value: false,
                                prov: DpProv::None,
                            }
                        }
                    } else if !a.is_empty() || !b.is_empty() {
                        if v1 {
                            DpEntry {
                                value: true,
                                prov: DpProv::JoinLeft,
                            }
                        } else if v2 {
                            DpEntry {
                                value: true,
                                prov: DpProv::JoinRight,
                            }
                        } else {
                            DpEntry {
                                value: false,
                                prov: DpProv::None,
                            }
                        }
                    } else if has_forget[c1] && has_forget[c2] {
                        DpEntry {
                            value: true,
                            prov: DpProv::JoinFresh,
                        }
                    } else {
                        DpEntry {
                            value: false,
                            prov: DpProv::None,
                        }
                    };
                    table.insert(key, entry);
                }
            }
        }
        tables[t] = table;
    }
    Ok(DpTable {
        tables,
        has_forget_in_subtree: has_forget,
        total_keys,
    })
}

/// Walks the provenance pointers from the root entry and collects the
/// witness as the union of the S parts along the way.
fn reconstruct_witness(g: &Graph, nice: &NiceTreeDecomposition, dp: &DpTable) -> Result<VertexSet> {
    let n = g.n();
    let root_key = (
        VertexSet::empty(n),
        VertexSet::empty(n),
        VertexSet::empty(n),
    );
    let mut acc = VertexSet::empty(n);
    let mut work = vec![(nice.root, root_key)];
    while let Some((t, key)) = work.pop() {
        let entry = dp.tables[t]
            .get(&key)
            .ok_or_else(|| Error::Internal("missing dp entry during reconstruction".into()))?;
        acc.union_with(&key.0);
        let (s, a, b) = key;
        match entry.prov {
            DpProv::None => return Err(Error::Internal("walked into a false dp entry".into())),
            DpProv::FreshSide | DpProv::JoinFresh => {}
            DpProv::FromChild => {
                let NodeKind::Introduce(v) = nice.kind[t] else {
                    return Err(Error::Internal("FromChild at a non-introduce".into()));
                };
                let c = nice.children[t][0];
                let mut s2 = s;
                let mut a2 = a;
                let mut b2 = b;
                if a2.contains(v) {
                    a2.remove(v);
                } else if b2.contains(v) {
                    b2.remove(v);
                } else {
                    s2.remove(v);
                }
                work.push((c, (s2, a2, b2)));
            }
            DpProv::ForgetToA | DpProv::ForgetToB | DpProv::ForgetToS => {
                let NodeKind::Forget(w) = nice.kind[t] else {
                    return Err(Error::Internal("forget prov at a non-forget".into()));
                };
                let c = nice.children[t][0];
                let mut s2 = s;
                let mut a2 = a;
                let mut b2 = b;
                match entry.prov {
                    DpProv::ForgetToA => a2.insert(w),
                    DpProv::ForgetToB => b2.insert(w),
                    _ => s2.insert(w),
                }
                work.push((c, (s2, a2, b2)));
            }
            DpProv::JoinBoth => {
                work.push((nice.children[t][0], (s.clone(), a.clone(), b.clone())));
                work.push((nice.children[t][1], (s, a, b)));
            }
            DpProv::JoinLeft => work.push((nice.children[t][0], (s, a, b))),
            DpProv::JoinRight => work.push((nice.children[t][1], (s, a, b))),
        }
    }
    Ok(acc)
}

/// Decides via the refined-decomposition dynamic program; the witness is
/// rebuilt from provenance pointers and re-verified in `g`.
pub fn dp_solve(g: &Graph, rtd: &RefinedNiceTreeDecomposition) -> Result<SolveOutcome> {
    dp_solve_as(g, rtd, "treewidth-dp")
}

pub(crate) fn dp_solve_as(
    g: &Graph,
    rtd: &RefinedNiceTreeDecomposition,
    algorithm: &'static str,
) -> Result<SolveOutcome> {
    g.require_connected()?;
    rtd.nice.validate(g)?;
    for (t, u_t) in rtd.refined.iter().enumerate() {
        if !u_t.is_subset_of(&rtd.nice.bags[t]) || u_t.len() > rtd.ell {
            return Err(Error::InvalidDecomposition(format!(
                "refinement at node {t} breaks the U_t constraints"
            )));
        }
    }
    let dp = compute_dp_table(g, rtd)?;
    let stats = SolveStats {
        dp_keys: dp.total_keys,
        ..Default::default()
    };
    let n = g.n();
    let root_key = (
        VertexSet::empty(n),
        VertexSet::empty(n),
        VertexSet::empty(n),
    );
    if lookup(&dp.tables[rtd.nice.root], &root_key) {
        let w = reconstruct_witness(g, &rtd.nice, &dp)?;
        SolveOutcome::yes(g, w, algorithm, stats).map(|o| o.with_parameter(rtd.ell as u64))
    } else {
        Ok(SolveOutcome::no(algorithm, stats).with_parameter(rtd.ell as u64))
    }
}

// ---------------------------------------------------------------------------
// Chordal-deletion pipeline
// ---------------------------------------------------------------------------

/// clique tree of G - X, add X to every bag, make nice, refine by X: an
/// |X|-refined decomposition with residual independence number at most 1.
pub fn solve_by_chordal_deletion(g: &Graph, x: &VertexSet) -> Result<SolveOutcome> {
    g.require_connected()?;
    let keep = x.complement();
    let (core, old_ids) = g.induced(&keep);
    if let Err(hole) = recognize_chordal(&core) {
        return Err(Error::NotChordal {
            hole: hole.into_iter().map(|v| old_ids[v]).collect(),
        });
    }
    let td_core = clique_tree_general(&core)?;
    // lift bags to g and add X everywhere
    let bags: Vec<VertexSet> = td_core
        .bags
        .iter()
        .map(|b| {
            let mut bag = x.clone();
            for v in b.iter() {
                bag.insert(old_ids[v]);
            }
            bag
        })
        .collect();
    let td = TreeDecomposition {
        bags,
        edges: td_core.edges.clone(),
        root: 0,
    };
    let nice = make_nice(g, &td)?;
    for bag in &nice.bags {
        let residual = bag.minus(x);
        assert!(
            residual
                .iter()
                .all(|u| residual.iter().all(|v| u == v || g.has_edge(u, v))),
            "bag residue must stay a clique"
        );
    }
    let rtd = refine_with_deletion_set(g, &nice, x);
    assert!(rtd.residual_alpha <= 1, "chordal residue has alpha <= 1");
    dp_solve_as(g, &rtd, "chordal-deletion").map(|o| o.with_parameter(x.len() as u64))
}

/// Desk-scale substitute for an FPT chordal-deletion routine: smallest
/// deletion set of size at most k by ascending subset search.
pub fn brute_chordal_deletion(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    const MAX_K: usize = 4;
    if k > MAX_K {
        return Err(Error::KTooLarge { k, max: MAX_K });
    }
    let n = g.n();
    for size in 0..=k.min(n) {
        let mut found: Option<VertexSet> = None;
        combinations(n, size, &mut |combo| {
            if found.is_some() {
                return;
            }
            let s = VertexSet::from_slice(n, combo);
            let (h, _) = g.induced(&s.complement());
            if recognize_chordal(&h).is_ok() {
                found = Some(s);
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), f);
}

// ---------------------------------------------------------------------------
// Decomposition file format
// ---------------------------------------------------------------------------

fn label_list(s: &VertexSet, g: &Graph) -> String {
    s.iter()
        .map(|v| g.label_of(v).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Line-oriented rendering using graph labels:
/// `node <id> kind=... bag=... refined=...`, `edge <parent> <child>`,
/// `root <id>`.
pub fn serialize_decomposition(rtd: &RefinedNiceTreeDecomposition, g: &Graph) -> String {
    let nice = &rtd.nice;
    let mut out = String::new();
    for t in 0..nice.len() {
        let kind = match &nice.kind[t] {
            NodeKind::Leaf => "leaf".to_string(),
            NodeKind::Introduce(v) => format!("introduce:{}", g.label_of(*v)),
            NodeKind::Forget(w) => format!("forget:{}", g.label_of(*w)),
            NodeKind::Join => "join".to_string(),
        };
        out.push_str(&format!(
            "node {t} kind={kind} bag={} refined={}\n",
            label_list(&nice.bags[t], g),
            label_list(&rtd.refined[t], g)
        ));
    }
    for t in 0..nice.len() {
        for &c in &nice.children[t] {
            out.push_str(&format!("edge {t} {c}\n"));
        }
    }
    out.push_str(&format!("root {}\n", nice.root));
    out
}

/// Parses the format above and validates the result against `g`.
pub fn parse_decomposition(text: &str, g: &Graph) -> Result<RefinedNiceTreeDecomposition> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let resolve = |tok: &str, line: usize| -> Result<usize> {
        let label: u64 = tok
            .parse()
            .map_err(|_| perr(line, format!("bad vertex label '{tok}'")))?;
        g.vertex_with_label(label)
            .ok_or_else(|| perr(line, format!("unknown vertex label {label}")))
    };
    let parse_set = |spec: &str, line: usize| -> Result<VertexSet> {
        let mut s = VertexSet::empty(g.n());
        for tok in spec.split(',').filter(|t| !t.is_empty()) {
            s.insert(resolve(tok, line)?);
        }
        Ok(s)
    };

    let mut nodes: std::collections::BTreeMap<usize, (NodeKind, VertexSet, VertexSet)> =
        Default::default();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut root: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "node" => {
                if toks.len() != 5 {
                    return Err(perr(
                        lineno,
                        "expected: node <id> kind= bag= refined=".into(),
                    ));
                }
                let id: usize = toks[1]
                    .parse()
                    .map_err(|_| perr(lineno, "bad node id".into()))?;
                let kind_spec = toks[2]
                    .strip_prefix("kind=")
                    .ok_or_else(|| perr(lineno, "missing kind=".into()))?;
                let bag_spec = toks[3]
                    .strip_prefix("bag=")
                    .ok_or_else(|| perr(lineno, "missing bag=".into()))?;
                let ref_spec = toks[4]
                    .strip_prefix("refined=")
                    .ok_or_else(|| perr(lineno, "missing refined=".into()))?;
                let kind = if kind_spec == "leaf" {
                    NodeKind::Leaf
                } else if kind_spec == "join" {
                    NodeKind::Join
                } else if let Some(v) = kind_spec.strip_prefix("introduce:") {
                    NodeKind::Introduce(resolve(v, lineno)?)
                } else if let Some(w) = kind_spec.strip_prefix("forget:") {
                    NodeKind::Forget(resolve(w, lineno)?)
                } else {
                    return Err(perr(lineno, format!("unknown kind '{kind_spec}'")));
                };
                nodes.insert(
                    id,
                    (
                        kind,
                        parse_set(bag_spec, lineno)?,
                        parse_set(ref_spec, lineno)?,
                    ),
                );
            }
            "edge" => {
                if toks.len() != 3 {
                    return Err(perr(lineno, "expected: edge <parent> <child>".into()));
                }
                let a = toks[1]
                    .parse()
                    .map_err(|_| perr(lineno, "bad node id".into()))?;
                let b = toks[2]
                    .parse()
                    .map_err(|_| perr(lineno, "bad node id".into()))?;
                edges.push((a, b));
            }
            "root" => {
                if toks.len() != 2 {
                    return Err(perr(lineno, "expected: root <id>".into()));
                }
                root = Some(
                    toks[1]
                        .parse()
                        .map_err(|_| perr(lineno, "bad node id".into()))?,
                );
            }
            other => return Err(perr(lineno, format!("unknown line type '{other}'"))),
        }
    }
    let root = root.ok_or_else(|| perr(0, "missing root line".into()))?;
    // remap file node ids densely in ascending order
    let ids: Vec<usize> = nodes.keys().copied().collect();
    let dense: std::collections::BTreeMap<usize, usize> =
        ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let lookup = |id: usize| -> Result<usize> {
        dense
            .get(&id)
            .copied()
            .ok_or_else(|| perr(0, format!("undeclared node id {id}")))
    };
    let mut bags = Vec::new();
    let mut kind = Vec::new();
    let mut refined = Vec::new();
    let mut children = vec![Vec::new(); nodes.len()];
    for (_, (k, bag, r)) in nodes {
        kind.push(k);
        bags.push(bag);
        refined.push(r);
    }
    for (p, c) in edges {
        children[lookup(p)?].push(lookup(c)?);
    }
    for ch in &mut children {
        ch.sort();
    }
    let nice = NiceTreeDecomposition {
        bags,
        kind,
        children,
        root: lookup(root)?,
    };
    nice.validate(g)?;
    let ell = refined.iter().map(|r| r.len()).max().unwrap_or(0);
    for (t, r) in refined.iter().enumerate() {
        if !r.is_subset_of(&nice.bags[t]) {
            return Err(Error::InvalidDecomposition(format!(
                "refined set at node {t} is not inside its bag"
            )));
        }
    }
    let residual_alpha = nice
        .bags
        .iter()
        .zip(&refined)
        .map(|(b, r)| g.alpha_of(&b.minus(r)))
        .max()
        .unwrap_or(0);
    Ok(RefinedNiceTreeDecomposition {
        nice,
        refined,
        ell,
        residual_alpha,
    })
}

// ---------------------------------------------------------------------------
// Helper decompositions for tests and the corpus
// ---------------------------------------------------------------------------

fn decomposition_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // simulate elimination on an adjacency copy
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags: Vec<VertexSet> = vec![VertexSet::empty(n); n];
    for &v in order {
        let later: Vec<usize> = adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
        let mut bag = VertexSet::singleton(n, v);
        for &u in &later {
            bag.insert(u);
        }
        bags[pos[v]] = bag;
        for (i, &u) in later.iter().enumerate() {
            for &w in later.iter().skip(i + 1) {
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
    }
    // parent of the bag at position i: the position of its earliest later vertex
    let mut edges = Vec::new();
    for i in 0..n {
        let v = order[i];
        let others: Vec<usize> = bags[i].iter().filter(|&u| u != v).collect();
        if let Some(&p) = others.iter().min_by_key(|&&u| pos[u]) {
            edges.push((pos[p], i));
        } else if i + 1 < n {
            edges.push((i + 1, i));
        }
    }
    TreeDecomposition {
        bags,
        edges,
        root: n - 1,
    }
}

/// Minimum-width decomposition by trying every elimination order; for the
/// exhaustive corpus only.
pub fn brute_optimal_tree_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    let n = g.n();
    if n > 8 {
        return Err(Error::TooLargeForBruteForce { n, max: 8 });
    }
    if n == 0 {
        return Err(Error::InvalidDecomposition("empty graph".into()));
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    permute(&mut order, 0, &mut |perm| {
        let width = elimination_width(g, perm);
        if best.as_ref().is_none_or(|(bw, _)| width < *bw) {
            best = Some((width, perm.to_vec()));
        }
    });
    let (_, order) = best.unwrap();
    let td = decomposition_from_elimination(g, &order);
    td.validate(g)?;
    Ok(td)
}

fn permute(xs: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == xs.len() {
        f(xs);
        return;
    }
    for j in i..xs.len() {
        xs.swap(i, j);
        permute(xs, i + 1, f);
        xs.swap(i, j);
    }
}

fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut width = 0;
    for &v in order {
        let later: Vec<usize> = adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
        width = width.max(later.len());
        for (i, &u) in later.iter().enumerate() {
            for &w in later.iter().skip(i + 1) {
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
    }
    width
}

/// Min-fill heuristic decomposition for medium instances.
pub fn heuristic_tree_decomposition(g: &Graph) -> Result<TreeDecomposition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidDecomposition("empty graph".into()));
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut remaining = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = (usize::MAX, usize::MAX);
        for v in remaining.iter() {
            let nbrs: Vec<usize> = adj[v].intersect(&remaining).iter().collect();
            let mut fill = 0;
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in nbrs.iter().skip(i + 1) {
                    if !adj[u].contains(w) {
                        fill += 1;
                    }
                }
            }
            if fill < best.0 {
                best = (fill, v);
            }
        }
        let v = best.1;
        let nbrs: Vec<usize> = adj[v].intersect(&remaining).iter().collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in nbrs.iter().skip(i + 1) {
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
        remaining.remove(v);
        order.push(v);
    }
    let td = decomposition_from_elimination(g, &order);
    td.validate(g)?;
    Ok(td)
}
