//! The O*(3^k) dominating-set engine: a subset pre-check, the no-split
//! partition scan, and the split case that forces vertices in and out of
//! the cutset before handing the leftover choice to 2-SAT. The derived
//! solvers (independence number, triangle hitting, odd cycle transversal)
//! reduce to it.

use crate::enumerate::{
    bounded_alpha_partitions_filtered, independent_subsets, maximal_independent_sets,
    partitions2_filtered, partitions3, BoundedPartition, Partition3, PartitionFilter,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::sat2::{build_separation_formula, extract_cutset, solve_2sat, SeparationContext};
use crate::vset::VertexSet;

/// How partitions of the dominating set are enumerated: the plain 3^k walk
/// or the bounded-independence walk that stays polynomial for fixed c.
#[derive(Clone, Copy, Debug)]
pub enum PartitionEnumeration {
    Exhaustive,
    BoundedAlpha(usize),
}

pub fn verify_dominating(g: &Graph, x: &VertexSet) -> Result<()> {
    let covered = g.closed_neighborhood(x);
    match covered.complement().first() {
        None => Ok(()),
        Some(v) => Err(Error::NotDominating { vertex: v }),
    }
}

/// Tests every independent subset of X respecting the filter for being a
/// cutset. Discharges the case of a solution entirely inside X.
pub fn subset_precheck(
    g: &Graph,
    x: &VertexSet,
    filter: &PartitionFilter,
    stats: &mut SolveStats,
) -> Option<VertexSet> {
    let ground = x
        .minus(&filter.a_star)
        .minus(&filter.b_star)
        .minus(&filter.x_star);
    for s in independent_subsets(g, &ground, filter.x_star.clone(), x.len()) {
        stats.subsets_examined += 1;
        if !s.is_empty() && g.is_cutset(&s) {
            return Some(s);
        }
    }
    None
}

/// Partition scan of the no-split case: for each (A, X') the forbidden set
/// F and forced set I are read off the neighborhoods, and each component of
/// the part cut away from A proposes the candidate X' plus its forced
/// boundary.
pub(crate) fn partition2_scan(
    g: &Graph,
    x: &VertexSet,
    filter: &PartitionFilter,
    enumeration: PartitionEnumeration,
    stats: &mut SolveStats,
) -> Result<Option<VertexSet>> {
    let parts: Vec<crate::enumerate::Partition2> = match enumeration {
        PartitionEnumeration::Exhaustive => partitions2_filtered(g, x, filter).collect(),
        PartitionEnumeration::BoundedAlpha(c) => {
            let mut out = Vec::new();
            for item in bounded_alpha_partitions_filtered(g, x, c, filter) {
                if let BoundedPartition::Two(p) = item? {
                    out.push(p);
                }
            }
            out
        }
    };
    for p in parts {
        stats.partitions2_examined += 1;
        let f = g.neighborhood(&p.xp).minus(&p.a);
        let i_set = g.neighborhood(&p.a).minus(&p.xp).minus(&f);
        let removed = p.xp.union(&i_set);
        let mut b = VertexSet::empty(g.n());
        let mut b_comps = Vec::new();
        for comp in g.components(&removed) {
            if comp.is_disjoint(&p.a) {
                b.union_with(&comp);
                b_comps.push(comp);
            }
        }
        debug_assert!(b.is_subset_of(&f), "B must sit inside the forbidden set");
        for k_comp in b_comps {
            let boundary = g.neighborhood(&k_comp).intersect(&i_set);
            let candidate = p.xp.union(&boundary);
            if !candidate.is_empty() && g.is_independent(&candidate) && g.is_cutset(&candidate) {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

/// Tests a single split partition end to end; used by the parallel driver.
/// Returns the verified witness (if any) and the number of 2-SAT calls.
pub(crate) fn test_split_partition(
    g: &Graph,
    x: &VertexSet,
    p: &Partition3,
) -> Result<(Option<VertexSet>, u64)> {
    let mut stats = SolveStats::default();
    let Some(state) = propagate_split_state(g, x, p) else {
        return Ok((None, 0));
    };
    let w = try_split_partition(g, &state, &mut stats)?;
    Ok((w, stats.sat_calls))
}

/// The no-split case: subset pre-check first, then the partition scan.
pub fn no_split_case(
    g: &Graph,
    x: &VertexSet,
    filter: Option<&PartitionFilter>,
    enumeration: PartitionEnumeration,
    stats: &mut SolveStats,
) -> Result<Option<VertexSet>> {
    let default = PartitionFilter::none(g.n());
    let filter = filter.unwrap_or(&default);
    if let Some(w) = subset_precheck(g, x, filter, stats) {
        return Ok(Some(w));
    }
    partition2_scan(g, x, filter, enumeration, stats)
}

/// Bookkeeping of one split-case partition after the forcing loop.
#[derive(Clone, Debug)]
pub struct SplitState {
    pub partition: Partition3,
    pub n: VertexSet,
    pub n_a: VertexSet,
    pub n_b: VertexSet,
    /// Vertices forced into every cutset consistent with the partition.
    pub i: VertexSet,
    /// Vertices forbidden from such cutsets.
    pub f: VertexSet,
    pub f_prime: VertexSet,
}

/// The constraint pairs between N_A and N_B: direct edges plus pairs
/// joined through a component of the pass-through set F'. Every pair is a
/// live A-B connection once its inner vertices are forbidden, so a cutset
/// must take one of its endpoints.
fn separation_pairs(
    g: &Graph,
    n_a: &VertexSet,
    n_b: &VertexSet,
    f_prime: &VertexSet,
) -> std::collections::BTreeSet<(usize, usize)> {
    let mut pairs = std::collections::BTreeSet::new();
    for a in n_a.iter() {
        for b in g.neighbors(a).intersect(n_b).iter() {
            pairs.insert((a, b));
        }
    }
    if !f_prime.is_empty() {
        for k_comp in g.components(&f_prime.complement()) {
            let ka = g.neighborhood(&k_comp).intersect(n_a);
            let kb = g.neighborhood(&k_comp).intersect(n_b);
            for a in ka.iter() {
                for b in kb.iter() {
                    pairs.insert((a, b));
                }
            }
        }
    }
    pairs
}

/// Runs the forcing loop for one partition. `None` means the partition is
/// inconsistent (forced set not independent, or a constraint pair with
/// both endpoints forbidden).
///
/// Two readings beyond the obvious one are load-bearing here, both caught
/// by exhaustive testing against the oracle:
/// - forcing a vertex forbids its whole neighborhood outside X, not just
///   its cross-side neighbors: a same-side neighbor of a forced vertex can
///   never join an independent cutset, and leaving it around lets the
///   separation formula pick it;
/// - pairs bridged through F' components take part in the forcing loop,
///   not only in the reduced graph: a bridge whose far endpoint is already
///   forbidden forces the near endpoint, and waiting until after the
///   deletions would silently drop that constraint.
pub fn propagate_split_state(g: &Graph, x: &VertexSet, p: &Partition3) -> Option<SplitState> {
    let n_common = g.neighborhood(&p.a).intersect(&g.neighborhood(&p.b));
    let n_a = g.neighborhood(&p.a).minus(&n_common);
    let n_b = g.neighborhood(&p.b).minus(&n_common);
    let mut i_set = p.xp.union(&n_common);
    let mut f_set = g.neighborhood(&i_set).minus(x);

    loop {
        let f_prime = f_set.minus(&n_a).minus(&n_b);
        let pairs = separation_pairs(g, &n_a, &n_b, &f_prime);
        let mut forced = None;
        'search: for &(a, b) in &pairs {
            for (u, v) in [(a, b), (b, a)] {
                if f_set.contains(u) && !f_set.contains(v) && !i_set.contains(v) {
                    forced = Some(v);
                    break 'search;
                }
            }
        }
        match forced {
            Some(v) => {
                i_set.insert(v);
                f_set.union_with(&g.neighbors(v).minus(x).minus(&i_set));
            }
            None => break,
        }
    }

    if !g.is_independent(&i_set) {
        return None;
    }
    // bail if any constraint pair has both endpoints forbidden
    let f_prime = f_set.minus(&n_a).minus(&n_b);
    let pairs = separation_pairs(g, &n_a, &n_b, &f_prime);
    if pairs
        .iter()
        .any(|&(a, b)| f_set.contains(a) && f_set.contains(b))
    {
        return None;
    }
    Some(SplitState {
        partition: p.clone(),
        n: n_common,
        n_a,
        n_b,
        i: i_set,
        f: f_set,
        f_prime,
    })
}

/// Finishes one propagated partition: build the reduced graph (contract the
/// A- and B-components, bridge paths through F', delete I and F), run the
/// separation formula, and verify the assembled cutset in `g`.
fn try_split_partition(
    g: &Graph,
    state: &SplitState,
    stats: &mut SolveStats,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    let p = &state.partition;

    // edges bridging N_A and N_B through components of F'
    let mut extra: Vec<(usize, usize)> = Vec::new();
    if !state.f_prime.is_empty() {
        for k_comp in g.components(&state.f_prime.complement()) {
            let ka = g.neighborhood(&k_comp).intersect(&state.n_a);
            let kb = g.neighborhood(&k_comp).intersect(&state.n_b);
            for u in ka.iter() {
                for v in kb.iter() {
                    extra.push((u.min(v), u.max(v)));
                }
            }
        }
    }
    let mut edge_set: std::collections::BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    edge_set.extend(extra);
    let g2 = Graph::from_edges(n, &edge_set.into_iter().collect::<Vec<_>>());

    let kept = state.i.union(&state.f).complement();
    debug_assert!(p.a.is_subset_of(&kept) && p.b.is_subset_of(&kept));
    let (g_kept, old_ids) = g2.induced(&kept);
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in old_ids.iter().enumerate() {
        new_id[v] = i;
    }
    let to_local = |s: &VertexSet| {
        VertexSet::from_slice(g_kept.n(), &s.iter().map(|v| new_id[v]).collect::<Vec<_>>())
    };

    // contract the components of G[A] and G[B]
    let mut classes = Vec::new();
    for comp in g.components(&p.a.complement()) {
        classes.push(to_local(&comp));
    }
    let a_class_count = classes.len();
    for comp in g.components(&p.b.complement()) {
        classes.push(to_local(&comp));
    }
    let (gp, cmap) = g_kept.contract(&classes)?;
    let mut a_super = VertexSet::empty(gp.n());
    let mut b_super = VertexSet::empty(gp.n());
    for (ci, class) in classes.iter().enumerate() {
        let sv = cmap.forward[class.first().unwrap()];
        if ci < a_class_count {
            a_super.insert(sv);
        } else {
            b_super.insert(sv);
        }
    }

    let ctx = SeparationContext::new(gp, a_super, b_super)
        .map_err(|e| Error::Internal(format!("reduced graph violates the setup: {e}")))?;
    let formula = build_separation_formula(&ctx);
    stats.sat_calls += 1;
    let Some(assignment) = solve_2sat(&formula) else {
        return Ok(None);
    };
    let s_local = extract_cutset(&ctx, &assignment)?;

    // map back through the contraction (all chosen vertices are singleton
    // classes) and the induced subgraph
    let s_kept = cmap.expand(&s_local, g_kept.n());
    let mut candidate = state.i.clone();
    for v in s_kept.iter() {
        candidate.insert(old_ids[v]);
    }

    if g.is_independent(&candidate)
        && g.is_cutset(&candidate)
        && g.separates(&candidate, &p.a, &p.b)
    {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// The split case: every (A, B, X') partition is propagated and finished.
pub fn split_case(
    g: &Graph,
    x: &VertexSet,
    filter: Option<&PartitionFilter>,
    enumeration: PartitionEnumeration,
    stats: &mut SolveStats,
) -> Result<Option<VertexSet>> {
    let default = PartitionFilter::none(g.n());
    let filter = filter.unwrap_or(&default);
    let parts: Vec<Partition3> = match enumeration {
        PartitionEnumeration::Exhaustive => {
            let f = if filter.is_trivial() {
                None
            } else {
                Some(filter)
            };
            partitions3(g, x, f).collect()
        }
        PartitionEnumeration::BoundedAlpha(c) => {
            let mut out = Vec::new();
            for item in bounded_alpha_partitions_filtered(g, x, c, filter) {
                if let BoundedPartition::Three(p) = item? {
                    out.push(p);
                }
            }
            out
        }
    };
    for p in parts {
        stats.partitions3_examined += 1;
        let Some(state) = propagate_split_state(g, x, &p) else {
            continue;
        };
        if let Some(w) = try_split_partition(g, &state, stats)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Full solver given a dominating set: pre-check, no-split scan, split scan.
pub fn solve_with_dominating_set(g: &Graph, x: &VertexSet) -> Result<SolveOutcome> {
    solve_with_dominating_core(g, x, "dominating", PartitionEnumeration::Exhaustive)
}

pub(crate) fn solve_with_dominating_core(
    g: &Graph,
    x: &VertexSet,
    algorithm: &'static str,
    enumeration: PartitionEnumeration,
) -> Result<SolveOutcome> {
    g.require_connected()?;
    verify_dominating(g, x)?;
    let mut stats = SolveStats::default();
    let filter = PartitionFilter::none(g.n());
    if let Some(w) = subset_precheck(g, x, &filter, &mut stats) {
        stats.phase = Some("subset-precheck");
        return SolveOutcome::yes(g, w, algorithm, stats).map(|o| o.with_parameter(x.len() as u64));
    }
    if let Some(w) = partition2_scan(g, x, &filter, enumeration, &mut stats)? {
        stats.phase = Some("no-split");
        return SolveOutcome::yes(g, w, algorithm, stats).map(|o| o.with_parameter(x.len() as u64));
    }
    if let Some(w) = split_case(g, x, None, enumeration, &mut stats)? {
        stats.phase = Some("split");
        return SolveOutcome::yes(g, w, algorithm, stats).map(|o| o.with_parameter(x.len() as u64));
    }
    Ok(SolveOutcome::no(algorithm, stats).with_parameter(x.len() as u64))
}

/// Any maximal independent set is dominating; take the first one as X.
pub fn solve_by_independence_number(g: &Graph) -> Result<SolveOutcome> {
    g.require_connected()?;
    let x = maximal_independent_sets(g)
        .next()
        .expect("nonempty graph has a maximal independent set");
    solve_with_dominating_core(
        g,
        &x,
        "independence-number",
        PartitionEnumeration::Exhaustive,
    )
}

fn find_triangle_avoiding(g: &Graph, removed: &VertexSet) -> Option<[usize; 3]> {
    for u in 0..g.n() {
        if removed.contains(u) {
            continue;
        }
        for v in g.neighbors(u).minus(removed).iter() {
            if v <= u {
                continue;
            }
            let common = g.neighbors(u).intersect(g.neighbors(v)).minus(removed);
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// 3-way bounded branching: each triangle must lose a vertex.
pub fn triangle_hitting_set(g: &Graph, k: usize) -> Option<VertexSet> {
    fn go(g: &Graph, removed: &mut VertexSet, budget: usize) -> bool {
        match find_triangle_avoiding(g, removed) {
            None => true,
            Some(tri) => {
                if budget == 0 {
                    return false;
                }
                for w in tri {
                    removed.insert(w);
                    if go(g, removed, budget - 1) {
                        return true;
                    }
                    removed.remove(w);
                }
                false
            }
        }
    }
    let mut removed = VertexSet::empty(g.n());
    if go(g, &mut removed, k) {
        Some(removed)
    } else {
        None
    }
}

/// Shared neighborhood fast path: scan for a vertex in no triangle. Returns
/// a decided outcome, or `None` when every vertex lies in a triangle.
fn trianglefree_vertex_path(g: &Graph, algorithm: &'static str) -> Result<Option<SolveOutcome>> {
    let mut saw_trianglefree = false;
    let mut stats = SolveStats::default();
    for v in 0..g.n() {
        if !g.is_independent(g.neighbors(v)) {
            continue;
        }
        saw_trianglefree = true;
        let nv = g.neighbors(v).clone();
        if g.is_cutset(&nv) {
            stats.phase = Some("neighborhood-fastpath");
            return Ok(Some(SolveOutcome::yes(g, nv, algorithm, stats)?));
        }
    }
    if saw_trianglefree {
        // Only a vertex whose closed neighborhood is the whole graph gets
        // here, which forces a star; a star with 3+ vertices would have
        // returned through a leaf, so the graph is K1 or K2.
        stats.phase = Some("neighborhood-fastpath");
        return Ok(Some(SolveOutcome::no(algorithm, stats)));
    }
    Ok(None)
}

/// Decide via a triangle-hitting set of size at most k: when every vertex
/// is in a triangle the hitting set dominates.
pub fn solve_by_triangle_hitting(g: &Graph, k: usize) -> Result<SolveOutcome> {
    g.require_connected()?;
    if let Some(out) = trianglefree_vertex_path(g, "triangle-hitting")? {
        return Ok(out);
    }
    let x = triangle_hitting_set(g, k).ok_or(Error::ParameterTooSmall { k })?;
    solve_with_dominating_core(g, &x, "triangle-hitting", PartitionEnumeration::Exhaustive)
}

fn check_bipartite(g: &Graph, keep: &VertexSet) -> std::result::Result<(), Vec<usize>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in keep.iter() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).intersect(keep).iter() {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    // walk to the common ancestor for an odd cycle
                    let (mut a, mut b) = (u, v);
                    let mut pa = vec![a];
                    let mut pb = vec![b];
                    while depth[a] > depth[b] {
                        a = parent[a];
                        pa.push(a);
                    }
                    while depth[b] > depth[a] {
                        b = parent[b];
                        pb.push(b);
                    }
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        pa.push(a);
                        pb.push(b);
                    }
                    pb.pop();
                    pb.reverse();
                    pa.extend(pb);
                    return Err(pa);
                }
            }
        }
    }
    Ok(())
}

/// Decide via an odd cycle transversal: G - oct must be bipartite; when
/// every vertex is in a triangle the transversal dominates.
pub fn solve_by_oct(g: &Graph, oct: &VertexSet) -> Result<SolveOutcome> {
    g.require_connected()?;
    if let Err(cycle) = check_bipartite(g, &oct.complement()) {
        return Err(Error::NotBipartite { cycle });
    }
    if let Some(out) = trianglefree_vertex_path(g, "oct")? {
        return Ok(out);
    }
    solve_with_dominating_core(g, oct, "oct", PartitionEnumeration::Exhaustive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{clique, cycle, gnp_connected, star};
    use crate::oracle::brute_decide;

    #[test]
    fn solve_examples() {
        let out = solve_with_dominating_set(&cycle(4), &VertexSet::from_slice(4, &[0, 1])).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().len(), 2);

        let out = solve_with_dominating_set(&clique(4), &VertexSet::singleton(4, 0)).unwrap();
        assert!(!out.answer());

        let out = solve_with_dominating_set(&cycle(6), &VertexSet::from_slice(6, &[0, 3])).unwrap();
        assert!(out.answer());
    }

    #[test]
    fn rejects_non_dominating() {
        assert!(matches!(
            solve_with_dominating_set(&cycle(6), &VertexSet::singleton(6, 0)),
            Err(Error::NotDominating { vertex: 2 })
        ));
    }

    #[test]
    fn no_split_examples() {
        let mut stats = SolveStats::default();
        // star with X = {center}: pre-check finds the center
        let g = star(4);
        let w = no_split_case(
            &g,
            &VertexSet::singleton(4, 0),
            None,
            PartitionEnumeration::Exhaustive,
            &mut stats,
        )
        .unwrap()
        .unwrap();
        assert_eq!(w.to_vec(), vec![0]);

        // C4 with X = {0,1}: partition scan yields a diagonal
        let g = cycle(4);
        let w = no_split_case(
            &g,
            &VertexSet::from_slice(4, &[0, 1]),
            None,
            PartitionEnumeration::Exhaustive,
            &mut stats,
        )
        .unwrap()
        .unwrap();
        assert!(g.is_independent_cutset(&w));

        // K4 with X = {0,1}: nothing
        assert!(no_split_case(
            &clique(4),
            &VertexSet::from_slice(4, &[0, 1]),
            None,
            PartitionEnumeration::Exhaustive,
            &mut stats,
        )
        .unwrap()
        .is_none());
    }

    #[test]
    fn split_examples() {
        let mut stats = SolveStats::default();
        // C6 with X = {0,3}: the split partition A={0}, B={3} works
        let g = cycle(6);
        let w = split_case(
            &g,
            &VertexSet::from_slice(6, &[0, 3]),
            None,
            PartitionEnumeration::Exhaustive,
            &mut stats,
        )
        .unwrap()
        .unwrap();
        assert!(g.is_independent_cutset(&w));
        assert!(g.separates(&w, &VertexSet::singleton(6, 0), &VertexSet::singleton(6, 3)));

        // K4 minus an edge, X = {1,2}: no valid 3-partition at all
        let mut stats = SolveStats::default();
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let got = split_case(
            &g,
            &VertexSet::from_slice(4, &[1, 2]),
            None,
            PartitionEnumeration::Exhaustive,
            &mut stats,
        )
        .unwrap();
        assert!(got.is_none());
        assert_eq!(stats.partitions3_examined, 0);
    }

    #[test]
    fn split_planted_instances() {
        // two cliques joined through an independent separator
        for (ka, kb) in [(3, 3), (4, 3), (4, 4)] {
            let mut edges = Vec::new();
            for u in 0..ka {
                for v in u + 1..ka {
                    edges.push((u, v));
                }
            }
            for u in ka..ka + kb {
                for v in u + 1..ka + kb {
                    edges.push((u, v));
                }
            }
            let s0 = ka + kb;
            let s1 = ka + kb + 1;
            // separator vertices attach to both cliques through X = {0, ka}
            edges.push((0, s0));
            edges.push((ka, s0));
            edges.push((0, s1));
            edges.push((ka + 1, s1));
            edges.push((ka, s1));
            let g = Graph::from_edges(ka + kb + 2, &edges);
            let x = VertexSet::from_slice(g.n(), &[0, ka]);
            let out = solve_with_dominating_set(&g, &x).unwrap();
            assert!(out.answer());
            let w = out.witness().unwrap();
            assert!(g.is_independent_cutset(w));
        }
    }

    #[test]
    fn matches_oracle_with_mis_and_full_x() {
        for seed in 0..40u64 {
            let n = 4 + (seed % 4) as usize;
            let g = gnp_connected(n, 0.45, seed).unwrap();
            let want = brute_decide(&g).unwrap().answer();
            let mis = maximal_independent_sets(&g).next().unwrap();
            assert_eq!(
                solve_with_dominating_set(&g, &mis).unwrap().answer(),
                want,
                "X=MIS seed {seed}"
            );
            assert_eq!(
                solve_with_dominating_set(&g, &VertexSet::full(n))
                    .unwrap()
                    .answer(),
                want,
                "X=V seed {seed}"
            );
        }
    }

    #[test]
    fn propagation_forces_only_necessary_vertices() {
        // every vertex forced into I lies in every independent cutset that
        // realizes the partition
        for seed in 0..25u64 {
            let n = 6;
            let g = gnp_connected(n, 0.4, seed).unwrap();
            let x = g.closed_neighborhood(&VertexSet::singleton(n, 0)); // some dominating-ish set
            if verify_dominating(&g, &x).is_err() {
                continue;
            }
            for p in partitions3(&g, &x, None) {
                let Some(state) = propagate_split_state(&g, &x, &p) else {
                    continue;
                };
                // all independent cutsets S* with S* cap X = X', A and B separated
                let full = VertexSet::full(n);
                for s in independent_subsets(&g, &full, VertexSet::empty(n), n) {
                    if s.is_empty() || !g.is_cutset(&s) {
                        continue;
                    }
                    if s.intersect(&x) != p.xp {
                        continue;
                    }
                    if !g.separates(&s, &p.a, &p.b) {
                        continue;
                    }
                    assert!(
                        state.i.is_subset_of(&s),
                        "forced set escaped a witness: seed {seed}"
                    );
                }
            }
        }
    }

    #[test]
    fn forcing_forbids_whole_neighborhoods() {
        // The only independent cutset is {3,5,7}. The correct split guess
        // A={0,1}, B={2} forces 5 and 7; the same-side neighbor 6 of the
        // forced vertex 5 must be forbidden, or the separation formula may
        // pick it and the run ends in a false no.
        let g = Graph::from_edges(
            8,
            &[
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 3),
                (2, 4),
                (2, 7),
                (3, 4),
                (3, 6),
                (4, 5),
                (4, 7),
                (5, 6),
            ],
        );
        let x = VertexSet::from_slice(8, &[0, 1, 2]);
        let out = solve_with_dominating_set(&g, &x).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![3, 5, 7]);
    }

    #[test]
    fn bridged_pairs_take_part_in_forcing() {
        // The only independent cutset is {1,4,5}. Under the guess A={0},
        // B={3}, X'={1} the vertex 7 is forbidden and the path 0-7-2-4-3
        // runs through the pass-through vertex 2, so 4 is forced. Handling
        // that bridge only inside the reduced graph loses the constraint,
        // because its other endpoint 7 is deleted as forbidden.
        let g = Graph::from_edges(
            8,
            &[
                (0, 5),
                (0, 7),
                (1, 2),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 7),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 6),
                (5, 6),
                (5, 7),
            ],
        );
        let x = VertexSet::from_slice(8, &[0, 1, 3]);
        let out = solve_with_dominating_set(&g, &x).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![1, 4, 5]);
    }

    #[test]
    fn filtered_runs_respect_the_pins() {
        use crate::enumerate::PartitionFilter;
        for seed in 0..20u64 {
            let n = 7;
            let g = gnp_connected(n, 0.4, seed).unwrap();
            let x = VertexSet::from_slice(n, &[0, 1, 2, 3]);
            let filter = PartitionFilter {
                a_star: VertexSet::singleton(n, 0),
                b_star: VertexSet::singleton(n, 3),
                x_star: VertexSet::empty(n),
            };
            let mut stats = SolveStats::default();
            if let Some(w) = split_case(
                &g,
                &x,
                Some(&filter),
                PartitionEnumeration::Exhaustive,
                &mut stats,
            )
            .unwrap()
            {
                assert!(
                    g.separates(&w, &filter.a_star, &filter.b_star),
                    "seed {seed}"
                );
            }
            let filter = PartitionFilter {
                a_star: VertexSet::empty(n),
                b_star: VertexSet::empty(n),
                x_star: VertexSet::singleton(n, 2),
            };
            let mut stats = SolveStats::default();
            if let Some(w) = split_case(
                &g,
                &x,
                Some(&filter),
                PartitionEnumeration::Exhaustive,
                &mut stats,
            )
            .unwrap()
            {
                assert!(filter.x_star.is_subset_of(&w), "seed {seed}");
            }
        }
    }

    #[test]
    fn triangle_hitting_examples() {
        assert_eq!(triangle_hitting_set(&cycle(5), 0).unwrap().len(), 0);
        assert_eq!(triangle_hitting_set(&clique(4), 2).unwrap().len(), 2);
        assert!(triangle_hitting_set(&clique(4), 1).is_none());
    }

    #[test]
    fn triangle_hitting_solver() {
        // Petersen-like triangle-free input: fast path
        let out = solve_by_triangle_hitting(&cycle(5), 0).unwrap();
        assert!(out.answer());

        let out = solve_by_triangle_hitting(&clique(4), 2).unwrap();
        assert!(!out.answer());

        assert!(matches!(
            solve_by_triangle_hitting(&clique(5), 1),
            Err(Error::ParameterTooSmall { k: 1 })
        ));

        // two K4's sharing one vertex: the shared vertex cuts
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        for u in [0, 4, 5, 6] {
            for v in [0, 4, 5, 6] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(7, &edges);
        let out = solve_by_triangle_hitting(&g, 4).unwrap();
        assert!(out.answer());
        assert!(g.is_independent_cutset(out.witness().unwrap()));
    }

    #[test]
    fn oct_solver() {
        // C5 with oct = {0}: triangle-free fast path
        let out = solve_by_oct(&cycle(5), &VertexSet::singleton(5, 0)).unwrap();
        assert!(out.answer());

        // K4 with oct = {0,1}
        let out = solve_by_oct(&clique(4), &VertexSet::from_slice(4, &[0, 1])).unwrap();
        assert!(!out.answer());

        // friendship graph F2: two triangles sharing vertex 0
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        let out = solve_by_oct(&g, &VertexSet::singleton(5, 0)).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![0]);

        // not bipartite after removal: witness cycle is odd
        match solve_by_oct(&clique(4), &VertexSet::singleton(4, 0)) {
            Err(Error::NotBipartite { cycle }) => assert_eq!(cycle.len() % 2, 1),
            other => panic!("expected bipartite violation, got {other:?}"),
        }
    }
}
