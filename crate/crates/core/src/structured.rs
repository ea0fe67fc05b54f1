//! Structured solvers: P5-free graphs through small dominating shapes,
//! P5-hitting-set parameterization, and the alpha-domination
//! generalizations.

use crate::dominating::{
    no_split_case, solve_with_dominating_core, split_case, subset_precheck, verify_dominating,
    PartitionEnumeration,
};
use crate::enumerate::{
    find_induced_p5, find_induced_p5_avoiding, find_induced_tk2, independent_subsets, partitions3,
    PartitionFilter,
};
use crate::error::{Error, Result};
use crate::exact::{decide_2k2_free, decide_exact};
use crate::graph::Graph;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominatorShape {
    Clique,
    P3,
}

#[derive(Clone, Debug)]
pub struct Dominator {
    pub set: VertexSet,
    pub shape: DominatorShape,
    /// which rung found it: "scan" or "cds"
    pub rung: &'static str,
}

impl Dominator {
    pub fn alpha_bound(&self) -> usize {
        match self.shape {
            DominatorShape::Clique => 1,
            DominatorShape::P3 => 2,
        }
    }
}

fn dominates(g: &Graph, x: &VertexSet) -> bool {
    g.closed_neighborhood(x).len() == g.n()
}

fn shape_of(g: &Graph, s: &VertexSet) -> Option<DominatorShape> {
    let vs = s.to_vec();
    let mut edges = 0;
    for (i, &u) in vs.iter().enumerate() {
        for &v in vs.iter().skip(i + 1) {
            if g.has_edge(u, v) {
                edges += 1;
            }
        }
    }
    let k = vs.len();
    if edges == k * (k - 1) / 2 {
        return Some(DominatorShape::Clique);
    }
    if k == 3 && edges == 2 {
        return Some(DominatorShape::P3);
    }
    None
}

/// Inclusion-minimal connected dominating set by repeated greedy removal.
fn minimal_connected_dominating_set(g: &Graph) -> VertexSet {
    let mut cds = VertexSet::full(g.n());
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if !cds.contains(v) || cds.len() == 1 {
                continue;
            }
            let mut smaller = cds.clone();
            smaller.remove(v);
            let (sub, _) = g.induced(&smaller);
            if sub.is_connected() && dominates(g, &smaller) {
                cds = smaller;
                changed = true;
            }
        }
        if !changed {
            return cds;
        }
    }
}

/// Dominating set inducing a clique or a P3: scan all candidates of size at
/// most three, then fall back to a minimal connected dominating set and
/// accept it when it has one of the two shapes.
pub fn find_clique_or_p3_dominating(g: &Graph) -> Option<Dominator> {
    let n = g.n();
    // singletons
    for v in 0..n {
        let s = VertexSet::singleton(n, v);
        if dominates(g, &s) {
            return Some(Dominator {
                set: s,
                shape: DominatorShape::Clique,
                rung: "scan",
            });
        }
    }
    // adjacent pairs
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            if v <= u {
                continue;
            }
            let s = VertexSet::from_slice(n, &[u, v]);
            if dominates(g, &s) {
                return Some(Dominator {
                    set: s,
                    shape: DominatorShape::Clique,
                    rung: "scan",
                });
            }
        }
    }
    // triples inducing a triangle or a P3
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let s = VertexSet::from_slice(n, &[a, b, c]);
                let Some(shape) = shape_of(g, &s) else {
                    continue;
                };
                if dominates(g, &s) {
                    return Some(Dominator {
                        set: s,
                        shape,
                        rung: "scan",
                    });
                }
            }
        }
    }
    // minimal connected dominating set
    let cds = minimal_connected_dominating_set(g);
    if let Some(shape) = shape_of(g, &cds) {
        return Some(Dominator {
            set: cds,
            shape,
            rung: "cds",
        });
    }
    None
}

/// Dominating set with independence number at most `c`: candidates of size
/// at most c+1 first, then the minimal connected dominating set if its
/// independence number fits.
pub fn find_alpha_dominating(g: &Graph, c: usize) -> Option<(VertexSet, usize)> {
    let n = g.n();
    let mut found = None;
    combinations_upto(n, c + 1, &mut |combo| {
        if found.is_some() || combo.is_empty() {
            return;
        }
        let s = VertexSet::from_slice(n, combo);
        if dominates(g, &s) && g.alpha_of(&s) <= c {
            found = Some(s);
        }
    });
    if let Some(s) = found {
        let a = g.alpha_of(&s);
        return Some((s, a));
    }
    let cds = minimal_connected_dominating_set(g);
    let a = g.alpha_of(&cds);
    if a <= c {
        return Some((cds, a));
    }
    None
}

/// Calls `f` on every subset of size at most `max_size`, sizes ascending.
fn combinations_upto(n: usize, max_size: usize, f: &mut impl FnMut(&[usize])) {
    fn sized(
        n: usize,
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for v in start..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            sized(n, size, v + 1, cur, f);
            cur.pop();
        }
    }
    for size in 0..=max_size.min(n) {
        sized(n, size, 0, &mut Vec::new(), f);
    }
}

/// Polynomial algorithm for connected P5-free graphs: a dominating clique
/// or P3 keeps the partition families small, and the generic dominating
/// machinery does the rest. Falls back to the exact sweep if no bounded
/// dominating set surfaces; the rung that fired is recorded.
pub fn solve_p5_free(g: &Graph) -> Result<SolveOutcome> {
    g.require_connected()?;
    if let Some(path) = find_induced_p5(g) {
        return Err(Error::NotP5Free { path });
    }
    if let Some(dom) = find_clique_or_p3_dominating(g) {
        let c = dom.alpha_bound();
        let mut out = solve_with_dominating_core(
            g,
            &dom.set,
            "p5-free",
            PartitionEnumeration::BoundedAlpha(c),
        )?;
        out.stats_mut().rung = Some(dom.rung);
        assert_partition_budget(&out, dom.set.len());
        return Ok(out);
    }
    // generic alpha-2 rung
    let cds = minimal_connected_dominating_set(g);
    if g.alpha_of(&cds) <= 2 {
        let mut out =
            solve_with_dominating_core(g, &cds, "p5-free", PartitionEnumeration::BoundedAlpha(2))?;
        out.stats_mut().rung = Some("cds-alpha2");
        assert_partition_budget(&out, cds.len());
        return Ok(out);
    }
    let mut out = decide_exact(g)?;
    out.stats_mut().rung = Some("exact-fallback");
    Ok(out)
}

fn assert_partition_budget(out: &SolveOutcome, x_len: usize) {
    let emitted = out.stats().partitions2_examined + out.stats().partitions3_examined;
    let bound = ((x_len + 1) * (x_len + 1) * 4) as u64;
    assert!(
        emitted <= bound,
        "partition family outgrew the clique/P3 budget: {emitted} > {bound}"
    );
}

/// Bounded 5-way branching for a P5-hitting set of size at most k.
pub fn p5_hitting_set(g: &Graph, k: usize) -> Option<VertexSet> {
    fn go(g: &Graph, removed: &mut VertexSet, budget: usize) -> bool {
        match find_induced_p5_avoiding(g, removed) {
            None => true,
            Some(path) => {
                if budget == 0 {
                    return false;
                }
                for v in path {
                    removed.insert(v);
                    if go(g, removed, budget - 1) {
                        return true;
                    }
                    removed.remove(v);
                }
                false
            }
        }
    }
    let mut removed = VertexSet::empty(g.n());
    if go(g, &mut removed, k) {
        debug_assert!(find_induced_p5_avoiding(g, &removed).is_none());
        Some(removed)
    } else {
        None
    }
}

/// One component of the two-case scheme: its induced graph over K_i + X,
/// a dominating set of it, and how to enumerate partitions there.
struct ComponentPlan {
    graph: Graph,
    old_ids: Vec<usize>,
    dominating: VertexSet,
    enumeration: PartitionEnumeration,
}

impl ComponentPlan {
    fn localize(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.graph.n());
        for (local, &orig) in self.old_ids.iter().enumerate() {
            if s.contains(orig) {
                out.insert(local);
            }
        }
        out
    }

    fn globalize(&self, s: &VertexSet, n: usize) -> VertexSet {
        let mut out = VertexSet::empty(n);
        for v in s.iter() {
            out.insert(self.old_ids[v]);
        }
        out
    }
}

/// Builds the per-component plans for the two-case scheme. `finder`
/// produces a dominating set of the component graph plus an independence
/// bound, or `None` to degrade that component to exhaustive enumeration.
fn build_plans(
    g: &Graph,
    x: &VertexSet,
    stats: &mut SolveStats,
    finder: &mut dyn FnMut(&Graph) -> Option<(VertexSet, usize)>,
) -> Vec<ComponentPlan> {
    let mut plans = Vec::new();
    for comp in g.components(x) {
        let keep = comp.union(x);
        let (gi, old_ids) = g.induced(&keep);
        let (g_comp, comp_ids) = g.induced(&comp);
        let (x_i_global, enumeration) = match finder(&g_comp) {
            Some((set, alpha)) => {
                let mut global = VertexSet::empty(g.n());
                for v in set.iter() {
                    global.insert(comp_ids[v]);
                }
                (global, PartitionEnumeration::BoundedAlpha(alpha + x.len()))
            }
            None => {
                stats.guard_exceeded = true;
                stats
                    .notes
                    .push("component degraded to exhaustive enumeration".into());
                (comp.clone(), PartitionEnumeration::Exhaustive)
            }
        };
        let mut plan = ComponentPlan {
            graph: gi,
            old_ids,
            dominating: VertexSet::empty(0),
            enumeration,
        };
        plan.dominating = plan.localize(&x_i_global.union(x));
        debug_assert!(verify_dominating(&plan.graph, &plan.dominating).is_ok());
        plans.push(plan);
    }
    plans
}

/// The two-case scheme shared by the P5-hitting and alpha-deletion
/// parameterizations: guess how the deletion set X meets the cutset and
/// whether it is split, then run the filtered dominating machinery inside
/// each component of G - X.
fn two_case_solve(
    g: &Graph,
    x: &VertexSet,
    mut stats: SolveStats,
    plans: &[ComponentPlan],
    algorithm: &'static str,
) -> Result<SolveOutcome> {
    let n = g.n();
    // Global subset pre-check over X. Beyond discharging cutsets inside X,
    // this covers the blind spot of the per-component runs: a cutset
    // containing all of X can split off an entire component of G - X, and
    // no induced graph G[K_i + X] sees that separation.
    let filter = PartitionFilter::none(n);
    if let Some(w) = subset_precheck(g, x, &filter, &mut stats) {
        stats.phase = Some("subset-precheck");
        return SolveOutcome::yes(g, w, algorithm, stats)
            .map(|o| o.with_parameter(x.len() as u64));
    }
    if plans.is_empty() {
        // X covers the whole graph, so the pre-check above was exhaustive
        return Ok(SolveOutcome::no(algorithm, stats).with_parameter(x.len() as u64));
    }

    // Case 1: X meets at most one component of G - S*; guess X* = S* cap X.
    for x_star in independent_subsets(g, x, VertexSet::empty(n), x.len()) {
        let a_star = x.minus(&x_star);
        for plan in plans {
            let filter = PartitionFilter {
                a_star: plan.localize(&a_star),
                b_star: VertexSet::empty(plan.graph.n()),
                x_star: plan.localize(&x_star),
            };
            let mut found = no_split_case(
                &plan.graph,
                &plan.dominating,
                Some(&filter),
                plan.enumeration,
                &mut stats,
            )?;
            if found.is_none() {
                found = split_case(
                    &plan.graph,
                    &plan.dominating,
                    Some(&filter),
                    plan.enumeration,
                    &mut stats,
                )?;
            }
            if let Some(w_local) = found {
                let w = plan.globalize(&w_local, n);
                if g.is_independent(&w) && g.is_cutset(&w) {
                    stats.phase = Some("case1");
                    return SolveOutcome::yes(g, w, algorithm, stats)
                        .map(|o| o.with_parameter(x.len() as u64));
                }
            }
        }
    }

    // Case 2: X is split; guess (A*, B*, X*) and separate inside every
    // component, then take the union.
    for guess in partitions3(g, x, None) {
        let mut union = VertexSet::empty(n);
        let mut all = true;
        for plan in plans {
            let filter = PartitionFilter {
                a_star: plan.localize(&guess.a),
                b_star: plan.localize(&guess.b),
                x_star: plan.localize(&guess.xp),
            };
            match split_case(
                &plan.graph,
                &plan.dominating,
                Some(&filter),
                plan.enumeration,
                &mut stats,
            )? {
                Some(w_local) => union.union_with(&plan.globalize(&w_local, n)),
                None => {
                    all = false;
                    break;
                }
            }
        }
        if all
            && g.is_independent(&union)
            && guess.xp.is_subset_of(&union)
            && g.separates(&union, &guess.a, &guess.b)
            && g.is_cutset(&union)
        {
            stats.phase = Some("case2");
            return SolveOutcome::yes(g, union, algorithm, stats)
                .map(|o| o.with_parameter(x.len() as u64));
        }
    }
    Ok(SolveOutcome::no(algorithm, stats).with_parameter(x.len() as u64))
}

/// Decide via a P5-hitting set of size at most k.
pub fn solve_by_p5_hitting(g: &Graph, k: usize) -> Result<SolveOutcome> {
    g.require_connected()?;
    let x = p5_hitting_set(g, k).ok_or(Error::ParameterTooSmall { k })?;
    let mut stats = SolveStats::default();
    let plans = build_plans(g, &x, &mut stats, &mut |g_comp| {
        find_clique_or_p3_dominating(g_comp).map(|d| {
            let bound = d.alpha_bound();
            (d.set, bound)
        })
    });
    two_case_solve(g, &x, stats, &plans, "p5-hitting")
}

/// Decide with a dominating set of bounded independence number: the same
/// machinery, enumerated through the bounded-alpha walk.
pub fn solve_alpha_dominated(g: &Graph, x: &VertexSet, c: usize) -> Result<SolveOutcome> {
    g.require_connected()?;
    verify_dominating(g, x)?;
    solve_with_dominating_core(
        g,
        x,
        "alpha-dominated",
        PartitionEnumeration::BoundedAlpha(c),
    )
}

/// tK2-free graphs: t = 2 goes through the quadratic MIS sweep, larger t
/// runs the exact sweep with a polynomial-count guard flag.
pub fn solve_tk2_free(g: &Graph, t: usize) -> Result<SolveOutcome> {
    g.require_connected()?;
    if let Some(vertices) = find_induced_tk2(g, t) {
        return Err(Error::NotTK2Free { t, vertices });
    }
    if t == 2 {
        return decide_2k2_free(g);
    }
    let mut out = decide_exact(g)?;
    let guard = (g.n() as u64).saturating_pow(2 * t as u32);
    if out.stats().mis_examined > guard {
        out.stats_mut().guard_exceeded = true;
    }
    Ok(out.with_parameter(t as u64))
}

/// Decide when G - X is alpha_c-dominated component by component: the
/// two-case scheme with the generalized dominating-set finder. Components
/// where no bounded dominator surfaces degrade to exhaustive enumeration
/// (recorded in the stats).
pub fn solve_by_alpha_deletion(g: &Graph, x: &VertexSet, c: usize) -> Result<SolveOutcome> {
    g.require_connected()?;
    let mut stats = SolveStats::default();
    let plans = build_plans(g, x, &mut stats, &mut |g_comp| {
        find_alpha_dominating(g_comp, c)
    });
    two_case_solve(g, x, stats, &plans, "alpha-deletion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{
        clique, complement_of_bipartite, cycle, gnp_connected, path, random_split,
    };
    use crate::oracle::brute_decide;

    #[test]
    fn dominating_shape_scan() {
        // C4: the pair {0,1} dominates
        let d = find_clique_or_p3_dominating(&cycle(4)).unwrap();
        assert_eq!(d.set.to_vec(), vec![0, 1]);
        assert_eq!(d.shape, DominatorShape::Clique);

        // P5: the middle P3 dominates
        let d = find_clique_or_p3_dominating(&path(5)).unwrap();
        assert_eq!(d.set.to_vec(), vec![1, 2, 3]);
        assert_eq!(d.shape, DominatorShape::P3);

        // C6: no dominating clique or P3 exists
        assert!(find_clique_or_p3_dominating(&cycle(6)).is_none());
    }

    #[test]
    fn p5_free_examples() {
        let out = solve_p5_free(&cycle(4)).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![0, 2]);

        assert!(!solve_p5_free(&clique(4)).unwrap().answer());

        match solve_p5_free(&path(5)) {
            Err(Error::NotP5Free { path }) => assert_eq!(path, [0, 1, 2, 3, 4]),
            other => panic!("expected P5 violation, got {other:?}"),
        }
    }

    #[test]
    fn p5_free_matches_exact_on_split_graphs() {
        for seed in 0..40u64 {
            let g = random_split(6 + (seed % 10) as usize, seed);
            let got = solve_p5_free(&g).unwrap();
            let want = decide_exact(&g).unwrap();
            assert_eq!(got.answer(), want.answer(), "seed {seed}");
            assert_ne!(got.stats().rung, Some("exact-fallback"), "seed {seed}");
        }
    }

    #[test]
    fn p5_free_matches_exact_on_cobipartite() {
        for seed in 0..25u64 {
            let g = complement_of_bipartite(9, seed).unwrap();
            assert!(find_induced_p5(&g).is_none());
            let got = solve_p5_free(&g).unwrap();
            let want = decide_exact(&g).unwrap();
            assert_eq!(got.answer(), want.answer(), "seed {seed}");
        }
    }

    #[test]
    fn p5_hitting_sets() {
        assert_eq!(p5_hitting_set(&cycle(4), 0).unwrap().len(), 0);
        let x = p5_hitting_set(&path(6), 1).unwrap();
        assert_eq!(x.len(), 1);
        assert!(find_induced_p5_avoiding(&path(6), &x).is_none());
        assert!(p5_hitting_set(&path(10), 1).is_none());
    }

    #[test]
    fn p5_hitting_solver() {
        // P6 with k = 1: an interior vertex cuts
        let out = solve_by_p5_hitting(&path(6), 1).unwrap();
        assert!(out.answer());

        // C6 needs k = 2 and has a size-2 witness
        let out = solve_by_p5_hitting(&cycle(6), 2).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().len(), 2);

        assert!(matches!(
            solve_by_p5_hitting(&path(10), 1),
            Err(Error::ParameterTooSmall { k: 1 })
        ));

        assert!(!solve_by_p5_hitting(&clique(4), 1).unwrap().answer());
    }

    #[test]
    fn p5_hitting_matches_oracle() {
        for seed in 0..30u64 {
            let n = 5 + (seed % 4) as usize;
            let g = gnp_connected(n, 0.4, seed).unwrap();
            if p5_hitting_set(&g, 3).is_none() {
                continue;
            }
            let got = solve_by_p5_hitting(&g, 3).unwrap();
            let want = brute_decide(&g).unwrap();
            assert_eq!(got.answer(), want.answer(), "seed {seed}");
        }
    }

    #[test]
    fn alpha_dominated_examples() {
        // universal vertex with c = 1
        let mut edges: Vec<(usize, usize)> = (1..6).map(|v| (0, v)).collect();
        edges.push((1, 2));
        edges.push((3, 4));
        let g = Graph::from_edges(6, &edges);
        let got = solve_alpha_dominated(&g, &VertexSet::singleton(6, 0), 1).unwrap();
        assert_eq!(got.answer(), decide_exact(&g).unwrap().answer());

        let out = solve_alpha_dominated(&cycle(4), &VertexSet::from_slice(4, &[0, 1]), 2).unwrap();
        assert!(out.answer());

        assert!(
            !solve_alpha_dominated(&clique(4), &VertexSet::singleton(4, 0), 1)
                .unwrap()
                .answer()
        );
    }

    #[test]
    fn alpha_dominated_matches_oracle() {
        for seed in 0..30u64 {
            let n = 5 + (seed % 4) as usize;
            let g = gnp_connected(n, 0.5, seed).unwrap();
            let x = crate::enumerate::maximal_independent_sets(&g)
                .next()
                .unwrap();
            let c = g.alpha_of(&x);
            let got = solve_alpha_dominated(&g, &x, c).unwrap();
            let want = brute_decide(&g).unwrap();
            assert_eq!(got.answer(), want.answer(), "seed {seed}");
        }
    }

    #[test]
    fn tk2_free_solver() {
        assert!(solve_tk2_free(&cycle(4), 2).unwrap().answer());
        assert!(matches!(
            solve_tk2_free(&cycle(8), 2),
            Err(Error::NotTK2Free { t: 2, .. })
        ));
        // complete tripartite K(2,2,2) is 2K2-free
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(6, &edges);
        let got = solve_tk2_free(&g, 2).unwrap();
        assert_eq!(got.answer(), decide_exact(&g).unwrap().answer());
        // t = 3 keeps the guard quiet at this scale
        let got = solve_tk2_free(&cycle(5), 3).unwrap();
        assert!(got.answer());
        assert!(!got.stats().guard_exceeded);
    }

    #[test]
    fn hitting_set_inside_the_cutset() {
        // Every independent cutset contains the hitting set X = {1}, which
        // cuts off vertex 4 on its own. No induced component graph sees
        // that separation, so the global subset pre-check must catch it.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1),
                (0, 3),
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 3),
                (1, 4),
                (1, 7),
                (2, 5),
                (2, 6),
                (2, 7),
                (2, 8),
                (3, 5),
                (3, 7),
                (3, 8),
                (5, 7),
                (6, 7),
                (7, 8),
            ],
        );
        assert_eq!(p5_hitting_set(&g, 3).unwrap().to_vec(), vec![1]);
        let out = solve_by_p5_hitting(&g, 3).unwrap();
        assert!(out.answer());
        assert_eq!(out.stats().phase, Some("subset-precheck"));
    }

    #[test]
    fn alpha_deletion_examples() {
        // X empty on a P5-free graph behaves like the plain solver
        let g = cycle(4);
        let got = solve_by_alpha_deletion(&g, &VertexSet::empty(4), 2).unwrap();
        assert!(got.answer());

        // C6 with X = {0,3}: remaining components are single edges
        let g = cycle(6);
        let got = solve_by_alpha_deletion(&g, &VertexSet::from_slice(6, &[0, 3]), 1).unwrap();
        assert_eq!(got.answer(), decide_exact(&g).unwrap().answer());
        assert!(got.answer());
    }

    #[test]
    fn alpha_deletion_matches_oracle() {
        for seed in 0..30u64 {
            let n = 5 + (seed % 4) as usize;
            let g = gnp_connected(n, 0.4, seed).unwrap();
            let x = VertexSet::from_slice(n, &[0, 1]);
            let got = solve_by_alpha_deletion(&g, &x, 2).unwrap();
            let want = brute_decide(&g).unwrap();
            assert_eq!(got.answer(), want.answer(), "seed {seed}");
        }
    }
}
