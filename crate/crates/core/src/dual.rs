//! Dual parameterizations: n minus the maximum degree, and n minus the
//! solution size via minimal vertex covers.

use crate::enumerate::{
    independent_subsets, maximal_independent_supersets, minimal_vertex_covers_upto,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::vset::VertexSet;

/// Parameter k = n - max degree. Phase 1 checks independent sets through
/// the max-degree vertex v (all live inside R + v where R = V - N[v]);
/// phase 2 guesses the side R' cut away from v, forces I = N(v) cap N(R')
/// into the cutset, contracts I and drops the rest of N[v], and sweeps the
/// maximal independent sets of the k-vertex remainder.
pub fn solve_by_dual_degree(g: &Graph) -> Result<SolveOutcome> {
    g.require_connected()?;
    let mut stats = SolveStats::default();
    let n = g.n();
    let v = g.max_degree_vertex().expect("nonempty graph");
    let k = n - g.degree(v);
    let r = g.closed_neighbors(v).complement();

    // Phase 1: independent subsets of R + {v} containing v. R holds no
    // neighbor of v, so independence of S + {v} is independence of S.
    for s in independent_subsets(g, &r, VertexSet::empty(n), n) {
        stats.subsets_examined += 1;
        let mut cand = s;
        cand.insert(v);
        if !g.is_independent(&cand) {
            continue;
        }
        if g.is_cutset(&cand) {
            stats.phase = Some("phase1");
            return SolveOutcome::yes(g, cand, "dual-degree", stats)
                .map(|o| o.with_parameter(k as u64));
        }
    }

    // Phase 2: nonempty R' subsets of R, by increasing size.
    let r_vec = r.to_vec();
    let mut guesses: Vec<VertexSet> = Vec::new();
    for mask in 1u64..1 << r_vec.len() {
        let mut s = VertexSet::empty(n);
        for (i, &u) in r_vec.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(u);
            }
        }
        guesses.push(s);
    }
    guesses.sort_by_key(|s| (s.len(), s.to_vec()));

    for r_prime in guesses {
        stats.subsets_examined += 1;
        let i_set = g.neighbors(v).intersect(&g.neighborhood(&r_prime));
        if !g.is_independent(&i_set) {
            continue;
        }
        // keep R plus the forced common neighborhood, drop the rest of N[v]
        let keep = r.union(&i_set);
        let (g_kept, old_ids) = g.induced(&keep);
        let mut new_id = vec![usize::MAX; n];
        for (i, &u) in old_ids.iter().enumerate() {
            new_id[u] = i;
        }
        let classes: Vec<VertexSet> = if i_set.is_empty() {
            Vec::new()
        } else {
            vec![VertexSet::from_slice(
                g_kept.n(),
                &i_set.iter().map(|u| new_id[u]).collect::<Vec<_>>(),
            )]
        };
        let (reduced, cmap) = g_kept.contract(&classes)?;
        assert!(
            reduced.n() <= k + 1,
            "reduced instance must stay within the dual parameter"
        );
        let seed = if i_set.is_empty() {
            VertexSet::empty(reduced.n())
        } else {
            let local = new_id[i_set.first().unwrap()];
            VertexSet::singleton(reduced.n(), cmap.forward[local])
        };
        let Ok(supersets) = maximal_independent_supersets(&reduced, &seed) else {
            continue;
        };
        for s_prime in supersets {
            stats.mis_examined += 1;
            // map back: super-vertex becomes I, the rest are R-vertices
            let expanded = cmap.expand(&s_prime, g_kept.n());
            let mut cand = i_set.clone();
            for u in expanded.iter() {
                cand.insert(old_ids[u]);
            }
            if g.is_independent(&cand) && g.is_cutset(&cand) {
                stats.phase = Some("phase2");
                return SolveOutcome::yes(g, cand, "dual-degree", stats)
                    .map(|o| o.with_parameter(k as u64));
            }
        }
    }
    Ok(SolveOutcome::no("dual-degree", stats).with_parameter(k as u64))
}

/// Is there an independent cutset of size at least n - k? The complement of
/// such a cutset is a vertex cover of size at most k, and shrinking a cover
/// to a minimal one only grows the independent complement, so minimal
/// covers suffice.
pub fn solve_dual_solution_size(g: &Graph, k: usize) -> Result<SolveOutcome> {
    g.require_connected()?;
    let mut stats = SolveStats::default();
    for cover in minimal_vertex_covers_upto(g, k) {
        stats.subsets_examined += 1;
        let cand = cover.complement();
        if g.is_cutset(&cand) {
            debug_assert!(g.is_independent(&cand));
            return SolveOutcome::yes(g, cand, "dual-size", stats)
                .map(|o| o.with_parameter(k as u64));
        }
    }
    Ok(SolveOutcome::no("dual-size", stats).with_parameter(k as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{clique, cycle, gnp_connected, path, star};
    use crate::oracle::brute_decide;

    #[test]
    fn dual_degree_examples() {
        let out = solve_by_dual_degree(&star(4)).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![0]);

        assert!(!solve_by_dual_degree(&clique(4)).unwrap().answer());

        let out = solve_by_dual_degree(&cycle(5)).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().len(), 2);
    }

    #[test]
    fn dual_degree_matches_oracle() {
        for seed in 0..60u64 {
            let n = 4 + (seed % 5) as usize;
            let g = gnp_connected(n, 0.4, seed).unwrap();
            assert_eq!(
                solve_by_dual_degree(&g).unwrap().answer(),
                brute_decide(&g).unwrap().answer(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn dual_size_examples() {
        // P4, k=2: witness {1,3}
        let out = solve_dual_solution_size(&path(4), 2).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![1, 3]);

        // K4, k=2: no cover that small
        assert!(!solve_dual_solution_size(&clique(4), 2).unwrap().answer());

        // C6, k=3: witness {1,3,5}
        let out = solve_dual_solution_size(&cycle(6), 3).unwrap();
        assert_eq!(out.witness().unwrap().to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn dual_size_matches_brute_force_and_is_monotone() {
        for seed in 0..20u64 {
            let n = 5 + (seed % 3) as usize;
            let g = gnp_connected(n, 0.45, seed).unwrap();
            let mut prev_yes = false;
            for k in 0..=n {
                // brute force: any independent cutset of size >= n - k?
                let full = VertexSet::full(n);
                let want = independent_subsets(&g, &full, VertexSet::empty(n), n)
                    .any(|s| !s.is_empty() && s.len() + k >= n && g.is_cutset(&s));
                let got = solve_dual_solution_size(&g, k).unwrap().answer();
                assert_eq!(got, want, "seed {seed} k {k}");
                assert!(!prev_yes || got, "monotone in k");
                prev_yes = got;
            }
        }
    }
}
