//! Decision and minimization by sweeping maximal independent sets: any
//! independent cutset extends to a maximal one that still cuts, so the
//! maximal sets suffice.

use crate::enumerate::{find_induced_tk2, maximal_independent_sets};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypercut::shrink_independent_cutset;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::vset::VertexSet;

pub const ALGORITHM_EXACT: &str = "exact";

/// O*(3^{n/3}) decision: first maximal independent set that is a cutset.
pub fn decide_exact(g: &Graph) -> Result<SolveOutcome> {
    g.require_connected()?;
    let mut stats = SolveStats::default();
    for mis in maximal_independent_sets(g) {
        stats.mis_examined += 1;
        if g.is_cutset(&mis) {
            return SolveOutcome::yes(g, mis, ALGORITHM_EXACT, stats);
        }
    }
    Ok(SolveOutcome::no(ALGORITHM_EXACT, stats))
}

/// Neighborhood fast path: a vertex in no triangle has an independent
/// neighborhood, which is a cutset unless it swallows the rest of the
/// graph. Scans every vertex, so stars resolve through a leaf. `None` means
/// the fast path does not apply, not "no".
pub fn decide_exact_fastpath_trianglefree(g: &Graph) -> Result<Option<SolveOutcome>> {
    g.require_connected()?;
    let mut stats = SolveStats::default();
    for v in 0..g.n() {
        if !g.is_independent(g.neighbors(v)) {
            continue;
        }
        let nv = g.neighbors(v).clone();
        stats.subsets_examined += 1;
        if g.is_cutset(&nv) {
            stats.phase = Some("triangle-free-neighborhood");
            return Ok(Some(SolveOutcome::yes(
                g,
                nv,
                "trianglefree-fastpath",
                stats,
            )?));
        }
    }
    Ok(None)
}

/// Minimum independent cutset: sweep every maximal independent set, shrink
/// each cutting one to its smallest contained cutset, keep the global
/// minimum (first found among ties).
pub fn minimum_independent_cutset(g: &Graph) -> Result<Option<(VertexSet, usize)>> {
    g.require_connected()?;
    let mut best: Option<VertexSet> = None;
    for mis in maximal_independent_sets(g) {
        if !g.is_cutset(&mis) {
            continue;
        }
        let shrunk = shrink_independent_cutset(g, &mis)?;
        if best.as_ref().is_none_or(|b| shrunk.len() < b.len()) {
            best = Some(shrunk);
        }
    }
    Ok(best.map(|s| {
        let k = s.len();
        (s, k)
    }))
}

/// Polynomial case: 2K2-free graphs have O(n^2) maximal independent sets.
/// The absence of an induced 2K2 is verified up front.
pub fn decide_2k2_free(g: &Graph) -> Result<SolveOutcome> {
    g.require_connected()?;
    if let Some(vs) = find_induced_tk2(g, 2) {
        return Err(Error::Not2K2Free {
            vertices: [vs[0], vs[1], vs[2], vs[3]],
        });
    }
    let mut stats = SolveStats::default();
    let mut witness = None;
    for mis in maximal_independent_sets(g) {
        stats.mis_examined += 1;
        if witness.is_none() && g.is_cutset(&mis) {
            witness = Some(mis);
        }
    }
    // Farber: 2K2-free graphs have O(n^2) maximal independent sets.
    let bound = (g.n() * g.n() + g.n() + 1) as u64;
    if stats.mis_examined > bound {
        stats.guard_exceeded = true;
    }
    match witness {
        Some(w) => SolveOutcome::yes(g, w, "2k2-free", stats),
        None => Ok(SolveOutcome::no("2k2-free", stats)),
    }
}

/// Convenience used by the auto mode: does the Chen-Yu edge bound apply?
pub fn chen_yu_applies(g: &Graph) -> bool {
    g.n() >= 4 && g.m() <= 2 * g.n() - 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{clique, cycle, gnp_connected, path, star, wheel};
    use crate::oracle::{brute_decide, brute_minimum};

    #[test]
    fn decide_examples() {
        let outcome = decide_exact(&star(4)).unwrap();
        assert!(outcome.answer());
        assert_eq!(outcome.witness().unwrap().to_vec(), vec![0]);

        assert!(!decide_exact(&clique(4)).unwrap().answer());
        assert!(!decide_exact(&wheel(6)).unwrap().answer());
        assert!(matches!(
            decide_exact(&Graph::from_edges(4, &[(0, 1), (2, 3)])),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn fastpath_examples() {
        // Petersen graph: triangle-free, any neighborhood cuts
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        let out = decide_exact_fastpath_trianglefree(&petersen)
            .unwrap()
            .unwrap();
        assert!(out.answer());

        // star: the center's neighborhood is not a cutset but a leaf's is
        let out = decide_exact_fastpath_trianglefree(&star(5))
            .unwrap()
            .unwrap();
        assert_eq!(out.witness().unwrap().to_vec(), vec![0]);

        // K2: no independent cutset, fast path declines
        assert!(decide_exact_fastpath_trianglefree(&path(2))
            .unwrap()
            .is_none());
    }

    #[test]
    fn minimization_examples() {
        let (w, k) = minimum_independent_cutset(&path(4)).unwrap().unwrap();
        assert_eq!(k, 1);
        assert!(path(4).is_independent_cutset(&w));
        // deterministic: repeated runs pick the same interior vertex
        let (w2, _) = minimum_independent_cutset(&path(4)).unwrap().unwrap();
        assert_eq!(w.to_vec(), w2.to_vec());

        let (_, k) = minimum_independent_cutset(&cycle(6)).unwrap().unwrap();
        assert_eq!(k, 2);

        assert!(minimum_independent_cutset(&clique(4)).unwrap().is_none());
    }

    #[test]
    fn two_k2_free_examples() {
        let out = decide_2k2_free(&cycle(4)).unwrap();
        assert!(out.answer());
        assert_eq!(out.witness().unwrap().to_vec(), vec![0, 2]);

        match decide_2k2_free(&cycle(6)) {
            Err(Error::Not2K2Free { vertices }) => assert_eq!(vertices, [0, 1, 3, 4]),
            other => panic!("expected 2K2 violation, got {other:?}"),
        }
    }

    #[test]
    fn two_k2_free_split_graphs_match_exact() {
        for seed in 0..25u64 {
            let g = crate::generate::random_split(6 + (seed as usize % 30), seed);
            let a = decide_2k2_free(&g).unwrap();
            let b = decide_exact(&g).unwrap();
            assert_eq!(a.answer(), b.answer(), "seed {seed}");
            // count stays quadratic
            assert!(a.stats().mis_examined <= (g.n() * g.n()) as u64 + 1);
        }
    }

    #[test]
    fn matches_oracle_small() {
        for seed in 0..60u64 {
            let n = 4 + (seed % 5) as usize;
            let g = gnp_connected(n, 0.45, seed).unwrap();
            let got = decide_exact(&g).unwrap();
            let want = brute_decide(&g).unwrap();
            assert_eq!(got.answer(), want.answer(), "seed {seed}");
            assert_eq!(
                minimum_independent_cutset(&g).unwrap().map(|p| p.1),
                brute_minimum(&g).unwrap()
            );
        }
    }

    #[test]
    fn maximal_supersets_of_cutsets_still_cut() {
        use crate::enumerate::{independent_subsets, maximal_independent_supersets};
        for seed in 0..20u64 {
            let g = gnp_connected(7, 0.4, seed).unwrap();
            let full = VertexSet::full(7);
            for s in independent_subsets(&g, &full, VertexSet::empty(7), 7) {
                if s.is_empty() || !g.is_cutset(&s) {
                    continue;
                }
                for sup in maximal_independent_supersets(&g, &s).unwrap() {
                    assert!(g.is_cutset(&sup));
                }
            }
        }
    }
}
