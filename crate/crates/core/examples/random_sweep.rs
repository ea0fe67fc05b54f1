//! Heavy verification tool: seeded random connected graphs with 9 to 14
//! vertices across every solver family, against the brute-force oracle.
//!
//!     cargo run --release -p indcut --example random_sweep -- 30000
use indcut::dominating::*;
use indcut::dual::*;
use indcut::enumerate::maximal_independent_sets;
use indcut::exact::*;
use indcut::oracle::{brute_decide, brute_minimum, random_connected};
use indcut::structured::*;
use indcut::treewidth::*;
use indcut::vset::VertexSet;
use std::time::Instant;

fn main() {
    let trials: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5000);
    let t0 = Instant::now();
    let mut yes = 0usize;
    for seed in 0..trials {
        let n = 9 + (seed % 6) as usize;
        let g = random_connected(n, 500_000 + seed);
        let want = brute_decide(&g).unwrap().answer();
        if want { yes += 1; }

        assert_eq!(decide_exact(&g).unwrap().answer(), want, "exact seed {seed}");
        assert_eq!(solve_by_dual_degree(&g).unwrap().answer(), want, "dual seed {seed}");
        assert_eq!(
            solve_by_independence_number(&g).unwrap().answer(),
            want,
            "ind seed {seed}"
        );
        let mis = maximal_independent_sets(&g).next().unwrap();
        assert_eq!(
            solve_with_dominating_set(&g, &mis).unwrap().answer(),
            want,
            "dom-mis seed {seed}"
        );
        assert_eq!(
            solve_with_dominating_set(&g, &VertexSet::full(n)).unwrap().answer(),
            want,
            "dom-v seed {seed}"
        );
        // alpha-dominated through the bounded walk
        let c = g.alpha_of(&mis);
        assert_eq!(
            solve_alpha_dominated(&g, &mis, c).unwrap().answer(),
            want,
            "alpha seed {seed}"
        );
        // dp with a heuristic decomposition, empty refinement
        let td = heuristic_tree_decomposition(&g).unwrap();
        let nice = make_nice(&g, &td).unwrap();
        let rtd = refine_with_deletion_set(&g, &nice, &VertexSet::empty(n));
        assert_eq!(dp_solve(&g, &rtd).unwrap().answer(), want, "dp seed {seed}");
        // minimization
        assert_eq!(
            minimum_independent_cutset(&g).unwrap().map(|p| p.1),
            brute_minimum(&g).unwrap(),
            "min seed {seed}"
        );
        // alpha-deletion with a 2-vertex deletion set
        let x = VertexSet::from_slice(n, &[0, 1]);
        assert_eq!(
            solve_by_alpha_deletion(&g, &x, 3).unwrap().answer(),
            want,
            "alpha-del seed {seed}"
        );
        // p5-hitting where a small set exists
        if p5_hitting_set(&g, 3).is_some() {
            assert_eq!(
                solve_by_p5_hitting(&g, 3).unwrap().answer(),
                want,
                "p5-hit seed {seed}"
            );
        }
        // triangle-hitting with a generous budget
        if triangle_hitting_set(&g, 6).is_some() {
            assert_eq!(
                solve_by_triangle_hitting(&g, 6).unwrap().answer(),
                want,
                "tri seed {seed}"
            );
        }
        // oct: search a transversal of size <= 3 by brute force
        let mut oct_found = None;
        'oct: for mask in 0u32..1 << n {
            if mask.count_ones() > 3 {
                continue;
            }
            let cand = VertexSet::from_slice(
                n,
                &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
            );
            // bipartite check through the solver's own error path
            match solve_by_oct(&g, &cand) {
                Ok(out) => {
                    oct_found = Some(out);
                    break 'oct;
                }
                Err(indcut::Error::NotBipartite { .. }) => continue,
                Err(e) => panic!("unexpected: {e}"),
            }
        }
        if let Some(out) = oct_found {
            assert_eq!(out.answer(), want, "oct seed {seed}");
        }
        // chordal deletion pipeline with a brute small deletion set
        if let Some(x) = brute_chordal_deletion(&g, 3).unwrap() {
            assert_eq!(
                solve_by_chordal_deletion(&g, &x).unwrap().answer(),
                want,
                "chordal seed {seed}"
            );
        }
        if seed % 500 == 0 {
            eprintln!("  {seed} done ({:.1?})", t0.elapsed());
        }
    }
    println!(
        "random sweep: {trials} graphs, {yes} yes, all solver families agree in {:.1?}",
        t0.elapsed()
    );
}
