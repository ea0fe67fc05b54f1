//! Heavy verification tool: every connected 8-vertex graph up to
//! isomorphism (11117 of them), every solver family, against the
//! brute-force oracle.
//!
//!     cargo run --release -p indcut --example census_sweep

use indcut::dominating::{solve_by_independence_number, solve_with_dominating_set};
use indcut::dual::solve_by_dual_degree;
use indcut::enumerate::maximal_independent_sets;
use indcut::exact::decide_exact;
use indcut::oracle::{brute_decide, connected_graphs_exact};
use indcut::structured::{p5_hitting_set, solve_by_alpha_deletion, solve_by_p5_hitting};
use indcut::treewidth::{
    dp_solve, heuristic_tree_decomposition, make_nice, refine_with_deletion_set,
};
use indcut::vset::VertexSet;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let graphs = connected_graphs_exact(8);
    eprintln!(
        "generated {} connected graphs on 8 vertices in {:.1?}",
        graphs.len(),
        t0.elapsed()
    );
    assert_eq!(graphs.len(), 11117, "known census count");
    let mut yes = 0usize;
    for (i, g) in graphs.iter().enumerate() {
        let want = brute_decide(g).unwrap().answer();
        if want {
            yes += 1;
        }
        assert_eq!(decide_exact(g).unwrap().answer(), want, "exact @{i}");
        assert_eq!(
            solve_by_independence_number(g).unwrap().answer(),
            want,
            "ind @{i}"
        );
        assert_eq!(solve_by_dual_degree(g).unwrap().answer(), want, "dual @{i}");
        let mis = maximal_independent_sets(g).next().unwrap();
        assert_eq!(
            solve_with_dominating_set(g, &mis).unwrap().answer(),
            want,
            "dom-mis @{i}"
        );
        assert_eq!(
            solve_with_dominating_set(g, &VertexSet::full(8)).unwrap().answer(),
            want,
            "dom-v @{i}"
        );
        let td = heuristic_tree_decomposition(g).unwrap();
        let nice = make_nice(g, &td).unwrap();
        let rtd = refine_with_deletion_set(g, &nice, &VertexSet::empty(8));
        assert_eq!(dp_solve(g, &rtd).unwrap().answer(), want, "dp @{i}");
        if p5_hitting_set(g, 3).is_some() {
            assert_eq!(
                solve_by_p5_hitting(g, 3).unwrap().answer(),
                want,
                "p5-hit @{i}"
            );
        }
        for xs in [vec![], vec![0], vec![0, 1]] {
            let x = VertexSet::from_slice(8, &xs);
            assert_eq!(
                solve_by_alpha_deletion(g, &x, 2).unwrap().answer(),
                want,
                "alpha-del @{i} X={xs:?}"
            );
        }
        if i % 2000 == 0 {
            eprintln!("  {i} done");
        }
    }
    println!(
        "census sweep: all {} graphs agree across every solver family ({yes} yes) in {:.1?}",
        graphs.len(),
        t0.elapsed()
    );
}
