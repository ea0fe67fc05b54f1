//! Brute-force ground truth for every solver, plus the small-graph corpus.

use crate::enumerate::independent_subsets;
use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::vset::VertexSet;
use std::collections::HashSet;

const BRUTE_MAX: usize = 20;

fn guard(g: &Graph) -> Result<()> {
    if g.n() > BRUTE_MAX {
        return Err(Error::TooLargeForBruteForce {
            n: g.n(),
            max: BRUTE_MAX,
        });
    }
    Ok(())
}

/// Exhaustive scan over independent subsets; yes at the first cutset.
pub fn brute_decide(g: &Graph) -> Result<SolveOutcome> {
    guard(g)?;
    g.require_connected()?;
    let mut stats = SolveStats::default();
    let full = VertexSet::full(g.n());
    for s in independent_subsets(g, &full, VertexSet::empty(g.n()), g.n()) {
        stats.subsets_examined += 1;
        if !s.is_empty() && g.is_cutset(&s) {
            return SolveOutcome::yes(g, s, "brute", stats);
        }
    }
    Ok(SolveOutcome::no("brute", stats))
}

/// Minimum cardinality of an independent cutset, if any.
pub fn brute_minimum(g: &Graph) -> Result<Option<usize>> {
    guard(g)?;
    g.require_connected()?;
    let full = VertexSet::full(g.n());
    let mut best: Option<usize> = None;
    for s in independent_subsets(g, &full, VertexSet::empty(g.n()), g.n()) {
        if s.is_empty() || best.is_some_and(|b| s.len() >= b) {
            continue;
        }
        if g.is_cutset(&s) {
            best = Some(s.len());
        }
    }
    Ok(best)
}

/// Minimum size of an independent cutset among subsets of `sp`.
pub fn brute_minimum_within(g: &Graph, sp: &VertexSet) -> Result<Option<usize>> {
    guard(g)?;
    let mut best: Option<usize> = None;
    for s in independent_subsets(g, sp, VertexSet::empty(g.n()), g.n()) {
        if s.is_empty() || best.is_some_and(|b| s.len() >= b) {
            continue;
        }
        if g.is_cutset(&s) {
            best = Some(s.len());
        }
    }
    Ok(best)
}

/// Minimum independent set whose removal separates `a` and `b`; exhaustive.
pub fn brute_separating(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<VertexSet>> {
    brute_separating_within(g, a, b, &VertexSet::full(g.n()))
}

/// Like [`brute_separating`] but restricted to separators drawn from
/// `allowed`; this is the oracle for the separation-formula equivalence.
pub fn brute_separating_within(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    allowed: &VertexSet,
) -> Result<Option<VertexSet>> {
    guard(g)?;
    let mut best: Option<VertexSet> = None;
    for s in independent_subsets(g, allowed, VertexSet::empty(g.n()), g.n()) {
        if best.as_ref().is_some_and(|b| s.len() >= b.len()) {
            continue;
        }
        if g.separates(&s, a, b) {
            best = Some(s);
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Corpus generation
// ---------------------------------------------------------------------------

/// Adjacency rows for tiny graphs during canonical-form search.
type Rows = Vec<u8>;

fn upper_code(rows: &Rows, perm: &[usize]) -> u32 {
    let n = rows.len();
    let mut code = 0u32;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if rows[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Minimum upper-triangle code over all degree-class-respecting
/// permutations. Restricting to permutations that keep the sorted degree
/// order is still a complete isomorphism invariant and prunes the search.
fn canonical_code(rows: &Rows) -> u32 {
    let n = rows.len();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (rows[v].count_ones(), v));
    // group ids by degree
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(c) if rows[c[0]].count_ones() == rows[v].count_ones() => c.push(v),
            _ => classes.push(vec![v]),
        }
    }

    fn rec(
        classes: &[Vec<usize>],
        ci: usize,
        used: &mut [Vec<bool>],
        pos: usize,
        perm: &mut [usize],
        rows: &Rows,
        best: &mut u32,
    ) {
        if ci == classes.len() {
            *best = (*best).min(upper_code(rows, perm));
            return;
        }
        let class = &classes[ci];
        if used[ci].iter().all(|&u| u) {
            rec(classes, ci + 1, used, pos, perm, rows, best);
            return;
        }
        for k in 0..class.len() {
            if used[ci][k] {
                continue;
            }
            used[ci][k] = true;
            perm[pos] = class[k];
            rec(classes, ci, used, pos + 1, perm, rows, best);
            used[ci][k] = false;
        }
    }

    let mut best = u32::MAX;
    let mut perm = vec![0usize; n];
    let mut used: Vec<Vec<bool>> = classes.iter().map(|c| vec![false; c.len()]).collect();
    rec(&classes, 0, &mut used, 0, &mut perm, rows, &mut best);
    best
}

fn rows_to_graph(rows: &Rows) -> Graph {
    let n = rows.len();
    let mut edges = Vec::new();
    for (u, &row) in rows.iter().enumerate() {
        for v in u + 1..n {
            if row >> v & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn code_to_rows(code: u32, n: usize) -> Rows {
    let mut rows = vec![0u8; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    rows
}

/// All graphs on exactly `n <= 8` vertices up to isomorphism, by vertex
/// augmentation with canonical-form dedup. Returned as canonical codes.
fn all_codes(n: usize) -> Vec<u32> {
    assert!((1..=8).contains(&n));
    let mut level: Vec<u32> = vec![0]; // K1
    for size in 2..=n {
        let mut next: HashSet<u32> = HashSet::new();
        for &code in &level {
            let parent = code_to_rows(code, size - 1);
            for mask in 0..1u8 << (size - 1) {
                let mut rows = parent.clone();
                rows.push(0);
                for v in 0..size - 1 {
                    if mask >> v & 1 == 1 {
                        rows[size - 1] |= 1 << v;
                        rows[v] |= 1 << (size - 1);
                    }
                }
                next.insert(canonical_code(&rows));
            }
        }
        let mut v: Vec<u32> = next.into_iter().collect();
        v.sort_unstable();
        level = v;
    }
    level
}

/// All connected graphs on exactly `n <= 8` vertices, up to isomorphism,
/// in a deterministic order.
pub fn connected_graphs_exact(n: usize) -> Vec<Graph> {
    all_codes(n)
        .into_iter()
        .map(|c| rows_to_graph(&code_to_rows(c, n)))
        .filter(|g| g.is_connected())
        .collect()
}

/// Seeded random connected graph with mixed density.
pub fn random_connected(n: usize, seed: u64) -> Graph {
    let p = [0.3, 0.4, 0.5, 0.65][(seed % 4) as usize];
    generate::gnp_connected(n, p, seed).expect("connected sample")
}

/// The exhaustive corpus for n <= min(n_max, 7) plus seeded random samples
/// for 8 <= n <= n_max.
pub fn connected_graph_corpus(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=n_max.min(7) {
        out.extend(connected_graphs_exact(n));
    }
    for n in 8..=n_max.min(14) {
        for s in 0..20u64 {
            out.push(random_connected(n, n as u64 * 1000 + s));
        }
    }
    out
}
