//! Deterministic instance generators for tests and benchmarks.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

const CONNECT_RETRIES: usize = 1000;

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn clique(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Star with center 0 and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 2);
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Hub 0 plus a cycle on `1..n`.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4, "wheel needs at least 4 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    for v in 1..n - 1 {
        edges.push((v, v + 1));
    }
    edges.push((n - 1, 1));
    Graph::from_edges(n, &edges)
}

/// G(n, p), resampled until connected.
pub fn gnp_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = rng_for(seed);
    for _ in 0..CONNECT_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetryBudgetExhausted)
}

/// G(n, m) with exactly `m` distinct edges, resampled until connected.
pub fn gnm_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_m = n * (n - 1) / 2;
    assert!(m <= max_m, "too many edges requested");
    let mut rng = rng_for(seed);
    let mut all: Vec<(usize, usize)> = Vec::with_capacity(max_m);
    for u in 0..n {
        for v in u + 1..n {
            all.push((u, v));
        }
    }
    for _ in 0..CONNECT_RETRIES {
        let mut pool = all.clone();
        pool.shuffle(&mut rng);
        pool.truncate(m);
        let g = Graph::from_edges(n, &pool);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetryBudgetExhausted)
}

/// Connected chordal graph: each new vertex's neighborhood is a randomly
/// grown clique of the existing graph, so every vertex is simplicial at
/// insertion time.
pub fn random_chordal(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = rng_for(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        // grow a clique inside the current graph
        let mut c = vec![rng.gen_range(0..v)];
        loop {
            let candidates: Vec<usize> = (0..v)
                .filter(|&u| !c.contains(&u) && c.iter().all(|&w| adj[u].contains(&w)))
                .collect();
            if candidates.is_empty() || !rng.gen_bool(0.6) {
                break;
            }
            c.push(candidates[rng.gen_range(0..candidates.len())]);
        }
        for &u in &c {
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Connected graph with the planted dominating set `{0, .., k-1}`: a path
/// through the first `k` vertices, one dominator edge per remaining vertex,
/// plus G(n, p) noise.
pub fn planted_dominating(n: usize, k: usize, p: f64, seed: u64) -> Graph {
    assert!(k >= 1 && k <= n);
    let mut rng = rng_for(seed);
    let mut present = vec![VertexSet::empty(n); n];
    let mut edges = Vec::new();
    let add =
        |edges: &mut Vec<(usize, usize)>, present: &mut Vec<VertexSet>, u: usize, v: usize| {
            if u != v && !present[u].contains(v) {
                present[u].insert(v);
                present[v].insert(u);
                edges.push((u.min(v), u.max(v)));
            }
        };
    for i in 0..k.saturating_sub(1) {
        add(&mut edges, &mut present, i, i + 1);
    }
    for v in k..n {
        let d = rng.gen_range(0..k);
        add(&mut edges, &mut present, d, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                add(&mut edges, &mut present, u, v);
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Line graph: one vertex per edge of `g`, adjacent iff the edges share an
/// endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let m = edges.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Graph::from_edges(m, &out)
}

/// Connected graph with exactly `m` edges at any sparsity: a uniform random
/// spanning tree (Pruefer sequence) plus uniformly drawn extra edges.
/// Resampling-based G(n, m) cannot reach tree-like densities.
pub fn tree_plus_edges(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2);
    let mut rng = rng_for(seed);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    if n >= 2 {
        // decode a random Pruefer sequence
        let seq: Vec<usize> = (0..n.saturating_sub(2))
            .map(|_| rng.gen_range(0..n))
            .collect();
        let mut degree = vec![1usize; n];
        for &v in &seq {
            degree[v] += 1;
        }
        let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
            .filter(|&v| degree[v] == 1)
            .map(std::cmp::Reverse)
            .collect();
        for &v in &seq {
            let std::cmp::Reverse(leaf) = leaf_heap.pop().unwrap();
            edges.push((leaf.min(v), leaf.max(v)));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaf_heap.push(std::cmp::Reverse(v));
            }
        }
        let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
        let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
        edges.push((a.min(b), a.max(b)));
    }
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut spare: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) {
                spare.push((u, v));
            }
        }
    }
    spare.shuffle(&mut rng);
    for e in spare.into_iter().take(m - edges.len()) {
        present.insert(e);
        edges.push(e);
    }
    Graph::from_edges(n, &edges)
}

/// Random connected split graph: clique `0..c` plus independent part, every
/// independent vertex attached to the clique.
pub fn random_split(n: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let mut rng = rng_for(seed);
    let c = rng.gen_range(1..n);
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for v in c..n {
        let mut attached = false;
        for u in 0..c {
            if rng.gen_bool(0.4) {
                edges.push((u, v));
                attached = true;
            }
        }
        if !attached {
            edges.push((rng.gen_range(0..c), v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complement of a random connected triangle-free (bipartite) graph; such
/// complements contain no induced P5.
pub fn complement_of_bipartite(n: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng_for(seed);
    for _ in 0..CONNECT_RETRIES {
        let cut = rng.gen_range(1..n);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let across = (u < cut) != (v < cut);
                let keep = if across { !rng.gen_bool(0.5) } else { true };
                if keep {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetryBudgetExhausted)
}

/// Random chordal core plus `apex` extra vertices with random attachments;
/// deleting the apex set leaves the chordal core.
pub fn chordal_plus_apex(n_core: usize, apex: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let core = random_chordal(n_core, rng.gen());
    let n = n_core + apex;
    let mut edges = core.edges();
    for a in n_core..n {
        let mut attached = false;
        for v in 0..a {
            if rng.gen_bool(p) {
                edges.push((v, a));
                attached = true;
            }
        }
        if !attached {
            edges.push((rng.gen_range(0..a), a));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        assert_eq!((cycle(4).n(), cycle(4).m()), (4, 4));
        assert_eq!(clique(5).m(), 10);
        assert_eq!(star(5).degree(0), 4);
        assert_eq!(wheel(6).degree(0), 5);
        assert_eq!(wheel(6).m(), 10);
        assert_eq!(path(1).n(), 1);
    }

    #[test]
    fn gnp_deterministic() {
        let a = gnp_connected(10, 0.5, 1).unwrap();
        let b = gnp_connected(10, 0.5, 1).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.is_connected());
    }

    #[test]
    fn gnm_exact_count() {
        let g = gnm_connected(8, 10, 7).unwrap();
        assert_eq!(g.m(), 10);
        assert!(g.is_connected());
    }

    #[test]
    fn planted_dominating_is_dominating() {
        for seed in 0..5 {
            let k = 4;
            let g = planted_dominating(30, k, 0.05, seed);
            assert!(g.is_connected());
            let x = VertexSet::from_slice(g.n(), &(0..k).collect::<Vec<_>>());
            let covered = g.closed_neighborhood(&x);
            assert_eq!(covered.len(), g.n());
        }
    }

    #[test]
    fn line_graph_of_triangle_is_triangle() {
        let l = line_graph(&cycle(3));
        assert_eq!((l.n(), l.m()), (3, 3));
    }

    #[test]
    fn tree_plus_edges_connected_at_any_density() {
        for seed in 0..20u64 {
            for (n, m) in [(4, 3), (40, 39), (40, 76), (10, 20)] {
                let g = tree_plus_edges(n, m, seed);
                assert_eq!((g.n(), g.m()), (n, m));
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn split_graphs_connected() {
        for seed in 0..10 {
            assert!(random_split(12, seed).is_connected());
        }
    }
}
