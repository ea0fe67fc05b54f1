//! 2-SAT via implication-graph SCCs, plus the separation formula that
//! decides which neighborhood sides join a cutset.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// A literal: variable index plus polarity (`true` = positive).
pub type Lit = (usize, bool);

/// Conjunction of two-literal clauses; unit clauses are stored as (l, l).
#[derive(Clone, Debug, Default)]
pub struct TwoSatFormula {
    pub var_count: usize,
    pub clauses: Vec<(Lit, Lit)>,
}

impl TwoSatFormula {
    pub fn new(var_count: usize) -> Self {
        TwoSatFormula {
            var_count,
            clauses: Vec::new(),
        }
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        debug_assert!(a.0 < self.var_count && b.0 < self.var_count);
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    /// DIMACS-CNF rendering for debugging.
    pub fn to_dimacs_cnf(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.var_count, self.clauses.len());
        for &((v1, p1), (v2, p2)) in &self.clauses {
            let l1 = if p1 { v1 as i64 + 1 } else { -(v1 as i64 + 1) };
            let l2 = if p2 { v2 as i64 + 1 } else { -(v2 as i64 + 1) };
            out.push_str(&format!("{l1} {l2} 0\n"));
        }
        out
    }
}

// Node encoding: negative literal of variable i is node 2i, positive is
// 2i + 1. Visiting negations first makes unconstrained variables come out
// false under the component-order rule.
#[inline]
fn node(lit: Lit) -> usize {
    2 * lit.0 + lit.1 as usize
}

#[inline]
fn negate(lit: Lit) -> Lit {
    (lit.0, !lit.1)
}

/// Deterministic satisfying assignment, or `None` if unsatisfiable.
/// Linear-time: Tarjan SCCs of the implication graph; a variable is true
/// iff its positive node's component finishes before its negative node's.
pub fn solve_2sat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let n_nodes = 2 * f.var_count;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n_nodes];
    for &(a, b) in &f.clauses {
        adj[node(negate(a))].push(node(b));
        adj[node(negate(b))].push(node(a));
    }

    // iterative Tarjan
    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n_nodes];
    let mut low = vec![0usize; n_nodes];
    let mut comp = vec![UNSET; n_nodes];
    let mut on_stack = vec![false; n_nodes];
    let mut stack: Vec<usize> = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0usize;
    let mut next_comp = 0usize;

    for start in 0..n_nodes {
        if index[start] != UNSET {
            continue;
        }
        call.push((start, 0));
        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if *ei < adj[v].len() {
                let w = adj[v][*ei];
                *ei += 1;
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                call.pop();
                if let Some(&mut (p, _)) = call.last_mut() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }

    let mut assignment = vec![false; f.var_count];
    for i in 0..f.var_count {
        let pos = comp[2 * i + 1];
        let neg = comp[2 * i];
        if pos == neg {
            return None;
        }
        assignment[i] = pos < neg;
    }
    Some(assignment)
}

/// The four-set situation around a candidate separation: a graph whose
/// vertices split into independent sides A and B with disjoint
/// neighborhoods N_A, N_B, plus the components of the bipartite graph H
/// spanned by the edges between N_A and N_B.
#[derive(Clone, Debug)]
pub struct SeparationContext {
    pub gp: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub n_a: VertexSet,
    pub n_b: VertexSet,
    /// Per H-component: (K_i intersect N_A, K_i intersect N_B), ordered by
    /// minimum vertex id.
    pub h_components: Vec<(VertexSet, VertexSet)>,
}

impl SeparationContext {
    /// Computes neighborhoods and H components, validating the setup: A and
    /// B nonempty, A union B independent, and N(A), N(B) disjoint.
    pub fn new(gp: Graph, a: VertexSet, b: VertexSet) -> Result<SeparationContext> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidContext("A and B must be nonempty".into()));
        }
        let ab = a.union(&b);
        if !gp.is_independent(&ab) {
            return Err(Error::InvalidContext("A union B is not independent".into()));
        }
        let n_a = gp.neighborhood(&a);
        let n_b = gp.neighborhood(&b);
        if !n_a.is_disjoint(&n_b) {
            return Err(Error::InvalidContext("N(A) and N(B) intersect".into()));
        }
        // vertices of H: endpoints of N_A - N_B edges
        let n = gp.n();
        let mut h_vertices = VertexSet::empty(n);
        for u in n_a.iter() {
            let to_b = gp.neighbors(u).intersect(&n_b);
            if !to_b.is_empty() {
                h_vertices.insert(u);
                h_vertices.union_with(&to_b);
            }
        }
        // components of H via BFS along N_A - N_B edges only
        let mut seen = VertexSet::empty(n);
        let mut h_components = Vec::new();
        for start in h_vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut queue = vec![start];
            seen.insert(start);
            comp.insert(start);
            while let Some(u) = queue.pop() {
                let other_side = if n_a.contains(u) { &n_b } else { &n_a };
                for w in gp.neighbors(u).intersect(other_side).minus(&seen).iter() {
                    seen.insert(w);
                    comp.insert(w);
                    queue.push(w);
                }
            }
            h_components.push((comp.intersect(&n_a), comp.intersect(&n_b)));
        }
        Ok(SeparationContext {
            gp,
            a,
            b,
            n_a,
            n_b,
            h_components,
        })
    }
}

fn has_edge_inside(g: &Graph, s: &VertexSet) -> bool {
    !g.is_independent(s)
}

fn has_edge_between(g: &Graph, s: &VertexSet, t: &VertexSet) -> bool {
    s.iter().any(|v| g.neighbors(v).intersects(t))
}

/// The separation formula: variable i says "take the N_B side of H
/// component i into the cutset"; false takes the N_A side. Clauses forbid
/// keeping a side whose union would not be independent.
pub fn build_separation_formula(ctx: &SeparationContext) -> TwoSatFormula {
    let r = ctx.h_components.len();
    let mut f = TwoSatFormula::new(r);
    for (i, (na_i, nb_i)) in ctx.h_components.iter().enumerate() {
        if has_edge_inside(&ctx.gp, na_i) {
            f.add_unit((i, true));
        }
        if has_edge_inside(&ctx.gp, nb_i) {
            f.add_unit((i, false));
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if has_edge_between(&ctx.gp, &ctx.h_components[i].0, &ctx.h_components[j].0) {
                f.add_clause((i, true), (j, true));
            }
            if has_edge_between(&ctx.gp, &ctx.h_components[i].1, &ctx.h_components[j].1) {
                f.add_clause((i, false), (j, false));
            }
        }
    }
    f
}

/// Reads the chosen sides off a satisfying assignment and re-verifies the
/// result: independent in the context graph and separating A from B.
pub fn extract_cutset(ctx: &SeparationContext, assignment: &[bool]) -> Result<VertexSet> {
    let mut s = VertexSet::empty(ctx.gp.n());
    for (i, (na_i, nb_i)) in ctx.h_components.iter().enumerate() {
        if assignment[i] {
            s.union_with(nb_i);
        } else {
            s.union_with(na_i);
        }
    }
    if !ctx.gp.is_independent(&s) {
        return Err(Error::Internal(
            "extracted separator is not independent".into(),
        ));
    }
    if !ctx.gp.separates(&s, &ctx.a, &ctx.b) {
        return Err(Error::Internal(
            "extracted separator does not split A from B".into(),
        ));
    }
    Ok(s)
}
