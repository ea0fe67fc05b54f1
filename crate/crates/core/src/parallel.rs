//! Deterministic parallel variants: work is sharded over independent
//! branches and the reduction picks the first witness in enumeration order,
//! so parallel runs report byte-identical answers, witnesses and counters.

use crate::dominating::{
    partition2_scan, subset_precheck, test_split_partition, verify_dominating, PartitionEnumeration,
};
use crate::enumerate::{maximal_independent_set_shards, partitions3, PartitionFilter};
use crate::error::Result;
use crate::exact::ALGORITHM_EXACT;
use crate::graph::Graph;
use crate::outcome::{SolveOutcome, SolveStats};
use crate::vset::VertexSet;
use rayon::prelude::*;

/// Parallel exact decision. Each top-level enumeration branch runs to
/// completion on its own thread; the reduction recreates the serial
/// first-witness position and examination count.
pub fn decide_exact_par(g: &Graph) -> Result<SolveOutcome> {
    g.require_connected()?;
    let shards = maximal_independent_set_shards(g);
    let results: Vec<(u64, Option<(u64, VertexSet)>)> = shards
        .into_par_iter()
        .map(|shard| {
            let mut count = 0u64;
            let mut first = None;
            for mis in shard {
                count += 1;
                if first.is_none() && g.is_cutset(&mis) {
                    first = Some((count, mis));
                }
            }
            (count, first)
        })
        .collect();

    let mut stats = SolveStats::default();
    for (count, first) in results {
        match first {
            Some((local_idx, witness)) => {
                stats.mis_examined += local_idx;
                return SolveOutcome::yes(g, witness, ALGORITHM_EXACT, stats);
            }
            None => stats.mis_examined += count,
        }
    }
    Ok(SolveOutcome::no(ALGORITHM_EXACT, stats))
}

/// Parallel dominating-set solver: the pre-check and no-split scans stay
/// serial (they are the cheap 2^k phases), the 3^k split partitions are
/// tested in parallel.
pub fn solve_with_dominating_set_par(g: &Graph, x: &VertexSet) -> Result<SolveOutcome> {
    g.require_connected()?;
    verify_dominating(g, x)?;
    let mut stats = SolveStats::default();
    let filter = PartitionFilter::none(g.n());
    if let Some(w) = subset_precheck(g, x, &filter, &mut stats) {
        stats.phase = Some("subset-precheck");
        return SolveOutcome::yes(g, w, "dominating", stats)
            .map(|o| o.with_parameter(x.len() as u64));
    }
    if let Some(w) = partition2_scan(g, x, &filter, PartitionEnumeration::Exhaustive, &mut stats)? {
        stats.phase = Some("no-split");
        return SolveOutcome::yes(g, w, "dominating", stats)
            .map(|o| o.with_parameter(x.len() as u64));
    }

    let parts: Vec<_> = partitions3(g, x, None).collect();
    let results: Vec<Result<(Option<VertexSet>, u64)>> = parts
        .par_iter()
        .map(|p| test_split_partition(g, x, p))
        .collect();

    let mut winner = None;
    let mut sat_calls = 0u64;
    let mut examined = 0u64;
    for (idx, r) in results.into_iter().enumerate() {
        let (witness, calls) = r?;
        examined += 1;
        sat_calls += calls;
        if let Some(w) = witness {
            winner = Some((idx, w));
            break;
        }
    }
    stats.partitions3_examined += examined;
    stats.sat_calls += sat_calls;
    match winner {
        Some((_, w)) => {
            stats.phase = Some("split");
            SolveOutcome::yes(g, w, "dominating", stats).map(|o| o.with_parameter(x.len() as u64))
        }
        None => Ok(SolveOutcome::no("dominating", stats).with_parameter(x.len() as u64)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominating::solve_with_dominating_set;
    use crate::enumerate::maximal_independent_sets;
    use crate::exact::decide_exact;
    use crate::generate::gnp_connected;

    #[test]
    fn parallel_exact_matches_serial() {
        for seed in 0..20u64 {
            let g = gnp_connected(10, 0.35, seed).unwrap();
            let a = decide_exact(&g).unwrap();
            let b = decide_exact_par(&g).unwrap();
            assert_eq!(a.answer(), b.answer());
            assert_eq!(
                a.witness().map(|w| w.to_vec()),
                b.witness().map(|w| w.to_vec())
            );
            assert_eq!(a.stats().mis_examined, b.stats().mis_examined);
        }
    }

    #[test]
    fn parallel_dominating_matches_serial() {
        for seed in 0..15u64 {
            let g = gnp_connected(8, 0.4, seed).unwrap();
            let x = maximal_independent_sets(&g).next().unwrap();
            let a = solve_with_dominating_set(&g, &x).unwrap();
            let b = solve_with_dominating_set_par(&g, &x).unwrap();
            assert_eq!(a.answer(), b.answer(), "seed {seed}");
            assert_eq!(
                a.witness().map(|w| w.to_vec()),
                b.witness().map(|w| w.to_vec())
            );
            assert_eq!(
                a.stats().partitions3_examined,
                b.stats().partitions3_examined
            );
            assert_eq!(a.stats().sat_calls, b.stats().sat_calls);
        }
    }
}
