//! The uniform result envelope shared by every solver.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Counters and flags a solver reports alongside its answer. All counters
/// are deterministic for a fixed input; wall time is tracked separately by
/// the CLI.
#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub mis_examined: u64,
    pub partitions2_examined: u64,
    pub partitions3_examined: u64,
    pub subsets_examined: u64,
    pub sat_calls: u64,
    pub dp_keys: u64,
    /// Which phase of a multi-phase algorithm produced the answer.
    pub phase: Option<&'static str>,
    /// Which rung of the dominating-set ladder fired (structured solvers).
    pub rung: Option<&'static str>,
    /// Set when a polynomial-count guard was exceeded but the run continued.
    pub guard_exceeded: bool,
    pub notes: Vec<String>,
}

/// Answer plus verified witness. A "yes" can only be built through
/// [`SolveOutcome::yes`], which re-checks the witness against the input
/// graph, so an unsound witness cannot escape a solver.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    answer: bool,
    witness: Option<VertexSet>,
    algorithm: &'static str,
    parameter: Option<u64>,
    stats: SolveStats,
}

impl SolveOutcome {
    pub fn yes(
        g: &Graph,
        witness: VertexSet,
        algorithm: &'static str,
        stats: SolveStats,
    ) -> Result<SolveOutcome> {
        if !g.is_independent(&witness) {
            return Err(Error::Internal(format!(
                "{algorithm}: witness {:?} is not independent",
                witness.to_vec()
            )));
        }
        if !g.is_cutset(&witness) {
            return Err(Error::Internal(format!(
                "{algorithm}: witness {:?} is not a cutset",
                witness.to_vec()
            )));
        }
        Ok(SolveOutcome {
            answer: true,
            witness: Some(witness),
            algorithm,
            parameter: None,
            stats,
        })
    }

    pub fn no(algorithm: &'static str, stats: SolveStats) -> SolveOutcome {
        SolveOutcome {
            answer: false,
            witness: None,
            algorithm,
            parameter: None,
            stats,
        }
    }

    pub fn with_parameter(mut self, k: u64) -> SolveOutcome {
        self.parameter = Some(k);
        self
    }

    pub fn answer(&self) -> bool {
        self.answer
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        self.witness.as_ref()
    }

    pub fn algorithm(&self) -> &'static str {
        self.algorithm
    }

    pub fn parameter(&self) -> Option<u64> {
        self.parameter
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn stats_mut(&mut self) -> &mut SolveStats {
        &mut self.stats
    }
}
