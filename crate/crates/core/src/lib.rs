//! Solvers for the independent cutset problem: an exact exponential
//! algorithm over maximal independent sets, a minimization variant through
//! hypergraph cuts, and a family of fixed-parameter algorithms (dominating
//! set, dual parameters, tree decompositions, P5-structure), all returning
//! independently verified witnesses.

pub mod dominating;
pub mod dual;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod hypercut;
pub mod io;
pub mod oracle;
pub mod outcome;
pub mod parallel;
pub mod sat2;
pub mod structured;
pub mod treewidth;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{ContractionMap, Graph};
pub use outcome::{SolveOutcome, SolveStats};
pub use vset::VertexSet;
