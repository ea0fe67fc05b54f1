use thiserror::Error;

/// Errors surfaced by parsers, generators and solver contracts.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} is neither in the given set nor adjacent to it")]
    NotDominating { vertex: usize },

    #[error("graph minus the transversal is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    #[error("graph is not chordal; chordless cycle {hole:?}")]
    NotChordal { hole: Vec<usize> },

    #[error("graph contains an induced 2K2 on vertices {vertices:?}")]
    Not2K2Free { vertices: [usize; 4] },

    #[error("graph contains {t} pairwise induced-disjoint edges: {vertices:?}")]
    NotTK2Free { t: usize, vertices: Vec<usize> },

    #[error("graph contains an induced P5: {path:?}")]
    NotP5Free { path: [usize; 5] },

    #[error("independence bound {bound} exceeded inside the set; witness {witness:?}")]
    AlphaBoundExceeded { bound: usize, witness: Vec<usize> },

    #[error("seed set is not independent")]
    SeedNotIndependent,

    #[error("contraction classes overlap")]
    OverlappingClasses,

    #[error("no solution within the parameter budget k = {k}")]
    ParameterTooSmall { k: usize },

    #[error("retry budget exhausted while sampling a connected graph")]
    RetryBudgetExhausted,

    #[error("budget k = {k} exceeds the supported maximum {max}")]
    KTooLarge { k: usize, max: usize },

    #[error("instance has {n} vertices; the brute-force guard allows at most {max}")]
    TooLargeForBruteForce { n: usize, max: usize },

    #[error("hypergraph needs at least two vertices for a cut query")]
    CutTooSmall,

    #[error("the given set is not an independent cutset")]
    NotIndependentCutset,

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid separation context: {0}")]
    InvalidContext(String),

    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
