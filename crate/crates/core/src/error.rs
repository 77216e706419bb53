use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("edge {0} has an empty label")]
    EmptyLabel(usize),
    #[error("graph has labels longer than one symbol")]
    NotOrdinary,
    #[error("graph is not deterministic")]
    NotDeterministic,
    #[error("graph is not irreducible")]
    NotIrreducible,
    #[error("graph has no edges")]
    NoEdges,
    #[error("state set is empty")]
    EmptyStateSet,
    #[error("power must be positive")]
    ZeroPower,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("infeasible length distribution: {0}")]
    Infeasible(String),
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("power iteration did not converge after {iterations} iterations (bounds {lower}..{upper})")]
    NoConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("tagging invalid: {0}")]
    Tagging(String),
    #[error("invalid graph file: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
