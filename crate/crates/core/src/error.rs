use thiserror::Error;

/// Everything that can go wrong inside the engine.
///
/// Variants carry enough context to explain the failure to a user without
/// access to the input that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwbError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex set {0:?} is not a subset of the graph")]
    NotASubset(Vec<u64>),
    #[error("not a pair partition: {0}")]
    NotAPartition(String),
    #[error("vertex {0} has degree greater than two")]
    DegreeTooHigh(u64),
    #[error("invalid chord diagram: {0}")]
    InvalidTcd(String),
    #[error("site {site} with direction {dir:+} is not admissible")]
    NotAdmissible { site: usize, dir: i8 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("diagram is not an insertion at height {0} of the given block")]
    NotAnInsertion(usize),
    #[error("datum does not split as a juxtaposition at rank {0}")]
    NotAJuxtaposition(usize),
    #[error("diagram does not have a single boundary component")]
    NotInTcStar,
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("pairing is not crossingless")]
    NotCrossingless,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("datum has internal components")]
    HasInternalComponents,
    #[error("given vertices do not form a component")]
    NotAComponent,
    #[error("lemma hypotheses violated: {0}")]
    SetupViolated(String),
    #[error("operation needs at least one northern vertex")]
    EmptyNorth,
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
}

pub type Result<T> = std::result::Result<T, SwbError>;
