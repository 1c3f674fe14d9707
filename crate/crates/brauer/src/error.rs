//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when building graphs, parsing words or
/// running the homological machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input text could not be read as a graph or a word list.
    #[error("format error: {0}")]
    Format(String),

    /// The graph violates one or more ribbon-graph invariants.
    #[error("invalid graph: {}", .0.join("; "))]
    InvalidGraph(Vec<String>),

    #[error("graph is not a tree")]
    NotATree,

    #[error("bad multiplicity vector: {0}")]
    BadMultiplicityVector(String),

    #[error("graph is not a star in normal form")]
    NotAStar,

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("letters {0} and {1} do not compose")]
    NonComposable(usize, usize),

    #[error("letter {0} is cancelled by letter {1}")]
    InverseCancellation(usize, usize),

    #[error("zero subpath ending at letter {0}")]
    ZeroSubpath(usize),

    #[error("index out of family: {0}")]
    IndexOutOfFamily(String),

    #[error("module is projective")]
    ProjectiveInput,

    #[error("band modules are not supported")]
    BandModule,

    #[error("periodicity bound {0} exceeded with cycling dimensions")]
    BoundExceeded(usize),

    #[error("growth class unsupported: {0}")]
    GrowthClassUnsupported(String),

    #[error("simple module S({0}) is periodic")]
    PeriodicSimple(usize),

    #[error("edge {0} is exceptional")]
    ExceptionalEdgeArgument(usize),

    #[error("ladder hypothesis failed at l = {l}: {condition}")]
    HypothesisFailed { condition: String, l: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
