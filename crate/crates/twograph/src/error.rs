use thiserror::Error;

/// Everything that can go wrong constructing or combining the types in this
/// crate. All variants are cheap values; no I/O happens in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=28")]
    VertexCount(usize),
    #[error("vertex {index} out of range for {n} vertices")]
    Vertex { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("relabeling is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("triple vertices must be pairwise distinct")]
    DegenerateTriple,
    #[error("vertex subset contains a duplicate")]
    DuplicateVertex,
    #[error("induced sub-two-graphs need at least 3 vertices, got {0}")]
    SubsetTooSmall(usize),
    #[error("triple set violates the even-4-subset condition")]
    InvalidDelta,
    #[error("canonical keys are only computed for up to 8 vertices, got {0}")]
    TooLargeForCanonical(usize),
    #[error("class enumeration supports 1..=8 vertices, got {0}")]
    EnumerationRange(usize),
    #[error("subset classification supports 3..=7 vertices, got {0}")]
    ClassificationRange(usize),
    #[error("the deletion counting bound needs at least 4 vertices, got {0}")]
    ReductionRange(usize),
    #[error("catalog is for n={catalog}, but n={expected} was requested")]
    CatalogMismatch { catalog: usize, expected: usize },
    #[error("index pair ({j},{k}) must satisfy 1 <= j < k <= 8")]
    BadIndexPair { j: usize, k: usize },
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i8),
    #[error("cannot parse minimal-vector token {0:?}")]
    VectorSyntax(String),
    #[error("duplicate bitangent {0} in vector list (a sign flip is a switch, not a new point)")]
    DuplicateBitangent(String),
    #[error("no class labeled {0:?} in the catalog")]
    UnknownLabel(String),
    #[error("scan produced key {0} which is missing from the catalog")]
    UnknownKey(String),
    #[error("label binding against the drawn representatives failed: {0}")]
    LabelBinding(String),
    #[error("malformed catalog document: {0}")]
    CatalogFormat(String),
}
