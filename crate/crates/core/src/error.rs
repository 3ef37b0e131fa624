use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational literal `{0}` (expected `p` or `p/q`)")]
    Rational(String),
    #[error("invalid point `{0}` (expected `x,y`)")]
    Point(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("a centrally symmetric polygon needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("a centrally symmetric polygon needs an even vertex count, got {0}")]
    OddVertexCount(usize),
    #[error("vertex {index} is not the negation of vertex {opposite}")]
    NotCentered { index: usize, opposite: usize },
    #[error("polygon is not strictly convex at vertex {index}")]
    NotStrictlyConvex { index: usize },
    #[error("linear part of the map is singular")]
    SingularMap,
    #[error("map has a nonzero translation and would move the center off the origin")]
    NonCenteringTranslation,
    #[error("segment has coincident endpoints")]
    DegenerateSegment,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice basis vectors are linearly dependent")]
    Degenerate,
    #[error("a translate set needs at least one offset")]
    NoOffsets,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("sampling region is empty")]
    EmptyRegion,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("point is not a vertex of any translate")]
    NotAVertexOfTiling,
    #[error("inner angles at the vertex admit no perfect cyclic matching")]
    WheelMatchingFailed,
    #[error("winding {phi} with {ell} edge incidences gives non-integral or non-positive kappa for m = {m}")]
    KappaNotPositiveInteger { phi: u64, ell: u64, m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("edge vectors are parallel")]
    DegenerateEdges,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("parameter {value} outside {range}")]
    ParameterOutOfRange { value: String, range: &'static str },
    #[error("vertex is not an interior point of the quadrilateral W")]
    VertexNotInW,
    #[error("reflection chain through the edge midpoints does not close")]
    ChainDoesNotClose,
    #[error("expected a {expected}-gon, got a {got}-gon")]
    WrongGonality { expected: usize, got: usize },
    #[error("self-check failed: expected multiplicity {expected}, Bolle check gave {got}")]
    SelfCheckFailed { expected: u64, got: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("render window is empty")]
    EmptyWindow,
}

/// Umbrella error for the command-line front end and the C ABI.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}
