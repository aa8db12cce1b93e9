use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("Euler formula violated: n={n}, m={m}, f={f} (n - m + f must be 2)")]
    EulerViolation { n: usize, m: usize, f: usize },

    #[error("graph is not 3-connected")]
    NotThreeConnected,

    #[error("outer face {0:?} is not a face of the embedding")]
    InvalidOuterFace(Vec<usize>),

    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),

    #[error("generation stalled: requested {requested} edges on {n} vertices, reached {achieved}")]
    GenerationStalled {
        n: usize,
        requested: usize,
        achieved: usize,
    },

    #[error("outer polygon is not strictly convex or does not match the outer face: {0}")]
    InvalidPolygon(String),

    #[error("weights do not cover the edge set of the graph")]
    EdgeSetMismatch,

    #[error("edge {0} has non-positive or non-finite weight {1}")]
    NonPositiveWeight(Edge, f64),

    #[error("interior system is singular")]
    SingularSystem,

    #[error("equilibrium residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("no rotation within {0} attempts separates all x-coordinates")]
    DegeneratePosition(usize),

    #[error("not an st-orientation: {0}")]
    NotStOrientation(String),

    #[error("zero coordinate gap on edge {0}")]
    ZeroGap(Edge),

    #[error("edge {0} has zero length")]
    ZeroLengthEdge(Edge),

    #[error("embedding is not a triangulation with triangular outer face")]
    NotTriangulation,

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("outer cycle admits no valid top/bottom edge pair")]
    NoValidTopBottom,

    #[error("graph file: {0}")]
    Format(String),
}

impl Error {
    /// Stable variant name, used by front ends when reporting failures.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedRotation(_) => "MalformedRotation",
            Error::EulerViolation { .. } => "EulerViolation",
            Error::NotThreeConnected => "NotThreeConnected",
            Error::InvalidOuterFace(_) => "InvalidOuterFace",
            Error::InfeasibleParams(_) => "InfeasibleParams",
            Error::GenerationStalled { .. } => "GenerationStalled",
            Error::InvalidPolygon(_) => "InvalidPolygon",
            Error::EdgeSetMismatch => "EdgeSetMismatch",
            Error::NonPositiveWeight(..) => "NonPositiveWeight",
            Error::SingularSystem => "SingularSystem",
            Error::ResidualTooLarge { .. } => "ResidualTooLarge",
            Error::DegeneratePosition(_) => "DegeneratePosition",
            Error::NotStOrientation(_) => "NotStOrientation",
            Error::ZeroGap(_) => "ZeroGap",
            Error::ZeroLengthEdge(_) => "ZeroLengthEdge",
            Error::NotTriangulation => "NotTriangulation",
            Error::BadParams(_) => "BadParams",
            Error::NoValidTopBottom => "NoValidTopBottom",
            Error::Format(_) => "Format",
        }
    }
}
