use thiserror::Error;

/// Errors produced by geometry constructions, mesh validation, clipping and
/// the benchmark harness.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("plane normal is zero or the defining points are collinear")]
    DegeneratePlane,
    #[error("triangle area is below tolerance")]
    DegenerateTriangle,

    #[error("mesh needs at least 4 vertices and 4 facets (got {vertices} and {facets})")]
    TooSmall { vertices: usize, facets: usize },
    #[error("facet {facet} references vertex {index} which does not exist")]
    IndexOutOfRange { facet: usize, index: usize },
    #[error("facet {facet} is degenerate")]
    DegenerateFacet { facet: usize },
    #[error("edge ({u}, {v}) has {count} incident facets, expected 2")]
    NotClosed { u: usize, v: usize, count: usize },
    #[error("facets {first} and {second} traverse their shared edge in the same direction")]
    InconsistentOrientation { first: usize, second: usize },
    #[error("Euler characteristic violated: V={vertices} E={edges} F={facets}")]
    EulerViolation { vertices: usize, edges: usize, facets: usize },
    #[error("vertex {vertex} lies {excess:e} outside the plane of facet {facet}")]
    NotConvex { facet: usize, vertex: usize, excess: f64 },

    #[error("facet count {0} is invalid: must be even and at least 4")]
    InvalidFacetCount(usize),
    #[error("convex hull construction failed: {0}")]
    HullFailed(&'static str),

    #[error("walk stalled at facet {facet}: no crossed edge leads onward")]
    WalkStalled { facet: usize },
    #[error("walk did not close after visiting every facet")]
    WalkUnclosed,

    #[error("invalid radius: {0}")]
    InvalidRadius(String),
    #[error("line generation exhausted: accepted {accepted} of {attempts} attempts")]
    GenerationExhausted { accepted: usize, attempts: u64 },
    #[error("{algorithm} disagrees with cyrus-beck at N={n_facets} on segment `{segment}`")]
    EquivalenceViolation {
        n_facets: usize,
        algorithm: &'static str,
        segment: String,
    },
    #[error("nothing to tabulate")]
    EmptyTable,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
