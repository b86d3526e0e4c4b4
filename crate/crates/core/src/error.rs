use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty geometry")]
    EmptyGeometry,
    #[error("non-finite coordinate in {0}")]
    NonFinite(String),
    #[error("degenerate polyline: {0}")]
    DegeneratePolyline(String),
    #[error("not a cycle")]
    NotACycle,
    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("schema violation: {0}")]
    Schema(String),
    #[error("duplicate id: {0}")]
    DuplicateId(String),
    #[error("dangling id: {0}")]
    DanglingId(String),
    #[error("link geometry does not meet its endpoint nodes: {0}")]
    LinkEndpoints(String),
    #[error("geometry outside A0: {0}")]
    OutsideArea(String),
    #[error("route not connected: {0}")]
    RouteNotConnected(String),
    #[error("invalid path configuration {id}: {reason}")]
    InvalidConfig { id: String, reason: String },
    #[error("ring not convex: {0}")]
    RingNotConvex(String),

    #[error("C not contained in A0")]
    NotContained,
    #[error("wrong configuration kind for {id}: expected {expected}")]
    WrongKind { id: String, expected: &'static str },
    #[error("node mismatch: {0}")]
    NodeMismatch(String),
    #[error("node not on ring {ring}: {node}")]
    NotOnRing { ring: String, node: String },
    #[error("unknown node: {0}")]
    UnknownNode(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("wide strip breadth {breadth} does not exceed configuration diameter {d_max}")]
    WideStripTooNarrow { breadth: f64, d_max: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
