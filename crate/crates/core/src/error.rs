use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vertex count outside `1..=64`.
    VertexCount(usize),
    /// A vertex index or vertex set refers to vertices the graph does not have.
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    /// Self loop in an edge list.
    Loop(usize),
    /// The operation would produce a graph without vertices.
    EmptyVertexSet,
    /// The operation needs at least one edge.
    Edgeless,
    Graph6(Graph6Error),
    /// Checked integer arithmetic overflowed.
    Overflow,
    /// Work would exceed a configured budget.
    ResourceLimit {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    NotChordal,
    NotPrime(u32),
    UnknownGraph(String),
    InvalidParameter(String),
}

/// Distinct failure modes of graph6 decoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Error {
    /// Empty input or a header that does not describe a vertex count.
    MalformedHeader,
    /// The header encodes more than 64 vertices.
    TooManyVertices(usize),
    /// A byte outside the printable range 63..=126.
    InvalidByte { position: usize, byte: u8 },
    /// Fewer body bytes than the vertex count requires.
    Truncated { expected: usize, found: usize },
    /// More body bytes than the vertex count allows.
    TrailingData { expected: usize, found: usize },
    /// Padding bits of the last byte are not zero.
    NonZeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::MalformedHeader => write!(f, "malformed graph6 header"),
            Graph6Error::TooManyVertices(n) => {
                write!(f, "graph6 header declares {n} vertices, at most 64 are supported")
            }
            Graph6Error::InvalidByte { position, byte } => {
                write!(f, "byte {byte:#04x} at position {position} is not graph6 printable")
            }
            Graph6Error::Truncated { expected, found } => {
                write!(f, "graph6 body truncated: expected {expected} bytes, found {found}")
            }
            Graph6Error::TrailingData { expected, found } => {
                write!(f, "graph6 body too long: expected {expected} bytes, found {found}")
            }
            Graph6Error::NonZeroPadding => write!(f, "graph6 padding bits are not zero"),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexCount(n) => write!(f, "vertex count {n} outside 1..=64"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::Loop(v) => write!(f, "loop at vertex {v}"),
            Error::EmptyVertexSet => write!(f, "empty vertex set"),
            Error::Edgeless => write!(f, "graph has no edges"),
            Error::Graph6(e) => e.fmt(f),
            Error::Overflow => write!(f, "integer overflow"),
            Error::ResourceLimit { what, limit, requested } => {
                write!(f, "{what}: {requested} exceeds the limit of {limit}")
            }
            Error::NotChordal => write!(f, "graph is not chordal"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::UnknownGraph(name) => write!(f, "unknown graph name `{name}`"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
impl core::error::Error for Graph6Error {}

impl From<Graph6Error> for Error {
    fn from(e: Graph6Error) -> Self {
        Error::Graph6(e)
    }
}
