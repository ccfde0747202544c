use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A violated theorem hypothesis. These are user errors in the sense that
/// the requested construction is not covered by the statement it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    /// More common edges than the gluing bound allows.
    TooManyCommon { common: usize, bound: usize },
    /// More than three common edges for the 4-flow union construction.
    UnionTooManyCommon { common: usize },
    /// Three common edges that do not induce a connected subgraph.
    CommonDisconnected { common: Vec<usize> },
    /// The two sides do not cover every edge of the ambient graph.
    NotCovering { edge: usize },
    /// An edge lies on no cycle of length at most four.
    NoShortCycle { edge: usize },
    /// A bundle factor has an isolated vertex.
    IsolatedVertex { factor: &'static str, vertex: usize },
    /// The requested order is not one of 3, 4, 5.
    UnsupportedOrder { k: u32 },
    /// A prefix of a multi-part gluing shares too many edges with the next part.
    PrefixTooManyCommon {
        part: usize,
        common: usize,
        bound: usize,
    },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::TooManyCommon { common, bound } => {
                write!(f, "common edges {common} > p^n-2 = {bound}")
            }
            Hypothesis::UnionTooManyCommon { common } => {
                write!(f, "common edges {common} > 3")
            }
            Hypothesis::CommonDisconnected { common } => write!(
                f,
                "common edges {common:?} do not induce a connected subgraph"
            ),
            Hypothesis::NotCovering { edge } => {
                write!(f, "edge {edge} belongs to neither subgraph")
            }
            Hypothesis::NoShortCycle { edge } => {
                write!(f, "edge {edge} lies on no cycle of length at most 4")
            }
            Hypothesis::IsolatedVertex { factor, vertex } => {
                write!(f, "{factor} graph has isolated vertex {vertex}")
            }
            Hypothesis::UnsupportedOrder { k } => {
                write!(f, "k = {k} is not one of 3, 4, 5")
            }
            Hypothesis::PrefixTooManyCommon {
                part,
                common,
                bound,
            } => write!(
                f,
                "part {part}: common edges {common} > p^n-2 = {bound} with the union of earlier parts"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group descriptor `{0}`")]
    BadDescriptor(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclic modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("modulus must be monic of degree {degree}")]
    BadModulus { degree: u32 },
    #[error("modulus is reducible over Z_{p}")]
    ReducibleModulus { p: u32 },
    #[error("group order {0} exceeds the supported maximum of 2^20")]
    GroupTooLarge(u64),
    #[error("{op} is only defined over a field")]
    NotAField { op: &'static str },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("`{0}` is not an element of the group")]
    BadElement(String),
    #[error("endomorphism shape does not match group {group}")]
    ShapeMismatch { group: String },

    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range (graph has {m} edges)")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("edge subsets belong to different ambient graphs")]
    AmbientMismatch,
    #[error("edges {0} and {1} do not form a 2-path")]
    NotTwoPath(usize, usize),
    #[error("suppressing parallel edges {0} and {1} would create a loop")]
    SuppressionLoop(usize, usize),
    #[error("sigma multiplicities sum to {0}, expected 3")]
    BadSigmaSize(u32),
    #[error("expected a connected set of three edges")]
    DisconnectedTriple,
    #[error("voltage on base edge {edge} is not an automorphism of the fiber")]
    NotAutomorphism { edge: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("flow does not match the graph: {0}")]
    DomainMismatch(String),
    #[error("invalid flow: {0}")]
    InvalidFlow(String),
    #[error("flow count overflows 128 bits")]
    CountOverflow,
    #[error("invalid parity decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid even cover: {0}")]
    InvalidCover(String),
    #[error("invalid evenly certificate: {0}")]
    InvalidCertificate(String),

    #[error("{0}")]
    Hypothesis(Hypothesis),
    #[error(
        "{what} admits no nowhere-zero {group}-flow (proven-none after {candidates} candidates)"
    )]
    NoFlow {
        what: String,
        group: String,
        candidates: u128,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<Hypothesis> for Error {
    fn from(h: Hypothesis) -> Self {
        Error::Hypothesis(h)
    }
}

impl Error {
    /// Process exit code for the CLI: 1 for a proven nonexistence, 3 for a
    /// violated hypothesis, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoFlow { .. } => 1,
            Error::Hypothesis(_) => 3,
            _ => 2,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
