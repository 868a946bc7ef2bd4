use thiserror::Error;

use crate::matrix::Property;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("arc {tail:?} -> {head:?} references undeclared vertex {vertex:?}")]
    UnknownVertex {
        tail: String,
        head: String,
        vertex: String,
    },
    #[error("duplicate arc {tail:?} -> {head:?}")]
    DuplicateArc { tail: String, head: String },
    #[error("self-loop on vertex {0:?}")]
    SelfLoop(String),
    #[error("arc {tail:?} -> {head:?} has negative cost {cost}")]
    NegativeCost {
        tail: String,
        head: String,
        cost: String,
    },
    #[error("arc {tail:?} -> {head:?} references unknown matrix {matrix:?}")]
    UnknownMatrix {
        tail: String,
        head: String,
        matrix: String,
    },
    #[error("arc {tail:?} -> {head:?} violates the {kind} kind: {reason}")]
    KindViolation {
        tail: String,
        head: String,
        kind: &'static str,
        reason: &'static str,
    },

    #[error("matrix family is empty")]
    EmptyFamily,
    #[error("matrix {matrix:?} does not satisfy property ({property})")]
    PreconditionViolated { property: Property, matrix: String },
    #[error("instance is in a hard family and has {vertices} vertices, above the brute-force cap {cap}")]
    HardInstanceTooLarge { vertices: usize, cap: usize },
    #[error("exhaustive search over {vertices} vertices exceeds the cap {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error("matrices do not meet the gadget hypothesis: {0}")]
    HypothesisViolated(String),
    #[error("hypergraph is not linear: edges {0} and {1} share two or more vertices")]
    NotLinear(usize, usize),
    #[error("hyperedge {0} does not have three distinct vertices")]
    BadHyperedge(usize),
    #[error("recovered max-cut value {0} is not an integer")]
    NonIntegralRecovery(String),
    #[error("recovered max-cut value {value} is outside 0..={edges}")]
    RecoveryOutOfRange { value: String, edges: usize },

    #[error("threshold k must be nonnegative, got {0}")]
    NegativeK(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge {u:?}-{v:?} has color {color}, expected 1 or 2")]
    BadColor { u: String, v: String, color: i64 },
    #[error("arc {tail:?} -> {head:?} has negative weight {weight}")]
    NegativeWeight {
        tail: String,
        head: String,
        weight: String,
    },
    #[error("bad terminals: {0}")]
    BadTerminals(String),

    /// A cross-check between two independent computations disagreed.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_too_large(&self) -> bool {
        matches!(self, Error::HardInstanceTooLarge { .. } | Error::TooLarge { .. })
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
