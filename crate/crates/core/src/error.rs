use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("infeasible degree sequence: {0}")]
    InfeasibleDegrees(String),
    #[error("pairing model did not produce a simple graph within {0} attempts")]
    RetryBudgetExhausted(usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("claw size {p} exceeds the enumeration cap {cap}")]
    ClawCapExceeded { p: usize, cap: usize },
    #[error("graph contains an induced K_1,{0}")]
    NotClawFree(usize),
    #[error("demand vector has {got} entries but the graph has {n} vertices")]
    DemandLength { got: usize, n: usize },
    #[error("search budget of {0} nodes exhausted before optimality was proven")]
    BudgetExhausted(u64),
    #[error("brute force is capped at {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("(x, y) = ({x}, {y}) rejected: {reason}")]
    InvalidXy { x: u64, y: u64, reason: String },
    #[error("input set is not {0}")]
    NotDominating(String),
    #[error("mapped set violates its size bound: {0}")]
    MappingBound(String),
    #[error("reduction relation violated: {0}")]
    RelationViolated(String),
}
