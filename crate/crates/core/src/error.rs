use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the {MAX_ORDER}-vertex limit")]
    OrderTooLarge(usize),
    #[error("family parameter {0} is out of range")]
    ParameterOutOfRange(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is not universal")]
    NotUniversal(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("record ends before the adjacency data is complete")]
    Truncated,
    #[error("nonzero padding bits in the final byte")]
    BadPadding,
    #[error("trailing bytes after the adjacency data")]
    TrailingData,
    #[error("order {0} exceeds the {MAX_ORDER}-vertex limit")]
    OrderOverflow(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}
