use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{{{0},{1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} repeated in cycle")]
    RepeatedVertex(usize),
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("cycle length {length} outside 3..={order}")]
    LengthOutOfRange { length: usize, order: usize },
    #[error("signed graphs have different underlying graphs")]
    UnderlyingMismatch,
    #[error("invalid spanning forest: {0}")]
    InvalidForest(&'static str),
    #[error("exact limit exceeded for {what}: order {order} > {limit}")]
    ExactLimitExceeded {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
