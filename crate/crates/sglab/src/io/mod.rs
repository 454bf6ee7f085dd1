mod graph6;
mod sg;

pub use graph6::{parse_graph6, read_graph6, write_graph6};
pub use sg::{parse_sg, read_sg_file, write_sg};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl FormatError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> Self {
        FormatError::Syntax {
            line,
            message: message.into(),
        }
    }
}
