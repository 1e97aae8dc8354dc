use thiserror::Error;

use crate::kernel::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }

    pub(crate) fn at(mut self, line: usize, column: usize) -> Self {
        self.line = line;
        self.column = column;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("`{0}` lies outside the declared ambient basis")]
    OutsideAmbient(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("unknown catalog algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("`{0}` is an infinite family and needs a weight window")]
    MissingWindow(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent table: {0}")]
    Inconsistent(String),
}

/// A product or action left the closed weight window.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{generator}` of weight {weight} falls outside the window")]
pub struct WindowError {
    pub generator: String,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Window(#[from] WindowError),
    #[error("degree bound {bound} exceeded by a word of length {length}")]
    Bound { bound: usize, length: usize },
    #[error("completion collapsed: {0}")]
    Completion(String),
    #[error("ill-defined extension: {0}")]
    IllDefined(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
