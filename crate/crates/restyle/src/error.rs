//! Error types shared across the crate.

use thiserror::Error;

/// A syntax error with its byte offset; line/column are attached when the
/// offending source is at hand.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("syntax error at line {line}, column {col}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: String) -> Self {
        ParseError {
            offset,
            line: 0,
            col: 0,
            message,
        }
    }

    pub fn with_position(mut self, line: usize, col: usize) -> Self {
        self.line = line;
        self.col = col;
        self
    }
}

/// Failures while applying edits or printing a tree. These indicate misuse
/// of the editing API, not bad input programs.
#[derive(Debug, Error)]
pub enum RenderError {
    #[error("overlapping edits at byte {0}")]
    OverlappingEdits(usize),
    #[error("edit span {start}..{end} out of bounds (len {len})")]
    OutOfBounds { start: usize, end: usize, len: usize },
}

/// Failures while executing subject programs.
#[derive(Debug, Error)]
pub enum ExecError {
    #[error("interpreter not found: {0}")]
    InterpreterNotFound(String),
    #[error("failed to spawn interpreter: {0}")]
    SpawnFailure(#[from] std::io::Error),
}

/// A transform failed in a way that should be recorded per program rather
/// than aborting a batch.
#[derive(Debug, Error)]
pub enum TransformError {
    #[error("transformed output failed to re-parse: {0}")]
    Reparse(#[from] ParseError),
    #[error("render failed: {0}")]
    Render(#[from] RenderError),
}
