use std::fmt;

/// A parse failure at a 1-based position. `line` is 0 when the input was a
/// single expression rather than a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl SyntaxError {
    pub fn new(col: usize, msg: impl Into<String>) -> Self {
        SyntaxError { line: 0, col, msg: msg.into() }
    }

    pub fn at_line(mut self, line: usize, offset: usize) -> Self {
        self.line = line;
        self.col += offset;
        self
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
        } else {
            write!(f, "column {}: {}", self.col, self.msg)
        }
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("syntax error at {0}")]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Core(#[from] affcell_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{}", invariant_message(*.line, .msg))]
    Invariant { line: Option<usize>, msg: String },
    #[error("{0}")]
    Usage(String),
}

fn invariant_message(line: Option<usize>, msg: &str) -> String {
    match line {
        Some(n) => format!("line {}: {}", n, msg),
        None => msg.to_string(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
