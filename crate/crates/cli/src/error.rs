use thiserror::Error;

pub mod exit {
    pub const OK: i32 = 0;
    pub const OTHER: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DISCONNECTED: i32 = 3;
    pub const TOO_LARGE: i32 = 4;
    pub const DISAGREEMENT: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] cutspace::Error),
    #[error("{0}")]
    BadParams(String),
    /// `dump` holds the offending graph in file format, for triage.
    #[error("methods disagree on graph {graph}: {detail}")]
    Disagreement { graph: String, detail: String, dump: String },
    #[error("{path}: {inner}")]
    InFile { path: String, inner: Box<CliError> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::BadParams(_) => exit::PARSE,
            CliError::Graph(cutspace::Error::Disconnected) => exit::DISCONNECTED,
            CliError::Graph(cutspace::Error::TooLarge { .. }) => exit::TOO_LARGE,
            CliError::Graph(_) => exit::PARSE,
            CliError::Disagreement { .. } => exit::DISAGREEMENT,
            CliError::InFile { inner, .. } => inner.exit_code(),
            CliError::Io(_) => exit::OTHER,
        }
    }
}
