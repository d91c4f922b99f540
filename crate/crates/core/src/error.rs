//! Error types shared across the crate.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("focal set width {width} does not match frame size {frame}")]
    WidthMismatch { width: usize, frame: usize },

    #[error("simple support needs a focal set that is neither empty nor the whole frame")]
    InvalidSimpleSupport,

    #[error("{what} must lie in [{lo}, {hi}], got {value}")]
    OutOfRange {
        what: &'static str,
        lo: f64,
        hi: f64,
        value: f64,
    },

    #[error("mass function does not sum to 1 (sum = {sum})")]
    NotNormalized { sum: f64 },

    #[error("negative mass {mass} on a focal set")]
    NegativeMass { mass: f64 },

    #[error("operation needs at least one mass function")]
    EmptyCombination,

    #[error("mass functions live on different frames")]
    FrameMismatch,

    #[error("operand carries mass on the empty set; normalize it first")]
    UnnormalizedOperand,

    #[error("product frame would have {size} elements, more than the supported {max}")]
    FrameTooLarge { size: usize, max: usize },

    #[error("pignistic transform is undefined when all mass sits on the empty set")]
    UndefinedTransform,

    #[error("at least one contribution is required")]
    NoContributions,

    #[error("no reference time for question {0}")]
    MissingReferenceTime(String),

    #[error("no decision for gold question {0}")]
    MissingDecision(String),

    #[error("gold record list is empty")]
    EmptyGold,

    #[error("group \"{0}\" selects no contributors")]
    EmptyGroup(String),

    #[error("lambda grid must be non-empty, strictly increasing and within [0, 1]")]
    BadLambdaGrid,

    #[error("invalid campaign config: {0}")]
    InvalidConfig(String),

    #[error("invalid archetype spec: {0}")]
    InvalidArchetype(String),

    #[error("archetype specs produce zero contributors")]
    EmptyCrowd,

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Ingest(#[from] IngestError),

    #[error("unsupported output: {0}")]
    UnsupportedOutput(String),
}

impl Error {
    /// True for errors caused by the environment (filesystem) rather than
    /// by the data. CLI front ends map these to a distinct exit code.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

/// One rejected row of an ingested file. `row` is the physical line number
/// in the file, counting the header as line 1.
#[derive(Debug, Clone)]
pub struct RowIssue {
    pub row: u64,
    pub message: String,
}

/// All rows rejected while ingesting one file. Ingestion keeps scanning
/// after the first bad row so that every problem is reported at once.
#[derive(Debug)]
pub struct IngestError {
    pub path: PathBuf,
    pub issues: Vec<RowIssue>,
}

impl fmt::Display for IngestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} invalid row(s)",
            self.path.display(),
            self.issues.len()
        )?;
        for issue in &self.issues {
            writeln!(f, "  row {}: {}", issue.row, issue.message)?;
        }
        Ok(())
    }
}

impl std::error::Error for IngestError {}
