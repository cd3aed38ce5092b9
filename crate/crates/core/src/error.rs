use thiserror::Error;

/// Failures of the algebraic layer: validation diagnostics and budget caps.
///
/// Validation variants carry a printable witness naming the elements that
/// violate the axiom.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("group table is not a group: {0}")]
    InvalidGroup(String),
    #[error("multiplication is not associative: {0}")]
    NonAssociative(String),
    #[error("multiplication is not commutative: {0}")]
    NonCommutative(String),
    #[error("unity is not a two-sided identity in the identity component: {0}")]
    BadUnity(String),
    #[error("product of components {g} and {h} leaves component {g}*{h}: {witness}")]
    GradingViolation { g: usize, h: usize, witness: String },
    #[error("structure constants are incompatible with the cyclic orders: {0}")]
    IllFormedConstants(String),
    #[error("scalar action is not associative: {0}")]
    ActionNotAssociative(String),
    #[error("scalar action is not unital: {0}")]
    NotUnital(String),
    #[error("generator {0} is not homogeneous")]
    NonHomogeneousGenerator(String),
    #[error("element {0} is not homogeneous")]
    NonHomogeneous(String),
    #[error("ideal is the whole ring")]
    ImproperIdeal,
    #[error("budget exceeded: {what} would exceed the cap of {cap}")]
    BudgetExceeded { what: &'static str, cap: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("seed does not match the spectrum kind: {0}")]
    KindMismatch(String),
    #[error("instance has no [module] section")]
    MissingModule,
}

/// Instance-file diagnostics, positioned at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error, expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("{line}:{col}: {message}")]
    Semantic { line: usize, col: usize, message: String },
    #[error("{line}:1: duplicate section [{section}]")]
    DuplicateSection { line: usize, section: String },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
