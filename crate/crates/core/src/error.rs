use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different variable contexts")]
    ContextMismatch,
    #[error("a variable context needs at least one variable")]
    NoVariables,
    #[error("{count} variables requested, at most {max} are supported")]
    TooManyVariables { count: usize, max: usize },
    #[error("variable name at position {0} is empty")]
    EmptyVariableName(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable index {index} out of range for {count} variables")]
    VariableIndex { index: usize, count: usize },
    #[error("assignment has {found} entries, expected {expected}")]
    AssignmentLength { expected: usize, found: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("weight vector has {found} entries, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("weight {weight} of variable {index} is negative")]
    NegativeWeight { index: usize, weight: i64 },
    #[error("weights are too large: their total exceeds the supported range")]
    WeightOverflow,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("variety enumeration over {vars} variables exceeds the limit of {limit}; raise the limit explicitly to proceed")]
    VarietyGuard { vars: usize, limit: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("duplicate row label `{0}`")]
    DuplicateLabel(String),
    #[error("{labels} labels given for {rows} rows")]
    LabelCount { labels: usize, rows: usize },
    #[error("unknown row label `{0}`")]
    UnknownRow(String),
    #[error("pattern index {0} is out of range")]
    UnknownPattern(usize),
    #[error("selection is empty")]
    EmptySelection,
    #[error("cluster size {0} is not supported (use 2 or 3)")]
    ClusterSize(usize),
    #[error("max_terms must be at least 1")]
    MaxTerms,
    #[error("cluster search would visit {candidates} subsets, above the cap of {cap}")]
    ClusterGuard { candidates: u128, cap: u128 },
}
