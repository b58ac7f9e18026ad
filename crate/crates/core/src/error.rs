use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("capacity exceeded: {what} is {requested}, limit {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error("candidate weights do not exhaust the space: residual dimension {residual}")]
    ResidualSubspace { residual: usize },
    #[error("invariant form space has dimension {0}, expected 1")]
    FormSpaceDimension(usize),
    #[error("invariant form is degenerate: inertia ({positive}, {negative}, {zero})")]
    DegenerateForm {
        positive: usize,
        negative: usize,
        zero: usize,
    },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
