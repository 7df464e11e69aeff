use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in fields with no common embedding, or an embedding target is invalid.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("group too large: closure exceeded {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("step budget of {budget} exhausted after {steps} steps ({basis_len} basis elements so far)")]
    Timeout {
        budget: usize,
        steps: usize,
        basis_len: usize,
    },
    #[error("cost cap exceeded: {0}")]
    CostCap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown key: {0}")]
    UnknownKey(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}
