//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Parameter outside its admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// The positivity interval defining the cone of analyticity is empty;
    /// the conic rule cannot be applied and another method must be used.
    #[error("infeasible cone: {0}")]
    InfeasibleCone(String),

    /// A method was requested for parameters it does not support.
    #[error("method not applicable: {0}")]
    MethodInfeasible(String),

    /// Sinh acceleration would need more terms than the configured cap;
    /// the caller should dispatch to another method.
    #[error("far-tail budget exceeded: required N = {required} > cap {cap}")]
    FarTail { required: u64, cap: u64 },

    /// Argument outside the bracket a set of principal components covers.
    #[error("argument {x} outside bracket [{lo}, {hi}]")]
    OutOfBracket { x: f64, lo: f64, hi: f64 },

    /// Quantile bracket does not enclose the requested probability.
    #[error("invalid bracket: {0}")]
    BracketInvalid(String),

    /// Root solver did not reach the requested tolerance.
    #[error("solver did not converge: {0}")]
    Unconverged(String),

    /// Unknown table id passed to the `table` command.
    #[error("unknown table id {0:?}")]
    UnknownTable(String),

    /// Bad CLI flags or config file.
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
}
