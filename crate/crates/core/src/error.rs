use thiserror::Error;

use crate::exactalg::AlgError;
use crate::gtmodule::{Basis, Index};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("basis mismatch: expected {expected:?}, found {found:?}")]
    BasisMismatch { expected: Basis, found: Basis },
    #[error("operands carry different parameters")]
    ParamsMismatch,
    #[error("non-generic parameters: {0}")]
    NonGenericParameters(String),
    #[error("not a Cartan element")]
    NonCartan,
    #[error("operation requires integral mu2")]
    RequiresIntegralMu2,
    #[error("index {0} lies outside the index set")]
    SupportViolation(Index),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("obstruction at index {0}")]
    ObstructionAtIndex(Index),
    #[error("empty start set")]
    EmptyStart,
    #[error("index {0} is outside the family's support")]
    OutsideFamily(Index),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
