use thiserror::Error;

use crate::exactlin::FieldSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("not an isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("algebra is not unital")]
    NotUnital,
    #[error("not a module algebra: {0}")]
    NotModuleAlgebra(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded { what: String, needed: u128, budget: u128 },
    #[error("search incomplete: {0}")]
    SearchIncomplete(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
