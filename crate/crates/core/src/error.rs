use alloc::string::String;

use crate::laurent::{BlockId, Var};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("duplicate block id {0}")]
    DuplicateBlock(BlockId),
    #[error("unknown block {0}")]
    UnknownBlock(BlockId),
    #[error("variable z[{}][{}] is outside the block shape", .0.block, .0.index)]
    VariableOutOfRange(Var),
    #[error("no value assigned to z[{}][{}]", .0.block, .0.index)]
    MissingAssignment(Var),
    #[error("z[{}][{}] is assigned zero but z variables are invertible", .0.block, .0.index)]
    ZeroAssignment(Var),
    #[error("weight {0} is not weakly decreasing")]
    NotDominant(String),
    #[error("weight length {found} does not match block size {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("polynomial is not symmetric in block {0}")]
    NotSymmetric(BlockId),
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("missing weight for label {0}")]
    MissingWeight(String),
    #[error("invalid weight data: {0}")]
    InvalidWeights(String),
    #[error("q exponent of {0} is not a half-integer")]
    NonHalfIntegralExponent(String),
    #[error("cell elements belong to different data")]
    DatumMismatch,
    #[error("invalid cell datum: {0}")]
    InvalidDatum(String),
    #[error("invalid Drinfeld point: {0}")]
    InvalidPoint(String),
    #[error("invalid Drinfeld polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("factor {0} has no rational roots")]
    NoRationalRoots(String),
}
