use thiserror::Error;

use crate::ring::Violation;
use crate::scalar::Base;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),

    #[error("expected base {expected}, found {found}")]
    WrongBase { expected: Base, found: Base },

    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },

    #[error("element does not belong to this ring")]
    ParentMismatch,

    #[error("structure-constant table is not a valid ring of rank n ({} violations)", .0.len())]
    InvalidRing(Vec<Violation>),

    #[error("polynomial is not monic")]
    NonMonic,

    #[error("the degenerate ring needs a field base, got {0}")]
    DegenerateNeedsField(Base),

    #[error("tensor position {position} out of range 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },

    #[error("permutation has size {found}, expected {expected}")]
    BadPermutation { expected: usize, found: usize },

    #[error("rank {n} exceeds the direct-computation guard (max {max}); rerun with --max-n {n} to override")]
    ResourceGuard { n: usize, max: usize },

    #[error("the closure has torsion, so no residue basis with a trace form exists")]
    TorsionPresent,

    #[error("the closure is torsion-free but has no residue basis of words")]
    NoWordBasis,

    #[error("content grading is only defined for the degenerate rings R_n")]
    NotDegenerate,

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    #[error("partitions of different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("{0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown gallery ring {name:?}; available: {available}")]
    UnknownGallery { name: String, available: String },
}
