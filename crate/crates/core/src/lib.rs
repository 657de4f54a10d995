//! Exact computation of the S_n-closure `G(A/B) = A^{⊗n} / I(A, B)` of a ring
//! of rank n given by structure constants, over ℤ, ℚ or a prime field.

pub mod closure;
pub mod error;
pub mod gallery;
pub mod linalg;
pub mod ncpoly;
pub mod partition;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod spec_file;
pub mod tensor;
pub mod verify;

pub use closure::{close, close_with, CloseOptions, ClosureRing};
pub use error::{Error, Result};
pub use partition::Partition;
pub use ring::{CharPoly, RankRing, RingElement, Violation};
pub use scalar::{Base, Scalar};
pub use tensor::{TensorElement, TensorSpace, TensorWord};
