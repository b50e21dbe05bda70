pub mod algebra;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod finvec;
pub mod hamming;
pub mod linalg;
pub mod reconstruct;
pub mod report;

pub use algebra::{Algebra, AlgebraRef, AlgebraSpec, Scalar};
pub use error::{Error, Result};
pub use finvec::{Column, DenseVec, FinVec};
pub use hamming::{ChoiceFunction, HammingCode, PerfectMode, PerfectOptions, PerfectReport};
pub use report::Report;
