//! Exact arithmetic layer: the coefficient abstraction, sparse multivariate
//! polynomials and Laurent polynomials in `q`.
//!
//! Everything is exact. The coefficient type is generic (anything that behaves
//! like a signed Euclidean integer), and the rest of the crate works with the
//! arbitrary-precision instantiations exported at the crate root.

mod laurent;
mod linalg;
mod poly;

pub use laurent::LaurentPoly;
pub use linalg::determinant;
pub use poly::{Monomial, MultiPoly};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{NumAssignRef, NumRef, Signed};
use thiserror::Error;

/// Coefficient ring for polynomials: a signed integer type with exact
/// (Euclidean) division.
///
/// Implemented automatically for `num_bigint::BigInt` and the primitive signed
/// integers. The primitive types are useful in tests but can overflow; the
/// library itself always uses `BigInt`.
pub trait Coefficient:
    Clone + Debug + Display + Eq + Ord + Hash + Integer + Signed + NumRef + NumAssignRef + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone + Debug + Display + Eq + Ord + Hash + Integer + Signed + NumRef + NumAssignRef + Send + Sync + 'static
{
}

/// Errors raised by the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division: {dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },
}
