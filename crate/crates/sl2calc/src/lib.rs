//! Exact computational algebra for the categorified quantum group of `sl(2)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_arith`] — sparse multivariate polynomials and Laurent polynomials
//!   over an exact integer coefficient ring;
//! * [`partitions`] — partitions, box-bounded enumeration, complements;
//! * [`symfun`] — Schur polynomials (three independent formulas),
//!   Littlewood–Richardson coefficients, classical symmetric-function identities;
//! * [`nilhecke`] — the nilHecke algebra in normal form with its faithful action
//!   on polynomials, and the thick calculus built from it (idempotents,
//!   splitters, crossings, matrix units);
//! * [`grassmannian`] — symmetric functions in infinitely many variables,
//!   bubbles, thick-bubble determinants and the Hopf-algebra structure;
//! * [`udot`] — the idempotented quantum group over `Z[q, q^-1]`, its canonical
//!   basis, decomposition multiplicities and graded Hom ranks.
//!
//! All arithmetic is exact. The polynomial types are generic over the
//! coefficient ring; the aliases below fix the arbitrary-precision
//! instantiation used throughout the higher layers.

pub mod exact_arith;
pub mod grassmannian;
pub mod nilhecke;
pub mod partitions;
pub mod symfun;
pub mod udot;

pub use num_bigint::BigInt;

/// Polynomial in `x_1, ..., x_n` with arbitrary-precision integer coefficients.
pub type Poly = exact_arith::MultiPoly<BigInt>;

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
pub type Laurent = exact_arith::LaurentPoly<BigInt>;

pub use exact_arith::ArithError;
pub use grassmannian::LambdaElement;
pub use nilhecke::{NhElement, NhError, Permutation};
pub use partitions::{Partition, PartitionError};
pub use udot::{Tag, UdotElement, UdotError};
