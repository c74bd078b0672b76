//! Exact computation of higher Lie characters of the symmetric group `S_n`
//! and the hyperoctahedral group `B_n`, together with the machinery needed to
//! check the surrounding character identities at small sizes: permutation
//! enumeration with descent statistics, exact cyclotomic integers, and sparse
//! truncated power series over an exact coefficient ring.
//!
//! The algebraic kernels ([`cyclotomic::Cyclotomic`] and
//! [`series::TruncatedSeries`]) are generic over their scalar type through
//! `num-traits`; the aliases below fix the exact types the verifiers use.

pub mod arith;
pub mod class_function;
pub mod cyclotomic;
pub mod error;
pub mod gf;
pub mod hlc;
pub mod limits;
pub mod partition;
pub mod perm;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod series;
pub mod signed;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arbitrary-precision integer used for character values and group orders.
pub type Integer = BigInt;

/// Exact rational number (always normalized, positive denominator).
pub type Rational = BigRational;

/// Cyclotomic integer with arbitrary-precision coefficients.
pub type CycloInt = cyclotomic::Cyclotomic<BigInt>;

/// Cyclotomic integer with machine-word coefficients, used for hot accumulation.
pub type SmallCycloInt = cyclotomic::Cyclotomic<i64>;

/// Truncated bigraded series with exact rational coefficients.
pub type RationalSeries = series::TruncatedSeries<BigRational>;

/// Truncated bigraded series with `f64` coefficients (approximate).
pub type FloatSeries = series::TruncatedSeries<f64>;

pub use class_function::{BClassFunction, ClassFunction};
pub use error::{Error, Result};
pub use limits::Limits;
pub use partition::{BiPartition, Partition, PartitionFilter};
pub use perm::{DescentSet, Permutation};
pub use signed::SignedPermutation;
