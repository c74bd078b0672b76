//! Scalar trait bounds shared by the generic kernels.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient field of a [`TruncatedSeries`](crate::series::TruncatedSeries).
///
/// Anything with field-like arithmetic and an embedding of the small integers
/// qualifies: `BigRational`, `Ratio<i64>`, `f64`, `f32`.
pub trait Scalar: Clone + Debug + Num + Neg<Output = Self> + FromPrimitive + Send + Sync {}

impl<T> Scalar for T where T: Clone + Debug + Num + Neg<Output = T> + FromPrimitive + Send + Sync {}

/// Coefficient ring of a [`Cyclotomic`](crate::cyclotomic::Cyclotomic): an
/// exact integer type (`i64`, `i128`, `BigInt`).
pub trait RingInt: Clone + Debug + Num + Neg<Output = Self> + From<i64> + Send + Sync {}

impl<T> RingInt for T where T: Clone + Debug + Num + Neg<Output = T> + From<i64> + Send + Sync {}
