//! The integer scalar abstraction shared by the polynomial and lcm code.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// A signed integer ring usable as a polynomial coefficient.
///
/// Implemented for every type with exact integer semantics: the machine
/// integers (`i32`, `i64`, `i128`, which are exact only until they overflow)
/// and [`num_bigint::BigInt`], which never overflows and is what every bound
/// check in this crate uses.
pub trait Scalar:
    Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync
{
    /// Lifts a small natural (an index or range endpoint) into the ring.
    fn from_index(i: u64) -> Self {
        Self::from_u64(i).expect("index does not fit in the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync
{
}

/// Binomial coefficient `C(n, k)` by the multiplicative formula.
///
/// Every partial product `C(n, i)` is itself an integer, so each division is
/// exact. Returns zero when `k > n`.
pub fn binomial<T: Scalar>(n: u64, k: u64) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_index(n - i);
        acc = acc / T::from_index(i + 1);
    }
    acc
}

/// `n!`, with `0! = 1`.
pub fn factorial<T: Scalar>(n: u64) -> T {
    (2..=n).fold(T::one(), |acc, i| acc * T::from_index(i))
}

/// `2^n` as an exact scalar.
pub fn pow2<T: Scalar>(n: u64) -> T {
    num_traits::pow(T::from_index(2), n as usize)
}
