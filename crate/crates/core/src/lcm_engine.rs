//! gcd and lcm over exact integers, range lcms of polynomial values, and
//! Chebyshev's ψ.
//!
//! The lcm of any multiset containing `0` is `0`. Divisibility is sign-blind,
//! so every lcm is taken over absolute values and is nonnegative.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::polynomial::Poly;
use crate::scalar::Scalar;

/// Ranges at most this wide are reduced with a plain sequential fold.
pub const DEFAULT_TREE_THRESHOLD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RangeError {
    #[error("invalid range: need 1 <= m <= n, got m = {m}, n = {n}")]
    InvalidRange { m: u64, n: u64 },
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd<T: Scalar>(a: &T, b: &T) -> T {
    a.gcd(b)
}

/// lcm of `|a|` and `|b|`, zero when either is zero.
pub fn lcm2<T: Scalar>(a: &T, b: &T) -> T {
    if a.is_zero() || b.is_zero() {
        return T::zero();
    }
    let g = a.gcd(b);
    (a.abs() / g) * b.abs()
}

/// Start of the half range: the smallest integer not less than `n / 2`.
pub fn half_start(n: u64) -> u64 {
    n.div_ceil(2)
}

/// `(⌈n/2⌉, n)`.
pub fn half_range(n: u64) -> (u64, u64) {
    (half_start(n), n)
}

/// lcm of `f(m), f(m + 1), ..., f(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeLcmRequest<T> {
    f: Poly<T>,
    m: u64,
    n: u64,
}

impl<T: Scalar> RangeLcmRequest<T> {
    pub fn new(f: Poly<T>, m: u64, n: u64) -> Result<Self, RangeError> {
        if m == 0 || m > n {
            return Err(RangeError::InvalidRange { m, n });
        }
        Ok(Self { f, m, n })
    }

    /// The range `[⌈n/2⌉, n]`.
    pub fn half(f: Poly<T>, n: u64) -> Result<Self, RangeError> {
        let (m, n) = half_range(n);
        Self::new(f, m, n)
    }

    pub fn f(&self) -> &Poly<T> {
        &self.f
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn width(&self) -> usize {
        (self.n - self.m + 1) as usize
    }

    /// `f(m), ..., f(n)` in order.
    pub fn values(&self) -> Vec<T> {
        let eval = |i: u64| self.f.eval(&T::from_index(i));
        if self.width() > DEFAULT_TREE_THRESHOLD {
            (self.m..=self.n).into_par_iter().map(eval).collect()
        } else {
            (self.m..=self.n).map(eval).collect()
        }
    }
}

pub fn lcm_range<T: Scalar>(req: &RangeLcmRequest<T>) -> T {
    lcm_range_with_threshold(req, DEFAULT_TREE_THRESHOLD)
}

/// Same as [`lcm_range`] with an explicit leaf width for the tree reduction.
/// The result does not depend on `threshold`.
pub fn lcm_range_with_threshold<T: Scalar>(req: &RangeLcmRequest<T>, threshold: usize) -> T {
    tree_lcm(&req.values(), threshold.max(1))
}

/// lcm of a slice by balanced binary splitting, with the halves reduced in
/// parallel.
pub fn tree_lcm<T: Scalar>(values: &[T], threshold: usize) -> T {
    let threshold = threshold.max(1);
    if values.len() <= threshold {
        return values.iter().fold(T::one(), |acc, v| lcm2(&acc, v));
    }
    let (left, right) = values.split_at(values.len() / 2);
    let (a, b) = rayon::join(|| tree_lcm(left, threshold), || tree_lcm(right, threshold));
    lcm2(&a, &b)
}

/// `lcm(1, ..., n)` as a natural number.
pub fn lcm_upto(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let req = RangeLcmRequest::new(Poly::<BigInt>::x(), 1, n).expect("1 <= n");
    to_natural(lcm_range(&req))
}

/// `lcm(1, ..., n)` for every `n` in `1..=limit`, built incrementally.
pub fn lcm_upto_table(limit: u64) -> Vec<BigUint> {
    let mut acc = BigUint::one();
    (1..=limit)
        .map(|i| {
            acc = acc.lcm(&BigUint::from(i));
            acc.clone()
        })
        .collect()
}

pub(crate) fn to_natural(v: BigInt) -> BigUint {
    v.abs().to_biguint().expect("absolute value is nonnegative")
}

/// Chebyshev's ψ at an integer: `ψ(n) = log lcm(1, ..., n)`.
///
/// `log_value` is for display. Nothing in the crate compares it.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiValue {
    pub n: u64,
    pub lcm_value: BigUint,
    pub log_value: f64,
    pub bit_length: u64,
}

pub fn chebyshev_psi(n: u64) -> PsiValue {
    psi_from_lcm(n, lcm_upto(n))
}

pub(crate) fn psi_from_lcm(n: u64, lcm_value: BigUint) -> PsiValue {
    PsiValue {
        n,
        log_value: ln_biguint(&lcm_value),
        bit_length: lcm_value.bits(),
        lcm_value,
    }
}

/// Natural log of a positive big natural, from its top 64 bits.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("64-bit value fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&12i64, &18), 6);
        assert_eq!(gcd(&0i64, &5), 5);
        assert_eq!(gcd(&-4i64, &6), 2);
        assert_eq!(gcd(&0i64, &0), 0);
        assert_eq!(gcd(&big(-4), &big(-6)), big(2));
    }

    #[test]
    fn lcm2_examples() {
        assert_eq!(lcm2(&4i64, &6), 12);
        assert_eq!(lcm2(&0i64, &7), 0);
        assert_eq!(lcm2(&3i64, &5), 15);
        assert_eq!(lcm2(&-3i64, &5), 15);
        assert_eq!(lcm2(&-4i64, &-6), 12);
    }

    #[test]
    fn half_range_examples() {
        assert_eq!(half_range(5), (3, 5));
        assert_eq!(half_range(1), (1, 1));
        assert_eq!(half_range(6), (3, 6));
        assert_eq!(half_range(2), (1, 2));
    }

    #[test]
    fn lcm_range_examples() {
        let x = Poly::<BigInt>::x();
        let r = RangeLcmRequest::new(x.clone(), 3, 5).unwrap();
        assert_eq!(lcm_range(&r), big(60));
        let r = RangeLcmRequest::new(x, 3, 6).unwrap();
        assert_eq!(lcm_range(&r), big(60));
        let f = Poly::from_coeffs(vec![big(1), big(0), big(1)]);
        let r = RangeLcmRequest::new(f, 1, 3).unwrap();
        assert_eq!(lcm_range(&r), big(10));
    }

    #[test]
    fn lcm_range_zero_and_negative_values() {
        // x - 2 vanishes at 2.
        let f = Poly::from_coeffs(vec![-2i64, 1]);
        assert_eq!(lcm_range(&RangeLcmRequest::new(f.clone(), 1, 4).unwrap()), 0);
        // f(1) = -1, f(3) = 1, f(4) = 2
        assert_eq!(lcm_range(&RangeLcmRequest::new(f, 3, 4).unwrap()), 2);
        let g = Poly::from_coeffs(vec![0i64, -3]);
        assert_eq!(lcm_range(&RangeLcmRequest::new(g, 1, 4).unwrap()), 36);
    }

    #[test]
    fn request_validation() {
        let x = Poly::<i64>::x();
        assert_eq!(
            RangeLcmRequest::new(x.clone(), 4, 3).unwrap_err(),
            RangeError::InvalidRange { m: 4, n: 3 }
        );
        assert!(RangeLcmRequest::new(x.clone(), 0, 3).is_err());
        let half = RangeLcmRequest::half(x, 7).unwrap();
        assert_eq!((half.m(), half.n(), half.width()), (4, 7, 4));
    }

    #[test]
    fn tree_threshold_does_not_change_result() {
        let f = Poly::from_coeffs(vec![big(1), big(1), big(1)]);
        let req = RangeLcmRequest::new(f, 1, 300).unwrap();
        let seq = req.values().iter().fold(BigInt::one(), |a, v| lcm2(&a, v));
        for t in [0, 1, 2, 3, 7, 64, 1000] {
            assert_eq!(lcm_range_with_threshold(&req, t), seq, "threshold {t}");
        }
    }

    #[test]
    fn psi_examples() {
        let p = chebyshev_psi(1);
        assert_eq!(p.lcm_value, BigUint::from(1u32));
        assert_eq!(p.log_value, 0.0);
        assert_eq!(chebyshev_psi(10).lcm_value, BigUint::from(2520u32));
        assert_eq!(chebyshev_psi(7).lcm_value, BigUint::from(420u32));
        assert!((chebyshev_psi(10).log_value - 2520f64.ln()).abs() < 1e-12);
        assert_eq!(chebyshev_psi(10).bit_length, 12);
    }

    #[test]
    fn ln_of_large_values() {
        let x = BigUint::one() << 1000u32;
        let expected = 1000.0 * std::f64::consts::LN_2;
        assert!((ln_biguint(&x) - expected).abs() < 1e-9);
    }

    #[test]
    fn incremental_table_matches_direct() {
        let table = lcm_upto_table(60);
        for n in 1..=60u64 {
            assert_eq!(table[n as usize - 1], lcm_upto(n));
        }
    }
}
