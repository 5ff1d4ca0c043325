//! Exact arithmetic for least common multiples of polynomial sequences.
//!
//! The central question is whether `lcm(f(⌈n/2⌉), ..., f(n)) >= 2^n` for a
//! polynomial `f` with nonnegative integer coefficients. Every decision in
//! this crate is an exact integer comparison; floating point only appears in
//! display values such as [`PsiValue::log_value`].
//!
//! Polynomial and gcd/lcm code is generic over [`Scalar`], so it runs over
//! machine integers or [`BigInt`]. Bound checks and the sweep engine always
//! use [`BigInt`].

pub mod bounds;
pub mod cli;
pub mod lcm_engine;
pub mod polynomial;
pub mod report;
pub mod scalar;
pub mod verifier;

pub use num_bigint::{BigInt, BigUint};

pub use bounds::{BoundError, BoundKind, BoundReport, Comparison, RangeMode, Relation};
pub use lcm_engine::{chebyshev_psi, gcd, half_range, lcm2, lcm_range, PsiValue, RangeLcmRequest};
pub use polynomial::{linear_product, verify_identity, IdentityCheck, Poly, PolyError};
pub use scalar::Scalar;
pub use verifier::{
    enumerate_family, run_campaign, CampaignReport, ExceptionRecord, FamilyFilter, SweepConfig,
};

/// Polynomial over unbounded integers.
pub type IntPoly = Poly<BigInt>;
/// Polynomial over `i64`, for small computations where overflow is ruled out.
pub type SmallPoly = Poly<i64>;
/// Unbounded natural number.
pub type BigNat = BigUint;
/// Range request over unbounded integers.
pub type IntRangeRequest = RangeLcmRequest<BigInt>;
