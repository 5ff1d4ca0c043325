//! Exact checks of the lcm lower and upper bounds.
//!
//! Each check reduces its inequality to a comparison of two integers, which
//! is stored in the report's [`Comparison`] witness. Inequalities involving
//! roots or fractions are cross-multiplied or raised to a power first, which
//! preserves order since both sides are nonnegative.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lcm_engine::{half_range, half_start, lcm2, lcm_range, lcm_upto, to_natural, RangeLcmRequest};
use crate::scalar::{binomial, factorial, pow2};
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("the zero polynomial is not admissible")]
    ZeroPolynomial,
    #[error("constant polynomials are not admissible (degree must be at least 1)")]
    ConstantPolynomial,
    #[error("polynomial {poly} has a negative coefficient")]
    NegativeCoefficient { poly: String },
    #[error("expected a polynomial of degree {expected}, got degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("invalid range: need 1 <= m <= n, got m = {m}, n = {n}")]
    InvalidRange { m: u64, n: u64 },
    #[error("n must be at least 1")]
    ZeroN,
    #[error("m must be at least 2, got {m}")]
    MTooSmall { m: u64 },
    #[error("a and b must be coprime positive integers, got a = {a}, b = {b}")]
    NotCoprime { a: u64, b: u64 },
    #[error("lcm({a}, a+b, a+2b) = {lcm} is neither the full nor the half product (b = {b})")]
    Key2Mismatch { a: u64, b: u64, lcm: BigUint },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    MainTheorem,
    LemmaKey,
    Key1,
    Key2,
    Lemma22,
    Nair,
    Hanson,
    HalfRangeLn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Gt,
    Lt,
}

impl Relation {
    pub fn eval(self, left: &BigInt, right: &BigInt) -> bool {
        match self {
            Relation::Ge => left >= right,
            Relation::Gt => left > right,
            Relation::Lt => left < right,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Lt => "<",
        }
    }
}

/// The two exact integers a check compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub left: BigInt,
    pub relation: Relation,
    pub right: BigInt,
}

impl Comparison {
    pub fn new(left: impl Into<BigInt>, relation: Relation, right: impl Into<BigInt>) -> Self {
        Self {
            left: left.into(),
            relation,
            right: right.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.relation.eval(&self.left, &self.right)
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.left, self.relation.symbol(), self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub holds: bool,
    /// The lcm (or count) side of the inequality before any rescaling.
    pub lhs: BigUint,
    pub rhs_description: String,
    pub witness: Comparison,
    /// False when the input lies outside the range where the bound is
    /// claimed, so a failure there is expected rather than a counterexample.
    pub claimed_range: bool,
}

impl BoundReport {
    fn new(
        kind: BoundKind,
        lhs: BigUint,
        rhs_description: String,
        witness: Comparison,
        claimed_range: bool,
    ) -> Self {
        Self {
            kind,
            holds: witness.holds(),
            lhs,
            rhs_description,
            witness,
            claimed_range,
        }
    }

    /// A failure inside the claimed range.
    pub fn is_violation(&self) -> bool {
        self.claimed_range && !self.holds
    }
}

/// Which indices the lcm in the main bound runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RangeMode {
    /// `⌈n/2⌉ <= i <= n`.
    #[default]
    Half,
    /// `1 <= i <= n`.
    Full,
}

impl RangeMode {
    pub fn bounds(self, n: u64) -> (u64, u64) {
        match self {
            RangeMode::Half => half_range(n),
            RangeMode::Full => (1, n),
        }
    }
}

fn degree_of(f: &IntPoly) -> Result<usize, BoundError> {
    match f.degree() {
        None => Err(BoundError::ZeroPolynomial),
        Some(0) => Err(BoundError::ConstantPolynomial),
        Some(s) => Ok(s),
    }
}

fn require_nonneg(f: &IntPoly) -> Result<(), BoundError> {
    if f.has_nonneg_coeffs() {
        Ok(())
    } else {
        Err(BoundError::NegativeCoefficient { poly: f.to_string() })
    }
}

/// Checks that `f` is nonconstant with nonnegative coefficients.
pub fn check_admissible(f: &IntPoly) -> Result<(), BoundError> {
    degree_of(f)?;
    require_nonneg(f)
}

fn range_lcm(f: &IntPoly, m: u64, n: u64) -> Result<BigInt, BoundError> {
    let req = RangeLcmRequest::new(f.clone(), m, n).map_err(|_| BoundError::InvalidRange { m, n })?;
    Ok(lcm_range(&req))
}

/// `lcm_{⌈n/2⌉ <= i <= n} f(i) >= 2^n`.
pub fn main_theorem_check(f: &IntPoly, n: u64) -> Result<BoundReport, BoundError> {
    theorem_check(f, n, RangeMode::Half)
}

/// The main bound over the range selected by `mode`.
pub fn theorem_check(f: &IntPoly, n: u64, mode: RangeMode) -> Result<BoundReport, BoundError> {
    check_admissible(f)?;
    if n == 0 {
        return Err(BoundError::ZeroN);
    }
    let (m, n) = mode.bounds(n);
    let lcm = range_lcm(f, m, n)?;
    let threshold: BigInt = pow2(n);
    Ok(BoundReport::new(
        BoundKind::MainTheorem,
        to_natural(lcm.clone()),
        format!("lcm_{{{m} <= i <= {n}}} f(i) >= 2^{n}"),
        Comparison::new(lcm, Relation::Ge, threshold),
        true,
    ))
}

/// `lcm(f(m), ..., f(n)) >= ∏_{k=m}^{n} |f(k) / a_s|^{1/s} / (n - m)!`,
/// checked root-free as
/// `(L · (n - m)!)^s · |a_s|^(n - m + 1) >= ∏ |f(k)|`.
///
/// Accepts any nonconstant integer polynomial. If some `f(k)` vanishes both
/// sides are zero and the report holds.
pub fn lemma_key_check(f: &IntPoly, m: u64, n: u64) -> Result<BoundReport, BoundError> {
    let s = degree_of(f)?;
    if m == 0 || m > n {
        return Err(BoundError::InvalidRange { m, n });
    }
    let req = RangeLcmRequest::new(f.clone(), m, n).map_err(|_| BoundError::InvalidRange { m, n })?;
    let values = req.values();
    let lcm = crate::lcm_engine::tree_lcm(&values, crate::lcm_engine::DEFAULT_TREE_THRESHOLD);
    let product: BigInt = values.iter().map(|v| v.abs()).product();
    let lead = f.leading_coeff().expect("nonzero polynomial").abs();
    let scaled = &lcm * factorial::<BigInt>(n - m);
    let left = num_traits::pow(scaled, s) * num_traits::pow(lead, (n - m + 1) as usize);
    Ok(BoundReport::new(
        BoundKind::LemmaKey,
        to_natural(lcm),
        format!("(n-m)! ⋅ lcm >= ∏_{{k={m}}}^{{{n}}} |f(k)/a_s|^(1/{s})"),
        Comparison::new(left, Relation::Ge, product),
        true,
    ))
}

/// `⌈n/2⌉ · C(n, ⌈n/2⌉) > 2^n`, claimed for `n >= 7`.
pub fn lemma22_holds(n: u64) -> Result<BoundReport, BoundError> {
    if n == 0 {
        return Err(BoundError::ZeroN);
    }
    let h = half_start(n);
    let left = BigInt::from(h) * binomial::<BigInt>(n, h);
    Ok(BoundReport::new(
        BoundKind::Lemma22,
        to_natural(left.clone()),
        format!("{h} ⋅ C({n}, {h}) > 2^{n}"),
        Comparison::new(left, Relation::Gt, pow2::<BigInt>(n)),
        n >= 7,
    ))
}

/// `lcm(f(m-1), f(m)) >= (m(m-1))^2 / (2m-1)` for quadratic `f` with
/// nonnegative coefficients, checked as `lcm · (2m-1) >= (m(m-1))^2`.
pub fn key1_check(f: &IntPoly, m: u64) -> Result<BoundReport, BoundError> {
    let s = degree_of(f)?;
    if s != 2 {
        return Err(BoundError::WrongDegree { expected: 2, found: s });
    }
    require_nonneg(f)?;
    if m < 2 {
        return Err(BoundError::MTooSmall { m });
    }
    let lcm = lcm2(&f.eval(&BigInt::from(m - 1)), &f.eval(&BigInt::from(m)));
    let mm = BigInt::from(m) * BigInt::from(m - 1);
    Ok(BoundReport::new(
        BoundKind::Key1,
        to_natural(lcm.clone()),
        format!("lcm(f({}), f({m})) ⋅ {} >= ({m}⋅{})^2", m - 1, 2 * m - 1, m - 1),
        Comparison::new(lcm * BigInt::from(2 * m - 1), Relation::Ge, &mm * &mm),
        true,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Key2Case {
    /// `lcm = a(a+b)(a+2b)`.
    Full,
    /// `lcm = a(a+b)(a+2b) / 2`.
    Half,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Key2Result {
    pub value: BigUint,
    pub case: Key2Case,
}

/// `lcm(a, a+b, a+2b)` for coprime positive `a`, `b`, classified by whether
/// it equals the full product or half of it.
///
/// The case comes from `gcd(a, a+2b)`; the value is the directly computed
/// lcm, and the two must agree or [`BoundError::Key2Mismatch`] is returned.
pub fn key2_lcm(a: u64, b: u64) -> Result<Key2Result, BoundError> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(BoundError::NotCoprime { a, b });
    }
    let terms = [
        BigUint::from(a),
        BigUint::from(a) + BigUint::from(b),
        BigUint::from(a) + BigUint::from(b) * 2u32,
    ];
    let value = terms.iter().fold(BigUint::one(), |acc, t| acc.lcm(t));
    let product: BigUint = terms.iter().product();
    let case = if terms[0].gcd(&terms[2]) == BigUint::from(2u32) {
        Key2Case::Half
    } else {
        Key2Case::Full
    };
    let factor = match case {
        Key2Case::Full => 1u32,
        Key2Case::Half => 2u32,
    };
    if &value * factor != product {
        return Err(BoundError::Key2Mismatch { a, b, lcm: value });
    }
    Ok(Key2Result { value, case })
}

/// `lcm(1, ..., n) >= 2^n`, claimed for `n >= 7`.
pub fn nair_check(n: u64) -> Result<BoundReport, BoundError> {
    if n == 0 {
        return Err(BoundError::ZeroN);
    }
    Ok(nair_from_lcm(n, lcm_upto(n)))
}

pub(crate) fn nair_from_lcm(n: u64, lcm: BigUint) -> BoundReport {
    BoundReport::new(
        BoundKind::Nair,
        lcm.clone(),
        format!("lcm(1..{n}) >= 2^{n}"),
        Comparison::new(lcm, Relation::Ge, pow2::<BigInt>(n)),
        n >= 7,
    )
}

/// `lcm(1, ..., n) < 3^n`.
pub fn hanson_check(n: u64) -> Result<BoundReport, BoundError> {
    if n == 0 {
        return Err(BoundError::ZeroN);
    }
    Ok(hanson_from_lcm(n, lcm_upto(n)))
}

pub(crate) fn hanson_from_lcm(n: u64, lcm: BigUint) -> BoundReport {
    BoundReport::new(
        BoundKind::Hanson,
        lcm.clone(),
        format!("lcm(1..{n}) < 3^{n}"),
        Comparison::new(lcm, Relation::Lt, num_traits::pow(BigInt::from(3), n as usize)),
        true,
    )
}

/// `L_n = lcm_{⌈n/2⌉ <= i <= n} i >= 2^(n-1)`.
pub fn half_range_ln_check(n: u64) -> Result<BoundReport, BoundError> {
    if n == 0 {
        return Err(BoundError::ZeroN);
    }
    let (m, n) = half_range(n);
    let ln = range_lcm(&IntPoly::x(), m, n)?;
    Ok(BoundReport::new(
        BoundKind::HalfRangeLn,
        to_natural(ln.clone()),
        format!("lcm({m}..{n}) >= 2^{}", n - 1),
        Comparison::new(ln, Relation::Ge, pow2::<BigInt>(n - 1)),
        true,
    ))
}

/// Whether `lhs` is zero; a vanishing lcm only arises outside the
/// nonnegative-coefficient family.
pub fn is_degenerate(report: &BoundReport) -> bool {
    report.lhs.is_zero()
}
