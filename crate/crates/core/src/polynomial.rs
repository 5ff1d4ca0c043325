//! Dense univariate polynomials with exact integer coefficients.
//!
//! Coefficients are stored constant term first, so `coeffs()[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector and has no
//! degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::{binomial, factorial, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("skip index {skip} lies outside [{m}, {n}]")]
    SkipOutOfRange { m: u64, n: u64, skip: u64 },
    #[error("invalid range: need 1 <= m <= n, got m = {m}, n = {n}")]
    InvalidRange { m: u64, n: u64 },
    #[error("cannot parse coefficient `{token}`")]
    BadCoefficient { token: String },
    #[error("empty coefficient list")]
    EmptyCoefficientList,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from coefficients, constant term first. Trailing
    /// zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Self::from_coeffs(vec![-root, T::one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Parses a comma-separated coefficient list, constant term first
    /// (`"1,0,1"` is `x^2 + 1`).
    pub fn parse_coeff_list(s: &str) -> Result<Self, PolyError> {
        if s.trim().is_empty() {
            return Err(PolyError::EmptyCoefficientList);
        }
        let coeffs = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                T::from_str_radix(tok, 10).map_err(|_| PolyError::BadCoefficient {
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// Comma-separated coefficients, constant term first. The zero
    /// polynomial prints as `0`.
    pub fn to_coeff_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

/// `∏ (x - j)` over `j ∈ [m, n] \ {skip}`. The empty product is `1`.
pub fn linear_product<T: Scalar>(m: u64, n: u64, skip: u64) -> Result<Poly<T>, PolyError> {
    if m > n {
        return Err(PolyError::InvalidRange { m, n });
    }
    if skip < m || skip > n {
        return Err(PolyError::SkipOutOfRange { m, n, skip });
    }
    Ok((m..=n)
        .filter(|&j| j != skip)
        .fold(Poly::one(), |acc, j| &acc * &Poly::linear(T::from_index(j))))
}

/// Outcome of checking the finite-difference identity
///
/// ```text
///   Σ_{k=m}^{n} (-1)^(n-k) C(n-m, k-m) ∏_{j∈[m,n], j≠k} (x - j)  =  (n-m)!
/// ```
///
/// `symbolic` compares the expanded left-hand side against the constant
/// polynomial. `pointwise` evaluates the unexpanded sum at `n - m + 2`
/// integer points beyond `n`; the left side has degree at most `n - m`, so
/// agreement there is an independent proof of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck<T> {
    pub m: u64,
    pub n: u64,
    pub lhs: Poly<T>,
    pub expected: T,
    pub symbolic: bool,
    pub pointwise: bool,
}

impl<T> IdentityCheck<T> {
    pub fn holds(&self) -> bool {
        self.symbolic && self.pointwise
    }
}

fn identity_sign<T: Scalar>(n: u64, k: u64) -> T {
    if (n - k).is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Expands the identity's left-hand side for `1 <= m <= n`.
pub fn identity_lhs<T: Scalar>(m: u64, n: u64) -> Result<Poly<T>, PolyError> {
    if m == 0 || m > n {
        return Err(PolyError::InvalidRange { m, n });
    }
    let mut acc = Poly::zero();
    for k in m..=n {
        let c = identity_sign::<T>(n, k) * binomial::<T>(n - m, k - m);
        let term = linear_product::<T>(m, n, k)?.scale(&c);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Left-hand side evaluated at a point without expanding any product.
fn identity_lhs_at<T: Scalar>(m: u64, n: u64, x: &T) -> T {
    (m..=n).fold(T::zero(), |acc, k| {
        let prod = (m..=n)
            .filter(|&j| j != k)
            .fold(T::one(), |p, j| p * (x.clone() - T::from_index(j)));
        acc + identity_sign::<T>(n, k) * binomial::<T>(n - m, k - m) * prod
    })
}

pub fn verify_identity<T: Scalar>(m: u64, n: u64) -> Result<IdentityCheck<T>, PolyError> {
    let lhs = identity_lhs::<T>(m, n)?;
    let expected = factorial::<T>(n - m);
    let symbolic = lhs == Poly::constant(expected.clone());
    let pointwise = (n + 1..=n + (n - m) + 2)
        .all(|x| identity_lhs_at(m, n, &T::from_index(x)) == expected);
    Ok(IdentityCheck {
        m,
        n,
        lhs,
        expected,
        symbolic,
        pointwise,
    })
}
