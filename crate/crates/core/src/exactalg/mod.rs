//! Exact coefficient arithmetic.
//!
//! Rationals are `num_rational::BigRational`. Symbolic coefficients live in
//! `Q(mu1, mu2)`, see [`RatFunc`]. [`Scalar`] unifies both.

mod parse;
mod poly;
mod ratfunc;
mod scalar;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use parse::parse_scalar;
pub use poly::{BiPoly, Monomial};
pub use ratfunc::RatFunc;
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// `p/q`, with `q` omitted when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an exact rational such as `-1/5` or `3`.
pub fn parse_rational(s: &str) -> Result<Rational, AlgError> {
    match parse_scalar(s)? {
        Scalar::Specialized(r) => Ok(r),
        Scalar::Symbolic(_) => Err(AlgError::Parse(format!("{s:?} is not a rational number"))),
    }
}

/// Rising factorial `x (x+1) ... (x+n-1)`; 1 for `n = 0`.
pub fn raising_factorial(x: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..n {
        acc = &acc * &(x + &Scalar::int(j as i64));
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-n+1)`; 1 for `n = 0`.
pub fn falling_factorial(x: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..n {
        acc = &acc * &(x - &Scalar::int(j as i64));
    }
    acc
}

/// Binomial coefficient. Panics unless `n <= m`.
pub fn binomial(m: u32, n: u32) -> Rational {
    assert!(n <= m, "binomial({m}, {n}) out of range");
    let mut acc = BigInt::one();
    for j in 0..n {
        acc = acc * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    Rational::from_integer(acc)
}

pub(crate) fn is_integral(r: &Rational) -> bool {
    r.is_integer() || r.numer().is_zero()
}
