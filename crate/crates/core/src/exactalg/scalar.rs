use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::poly::BiPoly;
use super::ratfunc::RatFunc;
use super::{format_rational, AlgError, Rational};

/// Coefficient field element: an exact rational (parameters specialized) or
/// a rational function in the symbols `mu1`, `mu2`.
///
/// Mixed operations promote the rational operand; symbolic results that turn
/// out constant are demoted back, so zero and equality tests on constants
/// stay cheap.
#[derive(Clone, Debug)]
pub enum Scalar {
    Specialized(Rational),
    Symbolic(RatFunc),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Specialized(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Specialized(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Specialized(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Specialized(Rational::new(n.into(), d.into()))
    }

    pub fn mu1() -> Self {
        Scalar::Symbolic(RatFunc::from_poly(BiPoly::mu1()))
    }

    pub fn mu2() -> Self {
        Scalar::Symbolic(RatFunc::from_poly(BiPoly::mu2()))
    }

    fn demote(f: RatFunc) -> Self {
        match f.as_constant() {
            Some(c) => Scalar::Specialized(c),
            None => Scalar::Symbolic(f),
        }
    }

    fn lift(&self) -> RatFunc {
        match self {
            Scalar::Specialized(r) => RatFunc::constant(r.clone()),
            Scalar::Symbolic(f) => f.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Specialized(r) => r.is_zero(),
            Scalar::Symbolic(f) => f.is_zero(),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Symbolic(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Specialized(r) => Some(r),
            Scalar::Symbolic(_) => None,
        }
    }

    /// `Some(n)` when the value is a (specialized) integer.
    pub fn as_integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        match self {
            Scalar::Specialized(r) if r.is_integer() => r.to_integer().to_i64(),
            _ => None,
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, AlgError> {
        match (self, rhs) {
            (_, r) if r.is_zero() => Err(AlgError::DivisionByZero),
            (Scalar::Specialized(a), Scalar::Specialized(b)) => Ok(Scalar::Specialized(a / b)),
            _ => Ok(Scalar::demote(self.lift().div(&rhs.lift())?)),
        }
    }

    pub fn recip(&self) -> Result<Scalar, AlgError> {
        Scalar::one().checked_div(self)
    }

    /// Evaluates at `(mu1, mu2) = (p, q)`; `None` if a denominator vanishes.
    pub fn eval(&self, p: &Rational, q: &Rational) -> Option<Rational> {
        match self {
            Scalar::Specialized(r) => Some(r.clone()),
            Scalar::Symbolic(f) => f.eval(p, q),
        }
    }

    /// Substitutes a rational value for `mu2`, leaving `mu1` symbolic.
    pub fn eval_mu2(&self, q: &Rational) -> Result<Scalar, AlgError> {
        match self {
            Scalar::Specialized(_) => Ok(self.clone()),
            Scalar::Symbolic(f) => Ok(Scalar::demote(f.eval_mu2(q)?)),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        (0..n).fold(Scalar::one(), |acc, _| &acc * self)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Specialized(a), Scalar::Specialized(b)) => a == b,
            _ => (self - other).is_zero(),
        }
    }
}

impl Eq for Scalar {}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Specialized(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Specialized(a), Scalar::Specialized(b)) => Scalar::Specialized(a + b),
            _ => Scalar::demote(self.lift().add(&rhs.lift())),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Specialized(a), Scalar::Specialized(b)) => Scalar::Specialized(a - b),
            _ => Scalar::demote(self.lift().sub(&rhs.lift())),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Specialized(a), Scalar::Specialized(b)) => Scalar::Specialized(a * b),
            _ => Scalar::demote(self.lift().mul(&rhs.lift())),
        }
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] where the divisor
/// is not known to be nonzero.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs)
            .unwrap_or_else(|e| panic!("{e}: {self} / {rhs}"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Specialized(a) => Scalar::Specialized(-a),
            Scalar::Symbolic(f) => Scalar::Symbolic(f.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { (&self).$method(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar { (&self).$method(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Specialized(r) => write!(f, "{}", format_rational(r)),
            Scalar::Symbolic(g) => write!(f, "{g}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = AlgError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_scalar(s)
    }
}
