use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Exponent pair `(a, b)` of the monomial `mu1^a * mu2^b`.
pub type Monomial = (u32, u32);

/// Sparse polynomial in the two parameters `mu1`, `mu2` with rational
/// coefficients. Zero coefficients are never stored.
///
/// Monomials are ordered lexicographically on `(a, b)`; the leading term is
/// the largest key.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: Rational, exp: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn mu1() -> Self {
        Self::monomial(Rational::one(), (1, 0))
    }

    pub fn mu2() -> Self {
        Self::monomial(Rational::one(), (0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exp: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    fn mul_term(&self, exp: Monomial, c: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), v)| ((a + exp.0, b + exp.1), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Largest monomial dividing every term, i.e. `(min a, min b)`.
    pub fn monomial_content(&self) -> Monomial {
        let a = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        (a, b)
    }

    /// Divides every term by `mu1^a mu2^b`. The monomial must divide.
    pub fn shift_down(&self, exp: Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), v)| ((a - exp.0, b - exp.1), v.clone()))
                .collect(),
        }
    }

    /// Splits off the leading coefficient: `self = lc * monic`.
    pub fn monic(&self) -> (Rational, Self) {
        match self.leading() {
            None => (Rational::zero(), Self::zero()),
            Some((_, lc)) => {
                let lc = lc.clone();
                let inv = lc.recip();
                (lc, self.scale(&inv))
            }
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        let (ld, lc) = divisor.leading().expect("division by the zero polynomial");
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((lr, cr)) = rem.leading() {
            if lr.0 < ld.0 || lr.1 < ld.1 {
                return None;
            }
            let exp = (lr.0 - ld.0, lr.1 - ld.1);
            let c = cr * &lc_inv;
            rem = &rem - &divisor.mul_term(exp, &c);
            quot.add_term(exp, c);
        }
        Some(quot)
    }

    pub fn eval(&self, mu1: &Rational, mu2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.terms {
            acc += c * pow_rat(mu1, *a) * pow_rat(mu2, *b);
        }
        acc
    }

    /// Substitutes a rational value for `mu2` only.
    pub fn eval_mu2(&self, mu2: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a, b), c) in &self.terms {
            out.add_term((*a, 0), c * pow_rat(mu2, *b));
        }
        out
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

fn pow_rat(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (*a == 0 && *b == 0) {
                parts.push(super::format_rational(&abs));
            }
            for (name, e) in [("mu1", *a), ("mu2", *b)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
