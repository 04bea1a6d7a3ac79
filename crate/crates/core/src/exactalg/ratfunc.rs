use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::BiPoly;
use super::{AlgError, Rational};

/// Element of `Q(mu1, mu2)`.
///
/// The denominator is kept as a product of monic factors with multiplicities.
/// Factors are not guaranteed irreducible: a factor is whatever polynomial
/// remained after splitting off monomials and already-known factors. Known
/// factors are cancelled against the numerator by exact division after every
/// operation, so the fraction is usually, but not provably, in lowest terms.
/// Equality never depends on that: it is decided by the zero test of the
/// numerator of the difference.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: BiPoly,
    den: BTreeMap<BiPoly, u32>,
}

impl RatFunc {
    pub fn from_poly(p: BiPoly) -> Self {
        Self {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&BiPoly, u32)> {
        self.den.iter().map(|(f, e)| (f, *e))
    }

    /// Expanded denominator polynomial.
    pub fn denominator(&self) -> BiPoly {
        self.den
            .iter()
            .fold(BiPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        if self.den.is_empty() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn cancel(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let factors: Vec<BiPoly> = self.den.keys().cloned().collect();
        for f in factors {
            let mut e = self.den[&f];
            while e > 0 {
                match self.num.div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, e);
            }
        }
        self
    }

    /// Splits `p` into `(constant, monic factors)`, reusing `known` factors.
    fn split(p: &BiPoly, known: &[&BiPoly]) -> (Rational, Vec<BiPoly>) {
        let mut out = Vec::new();
        let (a, b) = p.monomial_content();
        let mut rest = p.shift_down((a, b));
        out.extend(std::iter::repeat(BiPoly::mu1()).take(a as usize));
        out.extend(std::iter::repeat(BiPoly::mu2()).take(b as usize));
        let (lc, monic) = rest.monic();
        rest = monic;
        for f in known {
            if f.degree().unwrap_or(0) == 0 || f.len() == 1 {
                continue;
            }
            while rest.degree().unwrap_or(0) > 0 {
                match rest.div_exact(f) {
                    Some(q) => {
                        out.push((*f).clone());
                        rest = q;
                    }
                    None => break,
                }
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push(rest);
        }
        (lc, out)
    }

    fn den_excess(den: &BTreeMap<BiPoly, u32>, lcm: &BTreeMap<BiPoly, u32>) -> BiPoly {
        lcm.iter().fold(BiPoly::one(), |acc, (f, e)| {
            let have = den.get(f).copied().unwrap_or(0);
            &acc * &f.pow(e - have)
        })
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        let mut lcm = self.den.clone();
        for (f, e) in &rhs.den {
            let slot = lcm.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let left = &self.num * &Self::den_excess(&self.den, &lcm);
        let right = &rhs.num * &Self::den_excess(&rhs.den, &lcm);
        RatFunc {
            num: &left + &right,
            den: lcm,
        }
        .cancel()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::from_poly(BiPoly::zero());
        }
        let mut den = self.den.clone();
        for (f, e) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += e;
        }
        RatFunc {
            num: &self.num * &rhs.num,
            den,
        }
        .cancel()
    }

    pub fn inv(&self) -> Result<RatFunc, AlgError> {
        if self.num.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let known: Vec<&BiPoly> = self.den.keys().collect();
        let (lc, factors) = Self::split(&self.num, &known);
        let mut den = BTreeMap::new();
        for f in factors {
            *den.entry(f).or_insert(0) += 1;
        }
        let num = self.denominator().scale(&lc.recip());
        Ok(RatFunc { num, den }.cancel())
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgError> {
        if rhs.num.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if self.num.is_zero() {
            return Ok(self.clone());
        }
        // Split the divisor's numerator against both operands' factors so
        // shared linear factors line up.
        let known: Vec<&BiPoly> = self.den.keys().chain(rhs.den.keys()).collect();
        let (lc, factors) = Self::split(&rhs.num, &known);
        let mut den = self.den.clone();
        for f in factors {
            *den.entry(f).or_insert(0) += 1;
        }
        let num = (&self.num * &rhs.denominator()).scale(&lc.recip());
        Ok(RatFunc { num, den }.cancel())
    }

    /// Evaluates at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, mu1: &Rational, mu2: &Rational) -> Option<Rational> {
        let d = self.denominator().eval(mu1, mu2);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(mu1, mu2) / d)
    }

    /// Substitutes a rational value for `mu2`.
    pub fn eval_mu2(&self, mu2: &Rational) -> Result<RatFunc, AlgError> {
        let num = RatFunc::from_poly(self.num.eval_mu2(mu2));
        let den = RatFunc::from_poly(self.denominator().eval_mu2(mu2));
        num.div(&den)
    }

    /// Display form with integer coefficients: content pulled out so the
    /// printed numerator and denominator have no common rational factor.
    pub fn normalized(&self) -> (BiPoly, BiPoly) {
        let den = self.denominator();
        let (lc, den_monic) = den.monic();
        let num = self.num.scale(&lc.recip());
        let l1 = num.denominator_lcm();
        let l2 = den_monic.denominator_lcm();
        let scale = Rational::from_integer(num_integer::Integer::lcm(&l1, &l2));
        (num.scale(&scale), den_monic.scale(&scale))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = self.normalized();
        if den.as_constant().is_some_and(|c| c.is_one()) {
            return write!(f, "{num}");
        }
        write!(f, "({num})/({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c1: i64, c2: i64, c0: i64) -> RatFunc {
        let p = &(&BiPoly::mu1().scale(&Rational::from_integer(c1.into()))
            + &BiPoly::mu2().scale(&Rational::from_integer(c2.into())))
            + &BiPoly::constant(Rational::from_integer(c0.into()));
        RatFunc::from_poly(p)
    }

    #[test]
    fn cancellation_after_division() {
        let a = lin(1, 1, -1);
        let b = lin(1, 0, 2);
        let q = a.mul(&b).div(&b).unwrap();
        assert!(q.sub(&a).is_zero());
        assert_eq!(q.denominator_factors().count(), 0);
    }

    #[test]
    fn common_denominators_merge() {
        let d = lin(1, 1, 0);
        let x = lin(0, 0, 1).div(&d).unwrap();
        let y = lin(0, 0, 2).div(&d).unwrap();
        let s = x.add(&y);
        assert_eq!(s.denominator_factors().collect::<Vec<_>>().len(), 1);
        assert!(s.sub(&lin(0, 0, 3).div(&d).unwrap()).is_zero());
    }

    #[test]
    fn zero_division_is_an_error() {
        let z = RatFunc::from_poly(BiPoly::zero());
        assert!(lin(1, 0, 0).div(&z).is_err());
        assert!(z.inv().is_err());
    }
}
