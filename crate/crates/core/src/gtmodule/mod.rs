//! The module `M_{mu1,mu2}` with basis `u_{k,l,m}` (k, l in Z, m >= 0), the
//! Gelfand-Tsetlin basis `w_{k,l,m}`, and the shared element type also used
//! for the dual basis `eta_{k,l,m}`.

mod action;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Rational, Scalar};

pub use action::{
    act, act_cartan, act_lie, act_u, act_w, act_word, basis_action, casimir_apply, gt_eigenvalue,
    u_to_w, w_to_u, weight_of,
};
pub use oracle::{act_vectorfield_oracle, SectionElement};

/// The monodromy parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub mu1: Scalar,
    pub mu2: Scalar,
}

fn integral(s: &Scalar) -> bool {
    s.as_rational().is_some_and(crate::exactalg::is_integral)
}

impl Params {
    pub fn new(mu1: Scalar, mu2: Scalar) -> Self {
        Self { mu1, mu2 }
    }

    pub fn rational(mu1: Rational, mu2: Rational) -> Self {
        Self::new(mu1.into(), mu2.into())
    }

    /// `Params::ratios((1, 3), (1, 5))` is `(mu1, mu2) = (1/3, 1/5)`.
    pub fn ratios(mu1: (i64, i64), mu2: (i64, i64)) -> Self {
        Self::new(Scalar::ratio(mu1.0, mu1.1), Scalar::ratio(mu2.0, mu2.1))
    }

    pub fn symbolic() -> Self {
        Self::new(Scalar::mu1(), Scalar::mu2())
    }

    /// Symbolic `mu1` with a fixed integral `mu2`, the setting of the
    /// l-bar subquotients.
    pub fn symbolic_mu1(mu2: i64) -> Self {
        Self::new(Scalar::mu1(), Scalar::int(mu2))
    }

    pub fn is_symbolic(&self) -> bool {
        self.mu1.is_symbolic() || self.mu2.is_symbolic()
    }

    pub fn mu1_integral(&self) -> bool {
        integral(&self.mu1)
    }

    pub fn mu2_integral(&self) -> bool {
        integral(&self.mu2)
    }

    pub fn sum_integral(&self) -> bool {
        integral(&(&self.mu1 + &self.mu2))
    }

    /// Integer value of `mu2` when it is specialized and integral.
    pub fn mu2_int(&self) -> Option<i64> {
        self.mu2.as_integer()
    }

    pub fn require_generic(&self) -> Result<()> {
        if self.sum_integral() {
            return Err(Error::NonGenericParameters(format!(
                "mu1 + mu2 = {} is an integer",
                &self.mu1 + &self.mu2
            )));
        }
        Ok(())
    }

    pub fn require_integral_mu2(&self) -> Result<i64> {
        self.mu2_int().ok_or(Error::RequiresIntegralMu2)
    }

    pub fn kbar(&self, k: i64) -> Scalar {
        &Scalar::int(k) - &self.mu1
    }

    pub fn lbar(&self, l: i64) -> Scalar {
        &Scalar::int(l) - &self.mu2
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(mu1, mu2) = ({}, {})", self.mu1, self.mu2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Index {
    pub k: i64,
    pub l: i64,
    pub m: i64,
}

impl Index {
    pub const fn new(k: i64, l: i64, m: i64) -> Self {
        Self { k, l, m }
    }

    pub const fn shift(self, dk: i64, dl: i64, dm: i64) -> Self {
        Self::new(self.k + dk, self.l + dl, self.m + dm)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.k, self.l, self.m)
    }
}

impl From<(i64, i64, i64)> for Index {
    fn from((k, l, m): (i64, i64, i64)) -> Self {
        Self::new(k, l, m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    U,
    W,
    Eta,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::U => "u",
            Basis::W => "w",
            Basis::Eta => "eta",
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(Basis::U),
            "w" => Ok(Basis::W),
            "eta" => Ok(Basis::Eta),
            _ => Err(Error::Invalid(format!("unknown basis {s:?}"))),
        }
    }
}

/// Finitely supported vector in one of the three bases. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    params: Params,
    basis: Basis,
    terms: BTreeMap<Index, Scalar>,
}

impl Element {
    pub fn zero(params: &Params, basis: Basis) -> Self {
        Self {
            params: params.clone(),
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_vector(params: &Params, basis: Basis, i: impl Into<Index>) -> Self {
        let mut e = Self::zero(params, basis);
        e.add_term(i.into(), &Scalar::one());
        e
    }

    pub fn from_terms(
        params: &Params,
        basis: Basis,
        terms: impl IntoIterator<Item = (Index, Scalar)>,
    ) -> Self {
        let mut e = Self::zero(params, basis);
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, i: Index, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(i.m >= 0, "negative m in {i}");
        let slot = self.terms.entry(i).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Index, &Scalar)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, i: Index) -> Scalar {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = Index> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn compatible(&self, other: &Element) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis,
                found: other.basis,
            });
        }
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        Ok(())
    }

    pub fn plus(&self, other: &Element) -> Result<Element> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn minus(&self, other: &Element) -> Result<Element> {
        self.plus(&other.scaled(&Scalar::int(-1)))
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut out = Element::zero(&self.params, self.basis);
        for (i, v) in self.terms() {
            out.add_term(i, &(v * c));
        }
        out
    }

    /// Keeps only the terms whose index satisfies `keep`.
    pub fn restricted(&self, keep: impl Fn(Index) -> bool) -> Element {
        Element {
            params: self.params.clone(),
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| keep(**i))
                .map(|(i, c)| (*i, c.clone()))
                .collect(),
        }
    }

    pub fn require_basis(&self, b: Basis) -> Result<()> {
        if self.basis != b {
            return Err(Error::BasisMismatch {
                expected: b,
                found: self.basis,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{}{i}", self.basis.name())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_predicates() {
        let p = Params::ratios((1, 3), (2, 3));
        assert!(p.sum_integral());
        assert!(p.require_generic().is_err());
        assert!(!p.mu1_integral());
        let q = Params::ratios((1, 3), (0, 1));
        assert!(q.mu2_integral());
        assert_eq!(q.mu2_int(), Some(0));
        let s = Params::symbolic();
        assert!(!s.sum_integral() && !s.mu1_integral() && s.is_symbolic());
        assert!(Params::symbolic_mu1(0).mu2_integral());
    }

    #[test]
    fn element_arithmetic_drops_zeros() {
        let p = Params::ratios((1, 3), (1, 5));
        let a = Element::basis_vector(&p, Basis::W, (0, 0, 0));
        let b = a.scaled(&Scalar::int(2));
        assert_eq!(a.plus(&b).unwrap().coeff(Index::new(0, 0, 0)), Scalar::int(3));
        assert!(a.minus(&a).unwrap().is_zero());
        let u = Element::basis_vector(&p, Basis::U, (0, 0, 0));
        assert!(matches!(a.plus(&u), Err(Error::BasisMismatch { .. })));
    }
}
