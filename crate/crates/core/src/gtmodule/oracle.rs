//! Independent model of `M_{mu1,mu2}` as twisted sections
//! `x^k 1_mu1 (x) y^l 1_mu2 (x) z^m` on the big cell, with sl3 acting by
//! first-order differential operators.

use std::collections::BTreeMap;

use crate::exactalg::Scalar;
use crate::sl3::{cartan_pairing, Generator};

use super::{Basis, Element, Index, Params};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionElement {
    pub params: Params,
    pub terms: BTreeMap<Index, Scalar>,
}

impl SectionElement {
    pub fn monomial(params: &Params, i: impl Into<Index>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(i.into(), Scalar::one());
        Self {
            params: params.clone(),
            terms,
        }
    }

    fn add(&mut self, i: Index, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(i).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&i);
        }
    }

    /// The u-basis element with the same data.
    pub fn to_u(&self) -> Element {
        Element::from_terms(&self.params, Basis::U, self.terms.clone())
    }

    pub fn from_u(v: &Element) -> Self {
        Self {
            params: v.params().clone(),
            terms: v.terms().map(|(i, c)| (i, c.clone())).collect(),
        }
    }
}

#[derive(Clone, Copy)]
enum Var {
    X,
    Y,
    Z,
}

/// `c * x^a y^b z^c * d/d(var)`.
struct VfTerm {
    coeff: Scalar,
    mult: (i64, i64, i64),
    var: Var,
}

fn t(c: i64, mult: (i64, i64, i64), var: Var) -> VfTerm {
    VfTerm {
        coeff: Scalar::int(c),
        mult,
        var,
    }
}

fn vector_field(g: Generator) -> Vec<VfTerm> {
    use Var::*;
    match g {
        Generator::E1 => vec![t(-1, (0, 0, 0), X)],
        Generator::E2 => vec![t(-1, (0, 0, 0), Y), t(1, (1, 0, 0), Z)],
        Generator::F1 => vec![
            t(1, (2, 0, 0), X),
            t(-1, (0, 0, 1), Y),
            t(-1, (1, 1, 0), Y),
            t(1, (1, 0, 1), Z),
        ],
        Generator::F2 => vec![t(1, (0, 2, 0), Y), t(1, (0, 0, 1), X)],
        Generator::E12 => vec![t(-1, (0, 0, 0), Z)],
        Generator::F12 => vec![
            t(1, (1, 0, 1), X),
            t(1, (0, 1, 1), Y),
            t(1, (1, 2, 0), Y),
            t(1, (0, 0, 2), Z),
        ],
        Generator::H1 | Generator::H2 => {
            let j = if g == Generator::H1 { 1 } else { 2 };
            let a1 = Scalar::from(cartan_pairing(1, j));
            let a2 = Scalar::from(cartan_pairing(2, j));
            let a12 = &a1 + &a2;
            let neg = |s: Scalar| -s;
            vec![
                VfTerm { coeff: neg(a1), mult: (1, 0, 0), var: X },
                VfTerm { coeff: neg(a2), mult: (0, 1, 0), var: Y },
                VfTerm { coeff: neg(a12), mult: (0, 0, 1), var: Z },
            ]
        }
    }
}

/// Twisted partial derivative of a single monomial.
fn derivative(p: &Params, var: Var, i: Index) -> Option<(Index, Scalar)> {
    let (j, c) = match var {
        Var::X => (i.shift(-1, 0, 0), p.kbar(i.k)),
        Var::Y => (i.shift(0, -1, 0), p.lbar(i.l)),
        Var::Z => (i.shift(0, 0, -1), Scalar::int(i.m)),
    };
    (!c.is_zero()).then_some((j, c))
}

/// Applies the differential operator attached to `g` term by term.
pub fn act_vectorfield_oracle(g: Generator, s: &SectionElement) -> SectionElement {
    let ops = vector_field(g);
    let mut out = SectionElement {
        params: s.params.clone(),
        terms: BTreeMap::new(),
    };
    for (i, c) in &s.terms {
        for op in &ops {
            if let Some((j, d)) = derivative(&s.params, op.var, *i) {
                let target = j.shift(op.mult.0, op.mult.1, op.mult.2);
                out.add(target, &(c * &d) * &op.coeff);
            }
        }
    }
    out
}
