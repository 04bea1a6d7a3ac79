use crate::error::{Error, Result};
use crate::exactalg::{binomial, raising_factorial, Scalar};
use crate::sl3::{casimir_word, Generator, GeneratorWord, LieElement, Weight};

use super::{Basis, Element, Index, Params};

type Terms = Vec<(Index, Scalar)>;

fn push(out: &mut Terms, i: Index, c: Scalar) {
    if i.m >= 0 && !c.is_zero() {
        out.push((i, c));
    }
}

/// Weight `-(kbar + m) alpha1 - (lbar + m) alpha2` of `u_{k,l,m}`, shared by
/// `w_{k,l,m}` and `eta_{k,l,m}`.
pub fn weight_of(p: &Params, i: Index) -> Weight {
    let m = Scalar::int(i.m);
    let a = -(&p.kbar(i.k) + &m);
    let b = -(&p.lbar(i.l) + &m);
    Weight::from_roots(&a, &b)
}

fn u_action(p: &Params, g: Generator, i: Index) -> Terms {
    let (kb, lb, m) = (p.kbar(i.k), p.lbar(i.l), Scalar::int(i.m));
    let mut out = Terms::new();
    match g {
        Generator::E1 => push(&mut out, i.shift(-1, 0, 0), -&kb),
        Generator::E2 => {
            push(&mut out, i.shift(0, -1, 0), -&lb);
            push(&mut out, i.shift(1, 0, -1), m);
        }
        Generator::H1 | Generator::H2 => {
            let w = weight_of(p, i);
            push(&mut out, i, if g == Generator::H1 { w.h1 } else { w.h2 });
        }
        Generator::F1 => {
            push(&mut out, i.shift(1, 0, 0), &(&kb - &lb) + &m);
            push(&mut out, i.shift(0, -1, 1), -&lb);
        }
        Generator::F2 => {
            push(&mut out, i.shift(0, 1, 0), lb);
            push(&mut out, i.shift(-1, 0, 1), kb);
        }
        Generator::E12 => push(&mut out, i.shift(0, 0, -1), -&m),
        Generator::F12 => {
            push(&mut out, i.shift(0, 0, 1), &(&kb + &lb) + &m);
            push(&mut out, i.shift(1, 1, 0), lb);
        }
    }
    out
}

fn w_action(p: &Params, g: Generator, i: Index) -> Terms {
    let (kb, lb, m) = (p.kbar(i.k), p.lbar(i.l), Scalar::int(i.m));
    let one = Scalar::one();
    let s = &kb + &lb;
    let d = &s * &(&s - &one);
    let kk = &kb * &(&kb - &one);
    let ll = &lb * &(&lb - &one);
    let mut out = Terms::new();
    match g {
        Generator::E1 => {
            push(&mut out, i.shift(-1, 0, 0), -&kb);
            if i.m > 0 {
                push(&mut out, i.shift(0, 1, -1), -(&(&m * &ll) / &d));
            }
        }
        Generator::E2 => {
            push(&mut out, i.shift(0, -1, 0), -&lb);
            if i.m > 0 {
                push(&mut out, i.shift(1, 0, -1), &(&m * &kk) / &d);
            }
        }
        Generator::H1 | Generator::H2 => return u_action(p, g, i),
        Generator::F1 => {
            push(&mut out, i.shift(1, 0, 0), &(&kk * &(&s + &m)) / &d);
            push(&mut out, i.shift(0, -1, 1), -&lb);
        }
        Generator::F2 => {
            push(&mut out, i.shift(0, 1, 0), &(&ll * &(&s + &m)) / &d);
            push(&mut out, i.shift(-1, 0, 1), kb);
        }
        Generator::E12 => push(&mut out, i.shift(0, 0, -1), -&m),
        Generator::F12 => push(&mut out, i.shift(0, 0, 1), &s + &m),
    }
    out
}

/// Image of one basis vector under one generator, as a list of terms.
/// Callers are responsible for the genericity requirement of `W` and `Eta`.
pub fn basis_action(p: &Params, basis: Basis, g: Generator, i: Index) -> Vec<(Index, Scalar)> {
    match basis {
        Basis::U => u_action(p, g, i),
        Basis::W => w_action(p, g, i),
        Basis::Eta => crate::dual::eta_action(p, g, i),
    }
}

fn check_basis_params(v: &Element) -> Result<()> {
    if v.basis() != Basis::U {
        v.params().require_generic()?;
    }
    Ok(())
}

/// Action of a generator in whatever basis `v` is written in.
pub fn act(g: Generator, v: &Element) -> Result<Element> {
    check_basis_params(v)?;
    let mut out = Element::zero(v.params(), v.basis());
    for (i, c) in v.terms() {
        for (j, d) in basis_action(v.params(), v.basis(), g, i) {
            out.add_term(j, &(c * &d));
        }
    }
    Ok(out)
}

pub fn act_u(g: Generator, v: &Element) -> Result<Element> {
    v.require_basis(Basis::U)?;
    act(g, v)
}

pub fn act_w(g: Generator, v: &Element) -> Result<Element> {
    v.require_basis(Basis::W)?;
    act(g, v)
}

/// Action of an arbitrary Cartan element through the weight formula.
pub fn act_cartan(h: &LieElement, v: &Element) -> Result<Element> {
    if !h.is_cartan() {
        return Err(Error::NonCartan);
    }
    check_basis_params(v)?;
    let mut out = Element::zero(v.params(), v.basis());
    for (i, c) in v.terms() {
        let ev = weight_of(v.params(), i).pair(h).ok_or(Error::NonCartan)?;
        out.add_term(i, &(c * &ev));
    }
    Ok(out)
}

/// Action of an arbitrary Lie algebra element, by linearity.
pub fn act_lie(x: &LieElement, v: &Element) -> Result<Element> {
    let mut out = Element::zero(v.params(), v.basis());
    for (g, c) in x.terms() {
        out = out.plus(&act(g, v)?.scaled(c))?;
    }
    Ok(out)
}

/// Applies the word right to left; the empty word is the identity.
pub fn act_word(word: &GeneratorWord, v: &Element) -> Result<Element> {
    check_basis_params(v)?;
    let mut cur = v.clone();
    for g in word.0.iter().rev() {
        cur = act(*g, &cur)?;
    }
    Ok(cur)
}

pub fn casimir_apply(v: &Element) -> Result<Element> {
    let mut out = Element::zero(v.params(), v.basis());
    for (c, w) in casimir_word() {
        out = out.plus(&act_word(&w, v)?.scaled(&c))?;
    }
    Ok(out)
}

/// Eigenvalues of `(h1, h2, f12 e12)` on `w_{k,l,m}`.
pub fn gt_eigenvalue(i: Index, p: &Params) -> (Scalar, Scalar, Scalar) {
    let (kb, lb, m) = (p.kbar(i.k), p.lbar(i.l), Scalar::int(i.m));
    let two = Scalar::int(2);
    let h1 = &(&lb - &(&two * &kb)) - &m;
    let h2 = &(&kb - &(&two * &lb)) - &m;
    let c = -(&m * &(&(&(&kb + &lb) + &m) - &Scalar::one()));
    (h1, h2, c)
}

/// `w_{k,l,m} = sum_n C(m,n) lbar^(n) / (kbar+lbar)^(n) u_{k+n,l+n,m-n}`.
pub fn w_to_u(v: &Element) -> Result<Element> {
    v.require_basis(Basis::W)?;
    v.params().require_generic()?;
    let p = v.params();
    let mut out = Element::zero(p, Basis::U);
    for (i, c) in v.terms() {
        let (lb, s) = (p.lbar(i.l), &p.kbar(i.k) + &p.lbar(i.l));
        for n in 0..=i.m as u32 {
            let coef = &(&Scalar::from(binomial(i.m as u32, n)) * &raising_factorial(&lb, n))
                / &raising_factorial(&s, n);
            let ni = n as i64;
            out.add_term(i.shift(ni, ni, -ni), &(c * &coef));
        }
    }
    Ok(out)
}

/// `u_{k,l,m} = sum_n (-1)^n C(m,n) lbar^(n) / (kbar+lbar+n-1)^(n) w_{k+n,l+n,m-n}`.
pub fn u_to_w(v: &Element) -> Result<Element> {
    v.require_basis(Basis::U)?;
    v.params().require_generic()?;
    let p = v.params();
    let mut out = Element::zero(p, Basis::W);
    for (i, c) in v.terms() {
        let (lb, s) = (p.lbar(i.l), &p.kbar(i.k) + &p.lbar(i.l));
        for n in 0..=i.m as u32 {
            let ni = n as i64;
            let sign = Scalar::int(if n % 2 == 0 { 1 } else { -1 });
            let base = &s + &Scalar::int(ni - 1);
            let coef = &(&(&sign * &Scalar::from(binomial(i.m as u32, n))) * &raising_factorial(&lb, n))
                / &raising_factorial(&base, n);
            out.add_term(i.shift(ni, ni, -ni), &(c * &coef));
        }
    }
    Ok(out)
}
