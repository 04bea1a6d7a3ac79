//! The dual module `M^vee` in the basis `eta_{k,l,m}` dual to `w_{k,l,m}`,
//! with `(X d)(v) = -d(tau(X) v)`.

use crate::error::Result;
use crate::exactalg::Scalar;
use crate::gtmodule::{act, Basis, Element, Index, Params};
use crate::sl3::Generator;

fn push(out: &mut Vec<(Index, Scalar)>, i: Index, c: Scalar) {
    if i.m >= 0 && !c.is_zero() {
        out.push((i, c));
    }
}

pub(crate) fn eta_action(p: &Params, g: Generator, i: Index) -> Vec<(Index, Scalar)> {
    let (kb, lb, m) = (p.kbar(i.k), p.lbar(i.l), Scalar::int(i.m));
    let one = Scalar::one();
    let two = Scalar::int(2);
    let s = &kb + &lb;
    let d = &(&s - &one) * &(&s - &two);
    let kk = &(&kb - &one) * &(&kb - &two);
    let ll = &(&lb - &one) * &(&lb - &two);
    let m1 = &m + &one;
    let mut out = Vec::new();
    match g {
        Generator::E1 => {
            push(&mut out, i.shift(-1, 0, 0), -(&(&kk * &(&(&s + &m) - &one)) / &d));
            if i.m > 0 {
                push(&mut out, i.shift(0, 1, -1), &lb + &one);
            }
        }
        Generator::E2 => {
            push(&mut out, i.shift(0, -1, 0), -(&(&ll * &(&(&s + &m) - &one)) / &d));
            if i.m > 0 {
                push(&mut out, i.shift(1, 0, -1), -(&kb + &one));
            }
        }
        Generator::F1 => {
            push(&mut out, i.shift(1, 0, 0), &kb + &one);
            push(&mut out, i.shift(0, -1, 1), &(&m1 * &ll) / &d);
        }
        Generator::F2 => {
            push(&mut out, i.shift(0, 1, 0), &lb + &one);
            push(&mut out, i.shift(-1, 0, 1), -(&(&m1 * &kk) / &d));
        }
        Generator::E12 => {
            if i.m > 0 {
                push(&mut out, i.shift(0, 0, -1), &(&s + &m) - &one);
            }
        }
        Generator::F12 => push(&mut out, i.shift(0, 0, 1), -m1),
        Generator::H1 | Generator::H2 => {
            return crate::gtmodule::basis_action(p, Basis::U, g, i);
        }
    }
    out
}

pub fn act_eta(g: Generator, v: &Element) -> Result<Element> {
    v.require_basis(Basis::Eta)?;
    act(g, v)
}

/// `<d, v>` for `d` in the eta-basis and `v` in the w-basis.
pub fn pairing(d: &Element, v: &Element) -> Result<Scalar> {
    d.require_basis(Basis::Eta)?;
    v.require_basis(Basis::W)?;
    if d.params() != v.params() {
        return Err(crate::Error::ParamsMismatch);
    }
    let mut acc = Scalar::zero();
    for (i, c) in d.terms() {
        let w = v.coeff(i);
        if !w.is_zero() {
            acc += &(c * &w);
        }
    }
    Ok(acc)
}
