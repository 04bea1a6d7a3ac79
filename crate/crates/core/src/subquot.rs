//! Subquotients `M_J` and `M^vee_J` for index sets `J` cut out by integer
//! conditions on `lbar = l - mu2` (so `mu2` must be an integer).
//!
//! The action on `M_J` is the ambient action with every term outside `J`
//! dropped. This is a module structure exactly when `J` is a difference of two
//! closed sets, which [`classify`] decides within the interval family.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::gtmodule::{basis_action, weight_of, Basis, Element, Index, Params};
use crate::sl3::Generator;
use crate::window::Window;

/// Integer interval; `None` is unbounded on that side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(a), Some(b)) if a > b)
    }

    fn contains(&self, x: i64) -> bool {
        self.lo.is_none_or(|a| a <= x) && self.hi.is_none_or(|b| x <= b)
    }
}

/// Finite union of integer intervals in normal form: sorted, pairwise
/// disjoint, non-adjacent, no empty pieces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet(Vec<Interval>);

impl IntervalSet {
    pub fn new(pieces: impl IntoIterator<Item = Interval>) -> Self {
        let mut v: Vec<Interval> = pieces.into_iter().filter(|i| !i.is_empty()).collect();
        v.sort_by_key(|i| (i.lo.is_some(), i.lo));
        let mut out: Vec<Interval> = Vec::new();
        for iv in v {
            if let Some(last) = out.last_mut() {
                let touches = match (last.hi, iv.lo) {
                    (None, _) | (_, None) => true,
                    (Some(h), Some(l)) => l <= h.saturating_add(1),
                };
                if touches {
                    last.hi = match (last.hi, iv.hi) {
                        (None, _) | (_, None) => None,
                        (Some(a), Some(b)) => Some(a.max(b)),
                    };
                    continue;
                }
            }
            out.push(iv);
        }
        IntervalSet(out)
    }

    pub fn all() -> Self {
        Self::new([Interval { lo: None, hi: None }])
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn ge(c: i64) -> Self {
        Self::new([Interval { lo: Some(c), hi: None }])
    }

    pub fn le(c: i64) -> Self {
        Self::new([Interval { lo: None, hi: Some(c) }])
    }

    pub fn range(a: i64, b: i64) -> Self {
        Self::new([Interval { lo: Some(a), hi: Some(b) }])
    }

    pub fn pieces(&self) -> &[Interval] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.iter().any(|i| i.contains(x))
    }

    pub fn complement(&self) -> Self {
        let mut out = Vec::new();
        let mut cursor: Option<i64> = None; // lower bound of the next gap; None = -inf
        let mut open = true;
        for iv in &self.0 {
            if let Some(lo) = iv.lo {
                out.push(Interval { lo: cursor, hi: Some(lo - 1) });
            }
            match iv.hi {
                Some(h) => cursor = Some(h + 1),
                None => {
                    open = false;
                    break;
                }
            }
        }
        if open {
            out.push(Interval { lo: cursor, hi: None });
        }
        Self::new(out)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn shifted(&self, d: i64) -> Self {
        Self::new(self.0.iter().map(|i| Interval {
            lo: i.lo.map(|x| x + d),
            hi: i.hi.map(|x| x + d),
        }))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("empty");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|i| match (i.lo, i.hi) {
                (None, None) => "all".to_string(),
                (Some(a), None) => format!("lbar>={a}"),
                (None, Some(b)) => format!("lbar<={b}"),
                (Some(a), Some(b)) if a == b => format!("lbar={a}"),
                (Some(a), Some(b)) => format!("lbar in [{a},{b}]"),
            })
            .collect();
        f.write_str(&parts.join(" | "))
    }
}

/// Index set `{(k, l, m) : l - mu2 - shift.1 in lbar}`, optionally recorded
/// with a shift `(dk, dl)`. The `k` shift never affects membership.
#[derive(Clone, Debug)]
pub struct IndexSet {
    pub lbar: IntervalSet,
    pub shift: (i64, i64),
}

impl IndexSet {
    pub fn new(lbar: IntervalSet) -> Self {
        Self { lbar, shift: (0, 0) }
    }

    pub fn all() -> Self {
        Self::new(IntervalSet::all())
    }

    pub fn ge(c: i64) -> Self {
        Self::new(IntervalSet::ge(c))
    }

    pub fn le(c: i64) -> Self {
        Self::new(IntervalSet::le(c))
    }

    pub fn eq(c: i64) -> Self {
        Self::new(IntervalSet::range(c, c))
    }

    pub fn range(a: i64, b: i64) -> Self {
        Self::new(IntervalSet::range(a, b))
    }

    /// The `lbar` condition with the shift folded in.
    pub fn effective(&self) -> IntervalSet {
        self.lbar.shifted(self.shift.1)
    }

    /// Membership; `mu2` must be an integer.
    pub fn contains(&self, p: &Params, i: Index) -> Result<bool> {
        let mu2 = p.require_integral_mu2()?;
        Ok(self.effective().contains(i.l - mu2))
    }

    pub fn contains_lbar(&self, lbar: i64) -> bool {
        self.effective().contains(lbar)
    }

    pub fn complement(&self) -> Self {
        Self::new(self.effective().complement())
    }

    pub fn is_full(&self) -> bool {
        self.effective() == IntervalSet::all()
    }
}

impl PartialEq for IndexSet {
    fn eq(&self, other: &Self) -> bool {
        self.effective() == other.effective()
    }
}

impl Eq for IndexSet {}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.effective())
    }
}

impl FromStr for IndexSet {
    type Err = Error;

    /// Accepts `all`, `lbar>=c`, `lbar<=c`, `lbar=c`, `lbar in [a,b]`, the
    /// shorthands `l01`, `lge0`, ... and `|`-separated unions.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("cannot read index set {s:?}"));
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        let mut acc = IntervalSet::empty();
        for part in s.split('|') {
            let t: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            let piece = if t == "all" || t.is_empty() {
                IntervalSet::all()
            } else if t == "l01" {
                IntervalSet::range(0, 1)
            } else if let Some(r) = t.strip_prefix("lbar>=").or_else(|| t.strip_prefix("lge")) {
                IntervalSet::ge(int(r)?)
            } else if let Some(r) = t.strip_prefix("lbar<=").or_else(|| t.strip_prefix("lle")) {
                IntervalSet::le(int(r)?)
            } else if let Some(r) = t.strip_prefix("lbarin[") {
                let (a, b) = r.strip_suffix(']').and_then(|r| r.split_once(',')).ok_or_else(bad)?;
                IntervalSet::range(int(a)?, int(b)?)
            } else if let Some(r) = t.strip_prefix("lbar=").or_else(|| t.strip_prefix("leq")) {
                let c = int(r)?;
                IntervalSet::range(c, c)
            } else {
                return Err(bad());
            };
            acc = acc.union(&piece);
        }
        Ok(IndexSet::new(acc))
    }
}

/// `J + (dk, dl, 0)`, the index set matching `J` under the isomorphism
/// `w_{k,l,m} -> w_{k+dk,l+dl,m}` from parameters `(mu1, mu2)` to
/// `(mu1+dk, mu2+dl)`.
pub fn shift_isomorphism(j: &IndexSet, d: (i64, i64)) -> IndexSet {
    IndexSet {
        lbar: j.lbar.clone(),
        shift: (j.shift.0 + d.0, j.shift.1 + d.1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubquotientModule {
    pub params: Params,
    pub basis: Basis,
    pub set: IndexSet,
}

impl SubquotientModule {
    pub fn new(params: &Params, basis: Basis, set: IndexSet) -> Result<Self> {
        if basis == Basis::U {
            return Err(Error::Unsupported("subquotients are formed in the w- or eta-basis".into()));
        }
        params.require_generic()?;
        if !set.is_full() {
            params.require_integral_mu2()?;
        }
        Ok(Self {
            params: params.clone(),
            basis,
            set,
        })
    }

    pub fn contains(&self, i: Index) -> bool {
        self.set.is_full() || self.set.contains(&self.params, i).unwrap_or(false)
    }

    pub fn check_support(&self, v: &Element) -> Result<()> {
        v.require_basis(self.basis)?;
        if v.params() != &self.params {
            return Err(Error::ParamsMismatch);
        }
        match v.support().find(|i| !self.contains(*i)) {
            Some(i) => Err(Error::SupportViolation(i)),
            None => Ok(()),
        }
    }

    /// Truncated action on one basis vector.
    pub fn basis_action(&self, g: Generator, i: Index) -> Vec<(Index, Scalar)> {
        basis_action(&self.params, self.basis, g, i)
            .into_iter()
            .filter(|(j, _)| self.contains(*j))
            .collect()
    }
}

pub fn act_subquot(s: &SubquotientModule, g: Generator, v: &Element) -> Result<Element> {
    s.check_support(v)?;
    let mut out = Element::zero(&s.params, s.basis);
    for (i, c) in v.terms() {
        for (j, d) in s.basis_action(g, i) {
            out.add_term(j, &(c * &d));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: Index,
    pub generator: Generator,
    pub target: Index,
    pub coeff: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{} has ({})*{}", self.generator, self.index, self.coeff, self.target)
    }
}

#[derive(Clone, Debug)]
pub struct ClosureVerdict {
    pub closed: bool,
    /// Up to [`MAX_WITNESSES`] escaping terms, in index order.
    pub witnesses: Vec<Witness>,
    pub escapes: usize,
    pub note: &'static str,
}

pub const MAX_WITNESSES: usize = 8;

/// Checks that no generator maps a basis vector of `J` (inside the window)
/// to a term outside `J`. Terms leaving the window but staying in `J` are
/// fine: membership in `J` depends on `lbar` only.
pub fn is_closed(p: &Params, basis: Basis, j: &IndexSet, window: &Window) -> Result<ClosureVerdict> {
    let mu2 = p.require_integral_mu2()?;
    p.require_generic()?;
    let eff = j.effective();
    let mut witnesses = Vec::new();
    let mut escapes = 0;
    for i in window.indices() {
        if !eff.contains(i.l - mu2) {
            continue;
        }
        for g in Generator::ALL {
            for (t, c) in basis_action(p, basis, g, i) {
                if !eff.contains(t.l - mu2) {
                    escapes += 1;
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push(Witness {
                            index: i,
                            generator: g,
                            target: t,
                            coeff: c,
                        });
                    }
                }
            }
        }
    }
    Ok(ClosureVerdict {
        closed: escapes == 0,
        witnesses,
        escapes,
        note: "finite-window check; escapes in k or m cannot leave an lbar-defined set",
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Submodule,
    Quotient,
    /// `J = outer \ inner` with both closed and `inner` inside `outer`.
    Subquotient { outer: IndexSet, inner: IndexSet },
    None,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Submodule => "submodule",
            Classification::Quotient => "quotient",
            Classification::Subquotient { .. } => "subquotient",
            Classification::None => "none",
        }
    }
}

/// Interval-family sets with endpoints in `[lo, hi]`, plus the full and empty sets.
fn candidate_family(lo: i64, hi: i64) -> Vec<IntervalSet> {
    let mut out = vec![IntervalSet::all(), IntervalSet::empty()];
    for c in lo..=hi {
        out.push(IntervalSet::ge(c));
        out.push(IntervalSet::le(c));
        for d in c..=hi {
            out.push(IntervalSet::range(c, d));
        }
    }
    out
}

/// Submodule if `J` is closed, quotient if its complement is, subquotient if
/// it is a difference of nested closed sets from the interval family.
pub fn classify(p: &Params, basis: Basis, j: &IndexSet, window: &Window) -> Result<Classification> {
    let closed = |s: &IndexSet| is_closed(p, basis, s, window).map(|v| v.closed);
    if closed(j)? {
        return Ok(Classification::Submodule);
    }
    if closed(&j.complement())? {
        return Ok(Classification::Quotient);
    }
    let mu2 = p.require_integral_mu2()?;
    let (lo, hi) = (window.l.0 - mu2, window.l.1 - mu2);
    let mut closed_sets = Vec::new();
    for c in candidate_family(lo, hi) {
        let s = IndexSet::new(c);
        if closed(&s)? {
            closed_sets.push(s);
        }
    }
    let target = j.effective();
    for outer in &closed_sets {
        for inner in &closed_sets {
            let (o, i) = (outer.effective(), inner.effective());
            if i.is_subset(&o) && o.difference(&i) == target {
                return Ok(Classification::Subquotient {
                    outer: outer.clone(),
                    inner: inner.clone(),
                });
            }
        }
    }
    Ok(Classification::None)
}

/// The action on `M_{lbar in {0,1}}` (or its dual) from the reduced formulas,
/// without going through the general ones.
pub fn act_l01_fastpath(p: &Params, basis: Basis, g: Generator, v: &Element) -> Result<Element> {
    let mu2 = p.require_integral_mu2()?;
    p.require_generic()?;
    v.require_basis(basis)?;
    let mut out = Element::zero(p, basis);
    for (i, c) in v.terms() {
        let lb = i.l - mu2;
        if !(0..=1).contains(&lb) {
            return Err(Error::SupportViolation(i));
        }
        let terms = match basis {
            Basis::W => l01_w(p, g, i, lb == 1),
            Basis::Eta => l01_eta(p, g, i, lb == 1),
            Basis::U => return Err(Error::Unsupported("fast path needs the w- or eta-basis".into())),
        };
        for (j, d) in terms {
            out.add_term(j, &(c * &d));
        }
    }
    Ok(out)
}

fn cartan(p: &Params, g: Generator, i: Index) -> Vec<(Index, Scalar)> {
    let w = weight_of(p, i);
    vec![(i, if g == Generator::H1 { w.h1 } else { w.h2 })]
}

fn l01_w(p: &Params, g: Generator, i: Index, upper: bool) -> Vec<(Index, Scalar)> {
    let kb = p.kbar(i.k);
    let m = Scalar::int(i.m);
    let one = Scalar::one();
    let mut out = Vec::new();
    let mut push = |j: Index, c: Scalar| {
        if j.m >= 0 && !c.is_zero() {
            out.push((j, c));
        }
    };
    match (g, upper) {
        (Generator::H1 | Generator::H2, _) => return cartan(p, g, i),
        (Generator::E1, _) => push(i.shift(-1, 0, 0), -&kb),
        (Generator::E2, false) => push(i.shift(1, 0, -1), m),
        (Generator::E2, true) => {
            push(i.shift(0, -1, 0), -&one);
            push(i.shift(1, 0, -1), &(&m * &(&kb - &one)) / &(&kb + &one));
        }
        (Generator::F1, false) => push(i.shift(1, 0, 0), &kb + &m),
        (Generator::F1, true) => {
            push(i.shift(1, 0, 0), &(&(&kb - &one) * &(&(&kb + &m) + &one)) / &(&kb + &one));
            push(i.shift(0, -1, 1), -&one);
        }
        (Generator::F2, _) => push(i.shift(-1, 0, 1), kb),
        (Generator::E12, _) => push(i.shift(0, 0, -1), -&m),
        (Generator::F12, false) => push(i.shift(0, 0, 1), &kb + &m),
        (Generator::F12, true) => push(i.shift(0, 0, 1), &(&kb + &m) + &one),
    }
    out
}

fn l01_eta(p: &Params, g: Generator, i: Index, upper: bool) -> Vec<(Index, Scalar)> {
    let kb = p.kbar(i.k);
    let m = Scalar::int(i.m);
    let one = Scalar::one();
    let two = Scalar::int(2);
    let m1 = &m + &one;
    let pos = i.m > 0;
    let mut out = Vec::new();
    let mut push = |j: Index, c: Scalar| {
        if j.m >= 0 && !c.is_zero() {
            out.push((j, c));
        }
    };
    match (g, upper) {
        (Generator::H1 | Generator::H2, _) => return cartan(p, g, i),
        (Generator::E1, false) => {
            push(i.shift(-1, 0, 0), -(&(&kb + &m) - &one));
            if pos {
                push(i.shift(0, 1, -1), one.clone());
            }
        }
        (Generator::E1, true) => push(i.shift(-1, 0, 0), -(&(&(&kb - &two) * &(&kb + &m)) / &kb)),
        (Generator::E2, _) => {
            if pos {
                push(i.shift(1, 0, -1), -(&kb + &one));
            }
        }
        (Generator::F1, _) => push(i.shift(1, 0, 0), &kb + &one),
        (Generator::F2, false) => {
            push(i.shift(0, 1, 0), one.clone());
            push(i.shift(-1, 0, 1), -m1);
        }
        (Generator::F2, true) => push(i.shift(-1, 0, 1), -(&(&m1 * &(&kb - &two)) / &kb)),
        (Generator::E12, false) => {
            if pos {
                push(i.shift(0, 0, -1), &(&kb + &m) - &one);
            }
        }
        (Generator::E12, true) => {
            if pos {
                push(i.shift(0, 0, -1), &kb + &m);
            }
        }
        (Generator::F12, _) => push(i.shift(0, 0, 1), -m1),
    }
    out
}

/// Reads a set of `lbar` values observed inside a window back as an interval
/// set: runs touching the window's `lbar` edges are extended to infinity,
/// then the result is intersected with `within`.
pub fn recognize(values: &BTreeSet<i64>, window_lbar: (i64, i64), within: &IntervalSet) -> IndexSet {
    let mut pieces = Vec::new();
    let mut it = values.iter().copied().peekable();
    while let Some(start) = it.next() {
        let mut end = start;
        while it.peek() == Some(&(end + 1)) {
            end = it.next().unwrap_or(end);
        }
        pieces.push(Interval {
            lo: (start > window_lbar.0).then_some(start),
            hi: (end < window_lbar.1).then_some(end),
        });
    }
    IndexSet::new(IntervalSet::new(pieces).intersect(within))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtmodule::act;
    use crate::sl3::bracket;
    use proptest::prelude::*;

    fn p() -> Params {
        Params::ratios((1, 3), (0, 1))
    }

    fn win() -> Window {
        Window::radius(&p(), 3)
    }

    fn w(i: (i64, i64, i64)) -> Element {
        Element::basis_vector(&p(), Basis::W, i)
    }

    fn eta(i: (i64, i64, i64)) -> Element {
        Element::basis_vector(&p(), Basis::Eta, i)
    }

    fn lin(terms: &[((i64, i64, i64), Scalar)], b: Basis) -> Element {
        Element::from_terms(&p(), b, terms.iter().map(|(i, c)| (Index::from(*i), c.clone())))
    }

    #[test]
    fn interval_algebra() {
        let a = IntervalSet::ge(0);
        assert_eq!(a.complement(), IntervalSet::le(-1));
        assert_eq!(IntervalSet::range(0, 1).complement(), IntervalSet::le(-1).union(&IntervalSet::ge(2)));
        assert_eq!(IntervalSet::ge(1).difference(&IntervalSet::ge(2)), IntervalSet::range(1, 1));
        assert_eq!(IntervalSet::all().complement(), IntervalSet::empty());
        assert_eq!(IntervalSet::empty().complement(), IntervalSet::all());
        assert_eq!(IntervalSet::range(0, 1).union(&IntervalSet::range(2, 4)), IntervalSet::range(0, 4));
        assert!(IntervalSet::range(0, 1).is_subset(&IntervalSet::le(1)));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("lbar=1".parse::<IndexSet>().unwrap(), IndexSet::eq(1));
        assert_eq!("lbar>=0".parse::<IndexSet>().unwrap(), IndexSet::ge(0));
        assert_eq!("lbar in [0,1]".parse::<IndexSet>().unwrap(), IndexSet::range(0, 1));
        assert_eq!("l01".parse::<IndexSet>().unwrap(), IndexSet::range(0, 1));
        assert_eq!("lbar<=-1 | lbar>=2".parse::<IndexSet>().unwrap(), IndexSet::range(0, 1).complement());
        assert!("lbar~1".parse::<IndexSet>().is_err());
        assert_eq!(IndexSet::range(0, 1).to_string(), "lbar in [0,1]");
    }

    #[test]
    fn truncated_action_examples() {
        let s = SubquotientModule::new(&p(), Basis::W, IndexSet::range(0, 1)).unwrap();
        let got = act_subquot(&s, Generator::F1, &w((0, 1, 0))).unwrap();
        let want = lin(&[((1, 1, 0), Scalar::ratio(-4, 3)), ((0, 0, 1), Scalar::int(-1))], Basis::W);
        assert_eq!(got, want);
        let s0 = SubquotientModule::new(&p(), Basis::W, IndexSet::eq(0)).unwrap();
        assert_eq!(act_subquot(&s0, Generator::F1, &w((0, 0, 0))).unwrap(), lin(&[((1, 0, 0), Scalar::ratio(-1, 3))], Basis::W));
        let sg = SubquotientModule::new(&p(), Basis::W, IndexSet::ge(0)).unwrap();
        assert!(act_subquot(&sg, Generator::E2, &w((0, 0, 0))).unwrap().is_zero());
        assert_eq!(act_subquot(&s0, Generator::F1, &w((0, 1, 0))), Err(Error::SupportViolation(Index::new(0, 1, 0))));
        let generic = Params::ratios((1, 3), (1, 5));
        assert_eq!(
            SubquotientModule::new(&generic, Basis::W, IndexSet::ge(0)),
            Err(Error::RequiresIntegralMu2)
        );
    }

    #[test]
    fn closure_examples() {
        assert!(is_closed(&p(), Basis::W, &IndexSet::ge(0), &win()).unwrap().closed);
        assert!(is_closed(&p(), Basis::W, &IndexSet::le(0), &win()).unwrap().closed);
        let v = is_closed(&p(), Basis::W, &IndexSet::eq(1), &win()).unwrap();
        assert!(!v.closed);
        assert!(v.witnesses.iter().any(|x| x.generator == Generator::F1
            && x.target == x.index.shift(0, -1, 1)
            && x.coeff == Scalar::int(-1)));
    }

    #[test]
    fn nine_listed_sets() {
        let sub = [IndexSet::ge(0), IndexSet::eq(0), IndexSet::range(0, 1), IndexSet::le(1), IndexSet::le(0)];
        let quo = [IndexSet::ge(1), IndexSet::ge(2), IndexSet::le(-1)];
        for j in &sub {
            assert_eq!(classify(&p(), Basis::W, j, &win()).unwrap(), Classification::Submodule, "{j}");
        }
        for j in &quo {
            assert_eq!(classify(&p(), Basis::W, j, &win()).unwrap(), Classification::Quotient, "{j}");
        }
        let c = classify(&p(), Basis::W, &IndexSet::eq(1), &win()).unwrap();
        assert_eq!(c.name(), "subquotient");
    }

    #[test]
    fn dual_reverses_closure() {
        assert_eq!(classify(&p(), Basis::Eta, &IndexSet::ge(0), &win()).unwrap(), Classification::Quotient);
        assert_eq!(classify(&p(), Basis::Eta, &IndexSet::ge(1), &win()).unwrap(), Classification::Submodule);
    }

    #[test]
    fn fastpath_examples() {
        assert_eq!(
            act_l01_fastpath(&p(), Basis::W, Generator::E2, &w((0, 1, 1))).unwrap(),
            lin(&[((0, 0, 1), Scalar::int(-1)), ((1, 1, 0), Scalar::int(-2))], Basis::W)
        );
        assert_eq!(
            act_l01_fastpath(&p(), Basis::Eta, Generator::F2, &eta((0, 0, 0))).unwrap(),
            lin(&[((0, 1, 0), Scalar::int(1)), ((-1, 0, 1), Scalar::int(-1))], Basis::Eta)
        );
        // kbar = -1/3, m = 0: -(kbar-2)(kbar+m)/kbar = 7/3
        assert_eq!(
            act_l01_fastpath(&p(), Basis::Eta, Generator::E1, &eta((0, 1, 0))).unwrap(),
            lin(&[((-1, 1, 0), Scalar::ratio(7, 3))], Basis::Eta)
        );
    }

    #[test]
    fn shift_examples() {
        let j = shift_isomorphism(&IndexSet::ge(0), (0, 1));
        let p1 = Params::ratios((1, 3), (1, 1));
        for i in win().indices() {
            assert_eq!(j.contains(&p(), i).unwrap(), IndexSet::ge(0).contains(&p1, i).unwrap());
        }
        assert_eq!(shift_isomorphism(&IndexSet::eq(1), (0, -1)), IndexSet::eq(0));
        assert_eq!(shift_isomorphism(&IndexSet::range(0, 1), (5, 0)), IndexSet::range(0, 1));
    }

    #[test]
    fn shift_is_an_isomorphism() {
        let q = Params::ratios((1, 3) , (0, 1));
        let q2 = Params::ratios((1 + 3 * 2, 3), (-1, 1));
        for b in [Basis::W, Basis::Eta] {
            for i in Window::radius(&q, 2).indices() {
                for g in Generator::ALL {
                    let a = basis_action(&q, b, g, i);
                    let c = basis_action(&q2, b, g, i.shift(2, -1, 0));
                    let moved: Vec<_> = a.into_iter().map(|(j, x)| (j.shift(2, -1, 0), x)).collect();
                    assert_eq!(moved, c);
                }
            }
        }
    }

    #[test]
    fn recognition() {
        let within = IntervalSet::range(0, 1);
        let r = recognize(&[0].into_iter().collect(), (0, 1), &within);
        assert_eq!(r, IndexSet::eq(0));
        let r = recognize(&[2, 3, 4].into_iter().collect(), (0, 4), &IntervalSet::ge(0));
        assert_eq!(r, IndexSet::ge(2));
        let r = recognize(&[0, 1].into_iter().collect(), (0, 4), &IntervalSet::ge(0));
        assert_eq!(r, IndexSet::range(0, 1));
    }

    fn l01_element(b: Basis, t: &[(i64, i64, i64, i64)]) -> Element {
        Element::from_terms(&p(), b, t.iter().map(|(k, l, m, c)| (Index::new(*k, *l, *m), Scalar::int(*c))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn fastpath_equals_truncation(
            g in prop::sample::select(Generator::ALL.to_vec()),
            b in prop::sample::select(vec![Basis::W, Basis::Eta]),
            t in prop::collection::vec((-4i64..=4, 0i64..=1, 0i64..=4, -5i64..=5), 1..5),
        ) {
            let v = l01_element(b, &t);
            let s = SubquotientModule::new(&p(), b, IndexSet::range(0, 1)).unwrap();
            prop_assert_eq!(act_l01_fastpath(&p(), b, g, &v).unwrap(), act_subquot(&s, g, &v).unwrap());
        }

        #[test]
        fn closed_truncations_are_modules(
            x in prop::sample::select(Generator::ALL.to_vec()),
            y in prop::sample::select(Generator::ALL.to_vec()),
            which in 0usize..5,
            t in prop::collection::vec((-3i64..=3, -3i64..=3, 0i64..=3, -5i64..=5), 1..4),
        ) {
            let sets = [IndexSet::ge(0), IndexSet::eq(0), IndexSet::range(0, 1), IndexSet::le(1), IndexSet::le(0)];
            let s = SubquotientModule::new(&p(), Basis::W, sets[which].clone()).unwrap();
            let v = l01_element(Basis::W, &t).restricted(|i| s.contains(i));
            let act_s = |g: Generator, e: &Element| act_subquot(&s, g, e).unwrap();
            let mut lhs = Element::zero(&p(), Basis::W);
            for (g, c) in bracket(&x.into(), &y.into()).terms() {
                lhs = lhs.plus(&act_s(g, &v).scaled(c)).unwrap();
            }
            let rhs = act_s(x, &act_s(y, &v)).minus(&act_s(y, &act_s(x, &v))).unwrap();
            prop_assert_eq!(lhs, rhs);
            // on a closed set truncation changes nothing
            prop_assert_eq!(act_s(x, &v), act(x, &v).unwrap());
        }
    }
}
