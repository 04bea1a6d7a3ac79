//! GT-diagonal intertwiners `b_i -> x_i b'_i` between (sub)quotients of `M`
//! and `M^vee`, computed on finite windows.
//!
//! For a source basis vector `b_i` and generator `X`, comparing the
//! coefficient of `b'_j` in `phi(X b_i)` and `X phi(b_i)` gives
//! `c_src(i -> j) x_j - c_tgt(i -> j) x_i = 0`. Equations that mention an
//! unknown outside the window are dropped; this can only enlarge the
//! solution space.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{falling_factorial, factorial, raising_factorial, Scalar};
use crate::gtmodule::{Basis, Index, Params};
use crate::linsolve::{Rref, SparseRow};
use crate::sl3::Generator;
use crate::subquot::{recognize, IndexSet, SubquotientModule};
use crate::window::Window;

pub type ModuleDescriptor = SubquotientModule;

impl SubquotientModule {
    pub fn plain(params: &Params, set: IndexSet) -> Result<Self> {
        Self::new(params, Basis::W, set)
    }

    pub fn dual(params: &Params, set: IndexSet) -> Result<Self> {
        Self::new(params, Basis::Eta, set)
    }

    pub fn is_dual(&self) -> bool {
        self.basis == Basis::Eta
    }

    /// Reads `full`, `dual`, `l01`, `dual:l01`, `lge2`, `dual:lbar<=-1`, ...
    pub fn parse(params: &Params, s: &str) -> Result<Self> {
        let s = s.trim();
        let (dual, rest) = match s.strip_prefix("dual") {
            Some(r) => (true, r.strip_prefix(':').unwrap_or(r)),
            None => (false, s),
        };
        let rest = if rest == "full" { "" } else { rest };
        let set: IndexSet = rest.parse()?;
        if dual {
            Self::dual(params, set)
        } else {
            Self::plain(params, set)
        }
    }
}

impl fmt::Display for SubquotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.is_dual() { "Mdual" } else { "M" };
        if self.set.is_full() {
            f.write_str(head)
        } else {
            write!(f, "{head}[{}]", self.set)
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomProblem {
    pub source: ModuleDescriptor,
    pub target: ModuleDescriptor,
    pub window: Window,
}

/// One coefficient-matching equation `sum_j c_j x_j = 0`.
#[derive(Clone, Debug)]
pub struct Equation {
    pub source: Index,
    pub generator: Generator,
    pub target: Index,
    pub terms: Vec<(Index, Scalar)>,
}

impl Equation {
    pub fn eval(&self, x: &BTreeMap<Index, Scalar>) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, (i, c)| {
            &acc + &(c * &x.get(i).cloned().unwrap_or_default())
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSolution {
    /// Coefficients on the unknowns of the problem; absent means zero.
    pub x: BTreeMap<Index, Scalar>,
    /// Index normalized to 1.
    pub seed: Index,
}

impl HomSolution {
    pub fn coeff(&self, i: Index) -> Scalar {
        self.x.get(&i).cloned().unwrap_or_default()
    }
}

#[derive(Clone, Debug)]
pub struct HomResult {
    pub solutions: Vec<HomSolution>,
    pub unknowns: usize,
    pub equations: usize,
}

impl HomResult {
    pub fn dimension(&self) -> usize {
        self.solutions.len()
    }
}

impl HomProblem {
    pub fn new(source: ModuleDescriptor, target: ModuleDescriptor, window: Window) -> Result<Self> {
        if source.params != target.params {
            return Err(Error::ParamsMismatch);
        }
        source.params.require_generic()?;
        if window.min_extent() < 2 {
            return Err(Error::WindowTooSmall(format!(
                "need margin 1 in every direction, window is {window:?}"
            )));
        }
        Ok(Self {
            source,
            target,
            window,
        })
    }

    pub fn params(&self) -> &Params {
        &self.source.params
    }

    fn lbar_of(&self, i: Index) -> i64 {
        i.l - self.params().mu2_int().unwrap_or(0)
    }

    pub fn is_unknown(&self, i: Index) -> bool {
        self.source.contains(i) && self.target.contains(i)
    }

    /// Window indices where `x` is a genuine unknown, in index order.
    pub fn unknowns(&self) -> Vec<Index> {
        self.window
            .indices()
            .into_iter()
            .filter(|i| self.is_unknown(*i))
            .collect()
    }

    fn equations_at(&self, i: Index) -> Vec<Equation> {
        let mut out = Vec::new();
        for g in Generator::ALL {
            let src = self.source.basis_action(g, i);
            let tgt = if self.target.contains(i) {
                self.target.basis_action(g, i)
            } else {
                Vec::new()
            };
            let mut by_target: BTreeMap<Index, BTreeMap<Index, Scalar>> = BTreeMap::new();
            for (j, c) in src {
                if self.target.contains(j) {
                    *by_target.entry(j).or_default().entry(j).or_default() += &c;
                }
            }
            for (j, c) in tgt {
                *by_target.entry(j).or_default().entry(i).or_default() -= &c;
            }
            for (j, terms) in by_target {
                let terms: Vec<(Index, Scalar)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if terms.is_empty() || terms.iter().any(|(u, _)| !self.window.contains(*u)) {
                    continue;
                }
                out.push(Equation {
                    source: i,
                    generator: g,
                    target: j,
                    terms,
                });
            }
        }
        out
    }

    /// All interior equations, ordered by source index then generator.
    pub fn equations(&self) -> Vec<Equation> {
        let idx: Vec<Index> = self
            .window
            .indices()
            .into_iter()
            .filter(|i| self.source.contains(*i))
            .collect();
        idx.par_iter().flat_map_iter(|i| self.equations_at(*i)).collect()
    }

    /// Equations violated by the coefficient table `x`.
    pub fn residuals(&self, x: &BTreeMap<Index, Scalar>) -> Vec<Equation> {
        self.equations()
            .into_par_iter()
            .filter(|e| !e.eval(x).is_zero())
            .collect()
    }

    fn seed_key(&self, i: Index) -> (i64, Index) {
        (i.k.abs() + self.lbar_of(i).abs() + i.m, i)
    }
}

/// Exact basis of the window solution space, each vector normalized to 1 at
/// its nonzero index closest to the origin.
pub fn solve_intertwiner(problem: &HomProblem) -> Result<HomResult> {
    let unknowns = problem.unknowns();
    let col: BTreeMap<Index, usize> = unknowns.iter().enumerate().map(|(n, i)| (*i, n)).collect();
    let eqs = problem.equations();
    let mut rref = Rref::new(unknowns.len());
    for e in &eqs {
        let row: SparseRow = e.terms.iter().map(|(i, c)| (col[i], c.clone())).collect();
        rref.push(row);
    }
    let mut solutions = Vec::new();
    for v in rref.nullspace() {
        let x: BTreeMap<Index, Scalar> = v.into_iter().map(|(c, s)| (unknowns[c], s)).collect();
        let seed = *x
            .keys()
            .min_by_key(|i| problem.seed_key(**i))
            .expect("nullspace vectors are nonzero");
        let scale = x[&seed].recip()?;
        let x = x.into_iter().map(|(i, s)| (i, &s * &scale)).collect();
        solutions.push(HomSolution { x, seed });
    }
    Ok(HomResult {
        solutions,
        unknowns: unknowns.len(),
        equations: eqs.len(),
    })
}

/// Propagates `x` from `seed` along the `e1`, `e2`, `e12` comparisons, which
/// relate `x_i` and `x_{i-d}` for `d` a unit step in `k`, `l` or `m`.
///
/// A relation `a x_{i-d} = b x_i` that forces a value to zero, or that cannot
/// be solved because its coefficient vanishes while the other side does not,
/// is an obstruction to an isomorphism and is reported at the index `i` of
/// the comparison.
pub fn solve_by_recurrence(problem: &HomProblem, seed: Index, seed_value: &Scalar) -> Result<HomSolution> {
    if !problem.window.contains(seed) || !problem.is_unknown(seed) {
        return Err(Error::Invalid(format!("seed {seed} is not an unknown of the window")));
    }
    if seed_value.is_zero() {
        return Err(Error::Invalid("seed value must be nonzero".into()));
    }
    let steps = [
        (Generator::E1, (1, 0, 0)),
        (Generator::E2, (0, 1, 0)),
        (Generator::E12, (0, 0, 1)),
    ];
    // relation (upper index i, lower index i - d): a * x_lower = b * x_upper
    let relation = |upper: Index, g: Generator, d: (i64, i64, i64)| -> (Index, Scalar, Scalar) {
        let lower = upper.shift(-d.0, -d.1, -d.2);
        let pick = |terms: Vec<(Index, Scalar)>| {
            terms.into_iter().find(|(j, _)| *j == lower).map(|(_, c)| c).unwrap_or_default()
        };
        let a = pick(problem.source.basis_action(g, upper));
        let b = pick(problem.target.basis_action(g, upper));
        (lower, a, b)
    };
    let mut x: BTreeMap<Index, Scalar> = BTreeMap::new();
    x.insert(seed, seed_value.clone());
    let mut queue = VecDeque::from([seed]);
    while let Some(i) = queue.pop_front() {
        let xi = x[&i].clone();
        for (g, d) in steps {
            // i as the upper index: solve for x_{i-d}
            let (lower, a, b) = relation(i, g, d);
            if lower.m >= 0 && problem.window.contains(lower) && problem.is_unknown(lower) && !x.contains_key(&lower) {
                let rhs = &b * &xi;
                if a.is_zero() || rhs.is_zero() {
                    return Err(Error::ObstructionAtIndex(i));
                }
                x.insert(lower, &rhs / &a);
                queue.push_back(lower);
            }
            // i as the lower index: solve for x_{i+d}
            let upper = i.shift(d.0, d.1, d.2);
            if problem.window.contains(upper) && problem.is_unknown(upper) && !x.contains_key(&upper) {
                let (_, a, b) = relation(upper, g, d);
                let lhs = &a * &xi;
                if b.is_zero() || lhs.is_zero() {
                    return Err(Error::ObstructionAtIndex(upper));
                }
                x.insert(upper, &lhs / &b);
                queue.push_back(upper);
            }
        }
    }
    Ok(HomSolution { x, seed })
}

/// Image (in the target) and kernel (in the source) read off a solution as
/// `lbar`-sets. Fails if some `lbar` slice is only partly zero.
pub fn image_kernel(problem: &HomProblem, h: &HomSolution) -> Result<(IndexSet, IndexSet)> {
    let mut status: BTreeMap<i64, BTreeSet<bool>> = BTreeMap::new();
    for i in problem.window.indices() {
        if problem.source.contains(i) {
            let nonzero = problem.is_unknown(i) && !h.coeff(i).is_zero();
            status.entry(problem.lbar_of(i)).or_default().insert(nonzero);
        }
    }
    if let Some((lb, _)) = status.iter().find(|(_, s)| s.len() > 1) {
        return Err(Error::Unsupported(format!("lbar = {lb} is only partly in the image")));
    }
    let image: BTreeSet<i64> = status.iter().filter(|(_, s)| s.contains(&true)).map(|(l, _)| *l).collect();
    let kernel: BTreeSet<i64> = status.iter().filter(|(_, s)| s.contains(&false)).map(|(l, _)| *l).collect();
    let mu2 = problem.params().mu2_int().unwrap_or(0);
    let range = (problem.window.l.0 - mu2, problem.window.l.1 - mu2);
    let within = |s: &SubquotientModule| s.set.effective();
    let img_within = within(&problem.target).intersect(&within(&problem.source));
    Ok((
        recognize(&image, range, &img_within),
        recognize(&kernel, range, &within(&problem.source)),
    ))
}

fn mu1_p1(p: &Params, c: i64) -> Scalar {
    &p.mu1 + &Scalar::int(c)
}

fn neg_mu1(p: &Params, c: i64) -> Scalar {
    &Scalar::int(c) - &p.mu1
}

fn sign(m: i64) -> Scalar {
    Scalar::int(if m % 2 == 0 { 1 } else { -1 })
}

fn family_lbar(p: &Params, i: Index) -> Result<i64> {
    Ok(i.l - p.require_integral_mu2()?)
}

/// Coefficients of the isomorphism `M^vee -> M`, `eta_i -> x_i w_i`, with
/// `x_{0,0,0} = 1`. Needs `mu1`, `mu2` and `mu1 + mu2` non-integral.
pub fn closed_form_xabc(i: Index, p: &Params) -> Result<Scalar> {
    if p.mu1_integral() || p.mu2_integral() || p.sum_integral() {
        return Err(Error::NonGenericParameters("needs mu1, mu2 and mu1 + mu2 non-integral".into()));
    }
    let (kb, lb) = (p.kbar(i.k), p.lbar(i.l));
    let (mu1, mu2) = (&p.mu1, &p.mu2);
    let m = i.m as u32;
    let s = &kb + &lb;
    let head = &(&(&sign(i.m) * &raising_factorial(&s, m)) * &(mu1 * mu2))
        / &(&(&kb * &lb) * &Scalar::from(factorial(m)));
    let sum = mu1 + mu2;
    let kpart = if i.k >= 0 {
        let n = i.k as u32;
        &raising_factorial(&neg_mu1(p, -1), n) / &raising_factorial(&(&Scalar::int(-1) - &sum), n)
    } else {
        let n = (-i.k) as u32;
        &falling_factorial(&(&Scalar::int(-2) - &sum), n) / &falling_factorial(&neg_mu1(p, -2), n)
    };
    let lpart = if i.l >= 0 {
        let n = i.l as u32;
        &raising_factorial(&(&Scalar::int(-1) - mu2), n) / &raising_factorial(&(&(&kb - mu2) - &Scalar::one()), n)
    } else {
        let n = (-i.l) as u32;
        &falling_factorial(&(&(&kb - mu2) - &Scalar::int(2)), n) / &falling_factorial(&(&Scalar::int(-2) - mu2), n)
    };
    Ok(&(&head * &kpart) * &lpart)
}

/// `M^vee_{lbar in {0,1}} -> M_{lbar in {0,1}}`, `eta_i -> x_i w_i`, with
/// `x_{0,mu2,0} = 1`; zero on `lbar = 1`.
pub fn closed_form_l01_phi(i: Index, p: &Params) -> Result<Scalar> {
    match family_lbar(p, i)? {
        1 => Ok(Scalar::zero()),
        0 => {
            let kb = p.kbar(i.k);
            let tail = if i.m == 0 {
                kb.recip()?
            } else {
                &(&sign(i.m) * &raising_factorial(&(&kb + &Scalar::one()), (i.m - 1) as u32))
                    / &Scalar::from(factorial(i.m as u32))
            };
            Ok(&(-&p.mu1) * &tail)
        }
        _ => Err(Error::OutsideFamily(i)),
    }
}

/// `M_{lbar in {0,1}} -> M^vee_{lbar in {0,1}}`, `w_i -> x_i eta_i`, with
/// `x_{0,mu2+1,0} = 1`; zero on `lbar = 0`.
pub fn closed_form_l01_psi(i: Index, p: &Params) -> Result<Scalar> {
    match family_lbar(p, i)? {
        0 => Ok(Scalar::zero()),
        1 => {
            let kb = p.kbar(i.k);
            let m = i.m as u32;
            let a = &(&sign(i.m) * &Scalar::from(factorial(m))) / &raising_factorial(&(&kb + &Scalar::one()), m);
            let b = &(&kb * &(&kb - &Scalar::one())) / &(&p.mu1 * &mu1_p1(p, 1));
            Ok(&a * &b)
        }
        _ => Err(Error::OutsideFamily(i)),
    }
}

/// Shared shape of the `lbar >= 2` and `lbar <= -1` families:
/// `(-1)^m m! / (kbar+lbar)^(m) * (-kbar/mu1) * K(k, lbar)`.
fn lbar_family_core(i: Index, p: &Params, lb: i64) -> Result<Scalar> {
    let kb = p.kbar(i.k);
    let lbs = Scalar::int(lb);
    let m = i.m as u32;
    let head = &(&sign(i.m) * &Scalar::from(factorial(m))) / &raising_factorial(&(&kb + &lbs), m);
    let mid = &(-&kb) / &p.mu1;
    let kpart = if i.k >= 0 {
        let n = i.k as u32;
        &raising_factorial(&(&lbs - &mu1_p1(p, 1)), n) / &raising_factorial(&neg_mu1(p, -1), n)
    } else {
        let n = (-i.k) as u32;
        &falling_factorial(&neg_mu1(p, -2), n) / &falling_factorial(&(&lbs - &mu1_p1(p, 2)), n)
    };
    Ok(&(&head * &mid) * &kpart)
}

/// `M_{lbar >= 2} -> M^vee_{lbar >= 2}`, `w_i -> x_i eta_i`, with
/// `x_{0,mu2+2,0} = 1`.
pub fn closed_form_lge2(i: Index, p: &Params) -> Result<Scalar> {
    let lb = family_lbar(p, i)?;
    if lb < 2 {
        return Err(Error::OutsideFamily(i));
    }
    let core = lbar_family_core(i, p, lb)?;
    let lpart = if lb == 2 {
        Scalar::one()
    } else {
        // lbar (1-mu1)^(lbar-2) / (2 (lbar-2) (2*3*...*(lbar-3)))
        let n = (lb - 2) as u32;
        &(&Scalar::int(lb) * &raising_factorial(&neg_mu1(p, 1), n)) / &Scalar::from(&factorial(n) * factorial(2))
    };
    Ok(&core * &lpart)
}

/// Self-duality family on `lbar <= -1`, with `x_{0,mu2-1,0} = 1`. It solves
/// the equations of `M_{lbar <= -1} -> M^vee_{lbar <= -1}`, `w_i -> x_i eta_i`.
pub fn closed_form_lle_minus1(i: Index, p: &Params) -> Result<Scalar> {
    let lb = family_lbar(p, i)?;
    if lb > -1 {
        return Err(Error::OutsideFamily(i));
    }
    let core = lbar_family_core(i, p, lb)?;
    let lpart = if lb == -1 {
        Scalar::one()
    } else {
        // -lbar (3*4*...*(1-lbar)) / (mu1+3)^(-lbar-1)
        let n = (-lb - 1) as u32;
        let prod = &factorial((1 - lb) as u32) / &factorial(2);
        &(&Scalar::int(-lb) * &Scalar::from(prod)) / &raising_factorial(&mu1_p1(p, 3), n)
    };
    Ok(&core * &lpart)
}

/// The closed-form coefficient families and the Hom problems they solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Xabc,
    L01Phi,
    L01Psi,
    Lge2,
    LleMinus1,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Xabc,
        Family::L01Phi,
        Family::L01Psi,
        Family::Lge2,
        Family::LleMinus1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Xabc => "xabc",
            Family::L01Phi => "l01-phi",
            Family::L01Psi => "l01-psi",
            Family::Lge2 => "lge2",
            Family::LleMinus1 => "lle-minus1",
        }
    }

    pub fn eval(self, i: Index, p: &Params) -> Result<Scalar> {
        match self {
            Family::Xabc => closed_form_xabc(i, p),
            Family::L01Phi => closed_form_l01_phi(i, p),
            Family::L01Psi => closed_form_l01_psi(i, p),
            Family::Lge2 => closed_form_lge2(i, p),
            Family::LleMinus1 => closed_form_lle_minus1(i, p),
        }
    }

    /// The Hom problem whose equations the family satisfies.
    pub fn problem(self, p: &Params, radius: i64) -> Result<HomProblem> {
        let (src, tgt) = match self {
            Family::Xabc => (ModuleDescriptor::dual(p, IndexSet::all())?, ModuleDescriptor::plain(p, IndexSet::all())?),
            Family::L01Phi => (ModuleDescriptor::dual(p, IndexSet::range(0, 1))?, ModuleDescriptor::plain(p, IndexSet::range(0, 1))?),
            Family::L01Psi => (ModuleDescriptor::plain(p, IndexSet::range(0, 1))?, ModuleDescriptor::dual(p, IndexSet::range(0, 1))?),
            Family::Lge2 => (ModuleDescriptor::plain(p, IndexSet::ge(2))?, ModuleDescriptor::dual(p, IndexSet::ge(2))?),
            Family::LleMinus1 => (ModuleDescriptor::plain(p, IndexSet::le(-1))?, ModuleDescriptor::dual(p, IndexSet::le(-1))?),
        };
        let c = p.mu2_int().unwrap_or(0);
        let window = match self {
            Family::Lge2 => Window::new((-radius, radius), (c + 2, c + 2 + radius), radius),
            Family::LleMinus1 => Window::new((-radius, radius), (c - 1 - radius, c - 1), radius),
            _ => Window::radius(p, radius),
        };
        HomProblem::new(src, tgt, window)
    }

    /// Family values on every unknown of `problem`, zero outside the
    /// family's support.
    pub fn table(self, problem: &HomProblem) -> Result<BTreeMap<Index, Scalar>> {
        let mut out = BTreeMap::new();
        for i in problem.unknowns() {
            match self.eval(i, problem.params()) {
                Ok(v) => {
                    out.insert(i, v);
                }
                Err(Error::OutsideFamily(_)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }
}

/// The six Hom statements for `mu2` integral, with their expected image and
/// kernel: `(name, source, target, image, kernel)`.
pub fn six_statements(p: &Params) -> Result<Vec<(&'static str, ModuleDescriptor, ModuleDescriptor, IndexSet, IndexSet)>> {
    let d = |s: IndexSet| ModuleDescriptor::dual(p, s);
    let m = |s: IndexSet| ModuleDescriptor::plain(p, s);
    let r01 = || IndexSet::range(0, 1);
    Ok(vec![
        ("phi-l01", d(r01())?, m(r01())?, IndexSet::eq(0), IndexSet::eq(1)),
        ("psi-l01", m(r01())?, d(r01())?, IndexSet::eq(1), IndexSet::eq(0)),
        ("phi-lge1", d(IndexSet::ge(1))?, m(IndexSet::ge(1))?, IndexSet::eq(1), IndexSet::ge(2)),
        ("psi-lge1", m(IndexSet::ge(1))?, d(IndexSet::ge(1))?, IndexSet::ge(2), IndexSet::eq(1)),
        ("phi-lge0", d(IndexSet::ge(0))?, m(IndexSet::ge(0))?, IndexSet::eq(0), IndexSet::ge(1)),
        ("psi-lge0", m(IndexSet::ge(0))?, d(IndexSet::ge(0))?, IndexSet::ge(2), IndexSet::range(0, 1)),
    ])
}
