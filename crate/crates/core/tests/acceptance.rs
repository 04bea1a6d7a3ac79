//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact (tolerance 0); window sizes and sample counts are pinned below.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use gtsl3::checks::{nine_sets, random_element};
use gtsl3::explorer::{character, dual_generate, exact_sequence_check, generate};
use gtsl3::gtmodule::{
    act, act_cartan, act_lie, act_u, act_vectorfield_oracle, casimir_apply, gt_eigenvalue, u_to_w, w_to_u,
};
use gtsl3::hom::{image_kernel, six_statements, solve_by_recurrence, solve_intertwiner, Family};
use gtsl3::sl3::{bracket, decompose, mat_commutator, matrix_oracle};
use gtsl3::subquot::{act_subquot, is_closed, IntervalSet};
use gtsl3::{
    Basis, Element, Error, Generator, HomProblem, Index, IndexSet, LieElement, ModuleDescriptor, Params, Scalar,
    SectionElement, SubquotientModule, Window,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x5eed;

fn generic() -> Params {
    Params::ratios((1, 3), (1, 5))
}

fn integral() -> Params {
    Params::ratios((1, 3), (0, 1))
}

fn r(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

/// 1. Bracket table against matrix commutators (64 pairs), Jacobi (512).
fn c1() -> String {
    for x in Generator::ALL {
        for y in Generator::ALL {
            let table = bracket(&x.into(), &y.into());
            let m = mat_commutator(&matrix_oracle(x), &matrix_oracle(y));
            assert_eq!(table.to_matrix().unwrap(), m, "[{x},{y}]");
            assert_eq!(table, decompose(&m));
        }
    }
    let mut n = 0;
    for x in Generator::ALL {
        for y in Generator::ALL {
            for z in Generator::ALL {
                let (a, b, c): (LieElement, LieElement, LieElement) = (x.into(), y.into(), z.into());
                let s = bracket(&a, &bracket(&b, &c))
                    .plus(&bracket(&b, &bracket(&c, &a)))
                    .plus(&bracket(&c, &bracket(&a, &b)));
                assert!(s.is_zero(), "Jacobi {x},{y},{z}");
                n += 1;
            }
        }
    }
    format!("64 pairs, {n} Jacobi triples, exact")
}

fn pairs() -> Vec<(Generator, Generator)> {
    Generator::ALL
        .into_iter()
        .flat_map(|x| Generator::ALL.into_iter().map(move |y| (x, y)))
        .collect()
}

fn commutator_holds(x: Generator, y: Generator, v: &Element) -> bool {
    let lhs = act_lie(&bracket(&x.into(), &y.into()), v).unwrap();
    let rhs = act(x, &act(y, v).unwrap()).unwrap().minus(&act(y, &act(x, v).unwrap()).unwrap()).unwrap();
    lhs == rhs
}

/// 2. [X,Y]v = XYv - YXv: 50 random elements per pair and basis at
/// (1/3, 1/5), radius 4, plus one symbolic element per pair and basis.
fn c2() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let p = generic();
    let s = Params::symbolic();
    let mut samples = Vec::new();
    for basis in [Basis::U, Basis::W, Basis::Eta] {
        for (x, y) in pairs() {
            for _ in 0..50 {
                let n = rng.gen_range(1..=3);
                samples.push((x, y, random_element(&mut rng, &p, basis, 4, n)));
            }
            samples.push((x, y, random_element(&mut rng, &s, basis, 4, 2)));
        }
    }
    let bad: Vec<_> = samples
        .par_iter()
        .filter(|(x, y, v)| !commutator_holds(*x, *y, v))
        .map(|(x, y, v)| format!("[{x},{y}] on {v}"))
        .collect();
    assert!(bad.is_empty(), "{} failures, first {}", bad.len(), bad[0]);
    format!("{} elements (9600 specialized + 192 symbolic), exact", samples.len())
}

/// 3. Vector-field action equals the u-formulas on 100 random sections.
fn c3() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let p = generic();
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let s = SectionElement::from_u(&random_element(&mut rng, &p, Basis::U, 4, n));
        for g in Generator::ALL {
            assert_eq!(act_vectorfield_oracle(g, &s).to_u(), act_u(g, &s.to_u()).unwrap(), "{g}");
        }
    }
    "100 sections x 8 generators, exact".into()
}

/// 4. u/w roundtrips on |k|, |l| <= 5, m <= 5, symbolic.
fn c4() -> String {
    let p = Params::symbolic();
    let w = Window::new((-5, 5), (-5, 5), 5);
    w.indices().par_iter().for_each(|i| {
        let wv = Element::basis_vector(&p, Basis::W, *i);
        let uv = Element::basis_vector(&p, Basis::U, *i);
        assert_eq!(u_to_w(&w_to_u(&wv).unwrap()).unwrap(), wv, "{i}");
        assert_eq!(w_to_u(&u_to_w(&uv).unwrap()).unwrap(), uv, "{i}");
    });
    format!("{} indices both ways, symbolic, exact", w.len())
}

/// Eigenvalue triple recomputed from its definition on a w-vector: h1 and
/// h2 through the weight, f12 e12 by composing the two actions.
fn triple_by_action(p: &Params, i: Index) -> (Scalar, Scalar, Scalar) {
    let v = Element::basis_vector(p, Basis::W, i);
    let h1 = act(Generator::H1, &v).unwrap().coeff(i);
    let h2 = act(Generator::H2, &v).unwrap().coeff(i);
    let fe = act(Generator::F12, &act(Generator::E12, &v).unwrap()).unwrap();
    assert_eq!(fe, v.scaled(&fe.coeff(i)));
    (h1, h2, fe.coeff(i))
}

/// 5. GT eigenvalues injective on the radius-5 window at (1/3, 1/5); the pair
/// (0,0,3), (2,2,1) collides at (1/3, 2/3).
fn c5() -> String {
    let p = generic();
    let w = Window::radius(&p, 5);
    let mut seen = BTreeSet::new();
    for i in w.indices() {
        let t = gt_eigenvalue(i, &p);
        assert_eq!(t, triple_by_action(&p, i), "{i}");
        assert!(seen.insert(format!("{}|{}|{}", t.0, t.1, t.2)), "collision at {i}");
    }
    let q = Params::ratios((1, 3), (2, 3));
    let (a, b) = (Index::new(0, 0, 3), Index::new(2, 2, 1));
    // direct substitution: kbar = k - 1/3, lbar = l - 2/3
    let direct = |i: Index| {
        let (kb, lb, m) = (r(3 * i.k - 1, 3), r(3 * i.l - 2, 3), Scalar::int(i.m));
        let two = Scalar::int(2);
        (
            &(&lb - &(&two * &kb)) - &m,
            &(&kb - &(&two * &lb)) - &m,
            -(&m * &(&(&(&kb + &lb) + &m) - &Scalar::one())),
        )
    };
    assert_eq!(gt_eigenvalue(a, &q), direct(a));
    assert_eq!(gt_eigenvalue(b, &q), direct(b));
    assert_eq!(gt_eigenvalue(a, &q), gt_eigenvalue(b, &q));
    let t = gt_eigenvalue(a, &q);
    format!("{} distinct triples; collision ({}, {}, {}) at (1/3, 2/3), exact", w.len(), t.0, t.1, t.2)
}

/// 6. Five random starts generate the radius-3 window at (1/3, 1/5). At
/// (1/3, 0), a start in each of the nine listed sets stays inside it exactly
/// when the set is closed.
fn c6() -> String {
    let p = generic();
    let w = Window::radius(&p, 3);
    let m = SubquotientModule::plain(&p, IndexSet::all()).unwrap();
    let idx = w.indices();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for _ in 0..5 {
        let s = idx[rng.gen_range(0..idx.len())];
        assert!(generate(&[s], &m, &w).unwrap().covers(), "start {s}");
    }
    let q = integral();
    let wq = Window::radius(&q, 3);
    let mq = SubquotientModule::plain(&q, IndexSet::all()).unwrap();
    let from_zero = generate(&[Index::new(0, 0, 0)], &mq, &wq).unwrap();
    assert!(from_zero.escapes(&q, &IndexSet::ge(0)).is_empty());
    let from_minus_one = generate(&[Index::new(0, -1, 0)], &mq, &wq).unwrap();
    let escaped = !from_minus_one.escapes(&q, &IndexSet::le(-1)).is_empty();
    assert!(escaped && !is_closed(&q, Basis::W, &IndexSet::le(-1), &wq).unwrap().closed);
    let mut agree = 0;
    for (j, _) in nine_sets() {
        let lb = (0..).flat_map(|d| [d, -d]).find(|l| j.contains_lbar(*l)).unwrap();
        let c = generate(&[Index::new(0, lb, 0)], &mq, &wq).unwrap();
        let stays = c.escapes(&q, &j).is_empty();
        assert_eq!(stays, is_closed(&q, Basis::W, &j, &wq).unwrap().closed, "{j}");
        agree += 1;
    }
    format!("5/5 generic starts cover; lbar=0 start stays in lbar>=0; lbar=-1 start leaves lbar<=-1 (a quotient); {agree}/9 sets agree with is_closed")
}

/// 7. eta[k0,0,0], k0 in {-2,0,2}, generates the radius-3 window of the dual.
fn c7() -> String {
    let q = integral();
    let w = Window::radius(&q, 3);
    for k0 in [-2, 0, 2] {
        assert!(dual_generate(&q, &[Index::new(k0, 0, 0)], &w).unwrap().covers(), "k0 = {k0}");
    }
    "k0 in {-2,0,2} cover the radius-3 window".into()
}

/// 8. The six Hom statements and the generic self-duality have dimension 1
/// on radius-4 windows, with the stated images and kernels.
fn c8() -> String {
    let q = integral();
    let expected = [
        ("phi-l01", "lbar=0", "lbar=1"),
        ("psi-l01", "lbar=1", "lbar=0"),
        ("phi-lge1", "lbar=1", "lbar>=2"),
        ("psi-lge1", "lbar>=2", "lbar=1"),
        ("phi-lge0", "lbar=0", "lbar>=1"),
        ("psi-lge0", "lbar>=2", "lbar in [0,1]"),
    ];
    let stmts = six_statements(&q).unwrap();
    let mut lines = Vec::new();
    for ((name, s, t, _, _), (ename, img, ker)) in stmts.into_iter().zip(expected) {
        assert_eq!(name, ename);
        let prob = HomProblem::new(s, t, Window::radius(&q, 4)).unwrap();
        let res = solve_intertwiner(&prob).unwrap();
        assert_eq!(res.dimension(), 1, "{name}");
        let (i, k) = image_kernel(&prob, &res.solutions[0]).unwrap();
        assert_eq!((i.to_string().as_str(), k.to_string().as_str()), (img, ker), "{name}");
        lines.push(name);
    }
    let p = generic();
    let prob = HomProblem::new(
        ModuleDescriptor::dual(&p, IndexSet::all()).unwrap(),
        ModuleDescriptor::plain(&p, IndexSet::all()).unwrap(),
        Window::radius(&p, 4),
    )
    .unwrap();
    let res = solve_intertwiner(&prob).unwrap();
    assert_eq!(res.dimension(), 1);
    let (i, k) = image_kernel(&prob, &res.solutions[0]).unwrap();
    assert!(i.is_full() && k.lbar == IntervalSet::empty());
    format!("{} + self-duality: dimension 1, images/kernels as stated", lines.join(", "))
}

/// 9. Closed-form families satisfy every interior equation, symbolic in mu1
/// (and mu2 for the generic family), radius 3.
fn c9() -> String {
    let mut n = 0;
    for f in Family::ALL {
        let p = if f == Family::Xabc { Params::symbolic() } else { Params::symbolic_mu1(0) };
        let prob = f.problem(&p, 3).unwrap();
        let table = f.table(&prob).unwrap();
        let eqs = prob.equations();
        let bad: Vec<_> = eqs.iter().filter(|e| !e.eval(&table).is_zero()).collect();
        assert!(bad.is_empty(), "{}: {} of {} violated", f.name(), bad.len(), eqs.len());
        n += eqs.len();
    }
    format!("5 families, {n} equations, symbolic, exact")
}

/// 10. The recurrence fails where a shifted index vanishes: kbar = 0 on the
/// e1 comparison for mu1 = 0, and the mirrored lbar = 0 on e2 for mu2 = 0.
fn c10() -> String {
    let mut found = Vec::new();
    for (p, on_k) in [(Params::ratios((0, 1), (1, 5)), true), (integral(), false)] {
        let prob = HomProblem::new(
            ModuleDescriptor::dual(&p, IndexSet::all()).unwrap(),
            ModuleDescriptor::plain(&p, IndexSet::all()).unwrap(),
            Window::radius(&p, 3),
        )
        .unwrap();
        match solve_by_recurrence(&prob, Index::new(0, 0, 0), &Scalar::one()) {
            Err(Error::ObstructionAtIndex(i)) => {
                let z = if on_k { p.kbar(i.k) } else { p.lbar(i.l) };
                assert!(z.is_zero(), "{i}");
                found.push(format!("{} at {i}", if on_k { "kbar=0" } else { "lbar=0" }));
            }
            other => panic!("no obstruction for {p}: {other:?}"),
        }
    }
    // generic parameters: no obstruction, recurrence equals the closed form
    let p = generic();
    let prob = Family::Xabc.problem(&p, 3).unwrap();
    let h = solve_by_recurrence(&prob, Index::new(0, 0, 0), &Scalar::one()).unwrap();
    assert_eq!(h.coeff(Index::new(0, 0, 1)), r(8, 15));
    for i in prob.unknowns() {
        assert_eq!(h.coeff(i), Family::Xabc.eval(i, &p).unwrap(), "{i}");
    }
    format!("{}; generic case unobstructed and equal to the closed form", found.join(", "))
}

/// Product-formula coefficient of `mu1 a1 + a a1 + b a2` in
/// `e^lambda sum_n e^{(n+mu1) a1} / ((1 - e^{-a1-a2})(1 - e^{-a2}))`:
/// the number of `p, q >= 0` with `-p - q = b - lambda_b`.
fn series_coeff(lambda_b: i64, b: i64) -> u64 {
    let t = lambda_b - b;
    if t < 0 {
        0
    } else {
        (t + 1) as u64
    }
}

/// 11. Relaxed Verma: f1 e1 eigenvalues -4/9, 8/9, -28/9 and weights at
/// mu1 = 1/3, mu2 = 0; character of Mdual on lbar >= 0 on the R = 6 cone.
fn c11() -> String {
    let q = integral();
    let cases = [
        (IndexSet::ge(0), Index::new(0, 0, 0), (0, 0), r(-4, 9)),
        (IndexSet::ge(1), Index::new(1, 1, 0), (-1, -1), r(8, 9)),
        (IndexSet::ge(2), Index::new(0, 2, 0), (0, -2), r(-28, 9)),
    ];
    for (set, i, (la, lb), ev) in cases {
        let s = SubquotientModule::dual(&q, set).unwrap();
        let v = Element::basis_vector(&q, Basis::Eta, i);
        let fe = act_subquot(&s, Generator::F1, &act_subquot(&s, Generator::E1, &v).unwrap()).unwrap();
        assert_eq!(fe, v.scaled(&ev), "f1 e1 at {i}");
        // (lambda + mu1 a1)(h1) = 2(la + mu1) - lb, (h2) = -(la + mu1) + 2 lb
        let a = &Scalar::int(la) + &q.mu1;
        let w1 = &(&Scalar::int(2) * &a) - &Scalar::int(lb);
        let w2 = &(-&a) + &Scalar::int(2 * lb);
        assert_eq!(act_cartan(&Generator::H1.into(), &v).unwrap(), v.scaled(&w1));
        assert_eq!(act_cartan(&Generator::H2.into(), &v).unwrap(), v.scaled(&w2));
        assert!(act_subquot(&s, Generator::E2, &v).unwrap().is_zero());
        assert!(act_subquot(&s, Generator::E12, &v).unwrap().is_zero());
    }
    let ch = character(&SubquotientModule::dual(&q, IndexSet::ge(0)).unwrap(), 6).unwrap();
    let mut n = 0;
    for a in -6..=6 {
        for b in -6..=0 {
            assert_eq!(ch.get(a, b), series_coeff(0, b), "weight ({a}, {b})");
            n += 1;
        }
    }
    assert_eq!(ch.entries.len(), n);
    "f1e1 = -4/9, 8/9, -28/9; weights match; character equal on 91 cone weights (R = 6)".into()
}

/// 12. The Casimir acts by one scalar on all radius-4 basis vectors in the u-
/// and w-bases; the value is reported.
fn c12() -> String {
    let p = generic();
    let w = Window::radius(&p, 4);
    let vals: Vec<Scalar> = [Basis::U, Basis::W]
        .into_iter()
        .flat_map(|b| w.indices().into_iter().map(move |i| (b, i)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(b, i)| {
            let v = Element::basis_vector(&p, *b, *i);
            let c = casimir_apply(&v).unwrap();
            let s = c.coeff(*i);
            assert_eq!(c, v.scaled(&s), "{b:?} {i}");
            s
        })
        .collect();
    assert!(vals.iter().all(|s| *s == vals[0]));
    format!("{} vectors, common scalar {}", vals.len(), vals[0])
}

/// 13. The extension of lbar=1 by lbar=0 does not split; the witness is
/// f1 w[k,1,m] having the term -w[k,0,m+1].
fn c13() -> String {
    let q = integral();
    let w = Window::radius(&q, 3);
    let rep = exact_sequence_check(&q, &w).unwrap();
    assert!(rep.pass(), "{:?}", rep.subchecks);
    let wit = rep
        .witnesses
        .iter()
        .find(|x| x.generator == Generator::F1)
        .expect("f1 witness");
    assert_eq!(wit.target, wit.index.shift(0, -1, 1));
    assert_eq!(wit.coeff, Scalar::int(-1));
    let v = Element::basis_vector(&q, Basis::W, (0, 1, 0));
    assert_eq!(act(Generator::F1, &v).unwrap().coeff(Index::new(0, 0, 1)), Scalar::int(-1));
    format!("witness {wit}")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> String); 13] = [
        ("structure constants", c1),
        ("bracket compatibility", c2),
        ("oracle equivalence", c3),
        ("basis roundtrip", c4),
        ("GT eigenvalue injectivity", c5),
        ("simplicity / closed sets", c6),
        ("cyclicity of the dual", c7),
        ("Hom dimensions", c8),
        ("closed forms", c9),
        ("obstruction", c10),
        ("relaxed Verma", c11),
        ("Casimir", c12),
        ("non-splitness", c13),
    ];
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let id = n + 1;
        if filter.is_some_and(|k| k != id) {
            continue;
        }
        let t = Instant::now();
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} [{:.1}s]", t.elapsed().as_secs_f64()),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL {id:>2} {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
