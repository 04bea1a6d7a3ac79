use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gtsl3::explorer::generate;
use gtsl3::gtmodule::{act, u_to_w, w_to_u};
use gtsl3::hom::solve_intertwiner;
use gtsl3::{Basis, Element, Generator, HomProblem, Index, IndexSet, ModuleDescriptor, Params, Scalar, SubquotientModule, Window};

fn sample(p: &Params, basis: Basis) -> Element {
    Element::from_terms(
        p,
        basis,
        [
            (Index::new(2, -1, 3), Scalar::ratio(3, 2)),
            (Index::new(0, 0, 1), Scalar::int(-1)),
            (Index::new(-1, 2, 0), Scalar::ratio(1, 7)),
        ],
    )
}

fn actions(c: &mut Criterion) {
    let p = Params::ratios((1, 3), (1, 5));
    let s = Params::symbolic();
    for (name, basis) in [("u", Basis::U), ("w", Basis::W), ("eta", Basis::Eta)] {
        let v = sample(&p, basis);
        c.bench_function(&format!("act all generators ({name})"), |b| {
            b.iter(|| {
                for g in Generator::ALL {
                    black_box(act(g, &v).unwrap());
                }
            })
        });
    }
    let vs = sample(&s, Basis::W);
    c.bench_function("act f12 (w, symbolic)", |b| b.iter(|| black_box(act(Generator::F12, &vs).unwrap())));
    let w = Element::basis_vector(&s, Basis::W, (2, -1, 4));
    c.bench_function("w -> u -> w (symbolic, m = 4)", |b| b.iter(|| black_box(u_to_w(&w_to_u(&w).unwrap()).unwrap())));
}

fn solvers(c: &mut Criterion) {
    let q = Params::ratios((1, 3), (0, 1));
    let prob = HomProblem::new(
        ModuleDescriptor::dual(&q, IndexSet::range(0, 1)).unwrap(),
        ModuleDescriptor::plain(&q, IndexSet::range(0, 1)).unwrap(),
        Window::radius(&q, 3),
    )
    .unwrap();
    c.bench_function("hom dual:l01 -> l01, radius 3", |b| b.iter(|| black_box(solve_intertwiner(&prob).unwrap())));

    let p = Params::ratios((1, 3), (1, 5));
    let m = SubquotientModule::plain(&p, IndexSet::all()).unwrap();
    let win = Window::radius(&p, 3);
    c.bench_function("generate full M, radius 3", |b| {
        b.iter(|| black_box(generate(&[Index::new(2, -1, 3)], &m, &win).unwrap()))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = actions, solvers
}
criterion_main!(benches);
