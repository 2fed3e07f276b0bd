use criterion::{black_box, criterion_group, criterion_main, Criterion};

use eidos_core::rational::ratio;
use eidos_core::{
    canonical_form, entropy_decomposition, parse_eidostate, reachable, search_derivation,
    tune_context, Declarations, Eidostate,
};

fn e(text: &str) -> Eidostate {
    parse_eidostate(text, &Declarations::new()).unwrap()
}

fn canon(c: &mut Criterion) {
    let x = e("{(b2+(h+r1)),(b3+r0),((h+t)+(b1+r2))}");
    c.bench_function("canonical_form", |b| {
        b.iter(|| canonical_form(black_box(&x)).unwrap())
    });
}

fn decide(c: &mut Criterion) {
    let (x, y) = (e("{(b2+h),(b3+r0)}"), e("{(b3+h),(b4+r1)}"));
    c.bench_function("reachable", |b| {
        b.iter(|| reachable(black_box(&x), black_box(&y)))
    });
}

fn search(c: &mut Criterion) {
    let (x, y) = (e("{(h+r0)}"), e("{(h+r0),(t+r1)}"));
    c.bench_function("search_derivation", |b| {
        b.iter(|| search_derivation(black_box(&x), black_box(&y), 12).unwrap())
    });
}

fn measure(c: &mut Criterion) {
    let x = e("{(b3+h),(b2+(h+t)),((h+t)+(t+h)),(b4+r0)}");
    c.bench_function("entropy_decomposition", |b| {
        b.iter(|| entropy_decomposition(black_box(&x)))
    });
    let y = e("{h,t,b1}");
    let target = [ratio(1, 7), ratio(2, 7), ratio(4, 7)];
    c.bench_function("tune_context", |b| {
        b.iter(|| tune_context(black_box(&y), black_box(&target)).unwrap())
    });
}

criterion_group!(benches, canon, decide, search, measure);
criterion_main!(benches);
