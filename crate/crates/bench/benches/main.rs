use criterion::{black_box, criterion_group, criterion_main, Criterion};

use colcomp::composition::enumerate_compositions;
use colcomp::descent::{chain_of_permutation, permutation_of_chain};
use colcomp::poset::{down_covers, interval, maximal_chains, up_covers};
use colcomp::qsym::{fundamental_polynomial, verify_pieri};
use colcomp::shelling::{lower_mobius_table, mobius_recursive, mobius_via_labels};
use colcomp::ColoredPermutation;
use colcomp_bench::{bench_bottom, bench_top};

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate m=3 n=7", |b| {
        b.iter(|| enumerate_compositions(black_box(3), black_box(7)).unwrap())
    });
}

fn bench_covers(c: &mut Criterion) {
    let rank = enumerate_compositions(2, 6).unwrap();
    c.bench_function("up_covers over rank 6 (m=2)", |b| {
        b.iter(|| {
            rank.iter()
                .map(|alpha| up_covers(black_box(alpha)).len())
                .sum::<usize>()
        })
    });
    let next = enumerate_compositions(2, 7).unwrap();
    c.bench_function("down_covers over rank 7 (m=2)", |b| {
        b.iter(|| {
            next.iter()
                .map(|beta| down_covers(black_box(beta)).len())
                .sum::<usize>()
        })
    });
}

fn bench_chains(c: &mut Criterion) {
    let iv = interval(&bench_bottom(), &bench_top()).unwrap();
    c.bench_function("maximal_chains of the golden interval", |b| {
        b.iter(|| maximal_chains(black_box(&iv)).len())
    });

    let u = ColoredPermutation::parse("2c1,1c0,7c0,6c1,3c1,4c1,5c0,8c0", 2).unwrap();
    c.bench_function("bijection round trip n=8", |b| {
        b.iter(|| {
            let chain = chain_of_permutation(black_box(&u));
            permutation_of_chain(&chain).unwrap()
        })
    });
}

fn bench_mobius(c: &mut Criterion) {
    let (bottom, top) = (bench_bottom(), bench_top());
    c.bench_function("mobius_via_labels on the golden interval", |b| {
        b.iter(|| mobius_via_labels(black_box(&bottom), black_box(&top)).unwrap())
    });
    c.bench_function("mobius_recursive on the golden interval", |b| {
        b.iter(|| mobius_recursive(black_box(&bottom), black_box(&top)).unwrap())
    });
    c.bench_function("lower_mobius_table m=2 n=5", |b| {
        b.iter(|| lower_mobius_table(black_box(2), black_box(5)).unwrap())
    });
}

fn bench_qsym(c: &mut Criterion) {
    let alpha = colcomp::ColoredComposition::parse("1c0,2c1,1c0", 2).unwrap();
    c.bench_function("fundamental_polynomial weight 4 at N=6", |b| {
        b.iter(|| fundamental_polynomial(black_box(&alpha), black_box(6)).unwrap())
    });
    c.bench_function("verify_pieri weight 4 at N=5", |b| {
        b.iter(|| verify_pieri(black_box(&alpha), black_box(5)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_covers,
    bench_chains,
    bench_mobius,
    bench_qsym
);
criterion_main!(benches);
