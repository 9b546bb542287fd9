use criterion::{black_box, criterion_group, criterion_main, Criterion};

use lamnum_core::adequacy::{enumerate_closed, refute, RefuteOutcome};
use lamnum_core::numerals::{builtin, church_numeral, verify_laws};
use lamnum_core::reduction::{head_reduce, normalize, DEFAULT_FUEL};
use lamnum_core::syntax::parse;
use lamnum_core::term::Term;

fn bench_head_reduction(c: &mut Criterion) {
    let sys = builtin("nour").unwrap();
    let probe = Term::app(sys.zero_test.clone(), lamnum_core::nour_numeral(30));
    c.bench_function("head_reduce zero-test d_30", |b| {
        b.iter(|| head_reduce(black_box(&probe), DEFAULT_FUEL))
    });
}

fn bench_normalization(c: &mut Criterion) {
    // c_8 c_2 = c_256 keeps normal order busy without being huge
    let t = Term::app(church_numeral(8), church_numeral(2));
    c.bench_function("normalize church exponentiation 2^8", |b| {
        b.iter(|| normalize(black_box(&t), DEFAULT_FUEL))
    });
}

fn bench_law_verification(c: &mut Criterion) {
    let sys = builtin("nour").unwrap();
    c.bench_function("verify_laws nour bound 20", |b| {
        b.iter(|| verify_laws(black_box(&sys), 20, DEFAULT_FUEL))
    });
}

fn bench_refutation(c: &mut Criterion) {
    let sys = builtin("nour").unwrap();
    let cand = parse("\\p. p (\\x.\\y. y)").unwrap();
    c.bench_function("refute first-projection candidate", |b| {
        b.iter(|| match refute(black_box(&sys), &cand, DEFAULT_FUEL) {
            Ok(RefuteOutcome::Certificate(cert)) => cert,
            _ => panic!("expected a certificate"),
        })
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate closed terms size <= 9", |b| {
        b.iter(|| enumerate_closed(black_box(9)).count())
    });
}

criterion_group!(
    benches,
    bench_head_reduction,
    bench_normalization,
    bench_law_verification,
    bench_refutation,
    bench_enumeration
);
criterion_main!(benches);
