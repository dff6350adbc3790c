use criterion::{criterion_group, criterion_main, Criterion};
use qmon_core::schreier::enumerate_enrichments;
use qmon_core::search::{dot_vmonoid, saturating_vmonoid};
use qmon_core::semidirect::{lemma3_wlex_transitive, lemma4_lex_transitive};
use qmon_core::MonoidAction;

fn bench_enumerate(c: &mut Criterion) {
    let x = saturating_vmonoid(2);
    let y = dot_vmonoid(2);
    let act = MonoidAction::trivial(y.monoid().clone(), x.monoid().clone());
    c.bench_function("enumerate_enrichments 3x3", |b| {
        b.iter(|| enumerate_enrichments(&x, &y, &act, 1 << 24).unwrap().len())
    });
}

fn bench_lemmas(c: &mut Criterion) {
    let x = saturating_vmonoid(4);
    let y = dot_vmonoid(4);
    c.bench_function("lex/wlex transitivity criteria 5x5", |b| {
        b.iter(|| {
            let l3 = lemma3_wlex_transitive(&x, &y);
            let l4 = lemma4_lex_transitive(&x, &y);
            (l3.agree(), l4.agree())
        })
    });
}

criterion_group!(benches, bench_enumerate, bench_lemmas);
criterion_main!(benches);
