//! Randomized invariants over seeded generators: agreement of the two
//! compatibility checks, closure under tensor, cone round-trips, the
//! enrichment sandwich, and composition of structure-preserving maps.

use proptest::prelude::*;
use qmon_core::quantale::ChainKind;
use qmon_core::semidirect::{lex_relation, wlex_relation};
use qmon_core::vcat::{is_vfunctor, tensor_relation, VRelation};
use qmon_core::vmon::{is_vmonoid_bruteforce, is_vmonoid_via_translations, relation_from_cone, Cone};
use qmon_core::{FiniteMonoid, Quantale, VMonoid};
use std::sync::Arc;

fn quantales() -> Vec<Arc<Quantale>> {
    vec![
        Quantale::two(),
        Quantale::chain(3, ChainKind::Meet).unwrap(),
        Quantale::chain(3, ChainKind::TruncatedAddReversed).unwrap(),
    ]
}

fn monoid_fixture(i: usize) -> FiniteMonoid {
    match i % 4 {
        0 => FiniteMonoid::cyclic(2),
        1 => FiniteMonoid::cyclic(3),
        2 => FiniteMonoid::saturating(2),
        _ => FiniteMonoid::saturating(3),
    }
}

/// A V-category on `n` points built from arbitrary entries by closure.
fn closed(q: &Arc<Quantale>, n: usize, entries: &[usize]) -> VRelation {
    VRelation::from_fn(q.clone(), n, n, |x, y| entries[x * n + y] % q.size())
        .reflexive_transitive_closure()
}

/// Grows a category until both translation conditions hold, re-closing
/// after each sweep. The entries only increase, so this terminates.
fn compatible_closure(m: &FiniteMonoid, mut rel: VRelation) -> VRelation {
    let q = rel.quantale().clone();
    let n = m.size();
    loop {
        let mut next = rel.clone();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for (u, v) in [(m.op(x, z), m.op(y, z)), (m.op(z, x), m.op(z, y))] {
                        let joined = q.join2(next.get(u, v), rel.get(x, y));
                        next.set(u, v, joined);
                    }
                }
            }
        }
        let next = next.reflexive_transitive_closure();
        if next == rel {
            assert!(is_vmonoid_via_translations(m, &rel));
            return rel;
        }
        rel = next;
    }
}

proptest! {
    #[test]
    fn translation_check_agrees_with_brute_force(
        qi in 0usize..3,
        mi in 0usize..4,
        entries in proptest::collection::vec(0usize..3, 16),
    ) {
        let q = quantales()[qi].clone();
        let m = monoid_fixture(mi);
        let n = m.size();
        let rel = closed(&q, n, &entries);
        prop_assert_eq!(
            is_vmonoid_via_translations(&m, &rel),
            is_vmonoid_bruteforce(&m, &rel)
        );
    }

    #[test]
    fn tensor_of_categories_is_a_category(
        qi in 0usize..3,
        ea in proptest::collection::vec(0usize..3, 9),
        eb in proptest::collection::vec(0usize..3, 9),
    ) {
        let q = quantales()[qi].clone();
        let a = closed(&q, 3, &ea);
        let b = closed(&q, 3, &eb);
        let t = tensor_relation(&a, &b);
        prop_assert!(t.is_reflexive());
        prop_assert!(t.is_transitive());
    }

    #[test]
    fn cone_of_cone_relation_is_the_cone(
        qi in 0usize..3,
        mi in 0usize..4,
        vals in proptest::collection::vec(0usize..3, 4),
    ) {
        let q = quantales()[qi].clone();
        let m = monoid_fixture(mi);
        let vals: Vec<usize> = (0..m.size()).map(|i| vals[i] % q.size()).collect();
        let cone = Cone::new(q, vals.clone()).unwrap();
        let rel = relation_from_cone(&m, &cone);
        let back: Vec<usize> = m.elements().map(|x| rel.get(m.identity(), x)).collect();
        prop_assert_eq!(back, vals);
    }

    #[test]
    fn enrichment_sandwich_tensor_lex_wlex(
        qi in 0usize..3,
        ea in proptest::collection::vec(0usize..3, 9),
        eb in proptest::collection::vec(0usize..3, 9),
    ) {
        let q = quantales()[qi].clone();
        let xm = FiniteMonoid::saturating(2);
        let ym = FiniteMonoid::cyclic(3);
        let a = compatible_closure(&xm, closed(&q, 3, &ea));
        let b = compatible_closure(&ym, closed(&q, 3, &eb));
        let x = VMonoid::from_relation(xm, a.clone()).unwrap();
        let y = VMonoid::from_relation(ym, b.clone()).unwrap();
        let tensor = tensor_relation(&a, &b);
        let lex = lex_relation(&x, &y);
        let wlex = wlex_relation(&x, &y);
        prop_assert!(tensor.entrywise_leq(&lex));
        prop_assert!(lex.entrywise_leq(&wlex));
    }

    #[test]
    fn pushforward_functors_compose(
        qi in 0usize..3,
        ea in proptest::collection::vec(0usize..3, 16),
        f in proptest::collection::vec(0usize..3, 4),
        g in proptest::collection::vec(0usize..4, 3),
    ) {
        let q = quantales()[qi].clone();
        let a = closed(&q, 4, &ea);
        // Pushforward along f: the smallest category on the target making
        // f structure-preserving.
        let push = |src: &VRelation, map: &[usize], n: usize| {
            VRelation::from_fn(q.clone(), n, n, |u, v| {
                src.quantale().join((0..src.rows()).flat_map(|x| {
                    (0..src.rows())
                        .filter(move |&y| map[x] == u && map[y] == v)
                        .map(move |y| src.get(x, y))
                }))
            })
            .reflexive_transitive_closure()
        };
        let b = push(&a, &f, 3);
        let c = push(&b, &g, 4);
        prop_assert!(is_vfunctor(&f, &a, &b));
        prop_assert!(is_vfunctor(&g, &b, &c));
        let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
        prop_assert!(is_vfunctor(&gf, &a, &c));
    }
}
