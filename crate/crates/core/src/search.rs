//! Fixture builders and exhaustive enumerators used by tests and the
//! demo commands: named preordered monoids, all labeled monoids of a
//! given size, all compatible enrichments, all valid actions, and seeded
//! random V-categories.
//!
//! Enumerators materialize their results; keep carrier sizes desk-scale
//! (monoids up to 4 elements, relations up to 3 or 4 points) or use the
//! budgeted interval search in the extension module instead.

use crate::monoid::{FiniteMonoid, MonoidAction};
use crate::quantale::Quantale;
use crate::vcat::VRelation;
use crate::vmon::{is_vmonoid_via_translations, Cone, VMonoid};
use rand::Rng;
use std::sync::Arc;

/// `{0, ..., k}` with saturating addition and the usual order, over the
/// two-element quantale. A finite stand-in for the naturals.
pub fn saturating_vmonoid(k: usize) -> VMonoid {
    let q = Quantale::two();
    let m = FiniteMonoid::saturating(k);
    let rel = VRelation::from_fn(q, k + 1, k + 1, |x, y| (x <= y) as usize);
    VMonoid::from_relation(m, rel).expect("usual order is compatible with saturating addition")
}

/// `{0, ..., k}` with saturating addition and the dot order: `0` below
/// everything and everything below every nonzero element.
pub fn dot_vmonoid(k: usize) -> VMonoid {
    let q = Quantale::two();
    let m = FiniteMonoid::saturating(k);
    let rel = VRelation::from_fn(q, k + 1, k + 1, |x, y| (x == 0 || y != 0) as usize);
    VMonoid::from_relation(m, rel).expect("dot order is compatible with saturating addition")
}

/// Every reflexive, transitive, translation-compatible relation on the
/// carrier of `m` over the two-element quantale, by brute force over all
/// `2^(n^2)` candidate matrices.
pub fn compatible_two_relations(m: &FiniteMonoid) -> Vec<VRelation> {
    let q = Quantale::two();
    let n = m.size();
    assert!(n * n <= 25, "brute force over 2^(n^2) matrices");
    let mut out = Vec::new();
    for bits in 0u64..(1 << (n * n)) {
        let rel = VRelation::from_fn(q.clone(), n, n, |x, y| ((bits >> (x * n + y)) & 1) as usize);
        if rel.is_reflexive() && rel.is_transitive() && is_vmonoid_via_translations(m, &rel) {
            out.push(rel);
        }
    }
    out
}

/// Every compatible enrichment of `m` over an arbitrary quantale, by
/// brute force over all `|V|^(n^2)` matrices.
pub fn compatible_relations(q: &Arc<Quantale>, m: &FiniteMonoid) -> Vec<VRelation> {
    let n = m.size();
    let qs = q.size();
    let total = (qs as u128).pow((n * n) as u32);
    assert!(total <= 1 << 22, "brute force over |V|^(n^2) matrices");
    let mut out = Vec::new();
    for code in 0..total as u64 {
        let mut c = code;
        let rel = VRelation::from_fn(q.clone(), n, n, |_, _| {
            let v = (c % qs as u64) as usize;
            c /= qs as u64;
            v
        });
        if rel.is_reflexive() && rel.is_transitive() && is_vmonoid_via_translations(m, &rel) {
            out.push(rel);
        }
    }
    out
}

/// All monoid structures on `{0, ..., n-1}` with identity `0`, as
/// labeled tables. The identity row and column are forced; the remaining
/// `(n-1)^2` cells are swept and filtered by associativity.
pub fn all_monoids(n: usize) -> Vec<FiniteMonoid> {
    assert!(n >= 1 && n <= 4, "labeled enumeration is n^((n-1)^2) tables");
    let free = (n - 1) * (n - 1);
    let total = (n as u64).pow(free as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut op = vec![0usize; n * n];
        for a in 0..n {
            op[a] = a;
            op[a * n] = a;
        }
        for a in 1..n {
            for b in 1..n {
                op[a * n + b] = (c % n as u64) as usize;
                c /= n as u64;
            }
        }
        if let Ok(m) = FiniteMonoid::new(n, op, 0) {
            out.push(m);
        }
    }
    out
}

/// All action tables of `y` on `x` satisfying the four action laws.
pub fn valid_actions(y: &FiniteMonoid, x: &FiniteMonoid) -> Vec<MonoidAction> {
    let cells = y.size() * x.size();
    let total = (x.size() as u128).pow(cells as u32);
    assert!(total <= 1 << 24, "action sweep is |X|^(|Y||X|) tables");
    let mut out = Vec::new();
    for code in 0..total as u64 {
        let mut c = code;
        let table: Vec<usize> = (0..cells)
            .map(|_| {
                let v = (c % x.size() as u64) as usize;
                c /= x.size() as u64;
                v
            })
            .collect();
        let act = MonoidAction::new(y.clone(), x.clone(), table).expect("entries in range");
        if act.validate().is_valid() {
            out.push(act);
        }
    }
    out
}

/// All cones on an `n`-point carrier over `q`.
pub fn all_cones(q: &Arc<Quantale>, n: usize) -> Vec<Cone> {
    let qs = q.size();
    let total = (qs as u128).pow(n as u32);
    assert!(total <= 1 << 22, "cone sweep is |V|^n functions");
    let mut out = Vec::new();
    for code in 0..total as u64 {
        let mut c = code;
        let vals: Vec<usize> = (0..n)
            .map(|_| {
                let v = (c % qs as u64) as usize;
                c /= qs as u64;
                v
            })
            .collect();
        out.push(Cone::new(q.clone(), vals).expect("values in range"));
    }
    out
}

/// A random V-category: uniform entries followed by the reflexive and
/// transitive closure. The closure conditioning matters; raw random
/// matrices are almost never V-categories.
pub fn random_vcategory(q: &Arc<Quantale>, n: usize, rng: &mut impl Rng) -> VRelation {
    let raw = VRelation::from_fn(q.clone(), n, n, |_, _| rng.gen_range(0..q.size()));
    raw.reflexive_transitive_closure()
}

/// A random cone over `q` on an `n`-point carrier.
pub fn random_cone(q: &Arc<Quantale>, n: usize, rng: &mut impl Rng) -> Cone {
    let vals = (0..n).map(|_| rng.gen_range(0..q.size())).collect();
    Cone::new(q.clone(), vals).expect("values in range")
}
