//! V-monoids: monoids carrying a compatible V-category structure.
//!
//! Compatibility is decidable two independent ways: by the translation
//! inequalities (both one-sided shifts) or by the four-index definition of
//! the operation being a V-functor. The two checkers share no code; their
//! agreement on V-categories is itself a tested equivalence.
//!
//! This module also houses the cone machinery: the cone of a V-monoid, the
//! relation reconstructed from a cone, the M-axioms and the membership test
//! for the subcategory of cone-determined V-monoids.

use crate::monoid::{monoid_hom_witness, FiniteMonoid};
use crate::quantale::Quantale;
use crate::report::{Error, Result, ValidationReport};
use crate::vcat::{tensor_relation, vfunctor_witness, VCategory, VRelation};
use std::sync::Arc;

/// Translation compatibility: `a(x, y) <= a(x + z, y + z)` and
/// `a(x, y) <= a(z + x, z + y)` for all `x, y, z`.
pub fn is_vmonoid_via_translations(m: &FiniteMonoid, a: &VRelation) -> bool {
    translation_witness(m, a).is_none()
}

/// First `(x, y, z)` violating one of the two translation inequalities.
pub fn translation_witness(m: &FiniteMonoid, a: &VRelation) -> Option<(usize, usize, usize)> {
    assert!(a.is_square());
    assert_eq!(a.rows(), m.size());
    let q = a.quantale();
    for x in m.elements() {
        for y in m.elements() {
            let v = a.get(x, y);
            for z in m.elements() {
                if !q.leq(v, a.get(m.op(x, z), m.op(y, z)))
                    || !q.leq(v, a.get(m.op(z, x), m.op(z, y)))
                {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Four-index compatibility, straight from the definition:
/// `a(x1, y1) (x) a(x2, y2) <= a(x1 + x2, y1 + y2)`.
pub fn is_vmonoid_bruteforce(m: &FiniteMonoid, a: &VRelation) -> bool {
    assert!(a.is_square());
    assert_eq!(a.rows(), m.size());
    let q = a.quantale();
    for x1 in m.elements() {
        for y1 in m.elements() {
            let v1 = a.get(x1, y1);
            for x2 in m.elements() {
                for y2 in m.elements() {
                    if !q.leq(q.tensor(v1, a.get(x2, y2)), a.get(m.op(x1, x2), m.op(y1, y2))) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Direct V-monoid test for a raw candidate relation: a V-category whose
/// monoid operation is a V-functor, all checked from first principles.
pub fn makes_vmonoid(m: &FiniteMonoid, c: &VRelation) -> bool {
    c.is_reflexive() && c.is_transitive() && is_vmonoid_bruteforce(m, c)
}

/// A monoid together with a compatible V-category on the same carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VMonoid {
    monoid: FiniteMonoid,
    relation: VCategory,
}

impl VMonoid {
    pub fn new(monoid: FiniteMonoid, relation: VCategory) -> Result<VMonoid> {
        if relation.size() != monoid.size() {
            return Err(Error::Structural(
                "relation carrier does not match monoid carrier".into(),
            ));
        }
        if let Some((x, y, z)) = translation_witness(&monoid, relation.relation()) {
            let mut report = ValidationReport::new();
            report.push(
                "operation compatibility",
                vec![x, y, z],
                "a translation inequality fails",
            );
            return Err(Error::Invalid(report));
        }
        Ok(VMonoid { monoid, relation })
    }

    /// Builds a V-monoid from a raw relation, validating the V-category
    /// laws as well as compatibility.
    pub fn from_relation(monoid: FiniteMonoid, relation: VRelation) -> Result<VMonoid> {
        VMonoid::new(monoid, VCategory::new(relation)?)
    }

    pub fn discrete(q: Arc<Quantale>, monoid: FiniteMonoid) -> VMonoid {
        let n = monoid.size();
        VMonoid {
            monoid,
            relation: VCategory::discrete(q, n),
        }
    }

    pub fn chaotic(q: Arc<Quantale>, monoid: FiniteMonoid) -> VMonoid {
        let n = monoid.size();
        VMonoid {
            monoid,
            relation: VCategory::chaotic(q, n),
        }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn relation(&self) -> &VRelation {
        self.relation.relation()
    }

    pub fn category(&self) -> &VCategory {
        &self.relation
    }

    pub fn quantale(&self) -> &Arc<Quantale> {
        self.relation.quantale()
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    /// The cone `P_a(x) = a(0, x)`.
    pub fn cone(&self) -> Cone {
        let zero = self.monoid.identity();
        Cone {
            q: self.quantale().clone(),
            vals: self
                .monoid
                .elements()
                .map(|x| self.relation().get(zero, x))
                .collect(),
        }
    }

    /// Membership in the cone-determined subcategory: the relation is
    /// recovered entrywise from its own cone.
    pub fn is_vmon_star(&self) -> bool {
        &relation_from_cone(&self.monoid, &self.cone()) == self.relation()
    }
}

/// A function from a monoid carrier into the quantale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    q: Arc<Quantale>,
    vals: Vec<usize>,
}

impl Cone {
    pub fn new(q: Arc<Quantale>, vals: Vec<usize>) -> Result<Cone> {
        if vals.iter().any(|&v| v >= q.size()) {
            return Err(Error::Structural("cone value out of range".into()));
        }
        Ok(Cone { q, vals })
    }

    pub fn quantale(&self) -> &Arc<Quantale> {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn get(&self, x: usize) -> usize {
        self.vals[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.vals
    }
}

/// The cone of a V-monoid; alias of [`VMonoid::cone`].
pub fn cone_of(vm: &VMonoid) -> Cone {
    vm.cone()
}

/// The relation `a_P(x, y) = \/ { P(w) | y = w + x }`; the empty join is
/// bottom.
pub fn relation_from_cone(m: &FiniteMonoid, p: &Cone) -> VRelation {
    assert_eq!(p.len(), m.size());
    let q = p.quantale().clone();
    VRelation::from_fn(q.clone(), m.size(), m.size(), |x, y| {
        q.join(m.elements().filter(|&w| m.op(w, x) == y).map(|w| p.get(w)))
    })
}

/// Per-axiom verdicts for M.1 through M.3, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MAxiomReport {
    pub m1: bool,
    pub m2: bool,
    pub m3: bool,
    pub witnesses: ValidationReport,
}

impl MAxiomReport {
    pub fn all(&self) -> bool {
        self.m1 && self.m2 && self.m3
    }
}

/// Checks M.1 `k <= P(0)`, M.2 `P(x) (x) P(y) <= P(x + y)` and
/// M.3 `P(x) <= \/ { P(w) | z + x = w + z }` exhaustively.
pub fn check_m_axioms(m: &FiniteMonoid, p: &Cone) -> MAxiomReport {
    assert_eq!(p.len(), m.size());
    let q = p.quantale();
    let mut witnesses = ValidationReport::new();

    let m1 = q.leq(q.unit(), p.get(m.identity()));
    if !m1 {
        witnesses.push("M.1", vec![m.identity()], "k is not below P(0)");
    }

    let mut m2 = true;
    for x in m.elements() {
        for y in m.elements() {
            if !q.leq(q.tensor(p.get(x), p.get(y)), p.get(m.op(x, y))) {
                witnesses.push("M.2", vec![x, y], "P(x) (x) P(y) is not below P(x + y)");
                m2 = false;
            }
        }
    }

    let mut m3 = true;
    for x in m.elements() {
        for z in m.elements() {
            let zx = m.op(z, x);
            let bound = q.join(
                m.elements()
                    .filter(|&w| m.op(w, z) == zx)
                    .map(|w| p.get(w)),
            );
            if !q.leq(p.get(x), bound) {
                witnesses.push("M.3", vec![x, z], "P(x) exceeds the conjugation join");
                m3 = false;
            }
        }
    }

    MAxiomReport {
        m1,
        m2,
        m3,
        witnesses,
    }
}

/// Executes the three equivalences of the cone-reconstruction
/// proposition: reflexivity of `a_P` vs M.1, transitivity vs M.2 and, on
/// V-categories, V-functoriality of the operation vs M.3. Each side is
/// computed independently; any mismatch is an implementation bug.
pub fn verify_prop4(m: &FiniteMonoid, p: &Cone) -> ValidationReport {
    let axioms = check_m_axioms(m, p);
    let a_p = relation_from_cone(m, p);
    let mut report = ValidationReport::new();

    if a_p.is_reflexive() != axioms.m1 {
        report.push(
            "prop4 reflexivity equivalence",
            p.values().to_vec(),
            format!(
                "a_P reflexive = {}, M.1 = {}",
                a_p.is_reflexive(),
                axioms.m1
            ),
        );
    }
    if a_p.is_transitive() != axioms.m2 {
        report.push(
            "prop4 transitivity equivalence",
            p.values().to_vec(),
            format!(
                "a_P transitive = {}, M.2 = {}",
                a_p.is_transitive(),
                axioms.m2
            ),
        );
    }
    if a_p.is_reflexive() && a_p.is_transitive() {
        let functorial = is_vmonoid_bruteforce(m, &a_p);
        if functorial != axioms.m3 {
            report.push(
                "prop4 functoriality equivalence",
                p.values().to_vec(),
                format!("operation V-functor = {functorial}, M.3 = {}", axioms.m3),
            );
        }
    }
    report
}

/// A morphism of V-monoids: a monoid homomorphism that is also a
/// V-functor, checked eagerly at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VMonoidHom {
    pub source: VMonoid,
    pub target: VMonoid,
    pub map: Vec<usize>,
}

impl VMonoidHom {
    pub fn new(source: VMonoid, target: VMonoid, map: Vec<usize>) -> Result<VMonoidHom> {
        if map.len() != source.size() {
            return Err(Error::Structural("hom map has wrong length".into()));
        }
        if map.iter().any(|&v| v >= target.size()) {
            return Err(Error::Structural("hom map value out of range".into()));
        }
        if source.quantale() != target.quantale() {
            return Err(Error::Structural("quantale mismatch".into()));
        }
        let mut report = ValidationReport::new();
        if let Some((a, b)) = monoid_hom_witness(source.monoid(), target.monoid(), &map) {
            report.push("monoid homomorphism", vec![a, b], "structure not preserved");
        }
        if let Some((a, b)) = vfunctor_witness(&map, source.relation(), target.relation()) {
            report.push("V-functor", vec![a, b], "a(x1,x2) not below b(f x1, f x2)");
        }
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(VMonoidHom {
            source,
            target,
            map,
        })
    }
}

/// Kernel of a V-monoid morphism: the preimage of the target identity with
/// the restricted relation, re-indexed densely. Returns the kernel and the
/// embedding of its carrier into the source. Requires a pointed quantale.
pub fn kernel(h: &VMonoidHom) -> Result<(VMonoid, Vec<usize>)> {
    let q = h.source.quantale();
    if !q.is_pointed() {
        return Err(Error::Domain(
            "kernels require a pointed quantale (k = top)".into(),
        ));
    }
    let embedding: Vec<usize> = h
        .source
        .monoid()
        .elements()
        .filter(|&x| h.map[x] == h.target.monoid().identity())
        .collect();
    let n = embedding.len();
    let src = h.source.monoid();
    let op = embedding
        .iter()
        .flat_map(|&a| {
            embedding
                .iter()
                .map(|&b| {
                    embedding
                        .iter()
                        .position(|&c| c == src.op(a, b))
                        .expect("kernel carrier is a submonoid")
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let identity = embedding
        .iter()
        .position(|&c| c == src.identity())
        .expect("identity lies in every kernel");
    let monoid = FiniteMonoid::new(n, op, identity)?;
    let rel = VRelation::from_fn(q.clone(), n, n, |i, j| {
        h.source.relation().get(embedding[i], embedding[j])
    });
    let vm = VMonoid::from_relation(monoid, rel)?;
    Ok((vm, embedding))
}

/// Tensor of a V-monoid's category with itself; used by tests exercising
/// the operation-as-V-functor formulation directly.
pub fn operation_is_vfunctor(vm: &VMonoid) -> bool {
    let squared = tensor_relation(vm.relation(), vm.relation());
    let n = vm.size();
    let f: Vec<usize> = (0..n * n)
        .map(|p| vm.monoid().op(p / n, p % n))
        .collect();
    crate::vcat::is_vfunctor(&f, &squared, vm.relation())
}
