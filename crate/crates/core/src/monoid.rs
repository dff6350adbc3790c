//! Finite monoids, homomorphisms, actions and the underlying semidirect
//! product of monoids.

use crate::report::{Error, Result, ValidationReport};
use serde_json::json;

/// A finite monoid as a multiplication table with a distinguished identity.
/// Elements are dense indices `0..n`; names live in the DSL layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    n: usize,
    op: Vec<usize>, // row-major: op[a * n + b]
    identity: usize,
}

/// Reports associativity/identity violations of a candidate table.
pub fn validate_monoid(n: usize, op: &[usize], identity: usize) -> Result<ValidationReport> {
    if n == 0 {
        return Err(Error::Structural("empty carrier".into()));
    }
    if op.len() != n * n {
        return Err(Error::Structural(format!(
            "operation table has {} entries, expected {}",
            op.len(),
            n * n
        )));
    }
    if let Some(v) = op.iter().find(|&&v| v >= n) {
        return Err(Error::Structural(format!("table entry {v} out of range")));
    }
    if identity >= n {
        return Err(Error::Structural(format!("identity {identity} out of range")));
    }
    let mut report = ValidationReport::new();
    for a in 0..n {
        if op[identity * n + a] != a {
            report.push("left identity", vec![a], "1 * a != a");
        }
        if op[a * n + identity] != a {
            report.push("right identity", vec![a], "a * 1 != a");
        }
        for b in 0..n {
            for c in 0..n {
                if op[op[a * n + b] * n + c] != op[a * n + op[b * n + c]] {
                    report.push("associativity", vec![a, b, c], "(a b) c != a (b c)");
                }
            }
        }
    }
    Ok(report)
}

impl FiniteMonoid {
    pub fn new(n: usize, op: Vec<usize>, identity: usize) -> Result<FiniteMonoid> {
        let report = validate_monoid(n, &op, identity)?;
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(FiniteMonoid { n, op, identity })
    }

    /// The one-element monoid.
    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid {
            n: 1,
            op: vec![0],
            identity: 0,
        }
    }

    /// The cyclic group Z_n with addition mod n; identity 0.
    pub fn cyclic(n: usize) -> FiniteMonoid {
        assert!(n > 0);
        let op = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        FiniteMonoid { n, op, identity: 0 }
    }

    /// Saturating addition on `{0, ..., k}`: `a + b = min(a + b, k)`.
    /// A finite stand-in for the additive monoid of natural numbers.
    pub fn saturating(k: usize) -> FiniteMonoid {
        let n = k + 1;
        let op = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b).min(k)))
            .collect();
        FiniteMonoid { n, op, identity: 0 }
    }

    pub fn direct_product(x: &FiniteMonoid, y: &FiniteMonoid) -> FiniteMonoid {
        let n = x.n * y.n;
        let mut op = vec![0usize; n * n];
        for x1 in 0..x.n {
            for y1 in 0..y.n {
                for x2 in 0..x.n {
                    for y2 in 0..y.n {
                        let p = x1 * y.n + y1;
                        let q = x2 * y.n + y2;
                        op[p * n + q] = x.op(x1, x2) * y.n + y.op(y1, y2);
                    }
                }
            }
        }
        FiniteMonoid {
            n,
            op,
            identity: x.identity * y.n + y.identity,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// True iff every element has a two-sided inverse.
    pub fn is_group(&self) -> bool {
        self.elements().all(|a| {
            self.elements()
                .any(|b| self.op(a, b) == self.identity && self.op(b, a) == self.identity)
        })
    }

    /// Inverse of `a`, if it exists.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&b| self.op(a, b) == self.identity && self.op(b, a) == self.identity)
    }

    /// `subset` given as a membership mask over the carrier.
    pub fn is_submonoid(&self, subset: &[bool]) -> bool {
        assert_eq!(subset.len(), self.n);
        subset[self.identity]
            && self.elements().all(|a| {
                !subset[a]
                    || self
                        .elements()
                        .all(|b| !subset[b] || subset[self.op(a, b)])
            })
    }

    /// A right normal submonoid: `z + P` is contained in `P + z` for all z.
    pub fn is_right_normal_submonoid(&self, subset: &[bool]) -> bool {
        self.right_normality_witness(subset).is_none() && self.is_submonoid(subset)
    }

    /// First `(z, p)` in scan order with `z + p` not of the form `w + z`
    /// for any `w` in the subset.
    pub fn right_normality_witness(&self, subset: &[bool]) -> Option<(usize, usize)> {
        assert_eq!(subset.len(), self.n);
        for z in self.elements() {
            for p in self.elements().filter(|&p| subset[p]) {
                let zp = self.op(z, p);
                if !self
                    .elements()
                    .any(|w| subset[w] && self.op(w, z) == zp)
                {
                    return Some((z, p));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "size": self.n,
            "op": (0..self.n)
                .map(|a| (0..self.n).map(|b| self.op(a, b)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "identity": self.identity,
        })
    }
}

/// True iff `map` is a monoid homomorphism from `src` to `tgt`.
pub fn is_monoid_hom(src: &FiniteMonoid, tgt: &FiniteMonoid, map: &[usize]) -> bool {
    monoid_hom_witness(src, tgt, map).is_none()
}

/// First witness that `map` fails to be a homomorphism: `(a, a)` for the
/// identity law, `(a, b)` for the operation law.
pub fn monoid_hom_witness(
    src: &FiniteMonoid,
    tgt: &FiniteMonoid,
    map: &[usize],
) -> Option<(usize, usize)> {
    assert_eq!(map.len(), src.size());
    assert!(map.iter().all(|&v| v < tgt.size()));
    if map[src.identity()] != tgt.identity() {
        return Some((src.identity(), src.identity()));
    }
    for a in src.elements() {
        for b in src.elements() {
            if map[src.op(a, b)] != tgt.op(map[a], map[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A monoid homomorphism, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub map: Vec<usize>,
}

impl MonoidHom {
    pub fn new(source: FiniteMonoid, target: FiniteMonoid, map: Vec<usize>) -> Result<MonoidHom> {
        if map.len() != source.size() {
            return Err(Error::Structural("hom map has wrong length".into()));
        }
        if map.iter().any(|&v| v >= target.size()) {
            return Err(Error::Structural("hom map value out of range".into()));
        }
        if let Some((a, b)) = monoid_hom_witness(&source, &target, &map) {
            let mut report = ValidationReport::new();
            report.push("homomorphism", vec![a, b], "map does not preserve structure");
            return Err(Error::Invalid(report));
        }
        Ok(MonoidHom {
            source,
            target,
            map,
        })
    }
}

/// An action table `alpha: Y x X -> X` of a monoid `Y` on a monoid `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidAction {
    y: FiniteMonoid,
    x: FiniteMonoid,
    table: Vec<usize>, // table[yi * |X| + xi]
}

impl MonoidAction {
    pub fn new(y: FiniteMonoid, x: FiniteMonoid, table: Vec<usize>) -> Result<MonoidAction> {
        if table.len() != y.size() * x.size() {
            return Err(Error::Structural(format!(
                "action table has {} entries, expected {}",
                table.len(),
                y.size() * x.size()
            )));
        }
        if table.iter().any(|&v| v >= x.size()) {
            return Err(Error::Structural("action table entry out of range".into()));
        }
        Ok(MonoidAction { y, x, table })
    }

    /// The trivial action `alpha(y, x) = x`.
    pub fn trivial(y: FiniteMonoid, x: FiniteMonoid) -> MonoidAction {
        let table = (0..y.size())
            .flat_map(|_| 0..x.size())
            .collect();
        MonoidAction { y, x, table }
    }

    /// Z_2 acting on Z_n by inversion.
    pub fn inversion(n: usize) -> MonoidAction {
        let y = FiniteMonoid::cyclic(2);
        let x = FiniteMonoid::cyclic(n);
        let table = (0..2)
            .flat_map(|yi| (0..n).map(move |xi| if yi == 0 { xi } else { (n - xi) % n }))
            .collect();
        MonoidAction { y, x, table }
    }

    pub fn acting(&self) -> &FiniteMonoid {
        &self.y
    }

    pub fn acted(&self) -> &FiniteMonoid {
        &self.x
    }

    pub fn act(&self, y: usize, x: usize) -> usize {
        self.table[y * self.x.size() + x]
    }

    /// Checks the four action laws directly: unitality, multiplicativity
    /// in Y, and that each translation is a monoid endomorphism of X.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let one = self.y.identity();
        let zero = self.x.identity();
        for x in self.x.elements() {
            if self.act(one, x) != x {
                report.push("action unit law", vec![x], "alpha(1, x) != x");
            }
        }
        for y1 in self.y.elements() {
            for y2 in self.y.elements() {
                for x in self.x.elements() {
                    if self.act(self.y.op(y1, y2), x) != self.act(y1, self.act(y2, x)) {
                        report.push(
                            "action multiplicativity",
                            vec![y1, y2, x],
                            "alpha(y1 y2, x) != alpha(y1, alpha(y2, x))",
                        );
                    }
                }
            }
        }
        for y in self.y.elements() {
            if self.act(y, zero) != zero {
                report.push("action preserves zero", vec![y], "alpha(y, 0) != 0");
            }
            for x1 in self.x.elements() {
                for x2 in self.x.elements() {
                    if self.act(y, self.x.op(x1, x2)) != self.x.op(self.act(y, x1), self.act(y, x2))
                    {
                        report.push(
                            "action additivity",
                            vec![y, x1, x2],
                            "alpha(y, x1 + x2) != alpha(y, x1) + alpha(y, x2)",
                        );
                    }
                }
            }
        }
        report
    }

    /// Independent oracle for `validate`: the table is an action exactly
    /// when the semidirect operation on X x Y forms a monoid.
    pub fn validate_via_semidirect(&self) -> ValidationReport {
        let (n, op, identity) = self.raw_semidirect_table();
        validate_monoid(n, &op, identity).expect("table is square by construction")
    }

    fn raw_semidirect_table(&self) -> (usize, Vec<usize>, usize) {
        let (nx, ny) = (self.x.size(), self.y.size());
        let n = nx * ny;
        let mut op = vec![0usize; n * n];
        for x1 in 0..nx {
            for y1 in 0..ny {
                for x2 in 0..nx {
                    for y2 in 0..ny {
                        let p = x1 * ny + y1;
                        let q = x2 * ny + y2;
                        op[p * n + q] =
                            self.x.op(x1, self.act(y1, x2)) * ny + self.y.op(y1, y2);
                    }
                }
            }
        }
        (n, op, self.x.identity() * ny + self.y.identity())
    }

    /// The semidirect product monoid on `X x Y` with operation
    /// `(x1, y1) (x2, y2) = (x1 + alpha(y1, x2), y1 y2)`. Pairs are indexed
    /// by `x * |Y| + y`. Refused when the action laws fail.
    pub fn semidirect(&self) -> Result<FiniteMonoid> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let (n, op, identity) = self.raw_semidirect_table();
        Ok(FiniteMonoid { n, op, identity })
    }

    pub fn pair_index(&self, x: usize, y: usize) -> usize {
        x * self.y.size() + y
    }

    pub fn unpair(&self, p: usize) -> (usize, usize) {
        (p / self.y.size(), p % self.y.size())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "acting": self.y.to_json(),
            "acted": self.x.to_json(),
            "table": (0..self.y.size())
                .map(|y| (0..self.x.size()).map(|x| self.act(y, x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_z2_are_valid() {
        assert!(validate_monoid(1, &[0], 0).unwrap().is_valid());
        let z2 = FiniteMonoid::cyclic(2);
        assert!(validate_monoid(2, &[0, 1, 1, 0], 0).unwrap().is_valid());
        assert!(z2.is_group());
    }

    #[test]
    fn perturbed_z2_reports_associativity_witness() {
        // Flipping the free cell of a 2-element table still yields a
        // monoid (the OR monoid), so associativity needs 3 elements:
        // (1*1)*1 = 2*1 = 1 but 1*(1*1) = 1*2 = 0 below.
        let report = validate_monoid(2, &[0, 1, 1, 1], 0).unwrap();
        assert!(report.is_valid());
        let report = validate_monoid(3, &[0, 1, 2, 1, 2, 0, 2, 1, 0], 0).unwrap();
        assert!(report.violates("associativity"));
    }

    #[test]
    fn saturating_monoid_is_not_a_group() {
        let m = FiniteMonoid::saturating(3);
        assert!(!m.is_group());
        assert!(m.inverse(1).is_none());
        assert!(FiniteMonoid::trivial().is_group());
    }

    #[test]
    fn trivial_action_is_valid_for_any_pair() {
        for x in [FiniteMonoid::cyclic(3), FiniteMonoid::saturating(2)] {
            let a = MonoidAction::trivial(FiniteMonoid::cyclic(2), x);
            assert!(a.validate().is_valid());
            assert!(a.validate_via_semidirect().is_valid());
        }
    }

    #[test]
    fn inversion_action_is_valid_both_ways() {
        let a = MonoidAction::inversion(3);
        assert!(a.validate().is_valid());
        assert!(a.validate_via_semidirect().is_valid());
    }

    #[test]
    fn collapsing_action_verdicts_agree() {
        // alpha(y, x) = 0 for y != 1 on X = Z_2: kills additivity oracle?
        // Both checkers must return the same verdict, whatever it is.
        let y = FiniteMonoid::cyclic(2);
        let x = FiniteMonoid::cyclic(2);
        let a = MonoidAction::new(y, x, vec![0, 1, 0, 0]).unwrap();
        assert_eq!(
            a.validate().is_valid(),
            a.validate_via_semidirect().is_valid()
        );
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct_product() {
        let x = FiniteMonoid::cyclic(2);
        let y = FiniteMonoid::cyclic(3);
        let a = MonoidAction::trivial(y.clone(), x.clone());
        let sd = a.semidirect().unwrap();
        let dp = FiniteMonoid::direct_product(&x, &y);
        assert_eq!(sd, dp);
    }

    #[test]
    fn action_recovery_identity() {
        // (0, y) * (x, 1) = (alpha(y, x), y)
        let a = MonoidAction::inversion(3);
        let sd = a.semidirect().unwrap();
        let zero = a.acted().identity();
        let one = a.acting().identity();
        for y in a.acting().elements() {
            for x in a.acted().elements() {
                let lhs = sd.op(a.pair_index(zero, y), a.pair_index(x, one));
                assert_eq!(lhs, a.pair_index(a.act(y, x), y));
            }
        }
    }

    #[test]
    fn z2_semidirect_z2_by_inversion_is_klein_like() {
        // Inversion on Z_2 is trivial, so this is the direct product table.
        let a = MonoidAction::inversion(2);
        let sd = a.semidirect().unwrap();
        let dp = FiniteMonoid::direct_product(&FiniteMonoid::cyclic(2), &FiniteMonoid::cyclic(2));
        assert_eq!(sd, dp);
        assert!(sd.is_group());
        // Every element is its own inverse.
        for g in sd.elements() {
            assert_eq!(sd.op(g, g), sd.identity());
        }
    }

    #[test]
    fn invalid_action_refused_by_semidirect() {
        // alpha(1, x) = 0 breaks the unit law.
        let y = FiniteMonoid::cyclic(2);
        let x = FiniteMonoid::cyclic(2);
        let a = MonoidAction::new(y, x, vec![0, 0, 0, 0]).unwrap();
        assert!(matches!(a.semidirect(), Err(Error::Invalid(_))));
    }

    /// A 6-element transformation monoid: all maps {0,1,2} -> {0,1,2}
    /// generated by a 3-cycle and a constant map, restricted to a small
    /// closed set. Used to exhibit a non-right-normal submonoid.
    fn transformation_monoid() -> (FiniteMonoid, Vec<[usize; 3]>) {
        // Functions on 3 points, composition f * g = f after g.
        let mut fns: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 0, 0]];
        // Close under composition.
        loop {
            let mut added = false;
            let snapshot = fns.clone();
            for f in &snapshot {
                for g in &snapshot {
                    let h = [f[g[0]], f[g[1]], f[g[2]]];
                    if !fns.contains(&h) {
                        fns.push(h);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let n = fns.len();
        let op = fns
            .iter()
            .flat_map(|f| {
                fns.iter()
                    .map(|g| {
                        let h = [f[g[0]], f[g[1]], f[g[2]]];
                        fns.iter().position(|k| *k == h).unwrap()
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        (FiniteMonoid { n, op, identity: 0 }, fns)
    }

    #[test]
    fn right_normality_in_commutative_monoids_and_counterexample() {
        let m = FiniteMonoid::saturating(3);
        // Any submonoid of a commutative monoid is right normal.
        assert!(m.is_right_normal_submonoid(&[true, false, true, true]));
        let whole = vec![true; 4];
        assert!(m.is_right_normal_submonoid(&whole));

        let (t, fns) = transformation_monoid();
        assert_eq!(t.size(), 6);
        assert!(validate_monoid(t.size(), &t.op, 0).unwrap().is_valid());
        // The submonoid {id, constant-0} is not right normal: composing
        // with the 3-cycle on the left lands outside constant-0 after id.
        let mut subset = vec![false; t.size()];
        subset[0] = true;
        let c0 = fns.iter().position(|f| *f == [0, 0, 0]).unwrap();
        subset[c0] = true;
        assert!(t.is_submonoid(&subset));
        assert!(!t.is_right_normal_submonoid(&subset));
        assert!(t.right_normality_witness(&subset).is_some());
    }
}
