//! The two-element-quantale instantiation: preordered monoids, cones as
//! subsets, subset-form enriched actions (B-axioms), preordered actions
//! with a fixed-point function (A-axioms), the correspondence between the
//! two, right-normal-monomorphism Schreier diagrams, and the two worked
//! examples exposed by the CLI as demos.

use crate::monoid::{monoid_hom_witness, FiniteMonoid, MonoidAction};
use crate::quantale::Quantale;
use crate::report::{Error, Result, ValidationReport};
use crate::schreier::{
    find_q, is_u_schreier_extension, normalized_candidate, EnrichedAction, QSearch,
    SplitExtensionCandidate,
};
use crate::semidirect::{lemma3_wlex_transitive, lex_relation, wlex_relation};
use crate::vcat::VRelation;
use crate::vmon::{makes_vmonoid, relation_from_cone, Cone, VMonoid};
use serde_json::json;
use std::fmt;
use std::sync::Arc;

fn assert_two(q: &Arc<Quantale>) {
    assert_eq!(q, &Quantale::two(), "this module works over the two-element quantale");
}

/// The preorder generated by a subset cone: `x <= y` iff `y = w + x` for
/// some member `w`.
pub fn cone_to_preorder(m: &FiniteMonoid, members: &[bool]) -> VRelation {
    assert_eq!(members.len(), m.size());
    let cone = Cone::new(
        Quantale::two(),
        members.iter().map(|&b| b as usize).collect(),
    )
    .expect("bits are quantale elements");
    relation_from_cone(m, &cone)
}

/// The positive cone of a preorder: elements above the identity.
pub fn preorder_to_cone(m: &FiniteMonoid, rel: &VRelation) -> Vec<bool> {
    assert_two(rel.quantale());
    assert_eq!(rel.rows(), m.size());
    m.elements().map(|x| rel.get(m.identity(), x) == 1).collect()
}

/// A monoid action with a member subset of `X x Y`, indexed by
/// `x * |Y| + y`. The intended domain is `X x P_Y`; membership outside
/// it is a reported violation, not a construction error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEnrichedAction {
    pub action: MonoidAction,
    pub subset: Vec<bool>,
}

impl TwoEnrichedAction {
    pub fn member(&self, x: usize, y: usize) -> bool {
        self.subset[self.action.pair_index(x, y)]
    }

    /// The same data as a quantale-valued function.
    pub fn to_enriched(&self) -> EnrichedAction {
        EnrichedAction {
            action: self.action.clone(),
            p: self.subset.iter().map(|&b| b as usize).collect(),
        }
    }
}

/// Checks the subset-form axioms: the domain condition and B.0 to B.4.
pub fn check_b_axioms(x: &VMonoid, y: &VMonoid, ta: &TwoEnrichedAction) -> ValidationReport {
    assert_two(x.quantale());
    assert_two(y.quantale());
    assert_eq!(ta.action.acted(), x.monoid());
    assert_eq!(ta.action.acting(), y.monoid());
    let (xm, ym) = (x.monoid(), y.monoid());
    let p_x: Vec<bool> = x.cone().values().iter().map(|&v| v == 1).collect();
    let p_y: Vec<bool> = y.cone().values().iter().map(|&v| v == 1).collect();
    let one = ym.identity();
    let zero = xm.identity();
    let mut report = ValidationReport::new();

    for xv in xm.elements() {
        for yv in ym.elements() {
            if ta.member(xv, yv) && !p_y[yv] {
                report.push("domain", vec![xv, yv], "member outside X x P_Y");
            }
        }
    }
    for xv in xm.elements() {
        if ta.member(xv, one) && !p_x[xv] {
            report.push("B.0", vec![xv], "(x, 1) in P but x not positive");
        }
    }
    for yv in ym.elements().filter(|&yv| p_y[yv]) {
        if !ta.member(zero, yv) {
            report.push("B.1", vec![yv], "(0, y) missing for positive y");
        }
    }
    for xv in xm.elements().filter(|&xv| p_x[xv]) {
        if !ta.member(xv, one) {
            report.push("B.2", vec![xv], "(x, 1) missing for positive x");
        }
    }
    for xv in xm.elements() {
        for yv in ym.elements() {
            if !ta.member(xv, yv) {
                continue;
            }
            for xp in xm.elements() {
                for yp in ym.elements() {
                    if ta.member(xp, yp)
                        && !ta.member(xm.op(xv, ta.action.act(yv, xp)), ym.op(yv, yp))
                    {
                        report.push("B.3", vec![xv, yv, xp, yp], "P not closed under the product");
                    }
                }
            }
        }
    }
    for xv in xm.elements() {
        for yv in ym.elements() {
            if !ta.member(xv, yv) {
                continue;
            }
            for x0 in xm.elements() {
                for y0 in ym.elements() {
                    let lhs_x = xm.op(x0, ta.action.act(y0, xv));
                    let lhs_y = ym.op(y0, yv);
                    let exists = xm.elements().any(|xp| {
                        ym.elements().any(|yp| {
                            ta.member(xp, yp)
                                && xm.op(xp, ta.action.act(yp, x0)) == lhs_x
                                && ym.op(yp, y0) == lhs_y
                        })
                    });
                    if !exists {
                        report.push("B.4", vec![xv, yv, x0, y0], "no matching member exists");
                    }
                }
            }
        }
    }
    report
}

/// The subset-form axioms are a transcription of the quantale-valued
/// ones: the domain condition matches E.0, B.1 matches E.1, B.0 with
/// B.2 matches E.2, and B.3 / B.4 match E.3 / E.4. Both sides are
/// computed by unrelated code; this returns their agreement.
pub fn b_axioms_equal_e_axioms(x: &VMonoid, y: &VMonoid, ta: &TwoEnrichedAction) -> bool {
    let b = check_b_axioms(x, y, ta);
    let e = crate::schreier::check_enriched_action(x, y, &ta.to_enriched());
    !b.violates("domain") == !e.violates("E.0")
        && !b.violates("B.1") == !e.violates("E.1")
        && (!b.violates("B.0") && !b.violates("B.2")) == !e.violates("E.2")
        && !b.violates("B.3") == !e.violates("E.3")
        && !b.violates("B.4") == !e.violates("E.4")
}

/// Every subset of `X x Y` passing all B-axioms for the given action.
pub fn all_two_enriched_actions(
    x: &VMonoid,
    y: &VMonoid,
    act: &MonoidAction,
) -> Vec<TwoEnrichedAction> {
    let cells = x.size() * y.size();
    assert!(cells <= 20, "subset sweep is 2^(|X||Y|)");
    let mut out = Vec::new();
    for bits in 0u64..(1 << cells) {
        let ta = TwoEnrichedAction {
            action: act.clone(),
            subset: (0..cells).map(|i| (bits >> i) & 1 == 1).collect(),
        };
        if check_b_axioms(x, y, &ta).is_valid() {
            out.push(ta);
        }
    }
    out
}

/// A monoid action with a fixed-point function `xi : X x P_Y -> X`.
/// `p_y` lists the positive elements of `Y` in increasing order and
/// `xi[x * p_y.len() + j]` is the value at `(x, p_y[j])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreorderedAction {
    pub action: MonoidAction,
    pub p_y: Vec<usize>,
    pub xi: Vec<usize>,
}

impl PreorderedAction {
    fn col(&self, y: usize) -> Option<usize> {
        self.p_y.iter().position(|&v| v == y)
    }

    pub fn xi_at(&self, x: usize, y: usize) -> Option<usize> {
        self.col(y).map(|j| self.xi[x * self.p_y.len() + j])
    }

    pub fn is_fixed(&self, x: usize, y: usize) -> bool {
        self.xi_at(x, y) == Some(x)
    }
}

/// Checks A.1 to A.4 exhaustively.
pub fn check_a_axioms(x: &VMonoid, y: &VMonoid, pa: &PreorderedAction) -> ValidationReport {
    assert_two(x.quantale());
    assert_two(y.quantale());
    assert_eq!(pa.action.acted(), x.monoid());
    assert_eq!(pa.action.acting(), y.monoid());
    let (xm, ym) = (x.monoid(), y.monoid());
    let expected_p_y: Vec<usize> = ym
        .elements()
        .filter(|&yv| y.cone().get(yv) == 1)
        .collect();
    assert_eq!(pa.p_y, expected_p_y, "xi domain must be X x P_Y");
    let p_x: Vec<bool> = x.cone().values().iter().map(|&v| v == 1).collect();
    let one = ym.identity();
    let zero = xm.identity();
    let mut report = ValidationReport::new();

    for &yv in &pa.p_y {
        if pa.xi_at(zero, yv) != Some(zero) {
            report.push("A.1", vec![yv], "xi(0, y) != 0");
        }
    }
    for xv in xm.elements().filter(|&xv| p_x[xv]) {
        if pa.xi_at(xv, one) != Some(xv) {
            report.push("A.2", vec![xv], "xi(x, 1) != x for positive x");
        }
    }
    for xv in xm.elements() {
        for &yv in &pa.p_y {
            if !pa.is_fixed(xv, yv) {
                continue;
            }
            for xp in xm.elements() {
                for &yp in &pa.p_y {
                    if !pa.is_fixed(xp, yp) {
                        continue;
                    }
                    let sx = xm.op(xv, pa.action.act(yv, xp));
                    let sy = ym.op(yv, yp);
                    if !pa.is_fixed(sx, sy) {
                        report.push(
                            "A.3",
                            vec![xv, yv, xp, yp],
                            "product of fixed points is not fixed",
                        );
                    }
                }
            }
        }
    }
    for xv in xm.elements() {
        for &yv in &pa.p_y {
            // Like A.3, this axiom speaks about fixed points only.
            if !pa.is_fixed(xv, yv) {
                continue;
            }
            for x0 in xm.elements() {
                for y0 in ym.elements() {
                    let lhs_x = xm.op(x0, pa.action.act(y0, xv));
                    let lhs_y = ym.op(y0, yv);
                    let exists = xm.elements().any(|xp| {
                        pa.p_y.iter().any(|&yp| {
                            pa.is_fixed(xp, yp)
                                && xm.op(xp, pa.action.act(yp, x0)) == lhs_x
                                && ym.op(yp, y0) == lhs_y
                        })
                    });
                    if !exists {
                        report.push("A.4", vec![xv, yv, x0, y0], "no fixed witness exists");
                    }
                }
            }
        }
    }
    report
}

/// A.0: a fixed point at the identity column must be positive in `X`.
pub fn check_a0(x: &VMonoid, y: &VMonoid, pa: &PreorderedAction) -> bool {
    let one = y.monoid().identity();
    let p_x: Vec<bool> = x.cone().values().iter().map(|&v| v == 1).collect();
    x.monoid()
        .elements()
        .all(|xv| !pa.is_fixed(xv, one) || p_x[xv])
}

/// The canonical fixed-point function of a subset: `xi(x, y) = x` inside
/// `P` and `0` outside.
pub fn xi_from_subset(x: &VMonoid, y: &VMonoid, ta: &TwoEnrichedAction) -> PreorderedAction {
    let p_y: Vec<usize> = y
        .monoid()
        .elements()
        .filter(|&yv| y.cone().get(yv) == 1)
        .collect();
    let zero = x.monoid().identity();
    let xi = x
        .monoid()
        .elements()
        .flat_map(|xv| {
            p_y.iter()
                .map(|&yv| if ta.member(xv, yv) { xv } else { zero })
                .collect::<Vec<_>>()
        })
        .collect();
    PreorderedAction {
        action: ta.action.clone(),
        p_y,
        xi,
    }
}

/// The member subset of a fixed-point function. Refused unless the
/// A-axioms and A.0 hold; without A.0 the fixed points at the identity
/// column need not be positive and the subset would fail B.0.
pub fn subset_from_xi(x: &VMonoid, y: &VMonoid, pa: &PreorderedAction) -> Result<TwoEnrichedAction> {
    let report = check_a_axioms(x, y, pa);
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    if !check_a0(x, y, pa) {
        return Err(Error::Domain(
            "fixed-point function does not satisfy the kernel axiom (A.0)".into(),
        ));
    }
    let ny = y.size();
    let subset = (0..x.size() * ny)
        .map(|pair| pa.is_fixed(pair / ny, pair % ny))
        .collect();
    Ok(TwoEnrichedAction {
        action: pa.action.clone(),
        subset,
    })
}

/// A candidate diagram of monoids with distinguished cones: a lower row
/// `X -> Z <-> Y` and cone subsets on each object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RnMonoDiagram {
    pub x: FiniteMonoid,
    pub z: FiniteMonoid,
    pub y: FiniteMonoid,
    pub p_x: Vec<bool>,
    pub p_z: Vec<bool>,
    pub p_y: Vec<bool>,
    pub k: Vec<usize>,
    pub p: Vec<usize>,
    pub s: Vec<usize>,
}

/// Checks a Schreier split epimorphism of right-normal monomorphisms:
/// the lower row is a Schreier split extension of plain monoids, each
/// cone is a right normal submonoid, and the three maps restrict to the
/// cones.
pub fn rnmono_schreier_check(d: &RnMonoDiagram) -> ValidationReport {
    let mut report = ValidationReport::new();
    for (label, src, tgt, map) in [
        ("k homomorphism", &d.x, &d.z, &d.k),
        ("p homomorphism", &d.z, &d.y, &d.p),
        ("s homomorphism", &d.y, &d.z, &d.s),
    ] {
        if let Some((u, v)) = monoid_hom_witness(src, tgt, map) {
            report.push(label, vec![u, v], "structure not preserved");
        }
    }
    for y in d.y.elements() {
        if d.p[d.s[y]] != y {
            report.push("section", vec![y], "p(s(y)) != y");
        }
    }

    // Lower row Schreier: unique decomposition and kernel carrier.
    let two = Quantale::two();
    let cand = SplitExtensionCandidate::new(
        d.x.clone(),
        VRelation::discrete(two.clone(), d.x.size()),
        d.z.clone(),
        VRelation::discrete(two.clone(), d.z.size()),
        d.y.clone(),
        VRelation::discrete(two, d.y.size()),
        d.k.clone(),
        d.p.clone(),
        d.s.clone(),
    )
    .expect("shapes checked by construction");
    match find_q(&cand) {
        QSearch::Unique(_) => {}
        QSearch::Missing { z } => {
            report.push("schreier decomposition", vec![z], "no q(z) exists");
        }
        QSearch::Ambiguous { z, candidates } => {
            let mut witness = vec![z];
            witness.extend(candidates);
            report.push("schreier decomposition", witness, "q(z) is not unique");
        }
    }
    let one = d.y.identity();
    for z in d.z.elements() {
        let in_image = d.x.elements().any(|x| d.k[x] == z);
        if (d.p[z] == one) != in_image {
            report.push("kernel carrier", vec![z], "image of k is not the kernel of p");
        }
    }

    for (label, m, cone) in [
        ("P_X", &d.x, &d.p_x),
        ("P_Z", &d.z, &d.p_z),
        ("P_Y", &d.y, &d.p_y),
    ] {
        if !m.is_submonoid(cone) {
            report.push(format!("{label} submonoid"), vec![], "cone is not a submonoid");
        } else if let Some((z, p)) = m.right_normality_witness(cone) {
            report.push(
                format!("{label} right normal"),
                vec![z, p],
                "z + p escapes P + z",
            );
        }
    }

    for (label, src_cone, tgt_cone, map) in [
        ("k restriction", &d.p_x, &d.p_z, &d.k),
        ("p restriction", &d.p_z, &d.p_y, &d.p),
        ("s restriction", &d.p_y, &d.p_z, &d.s),
    ] {
        for (u, &pos) in src_cone.iter().enumerate() {
            if pos && !tgt_cone[map[u]] {
                report.push(label, vec![u], "positive element maps outside the cone");
            }
        }
    }
    report
}

/// One verified statement inside a demo report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// A human-readable walkthrough of a worked example; every claim is
/// recomputed, never asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoReport {
    pub title: String,
    pub claims: Vec<Claim>,
}

impl DemoReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    fn claim(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.claims.push(Claim {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        });
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "title": self.title,
            "passed": self.passed(),
            "claims": self.claims.iter().map(|c| json!({
                "name": c.name,
                "holds": c.holds,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for DemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.claims {
            let mark = if c.holds { "PASS" } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Walkthrough of the truncated-naturals example: the usual and the dot
/// preorder on saturating addition, the transitivity of the weak
/// lexicographic order, the witness pair separating it from the strict
/// one, and its closed form. Needs `k >= 3` so the witness pair exists
/// below the saturation bound.
pub fn example_n_ndot(k: usize) -> Result<DemoReport> {
    if k < 3 {
        return Err(Error::Domain(
            "truncation bound must be at least 3 for the witness pair".into(),
        ));
    }
    let x = crate::search::saturating_vmonoid(k);
    let y = crate::search::dot_vmonoid(k);
    let n = k + 1;
    let mut report = DemoReport {
        title: format!("saturating naturals up to {k}: usual vs dot preorder"),
        claims: Vec::new(),
    };

    report.claim(
        "usual order is a preordered monoid",
        makes_vmonoid(x.monoid(), x.relation()),
        "reflexive, transitive, shift-invariant",
    );
    report.claim(
        "dot order is a preordered monoid",
        makes_vmonoid(y.monoid(), y.relation()),
        "0 below everything, everything below each nonzero element",
    );

    let l3 = lemma3_wlex_transitive(&x, &y);
    report.claim(
        "weak lexicographic order is transitive",
        l3.computed && l3.criterion && l3.agree(),
        "direct check and the closed-form criterion agree",
    );

    let wlex = wlex_relation(&x, &y);
    let lex = lex_relation(&x, &y);
    let p = 2 * n + 2;
    let r = n + 2;
    report.claim(
        "weak and strict orders differ at ((2,2),(1,2))",
        wlex.get(p, r) == 1 && lex.get(p, r) == 0,
        "(2,2) is below (1,2) weakly but not strictly",
    );

    let act = MonoidAction::trivial(y.monoid().clone(), x.monoid().clone());
    let sd = act.semidirect()?;
    report.claim(
        "product with the weak order is a preordered monoid",
        makes_vmonoid(&sd, &wlex),
        "shift invariance on the semidirect (here direct) product",
    );

    let mut closed_form = true;
    'outer: for m in 0..n {
        for nn in 0..n {
            for mp in 0..n {
                for np in 0..n {
                    let expected = (nn == 0 && np == 0 && m <= mp) || np != 0;
                    if (wlex.get(m * n + nn, mp * n + np) == 1) != expected {
                        closed_form = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    report.claim(
        "closed form of the weak order",
        closed_form,
        "(m,n) below (m',n') iff (n = n' = 0 and m <= m') or n' != 0",
    );
    Ok(report)
}

/// Walkthrough of the projection-preorder example: ordering the product
/// of two preordered groups by the second component alone yields a
/// preordered group whose diagram of cones passes the right-normal
/// Schreier checks, yet the inclusion of the first factor is not a
/// kernel at the preorder level whenever the first factor's order
/// relates nothing beyond what the projection sees.
pub fn example_projection() -> Result<DemoReport> {
    let two = Quantale::two();
    let xm = FiniteMonoid::cyclic(2);
    let ym = FiniteMonoid::cyclic(2);
    let x = VMonoid::discrete(two.clone(), xm.clone());
    let y = VMonoid::discrete(two.clone(), ym.clone());
    let act = MonoidAction::trivial(ym.clone(), xm.clone());
    let sd = act.semidirect()?;
    let ny = ym.size();

    // (x, y) below (x', y') iff y below y' in Y.
    let proj = VRelation::from_fn(two.clone(), sd.size(), sd.size(), |u, v| {
        y.relation().get(u % ny, v % ny)
    });

    let mut report = DemoReport {
        title: "projection preorder on a product of groups".to_string(),
        claims: Vec::new(),
    };

    report.claim(
        "projection relation is a preordered monoid structure",
        makes_vmonoid(&sd, &proj),
        "second-component comparison is shift-invariant",
    );
    report.claim(
        "the product is a group",
        sd.is_group(),
        "both factors are groups and the action is by automorphisms",
    );

    let diagram = RnMonoDiagram {
        x: xm.clone(),
        z: sd.clone(),
        y: ym.clone(),
        p_x: preorder_to_cone(&xm, x.relation()),
        p_z: preorder_to_cone(&sd, &proj),
        p_y: preorder_to_cone(&ym, y.relation()),
        k: xm.elements().map(|xv| act.pair_index(xv, 0)).collect(),
        p: (0..sd.size()).map(|z| act.unpair(z).1).collect(),
        s: ym.elements().map(|yv| act.pair_index(0, yv)).collect(),
    };
    let rn = rnmono_schreier_check(&diagram);
    report.claim(
        "right-normal Schreier diagram checks pass",
        rn.is_valid(),
        "cones are right normal submonoids and the maps restrict",
    );

    let cand = normalized_candidate(&x, &y, &act, proj.clone())?;
    let ext = is_u_schreier_extension(&cand);
    report.claim(
        "kernel condition fails at the preorder level",
        ext.violates("S.2"),
        "the projection order relates (0,0) to (1,0) although the first factor's order does not",
    );

    // Degenerate case: with the chaotic order on the first factor the
    // same relation is a genuine split extension.
    let x_chaotic = VMonoid::chaotic(two, xm);
    let cand = normalized_candidate(&x_chaotic, &y, &act, proj)?;
    report.claim(
        "with a chaotic first factor the extension is genuine",
        is_u_schreier_extension(&cand).is_valid(),
        "every pair is related in the first factor, so the kernel equality holds",
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{dot_vmonoid, saturating_vmonoid};
    use crate::vmon::check_m_axioms;

    #[test]
    fn cone_preorder_round_trips() {
        // Identity cone on a cancellative monoid gives the discrete
        // order.
        let m = FiniteMonoid::cyclic(3);
        let rel = cone_to_preorder(&m, &[true, false, false]);
        assert_eq!(rel, VRelation::discrete(Quantale::two(), 3));

        // Full cone on saturating addition relates x to everything
        // reachable above it.
        let m = FiniteMonoid::saturating(4);
        let rel = cone_to_preorder(&m, &[true; 5]);
        for xv in 0..5 {
            for yv in 0..5 {
                let reachable = (0..5).any(|w| (w + xv).min(4) == yv);
                assert_eq!(rel.get(xv, yv) == 1, reachable);
            }
        }

        // Round-trip on a preordered group fixture.
        let m = FiniteMonoid::cyclic(4);
        for cone in [[true, false, true, false], [true, true, true, true]] {
            if !m.is_submonoid(&cone) {
                continue;
            }
            let rel = cone_to_preorder(&m, &cone);
            assert_eq!(preorder_to_cone(&m, &rel), cone);
        }
    }

    fn nat_fixture() -> (VMonoid, VMonoid, MonoidAction) {
        let x = saturating_vmonoid(2);
        let y = dot_vmonoid(2);
        let act = MonoidAction::trivial(y.monoid().clone(), x.monoid().clone());
        (x, y, act)
    }

    #[test]
    fn b_axioms_accept_canonical_and_reject_perturbed() {
        let (x, y, act) = nat_fixture();
        // P = P_X x {1} union {0} x P_Y, closed under B.3.
        let mut ta = TwoEnrichedAction {
            action: act,
            subset: vec![false; x.size() * y.size()],
        };
        for xv in 0..x.size() {
            if x.cone().get(xv) == 1 {
                let idx = ta.action.pair_index(xv, 0);
                ta.subset[idx] = true;
            }
        }
        for yv in 0..y.size() {
            if y.cone().get(yv) == 1 {
                let idx = ta.action.pair_index(0, yv);
                ta.subset[idx] = true;
            }
        }
        // Close under the product operation.
        loop {
            let mut grew = false;
            for xv in 0..x.size() {
                for yv in 0..y.size() {
                    if !ta.member(xv, yv) {
                        continue;
                    }
                    for xp in 0..x.size() {
                        for yp in 0..y.size() {
                            if ta.member(xp, yp) {
                                let idx = ta.action.pair_index(
                                    x.monoid().op(xv, ta.action.act(yv, xp)),
                                    y.monoid().op(yv, yp),
                                );
                                if !ta.subset[idx] {
                                    ta.subset[idx] = true;
                                    grew = true;
                                }
                            }
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let report = check_b_axioms(&x, &y, &ta);
        assert!(report.is_valid(), "{report}");

        // Drop (0, y) for a positive nonidentity y.
        let mut missing = ta.clone();
        let idx = missing.action.pair_index(0, 1);
        missing.subset[idx] = false;
        assert!(check_b_axioms(&x, &y, &missing).violates("B.1"));
    }

    #[test]
    fn trivial_y_reduces_to_cone_axioms() {
        let two = Quantale::two();
        let x = saturating_vmonoid(3);
        let y = VMonoid::discrete(two, FiniteMonoid::trivial());
        let act = MonoidAction::trivial(y.monoid().clone(), x.monoid().clone());
        for bits in 0u32..(1 << x.size()) {
            let ta = TwoEnrichedAction {
                action: act.clone(),
                subset: (0..x.size()).map(|i| (bits >> i) & 1 == 1).collect(),
            };
            let b = check_b_axioms(&x, &y, &ta);
            // With Y trivial, membership is a cone on X; B-validity
            // means it is exactly P_X and closed, matching the M-axioms
            // of the cone combined with equality with P_X.
            let cone = Cone::new(
                x.quantale().clone(),
                ta.subset.iter().map(|&m| m as usize).collect(),
            )
            .unwrap();
            let is_px = cone.values() == x.cone().values();
            let m = check_m_axioms(x.monoid(), &cone);
            assert_eq!(b.is_valid(), is_px && m.all(), "bits {bits:b}");
        }
    }

    #[test]
    fn b_and_e_axioms_agree_on_subset_sweep() {
        let (x, y, act) = nat_fixture();
        let cells = x.size() * y.size();
        for bits in 0u64..(1 << cells) {
            let ta = TwoEnrichedAction {
                action: act.clone(),
                subset: (0..cells).map(|i| (bits >> i) & 1 == 1).collect(),
            };
            assert!(b_axioms_equal_e_axioms(&x, &y, &ta), "bits {bits:b}");
        }
    }

    #[test]
    fn xi_round_trip_and_eq12_quotient() {
        let (x, y, act) = nat_fixture();
        for ta in all_two_enriched_actions(&x, &y, &act) {
            let pa = xi_from_subset(&x, &y, &ta);
            let report = check_a_axioms(&x, &y, &pa);
            assert!(report.is_valid(), "{report}");
            assert!(check_a0(&x, &y, &pa));
            let back = subset_from_xi(&x, &y, &pa).unwrap();
            assert_eq!(back.subset, ta.subset);

            // Garbage off the fixed-point set maps to the same subset.
            let mut garbage = pa.clone();
            let mut changed = false;
            for xv in 1..x.size() {
                for (j, _) in garbage.p_y.clone().iter().enumerate() {
                    let idx = xv * garbage.p_y.len() + j;
                    if garbage.xi[idx] != xv {
                        garbage.xi[idx] = (garbage.xi[idx] + 1) % x.size();
                        if garbage.xi[idx] == xv {
                            garbage.xi[idx] = (xv + 1) % x.size();
                        }
                        changed = true;
                    }
                }
            }
            if changed {
                let back2 = subset_from_xi(&x, &y, &garbage).unwrap();
                assert_eq!(back2.subset, ta.subset);
            }
        }
    }

    #[test]
    fn a0_failure_is_refused() {
        // xi(x, y) = x everywhere fixes every x at the identity column,
        // so A.0 fails whenever P_X is a proper subset.
        let two = Quantale::two();
        let x = VMonoid::discrete(two.clone(), FiniteMonoid::saturating(1));
        let y = VMonoid::discrete(two, FiniteMonoid::trivial());
        let act = MonoidAction::trivial(y.monoid().clone(), x.monoid().clone());
        let pa = PreorderedAction {
            action: act,
            p_y: vec![0],
            xi: vec![0, 1],
        };
        assert!(check_a_axioms(&x, &y, &pa).is_valid());
        assert!(!check_a0(&x, &y, &pa));
        assert!(matches!(
            subset_from_xi(&x, &y, &pa),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rnmono_diagram_from_valid_subset_action() {
        let (x, y, act) = nat_fixture();
        for ta in all_two_enriched_actions(&x, &y, &act) {
            let sd = ta.action.semidirect().unwrap();
            let diagram = RnMonoDiagram {
                x: x.monoid().clone(),
                z: sd.clone(),
                y: y.monoid().clone(),
                p_x: x.cone().values().iter().map(|&v| v == 1).collect(),
                p_z: ta.subset.clone(),
                p_y: y.cone().values().iter().map(|&v| v == 1).collect(),
                k: (0..x.size()).map(|xv| ta.action.pair_index(xv, 0)).collect(),
                p: (0..sd.size()).map(|z| ta.action.unpair(z).1).collect(),
                s: (0..y.size()).map(|yv| ta.action.pair_index(0, yv)).collect(),
            };
            let report = rnmono_schreier_check(&diagram);
            assert!(report.is_valid(), "{report}");
        }
    }

    #[test]
    fn demo_n_ndot_passes_for_small_bounds() {
        for k in [3, 4] {
            let report = example_n_ndot(k).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.claims.len(), 6);
        }
        assert!(matches!(example_n_ndot(2), Err(Error::Domain(_))));
    }

    #[test]
    fn demo_projection_passes() {
        let report = example_projection().unwrap();
        assert!(report.passed(), "{report}");
        // JSON shape is stable.
        let j = report.to_json();
        assert_eq!(j["passed"], true);
        assert!(j["claims"].as_array().unwrap().len() >= 4);
    }
}
