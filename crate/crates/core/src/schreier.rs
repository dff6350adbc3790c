//! Schreier points, split extensions of enriched monoids, and their
//! classification by enriched actions.
//!
//! A split extension candidate stores raw data; nothing about it is
//! assumed. `is_u_schreier_extension` checks every law from scratch and
//! reports witnesses. The extension/action constructions are executable
//! in both directions and the round-trip checks verify that they are
//! mutually inverse, with the mediating maps `phi(x, y) = k(x) * s(y)`
//! and `psi(z) = (q(z), p(z))` checked to be inverse V-monoid
//! isomorphisms.

use crate::monoid::{monoid_hom_witness, FiniteMonoid, MonoidAction};
use crate::report::{Error, Result, ValidationReport};
use crate::semidirect::wlex_relation;
use crate::vcat::{tensor_relation, vfunctor_witness, VRelation};
use crate::vmon::{relation_from_cone, translation_witness, Cone, VMonoid};

/// Raw data of a candidate split extension: three monoids with candidate
/// relations, plus the three structure maps. Deliberately unvalidated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtensionCandidate {
    pub x: FiniteMonoid,
    pub a: VRelation,
    pub z: FiniteMonoid,
    pub c: VRelation,
    pub y: FiniteMonoid,
    pub b: VRelation,
    pub k: Vec<usize>,
    pub p: Vec<usize>,
    pub s: Vec<usize>,
}

impl SplitExtensionCandidate {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        x: FiniteMonoid,
        a: VRelation,
        z: FiniteMonoid,
        c: VRelation,
        y: FiniteMonoid,
        b: VRelation,
        k: Vec<usize>,
        p: Vec<usize>,
        s: Vec<usize>,
    ) -> Result<SplitExtensionCandidate> {
        if a.rows() != x.size() || c.rows() != z.size() || b.rows() != y.size() {
            return Err(Error::Structural("relation carrier mismatch".into()));
        }
        if a.quantale() != c.quantale() || b.quantale() != c.quantale() {
            return Err(Error::Structural("quantale mismatch".into()));
        }
        if k.len() != x.size() || p.len() != z.size() || s.len() != y.size() {
            return Err(Error::Structural("structure map has wrong length".into()));
        }
        if k.iter().any(|&v| v >= z.size())
            || p.iter().any(|&v| v >= y.size())
            || s.iter().any(|&v| v >= z.size())
        {
            return Err(Error::Structural("structure map value out of range".into()));
        }
        Ok(SplitExtensionCandidate {
            x,
            a,
            z,
            c,
            y,
            b,
            k,
            p,
            s,
        })
    }
}

/// The normalized candidate over a semidirect product: `Z = X x| Y` with
/// the two inclusions and the second projection.
pub fn normalized_candidate(
    x: &VMonoid,
    y: &VMonoid,
    act: &MonoidAction,
    c: VRelation,
) -> Result<SplitExtensionCandidate> {
    assert_eq!(act.acted(), x.monoid());
    assert_eq!(act.acting(), y.monoid());
    let sd = act.semidirect()?;
    let zero = x.monoid().identity();
    let one = y.monoid().identity();
    let k = x.monoid().elements().map(|xv| act.pair_index(xv, one)).collect();
    let p = (0..sd.size()).map(|z| act.unpair(z).1).collect();
    let s = y.monoid().elements().map(|yv| act.pair_index(zero, yv)).collect();
    SplitExtensionCandidate::new(
        x.monoid().clone(),
        x.relation().clone(),
        sd,
        c,
        y.monoid().clone(),
        y.relation().clone(),
        k,
        p,
        s,
    )
}

/// Outcome of searching for the unique decomposition map `q` with
/// `z = k(q(z)) * s(p(z))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QSearch {
    Unique(Vec<usize>),
    /// Some `z` admits no decomposition.
    Missing { z: usize },
    /// Some `z` admits several; all candidate `x` values are listed.
    Ambiguous { z: usize, candidates: Vec<usize> },
}

/// Searches all of `X` for each `z`; no algebraic shortcut is assumed.
pub fn find_q(cand: &SplitExtensionCandidate) -> QSearch {
    let mut q = Vec::with_capacity(cand.z.size());
    for z in cand.z.elements() {
        let tail = cand.s[cand.p[z]];
        let hits: Vec<usize> = cand
            .x
            .elements()
            .filter(|&x| cand.z.op(cand.k[x], tail) == z)
            .collect();
        match hits.len() {
            0 => return QSearch::Missing { z },
            1 => q.push(hits[0]),
            _ => {
                return QSearch::Ambiguous {
                    z,
                    candidates: hits,
                }
            }
        }
    }
    QSearch::Unique(q)
}

fn check_vmonoid_laws(
    report: &mut ValidationReport,
    label: &str,
    m: &FiniteMonoid,
    rel: &VRelation,
) {
    if let Some(x) = rel.reflexivity_witness() {
        report.push(format!("{label} reflexivity"), vec![x], "k not below a(x, x)");
    }
    if let Some((x, y, z)) = rel.transitivity_witness() {
        report.push(
            format!("{label} transitivity"),
            vec![x, y, z],
            "composition not below",
        );
    }
    if let Some((x, y, z)) = translation_witness(m, rel) {
        report.push(
            format!("{label} compatibility"),
            vec![x, y, z],
            "a translation inequality fails",
        );
    }
}

/// Checks everything a split extension of enriched monoids needs: the
/// three structures are V-monoids, the maps are homomorphisms with
/// `p . s = id`, the underlying monoid diagram is a Schreier point, the
/// projection and section are V-functors (S.1, S.3), and the inclusion
/// is the kernel both as a carrier and as a relation (S.2).
pub fn is_u_schreier_extension(cand: &SplitExtensionCandidate) -> ValidationReport {
    let mut report = ValidationReport::new();
    let q = cand.c.quantale();

    check_vmonoid_laws(&mut report, "X", &cand.x, &cand.a);
    check_vmonoid_laws(&mut report, "Y", &cand.y, &cand.b);
    check_vmonoid_laws(&mut report, "Z", &cand.z, &cand.c);

    for (label, src, tgt, map) in [
        ("k homomorphism", &cand.x, &cand.z, &cand.k),
        ("p homomorphism", &cand.z, &cand.y, &cand.p),
        ("s homomorphism", &cand.y, &cand.z, &cand.s),
    ] {
        if let Some((u, v)) = monoid_hom_witness(src, tgt, map) {
            report.push(label, vec![u, v], "structure not preserved");
        }
    }
    for y in cand.y.elements() {
        if cand.p[cand.s[y]] != y {
            report.push("section", vec![y], "p(s(y)) != y");
        }
    }

    match find_q(cand) {
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

    // Kernel carrier: k is injective and its image is exactly the
    // preimage of the identity under p.
    let one = cand.y.identity();
    for x1 in cand.x.elements() {
        for x2 in cand.x.elements().skip(x1 + 1) {
            if cand.k[x1] == cand.k[x2] {
                report.push("kernel carrier", vec![x1, x2], "k is not injective");
            }
        }
    }
    for z in cand.z.elements() {
        let in_image = cand.x.elements().any(|x| cand.k[x] == z);
        if (cand.p[z] == one) != in_image {
            report.push(
                "kernel carrier",
                vec![z],
                "image of k differs from the preimage of 1 under p",
            );
        }
    }

    // S.1: p is a V-functor.
    for z1 in cand.z.elements() {
        for z2 in cand.z.elements() {
            if !q.leq(cand.c.get(z1, z2), cand.b.get(cand.p[z1], cand.p[z2])) {
                report.push("S.1", vec![z1, z2], "c(z, z') not below b(p z, p z')");
            }
        }
    }
    // S.2: the relation on X is exactly the restriction of c along k.
    for x1 in cand.x.elements() {
        for x2 in cand.x.elements() {
            if cand.a.get(x1, x2) != cand.c.get(cand.k[x1], cand.k[x2]) {
                report.push("S.2", vec![x1, x2], "a(x, x') != c(k x, k x')");
            }
        }
    }
    // S.3: s is a V-functor.
    for y1 in cand.y.elements() {
        for y2 in cand.y.elements() {
            if !q.leq(cand.b.get(y1, y2), cand.c.get(cand.s[y1], cand.s[y2])) {
                report.push("S.3", vec![y1, y2], "b(y, y') not below c(s y, s y')");
            }
        }
    }
    report
}

/// For a candidate relation `c` on the semidirect product: being a split
/// extension is equivalent to `c` lying in the entrywise interval from
/// the componentwise tensor up to wlex while making the product a
/// V-monoid. Both sides computed independently.
pub fn prop1_bounds_check(
    x: &VMonoid,
    y: &VMonoid,
    act: &MonoidAction,
    c: &VRelation,
) -> Result<crate::semidirect::PairedCheck> {
    let cand = normalized_candidate(x, y, act, c.clone())?;
    let computed = is_u_schreier_extension(&cand).is_valid();
    let lo = tensor_relation(x.relation(), y.relation());
    let hi = wlex_relation(x, y);
    let criterion = lo.entrywise_leq(c)
        && c.entrywise_leq(&hi)
        && crate::vmon::makes_vmonoid(&cand.z, c);
    Ok(crate::semidirect::PairedCheck { computed, criterion })
}

/// Enumerates every relation in the entrywise interval between the
/// componentwise tensor and wlex that makes the semidirect product a
/// V-monoid; equivalently, every enrichment giving a split extension.
/// Entries sweep in row-major order, values in stored quantale order.
pub fn enumerate_enrichments(
    x: &VMonoid,
    y: &VMonoid,
    act: &MonoidAction,
    budget: u64,
) -> Result<Vec<VRelation>> {
    let sd = act.semidirect()?;
    let q = x.quantale().clone();
    let lo = tensor_relation(x.relation(), y.relation());
    let hi = wlex_relation(x, y);
    let n = sd.size();

    let mut options: Vec<Vec<usize>> = Vec::with_capacity(n * n);
    let mut candidates: u128 = 1;
    for u in 0..n {
        for v in 0..n {
            let opts = q.interval(lo.get(u, v), hi.get(u, v));
            assert!(!opts.is_empty(), "tensor must lie below wlex");
            candidates = candidates.saturating_mul(opts.len() as u128);
            options.push(opts);
        }
    }
    if candidates > budget as u128 {
        return Err(Error::BudgetExceeded { candidates, budget });
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; n * n];
    loop {
        let rel = VRelation::from_fn(q.clone(), n, n, |u, v| {
            options[u * n + v][idx[u * n + v]]
        });
        if crate::vmon::makes_vmonoid(&sd, &rel) {
            out.push(rel);
        }
        // Odometer increment, last entry fastest.
        let mut pos = n * n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < options[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// A monoid action together with a quantale-valued function on `X x Y`,
/// indexed `x * |Y| + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnrichedAction {
    pub action: MonoidAction,
    pub p: Vec<usize>,
}

impl EnrichedAction {
    pub fn value(&self, x: usize, y: usize) -> usize {
        self.p[self.action.pair_index(x, y)]
    }
}

/// Checks the five enriched-action axioms exhaustively, with witnesses.
pub fn check_enriched_action(x: &VMonoid, y: &VMonoid, ea: &EnrichedAction) -> ValidationReport {
    assert_eq!(ea.action.acted(), x.monoid());
    assert_eq!(ea.action.acting(), y.monoid());
    let q = x.quantale();
    let pa = x.cone();
    let pb = y.cone();
    let (xm, ym) = (x.monoid(), y.monoid());
    let one = ym.identity();
    let zero = xm.identity();
    let mut report = ValidationReport::new();

    for xv in xm.elements() {
        for yv in ym.elements() {
            if !q.leq(ea.value(xv, yv), pb.get(yv)) {
                report.push("E.0", vec![xv, yv], "P(x, y) not below P_b(y)");
            }
        }
    }
    for yv in ym.elements() {
        if !q.leq(pb.get(yv), ea.value(zero, yv)) {
            report.push("E.1", vec![yv], "P_b(y) not below P(0, y)");
        }
    }
    for xv in xm.elements() {
        if pa.get(xv) != ea.value(xv, one) {
            report.push("E.2", vec![xv], "P_a(x) != P(x, 1)");
        }
    }
    for xv in xm.elements() {
        for yv in ym.elements() {
            for xp in xm.elements() {
                for yp in ym.elements() {
                    let lhs = q.tensor(ea.value(xv, yv), ea.value(xp, yp));
                    let rhs = ea.value(xm.op(xv, ea.action.act(yv, xp)), ym.op(yv, yp));
                    if !q.leq(lhs, rhs) {
                        report.push(
                            "E.3",
                            vec![xv, yv, xp, yp],
                            "P(x, y) (x) P(x', y') exceeds P(x + alpha(y, x'), yy')",
                        );
                    }
                }
            }
        }
    }
    for xv in xm.elements() {
        for yv in ym.elements() {
            for x0 in xm.elements() {
                for y0 in ym.elements() {
                    let lhs_x = xm.op(x0, ea.action.act(y0, xv));
                    let lhs_y = ym.op(y0, yv);
                    let bound = q.join(xm.elements().flat_map(|xp| {
                        ym.elements()
                            .filter(move |&yp| {
                                xm.op(xp, ea.action.act(yp, x0)) == lhs_x
                                    && ym.op(yp, y0) == lhs_y
                            })
                            .map(move |yp| (xp, yp))
                    }).map(|(xp, yp)| ea.value(xp, yp)));
                    if !q.leq(ea.value(xv, yv), bound) {
                        report.push(
                            "E.4",
                            vec![xv, yv, x0, y0],
                            "P(x, y) exceeds the conjugation join",
                        );
                    }
                }
            }
        }
    }
    report
}

/// Recovers the action from a valid split extension via
/// `alpha(y, x) = q(s(y) * k(x))` and, when the middle object is
/// cone-determined, the function `P(x, y) = P_c(k(x) * s(y))`.
pub fn action_from_extension(
    cand: &SplitExtensionCandidate,
) -> Result<(MonoidAction, Option<EnrichedAction>)> {
    let report = is_u_schreier_extension(cand);
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let qmap = match find_q(cand) {
        QSearch::Unique(qmap) => qmap,
        _ => unreachable!("validated above"),
    };
    let table = cand
        .y
        .elements()
        .flat_map(|y| {
            cand.x
                .elements()
                .map(|x| qmap[cand.z.op(cand.s[y], cand.k[x])])
                .collect::<Vec<_>>()
        })
        .collect();
    let action = MonoidAction::new(cand.y.clone(), cand.x.clone(), table)?;
    let act_report = action.validate();
    if !act_report.is_valid() {
        return Err(Error::Invalid(act_report));
    }

    let zvm = VMonoid::from_relation(cand.z.clone(), cand.c.clone())?;
    let enriched = if zvm.is_vmon_star() {
        let pc = zvm.cone();
        let ny = cand.y.size();
        let p = (0..cand.x.size() * ny)
            .map(|pair| {
                let (xv, yv) = (pair / ny, pair % ny);
                pc.get(cand.z.op(cand.k[xv], cand.s[yv]))
            })
            .collect();
        Some(EnrichedAction {
            action: action.clone(),
            p,
        })
    } else {
        None
    };
    Ok((action, enriched))
}

/// Builds the normalized split extension classified by an enriched
/// action: the semidirect product carries the relation reconstructed
/// from `P` as a cone.
pub fn extension_from_action(
    x: &VMonoid,
    y: &VMonoid,
    ea: &EnrichedAction,
) -> Result<SplitExtensionCandidate> {
    if !x.is_vmon_star() || !y.is_vmon_star() {
        return Err(Error::Domain(
            "classification needs cone-determined factors".into(),
        ));
    }
    let report = check_enriched_action(x, y, ea);
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let sd = ea.action.semidirect()?;
    let cone = Cone::new(x.quantale().clone(), ea.p.clone())?;
    let a_p = relation_from_cone(&sd, &cone);
    normalized_candidate(x, y, &ea.action, a_p)
}

/// Round-trip starting from an enriched action: build the extension,
/// read the action back, and require it to be literally identical.
pub fn roundtrip_check(x: &VMonoid, y: &VMonoid, ea: &EnrichedAction) -> Result<ValidationReport> {
    let ext = extension_from_action(x, y, ea)?;
    let mut report = is_u_schreier_extension(&ext);
    let (action, enriched) = match action_from_extension(&ext) {
        Ok(pair) => pair,
        Err(Error::Invalid(r)) => return Ok(r),
        Err(e) => return Err(e),
    };
    if &action != &ea.action {
        report.push("action round-trip", vec![], "recovered action differs");
    }
    match enriched {
        Some(got) => {
            if got.p != ea.p {
                report.push("cone round-trip", vec![], "recovered P differs");
            }
        }
        None => report.push(
            "cone round-trip",
            vec![],
            "reconstructed middle object is not cone-determined",
        ),
    }
    Ok(report)
}

/// Round-trip starting from an extension: recover the action, rebuild
/// the normalized extension, and compare through the mediating maps.
/// `phi` and `psi` must be mutually inverse V-functors and the rebuilt
/// relation must match `c` entrywise through `phi`.
pub fn extension_roundtrip(cand: &SplitExtensionCandidate) -> Result<ValidationReport> {
    let (action, enriched) = action_from_extension(cand)?;
    let qmap = match find_q(cand) {
        QSearch::Unique(qmap) => qmap,
        _ => unreachable!("validated by action_from_extension"),
    };
    let mut report = ValidationReport::new();

    let ny = cand.y.size();
    let phi: Vec<usize> = (0..cand.x.size() * ny)
        .map(|pair| cand.z.op(cand.k[pair / ny], cand.s[pair % ny]))
        .collect();
    let psi: Vec<usize> = cand.z.elements().map(|z| qmap[z] * ny + cand.p[z]).collect();

    for (pair, &z) in phi.iter().enumerate() {
        if psi[z] != pair {
            report.push("psi . phi", vec![pair], "not the identity");
        }
    }
    for (z, &pair) in psi.iter().enumerate() {
        if phi[pair] != z {
            report.push("phi . psi", vec![z], "not the identity");
        }
    }
    if let Some((u, v)) = monoid_hom_witness(&action.semidirect()?, &cand.z, &phi) {
        report.push("phi homomorphism", vec![u, v], "structure not preserved");
    }

    let Some(ea) = enriched else {
        report.push(
            "normalization",
            vec![],
            "middle object is not cone-determined",
        );
        return Ok(report);
    };
    let x = VMonoid::from_relation(cand.x.clone(), cand.a.clone())?;
    let y = VMonoid::from_relation(cand.y.clone(), cand.b.clone())?;
    let rebuilt = extension_from_action(&x, &y, &ea)?;

    for u in 0..phi.len() {
        for v in 0..phi.len() {
            if rebuilt.c.get(u, v) != cand.c.get(phi[u], phi[v]) {
                report.push(
                    "relation normalization",
                    vec![u, v],
                    "rebuilt relation differs through phi",
                );
            }
        }
    }
    if let Some((u, v)) = vfunctor_witness(&phi, &rebuilt.c, &cand.c) {
        report.push("phi V-functor", vec![u, v], "phi does not preserve c");
    }
    if let Some((u, v)) = vfunctor_witness(&psi, &cand.c, &rebuilt.c) {
        report.push("psi V-functor", vec![u, v], "psi does not preserve c");
    }
    Ok(report)
}
