//! Command implementations. Every command produces a `Report` whose
//! items are individually pass/fail with named witnesses; the process
//! exit code is derived from the report and the error kind.

use crate::resolver::{Env, Item, ResolveError};
use qmon_core::schreier::{
    check_enriched_action, enumerate_enrichments, extension_roundtrip, is_u_schreier_extension,
    prop1_bounds_check, roundtrip_check,
};
use qmon_core::semidirect::{
    corollary2_group_lex, corollary3_group_wlex, lemma1_lex_eq_wlex, lemma3_wlex_transitive,
    lemma4_lex_transitive, named_candidates, prop2_wlex_vmonoid, prop3_tensor_vmonoid,
    prop6_lex_vmonoid, PairedCheck,
};
use qmon_core::vmon::{check_m_axioms, VMonoid};
use qmon_core::{Error, MonoidAction, ValidationReport};
use serde_json::json;
use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportItem {
    pub name: String,
    pub ok: bool,
    pub detail: String,
    pub witnesses: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub items: Vec<ReportItem>,
    pub count: Option<u64>,
    pub elapsed_ms: u128,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ok: true,
            items: Vec::new(),
            count: None,
            elapsed_ms: 0,
        }
    }

    fn item(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push_item(ReportItem {
            name: name.into(),
            ok,
            detail: detail.into(),
            witnesses: Vec::new(),
        });
    }

    fn push_item(&mut self, item: ReportItem) {
        self.ok &= item.ok;
        self.items.push(item);
    }

    /// Folds a validation report in: one item per distinct law, with
    /// witnesses named through `namer`.
    fn absorb(&mut self, report: &ValidationReport, namer: &dyn Fn(&str, &[usize]) -> Vec<String>) {
        let mut seen: Vec<&str> = Vec::new();
        for v in &report.violations {
            if !seen.contains(&v.law.as_str()) {
                seen.push(&v.law);
            }
        }
        if seen.is_empty() {
            self.item("laws", true, "all laws hold");
            return;
        }
        for law in seen {
            let witnesses = report
                .violations
                .iter()
                .filter(|v| v.law == law)
                .take(5)
                .map(|v| namer(law, &v.witness))
                .collect();
            self.push_item(ReportItem {
                name: law.to_string(),
                ok: false,
                detail: report
                    .violations
                    .iter()
                    .find(|v| v.law == law)
                    .map(|v| v.detail.clone())
                    .unwrap_or_default(),
                witnesses,
            });
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "command": self.command,
            "ok": self.ok,
            "count": self.count,
            "elapsed_ms": self.elapsed_ms as u64,
            "items": self.items.iter().map(|i| json!({
                "name": i.name,
                "ok": i.ok,
                "detail": i.detail,
                "witnesses": i.witnesses,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} ms)",
            self.command,
            if self.ok { "PASS" } else { "FAIL" },
            self.elapsed_ms
        )?;
        if let Some(count) = self.count {
            writeln!(f, "  count: {count}")?;
        }
        for item in &self.items {
            let mark = if item.ok { "ok" } else { "FAIL" };
            write!(f, "  [{mark}] {}", item.name)?;
            if !item.detail.is_empty() {
                write!(f, ": {}", item.detail)?;
            }
            writeln!(f)?;
            for w in &item.witnesses {
                writeln!(f, "        witness ({})", w.join(", "))?;
            }
        }
        Ok(())
    }
}

fn plain_namer(names: Vec<String>) -> impl Fn(&str, &[usize]) -> Vec<String> {
    move |_law, witness| {
        witness
            .iter()
            .map(|&i| names.get(i).cloned().unwrap_or_else(|| i.to_string()))
            .collect()
    }
}

fn numeric_namer(_law: &str, witness: &[usize]) -> Vec<String> {
    witness.iter().map(|i| i.to_string()).collect()
}

/// Names for the product carrier, `x.y`.
fn pair_names(act: &MonoidAction, x_names: &[String], y_names: &[String]) -> Vec<String> {
    (0..x_names.len() * y_names.len())
        .map(|p| {
            let (xi, yi) = act.unpair(p);
            format!("{}.{}", x_names[xi], y_names[yi])
        })
        .collect()
}

fn missing(name: &str) -> ResolveError {
    ResolveError::Core(Error::Domain(format!("`{name}` is not defined")))
}

pub fn run_check(env: &Env, name: &str) -> Result<Report, ResolveError> {
    let start = Instant::now();
    let item = env.get(name).ok_or_else(|| missing(name))?;
    let mut report = Report::new(&format!("check {name}"));
    match item {
        Item::Quantale(q) => {
            report.item(
                "quantale laws",
                true,
                format!(
                    "{} elements, {}",
                    q.size(),
                    if q.is_pointed() { "pointed" } else { "not pointed" }
                ),
            );
        }
        Item::Monoid { m, .. } => {
            report.item(
                "monoid laws",
                true,
                format!(
                    "{} elements{}{}",
                    m.size(),
                    if m.is_commutative() { ", commutative" } else { "" },
                    if m.is_group() { ", group" } else { "" }
                ),
            );
        }
        Item::Relation { rel, names } => {
            let namer = plain_namer(names.clone());
            let mut vr = ValidationReport::new();
            if let Some(x) = rel.reflexivity_witness() {
                vr.push("reflexivity", vec![x], "unit not below the diagonal");
            }
            if let Some((x, y, z)) = rel.transitivity_witness() {
                vr.push("transitivity", vec![x, y, z], "composite exceeds the direct entry");
            }
            report.absorb(&vr, &namer);
        }
        Item::VMonoid { vm, .. } => {
            report.item(
                "compatibility",
                true,
                format!(
                    "{} elements, {}",
                    vm.size(),
                    if vm.is_vmon_star() {
                        "cone-determined"
                    } else {
                        "not cone-determined"
                    }
                ),
            );
        }
        Item::Action { act, .. } => {
            report.item(
                "action laws",
                true,
                format!("{} acting on {}", act.acting().size(), act.acted().size()),
            );
        }
        Item::Cone { cone, monoid, names } => {
            let m_report = check_m_axioms(monoid, cone);
            let namer = plain_namer(names.clone());
            report.absorb(&m_report.witnesses, &namer);
        }
        Item::Enriched { x, y, ea, x_names, y_names } => {
            let vr = check_enriched_action(x, y, ea);
            let xn = x_names.clone();
            let yn = y_names.clone();
            // Witnesses alternate x- and y-indices per law; keep them
            // numeric except the leading pair when decodable.
            let namer = move |_law: &str, w: &[usize]| -> Vec<String> {
                w.iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        if i % 2 == 0 {
                            xn.get(v).cloned().unwrap_or_else(|| v.to_string())
                        } else {
                            yn.get(v).cloned().unwrap_or_else(|| v.to_string())
                        }
                    })
                    .collect()
            };
            report.absorb(&vr, &namer);
        }
        Item::Extension { act, cand, x_names, y_names, .. } => {
            let vr = is_u_schreier_extension(cand);
            let pn = pair_names(act, x_names, y_names);
            let namer = move |law: &str, w: &[usize]| -> Vec<String> {
                let pair_carrier = matches!(
                    law,
                    "S.1" | "S.2" | "S.3"
                        | "Z reflexivity"
                        | "Z transitivity"
                        | "Z compatibility"
                        | "schreier decomposition"
                        | "kernel carrier"
                );
                if pair_carrier {
                    w.iter()
                        .map(|&i| pn.get(i).cloned().unwrap_or_else(|| i.to_string()))
                        .collect()
                } else {
                    numeric_namer(law, w)
                }
            };
            report.absorb(&vr, &namer);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn want_triple<'a>(
    env: &'a Env,
    x: &str,
    y: &str,
    action: &str,
) -> Result<(&'a VMonoid, &'a MonoidAction, &'a VMonoid), ResolveError> {
    let Some(Item::VMonoid { vm: xv, .. }) = env.get(x) else {
        return Err(missing_kind(x, "vmonoid"));
    };
    let Some(Item::VMonoid { vm: yv, .. }) = env.get(y) else {
        return Err(missing_kind(y, "vmonoid"));
    };
    let Some(Item::Action { act, .. }) = env.get(action) else {
        return Err(missing_kind(action, "action"));
    };
    if act.acting() != yv.monoid() || act.acted() != xv.monoid() {
        return Err(ResolveError::Core(Error::Domain(
            "action does not match the chosen x and y".into(),
        )));
    }
    Ok((xv, act, yv))
}

fn missing_kind(name: &str, kind: &str) -> ResolveError {
    ResolveError::Core(Error::Domain(format!("`{name}` is not a defined {kind}")))
}

pub fn run_enumerate(
    env: &Env,
    x: &str,
    y: &str,
    action: &str,
    budget: u64,
) -> Result<Report, ResolveError> {
    let start = Instant::now();
    let (xv, act, yv) = want_triple(env, x, y, action)?;
    let enrichments = enumerate_enrichments(xv, yv, act, budget)?;
    let named = named_candidates(xv, yv, act)?;
    let mut report = Report::new(&format!("enumerate {x} {y} {action}"));
    report.count = Some(enrichments.len() as u64);
    for (i, c) in enrichments.iter().enumerate() {
        let labels: Vec<&str> = named
            .iter()
            .filter(|n| &n.relation == c)
            .map(|n| n.kind.as_str())
            .collect();
        let q = c.quantale();
        let rows: Vec<String> = (0..c.rows())
            .map(|r| {
                (0..c.cols())
                    .map(|col| q.element_name(c.get(r, col)).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        report.item(
            format!("enrichment_{i}"),
            true,
            if labels.is_empty() {
                rows.join(", ")
            } else {
                format!("{} [{}]", rows.join(", "), labels.join(", "))
            },
        );
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

pub fn run_roundtrip(env: &Env, name: &str) -> Result<Report, ResolveError> {
    let start = Instant::now();
    let mut report = Report::new(&format!("roundtrip {name}"));
    match env.get(name).ok_or_else(|| missing(name))? {
        Item::Enriched { x, y, ea, x_names, y_names } => {
            let vr = roundtrip_check(x, y, ea)?;
            let pn = pair_names(&ea.action, x_names, y_names);
            let namer = move |_: &str, w: &[usize]| -> Vec<String> {
                w.iter()
                    .map(|&i| pn.get(i).cloned().unwrap_or_else(|| i.to_string()))
                    .collect()
            };
            report.absorb(&vr, &namer);
        }
        Item::Extension { act, cand, x_names, y_names, .. } => {
            let vr = extension_roundtrip(cand)?;
            let pn = pair_names(act, x_names, y_names);
            let namer = move |_: &str, w: &[usize]| -> Vec<String> {
                w.iter()
                    .map(|&i| pn.get(i).cloned().unwrap_or_else(|| i.to_string()))
                    .collect()
            };
            report.absorb(&vr, &namer);
        }
        other => {
            return Err(ResolveError::Core(Error::Domain(format!(
                "`{name}` is a {}, expected an enriched_action or extension",
                other.kind_name()
            ))))
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

fn paired_item(report: &mut Report, name: &str, pc: &PairedCheck) {
    report.item(
        name,
        pc.agree(),
        format!("computed: {}, criterion: {}", pc.computed, pc.criterion),
    );
}

pub fn run_criteria(env: &Env, x: &str, y: &str, action: &str) -> Result<Report, ResolveError> {
    let start = Instant::now();
    let (xv, act, yv) = want_triple(env, x, y, action)?;
    let mut report = Report::new(&format!("criteria {x} {y} {action}"));
    paired_item(&mut report, "lemma1", &lemma1_lex_eq_wlex(xv, yv));
    paired_item(&mut report, "lemma3", &lemma3_wlex_transitive(xv, yv));
    paired_item(&mut report, "lemma4", &lemma4_lex_transitive(xv, yv));
    for cand in named_candidates(xv, yv, act)? {
        let pc = prop1_bounds_check(xv, yv, act, &cand.relation)?;
        paired_item(&mut report, &format!("prop1_{}", cand.kind.as_str()), &pc);
    }
    paired_item(&mut report, "prop2", &prop2_wlex_vmonoid(xv, yv, act)?);
    paired_item(&mut report, "prop3", &prop3_tensor_vmonoid(xv, yv, act)?);
    paired_item(&mut report, "prop6", &prop6_lex_vmonoid(xv, yv, act)?);
    if yv.monoid().is_group() {
        paired_item(&mut report, "corollary3", &corollary3_group_wlex(xv, yv, act)?);
        paired_item(&mut report, "corollary2", &corollary2_group_lex(xv, yv, act)?);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

pub fn run_demo_n_ndot(k: usize) -> Result<Report, ResolveError> {
    let start = Instant::now();
    let demo = qmon_core::preord2::example_n_ndot(k)?;
    let mut report = Report::new(&format!("demo n-ndot --k {k}"));
    for c in &demo.claims {
        report.item(&c.name, c.holds, &c.detail);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

pub fn run_demo_projection() -> Result<Report, ResolveError> {
    let start = Instant::now();
    let demo = qmon_core::preord2::example_projection()?;
    let mut report = Report::new("demo projection");
    for c in &demo.claims {
        report.item(&c.name, c.holds, &c.detail);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Maps a command outcome to the process exit code: 0 all checks pass,
/// 1 a mathematical check failed, 2 input error, 3 budget exceeded.
pub fn exit_code(result: &Result<Report, ResolveError>) -> i32 {
    match result {
        Ok(r) if r.ok => 0,
        Ok(_) => 1,
        Err(ResolveError::Core(Error::Invalid(_))) => 1,
        Err(ResolveError::Core(Error::BudgetExceeded { .. })) => 3,
        Err(_) => 2,
    }
}
