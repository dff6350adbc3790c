//! Turns a parsed document into core objects. Definitions resolve in
//! order; references must point at earlier definitions. Structural
//! problems surface as diagnostics with positions; violations of the
//! mathematical laws surface as core validation errors.

use crate::ast::{Clause, ClauseBody, Def, DefKind, Document, Row};
use crate::parser::{Diagnostic, DiagnosticClass};
use qmon_core::schreier::{normalized_candidate, EnrichedAction, SplitExtensionCandidate};
use qmon_core::vcat::VRelation;
use qmon_core::vmon::{Cone, VMonoid};
use qmon_core::{Error, FiniteMonoid, MonoidAction, Quantale};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Debug)]
pub enum ResolveError {
    Diag(Diagnostic),
    Core(Error),
}

impl From<Diagnostic> for ResolveError {
    fn from(d: Diagnostic) -> Self {
        ResolveError::Diag(d)
    }
}

impl From<Error> for ResolveError {
    fn from(e: Error) -> Self {
        ResolveError::Core(e)
    }
}

#[derive(Debug, Clone)]
pub enum Item {
    Quantale(Arc<Quantale>),
    Monoid {
        m: FiniteMonoid,
        names: Vec<String>,
    },
    Relation {
        rel: VRelation,
        names: Vec<String>,
    },
    VMonoid {
        vm: VMonoid,
        names: Vec<String>,
    },
    Action {
        act: MonoidAction,
        acting_names: Vec<String>,
        acted_names: Vec<String>,
    },
    Cone {
        cone: Cone,
        monoid: FiniteMonoid,
        names: Vec<String>,
    },
    Enriched {
        x: VMonoid,
        y: VMonoid,
        ea: EnrichedAction,
        x_names: Vec<String>,
        y_names: Vec<String>,
    },
    Extension {
        x: VMonoid,
        y: VMonoid,
        act: MonoidAction,
        cand: SplitExtensionCandidate,
        x_names: Vec<String>,
        y_names: Vec<String>,
    },
}

impl Item {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Item::Quantale(_) => "quantale",
            Item::Monoid { .. } => "monoid",
            Item::Relation { .. } => "vrelation",
            Item::VMonoid { .. } => "vmonoid",
            Item::Action { .. } => "action",
            Item::Cone { .. } => "cone",
            Item::Enriched { .. } => "enriched_action",
            Item::Extension { .. } => "extension",
        }
    }
}

#[derive(Debug, Default)]
pub struct Env {
    items: HashMap<String, Item>,
    pub order: Vec<String>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.get(name)
    }
}

fn diag(class: DiagnosticClass, clause_pos: (usize, usize), message: String) -> ResolveError {
    ResolveError::Diag(Diagnostic {
        class,
        line: clause_pos.0,
        col: clause_pos.1,
        message,
    })
}

fn pos(c: &Clause) -> (usize, usize) {
    (c.line, c.col)
}

pub fn resolve(doc: &Document) -> Result<Env, ResolveError> {
    let mut env = Env::default();
    for def in &doc.defs {
        if env.items.contains_key(&def.name) {
            return Err(diag(
                DiagnosticClass::DuplicateName,
                (def.line, def.col),
                format!("`{}` is defined twice", def.name),
            ));
        }
        let item = resolve_def(&env, def)?;
        env.order.push(def.name.clone());
        env.items.insert(def.name.clone(), item);
    }
    Ok(env)
}

fn resolve_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    match def.kind {
        DefKind::Quantale => quantale_def(def),
        DefKind::Monoid => monoid_def(def),
        DefKind::VRelation => vrelation_def(env, def),
        DefKind::VMonoid => vmonoid_def(env, def),
        DefKind::Action => action_def(env, def),
        DefKind::Cone => cone_def(env, def),
        DefKind::EnrichedAction => enriched_def(env, def),
        DefKind::Extension => extension_def(env, def),
    }
}

fn required<'a>(def: &'a Def, keyword: &str) -> Result<&'a Clause, ResolveError> {
    def.clause(keyword).ok_or_else(|| {
        diag(
            DiagnosticClass::ArityMismatch,
            (def.line, def.col),
            format!("{} `{}` needs a `{keyword}` clause", def.kind, def.name),
        )
    })
}

fn names_body<'a>(c: &'a Clause) -> Result<&'a [String], ResolveError> {
    match &c.body {
        ClauseBody::Names(names) => Ok(names),
        _ => Err(diag(
            DiagnosticClass::ArityMismatch,
            pos(c),
            format!("`{}` takes a list of names", c.keyword),
        )),
    }
}

fn single_name<'a>(c: &'a Clause) -> Result<&'a str, ResolveError> {
    let names = names_body(c)?;
    if names.len() != 1 {
        return Err(diag(
            DiagnosticClass::ArityMismatch,
            pos(c),
            format!("`{}` takes exactly one name", c.keyword),
        ));
    }
    Ok(&names[0])
}

fn rows_body<'a>(c: &'a Clause, lhs_arity: usize) -> Result<&'a [Row], ResolveError> {
    match &c.body {
        ClauseBody::Rows(rows) => {
            for r in rows {
                if r.lhs.len() != lhs_arity {
                    return Err(diag(
                        DiagnosticClass::ArityMismatch,
                        pos(c),
                        format!(
                            "`{}` rows take {} argument(s) on the left, found {}",
                            c.keyword,
                            lhs_arity,
                            r.lhs.len()
                        ),
                    ));
                }
            }
            Ok(rows)
        }
        _ => Err(diag(
            DiagnosticClass::ArityMismatch,
            pos(c),
            format!("`{}` takes mapping rows", c.keyword),
        )),
    }
}

/// Element lookup inside one definition's carrier.
struct Carrier {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Carrier {
    fn new(c: &Clause) -> Result<Self, ResolveError> {
        let names = names_body(c)?.to_vec();
        if names.is_empty() {
            return Err(diag(
                DiagnosticClass::ArityMismatch,
                pos(c),
                "`elements` needs at least one element".into(),
            ));
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(diag(
                    DiagnosticClass::DuplicateName,
                    pos(c),
                    format!("element `{n}` listed twice"),
                ));
            }
        }
        Ok(Carrier { names, index })
    }

    fn from_names(names: &[String]) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Carrier { names: names.to_vec(), index }
    }

    fn get(&self, name: &str, at: (usize, usize)) -> Result<usize, ResolveError> {
        self.index.get(name).copied().ok_or_else(|| {
            diag(
                DiagnosticClass::UnresolvedReference,
                at,
                format!("unknown element `{name}`"),
            )
        })
    }
}

/// Reflexive-transitive closure of generating pairs as a boolean matrix.
fn close_pairs(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[i][i] = true;
    }
    for &(a, b) in pairs {
        leq[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    leq
}

fn order_pairs(c: &Clause, carrier: &Carrier) -> Result<Vec<(usize, usize)>, ResolveError> {
    match &c.body {
        ClauseBody::Pairs(pairs) => pairs
            .iter()
            .map(|(a, b)| Ok((carrier.get(a, pos(c))?, carrier.get(b, pos(c))?)))
            .collect(),
        _ => Err(diag(
            DiagnosticClass::ArityMismatch,
            pos(c),
            format!("`{}` takes `a <= b` pairs", c.keyword),
        )),
    }
}

fn quantale_def(def: &Def) -> Result<Item, ResolveError> {
    let carrier = Carrier::new(required(def, "elements")?)?;
    let n = carrier.names.len();
    let pairs = match def.clause("order") {
        Some(c) => order_pairs(c, &carrier)?,
        None => Vec::new(),
    };
    let leq = close_pairs(n, &pairs);
    let unit_clause = required(def, "unit")?;
    let unit = carrier.get(single_name(unit_clause)?, pos(unit_clause))?;

    let tensor_clause = required(def, "tensor")?;
    let tensor: Vec<Vec<usize>> = match &tensor_clause.body {
        ClauseBody::Names(names) if names.len() == 1 && names[0] == "meet" => {
            // Greatest lower bounds of the closed order; fails if the
            // order is not a meet-semilattice.
            let mut table = vec![vec![0usize; n]; n];
            for a in 0..n {
                for b in 0..n {
                    let lower: Vec<usize> =
                        (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                    let glb = lower
                        .iter()
                        .copied()
                        .find(|&m| lower.iter().all(|&c| leq[c][m]))
                        .ok_or_else(|| {
                            Error::Domain(format!(
                                "order has no meet for `{}` and `{}`",
                                carrier.names[a], carrier.names[b]
                            ))
                        })?;
                    table[a][b] = glb;
                }
            }
            table
        }
        _ => {
            let rows = rows_body(tensor_clause, 2)?;
            let mut table = vec![vec![None; n]; n];
            for r in rows {
                let a = carrier.get(&r.lhs[0], pos(tensor_clause))?;
                let b = carrier.get(&r.lhs[1], pos(tensor_clause))?;
                let v = carrier.get(&r.rhs, pos(tensor_clause))?;
                if table[a][b].replace(v).is_some() {
                    return Err(diag(
                        DiagnosticClass::ArityMismatch,
                        pos(tensor_clause),
                        format!("tensor row for `{} {}` given twice", r.lhs[0], r.lhs[1]),
                    ));
                }
            }
            let mut out = vec![vec![0usize; n]; n];
            for a in 0..n {
                for b in 0..n {
                    out[a][b] = table[a][b].ok_or_else(|| {
                        diag(
                            DiagnosticClass::ArityMismatch,
                            pos(tensor_clause),
                            format!(
                                "tensor table is missing the row for `{} {}`",
                                carrier.names[a], carrier.names[b]
                            ),
                        )
                    })?;
                }
            }
            out
        }
    };
    let q = Quantale::from_tables(carrier.names, leq, tensor, unit)?;
    Ok(Item::Quantale(q))
}

fn monoid_def(def: &Def) -> Result<Item, ResolveError> {
    let carrier = Carrier::new(required(def, "elements")?)?;
    let n = carrier.names.len();
    let unit_clause = required(def, "unit")?;
    let unit = carrier.get(single_name(unit_clause)?, pos(unit_clause))?;
    let mut op = vec![None; n * n];
    // The identity row and column are implied by the unit clause.
    for a in 0..n {
        op[a * n + unit] = Some(a);
        op[unit * n + a] = Some(a);
    }
    if let Some(c) = def.clause("table") {
        for r in rows_body(c, 2)? {
            let a = carrier.get(&r.lhs[0], pos(c))?;
            let b = carrier.get(&r.lhs[1], pos(c))?;
            let v = carrier.get(&r.rhs, pos(c))?;
            let prev = op[a * n + b].replace(v);
            if prev.is_some() && prev != Some(v) {
                return Err(diag(
                    DiagnosticClass::ArityMismatch,
                    pos(c),
                    format!("conflicting entries for `{} {}`", r.lhs[0], r.lhs[1]),
                ));
            }
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(op[a * n + b].ok_or_else(|| {
                diag(
                    DiagnosticClass::ArityMismatch,
                    (def.line, def.col),
                    format!(
                        "table is missing the entry for `{} {}`",
                        carrier.names[a], carrier.names[b]
                    ),
                )
            })?);
        }
    }
    let m = FiniteMonoid::new(n, table, unit)?;
    Ok(Item::Monoid { m, names: carrier.names })
}

fn lookup<'a>(env: &'a Env, def: &Def, keyword: &str) -> Result<(&'a Item, String), ResolveError> {
    let c = required(def, keyword)?;
    let name = single_name(c)?;
    let item = env.get(name).ok_or_else(|| {
        diag(
            DiagnosticClass::UnresolvedReference,
            pos(c),
            format!("`{name}` is not defined"),
        )
    })?;
    Ok((item, name.to_string()))
}

fn want_quantale(env: &Env, def: &Def, keyword: &str) -> Result<Arc<Quantale>, ResolveError> {
    match lookup(env, def, keyword)? {
        (Item::Quantale(q), _) => Ok(q.clone()),
        (other, name) => Err(diag(
            DiagnosticClass::UnresolvedReference,
            (def.line, def.col),
            format!("`{name}` is a {}, expected a quantale", other.kind_name()),
        )),
    }
}

fn want_monoid(env: &Env, def: &Def, keyword: &str) -> Result<(FiniteMonoid, Vec<String>), ResolveError> {
    match lookup(env, def, keyword)? {
        (Item::Monoid { m, names }, _) => Ok((m.clone(), names.clone())),
        (other, name) => Err(diag(
            DiagnosticClass::UnresolvedReference,
            (def.line, def.col),
            format!("`{name}` is a {}, expected a monoid", other.kind_name()),
        )),
    }
}

fn want_vmonoid(env: &Env, def: &Def, keyword: &str) -> Result<(VMonoid, Vec<String>), ResolveError> {
    match lookup(env, def, keyword)? {
        (Item::VMonoid { vm, names }, _) => Ok((vm.clone(), names.clone())),
        (other, name) => Err(diag(
            DiagnosticClass::UnresolvedReference,
            (def.line, def.col),
            format!("`{name}` is a {}, expected a vmonoid", other.kind_name()),
        )),
    }
}

fn want_action(env: &Env, def: &Def, keyword: &str) -> Result<MonoidAction, ResolveError> {
    match lookup(env, def, keyword)? {
        (Item::Action { act, .. }, _) => Ok(act.clone()),
        (other, name) => Err(diag(
            DiagnosticClass::UnresolvedReference,
            (def.line, def.col),
            format!("`{name}` is a {}, expected an action", other.kind_name()),
        )),
    }
}

/// Quantale element lookup for matrix and cone values.
fn qvalue(q: &Quantale, name: &str, at: (usize, usize)) -> Result<usize, ResolveError> {
    q.index_of(name).ok_or_else(|| {
        diag(
            DiagnosticClass::UnresolvedReference,
            at,
            format!("`{name}` is not an element of the quantale"),
        )
    })
}

fn vrelation_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    let q = want_quantale(env, def, "quantale")?;
    let carrier = Carrier::new(required(def, "elements")?)?;
    let n = carrier.names.len();
    let rel = if let Some(c) = def.clause("matrix") {
        let rows: Vec<Vec<String>> = match &c.body {
            ClauseBody::Matrix(rows) => rows.clone(),
            ClauseBody::Names(row) => vec![row.clone()],
            _ => {
                return Err(diag(
                    DiagnosticClass::ArityMismatch,
                    pos(c),
                    "`matrix` takes comma-separated rows of entries".into(),
                ))
            }
        };
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(diag(
                DiagnosticClass::ArityMismatch,
                pos(c),
                format!("matrix must be {n} rows of {n} entries"),
            ));
        }
        let mut rel = VRelation::discrete(q.clone(), n);
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                rel.set(i, j, qvalue(&q, cell, pos(c))?);
            }
        }
        rel
    } else if let Some(c) = def.clause("order") {
        // Generating inequalities, closed at load: related pairs get the
        // unit, everything else bottom.
        let pairs = order_pairs(c, &carrier)?;
        let leq = close_pairs(n, &pairs);
        VRelation::from_fn(q.clone(), n, n, |x, y| {
            if leq[x][y] {
                q.unit()
            } else {
                q.bottom()
            }
        })
    } else {
        return Err(diag(
            DiagnosticClass::ArityMismatch,
            (def.line, def.col),
            format!("vrelation `{}` needs a `matrix` or `order` clause", def.name),
        ));
    };
    Ok(Item::Relation { rel, names: carrier.names })
}

fn vmonoid_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    let (m, m_names) = want_monoid(env, def, "monoid")?;
    let (rel, r_names) = match lookup(env, def, "relation")? {
        (Item::Relation { rel, names }, _) => (rel.clone(), names.clone()),
        (other, name) => {
            return Err(diag(
                DiagnosticClass::UnresolvedReference,
                (def.line, def.col),
                format!("`{name}` is a {}, expected a vrelation", other.kind_name()),
            ))
        }
    };
    if m_names != r_names {
        return Err(diag(
            DiagnosticClass::ArityMismatch,
            (def.line, def.col),
            "monoid and relation carriers differ".into(),
        ));
    }
    let vm = VMonoid::from_relation(m, rel)?;
    Ok(Item::VMonoid { vm, names: m_names })
}

fn action_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    let (y, y_names) = want_monoid(env, def, "acting")?;
    let (x, x_names) = want_monoid(env, def, "acted")?;
    let yc = Carrier::from_names(&y_names);
    let xc = Carrier::from_names(&x_names);
    let act = if def.clause("trivial").is_some() {
        MonoidAction::trivial(y, x)
    } else {
        let c = required(def, "table")?;
        let mut table = vec![None; y_names.len() * x_names.len()];
        for r in rows_body(c, 2)? {
            let yi = yc.get(&r.lhs[0], pos(c))?;
            let xi = xc.get(&r.lhs[1], pos(c))?;
            let v = xc.get(&r.rhs, pos(c))?;
            table[yi * x_names.len() + xi] = Some(v);
        }
        let table: Vec<usize> = table
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    diag(
                        DiagnosticClass::ArityMismatch,
                        pos(c),
                        format!(
                            "action table is missing the row for `{} {}`",
                            y_names[i / x_names.len()],
                            x_names[i % x_names.len()]
                        ),
                    )
                })
            })
            .collect::<Result<_, _>>()?;
        MonoidAction::new(y, x, table)?
    };
    let report = act.validate();
    if !report.is_valid() {
        return Err(ResolveError::Core(Error::Invalid(report)));
    }
    Ok(Item::Action {
        act,
        acting_names: y_names,
        acted_names: x_names,
    })
}

fn cone_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    let q = want_quantale(env, def, "quantale")?;
    let (m, names) = want_monoid(env, def, "monoid")?;
    let carrier = Carrier::from_names(&names);
    let c = required(def, "cone")?;
    let mut values = vec![q.bottom(); names.len()];
    match &c.body {
        // A bare element list marks members with the unit.
        ClauseBody::Names(members) => {
            for member in members {
                values[carrier.get(member, pos(c))?] = q.unit();
            }
        }
        ClauseBody::Rows(_) => {
            for r in rows_body(c, 1)? {
                let x = carrier.get(&r.lhs[0], pos(c))?;
                values[x] = qvalue(&q, &r.rhs, pos(c))?;
            }
        }
        _ => {
            return Err(diag(
                DiagnosticClass::ArityMismatch,
                pos(c),
                "`cone` takes an element list or `x -> v` rows".into(),
            ))
        }
    }
    let cone = Cone::new(q, values)?;
    Ok(Item::Cone { cone, monoid: m, names })
}

fn enriched_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    let (x, x_names) = want_vmonoid(env, def, "x")?;
    let (y, y_names) = want_vmonoid(env, def, "y")?;
    let act = want_action(env, def, "action")?;
    check_action_shape(&act, &x, &y, def)?;
    let q = x.quantale().clone();
    let xc = Carrier::from_names(&x_names);
    let yc = Carrier::from_names(&y_names);
    let c = required(def, "cone")?;
    let mut p = vec![q.bottom(); x.size() * y.size()];
    for r in rows_body(c, 2)? {
        let xi = xc.get(&r.lhs[0], pos(c))?;
        let yi = yc.get(&r.lhs[1], pos(c))?;
        p[act.pair_index(xi, yi)] = qvalue(&q, &r.rhs, pos(c))?;
    }
    let ea = EnrichedAction { action: act, p };
    Ok(Item::Enriched { x, y, ea, x_names, y_names })
}

fn extension_def(env: &Env, def: &Def) -> Result<Item, ResolveError> {
    let (x, x_names) = want_vmonoid(env, def, "x")?;
    let (y, y_names) = want_vmonoid(env, def, "y")?;
    let act = want_action(env, def, "action")?;
    check_action_shape(&act, &x, &y, def)?;
    let (rel, _) = match lookup(env, def, "relation")? {
        (Item::Relation { rel, names }, _) => (rel.clone(), names.clone()),
        (other, name) => {
            return Err(diag(
                DiagnosticClass::UnresolvedReference,
                (def.line, def.col),
                format!("`{name}` is a {}, expected a vrelation", other.kind_name()),
            ))
        }
    };
    if rel.rows() != x.size() * y.size() {
        return Err(diag(
            DiagnosticClass::ArityMismatch,
            (def.line, def.col),
            format!(
                "relation carrier has {} points, expected {} (the product)",
                rel.rows(),
                x.size() * y.size()
            ),
        ));
    }
    let cand = normalized_candidate(&x, &y, &act, rel)?;
    Ok(Item::Extension { x, y, act, cand, x_names, y_names })
}

fn check_action_shape(
    act: &MonoidAction,
    x: &VMonoid,
    y: &VMonoid,
    def: &Def,
) -> Result<(), ResolveError> {
    if act.acting() != y.monoid() || act.acted() != x.monoid() {
        return Err(diag(
            DiagnosticClass::ArityMismatch,
            (def.line, def.col),
            "action does not match the chosen x and y monoids".into(),
        ));
    }
    Ok(())
}
