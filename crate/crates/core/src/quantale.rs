//! Finite commutative unital quantales.
//!
//! A quantale is given by an element list, a partial order, a tensor table
//! and a unit. Joins, meets, top and bottom are derived at construction.
//! Finite completeness is encoded as binary joins/meets plus top and bottom;
//! arbitrary joins are folds of binary joins, which is equivalent in a
//! finite lattice. Distributivity of the tensor over arbitrary joins is
//! validated as binary-join distributivity plus bottom absorption.

use crate::report::{Error, Result, ValidationReport};
use serde_json::json;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantale {
    elements: Vec<String>,
    leq: Vec<bool>,    // row-major: leq[a * n + b] == (a <= b)
    tensor: Vec<usize>,
    unit: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
    top: usize,
    bottom: usize,
}

/// Tensor choice for [`Quantale::chain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    /// `0 < 1 < ... < n-1`, tensor is min, unit is the top. Pointed.
    Meet,
    /// Elements read as costs with the order reversed; tensor is truncated
    /// addition and the unit is the top of the reversed order. Pointed.
    TruncatedAddReversed,
}

fn structural_check(
    elements: &[String],
    leq: &[Vec<bool>],
    tensor: &[Vec<usize>],
    unit: usize,
) -> Result<()> {
    let n = elements.len();
    if n == 0 {
        return Err(Error::Structural("empty element list".into()));
    }
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        return Err(Error::Structural(format!(
            "leq table is not a {n}x{n} matrix"
        )));
    }
    if tensor.len() != n || tensor.iter().any(|row| row.len() != n) {
        return Err(Error::Structural(format!(
            "tensor table is not a {n}x{n} matrix"
        )));
    }
    if let Some(v) = tensor.iter().flatten().find(|&&v| v >= n) {
        return Err(Error::Structural(format!(
            "tensor entry {v} out of range for {n} elements"
        )));
    }
    if unit >= n {
        return Err(Error::Structural(format!(
            "unit index {unit} out of range for {n} elements"
        )));
    }
    Ok(())
}

/// Least upper bound of `a` and `b` under `leq`, if it exists.
fn lub(n: usize, leq: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let uppers: Vec<usize> = (0..n).filter(|&c| leq[a][c] && leq[b][c]).collect();
    uppers
        .iter()
        .copied()
        .find(|&c| uppers.iter().all(|&d| leq[c][d]))
}

fn glb(n: usize, leq: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let lowers: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
    lowers
        .iter()
        .copied()
        .find(|&c| lowers.iter().all(|&d| leq[d][c]))
}

/// Checks every quantale axiom, returning one violation per failed law with
/// a concrete witness. Structural defects (ragged or out-of-range tables)
/// are reported as an error instead, never as a violation.
pub fn validate_quantale(
    elements: &[String],
    leq: &[Vec<bool>],
    tensor: &[Vec<usize>],
    unit: usize,
) -> Result<ValidationReport> {
    structural_check(elements, leq, tensor, unit)?;
    let n = elements.len();
    let mut report = ValidationReport::new();

    for a in 0..n {
        if !leq[a][a] {
            report.push("order reflexivity", vec![a], "a <= a fails");
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                report.push("order antisymmetry", vec![a, b], "a <= b and b <= a");
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    report.push(
                        "order transitivity",
                        vec![a, b, c],
                        "a <= b and b <= c but not a <= c",
                    );
                }
            }
        }
    }
    if !report.is_valid() {
        // Not a partial order; the lattice-dependent checks are meaningless.
        return Ok(report);
    }

    let mut lattice_ok = true;
    for a in 0..n {
        for b in 0..n {
            if lub(n, leq, a, b).is_none() {
                report.push("binary join exists", vec![a, b], "pair has no join");
                lattice_ok = false;
            }
            if glb(n, leq, a, b).is_none() {
                report.push("binary meet exists", vec![a, b], "pair has no meet");
                lattice_ok = false;
            }
        }
    }
    let top = (0..n).find(|&t| (0..n).all(|a| leq[a][t]));
    let bottom = (0..n).find(|&b| (0..n).all(|a| leq[b][a]));
    if top.is_none() {
        report.push("top exists", vec![], "no greatest element");
        lattice_ok = false;
    }
    if bottom.is_none() {
        report.push("bottom exists", vec![], "no least element");
        lattice_ok = false;
    }

    for a in 0..n {
        for b in 0..n {
            if tensor[a][b] != tensor[b][a] {
                report.push("tensor commutativity", vec![a, b], "a (x) b != b (x) a");
            }
            for c in 0..n {
                if tensor[tensor[a][b]][c] != tensor[a][tensor[b][c]] {
                    report.push(
                        "tensor associativity",
                        vec![a, b, c],
                        "(a (x) b) (x) c != a (x) (b (x) c)",
                    );
                }
            }
        }
        if tensor[unit][a] != a || tensor[a][unit] != a {
            report.push("unit law", vec![a], "k (x) a != a");
        }
    }

    if lattice_ok {
        let bot = bottom.unwrap();
        for a in 0..n {
            if tensor[a][bot] != bot {
                report.push(
                    "bottom absorption",
                    vec![a],
                    "a (x) bottom != bottom (empty-join distributivity)",
                );
            }
            for b in 0..n {
                for c in 0..n {
                    let j = lub(n, leq, b, c).unwrap();
                    let lhs = tensor[a][j];
                    let rhs = lub(n, leq, tensor[a][b], tensor[a][c]).unwrap();
                    if lhs != rhs {
                        report.push(
                            "join distributivity",
                            vec![a, b, c],
                            "a (x) (b v c) != (a (x) b) v (a (x) c)",
                        );
                    }
                }
            }
        }
        // Monotonicity is a consequence of distributivity; checked
        // independently as a sanity invariant.
        for v1 in 0..n {
            for v2 in 0..n {
                if !leq[v1][v2] {
                    continue;
                }
                for w1 in 0..n {
                    for w2 in 0..n {
                        if leq[w1][w2] && !leq[tensor[v1][w1]][tensor[v2][w2]] {
                            report.push(
                                "tensor monotonicity",
                                vec![v1, v2, w1, w2],
                                "v1 <= v2, w1 <= w2 but not v1 (x) w1 <= v2 (x) w2",
                            );
                        }
                    }
                }
            }
        }
    }

    Ok(report)
}

impl Quantale {
    /// Builds a quantale from raw tables, validating every axiom.
    pub fn from_tables(
        elements: Vec<String>,
        leq: Vec<Vec<bool>>,
        tensor: Vec<Vec<usize>>,
        unit: usize,
    ) -> Result<Arc<Quantale>> {
        let report = validate_quantale(&elements, &leq, &tensor, unit)?;
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let n = elements.len();
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                join[a * n + b] = lub(n, &leq, a, b).unwrap();
                meet[a * n + b] = glb(n, &leq, a, b).unwrap();
            }
        }
        let top = (0..n).find(|&t| (0..n).all(|a| leq[a][t])).unwrap();
        let bottom = (0..n).find(|&b| (0..n).all(|a| leq[b][a])).unwrap();
        let mut flat_leq = vec![false; n * n];
        let mut flat_tensor = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                flat_leq[a * n + b] = leq[a][b];
                flat_tensor[a * n + b] = tensor[a][b];
            }
        }
        Ok(Arc::new(Quantale {
            elements,
            leq: flat_leq,
            tensor: flat_tensor,
            unit,
            join,
            meet,
            top,
            bottom,
        }))
    }

    /// The two-element quantale `2 = ({0,1}, <=, /\, 1)` with `0 <= 1`.
    pub fn two() -> Arc<Quantale> {
        Quantale::chain(2, ChainKind::Meet).unwrap()
    }

    /// A chain quantale on `n` elements. Both kinds are pointed.
    pub fn chain(n: usize, kind: ChainKind) -> Result<Arc<Quantale>> {
        if n == 0 {
            return Err(Error::Domain("chain length must be positive".into()));
        }
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let (leq, tensor, unit): (Vec<Vec<bool>>, Vec<Vec<usize>>, usize) = match kind {
            ChainKind::Meet => (
                (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
                (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect(),
                n - 1,
            ),
            ChainKind::TruncatedAddReversed => (
                (0..n).map(|a| (0..n).map(|b| a >= b).collect()).collect(),
                (0..n)
                    .map(|a| (0..n).map(|b| (a + b).min(n - 1)).collect())
                    .collect(),
                0,
            ),
        };
        Quantale::from_tables(elements, leq, tensor, unit)
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// A quantale is pointed when its unit is the top element; this is
    /// exactly when the category of enriched monoids is pointed.
    pub fn is_pointed(&self) -> bool {
        self.unit == self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.tensor[a * self.size() + b]
    }

    pub fn join2(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn meet2(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    /// Join of an arbitrary finite family; the empty join is bottom.
    pub fn join(&self, values: impl IntoIterator<Item = usize>) -> usize {
        values
            .into_iter()
            .fold(self.bottom, |acc, v| self.join2(acc, v))
    }

    /// Meet of an arbitrary finite family; the empty meet is top.
    pub fn meet(&self, values: impl IntoIterator<Item = usize>) -> usize {
        values.into_iter().fold(self.top, |acc, v| self.meet2(acc, v))
    }

    /// All values `v` with `lo <= v <= hi`, in stored element order.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&v| self.leq(lo, v) && self.leq(v, hi))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.size();
        json!({
            "elements": self.elements,
            "leq": (0..n).map(|a| (0..n).map(|b| self.leq(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "tensor": (0..n).map(|a| (0..n).map(|b| self.tensor(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "unit": self.unit,
        })
    }
}

/// True iff the quantale's unit equals its top element.
pub fn is_pointed(q: &Quantale) -> bool {
    q.is_pointed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn two_is_valid_and_pointed() {
        let q = Quantale::two();
        assert_eq!(q.size(), 2);
        assert_eq!(q.tensor(1, 1), 1);
        assert_eq!(q.tensor(0, 1), 0);
        assert!(q.is_pointed());
        assert_eq!(q.unit(), 1);
        assert_eq!(q.top(), 1);
        assert_eq!(q.bottom(), 0);
        let report = validate_quantale(
            &names(2),
            &vec![vec![true, true], vec![false, true]],
            &vec![vec![0, 0], vec![0, 1]],
            1,
        )
        .unwrap();
        assert!(report.is_valid());
    }

    #[test]
    fn terminal_quantale_is_valid() {
        let q = Quantale::from_tables(vec!["k".into()], vec![vec![true]], vec![vec![0]], 0).unwrap();
        assert!(q.is_pointed());
        assert_eq!(q.tensor(0, 0), 0);
    }

    #[test]
    fn broken_unit_law_reported_with_witness() {
        // 2 with the tensor redefined so that 1 (x) 1 = 0.
        let report = validate_quantale(
            &names(2),
            &vec![vec![true, true], vec![false, true]],
            &vec![vec![0, 0], vec![0, 0]],
            1,
        )
        .unwrap();
        assert!(report.violates("unit law"));
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "unit law" && v.witness == vec![1]));
    }

    #[test]
    fn ragged_table_is_structural_error() {
        let err = validate_quantale(
            &names(2),
            &vec![vec![true, true]],
            &vec![vec![0, 0], vec![0, 1]],
            1,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn out_of_range_tensor_entry_is_structural_error() {
        let err = validate_quantale(
            &names(2),
            &vec![vec![true, true], vec![false, true]],
            &vec![vec![0, 0], vec![0, 7]],
            1,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn chains_are_valid_and_pointed() {
        for n in 1..=5 {
            let q = Quantale::chain(n, ChainKind::Meet).unwrap();
            assert!(q.is_pointed());
            let q = Quantale::chain(n, ChainKind::TruncatedAddReversed).unwrap();
            assert!(q.is_pointed());
        }
        assert!(matches!(
            Quantale::chain(0, ChainKind::Meet),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn chain2_meet_matches_two() {
        let c = Quantale::chain(2, ChainKind::Meet).unwrap();
        let two = Quantale::two();
        assert_eq!(*c, *two);
    }

    #[test]
    fn unit_not_top_is_not_pointed() {
        // 3-chain {0 < 1 < 2} with a multiplicative tensor: 0 is
        // absorbing, 1 is the unit, 2 is idempotent. Unit below top, so
        // not pointed.
        let q = Quantale::from_tables(
            (0..3).map(|i| i.to_string()).collect(),
            (0..3).map(|a| (0..3).map(|b| a <= b).collect()).collect(),
            vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]],
            1,
        )
        .unwrap();
        assert!(!q.is_pointed());
    }

    #[test]
    fn join_meet_agree_with_brute_force_search() {
        for q in [
            Quantale::two(),
            Quantale::chain(4, ChainKind::Meet).unwrap(),
            Quantale::chain(4, ChainKind::TruncatedAddReversed).unwrap(),
        ] {
            let n = q.size();
            for a in 0..n {
                for b in 0..n {
                    let j = q.join2(a, b);
                    assert!(q.leq(a, j) && q.leq(b, j));
                    for c in 0..n {
                        if q.leq(a, c) && q.leq(b, c) {
                            assert!(q.leq(j, c));
                        }
                    }
                    let m = q.meet2(a, b);
                    assert!(q.leq(m, a) && q.leq(m, b));
                    for c in 0..n {
                        if q.leq(c, a) && q.leq(c, b) {
                            assert!(q.leq(c, m));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn empty_join_is_bottom_and_empty_meet_is_top() {
        let q = Quantale::two();
        assert_eq!(q.join([]), 0);
        assert_eq!(q.meet([]), 1);
        assert_eq!(q.join([0, 1]), 1);
        let c3 = Quantale::chain(3, ChainKind::Meet).unwrap();
        assert_eq!(c3.meet([0, 2]), 0);
    }
}
