//! V-relations, V-categories, V-functors and tensor products of
//! V-categories over a fixed quantale.
//!
//! Carriers are index sets `0..n`; the product carrier of a tensor is
//! indexed by `x * |B| + y`. Witness-returning checks scan in lexicographic
//! order so that reports are deterministic.

use crate::quantale::Quantale;
use crate::report::{Error, Result};
use serde_json::json;
use std::sync::Arc;

/// A matrix of quantale values `a(x, y)`, from a source set to a target set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRelation {
    q: Arc<Quantale>,
    rows: usize,
    cols: usize,
    vals: Vec<usize>, // row-major
}

impl VRelation {
    pub fn new(q: Arc<Quantale>, rows: usize, cols: usize, vals: Vec<usize>) -> Result<VRelation> {
        if vals.len() != rows * cols {
            return Err(Error::Structural(format!(
                "relation has {} entries, expected {}",
                vals.len(),
                rows * cols
            )));
        }
        if vals.iter().any(|&v| v >= q.size()) {
            return Err(Error::Structural(
                "relation entry is not a quantale element".into(),
            ));
        }
        Ok(VRelation { q, rows, cols, vals })
    }

    pub fn from_fn(
        q: Arc<Quantale>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> VRelation {
        let vals = (0..rows)
            .flat_map(|x| (0..cols).map(|y| f(x, y)).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        assert!(vals.iter().all(|&v| v < q.size()));
        VRelation { q, rows, cols, vals }
    }

    /// `k` on the diagonal, bottom elsewhere.
    pub fn discrete(q: Arc<Quantale>, n: usize) -> VRelation {
        let unit = q.unit();
        let bottom = q.bottom();
        VRelation::from_fn(q, n, n, |x, y| if x == y { unit } else { bottom })
    }

    /// Top everywhere.
    pub fn chaotic(q: Arc<Quantale>, n: usize) -> VRelation {
        let top = q.top();
        VRelation::from_fn(q, n, n, |_, _| top)
    }

    pub fn quantale(&self) -> &Arc<Quantale> {
        &self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.vals[x * self.cols + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        assert!(v < self.q.size());
        self.vals[x * self.cols + y] = v;
    }

    pub fn values(&self) -> &[usize] {
        &self.vals
    }

    /// First `x` with `k` not below `a(x, x)`, in scan order.
    pub fn reflexivity_witness(&self) -> Option<usize> {
        assert!(self.is_square());
        (0..self.rows).find(|&x| !self.q.leq(self.q.unit(), self.get(x, x)))
    }

    /// First `(x, y, z)` with `a(x,y) (x) a(y,z)` not below `a(x,z)`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        assert!(self.is_square());
        let n = self.rows;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !self
                        .q
                        .leq(self.q.tensor(self.get(x, y), self.get(y, z)), self.get(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexivity_witness().is_none()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    /// Entrywise order: `self(x, y) <= other(x, y)` everywhere.
    pub fn entrywise_leq(&self, other: &VRelation) -> bool {
        assert_eq!(self.q, other.q);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.vals
            .iter()
            .zip(&other.vals)
            .all(|(&a, &b)| self.q.leq(a, b))
    }

    /// Entrywise meet with another relation of the same shape.
    pub fn entrywise_meet(&self, other: &VRelation) -> VRelation {
        assert_eq!(self.q, other.q);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let vals = self
            .vals
            .iter()
            .zip(&other.vals)
            .map(|(&a, &b)| self.q.meet2(a, b))
            .collect();
        VRelation {
            q: self.q.clone(),
            rows: self.rows,
            cols: self.cols,
            vals,
        }
    }

    /// Relational composition `(a ; b)(x, z) = \/_y a(x,y) (x) b(y,z)`.
    pub fn compose(&self, other: &VRelation) -> VRelation {
        assert_eq!(self.q, other.q);
        assert_eq!(self.cols, other.rows);
        let q = self.q.clone();
        VRelation::from_fn(q.clone(), self.rows, other.cols, |x, z| {
            q.join((0..self.cols).map(|y| q.tensor(self.get(x, y), other.get(y, z))))
        })
    }

    /// Smallest reflexive and transitive relation above this one.
    pub fn reflexive_transitive_closure(&self) -> VRelation {
        assert!(self.is_square());
        let q = self.q.clone();
        let mut cur = VRelation::from_fn(q.clone(), self.rows, self.cols, |x, y| {
            if x == y {
                q.join2(self.get(x, y), q.unit())
            } else {
                self.get(x, y)
            }
        });
        loop {
            let step = cur.compose(&cur);
            let next = VRelation::from_fn(q.clone(), self.rows, self.cols, |x, y| {
                q.join2(cur.get(x, y), step.get(x, y))
            });
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!((0..self.rows)
            .map(|x| (0..self.cols)
                .map(|y| self.q.element_name(self.get(x, y)))
                .collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

/// A set with a reflexive and transitive V-relation on it, validated at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VCategory(VRelation);

impl VCategory {
    pub fn new(rel: VRelation) -> Result<VCategory> {
        if !rel.is_square() {
            return Err(Error::Structural("V-category relation must be square".into()));
        }
        let mut report = crate::report::ValidationReport::new();
        if let Some(x) = rel.reflexivity_witness() {
            report.push("reflexivity", vec![x], "k is not below a(x, x)");
        }
        if let Some((x, y, z)) = rel.transitivity_witness() {
            report.push(
                "transitivity",
                vec![x, y, z],
                "a(x,y) (x) a(y,z) is not below a(x,z)",
            );
        }
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        Ok(VCategory(rel))
    }

    pub fn discrete(q: Arc<Quantale>, n: usize) -> VCategory {
        VCategory(VRelation::discrete(q, n))
    }

    pub fn chaotic(q: Arc<Quantale>, n: usize) -> VCategory {
        VCategory(VRelation::chaotic(q, n))
    }

    pub fn relation(&self) -> &VRelation {
        &self.0
    }

    pub fn into_relation(self) -> VRelation {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, x: usize, y: usize) -> usize {
        self.0.get(x, y)
    }

    pub fn quantale(&self) -> &Arc<Quantale> {
        self.0.quantale()
    }
}

/// First `(x1, x2)` violating `a(x1, x2) <= b(f(x1), f(x2))`.
pub fn vfunctor_witness(f: &[usize], a: &VRelation, b: &VRelation) -> Option<(usize, usize)> {
    assert!(a.is_square() && b.is_square());
    assert_eq!(f.len(), a.rows());
    assert!(f.iter().all(|&v| v < b.rows()));
    let q = a.quantale();
    assert_eq!(q, b.quantale());
    for x1 in 0..a.rows() {
        for x2 in 0..a.rows() {
            if !q.leq(a.get(x1, x2), b.get(f[x1], f[x2])) {
                return Some((x1, x2));
            }
        }
    }
    None
}

pub fn is_vfunctor(f: &[usize], a: &VRelation, b: &VRelation) -> bool {
    vfunctor_witness(f, a, b).is_none()
}

/// Componentwise tensor of two relations on a product carrier:
/// `(a (x) b)((x, y), (x', y')) = a(x, x') (x) b(y, y')`.
pub fn tensor_relation(a: &VRelation, b: &VRelation) -> VRelation {
    assert!(a.is_square() && b.is_square());
    let q = a.quantale().clone();
    assert_eq!(&q, b.quantale());
    let (na, nb) = (a.rows(), b.rows());
    VRelation::from_fn(q.clone(), na * nb, na * nb, |p, r| {
        let (x, y) = (p / nb, p % nb);
        let (x2, y2) = (r / nb, r % nb);
        q.tensor(a.get(x, x2), b.get(y, y2))
    })
}

/// Tensor product of V-categories. Well-defined because the quantale is
/// commutative.
pub fn tensor_vcat(a: &VCategory, b: &VCategory) -> VCategory {
    VCategory(tensor_relation(a.relation(), b.relation()))
}
