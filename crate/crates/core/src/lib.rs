//! Finite-model workbench for quantale-enriched monoids.
//!
//! The crate decides, for desk-scale finite structures, every construction
//! around semidirect products of monoids enriched in a commutative
//! quantale: V-categories and V-monoids, the tensor / wlex / lex
//! enrichments of a semidirect product, Schreier split extensions and
//! their classification by enriched actions, and the preordered-monoid
//! instantiation over the two-element quantale.
//!
//! Everything is exhaustively checkable: each characterization is exposed
//! as a pair of independently computed booleans (a direct verdict and a
//! criterion) so test sweeps can assert their agreement.

pub mod monoid;
pub mod preord2;
pub mod quantale;
pub mod report;
pub mod schreier;
pub mod search;
pub mod semidirect;
pub mod vcat;
pub mod vmon;

pub use monoid::{FiniteMonoid, MonoidAction, MonoidHom};
pub use quantale::{ChainKind, Quantale};
pub use report::{Error, Result, ValidationReport, Violation};
pub use vcat::{VCategory, VRelation};
pub use vmon::{Cone, VMonoid};
