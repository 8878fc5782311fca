//! Exact-arithmetic toolkit for finite-dimensional Leibniz algebras.
//!
//! Everything is computed over ℚ or over the rational function field ℚ(a),
//! so every verdict produced here (a centralizer basis, a nilpotency class,
//! a CL-condition check) is exact: there are no tolerances anywhere.
//!
//! The crate is organized as:
//!
//! - [`scalar`] — canonical rationals and rational functions, plus a small
//!   text grammar for scalar expressions.
//! - [`linalg`] — vectors, matrices and canonical (RREF-basis) subspaces
//!   over either field.
//! - [`algebra`] — structure-constant Leibniz algebras: bracket evaluation,
//!   Leibniz-identity validation, series, squares ideal, derived brackets
//!   and basis transport.
//! - [`centralizer`] — left/right/two-sided centralizers, the CL-algebra
//!   conditions, CL-elements and the CL-element subspace.
//! - [`morphism`] — morphism/isomorphism checks and centralizer transport.
//! - [`action`] — finite group actions by algebra automorphisms and the
//!   invariance of CL-elements under them.
//! - [`catalog`] — the built-in classification tables of nilpotent Leibniz
//!   algebras in dimensions ≤ 4, with provenance citations.

pub mod action;
pub mod algebra;
pub mod catalog;
pub mod centralizer;
pub mod linalg;
pub mod morphism;
pub mod rng;
pub mod scalar;

pub use action::{ActionError, ActionReport, FiniteGroupAction, ValidatedAction};
pub use algebra::{LeibnizAlgebra, SeriesKind, SeriesResult, SeriesVerdict, StructureTable, SubspaceRole};
pub use catalog::{CatalogEntry, CatalogError};
pub use centralizer::{CentralizerKind, ClFlavor, ClVerdict, XSelection};
pub use linalg::{Matrix, Subspace, SubspaceOrder, Vector};
pub use morphism::{LinearMap, MorphismKind};
pub use scalar::{FieldTag, Polynomial, Rational, RationalFunction, Scalar, ScalarError};
