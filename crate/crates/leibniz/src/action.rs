//! Finite group actions on Leibniz algebras.
//!
//! A finite group acts through the images `ψ_g` of its elements, so the
//! group is represented extensionally: a list of invertible matrices, the
//! index of the identity, and a multiplication table. That makes the four
//! action conditions — linearity, identity, compatibility of the table
//! with matrix products, and each `ψ_g` being an algebra automorphism —
//! directly checkable, with no group-presentation machinery.

use thiserror::Error;

use crate::algebra::{AlgebraError, LeibnizAlgebra};
use crate::centralizer::{centralizer, cl_element_check, CentralizerKind, XSelection};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::morphism::{morphism_check, LinearMap, MorphismKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("a group action needs at least one element")]
    EmptyGroup,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields")]
    MixedField,
    #[error("group index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("element list contains no identity matrix")]
    NoIdentity,
    #[error("element set is not closed: no element equals g{g1}*g{g2}")]
    NotClosed { g1: usize, g2: usize },
    #[error("action fails validation: {0}")]
    Invalid(ActionReport),
    #[error("the element is not a CL-element on the given selection")]
    NotClElement,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// First failure of the automorphism condition, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismFailure {
    /// `ψ_g` is not invertible.
    NotInvertible { g: usize },
    /// `ψ_g([e_i,e_j]) != [ψ_g(e_i), ψ_g(e_j)]` (one-based pair).
    NotMorphism { g: usize, i: usize, j: usize },
}

/// Per-condition outcome of validating a group action against an algebra.
/// Condition numbering follows the action definition: (1) linearity,
/// (2) identity acts trivially, (3) compatibility `g1(g2 x) = (g1 g2) x`,
/// (4) `g[x,y] = [gx, gy]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    /// Condition (1) holds by representation: every `ψ_g` is a matrix.
    pub linearity_ok: bool,
    /// Condition (2): the designated element is the identity matrix.
    pub identity_ok: bool,
    /// Condition (3): first `(g1, g2)` whose table entry disagrees with
    /// the matrix product, if any.
    pub table_witness: Option<(usize, usize)>,
    /// Condition (4): first group element that is not an automorphism.
    pub automorphism_witness: Option<AutomorphismFailure>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.linearity_ok
            && self.identity_ok
            && self.table_witness.is_none()
            && self.automorphism_witness.is_none()
    }

    pub fn condition_passed(&self, condition: usize) -> bool {
        match condition {
            1 => self.linearity_ok,
            2 => self.identity_ok,
            3 => self.table_witness.is_none(),
            4 => self.automorphism_witness.is_none(),
            other => panic!("action condition index {other} out of range"),
        }
    }
}

impl std::fmt::Display for ActionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            return write!(f, "all four action conditions hold");
        }
        let mut parts = Vec::new();
        if !self.identity_ok {
            parts.push("condition (2): designated element is not the identity".to_string());
        }
        if let Some((g1, g2)) = self.table_witness {
            parts.push(format!(
                "condition (3): table entry for (g{g1}, g{g2}) disagrees with the matrix product"
            ));
        }
        match &self.automorphism_witness {
            Some(AutomorphismFailure::NotInvertible { g }) => {
                parts.push(format!("condition (4): g{g} is not invertible"));
            }
            Some(AutomorphismFailure::NotMorphism { g, i, j }) => {
                parts.push(format!(
                    "condition (4): g{g} is not an automorphism at basis pair (e{i}, e{j})"
                ));
            }
            None => {}
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// A finite group of linear maps given extensionally. Group indices are
/// zero-based positions into the element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupAction {
    elements: Vec<Matrix>,
    identity_index: usize,
    multiplication_table: Vec<Vec<usize>>,
}

impl FiniteGroupAction {
    /// Builds from explicit data, checking only structural consistency
    /// (shapes and index ranges); the mathematical conditions are checked
    /// by [`validate_action`].
    pub fn new(
        elements: Vec<Matrix>,
        identity_index: usize,
        multiplication_table: Vec<Vec<usize>>,
    ) -> Result<Self, ActionError> {
        let order = elements.len();
        if order == 0 {
            return Err(ActionError::EmptyGroup);
        }
        let dim = elements[0].rows();
        let tag = elements[0].tag();
        for m in &elements {
            if m.rows() != dim || m.cols() != dim {
                return Err(ActionError::DimensionMismatch {
                    expected: dim,
                    found: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
            if m.tag() != tag {
                return Err(ActionError::MixedField);
            }
        }
        if identity_index >= order {
            return Err(ActionError::IndexOutOfRange {
                index: identity_index,
                order,
            });
        }
        if multiplication_table.len() != order {
            return Err(ActionError::IndexOutOfRange {
                index: multiplication_table.len(),
                order,
            });
        }
        for row in &multiplication_table {
            if row.len() != order {
                return Err(ActionError::IndexOutOfRange {
                    index: row.len(),
                    order,
                });
            }
            for &idx in row {
                if idx >= order {
                    return Err(ActionError::IndexOutOfRange { index: idx, order });
                }
            }
        }
        Ok(FiniteGroupAction {
            elements,
            identity_index,
            multiplication_table,
        })
    }

    /// Builds from the matrices alone: locates the identity and derives
    /// the multiplication table from matrix products. A product that lands
    /// outside the element set means the set is not closed.
    pub fn from_elements(elements: Vec<Matrix>) -> Result<Self, ActionError> {
        if elements.is_empty() {
            return Err(ActionError::EmptyGroup);
        }
        let identity_index = elements
            .iter()
            .position(Matrix::is_identity)
            .ok_or(ActionError::NoIdentity)?;
        let order = elements.len();
        let mut table = vec![vec![0usize; order]; order];
        for g1 in 0..order {
            for g2 in 0..order {
                let product = elements[g1].mul_mat(&elements[g2]);
                let k = elements
                    .iter()
                    .position(|m| *m == product)
                    .ok_or(ActionError::NotClosed { g1: g1 + 1, g2: g2 + 1 })?;
                table[g1][g2] = k;
            }
        }
        FiniteGroupAction::new(elements, identity_index, table)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn element(&self, g: usize) -> &Matrix {
        &self.elements[g]
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn multiplication_table(&self) -> &[Vec<usize>] {
        &self.multiplication_table
    }

    /// Validates against `algebra` and wraps on success, so downstream
    /// operations can assume a genuine action.
    pub fn validated<'a>(
        &'a self,
        algebra: &'a LeibnizAlgebra,
    ) -> Result<ValidatedAction<'a>, ActionError> {
        let report = validate_action(algebra, self)?;
        if report.passed() {
            Ok(ValidatedAction {
                algebra,
                action: self,
            })
        } else {
            Err(ActionError::Invalid(report))
        }
    }
}

/// Checks the four action conditions, returning a per-condition report
/// with witnesses. Structural incompatibility with the algebra (wrong
/// dimension or field) is an error rather than a report entry.
pub fn validate_action(
    algebra: &LeibnizAlgebra,
    action: &FiniteGroupAction,
) -> Result<ActionReport, ActionError> {
    if action.dim() != algebra.dim() {
        return Err(ActionError::DimensionMismatch {
            expected: algebra.dim(),
            found: action.dim(),
        });
    }
    if action.elements[0].tag() != algebra.tag() {
        return Err(ActionError::MixedField);
    }
    let identity_ok = action.elements[action.identity_index].is_identity();
    let order = action.order();
    let mut table_witness = None;
    'outer: for g1 in 0..order {
        for g2 in 0..order {
            let product = action.elements[g1].mul_mat(&action.elements[g2]);
            if product != action.elements[action.multiplication_table[g1][g2]] {
                table_witness = Some((g1 + 1, g2 + 1));
                break 'outer;
            }
        }
    }
    let mut automorphism_witness = None;
    for g in 0..order {
        let map = LinearMap::new(action.elements[g].clone());
        match morphism_check(&map, algebra, algebra).map_err(|_| ActionError::MixedField)? {
            MorphismKind::Isomorphism => {}
            MorphismKind::Morphism => {
                automorphism_witness = Some(AutomorphismFailure::NotInvertible { g: g + 1 });
                break;
            }
            MorphismKind::NotMorphism { i, j, .. } => {
                automorphism_witness = Some(AutomorphismFailure::NotMorphism { g: g + 1, i, j });
                break;
            }
        }
    }
    Ok(ActionReport {
        linearity_ok: true,
        identity_ok,
        table_witness,
        automorphism_witness,
    })
}

/// Whether a map commutes with every `ψ_g` of an action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivariance {
    Equivariant,
    /// One-based index of the first group element that fails to commute.
    NotEquivariant { g: usize },
}

impl Equivariance {
    pub fn is_equivariant(&self) -> bool {
        matches!(self, Equivariance::Equivariant)
    }
}

/// An action that passed [`validate_action`] against its algebra.
#[derive(Debug, Clone, Copy)]
pub struct ValidatedAction<'a> {
    algebra: &'a LeibnizAlgebra,
    action: &'a FiniteGroupAction,
}

impl<'a> ValidatedAction<'a> {
    pub fn algebra(&self) -> &'a LeibnizAlgebra {
        self.algebra
    }

    pub fn action(&self) -> &'a FiniteGroupAction {
        self.action
    }

    pub fn order(&self) -> usize {
        self.action.order()
    }

    /// `g · x`.
    pub fn apply(&self, g: usize, x: &Vector) -> Vector {
        self.action.elements[g].mul_vec(x)
    }

    pub fn apply_subspace(&self, g: usize, s: &Subspace) -> Subspace {
        LinearMap::new(self.action.elements[g].clone()).apply_subspace(s)
    }

    /// The orbit `{g·a : g ∈ G}` in group order, deduplicated.
    pub fn orbit(&self, a: &Vector) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::new();
        for g in 0..self.order() {
            let image = self.apply(g, a);
            if !out.contains(&image) {
                out.push(image);
            }
        }
        out
    }

    /// The restriction lemma: `y ↦ g·y` maps `C_L(x)` into `C_L(g·x)`,
    /// and since `ψ_g` is an automorphism the two agree exactly.
    pub fn centralizer_action_map(&self, g: usize, x: &Vector) -> Result<bool, ActionError> {
        let source = centralizer(self.algebra, x, CentralizerKind::TwoSided)?;
        let image = self.apply_subspace(g, &source);
        let target = centralizer(self.algebra, &self.apply(g, x), CentralizerKind::TwoSided)?;
        Ok(image
            .is_subspace_of(&target)
            .expect("subspaces share the ambient space")
            && image == target)
    }

    /// CL-element preservation: given that `a` passes the CL-element check
    /// on the selection, verifies that every `g·a` does too.
    pub fn cl_preservation(
        &self,
        a: &Vector,
        selection: &XSelection,
    ) -> Result<bool, ActionError> {
        if !cl_element_check(self.algebra, a, selection)?.passed() {
            return Err(ActionError::NotClElement);
        }
        for g in 0..self.order() {
            let moved = self.apply(g, a);
            if !cl_element_check(self.algebra, &moved, selection)?.passed() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks `f ∘ ψ_g = ψ_g ∘ f` as matrices for every group element.
    pub fn equivariant_check(&self, f: &LinearMap) -> Result<Equivariance, ActionError> {
        let n = self.algebra.dim();
        if f.source_dim() != n || f.target_dim() != n {
            return Err(ActionError::DimensionMismatch {
                expected: n,
                found: f.source_dim(),
            });
        }
        for g in 0..self.order() {
            let psi = &self.action.elements[g];
            if f.matrix().mul_mat(psi) != psi.mul_mat(f.matrix()) {
                return Ok(Equivariance::NotEquivariant { g: g + 1 });
            }
        }
        Ok(Equivariance::Equivariant)
    }
}
