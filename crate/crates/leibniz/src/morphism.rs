//! Morphisms and isomorphisms of Leibniz algebras, and the transport of
//! centralizers along them.

use thiserror::Error;

use crate::algebra::{AlgebraError, LeibnizAlgebra};
use crate::centralizer::{centralizer, CentralizerKind, XSelection};
use crate::linalg::{Matrix, Subspace, Vector};

/// A linear map between coordinate spaces, acting as `x ↦ M·x`
/// (source dimension = columns, target dimension = rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields")]
    MixedField,
    #[error("map is not an isomorphism")]
    NotIsomorphism,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(tag: crate::scalar::FieldTag, dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(tag, dim),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// The image subspace `f(S)`, canonicalized.
    pub fn apply_subspace(&self, s: &Subspace) -> Subspace {
        let images: Vec<Vector> = s.basis_vectors().iter().map(|v| self.apply(v)).collect();
        Subspace::span(self.matrix.tag(), self.target_dim(), &images)
            .expect("images live in the target space")
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rows() == self.matrix.cols()
            && !self
                .matrix
                .determinant()
                .expect("square by the guard")
                .is_zero()
    }
}

/// Classification of a linear map against two algebra structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismKind {
    /// `f([e_i, e_j]) != [f(e_i), f(e_j)]` at the recorded one-based basis
    /// pair; both evaluated sides are kept.
    NotMorphism {
        i: usize,
        j: usize,
        lhs: Vector,
        rhs: Vector,
    },
    Morphism,
    Isomorphism,
}

impl MorphismKind {
    pub fn is_morphism(&self) -> bool {
        !matches!(self, MorphismKind::NotMorphism { .. })
    }

    pub fn is_isomorphism(&self) -> bool {
        matches!(self, MorphismKind::Isomorphism)
    }
}

/// Checks `f([e_i,e_j]) = [f(e_i), f(e_j)]` on all basis pairs (enough by
/// bilinearity); a morphism that is additionally invertible is an
/// isomorphism.
pub fn morphism_check(
    f: &LinearMap,
    source: &LeibnizAlgebra,
    target: &LeibnizAlgebra,
) -> Result<MorphismKind, MorphismError> {
    if f.source_dim() != source.dim() {
        return Err(MorphismError::DimensionMismatch {
            expected: source.dim(),
            found: f.source_dim(),
        });
    }
    if f.target_dim() != target.dim() {
        return Err(MorphismError::DimensionMismatch {
            expected: target.dim(),
            found: f.target_dim(),
        });
    }
    if f.matrix.tag() != source.tag() || source.tag() != target.tag() {
        return Err(MorphismError::MixedField);
    }
    let n = source.dim();
    for i in 0..n {
        let fi = f.apply(&source.basis_vector(i));
        for j in 0..n {
            let fj = f.apply(&source.basis_vector(j));
            let lhs = f.apply(&source.bracket_basis(i, j));
            let rhs = target.bracket(&fi, &fj)?;
            if lhs != rhs {
                return Ok(MorphismKind::NotMorphism {
                    i: i + 1,
                    j: j + 1,
                    lhs,
                    rhs,
                });
            }
        }
    }
    if f.is_invertible() {
        Ok(MorphismKind::Isomorphism)
    } else {
        Ok(MorphismKind::Morphism)
    }
}

/// Verifies `f(C_{L1}(x)) = C_{L2}(f(x))` as canonical subspaces for every
/// `x` in `xs`. Requires `f` to be an isomorphism.
pub fn centralizer_transport_check(
    f: &LinearMap,
    source: &LeibnizAlgebra,
    target: &LeibnizAlgebra,
    xs: &[Vector],
) -> Result<bool, MorphismError> {
    if !morphism_check(f, source, target)?.is_isomorphism() {
        return Err(MorphismError::NotIsomorphism);
    }
    for x in xs {
        let image = f.apply_subspace(&centralizer(source, x, CentralizerKind::TwoSided)?);
        let direct = centralizer(target, &f.apply(x), CentralizerKind::TwoSided)?;
        if image != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transports a selection along `f`: the image selection contains exactly
/// `f(x)` for each selected `x`, keeping the tested statement aligned with
/// the source-side quantifier approximation.
pub fn image_selection(
    f: &LinearMap,
    selection: &XSelection,
    source: &LeibnizAlgebra,
) -> XSelection {
    XSelection::Explicit(
        selection
            .vectors(source)
            .iter()
            .map(|x| f.apply(x))
            .collect(),
    )
}
