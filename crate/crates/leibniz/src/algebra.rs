//! Structure-constant Leibniz algebras.
//!
//! An algebra is given by its table `c` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
//! [`LeibnizAlgebra`] can only be built from a table that passes the
//! Leibniz-identity check, so every downstream computation (series,
//! centralizers, CL conditions) may assume the identity holds. The free
//! function [`validate_leibniz`] is available for raw tables and returns
//! an explicit witness on failure.

use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::{FieldTag, Rational, Scalar, ScalarError};

/// The structure-constant tensor of a bilinear bracket on an n-dimensional
/// space. Indices are zero-based internally; external formats and witness
/// reports are one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    dim: usize,
    tag: FieldTag,
    c: Vec<Scalar>,
}

/// Sparse bracket datum with one-based indices:
/// `(i, j, [(k, c), ...])` means `[e_i, e_j] = Σ c·e_k`.
pub type BracketSpec = (usize, usize, Vec<(usize, Scalar)>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields")]
    MixedField,
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{0}")]
    LeibnizViolation(LeibnizFailure),
    #[error("table is not a Lie bracket: antisymmetry or Jacobi fails at basis pair (e{i}, e{j})")]
    NotLie { i: usize, j: usize },
    #[error("map is not a differential: d^2(e{index}) != 0")]
    NotDifferential { index: usize },
    #[error("map is not a derivation at basis pair (e{i}, e{j})")]
    NotDerivation { i: usize, j: usize },
    #[error("transport matrix is singular")]
    SingularMatrix,
    #[error("scalar error: {0}")]
    Scalar(#[from] ScalarError),
}

/// Witness for a failed Leibniz-identity check: the basis triple together
/// with both evaluated sides of `[e_i,[e_j,e_k]] = [[e_i,e_j],e_k] - [[e_i,e_k],e_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizFailure {
    /// One-based basis indices (i, j, k).
    pub triple: (usize, usize, usize),
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for LeibnizFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(
            f,
            "Leibniz identity fails at (e{i}, e{j}, e{k}): [e{i},[e{j},e{k}]] = {} but [[e{i},e{j}],e{k}] - [[e{i},e{k}],e{j}] = {}",
            self.lhs, self.rhs
        )
    }
}

impl StructureTable {
    pub fn zero(tag: FieldTag, dim: usize) -> Self {
        StructureTable {
            dim,
            tag,
            c: vec![Scalar::zero(tag); dim * dim * dim],
        }
    }

    /// Builds a table from sparse bracket data with one-based indices:
    /// each entry is `(i, j, [(k, coefficient), ...])` meaning
    /// `[e_i, e_j] = Σ coefficient·e_k`. Unlisted pairs are zero.
    pub fn from_brackets(
        tag: FieldTag,
        dim: usize,
        brackets: &[BracketSpec],
    ) -> Result<Self, AlgebraError> {
        let mut table = StructureTable::zero(tag, dim);
        let check = |index: usize| -> Result<usize, AlgebraError> {
            if index == 0 || index > dim {
                Err(AlgebraError::IndexOutOfRange { index, dim })
            } else {
                Ok(index - 1)
            }
        };
        for (i, j, result) in brackets {
            let (i, j) = (check(*i)?, check(*j)?);
            for (k, coeff) in result {
                let k = check(*k)?;
                if coeff.tag() != tag {
                    return Err(AlgebraError::MixedField);
                }
                table.c[(i * dim + j) * dim + k] = coeff.clone();
            }
        }
        Ok(table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    /// `c[i][j][k]` with zero-based indices.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` with zero-based indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let base = (i * self.dim + j) * self.dim;
        Vector::new(self.tag, self.c[base..base + self.dim].to_vec())
            .expect("table entries share the field tag")
    }

    /// Coordinates of `[x, y]`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, AlgebraError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: if x.len() != self.dim { x.len() } else { y.len() },
            });
        }
        if x.tag() != self.tag || y.tag() != self.tag {
            return Err(AlgebraError::MixedField);
        }
        let mut out = Vector::zero(self.tag, self.dim);
        for i in 0..self.dim {
            if x.get(i).is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y.get(j).is_zero() {
                    continue;
                }
                let weight = x.get(i) * y.get(j);
                out = out.add(&self.bracket_basis(i, j).scale(&weight));
            }
        }
        Ok(out)
    }

    /// Instantiates a ℚ(a) table at a rational parameter value, producing
    /// a ℚ table. Fails with a pole error on excluded values.
    pub fn substitute(&self, value: &Rational) -> Result<StructureTable, ScalarError> {
        let c = self
            .c
            .iter()
            .map(|s| match s {
                Scalar::Qa(_) => Ok(Scalar::Q(s.substitute(value)?)),
                Scalar::Q(_) => Err(ScalarError::NotParametric),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StructureTable {
            dim: self.dim,
            tag: FieldTag::Q,
            c,
        })
    }
}

/// Checks the Leibniz identity `[x,[y,z]] = [[x,y],z] - [[x,z],y]` on all
/// basis triples, which suffices by trilinearity. Returns the first
/// failing triple with both evaluated sides.
pub fn validate_leibniz(table: &StructureTable) -> Result<(), LeibnizFailure> {
    let n = table.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let inner = table.bracket_basis(j, k);
                let ei = Vector::unit(table.tag(), n, i);
                let lhs = table.bracket(&ei, &inner).expect("basis dims agree");
                let ej = Vector::unit(table.tag(), n, j);
                let ek = Vector::unit(table.tag(), n, k);
                let left = table
                    .bracket(&table.bracket_basis(i, j), &ek)
                    .expect("basis dims agree");
                let right = table
                    .bracket(&table.bracket_basis(i, k), &ej)
                    .expect("basis dims agree");
                let rhs = left.sub(&right);
                if lhs != rhs {
                    return Err(LeibnizFailure {
                        triple: (i + 1, j + 1, k + 1),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Which containment property to test for a subspace of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceRole {
    Subalgebra,
    LeftIdeal,
    RightIdeal,
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `L^1 = L`, `L^{k+1} = [L^k, L]`.
    LowerCentral,
    /// `L^[1] = L`, `L^[k+1] = [L^[k], L^[k]]`.
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesVerdict {
    /// The lower central series reaches zero; `class` is the least n with
    /// `L^n = 0` (a nonzero abelian algebra is 2-step).
    Nilpotent { class: usize },
    /// The derived series reaches zero; `length` is the least n with
    /// `L^[n] = 0`.
    Solvable { length: usize },
    /// The series stabilizes at a nonzero term.
    Neither,
}

/// A computed descending series: `terms[k]` is the (k+1)-st term, the list
/// ends with the first repeated term, and `stabilized_at` is the one-based
/// series index at which it stopped changing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized_at: usize,
    pub verdict: SeriesVerdict,
}

impl SeriesResult {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self.verdict, SeriesVerdict::Nilpotent { .. })
    }

    pub fn is_solvable(&self) -> bool {
        matches!(self.verdict, SeriesVerdict::Solvable { .. })
    }
}

/// A structure table that passed the Leibniz-identity check at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    table: StructureTable,
}

impl LeibnizAlgebra {
    /// Validates and wraps a table; the error carries the witness triple.
    pub fn validated(table: StructureTable) -> Result<Self, AlgebraError> {
        validate_leibniz(&table).map_err(AlgebraError::LeibnizViolation)?;
        Ok(LeibnizAlgebra { table })
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn tag(&self) -> FieldTag {
        self.table.tag()
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, AlgebraError> {
        self.table.bracket(x, y)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.table.bracket_basis(i, j)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.tag(), self.dim(), i)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.tag(), self.dim())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.tag(), self.dim())
    }

    /// Canonical span of `{[u, v] : u in basis(U), v in basis(V)}`; by
    /// bilinearity this is `[U, V]`.
    pub fn bracket_span(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, AlgebraError> {
        if u.ambient_dim() != self.dim() || v.ambient_dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: if u.ambient_dim() != self.dim() {
                    u.ambient_dim()
                } else {
                    v.ambient_dim()
                },
            });
        }
        let mut products = Vec::new();
        for ub in u.basis_vectors() {
            for vb in v.basis_vectors() {
                products.push(self.bracket(&ub, &vb)?);
            }
        }
        Ok(Subspace::span(self.tag(), self.dim(), &products)
            .expect("bracket outputs have ambient length"))
    }

    /// Tests `U` for the requested role: subalgebra means `[U,U] ⊆ U`,
    /// left ideal `[L,U] ⊆ U`, right ideal `[U,L] ⊆ U`, ideal both.
    pub fn subspace_role(&self, u: &Subspace, role: SubspaceRole) -> Result<bool, AlgebraError> {
        let full = self.full_space();
        let contained = |w: &Subspace, inside: &Subspace| -> Result<bool, AlgebraError> {
            w.is_subspace_of(inside)
                .map_err(|_| AlgebraError::DimensionMismatch {
                    expected: self.dim(),
                    found: w.ambient_dim(),
                })
        };
        match role {
            SubspaceRole::Subalgebra => contained(&self.bracket_span(u, u)?, u),
            SubspaceRole::LeftIdeal => contained(&self.bracket_span(&full, u)?, u),
            SubspaceRole::RightIdeal => contained(&self.bracket_span(u, &full)?, u),
            SubspaceRole::Ideal => Ok(contained(&self.bracket_span(&full, u)?, u)?
                && contained(&self.bracket_span(u, &full)?, u)?),
        }
    }

    fn series(&self, kind: SeriesKind) -> SeriesResult {
        let full = self.full_space();
        let mut terms = vec![full.clone()];
        loop {
            let prev = terms.last().expect("series starts nonempty");
            let next = match kind {
                SeriesKind::LowerCentral => self.bracket_span(prev, &full),
                SeriesKind::Derived => self.bracket_span(prev, prev),
            }
            .expect("series terms share the ambient dimension");
            let stabilized = &next == prev;
            terms.push(next);
            if stabilized {
                break;
            }
        }
        let stabilized_at = terms.len() - 1;
        let last_is_zero = terms.last().expect("nonempty").is_zero();
        let verdict = match (kind, last_is_zero) {
            (SeriesKind::LowerCentral, true) => SeriesVerdict::Nilpotent { class: stabilized_at },
            (SeriesKind::Derived, true) => SeriesVerdict::Solvable { length: stabilized_at },
            (_, false) => SeriesVerdict::Neither,
        };
        SeriesResult {
            kind,
            terms,
            stabilized_at,
            verdict,
        }
    }

    /// `L^1 ⊇ L^2 ⊇ …` with `L^{k+1} = [L^k, L]`, computed until two
    /// consecutive terms are equal (by exact subspace equality).
    pub fn lower_central_series(&self) -> SeriesResult {
        self.series(SeriesKind::LowerCentral)
    }

    /// `L^[1] ⊇ L^[2] ⊇ …` with `L^[k+1] = [L^[k], L^[k]]`.
    pub fn derived_series(&self) -> SeriesResult {
        self.series(SeriesKind::Derived)
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        match self.lower_central_series().verdict {
            SeriesVerdict::Nilpotent { class } => Some(class),
            _ => None,
        }
    }

    /// The ideal generated by all squares `[x, x]`. Away from
    /// characteristic 2 the generators polarize to `[e_i,e_i]` and the
    /// symmetrized brackets `[e_i,e_j] + [e_j,e_i]`; the ideal closure then
    /// iterates `U ← U + [U,L] + [L,U]` until stable.
    pub fn squares_ideal(&self) -> Subspace {
        let n = self.dim();
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.bracket_basis(i, i));
        }
        for i in 0..n {
            for j in i + 1..n {
                gens.push(self.bracket_basis(i, j).add(&self.bracket_basis(j, i)));
            }
        }
        let mut current =
            Subspace::span(self.tag(), n, &gens).expect("generators have ambient length");
        let full = self.full_space();
        loop {
            let grown = current
                .sum(&self.bracket_span(&current, &full).expect("ambient matches"))
                .and_then(|s| s.sum(&self.bracket_span(&full, &current).expect("ambient matches")))
                .expect("sums share the ambient dimension");
            if grown == current {
                return current;
            }
            current = grown;
        }
    }

    /// The isomorphic algebra with bracket `[u,v]' = P·[P⁻¹u, P⁻¹v]`, so
    /// that `x ↦ Px` is an isomorphism onto the result.
    pub fn transport(&self, p: &Matrix) -> Result<LeibnizAlgebra, AlgebraError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        if p.tag() != self.tag() {
            return Err(AlgebraError::MixedField);
        }
        let p_inv = p.inverse().map_err(|_| AlgebraError::SingularMatrix)?;
        let mut table = StructureTable::zero(self.tag(), n);
        for i in 0..n {
            let qi = p_inv.mul_vec(&Vector::unit(self.tag(), n, i));
            for j in 0..n {
                let qj = p_inv.mul_vec(&Vector::unit(self.tag(), n, j));
                let image = p.mul_vec(&self.bracket(&qi, &qj)?);
                for k in 0..n {
                    table.c[(i * n + j) * n + k] = image.get(k).clone();
                }
            }
        }
        LeibnizAlgebra::validated(table)
    }
}

/// Builds the derived-bracket Leibniz algebra `[x,y]_d = [x, d·y]` from an
/// antisymmetric (Lie) table and a square-zero derivation `d`.
pub fn derived_bracket(lie_table: &StructureTable, d: &Matrix) -> Result<LeibnizAlgebra, AlgebraError> {
    let n = lie_table.dim();
    let tag = lie_table.tag();
    if d.rows() != n || d.cols() != n {
        return Err(AlgebraError::DimensionMismatch {
            expected: n,
            found: d.rows(),
        });
    }
    if d.tag() != tag {
        return Err(AlgebraError::MixedField);
    }
    // antisymmetry, then the (Leibniz = Jacobi) identity
    for i in 0..n {
        for j in i..n {
            if lie_table.bracket_basis(i, j) != lie_table.bracket_basis(j, i).neg() {
                return Err(AlgebraError::NotLie { i: i + 1, j: j + 1 });
            }
        }
    }
    if let Err(failure) = validate_leibniz(lie_table) {
        let (i, j, _) = failure.triple;
        return Err(AlgebraError::NotLie { i, j });
    }
    let d2 = d.mul_mat(d);
    for i in 0..n {
        let col = d2.mul_vec(&Vector::unit(tag, n, i));
        if !col.is_zero() {
            return Err(AlgebraError::NotDifferential { index: i + 1 });
        }
    }
    for i in 0..n {
        let dei = d.mul_vec(&Vector::unit(tag, n, i));
        for j in 0..n {
            let dej = d.mul_vec(&Vector::unit(tag, n, j));
            let lhs = d.mul_vec(&lie_table.bracket_basis(i, j));
            let rhs = lie_table
                .bracket(&dei, &Vector::unit(tag, n, j))?
                .add(&lie_table.bracket(&Vector::unit(tag, n, i), &dej)?);
            if lhs != rhs {
                return Err(AlgebraError::NotDerivation { i: i + 1, j: j + 1 });
            }
        }
    }
    let mut table = StructureTable::zero(tag, n);
    for i in 0..n {
        let ei = Vector::unit(tag, n, i);
        for j in 0..n {
            let dej = d.mul_vec(&Vector::unit(tag, n, j));
            let image = lie_table.bracket(&ei, &dej)?;
            for k in 0..n {
                table.c[(i * n + j) * n + k] = image.get(k).clone();
            }
        }
    }
    LeibnizAlgebra::validated(table)
}
