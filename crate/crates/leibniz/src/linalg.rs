//! Exact linear algebra over ℚ and ℚ(a): vectors, matrices, and canonical
//! subspaces.
//!
//! Subspaces are stored only through their reduced-row-echelon basis,
//! computed eagerly on construction. Two subspaces are equal iff their
//! stored bases are identical entry by entry, which makes the equality
//! assertions against the centralizer tables trivial. Pivots are chosen as
//! the first nonzero entry scanning left to right: with exact arithmetic
//! there is nothing to stabilize, and the determinism keeps golden outputs
//! byte-identical.

use std::fmt;

use thiserror::Error;

use crate::scalar::{FieldTag, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different fields")]
    MixedField,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("operation requires a square matrix ({rows}x{cols} given)")]
    NotSquare { rows: usize, cols: usize },
}

/// A coordinate vector with entries from a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    tag: FieldTag,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(tag: FieldTag, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if entries.iter().any(|e| e.tag() != tag) {
            return Err(LinalgError::MixedField);
        }
        Ok(Vector { tag, entries })
    }

    pub fn zero(tag: FieldTag, len: usize) -> Self {
        Vector {
            tag,
            entries: vec![Scalar::zero(tag); len],
        }
    }

    /// The standard basis vector `e_{index+1}` (zero-based index).
    pub fn unit(tag: FieldTag, len: usize, index: usize) -> Self {
        assert!(index < len, "unit vector index out of range");
        let mut v = Vector::zero(tag, len);
        v.entries[index] = Scalar::one(tag);
        v
    }

    pub fn from_ints(tag: FieldTag, entries: &[i64]) -> Self {
        Vector {
            tag,
            entries: entries
                .iter()
                .map(|&n| Scalar::from_integer(n, tag))
                .collect(),
        }
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector {
            tag: self.tag,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector {
            tag: self.tag,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            tag: self.tag,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            tag: self.tag,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

/// Renders as a combination of basis vectors, e.g. `e1 - 2*e3`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.entries.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = display_sign_split(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "e{}", i + 1)?;
            } else {
                let s = abs.to_string();
                if s.contains(' ') {
                    write!(f, "({s})*e{}", i + 1)?;
                } else {
                    write!(f, "{s}*e{}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Splits a scalar into a display sign and the correspondingly negated
/// value; for ℚ(a) the sign is that of the numerator's leading coefficient.
fn display_sign_split(c: &Scalar) -> (bool, Scalar) {
    use num_traits::Signed;
    let neg = match c {
        Scalar::Q(r) => r.is_negative(),
        Scalar::Qa(rf) => rf.num().leading_coeff().is_negative(),
    };
    if neg {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

/// A dense row-major matrix over a single field. The field tag is stored
/// explicitly so degenerate shapes (a 0-row basis) stay well-typed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    tag: FieldTag,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(tag: FieldTag, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if data.iter().any(|e| e.tag() != tag) {
            return Err(LinalgError::MixedField);
        }
        Ok(Matrix { rows, cols, tag, data })
    }

    pub fn zero(tag: FieldTag, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            tag,
            data: vec![Scalar::zero(tag); rows * cols],
        }
    }

    pub fn identity(tag: FieldTag, n: usize) -> Self {
        let mut m = Matrix::zero(tag, n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one(tag);
        }
        m
    }

    pub fn from_rows(tag: FieldTag, rows: Vec<Vector>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vector::len);
        for r in &rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            if r.tag() != tag {
                return Err(LinalgError::MixedField);
            }
        }
        let nrows = rows.len();
        let data = rows.into_iter().flat_map(|r| r.entries).collect();
        Matrix::new(tag, nrows, cols, data)
    }

    pub fn from_int_rows(tag: FieldTag, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer rows");
                r.iter().map(|&n| Scalar::from_integer(n, tag))
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            tag,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector {
            tag: self.tag,
            entries: self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            tag: self.tag,
            data,
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = Scalar::zero(self.tag);
            for c in 0..self.cols {
                let e = self.get(r, c);
                if !e.is_zero() && !v.get(c).is_zero() {
                    acc = &acc + &(e * v.get(c));
                }
            }
            out.push(acc);
        }
        Vector {
            tag: self.tag,
            entries: out,
        }
    }

    pub fn mul_mat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix-matrix dimension mismatch");
        let mut out = Matrix::zero(self.tag, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let e = self.get(r, k).clone();
                if e.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = &e * rhs.get(k, c);
                    let cur = out.get(r, c).clone();
                    *out.get_mut(r, c) = &cur + &add;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = &self.data[r * self.cols + c] * factor;
            self.data[r * self.cols + c] = v;
        }
    }

    /// row[target] -= factor * row[source]
    fn row_sub_scaled(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let delta = &self.data[source * self.cols + c] * factor;
            let v = &self.data[target * self.cols + c] - &delta;
            self.data[target * self.cols + c] = v;
        }
    }

    /// Reduced row-echelon form together with the list of pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m
                .get(pivot_row, col)
                .inv()
                .expect("pivot entry is nonzero");
            m.scale_row(pivot_row, &inv);
            for other in 0..m.rows {
                if other != pivot_row && !m.get(other, col).is_zero() {
                    let factor = m.get(other, col).clone();
                    m.row_sub_scaled(other, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Exact determinant by Gaussian elimination with row swaps.
    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one(self.tag);
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Scalar::zero(self.tag));
            };
            if r != col {
                m.swap_rows(col, r);
                det = -&det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot entry is nonzero");
            for below in col + 1..n {
                if !m.get(below, col).is_zero() {
                    let factor = m.get(below, col) * &inv;
                    m.row_sub_scaled(below, col, &factor);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.tag, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.get_mut(r, c) = self.get(r, c).clone();
            }
            *aug.get_mut(r, n + r) = Scalar::one(self.tag);
        }
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots.iter().take(n).copied().ne(0..n) {
            return Err(LinalgError::SingularMatrix);
        }
        let mut out = Matrix::zero(self.tag, n, n);
        for r in 0..n {
            for c in 0..n {
                *out.get_mut(r, c) = red.get(r, n + c).clone();
            }
        }
        Ok(out)
    }

    /// The kernel `{v : M v = 0}` as a canonical subspace of the column
    /// space; `dim = cols - rank`.
    pub fn null_space(&self) -> Subspace {
        let (red, pivots) = self.rref_with_pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::zero(self.tag, self.cols);
            v.entries[free] = Scalar::one(self.tag);
            for (pr, &pc) in pivots.iter().enumerate() {
                v.entries[pc] = -red.get(pr, free);
            }
            basis.push(v);
        }
        Subspace::span(self.tag, self.cols, &basis).expect("kernel vectors have ambient length")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Outcome of comparing two subspaces of the same ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOrder {
    Equal,
    LeftInRight,
    RightInLeft,
    Incomparable,
}

/// A linear subspace stored through its canonical RREF basis (no zero
/// rows, pivot columns strictly increasing). Canonicity makes equality a
/// structural comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    tag: FieldTag,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(tag: FieldTag, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            tag,
            basis: Matrix::zero(tag, 0, ambient_dim),
        }
    }

    pub fn full(tag: FieldTag, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            tag,
            basis: Matrix::identity(tag, ambient_dim),
        }
    }

    /// Canonical span of the given vectors.
    pub fn span(tag: FieldTag, ambient_dim: usize, vectors: &[Vector]) -> Result<Self, LinalgError> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if v.tag() != tag {
                return Err(LinalgError::MixedField);
            }
        }
        let stacked = Matrix::from_rows(tag, vectors.to_vec())?;
        Ok(Subspace::from_matrix(tag, ambient_dim, &stacked))
    }

    fn from_matrix(tag: FieldTag, ambient_dim: usize, m: &Matrix) -> Self {
        let (red, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let mut data = Vec::with_capacity(rank * ambient_dim);
        for r in 0..rank {
            for c in 0..ambient_dim {
                data.push(red.get(r, c).clone());
            }
        }
        Subspace {
            ambient_dim,
            tag,
            basis: Matrix {
                rows: rank,
                cols: ambient_dim,
                tag,
                data,
            },
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis, one vector per RREF row.
    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.tag != other.tag {
            return Err(LinalgError::MixedField);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::span(self.tag, self.ambient_dim, &vectors)
    }

    /// Intersection via the kernel construction: coefficient pairs
    /// `(λ, μ)` with `λ·A = μ·B` are the kernel of `[Aᵀ | -Bᵀ]`, and each
    /// such pair yields the intersection vector `λ·A`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let p = self.dim();
        let q = other.dim();
        if p == 0 || q == 0 {
            return Ok(Subspace::zero(self.tag, self.ambient_dim));
        }
        let mut system = Matrix::zero(self.tag, self.ambient_dim, p + q);
        for (i, v) in self.basis_vectors().iter().enumerate() {
            for r in 0..self.ambient_dim {
                *system.get_mut(r, i) = v.get(r).clone();
            }
        }
        for (j, v) in other.basis_vectors().iter().enumerate() {
            for r in 0..self.ambient_dim {
                *system.get_mut(r, p + j) = -v.get(r);
            }
        }
        let kernel = system.null_space();
        let own_basis = self.basis_vectors();
        let mut vectors = Vec::new();
        for w in kernel.basis_vectors() {
            let mut v = Vector::zero(self.tag, self.ambient_dim);
            for (i, b) in own_basis.iter().enumerate() {
                if !w.get(i).is_zero() {
                    v = v.add(&b.scale(w.get(i)));
                }
            }
            vectors.push(v);
        }
        Subspace::span(self.tag, self.ambient_dim, &vectors)
    }

    /// Exact membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &Vector) -> Result<bool, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        if v.tag() != self.tag {
            return Err(LinalgError::MixedField);
        }
        let mut rem = v.clone();
        let (_, pivots) = self.basis.rref_with_pivots();
        debug_assert_eq!(pivots.len(), self.dim());
        for (r, &pc) in pivots.iter().enumerate() {
            let c = rem.get(pc).clone();
            if !c.is_zero() {
                rem = rem.sub(&self.basis.row(r).scale(&c));
            }
        }
        Ok(rem.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compatible(other)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn compare(&self, other: &Subspace) -> Result<SubspaceOrder, LinalgError> {
        self.check_compatible(other)?;
        if self == other {
            return Ok(SubspaceOrder::Equal);
        }
        if self.is_subspace_of(other)? {
            return Ok(SubspaceOrder::LeftInRight);
        }
        if other.is_subspace_of(self)? {
            return Ok(SubspaceOrder::RightInLeft);
        }
        Ok(SubspaceOrder::Incomparable)
    }
}

/// Renders in angle-bracket span notation, e.g. `<e2, e3>`.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "<")?;
        for (i, v) in self.basis_vectors().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(FieldTag::Q, rows)
    }

    fn vec_q(entries: &[i64]) -> Vector {
        Vector::from_ints(FieldTag::Q, entries)
    }

    fn random_matrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zero(FieldTag::Q, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                *m.get_mut(r, c) = Scalar::from_integer(rng.int_in(-9, 9), FieldTag::Q);
            }
        }
        m
    }

    #[test]
    fn rref_of_identity_is_identity() {
        let id = Matrix::identity(FieldTag::Q, 4);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_rank_one_example() {
        let m = mat(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_of_random_invertible_is_identity() {
        // invertibility oracle: nonzero determinant
        let mut rng = SplitMix64::new(0x5eed);
        let mut seen = 0;
        while seen < 20 {
            let m = random_matrix(&mut rng, 5, 5);
            if m.determinant().unwrap().is_zero() {
                continue;
            }
            seen += 1;
            assert!(m.rref().is_identity());
            let inv = m.inverse().unwrap();
            assert!(m.mul_mat(&inv).is_identity());
        }
    }

    #[test]
    fn null_space_extremes() {
        let zero = Matrix::zero(FieldTag::Q, 3, 3);
        assert_eq!(zero.null_space(), Subspace::full(FieldTag::Q, 3));
        let id = Matrix::identity(FieldTag::Q, 3);
        assert_eq!(id.null_space(), Subspace::zero(FieldTag::Q, 3));
    }

    #[test]
    fn null_space_satisfies_rank_nullity_and_annihilates() {
        let mut rng = SplitMix64::new(0xabc1);
        for _ in 0..50 {
            let rows = rng.int_in(1, 5) as usize;
            let cols = rng.int_in(1, 6) as usize;
            let m = random_matrix(&mut rng, rows, cols);
            let kernel = m.null_space();
            assert_eq!(m.rank() + kernel.dim(), cols);
            for v in kernel.basis_vectors() {
                assert!(m.mul_vec(&v).is_zero());
            }
        }
    }

    #[test]
    fn span_canonicalizes() {
        assert_eq!(
            Subspace::span(FieldTag::Q, 3, &[]).unwrap(),
            Subspace::zero(FieldTag::Q, 3)
        );
        // span{e1, e1 + e2} has RREF basis {e1, e2}
        let s = Subspace::span(FieldTag::Q, 3, &[vec_q(&[1, 0, 0]), vec_q(&[1, 1, 0])]).unwrap();
        assert_eq!(
            s,
            Subspace::span(FieldTag::Q, 3, &[vec_q(&[1, 0, 0]), vec_q(&[0, 1, 0])]).unwrap()
        );
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn span_rejects_wrong_ambient() {
        assert!(matches!(
            Subspace::span(FieldTag::Q, 3, &[vec_q(&[1, 0])]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sum_and_intersection_idempotent() {
        let s = Subspace::span(FieldTag::Q, 4, &[vec_q(&[1, 2, 0, 0]), vec_q(&[0, 0, 1, -1])]).unwrap();
        assert_eq!(s.sum(&s).unwrap(), s);
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn disjoint_axes() {
        let e1 = Subspace::span(FieldTag::Q, 2, &[vec_q(&[1, 0])]).unwrap();
        let e2 = Subspace::span(FieldTag::Q, 2, &[vec_q(&[0, 1])]).unwrap();
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.sum(&e2).unwrap().is_full());
    }

    fn random_subspace(rng: &mut SplitMix64, ambient: usize) -> Subspace {
        let k = rng.int_in(0, ambient as i64) as usize;
        let vectors: Vec<Vector> = (0..k)
            .map(|_| {
                let entries: Vec<i64> = (0..ambient).map(|_| rng.int_in(-9, 9)).collect();
                Vector::from_ints(FieldTag::Q, &entries)
            })
            .collect();
        Subspace::span(FieldTag::Q, ambient, &vectors).unwrap()
    }

    #[test]
    fn dimension_formula_holds_for_random_pairs() {
        let mut rng = SplitMix64::new(0xd1f0);
        for trial in 0..200 {
            let ambient = 2 + (trial % 5); // dims 2..6
            let a = random_subspace(&mut rng, ambient);
            let b = random_subspace(&mut rng, ambient);
            let sum = a.sum(&b).unwrap();
            let meet = a.intersect(&b).unwrap();
            assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
            assert!(meet.is_subspace_of(&a).unwrap());
            assert!(meet.is_subspace_of(&b).unwrap());
            assert!(a.is_subspace_of(&sum).unwrap());
            assert!(b.is_subspace_of(&sum).unwrap());
        }
    }

    #[test]
    fn compare_and_membership() {
        let zero = Subspace::zero(FieldTag::Q, 3);
        let plane = Subspace::span(FieldTag::Q, 3, &[vec_q(&[1, 0, 0]), vec_q(&[0, 1, 0])]).unwrap();
        let line = Subspace::span(FieldTag::Q, 3, &[vec_q(&[0, 0, 1])]).unwrap();
        assert_eq!(zero.compare(&plane).unwrap(), SubspaceOrder::LeftInRight);
        assert_eq!(plane.compare(&zero).unwrap(), SubspaceOrder::RightInLeft);
        assert_eq!(plane.compare(&plane.clone()).unwrap(), SubspaceOrder::Equal);
        assert_eq!(plane.compare(&line).unwrap(), SubspaceOrder::Incomparable);
        assert!(plane.contains(&vec_q(&[3, -7, 0])).unwrap());
        assert!(!plane.contains(&vec_q(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn exact_pivoting_over_rational_functions() {
        // (a^2 - 1)/(a - 1) - (a + 1) is exactly zero and must not be
        // picked as a pivot.
        let diff = {
            let q = Scalar::parse("(a^2 - 1)/(a - 1)", FieldTag::Qa).unwrap();
            let lin = Scalar::parse("a + 1", FieldTag::Qa).unwrap();
            &q - &lin
        };
        assert!(diff.is_zero());
        let a = Scalar::indeterminate();
        let one = Scalar::one(FieldTag::Qa);
        let m = Matrix::new(
            FieldTag::Qa,
            2,
            2,
            vec![diff.clone(), a.clone(), one.clone(), a.clone()],
        )
        .unwrap();
        // first row is (0, a): pivot must come from row 2 in column 1
        let (red, pivots) = m.rref_with_pivots();
        assert_eq!(pivots, vec![0, 1]);
        assert!(red.is_identity());
    }

    #[test]
    fn qa_kernel_dimension() {
        // over Q(a) the matrix [[a, a^2]] has the 1-dim kernel {(-a t, t)}
        let a = Scalar::indeterminate();
        let a2 = a.pow(2);
        let m = Matrix::new(FieldTag::Qa, 1, 2, vec![a, a2]).unwrap();
        let kernel = m.null_space();
        assert_eq!(kernel.dim(), 1);
        for v in kernel.basis_vectors() {
            assert!(m.mul_vec(&v).is_zero());
        }
    }

    #[test]
    fn display_formats() {
        let v = vec_q(&[1, -2, 0]);
        assert_eq!(v.to_string(), "e1 - 2*e2");
        assert_eq!(Vector::zero(FieldTag::Q, 3).to_string(), "0");
        let s = Subspace::span(FieldTag::Q, 3, &[vec_q(&[0, 1, 0]), vec_q(&[0, 0, 1])]).unwrap();
        assert_eq!(s.to_string(), "<e2, e3>");
        assert_eq!(Subspace::zero(FieldTag::Q, 2).to_string(), "0");
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(LinalgError::SingularMatrix));
        assert!(m.determinant().unwrap().is_zero());
    }
}
