//! Centralizers and the CL-algebra conditions.
//!
//! For `x` in a Leibniz algebra `L`, the right centralizer is
//! `{y : [x,y] = 0}`, the left centralizer `{y : [y,x] = 0}`, and the
//! (two-sided) centralizer their intersection. `L` is a CL-algebra when,
//! for every `x`, the three bracket-vanishing conditions
//!
//! 1. `[[x,L], C_L(x)] = 0`
//! 2. `[[L,x], C_L(x)] = 0`
//! 3. `[C_L(x), [L,x]] = 0`
//!
//! hold — equivalently, when every centralizer is an ideal.
//!
//! The conditions quantify over *all* `x ∈ L`, and centralizers are not
//! linear in `x`, so no finite check proves the universal statement for an
//! arbitrary algebra. Every verdict therefore carries the [`XSelection`]
//! of elements it actually checked: `basis` mirrors the computations in
//! the source classification proofs, `basis_plus_pairs` adds `e_i + e_j`,
//! and `sampled` draws seeded random coordinate vectors. A verdict says
//! "CL-verified on this selection", never more.

use std::fmt;

use crate::algebra::{AlgebraError, LeibnizAlgebra, SubspaceRole};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::rng::SplitMix64;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralizerKind {
    Left,
    Right,
    TwoSided,
}

/// Which of the CL-algebra flavors to verify: left uses conditions (1)
/// and (2), right uses (1) and (3), two-sided all three.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClFlavor {
    Left,
    Right,
    TwoSided,
}

impl ClFlavor {
    fn required_conditions(self) -> &'static [usize] {
        match self {
            ClFlavor::Left => &[1, 2],
            ClFlavor::Right => &[1, 3],
            ClFlavor::TwoSided => &[1, 2, 3],
        }
    }
}

impl fmt::Display for ClFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClFlavor::Left => write!(f, "left"),
            ClFlavor::Right => write!(f, "right"),
            ClFlavor::TwoSided => write!(f, "two-sided"),
        }
    }
}

/// Finite stand-in for the universal quantifier over `x ∈ L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XSelection {
    /// The standard basis `e_1, ..., e_n`.
    Basis,
    /// The basis plus all pairwise sums `e_i + e_j`, `i < j`.
    BasisPlusPairs,
    /// `count` seeded random vectors with integer entries in `-9..=9`
    /// (the zero vector is redrawn; its conditions are vacuous).
    Sampled { count: usize, seed: u64 },
    /// Caller-provided vectors, checked in the given order.
    Explicit(Vec<Vector>),
}

impl XSelection {
    /// Materializes the selection for an algebra, in deterministic order.
    pub fn vectors(&self, algebra: &LeibnizAlgebra) -> Vec<Vector> {
        let n = algebra.dim();
        let tag = algebra.tag();
        match self {
            XSelection::Basis => (0..n).map(|i| Vector::unit(tag, n, i)).collect(),
            XSelection::BasisPlusPairs => {
                let mut xs: Vec<Vector> = (0..n).map(|i| Vector::unit(tag, n, i)).collect();
                for i in 0..n {
                    for j in i + 1..n {
                        xs.push(Vector::unit(tag, n, i).add(&Vector::unit(tag, n, j)));
                    }
                }
                xs
            }
            XSelection::Sampled { count, seed } => {
                let mut rng = SplitMix64::new(*seed);
                let mut xs = Vec::with_capacity(*count);
                while xs.len() < *count {
                    let entries: Vec<Scalar> = (0..n)
                        .map(|_| Scalar::from_integer(rng.int_in(-9, 9), tag))
                        .collect();
                    let v = Vector::new(tag, entries).expect("uniform tag by construction");
                    if !v.is_zero() {
                        xs.push(v);
                    }
                }
                xs
            }
            XSelection::Explicit(xs) => xs.clone(),
        }
    }
}

impl fmt::Display for XSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XSelection::Basis => write!(f, "basis"),
            XSelection::BasisPlusPairs => write!(f, "basis+pairs"),
            XSelection::Sampled { count, seed } => {
                write!(f, "sampled({count}, seed=0x{seed:x})")
            }
            XSelection::Explicit(xs) => write!(f, "explicit({} vectors)", xs.len()),
        }
    }
}

/// The matrix of `y ↦ [x, y]`; its kernel is the right centralizer.
pub fn right_bracket_matrix(algebra: &LeibnizAlgebra, x: &Vector) -> Result<Matrix, AlgebraError> {
    let n = algebra.dim();
    let mut m = Matrix::zero(algebra.tag(), n, n);
    for j in 0..n {
        let col = algebra.bracket(x, &Vector::unit(algebra.tag(), n, j))?;
        for k in 0..n {
            *m.get_mut(k, j) = col.get(k).clone();
        }
    }
    Ok(m)
}

/// The matrix of `y ↦ [y, x]`; its kernel is the left centralizer.
pub fn left_bracket_matrix(algebra: &LeibnizAlgebra, x: &Vector) -> Result<Matrix, AlgebraError> {
    let n = algebra.dim();
    let mut m = Matrix::zero(algebra.tag(), n, n);
    for i in 0..n {
        let col = algebra.bracket(&Vector::unit(algebra.tag(), n, i), x)?;
        for k in 0..n {
            *m.get_mut(k, i) = col.get(k).clone();
        }
    }
    Ok(m)
}

/// Computes `C^l_L(x)`, `C^r_L(x)` or their intersection `C_L(x)` as a
/// canonical subspace. For `x = 0` this is all of `L`.
pub fn centralizer(
    algebra: &LeibnizAlgebra,
    x: &Vector,
    kind: CentralizerKind,
) -> Result<Subspace, AlgebraError> {
    match kind {
        CentralizerKind::Right => Ok(right_bracket_matrix(algebra, x)?.null_space()),
        CentralizerKind::Left => Ok(left_bracket_matrix(algebra, x)?.null_space()),
        CentralizerKind::TwoSided => {
            let right = right_bracket_matrix(algebra, x)?.null_space();
            let left = left_bracket_matrix(algebra, x)?.null_space();
            Ok(right
                .intersect(&left)
                .expect("centralizers share the ambient space"))
        }
    }
}

/// Regression oracle for the subalgebra lemma: `C_L(x)` is a Leibniz
/// subalgebra for every `x` in every Leibniz algebra, so this is expected
/// to return `true` always.
pub fn centralizer_is_subalgebra(
    algebra: &LeibnizAlgebra,
    x: &Vector,
) -> Result<bool, AlgebraError> {
    let c = centralizer(algebra, x, CentralizerKind::TwoSided)?;
    algebra.subspace_role(&c, SubspaceRole::Subalgebra)
}

/// A reproducible counterexample to one of the CL conditions: re-evaluating
/// `[[x,a],y]`, `[[a,x],y]` or `[y,[a,x]]` (per `condition`) yields `value ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClWitness {
    pub x: Vector,
    /// Condition number 1..=3 in the ordering documented on this module.
    pub condition: usize,
    pub a: Vector,
    pub y: Vector,
    pub value: Vector,
}

impl fmt::Display for ClWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = match self.condition {
            1 => "[[x,a],y]",
            2 => "[[a,x],y]",
            _ => "[y,[a,x]]",
        };
        write!(
            f,
            "condition ({}) fails at x = {}, a = {}, y = {}: {} = {}",
            self.condition, self.x, self.a, self.y, shape, self.value
        )
    }
}

/// Re-evaluates a witness against the algebra; a genuine witness
/// reproduces its nonzero `value`.
pub fn reevaluate_witness(
    algebra: &LeibnizAlgebra,
    witness: &ClWitness,
) -> Result<Vector, AlgebraError> {
    match witness.condition {
        1 => algebra.bracket(&algebra.bracket(&witness.x, &witness.a)?, &witness.y),
        2 => algebra.bracket(&algebra.bracket(&witness.a, &witness.x)?, &witness.y),
        3 => algebra.bracket(&witness.y, &algebra.bracket(&witness.a, &witness.x)?),
        other => panic!("CL condition index {other} out of range"),
    }
}

/// Outcome of checking the three CL conditions at a single `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClCheckAt {
    pub x: Vector,
    pub centralizer: Subspace,
    /// `violations[k]` is a witness against condition `k+1`, if any.
    pub violations: [Option<ClWitness>; 3],
}

impl ClCheckAt {
    pub fn condition_holds(&self, condition: usize) -> bool {
        self.violations[condition - 1].is_none()
    }

    /// Left CL property at `x`: conditions (1) and (2).
    pub fn left_cl(&self) -> bool {
        self.condition_holds(1) && self.condition_holds(2)
    }

    /// Right CL property at `x`: conditions (1) and (3).
    pub fn right_cl(&self) -> bool {
        self.condition_holds(1) && self.condition_holds(3)
    }

    pub fn all_hold(&self) -> bool {
        self.violations.iter().all(Option::is_none)
    }
}

/// Evaluates the three CL conditions at `x`, with `a` ranging over the
/// basis of `L` and `y` over the canonical basis of `C_L(x)` (enough by
/// bilinearity). The first violation per condition is kept as a witness.
pub fn cl_check_at(algebra: &LeibnizAlgebra, x: &Vector) -> Result<ClCheckAt, AlgebraError> {
    let c = centralizer(algebra, x, CentralizerKind::TwoSided)?;
    let c_basis = c.basis_vectors();
    let n = algebra.dim();
    let mut violations: [Option<ClWitness>; 3] = [None, None, None];
    for ai in 0..n {
        let a = Vector::unit(algebra.tag(), n, ai);
        let xa = algebra.bracket(x, &a)?;
        let ax = algebra.bracket(&a, x)?;
        for y in &c_basis {
            let checks: [(usize, Vector); 3] = [
                (1, algebra.bracket(&xa, y)?),
                (2, algebra.bracket(&ax, y)?),
                (3, algebra.bracket(y, &ax)?),
            ];
            for (condition, value) in checks {
                if !value.is_zero() && violations[condition - 1].is_none() {
                    violations[condition - 1] = Some(ClWitness {
                        x: x.clone(),
                        condition,
                        a: a.clone(),
                        y: y.clone(),
                        value,
                    });
                }
            }
        }
    }
    Ok(ClCheckAt {
        x: x.clone(),
        centralizer: c,
        violations,
    })
}

/// Verdict of a CL check over a selection. `witness` is `None` exactly
/// when every selected `x` satisfied the required conditions; the verdict
/// always records what was checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClVerdict {
    pub flavor: ClFlavor,
    pub selection: XSelection,
    pub elements_checked: usize,
    pub witness: Option<ClWitness>,
}

impl ClVerdict {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for ClVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(
                f,
                "{} CL conditions verified on selection {} ({} elements)",
                self.flavor, self.selection, self.elements_checked
            ),
            Some(w) => write!(
                f,
                "{} CL conditions fail on selection {}: {}",
                self.flavor, self.selection, w
            ),
        }
    }
}

/// Checks the CL conditions of the requested flavor for every `x` in the
/// selection, in selection order; the first violation becomes the witness.
pub fn is_cl(
    algebra: &LeibnizAlgebra,
    selection: &XSelection,
    flavor: ClFlavor,
) -> Result<ClVerdict, AlgebraError> {
    let xs = selection.vectors(algebra);
    let required = flavor.required_conditions();
    for x in &xs {
        let check = cl_check_at(algebra, x)?;
        for &condition in required {
            if let Some(w) = &check.violations[condition - 1] {
                return Ok(ClVerdict {
                    flavor,
                    selection: selection.clone(),
                    elements_checked: xs.len(),
                    witness: Some(w.clone()),
                });
            }
        }
    }
    Ok(ClVerdict {
        flavor,
        selection: selection.clone(),
        elements_checked: xs.len(),
        witness: None,
    })
}

/// Outcome of testing one element `a` for the CL property over a
/// selection of `x` values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClElementReport {
    pub element: Vector,
    pub selection: XSelection,
    pub elements_checked: usize,
    pub witness: Option<ClWitness>,
}

impl ClElementReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Tests whether `a` has the CL property on the selection: for every
/// selected `x` and every `y` in the basis of `C_L(x)`, the brackets
/// `[[x,a],y]`, `[[a,x],y]` and `[y,[a,x]]` all vanish.
pub fn cl_element_check(
    algebra: &LeibnizAlgebra,
    a: &Vector,
    selection: &XSelection,
) -> Result<ClElementReport, AlgebraError> {
    let xs = selection.vectors(algebra);
    for x in &xs {
        let c = centralizer(algebra, x, CentralizerKind::TwoSided)?;
        let xa = algebra.bracket(x, a)?;
        let ax = algebra.bracket(a, x)?;
        for y in c.basis_vectors() {
            let checks: [(usize, Vector); 3] = [
                (1, algebra.bracket(&xa, &y)?),
                (2, algebra.bracket(&ax, &y)?),
                (3, algebra.bracket(&y, &ax)?),
            ];
            for (condition, value) in checks {
                if !value.is_zero() {
                    return Ok(ClElementReport {
                        element: a.clone(),
                        selection: selection.clone(),
                        elements_checked: xs.len(),
                        witness: Some(ClWitness {
                            x: x.clone(),
                            condition,
                            a: a.clone(),
                            y,
                            value,
                        }),
                    });
                }
            }
        }
    }
    Ok(ClElementReport {
        element: a.clone(),
        selection: selection.clone(),
        elements_checked: xs.len(),
        witness: None,
    })
}

/// The subspace of elements satisfying the CL property relative to the
/// selection, together with the subalgebra closure check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClElementSubspace {
    pub selection: XSelection,
    pub subspace: Subspace,
    /// Whether the computed subspace is closed under the bracket (the
    /// subalgebra theorem predicts `true`).
    pub closure_is_subalgebra: bool,
}

/// For fixed `x` and `y ∈ C_L(x)` the three CL-element conditions are
/// linear in `a`; stacking them over the whole selection gives one linear
/// system whose null space is the selection-relative CL-element subspace.
pub fn cl_element_subspace(
    algebra: &LeibnizAlgebra,
    selection: &XSelection,
) -> Result<ClElementSubspace, AlgebraError> {
    let n = algebra.dim();
    let tag = algebra.tag();
    let xs = selection.vectors(algebra);
    let mut rows: Vec<Vector> = Vec::new();
    for x in &xs {
        let c = centralizer(algebra, x, CentralizerKind::TwoSided)?;
        for y in c.basis_vectors() {
            // columns indexed by the coordinate of `a`
            let mut cols1 = Vec::with_capacity(n);
            let mut cols2 = Vec::with_capacity(n);
            let mut cols3 = Vec::with_capacity(n);
            for m in 0..n {
                let em = Vector::unit(tag, n, m);
                let xm = algebra.bracket(x, &em)?;
                let mx = algebra.bracket(&em, x)?;
                cols1.push(algebra.bracket(&xm, &y)?);
                cols2.push(algebra.bracket(&mx, &y)?);
                cols3.push(algebra.bracket(&y, &mx)?);
            }
            for cols in [&cols1, &cols2, &cols3] {
                for k in 0..n {
                    let entries: Vec<Scalar> =
                        (0..n).map(|m| cols[m].get(k).clone()).collect();
                    let row = Vector::new(tag, entries).expect("uniform tag");
                    if !row.is_zero() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let subspace = if rows.is_empty() {
        Subspace::full(tag, n)
    } else {
        Matrix::from_rows(tag, rows)
            .expect("constraint rows share length")
            .null_space()
    };
    let closure_is_subalgebra = algebra.subspace_role(&subspace, SubspaceRole::Subalgebra)?;
    Ok(ClElementSubspace {
        selection: selection.clone(),
        subspace,
        closure_is_subalgebra,
    })
}
