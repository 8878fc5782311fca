//! Built-in structure-constant tables for the nilpotent Leibniz algebras
//! of dimension ≤ 4, plus the handful of named example algebras from the
//! centralizer-ideal (CL) study they are drawn from.
//!
//! Every entry records a citation string (theorem or section of the
//! source classification) so the tables can be audited line by line. The
//! five one-parameter families are stored over ℚ(a) with the parameter
//! generic; concrete members are obtained by substitution, honoring each
//! family's parameter constraint.

use std::sync::OnceLock;

use thiserror::Error;

use crate::algebra::{AlgebraError, LeibnizAlgebra, StructureTable};
use crate::scalar::{FieldTag, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("parameter a = {alpha} is excluded for `{name}`")]
    ExcludedParameter { name: String, alpha: String },
    #[error("`{0}` is not a parametric family")]
    NotParametric(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Restriction on the parameter of a one-parameter family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamConstraint {
    /// Any rational value is admissible.
    Any,
    /// All values except the listed ones.
    Excluded(Vec<Rational>),
    /// Only the listed values.
    AllowedOnly(Vec<Rational>),
}

impl ParamConstraint {
    pub fn admits(&self, alpha: &Rational) -> bool {
        match self {
            ParamConstraint::Any => true,
            ParamConstraint::Excluded(vs) => !vs.contains(alpha),
            ParamConstraint::AllowedOnly(vs) => vs.contains(alpha),
        }
    }
}

/// A named algebra from the classification, with provenance.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    name: &'static str,
    dim: usize,
    parametric: bool,
    param_constraint: ParamConstraint,
    citation: &'static str,
    table: StructureTable,
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_parametric(&self) -> bool {
        self.parametric
    }

    pub fn param_constraint(&self) -> &ParamConstraint {
        &self.param_constraint
    }

    pub fn citation(&self) -> &'static str {
        self.citation
    }

    /// The stored table: over ℚ(a) for parametric families, over ℚ
    /// otherwise.
    pub fn table(&self) -> &StructureTable {
        &self.table
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Sparse bracket row in source form: `(i, j, [(k, "coeff"), ...])`.
type BracketRow<'a> = (usize, usize, &'a [(usize, &'a str)]);

fn entry(
    name: &'static str,
    dim: usize,
    citation: &'static str,
    constraint: Option<ParamConstraint>,
    brackets: &[BracketRow],
) -> CatalogEntry {
    let parametric = constraint.is_some();
    let tag = if parametric { FieldTag::Qa } else { FieldTag::Q };
    let brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> = brackets
        .iter()
        .map(|(i, j, result)| {
            let result = result
                .iter()
                .map(|(k, text)| {
                    let coeff = Scalar::parse(text, tag)
                        .unwrap_or_else(|e| panic!("catalog coefficient `{text}`: {e}"));
                    (*k, coeff)
                })
                .collect();
            (*i, *j, result)
        })
        .collect();
    let table = StructureTable::from_brackets(tag, dim, &brackets)
        .unwrap_or_else(|e| panic!("catalog table `{name}`: {e}"));
    CatalogEntry {
        name,
        dim,
        parametric,
        param_constraint: constraint.unwrap_or(ParamConstraint::Any),
        citation,
        table,
    }
}

fn build_entries() -> Vec<CatalogEntry> {
    vec![
        entry("abelian_1", 1, "Thm 4.3 Case 1 (1-dim, abelian)", None, &[]),
        entry("abelian_2", 2, "Thm 2.8 (2-dim classification, abelian case)", None, &[]),
        entry(
            "mu_1",
            2,
            "Thm 2.8 (2-dim classification)",
            None,
            &[(1, 1, &[(2, "1")])],
        ),
        entry("lambda_1", 3, "Thm 2.9 (3-dim classification, abelian)", None, &[]),
        entry(
            "lambda_2",
            3,
            "Thm 2.9 (3-dim classification)",
            None,
            &[(1, 1, &[(3, "1")])],
        ),
        entry(
            "lambda_3",
            3,
            "Thm 2.9 (3-dim classification)",
            None,
            &[(1, 2, &[(3, "1")]), (2, 1, &[(3, "-1")])],
        ),
        entry(
            "lambda_4",
            3,
            "Thm 2.9 (3-dim classification, one-parameter family)",
            Some(ParamConstraint::Any),
            &[(1, 1, &[(3, "1")]), (2, 2, &[(3, "a")]), (1, 2, &[(3, "1")])],
        ),
        entry(
            "lambda_5",
            3,
            "Thm 2.9 (3-dim classification)",
            None,
            &[(2, 1, &[(3, "1")]), (1, 2, &[(3, "1")])],
        ),
        entry(
            "lambda_6",
            3,
            "Thm 2.9 (3-dim classification)",
            None,
            &[(1, 1, &[(2, "1")]), (2, 1, &[(3, "1")])],
        ),
        entry(
            "example_2_4",
            3,
            "Ex 2.4 (alternative presentation of the lambda_6 class)",
            None,
            &[(1, 3, &[(2, "1")]), (3, 3, &[(1, "1")])],
        ),
        entry(
            "rho_1",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 1, &[(2, "1")]), (2, 1, &[(3, "1")]), (3, 1, &[(4, "1")])],
        ),
        entry(
            "rho_2",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[
                (1, 1, &[(3, "1")]),
                (1, 2, &[(4, "1")]),
                (2, 1, &[(3, "1")]),
                (3, 1, &[(4, "1")]),
            ],
        ),
        entry(
            "rho_3",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 1, &[(3, "1")]), (2, 1, &[(3, "1")]), (3, 1, &[(4, "1")])],
        ),
        entry(
            "rho_4",
            4,
            "Thm 2.10 (4-dim classification, a in {0, 1})",
            Some(ParamConstraint::AllowedOnly(vec![rat(0, 1), rat(1, 1)])),
            &[
                (1, 1, &[(3, "1")]),
                (1, 2, &[(4, "a")]),
                (2, 1, &[(3, "1")]),
                (2, 2, &[(4, "1")]),
                (3, 1, &[(4, "1")]),
            ],
        ),
        entry(
            "rho_5",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 1, &[(3, "1")]), (1, 2, &[(4, "1")]), (3, 1, &[(4, "1")])],
        ),
        entry(
            "rho_6",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 1, &[(3, "1")]), (2, 2, &[(4, "1")]), (3, 1, &[(4, "1")])],
        ),
        entry(
            "rho_7",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[
                (1, 1, &[(4, "1")]),
                (1, 2, &[(3, "1")]),
                (2, 1, &[(3, "-1")]),
                (2, 2, &[(3, "-2"), (4, "1")]),
            ],
        ),
        entry(
            "rho_8",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 2, &[(3, "1")]), (2, 1, &[(4, "1")]), (2, 2, &[(3, "-1")])],
        ),
        entry(
            "rho_9",
            4,
            "Thm 2.10 (4-dim classification, one-parameter family)",
            Some(ParamConstraint::Any),
            &[
                (1, 1, &[(3, "1")]),
                (1, 2, &[(4, "1")]),
                (2, 1, &[(3, "-a")]),
                (2, 2, &[(4, "-1")]),
            ],
        ),
        entry(
            "rho_10",
            4,
            "Thm 2.10 (4-dim classification, one-parameter family)",
            Some(ParamConstraint::Any),
            &[
                (1, 1, &[(4, "1")]),
                (1, 2, &[(4, "a")]),
                (2, 1, &[(4, "-a")]),
                (2, 2, &[(4, "1")]),
                (3, 3, &[(4, "1")]),
            ],
        ),
        entry(
            "rho_11",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[
                (1, 2, &[(4, "1")]),
                (1, 3, &[(4, "1")]),
                (2, 1, &[(4, "-1")]),
                (2, 2, &[(4, "1")]),
                (3, 1, &[(4, "1")]),
            ],
        ),
        entry(
            "rho_12",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[
                (1, 1, &[(4, "1")]),
                (1, 2, &[(4, "1")]),
                (2, 1, &[(4, "-1")]),
                (3, 3, &[(4, "1")]),
            ],
        ),
        entry(
            "rho_13",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 2, &[(3, "1")]), (2, 1, &[(4, "1")])],
        ),
        entry(
            "rho_14",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 2, &[(3, "1")]), (2, 1, &[(3, "-1")]), (2, 2, &[(4, "1")])],
        ),
        entry(
            "rho_15",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(2, 1, &[(4, "1")]), (2, 2, &[(3, "1")])],
        ),
        entry(
            "rho_16",
            4,
            "Thm 2.10 (4-dim classification, one-parameter family, a != 1)",
            Some(ParamConstraint::Excluded(vec![rat(1, 1)])),
            &[
                (1, 2, &[(4, "1")]),
                (2, 1, &[(4, "(1+a)/(1-a)")]),
                (2, 2, &[(3, "1")]),
            ],
        ),
        entry(
            "rho_17",
            4,
            "Thm 2.10 (4-dim classification)",
            None,
            &[(1, 2, &[(4, "1")]), (2, 1, &[(4, "-1")]), (3, 3, &[(4, "1")])],
        ),
        entry(
            "counterexample_s4",
            3,
            "§4 (CL-algebra that is not nilpotent)",
            None,
            &[(3, 3, &[(1, "1")]), (3, 2, &[(2, "1")]), (2, 3, &[(2, "-1")])],
        ),
        entry(
            "example_3_8",
            2,
            "Ex 3.8 (non-abelian CL-algebra)",
            None,
            &[(1, 1, &[(2, "1")])],
        ),
        entry(
            "remark_3_2",
            3,
            "Rmk 3.2 (left/right centralizer asymmetry)",
            None,
            &[(3, 3, &[(1, "1")]), (1, 3, &[(2, "1")])],
        ),
    ]
}

/// All catalog entries in fixed order.
pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(build_entries)
}

pub fn find(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

/// Looks up an entry and builds the validated algebra: over ℚ(a) when a
/// parametric entry is requested without a parameter, over ℚ otherwise.
pub fn catalog_get(name: &str, alpha: Option<&Rational>) -> Result<LeibnizAlgebra, CatalogError> {
    let entry = find(name)?;
    match (entry.parametric, alpha) {
        (false, None) => Ok(LeibnizAlgebra::validated(entry.table.clone())?),
        (false, Some(_)) => Err(CatalogError::NotParametric(name.to_string())),
        (true, None) => Ok(LeibnizAlgebra::validated(entry.table.clone())?),
        (true, Some(alpha)) => {
            if !entry.param_constraint.admits(alpha) {
                return Err(CatalogError::ExcludedParameter {
                    name: name.to_string(),
                    alpha: crate::scalar::rational_to_string(alpha),
                });
            }
            let table = entry.table.substitute(alpha)?;
            Ok(LeibnizAlgebra::validated(table)?)
        }
    }
}

/// One row of the verification corpus: a concrete or generic instance of
/// a catalog entry.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// Display name, e.g. `lambda_4(a)` or `lambda_4(a=-1)`.
    pub label: String,
    /// Catalog entry the instance came from.
    pub base: &'static str,
    /// `None` for generic (symbolic) parameter.
    pub alpha: Option<Rational>,
    pub algebra: LeibnizAlgebra,
}

fn corpus_push(out: &mut Vec<CorpusEntry>, base: &'static str, alpha: Option<Rational>) {
    let algebra = catalog_get(base, alpha.as_ref())
        .unwrap_or_else(|e| panic!("corpus entry {base}: {e}"));
    let label = match &alpha {
        None if algebra.tag() == FieldTag::Qa => format!("{base}(a)"),
        None => base.to_string(),
        Some(v) => format!("{base}(a={})", crate::scalar::rational_to_string(v)),
    };
    out.push(CorpusEntry {
        label,
        base,
        alpha,
        algebra,
    });
}

/// The fixed verification corpus: every nilpotent Leibniz algebra of
/// dimension ≤ 4 from the classification — concrete entries once,
/// parametric families at generic `a` plus sampled parameter values
/// (`lambda_4` at {0, 1, -1, 2}; `rho_9`, `rho_10`, `rho_16` at
/// {0, 2, -1, 1/2}; `rho_4` only at its admissible {0, 1}). 43 entries.
pub fn theorem_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::with_capacity(43);
    corpus_push(&mut out, "abelian_1", None);
    corpus_push(&mut out, "abelian_2", None);
    corpus_push(&mut out, "mu_1", None);
    corpus_push(&mut out, "lambda_1", None);
    corpus_push(&mut out, "lambda_2", None);
    corpus_push(&mut out, "lambda_3", None);
    corpus_push(&mut out, "lambda_4", None);
    for v in [rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1)] {
        corpus_push(&mut out, "lambda_4", Some(v));
    }
    corpus_push(&mut out, "lambda_5", None);
    corpus_push(&mut out, "lambda_6", None);
    corpus_push(&mut out, "rho_1", None);
    corpus_push(&mut out, "rho_2", None);
    corpus_push(&mut out, "rho_3", None);
    for v in [rat(0, 1), rat(1, 1)] {
        corpus_push(&mut out, "rho_4", Some(v));
    }
    corpus_push(&mut out, "rho_5", None);
    corpus_push(&mut out, "rho_6", None);
    corpus_push(&mut out, "rho_7", None);
    corpus_push(&mut out, "rho_8", None);
    corpus_push(&mut out, "rho_9", None);
    for v in sample_alphas() {
        corpus_push(&mut out, "rho_9", Some(v));
    }
    corpus_push(&mut out, "rho_10", None);
    for v in sample_alphas() {
        corpus_push(&mut out, "rho_10", Some(v));
    }
    corpus_push(&mut out, "rho_11", None);
    corpus_push(&mut out, "rho_12", None);
    corpus_push(&mut out, "rho_13", None);
    corpus_push(&mut out, "rho_14", None);
    corpus_push(&mut out, "rho_15", None);
    corpus_push(&mut out, "rho_16", None);
    for v in sample_alphas() {
        corpus_push(&mut out, "rho_16", Some(v));
    }
    corpus_push(&mut out, "rho_17", None);
    out
}

fn sample_alphas() -> [Rational; 4] {
    [rat(0, 1), rat(2, 1), rat(-1, 1), rat(1, 2)]
}

/// A centralizer span listed in the source classification proof:
/// `C_L(e_element)` of `entry` is expected to equal the span of the given
/// standard basis vectors (all listed spans are coordinate subspaces).
#[derive(Debug, Clone, Copy)]
pub struct CentralizerExpectation {
    pub entry: &'static str,
    /// One-based basis index of the element whose centralizer is listed.
    pub element: usize,
    /// One-based indices of the basis vectors spanning the centralizer.
    pub expected_basis: &'static [usize],
    /// Annotation for known misprints in the published table.
    pub note: Option<&'static str>,
}

const RHO6_E3_NOTE: &str = "the published line annotates this span with \"= L\"; \
that is a misprint: [e3,e1] = e4 != 0 keeps e1 out of C_L(e3), and the span \
<e2,e3,e4> (dimension 3) is the correct value";

/// The complete centralizer table from the classification proof
/// (2-, 3- and 4-dimensional cases). Parametric entries are stated for
/// generic `a`.
pub fn centralizer_expectations() -> &'static [CentralizerExpectation] {
    macro_rules! row {
        ($entry:literal, $element:literal, $basis:expr) => {
            CentralizerExpectation {
                entry: $entry,
                element: $element,
                expected_basis: &$basis,
                note: None,
            }
        };
    }
    &[
        // dim 2
        row!("mu_1", 1, [2]),
        row!("mu_1", 2, [1, 2]),
        // dim 3
        row!("lambda_2", 1, [2, 3]),
        row!("lambda_2", 2, [1, 2, 3]),
        row!("lambda_2", 3, [1, 2, 3]),
        row!("lambda_3", 1, [1, 3]),
        row!("lambda_3", 2, [2, 3]),
        row!("lambda_3", 3, [1, 2, 3]),
        row!("lambda_4", 1, [3]),
        row!("lambda_4", 2, [3]),
        row!("lambda_4", 3, [1, 2, 3]),
        row!("lambda_5", 1, [1, 3]),
        row!("lambda_5", 2, [2, 3]),
        row!("lambda_5", 3, [1, 2, 3]),
        row!("lambda_6", 1, [3]),
        row!("lambda_6", 2, [2, 3]),
        row!("lambda_6", 3, [1, 2, 3]),
        // dim 4
        row!("rho_1", 1, [4]),
        row!("rho_1", 2, [2, 3, 4]),
        row!("rho_1", 3, [2, 3, 4]),
        row!("rho_1", 4, [1, 2, 3, 4]),
        row!("rho_2", 1, [4]),
        row!("rho_2", 2, [2, 3, 4]),
        row!("rho_2", 3, [2, 3, 4]),
        row!("rho_2", 4, [1, 2, 3, 4]),
        row!("rho_3", 1, [4]),
        row!("rho_3", 2, [2, 3, 4]),
        row!("rho_3", 3, [2, 3, 4]),
        row!("rho_3", 4, [1, 2, 3, 4]),
        row!("rho_4", 1, [4]),
        row!("rho_4", 2, [3, 4]),
        row!("rho_4", 3, [2, 3, 4]),
        row!("rho_4", 4, [1, 2, 3, 4]),
        row!("rho_5", 1, [4]),
        row!("rho_5", 2, [2, 3, 4]),
        row!("rho_5", 3, [2, 3, 4]),
        row!("rho_5", 4, [1, 2, 3, 4]),
        row!("rho_6", 1, [2, 4]),
        row!("rho_6", 2, [1, 3, 4]),
        CentralizerExpectation {
            entry: "rho_6",
            element: 3,
            expected_basis: &[2, 3, 4],
            note: Some(RHO6_E3_NOTE),
        },
        row!("rho_6", 4, [1, 2, 3, 4]),
        row!("rho_7", 1, [3, 4]),
        row!("rho_7", 2, [3, 4]),
        row!("rho_7", 3, [1, 2, 3, 4]),
        row!("rho_7", 4, [1, 2, 3, 4]),
        row!("rho_8", 1, [1, 3, 4]),
        row!("rho_8", 2, [3, 4]),
        row!("rho_8", 3, [1, 2, 3, 4]),
        row!("rho_8", 4, [1, 2, 3, 4]),
        row!("rho_9", 1, [3, 4]),
        row!("rho_9", 2, [3, 4]),
        row!("rho_9", 3, [1, 2, 3, 4]),
        row!("rho_9", 4, [1, 2, 3, 4]),
        row!("rho_10", 1, [3, 4]),
        row!("rho_10", 2, [3, 4]),
        row!("rho_10", 3, [1, 2, 4]),
        row!("rho_10", 4, [1, 2, 3, 4]),
        row!("rho_11", 1, [1, 4]),
        row!("rho_11", 2, [3, 4]),
        row!("rho_11", 3, [2, 3, 4]),
        row!("rho_11", 4, [1, 2, 3, 4]),
        row!("rho_12", 1, [3, 4]),
        row!("rho_12", 2, [2, 3, 4]),
        row!("rho_12", 3, [1, 2, 4]),
        row!("rho_12", 4, [1, 2, 3, 4]),
        row!("rho_13", 1, [1, 3, 4]),
        row!("rho_13", 2, [2, 3, 4]),
        row!("rho_13", 3, [1, 2, 3, 4]),
        row!("rho_13", 4, [1, 2, 3, 4]),
        row!("rho_14", 1, [1, 3, 4]),
        row!("rho_14", 2, [3, 4]),
        row!("rho_14", 3, [1, 2, 3, 4]),
        row!("rho_14", 4, [1, 2, 3, 4]),
        row!("rho_15", 1, [1, 3, 4]),
        row!("rho_15", 2, [3, 4]),
        row!("rho_15", 3, [1, 2, 3, 4]),
        row!("rho_15", 4, [1, 2, 3, 4]),
        row!("rho_16", 1, [1, 3, 4]),
        row!("rho_16", 2, [3, 4]),
        row!("rho_16", 3, [1, 2, 3, 4]),
        row!("rho_16", 4, [1, 2, 3, 4]),
        row!("rho_17", 1, [1, 3, 4]),
        row!("rho_17", 2, [2, 3, 4]),
        row!("rho_17", 3, [1, 2, 4]),
        row!("rho_17", 4, [1, 2, 3, 4]),
    ]
}

/// Annotation (if any) attached to the published centralizer line for
/// `entry`/`e_element`.
pub fn centralizer_note(entry: &str, element: usize) -> Option<&'static str> {
    centralizer_expectations()
        .iter()
        .find(|e| e.entry == entry && e.element == element)
        .and_then(|e| e.note)
}
