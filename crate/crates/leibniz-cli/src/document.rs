//! On-disk formats: algebra and group-action documents.
//!
//! Both are JSON with every scalar written in the scalar text grammar and
//! every index one-based. Bracket pairs that are omitted are zero.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use leibniz::algebra::{AlgebraError, LeibnizAlgebra, LeibnizFailure, StructureTable};
use leibniz::linalg::Matrix;
use leibniz::scalar::{FieldTag, Scalar, ScalarError};
use leibniz::FiniteGroupAction;

/// Serialized structure table: `[e_left, e_right] = Σ result[k]·e_k`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    /// `"Q"` or `"Qa"`.
    pub field: String,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    /// Map from basis index to scalar string; keys sort numerically.
    pub result: BTreeMap<usize, String>,
}

/// Serialized finite group action: matrices in row-major scalar strings.
/// `identity` and `table` are optional; when omitted they are derived from
/// matrix products (failure to derive means the set is not a group).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ActionDocument {
    pub name: String,
    pub dim: usize,
    pub field: String,
    pub elements: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

#[derive(Debug)]
pub enum DocumentError {
    Syntax(String),
    UnknownFieldTag(String),
    IndexOutOfRange { index: usize, dim: usize },
    ScalarParse { text: String, error: ScalarError },
    LeibnizViolation(LeibnizFailure),
    Action(String),
}

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocumentError::Syntax(m) => write!(f, "document syntax error: {m}"),
            DocumentError::UnknownFieldTag(t) => {
                write!(f, "unknown field tag `{t}` (expected \"Q\" or \"Qa\")")
            }
            DocumentError::IndexOutOfRange { index, dim } => {
                write!(f, "basis index {index} out of range 1..={dim}")
            }
            DocumentError::ScalarParse { text, error } => {
                write!(f, "scalar `{text}`: {error}")
            }
            DocumentError::LeibnizViolation(w) => write!(f, "{w}"),
            DocumentError::Action(m) => write!(f, "action document: {m}"),
        }
    }
}

impl std::error::Error for DocumentError {}

pub fn field_tag(name: &str) -> Result<FieldTag, DocumentError> {
    match name {
        "Q" => Ok(FieldTag::Q),
        "Qa" => Ok(FieldTag::Qa),
        other => Err(DocumentError::UnknownFieldTag(other.to_string())),
    }
}

pub fn parse_algebra_document(bytes: &[u8]) -> Result<AlgebraDocument, DocumentError> {
    serde_json::from_slice(bytes).map_err(|e| DocumentError::Syntax(e.to_string()))
}

/// Builds the raw structure table (no Leibniz validation yet).
pub fn document_to_table(doc: &AlgebraDocument) -> Result<StructureTable, DocumentError> {
    let tag = field_tag(&doc.field)?;
    let mut brackets = Vec::with_capacity(doc.brackets.len());
    for entry in &doc.brackets {
        let mut result = Vec::with_capacity(entry.result.len());
        for (k, text) in &entry.result {
            let scalar = Scalar::parse(text, tag).map_err(|error| DocumentError::ScalarParse {
                text: text.clone(),
                error,
            })?;
            result.push((*k, scalar));
        }
        brackets.push((entry.left, entry.right, result));
    }
    StructureTable::from_brackets(tag, doc.dim, &brackets).map_err(|e| match e {
        AlgebraError::IndexOutOfRange { index, dim } => {
            DocumentError::IndexOutOfRange { index, dim }
        }
        other => DocumentError::Syntax(other.to_string()),
    })
}

/// Full load path: parse, build, and validate the Leibniz identity. The
/// Leibniz failure carries its witness triple.
pub fn load_algebra(bytes: &[u8]) -> Result<(AlgebraDocument, LeibnizAlgebra), DocumentError> {
    let doc = parse_algebra_document(bytes)?;
    let table = document_to_table(&doc)?;
    let algebra = LeibnizAlgebra::validated(table).map_err(|e| match e {
        AlgebraError::LeibnizViolation(w) => DocumentError::LeibnizViolation(w),
        other => DocumentError::Syntax(other.to_string()),
    })?;
    Ok((doc, algebra))
}

/// Exports a table in the document format; zero brackets are omitted and
/// scalar strings come from the canonical renderer.
pub fn table_to_document(name: &str, table: &StructureTable) -> AlgebraDocument {
    let n = table.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut result = BTreeMap::new();
            for k in 0..n {
                let c = table.coeff(i, j, k);
                if !c.is_zero() {
                    result.insert(k + 1, c.to_string());
                }
            }
            if !result.is_empty() {
                brackets.push(BracketEntry {
                    left: i + 1,
                    right: j + 1,
                    result,
                });
            }
        }
    }
    AlgebraDocument {
        name: name.to_string(),
        dim: n,
        field: table.tag().to_string(),
        brackets,
    }
}

pub fn parse_action_document(bytes: &[u8]) -> Result<ActionDocument, DocumentError> {
    serde_json::from_slice(bytes).map_err(|e| DocumentError::Syntax(e.to_string()))
}

/// Builds the group action from a document, deriving the identity index
/// and multiplication table when they are omitted.
pub fn document_to_action(doc: &ActionDocument) -> Result<FiniteGroupAction, DocumentError> {
    let tag = field_tag(&doc.field)?;
    let n = doc.dim;
    let mut elements = Vec::with_capacity(doc.elements.len());
    for rows in &doc.elements {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(DocumentError::Action(format!(
                "every action matrix must be {n}x{n}"
            )));
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            for text in row {
                let scalar =
                    Scalar::parse(text, tag).map_err(|error| DocumentError::ScalarParse {
                        text: text.clone(),
                        error,
                    })?;
                data.push(scalar);
            }
        }
        let matrix = Matrix::new(tag, n, n, data)
            .map_err(|e| DocumentError::Action(e.to_string()))?;
        elements.push(matrix);
    }
    let action = match &doc.table {
        Some(table) => {
            let identity = doc.identity.ok_or_else(|| {
                DocumentError::Action("an explicit table requires an `identity` index".into())
            })?;
            let zero_based: Vec<Vec<usize>> = table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&idx| {
                            idx.checked_sub(1).ok_or(DocumentError::IndexOutOfRange {
                                index: idx,
                                dim: doc.elements.len(),
                            })
                        })
                        .collect::<Result<_, _>>()
                })
                .collect::<Result<_, _>>()?;
            let identity = identity.checked_sub(1).ok_or(DocumentError::IndexOutOfRange {
                index: identity,
                dim: doc.elements.len(),
            })?;
            FiniteGroupAction::new(elements, identity, zero_based)
        }
        None => FiniteGroupAction::from_elements(elements),
    };
    action.map_err(|e| DocumentError::Action(e.to_string()))
}

pub fn action_to_document(name: &str, action: &FiniteGroupAction) -> ActionDocument {
    let n = action.dim();
    let elements = action
        .elements()
        .iter()
        .map(|m| {
            (0..n)
                .map(|r| (0..n).map(|c| m.get(r, c).to_string()).collect())
                .collect()
        })
        .collect();
    ActionDocument {
        name: name.to_string(),
        dim: n,
        field: action.elements()[0].tag().to_string(),
        elements,
        identity: Some(action.identity_index() + 1),
        table: Some(
            action
                .multiplication_table()
                .iter()
                .map(|row| row.iter().map(|&i| i + 1).collect())
                .collect(),
        ),
    }
}
