//! The individual CLI commands, written against the report type so they
//! can be exercised directly by integration tests.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::Value;

use leibniz::algebra::{validate_leibniz, LeibnizAlgebra, LeibnizFailure, StructureTable};
use leibniz::catalog::{self, CatalogError};
use leibniz::centralizer::{
    centralizer, cl_element_subspace, is_cl, CentralizerKind, ClFlavor, ClWitness, XSelection,
};
use leibniz::linalg::{Subspace, Vector};
use leibniz::scalar::{rational_from_str, rational_to_string, FieldTag, Rational, Scalar};
use leibniz::{ActionReport, SeriesVerdict};

use crate::document::{
    self, parse_action_document, parse_algebra_document, table_to_document,
};
use crate::report::{digest, json_str, InputInfo, Report, SelectionInfo, Verdict};

/// Errors that make the invocation itself invalid (exit code 2).
/// Mathematical failures are never errors; they are fail verdicts inside
/// a report (exit code 1).
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Where an algebra comes from.
#[derive(Debug, Clone)]
pub enum AlgebraSource {
    Catalog { name: String, alpha: Option<Rational> },
    File(PathBuf),
}

impl AlgebraSource {
    pub fn from_flags(
        catalog_name: Option<String>,
        file: Option<PathBuf>,
        alpha: Option<String>,
    ) -> Result<Self, UsageError> {
        let alpha = alpha
            .map(|text| {
                rational_from_str(&text)
                    .map_err(|e| usage(format!("--alpha {text}: {e}")))
            })
            .transpose()?;
        match (catalog_name, file) {
            (Some(name), None) => Ok(AlgebraSource::Catalog { name, alpha }),
            (None, Some(path)) => {
                if alpha.is_some() {
                    return Err(usage("--alpha only applies to catalog entries"));
                }
                Ok(AlgebraSource::File(path))
            }
            (Some(_), Some(_)) => Err(usage("give either --catalog or --file, not both")),
            (None, None) => Err(usage("an algebra is required: --catalog NAME or --file PATH")),
        }
    }
}

/// A loaded (but not yet Leibniz-validated) table plus its provenance.
pub struct LoadedAlgebra {
    pub input: InputInfo,
    pub table: StructureTable,
    /// Set when the source is a catalog entry (enables annotations).
    pub catalog_name: Option<String>,
}

pub fn load_source(source: &AlgebraSource) -> Result<LoadedAlgebra, UsageError> {
    match source {
        AlgebraSource::Catalog { name, alpha } => {
            let entry = catalog::find(name).map_err(|e| usage(e.to_string()))?;
            let table = match alpha {
                None => entry.table().clone(),
                Some(alpha) => {
                    if !entry.is_parametric() {
                        return Err(usage(
                            CatalogError::NotParametric(name.clone()).to_string(),
                        ));
                    }
                    if !entry.param_constraint().admits(alpha) {
                        return Err(usage(
                            CatalogError::ExcludedParameter {
                                name: name.clone(),
                                alpha: rational_to_string(alpha),
                            }
                            .to_string(),
                        ));
                    }
                    entry
                        .table()
                        .substitute(alpha)
                        .map_err(|e| usage(format!("{name}: {e}")))?
                }
            };
            let label = match alpha {
                None => format!("catalog:{name}"),
                Some(v) => format!("catalog:{name}(a={})", rational_to_string(v)),
            };
            let canonical = serde_json::to_vec_pretty(&table_to_document(name, &table))
                .expect("document serializes");
            Ok(LoadedAlgebra {
                input: InputInfo {
                    source: label,
                    digest: digest(&canonical),
                },
                table,
                catalog_name: Some(name.clone()),
            })
        }
        AlgebraSource::File(path) => {
            let bytes = std::fs::read(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let doc = parse_algebra_document(&bytes).map_err(|e| usage(e.to_string()))?;
            let table = document::document_to_table(&doc).map_err(|e| usage(e.to_string()))?;
            Ok(LoadedAlgebra {
                input: InputInfo {
                    source: format!("file:{}", path.display()),
                    digest: digest(&bytes),
                },
                table,
                catalog_name: None,
            })
        }
    }
}

fn leibniz_failure_data(w: &LeibnizFailure) -> BTreeMap<String, Value> {
    let mut data = BTreeMap::new();
    data.insert(
        "triple".to_string(),
        serde_json::json!([w.triple.0, w.triple.1, w.triple.2]),
    );
    data.insert("lhs".to_string(), json_str(w.lhs.to_string()));
    data.insert("rhs".to_string(), json_str(w.rhs.to_string()));
    data
}

/// Runs the Leibniz gate, pushing a pass/fail check. On failure the report
/// carries the witness triple and both sides.
fn validated_or_fail(report: &mut Report, table: &StructureTable) -> Option<LeibnizAlgebra> {
    match validate_leibniz(table) {
        Ok(()) => {
            let n = table.dim();
            report.push(
                "leibniz-identity",
                Verdict::Pass,
                format!("holds on all {n}^3 basis triples"),
            );
            Some(LeibnizAlgebra::validated(table.clone()).expect("just validated"))
        }
        Err(w) => {
            report.push_data(
                "leibniz-identity",
                Verdict::Fail,
                w.to_string(),
                leibniz_failure_data(&w),
            );
            None
        }
    }
}

fn witness_data(w: &ClWitness) -> BTreeMap<String, Value> {
    let mut data = BTreeMap::new();
    data.insert("x".to_string(), json_str(w.x.to_string()));
    data.insert("condition".to_string(), serde_json::json!(w.condition));
    data.insert("a".to_string(), json_str(w.a.to_string()));
    data.insert("y".to_string(), json_str(w.y.to_string()));
    data.insert("value".to_string(), json_str(w.value.to_string()));
    data
}

pub fn selection_info(selection: &XSelection) -> SelectionInfo {
    match selection {
        XSelection::Basis => SelectionInfo {
            mode: "basis".into(),
            samples: None,
            seed: None,
        },
        XSelection::BasisPlusPairs => SelectionInfo {
            mode: "basis+pairs".into(),
            samples: None,
            seed: None,
        },
        XSelection::Sampled { count, seed } => SelectionInfo {
            mode: "sampled".into(),
            samples: Some(*count),
            seed: Some(format!("0x{seed:x}")),
        },
        XSelection::Explicit(xs) => SelectionInfo {
            mode: format!("explicit({})", xs.len()),
            samples: None,
            seed: None,
        },
    }
}

/// Parses `--element`: either a basis name `e3` or a comma-separated
/// coordinate list in the scalar grammar.
pub fn parse_element(spec: &str, dim: usize, tag: FieldTag) -> Result<Vector, UsageError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix('e') {
        if let Ok(index) = rest.parse::<usize>() {
            if index == 0 || index > dim {
                return Err(usage(format!("basis index in e{index} out of range 1..={dim}")));
            }
            return Ok(Vector::unit(tag, dim, index - 1));
        }
    }
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != dim {
        return Err(usage(format!(
            "element `{spec}` must be e<k> or {dim} comma-separated scalars"
        )));
    }
    let mut entries = Vec::with_capacity(dim);
    for part in parts {
        let scalar = Scalar::parse(part, tag)
            .map_err(|e| usage(format!("element coordinate `{part}`: {e}")))?;
        entries.push(scalar);
    }
    Ok(Vector::new(tag, entries).expect("entries parsed under one tag"))
}

pub fn cmd_validate(loaded: &LoadedAlgebra) -> Report {
    let mut report = Report::new("validate", loaded.input.clone());
    if let Some(algebra) = validated_or_fail(&mut report, &loaded.table) {
        report.push(
            "structure",
            Verdict::Info,
            format!("dimension {} over {}", algebra.dim(), algebra.tag()),
        );
    }
    report
}

pub fn cmd_centralizer(loaded: &LoadedAlgebra, element: &str, kind: CentralizerKind) -> Report {
    let mut report = Report::new("centralizer", loaded.input.clone());
    let Some(algebra) = validated_or_fail(&mut report, &loaded.table) else {
        return report;
    };
    let x = match parse_element(element, algebra.dim(), algebra.tag()) {
        Ok(v) => v,
        Err(e) => {
            report.push("element", Verdict::Fail, e.to_string());
            return report;
        }
    };
    let kind_name = match kind {
        CentralizerKind::Left => "left",
        CentralizerKind::Right => "right",
        CentralizerKind::TwoSided => "two-sided",
    };
    let space = centralizer(&algebra, &x, kind).expect("element validated against dimension");
    let mut data = BTreeMap::new();
    data.insert("kind".to_string(), json_str(kind_name));
    data.insert("element".to_string(), json_str(x.to_string()));
    data.insert("dim".to_string(), serde_json::json!(space.dim()));
    data.insert(
        "basis".to_string(),
        serde_json::json!(space
            .basis_vectors()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()),
    );
    report.push_data(
        "centralizer",
        Verdict::Pass,
        format!("{kind_name} centralizer of {x} is {space} (dim {})", space.dim()),
        data,
    );
    if kind == CentralizerKind::TwoSided {
        if let (Some(name), Some(rest)) = (&loaded.catalog_name, element.strip_prefix('e')) {
            if let Ok(index) = rest.parse::<usize>() {
                if let Some(note) = catalog::centralizer_note(name, index) {
                    report.push("annotation", Verdict::Info, note);
                }
            }
        }
    }
    report
}

fn series_detail(terms: &[Subspace], verdict: &SeriesVerdict, derived: bool) -> String {
    let name = |k: usize| {
        if derived {
            format!("L^[{}]", k + 1)
        } else {
            format!("L^{}", k + 1)
        }
    };
    let mut parts: Vec<String> = Vec::new();
    for (k, term) in terms.iter().enumerate().skip(1) {
        parts.push(format!("{} = {}", name(k), term));
    }
    let verdict_text = match verdict {
        SeriesVerdict::Nilpotent { class } => format!("nilpotent, {class}-step"),
        SeriesVerdict::Solvable { length } => format!("solvable, length {length}"),
        SeriesVerdict::Neither => {
            if derived {
                "not solvable".to_string()
            } else {
                "not nilpotent".to_string()
            }
        }
    };
    format!("{}; {}", parts.join(", "), verdict_text)
}

pub fn cmd_series(loaded: &LoadedAlgebra) -> Report {
    let mut report = Report::new("series", loaded.input.clone());
    let Some(algebra) = validated_or_fail(&mut report, &loaded.table) else {
        return report;
    };
    let lower = algebra.lower_central_series();
    let mut data = BTreeMap::new();
    data.insert(
        "terms".to_string(),
        serde_json::json!(lower.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    );
    data.insert(
        "dims".to_string(),
        serde_json::json!(lower.terms.iter().map(Subspace::dim).collect::<Vec<_>>()),
    );
    report.push_data(
        "lower-central-series",
        Verdict::Info,
        series_detail(&lower.terms, &lower.verdict, false),
        data,
    );
    let derived = algebra.derived_series();
    let mut data = BTreeMap::new();
    data.insert(
        "terms".to_string(),
        serde_json::json!(derived.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    );
    report.push_data(
        "derived-series",
        Verdict::Info,
        series_detail(&derived.terms, &derived.verdict, true),
        data,
    );
    report
}

pub fn cmd_cl_check(loaded: &LoadedAlgebra, selection: &XSelection) -> Report {
    let mut report = Report::new("cl-check", loaded.input.clone())
        .with_selection(selection_info(selection));
    let Some(algebra) = validated_or_fail(&mut report, &loaded.table) else {
        return report;
    };
    let verdict = is_cl(&algebra, selection, ClFlavor::TwoSided)
        .expect("selection vectors match the algebra");
    match &verdict.witness {
        None => report.push(
            "cl-conditions",
            Verdict::Pass,
            format!(
                "all three conditions hold for every x in {} ({} elements); \
                 CL-verified on this selection",
                selection, verdict.elements_checked
            ),
        ),
        Some(w) => report.push_data("cl-conditions", Verdict::Fail, w.to_string(), witness_data(w)),
    }
    report
}

pub fn cmd_cl_elements(loaded: &LoadedAlgebra, selection: &XSelection) -> Report {
    let mut report = Report::new("cl-elements", loaded.input.clone())
        .with_selection(selection_info(selection));
    let Some(algebra) = validated_or_fail(&mut report, &loaded.table) else {
        return report;
    };
    let result = cl_element_subspace(&algebra, selection)
        .expect("selection vectors match the algebra");
    let mut data = BTreeMap::new();
    data.insert("dim".to_string(), serde_json::json!(result.subspace.dim()));
    data.insert(
        "basis".to_string(),
        serde_json::json!(result
            .subspace
            .basis_vectors()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()),
    );
    report.push_data(
        "cl-element-subspace",
        Verdict::Info,
        format!("S = {} (dim {})", result.subspace, result.subspace.dim()),
        data,
    );
    report.push(
        "subalgebra-closure",
        if result.closure_is_subalgebra {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        if result.closure_is_subalgebra {
            "S is closed under the bracket".to_string()
        } else {
            "S is NOT closed under the bracket".to_string()
        },
    );
    report
}

pub fn cmd_catalog_list() -> Report {
    let mut report = Report::new(
        "catalog",
        InputInfo {
            source: "builtin:catalog".into(),
            digest: digest(b"catalog"),
        },
    );
    for entry in catalog::entries() {
        let field = entry.table().tag().to_string();
        report.push(
            entry.name(),
            Verdict::Info,
            format!("dim {} over {} — {}", entry.dim(), field, entry.citation()),
        );
    }
    report
}

pub fn catalog_export(
    name: &str,
    alpha: Option<&Rational>,
) -> Result<crate::document::AlgebraDocument, UsageError> {
    let source = AlgebraSource::Catalog {
        name: name.to_string(),
        alpha: alpha.cloned(),
    };
    let loaded = load_source(&source)?;
    Ok(table_to_document(name, &loaded.table))
}

fn action_report_checks(report: &mut Report, outcome: &ActionReport) {
    use leibniz::action::AutomorphismFailure;
    report.push(
        "action-condition-1-linearity",
        Verdict::Pass,
        "each group element acts by a matrix, hence linearly",
    );
    report.push(
        "action-condition-2-identity",
        if outcome.identity_ok { Verdict::Pass } else { Verdict::Fail },
        if outcome.identity_ok {
            "the designated element is the identity matrix".to_string()
        } else {
            "the designated element is not the identity matrix".to_string()
        },
    );
    match outcome.table_witness {
        None => report.push(
            "action-condition-3-compatibility",
            Verdict::Pass,
            "multiplication table agrees with all matrix products",
        ),
        Some((g1, g2)) => report.push(
            "action-condition-3-compatibility",
            Verdict::Fail,
            format!("table entry for (g{g1}, g{g2}) disagrees with the matrix product"),
        ),
    }
    match &outcome.automorphism_witness {
        None => report.push(
            "action-condition-4-automorphism",
            Verdict::Pass,
            "every group element is an algebra automorphism",
        ),
        Some(AutomorphismFailure::NotInvertible { g }) => report.push(
            "action-condition-4-automorphism",
            Verdict::Fail,
            format!("g{g} is not invertible"),
        ),
        Some(AutomorphismFailure::NotMorphism { g, i, j }) => report.push(
            "action-condition-4-automorphism",
            Verdict::Fail,
            format!("g{g}[e{i},e{j}] != [g{g} e{i}, g{g} e{j}]"),
        ),
    }
}

pub fn cmd_action_check(
    loaded: &LoadedAlgebra,
    action_path: &Path,
    selection: &XSelection,
) -> Result<Report, UsageError> {
    let bytes = std::fs::read(action_path)
        .map_err(|e| usage(format!("{}: {e}", action_path.display())))?;
    let doc = parse_action_document(&bytes).map_err(|e| usage(e.to_string()))?;
    let action = document::document_to_action(&doc).map_err(|e| usage(e.to_string()))?;

    let mut report = Report::new("action-check", loaded.input.clone())
        .with_selection(selection_info(selection));
    report.push(
        "action-input",
        Verdict::Info,
        format!(
            "{} ({} elements) from {} [{}]",
            doc.name,
            action.order(),
            action_path.display(),
            digest(&bytes)
        ),
    );
    let Some(algebra) = validated_or_fail(&mut report, &loaded.table) else {
        return Ok(report);
    };
    let outcome = leibniz::action::validate_action(&algebra, &action)
        .map_err(|e| usage(e.to_string()))?;
    action_report_checks(&mut report, &outcome);
    if !outcome.passed() {
        return Ok(report);
    }
    let validated = action.validated(&algebra).expect("report passed");

    // restriction lemma: g·C_L(x) = C_L(g·x) on the selection
    let xs = selection.vectors(&algebra);
    let mut lemma_ok = true;
    'lemma: for x in &xs {
        for g in 0..validated.order() {
            if !validated
                .centralizer_action_map(g, x)
                .map_err(|e| usage(e.to_string()))?
            {
                lemma_ok = false;
                report.push(
                    "centralizer-equivariance",
                    Verdict::Fail,
                    format!("g{} does not map C_L({x}) onto C_L(g·{x})", g + 1),
                );
                break 'lemma;
            }
        }
    }
    if lemma_ok {
        report.push(
            "centralizer-equivariance",
            Verdict::Pass,
            format!(
                "g·C_L(x) = C_L(g·x) for all {} group elements and {} selected x",
                validated.order(),
                xs.len()
            ),
        );
    }

    // CL-element preservation for basis elements that have the property
    let mut preserved = 0usize;
    let mut failures = 0usize;
    for i in 0..algebra.dim() {
        let a = algebra.basis_vector(i);
        if leibniz::centralizer::cl_element_check(&algebra, &a, selection)
            .expect("dims agree")
            .passed()
        {
            match validated.cl_preservation(&a, selection) {
                Ok(true) => preserved += 1,
                Ok(false) => failures += 1,
                Err(_) => failures += 1,
            }
        }
    }
    report.push(
        "cl-element-preservation",
        if failures == 0 { Verdict::Pass } else { Verdict::Fail },
        format!(
            "{preserved} basis CL-element(s) stay CL-elements under the whole group\
             {}",
            if failures > 0 {
                format!("; {failures} failure(s)")
            } else {
                String::new()
            }
        ),
    );
    Ok(report)
}

/// One corpus row of the main verification table.
#[derive(Debug, Clone)]
pub struct TheoremRow {
    pub label: String,
    pub alpha: String,
    pub field: String,
    pub class: Option<usize>,
    pub basis_checked: usize,
    pub sampled_checked: usize,
    pub failure: Option<String>,
}

impl TheoremRow {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Evaluates one algebra for the verification table: Leibniz gate,
/// nilpotency classification, then the CL conditions in basis mode and
/// sampled mode.
pub fn evaluate_row(
    label: &str,
    alpha: &str,
    table: &StructureTable,
    samples: usize,
    seed: u64,
) -> TheoremRow {
    let field = table.tag().to_string();
    let algebra = match validate_leibniz(table) {
        Ok(()) => LeibnizAlgebra::validated(table.clone()).expect("just validated"),
        Err(w) => {
            return TheoremRow {
                label: label.to_string(),
                alpha: alpha.to_string(),
                field,
                class: None,
                basis_checked: 0,
                sampled_checked: 0,
                failure: Some(w.to_string()),
            }
        }
    };
    let series = algebra.lower_central_series();
    let class = match series.verdict {
        SeriesVerdict::Nilpotent { class } => Some(class),
        _ => None,
    };
    let mut failure = None;
    if class.is_none() {
        failure = Some("not nilpotent".to_string());
    }
    let mut basis_checked = 0;
    let mut sampled_checked = 0;
    if failure.is_none() {
        let basis = is_cl(&algebra, &XSelection::Basis, ClFlavor::TwoSided)
            .expect("basis selection matches");
        basis_checked = basis.elements_checked;
        if let Some(w) = &basis.witness {
            failure = Some(format!("basis mode: {w}"));
        } else {
            let sampled = is_cl(
                &algebra,
                &XSelection::Sampled { count: samples, seed },
                ClFlavor::TwoSided,
            )
            .expect("sampled selection matches");
            sampled_checked = sampled.elements_checked;
            if let Some(w) = &sampled.witness {
                failure = Some(format!("sampled mode: {w}"));
            }
        }
    }
    TheoremRow {
        label: label.to_string(),
        alpha: alpha.to_string(),
        field,
        class,
        basis_checked,
        sampled_checked,
        failure,
    }
}

/// Runs the whole corpus. Each row becomes one check; a row passes iff the
/// algebra is nilpotent and CL-verified in both modes.
pub fn theorem_rows(samples: usize, seed: u64) -> Vec<TheoremRow> {
    catalog::theorem_corpus()
        .iter()
        .map(|entry| {
            let alpha = match &entry.alpha {
                None if entry.algebra.tag() == FieldTag::Qa => "generic".to_string(),
                None => "-".to_string(),
                Some(v) => format!("a={}", rational_to_string(v)),
            };
            evaluate_row(&entry.label, &alpha, entry.algebra.table(), samples, seed)
        })
        .collect()
}

pub fn cmd_theorem_report(samples: usize, seed: u64) -> Report {
    let corpus_digest = {
        let docs: Vec<crate::document::AlgebraDocument> = catalog::theorem_corpus()
            .iter()
            .map(|e| table_to_document(&e.label, e.algebra.table()))
            .collect();
        digest(&serde_json::to_vec(&docs).expect("documents serialize"))
    };
    let mut report = Report::new(
        "theorem-report",
        InputInfo {
            source: "builtin:theorem-corpus".into(),
            digest: corpus_digest,
        },
    )
    .with_selection(SelectionInfo {
        mode: "basis and sampled".into(),
        samples: Some(samples),
        seed: Some(format!("0x{seed:x}")),
    });
    let rows = theorem_rows(samples, seed);
    let total = rows.len();
    for row in &rows {
        let mut data = BTreeMap::new();
        data.insert("alpha".to_string(), json_str(row.alpha.clone()));
        data.insert("field".to_string(), json_str(row.field.clone()));
        if let Some(class) = row.class {
            data.insert("nilpotency_class".to_string(), serde_json::json!(class));
        }
        match &row.failure {
            None => {
                data.insert(
                    "basis_elements".to_string(),
                    serde_json::json!(row.basis_checked),
                );
                data.insert(
                    "sampled_elements".to_string(),
                    serde_json::json!(row.sampled_checked),
                );
                report.push_data(
                    row.label.clone(),
                    Verdict::Pass,
                    format!(
                        "nilpotent {}-step; CL-verified on basis ({}) and sampled ({})",
                        row.class.expect("pass rows have a class"),
                        row.basis_checked,
                        row.sampled_checked
                    ),
                    data,
                );
            }
            Some(reason) => {
                report.push_data(row.label.clone(), Verdict::Fail, reason.clone(), data);
            }
        }
    }
    report.push(
        "summary",
        if report.passed() { Verdict::Pass } else { Verdict::Fail },
        format!(
            "{}/{} corpus entries verified as nilpotent CL-algebras",
            rows.iter().filter(|r| r.passed()).count(),
            total
        ),
    );
    report
}

fn expect_subspace(
    report: &mut Report,
    name: &str,
    actual: &Subspace,
    expected: &Subspace,
    label: &str,
) {
    if actual == expected {
        report.push(name, Verdict::Pass, format!("{label} = {actual}"));
    } else {
        report.push(
            name,
            Verdict::Fail,
            format!("{label} = {actual}, expected {expected}"),
        );
    }
}

pub fn cmd_counterexample(samples: usize, seed: u64) -> Report {
    let loaded = load_source(&AlgebraSource::Catalog {
        name: "counterexample_s4".into(),
        alpha: None,
    })
    .expect("counterexample is a catalog entry");
    let mut report = Report::new("counterexample", loaded.input.clone());
    let Some(algebra) = validated_or_fail(&mut report, &loaded.table) else {
        return report;
    };
    let tag = algebra.tag();
    let span = |indices: &[usize]| {
        Subspace::span(
            tag,
            3,
            &indices
                .iter()
                .map(|&i| Vector::unit(tag, 3, i - 1))
                .collect::<Vec<_>>(),
        )
        .expect("unit vectors span")
    };

    let lower = algebra.lower_central_series();
    expect_subspace(&mut report, "series-L2", &lower.terms[1], &span(&[1, 2]), "L^2");
    expect_subspace(&mut report, "series-L3", &lower.terms[2], &span(&[2]), "L^3");
    expect_subspace(&mut report, "series-L4", &lower.terms[3], &span(&[2]), "L^4");
    report.push(
        "not-nilpotent",
        if lower.verdict == SeriesVerdict::Neither { Verdict::Pass } else { Verdict::Fail },
        "the lower central series stabilizes at <e2> != 0",
    );
    let derived = algebra.derived_series();
    report.push(
        "solvable",
        if derived.is_solvable() { Verdict::Pass } else { Verdict::Fail },
        series_detail(&derived.terms, &derived.verdict, true),
    );

    for (name, index, expected) in [
        ("centralizer-e1", 1, span(&[1, 2, 3])),
        ("centralizer-e2", 2, span(&[1, 2])),
        ("centralizer-e3", 3, span(&[1])),
    ] {
        let c = centralizer(&algebra, &algebra.basis_vector(index - 1), CentralizerKind::TwoSided)
            .expect("basis vectors match");
        expect_subspace(&mut report, name, &c, &expected, &format!("C_L(e{index})"));
    }

    for (name, selection) in [
        ("cl-basis", XSelection::Basis),
        ("cl-sampled", XSelection::Sampled { count: samples, seed }),
    ] {
        let verdict =
            is_cl(&algebra, &selection, ClFlavor::TwoSided).expect("selection matches");
        match &verdict.witness {
            None => report.push(
                name,
                Verdict::Pass,
                format!(
                    "CL conditions hold for all {} elements of {}",
                    verdict.elements_checked, selection
                ),
            ),
            Some(w) => report.push_data(name, Verdict::Fail, w.to_string(), witness_data(w)),
        }
    }
    report
}

pub fn parse_seed(text: &str) -> Result<u64, UsageError> {
    let trimmed = text.trim().trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(trimmed, 16)
        .map_err(|e| usage(format!("--seed must be hexadecimal: {e}")))
}
