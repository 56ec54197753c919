//! On-disk document formats: fields and reports as JSON, plus the plain-text
//! rendering used by the command line. Polynomials and rationals travel as
//! re-parseable strings, so every document round-trips exactly and identical
//! inputs always serialize to identical bytes.

use crate::derivation::VectorField;
use crate::families::{parse_rational, FamilyBuild, FamilyError, FamilySpec};
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::surface::{
    CandidateResult, FormKind, InvarianceReport, Multiplicity, ProductSpheresSurface,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("{0}")]
    Invalid(String),
    #[error("component {index}: {message}")]
    BadComponent { index: usize, message: String },
}

/// A vector field on S_{p,q} as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDocument {
    pub p: usize,
    pub q: usize,
    /// Rational parameter as "num" or "num/den" text.
    pub a: String,
    /// One polynomial expression per coordinate, p+q+1 in total.
    pub components: Vec<String>,
}

impl FieldDocument {
    pub fn from_parts(surface: &ProductSpheresSurface, field: &VectorField) -> Self {
        FieldDocument {
            p: surface.p(),
            q: surface.q(),
            a: surface.a().to_string(),
            components: field.components().iter().map(|c| c.to_string()).collect(),
        }
    }

    /// Parse and validate into a surface and a field.
    pub fn realize(&self) -> Result<(ProductSpheresSurface, VectorField), DocError> {
        let a = parse_rational(&self.a).map_err(|e| DocError::Invalid(e.to_string()))?;
        let surface = ProductSpheresSurface::new(self.p, self.q, a)
            .map_err(|e| DocError::Invalid(e.to_string()))?;
        let n = surface.nvars();
        if self.components.len() != n {
            return Err(DocError::Invalid(format!(
                "expected {n} components for p = {}, q = {}, got {}",
                self.p,
                self.q,
                self.components.len()
            )));
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, s)| {
                parse_poly(s, n).map_err(|e| DocError::BadComponent {
                    index: i + 1,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let field = VectorField::new(components)
            .map_err(|e| DocError::Invalid(e.to_string()))?;
        Ok((surface, field))
    }
}

/// One candidate hyperplane in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDocument {
    /// Normalized "lhs = c" rendering.
    pub form: String,
    pub kind: String,
    pub invariant: bool,
    /// Present exactly when `invariant` is true.
    pub cofactor: Option<String>,
    /// Whether the extactic polynomial is nonzero (a multiplicity exists).
    pub multiplicity_defined: bool,
    pub multiplicity: Option<u32>,
    pub components: Option<u32>,
    /// multiplicity x components, when both are known.
    pub counted_with_components: Option<u32>,
}

fn kind_name(kind: FormKind) -> &'static str {
    match kind {
        FormKind::Meridian => "meridian",
        FormKind::Parallel => "parallel",
        FormKind::DegenerateParallel => "degenerate-parallel",
        FormKind::Mixed => "mixed",
    }
}

impl CandidateDocument {
    pub fn from_result(r: &CandidateResult) -> Self {
        let multiplicity = match r.extactic_multiplicity {
            Multiplicity::Defined(m) => Some(m),
            Multiplicity::Undefined => None,
        };
        CandidateDocument {
            form: r.form.to_string(),
            kind: kind_name(r.kind).to_string(),
            invariant: r.invariant,
            cofactor: r.cofactor.as_ref().map(|k| k.to_string()),
            multiplicity_defined: multiplicity.is_some(),
            multiplicity,
            components: r.components,
            counted_with_components: multiplicity.zip(r.components).map(|(m, c)| m * c),
        }
    }
}

/// Family echo attached to reports produced from a family run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub spec: FamilySpec,
    pub achieved_sections: u32,
    pub stacked_multiplicity: Option<u32>,
    pub component_total: Option<u32>,
    pub all_meridians_invariant: bool,
    /// Bound the achieved count is compared against, when one applies.
    pub bound: Option<i64>,
    /// bound - achieved, when both are known.
    pub gap: Option<i64>,
    pub notes: Vec<String>,
}

/// Full machine-readable report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub input: FieldDocument,
    pub on_surface: bool,
    pub cofactor_h: Option<String>,
    pub candidates: Vec<CandidateDocument>,
    pub meridian_bound: Option<i64>,
    pub parallel_bound: Option<i64>,
    /// Big integer as decimal text.
    pub first_integral_threshold: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<FamilyDocument>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extactic: Option<String>,
}

impl ReportDocument {
    pub fn from_report(
        surface: &ProductSpheresSurface,
        field: &VectorField,
        report: &InvarianceReport,
    ) -> Self {
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").to_string(),
            input: FieldDocument::from_parts(surface, field),
            on_surface: report.on_surface,
            cofactor_h: report.cofactor_h.as_ref().map(|k| k.to_string()),
            candidates: report.candidates.iter().map(CandidateDocument::from_result).collect(),
            meridian_bound: report.meridian_bound,
            parallel_bound: report.parallel_bound,
            first_integral_threshold: report
                .first_integral_threshold
                .as_ref()
                .map(|t| t.to_string()),
            family: None,
            extactic: None,
        }
    }

    pub fn attach_family(&mut self, build: &FamilyBuild) {
        let achieved = build.sections.len() as u32;
        // meridian families compare against the meridian bound, parallel
        // families against the parallel bound
        let all_meridian = build
            .sections
            .iter()
            .all(|s| s.kind(&build.surface) == FormKind::Meridian);
        let bound = if build.sections.is_empty() {
            None
        } else if all_meridian {
            self.meridian_bound
        } else {
            self.parallel_bound
        };
        self.family = Some(FamilyDocument {
            spec: build.spec.clone(),
            achieved_sections: achieved,
            stacked_multiplicity: build.stacked_multiplicity,
            component_total: build.component_total,
            all_meridians_invariant: build.all_meridians_invariant,
            bound,
            gap: bound.map(|b| b - achieved as i64),
            notes: build.notes.clone(),
        });
    }

    /// Canonical JSON bytes (pretty-printed, fixed field order, trailing
    /// newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable table view.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!(
            "surface: S_{{{},{}}} with a = {}",
            self.input.p, self.input.q, self.input.a
        ));
        push(&mut out, format!("on surface: {}", self.on_surface));
        if let Some(k) = &self.cofactor_h {
            push(&mut out, format!("surface cofactor: {k}"));
        }
        for c in &self.candidates {
            push(&mut out, format!("candidate: {} [{}]", c.form, c.kind));
            push(&mut out, format!("  invariant: {}", c.invariant));
            if let Some(k) = &c.cofactor {
                push(&mut out, format!("  cofactor: {k}"));
            }
            match c.multiplicity {
                Some(m) => push(&mut out, format!("  extactic multiplicity: {m}")),
                None => push(
                    &mut out,
                    "  extactic multiplicity: undefined (extactic polynomial is zero)".into(),
                ),
            }
            if let Some(n) = c.components {
                push(&mut out, format!("  components: {n}"));
            }
            if let Some(t) = c.counted_with_components {
                push(&mut out, format!("  counted with components: {t}"));
            }
        }
        if let Some(b) = self.meridian_bound {
            push(&mut out, format!("meridian bound: {b}"));
        }
        if let Some(b) = self.parallel_bound {
            push(&mut out, format!("parallel bound: {b}"));
        }
        if let Some(t) = &self.first_integral_threshold {
            push(&mut out, format!("first-integral threshold: {t}"));
        }
        if let Some(e) = &self.extactic {
            push(&mut out, format!("extactic polynomial: {e}"));
        }
        if let Some(fam) = &self.family {
            push(&mut out, format!("family sections achieved: {}", fam.achieved_sections));
            if let Some(m) = fam.stacked_multiplicity {
                push(&mut out, format!("family stacked multiplicity: {m}"));
            }
            if let Some(c) = fam.component_total {
                push(&mut out, format!("family component total: {c}"));
            }
            if fam.all_meridians_invariant {
                push(&mut out, "every meridian is invariant".into());
            }
            if let (Some(b), Some(g)) = (fam.bound, fam.gap) {
                push(&mut out, format!("bound: {b} (gap {g})"));
            }
            for note in &fam.notes {
                push(&mut out, format!("note: {note}"));
            }
        }
        out
    }
}

/// Parse a polynomial from document text in n variables, wrapping parse
/// errors with their location.
pub fn poly_from_text(text: &str, nvars: usize) -> Result<Polynomial, DocError> {
    parse_poly(text, nvars).map_err(|e| DocError::Invalid(e.to_string()))
}

impl From<FamilyError> for DocError {
    fn from(e: FamilyError) -> Self {
        DocError::Invalid(e.to_string())
    }
}
