//! The `spq` command line: thin adapters over the library operations.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 semantic failure (for
//! example a field that is not on its surface), 3 internal invariant
//! violation. Output is deterministic: identical inputs (including seeds)
//! produce identical bytes.

use crate::derivation::{BasisW, VectorField};
use crate::docs::{DocError, FieldDocument, ReportDocument};
use crate::families::{parse_rational, FamilyError, FamilySpec};
use crate::parse::parse_poly;
use crate::surface::{
    classify_degree_one, degree_one_meridians, first_integral_threshold, invariance_report,
    meridian_bound, parallel_bound, verify_degree_two, LinearForm, ProductSpheresSurface,
    SurfaceError,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug)]
enum CliError {
    Usage(String),
    Semantic(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Semantic(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Semantic(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Usage(e.to_string())
    }
}

// invalid mathematical content (as opposed to a malformed command line or
// an unreadable document) is a semantic failure
impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "spq",
    version,
    about = "Exact invariance checks for polynomial vector fields on S_{p,q}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check surface membership and candidate hyperplane sections.
    Check {
        /// Field document (JSON).
        #[arg(long)]
        field: PathBuf,
        /// Candidate linear form, repeatable (e.g. "x1 + x3").
        #[arg(long = "candidate")]
        candidates: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute an extactic polynomial and candidate multiplicities.
    Extactic {
        #[arg(long)]
        field: PathBuf,
        /// "meridian", "parallel", or an explicit comma-separated basis
        /// like "x1,x2,x3".
        #[arg(long)]
        basis: String,
        #[arg(long = "candidate")]
        candidates: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the invariant meridians of a degree-1 field.
    Meridians {
        #[arg(long)]
        field: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural classification of a degree-1 or degree-2 field.
    Classify {
        #[arg(long)]
        field: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Meridian and parallel bounds from a degree vector.
    Bounds {
        #[arg(long)]
        p: usize,
        /// Defaults to (number of degrees) - 1 - p.
        #[arg(long)]
        q: Option<usize>,
        /// Component degrees, comma-separated; "-" marks a zero component.
        #[arg(long, allow_hyphen_values = true)]
        degrees: String,
        /// Also report the first-integral threshold for this degree.
        #[arg(long)]
        a: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build one of the known vector-field families.
    Family {
        /// degree-one-skew | thm4-p2 | thm4-p3 | hyperplane-family |
        /// s1q-meridians | s1q-first-integral | sp1-parallels |
        /// sp1-first-integral | degree-two-sample
        #[arg(long)]
        kind: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Surface parameter, e.g. "2" or "5/2".
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        m: Option<u32>,
        /// Meridian normal, comma-separated rationals.
        #[arg(long)]
        normal: Option<String>,
        /// Roots, comma-separated rationals.
        #[arg(long)]
        roots: Option<String>,
        /// Lines as comma-separated pairs, e.g. "1,1,1,-1".
        #[arg(long)]
        lines: Option<String>,
        /// Cofactor coefficients for degree-two-sample, comma-separated.
        #[arg(long)]
        alphas: Option<String>,
        /// Coordinate index for hyperplane-family.
        #[arg(long)]
        index: Option<usize>,
        /// Row-major upper block for degree-one-skew.
        #[arg(long)]
        upper: Option<String>,
        /// Row-major lower block for degree-one-skew.
        #[arg(long)]
        lower: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the constructed field document here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Validate a field document or a single polynomial expression.
    Parse {
        #[arg(long)]
        field: Option<PathBuf>,
        /// Polynomial expression to parse (requires --nvars).
        expr: Option<String>,
        #[arg(long)]
        nvars: Option<usize>,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok((output, code)) => {
            print!("{output}");
            code
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn read_field(path: &PathBuf) -> Result<(ProductSpheresSurface, VectorField), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: FieldDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(doc.realize()?)
}

fn parse_candidates(
    texts: &[String],
    nvars: usize,
) -> Result<Vec<LinearForm>, CliError> {
    texts
        .iter()
        .map(|s| {
            let p = parse_poly(s, nvars)
                .map_err(|e| CliError::Usage(format!("candidate '{s}': {e}")))?;
            LinearForm::from_polynomial(&p)
                .map_err(|e| CliError::Usage(format!("candidate '{s}': {e}")))
        })
        .collect()
}

fn emit(
    output: String,
    out: &Option<PathBuf>,
) -> Result<String, CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, &output)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(output),
    }
}

fn render<T: Serialize>(doc: &T, format: Format, text: String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Text => text,
    }
}

#[derive(Serialize)]
struct ExtacticDocument {
    version: String,
    basis: Vec<String>,
    extactic: String,
    /// True when the extactic polynomial is identically zero: candidates
    /// then have no defined algebraic multiplicity.
    extactic_is_zero: bool,
    candidates: Vec<ExtacticCandidate>,
}

#[derive(Serialize)]
struct ExtacticCandidate {
    form: String,
    multiplicity_defined: bool,
    multiplicity: Option<u32>,
}

#[derive(Serialize)]
struct MeridiansDocument {
    version: String,
    admissible: bool,
    on_surface: bool,
    upper_rank: usize,
    /// Skew matrices have even rank; each pair of nonzero eigenvalues is a
    /// nonreal conjugate pair.
    nonreal_eigenvalue_pairs: usize,
    kernel_full: bool,
    meridians: Vec<String>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum ClassifyDocument {
    DegreeOne {
        version: String,
        degree: u32,
        upper_skew: bool,
        lower_skew: bool,
        cross_blocks_zero: bool,
        constants_zero: bool,
        admissible: bool,
        on_surface: bool,
    },
    DegreeTwo {
        version: String,
        degree: u32,
        relations_hold: bool,
        violations: Vec<String>,
        alpha: Vec<String>,
        predicted_cofactor: String,
        division_cofactor: Option<String>,
        consistent: bool,
    },
}

#[derive(Serialize)]
struct BoundsDocument {
    version: String,
    p: usize,
    q: usize,
    degrees: Vec<Option<u32>>,
    meridian_bound: Option<i64>,
    parallel_bound: Option<i64>,
    first_integral_threshold: Option<String>,
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

fn execute(command: Command) -> Result<(String, i32), CliError> {
    match command {
        Command::Check { field, candidates, format, out } => {
            let (surface, x) = read_field(&field)?;
            let forms = parse_candidates(&candidates, surface.nvars())?;
            let report = invariance_report(&x, &surface, &forms)?;
            let doc = ReportDocument::from_report(&surface, &x, &report);
            let code = if report.on_surface { 0 } else { 2 };
            let rendered = render(&doc, format, doc.to_text());
            Ok((emit(rendered, &out)?, code))
        }
        Command::Extactic { field, basis, candidates, format, out } => {
            let (surface, x) = read_field(&field)?;
            let n = surface.nvars();
            let w = match basis.as_str() {
                "meridian" => BasisW::meridian(n, surface.p()),
                "parallel" => BasisW::parallel(n, surface.p()),
                explicit => {
                    let elements = explicit
                        .split(',')
                        .map(|s| {
                            parse_poly(s, n).map_err(|e| {
                                CliError::Usage(format!("basis element '{s}': {e}"))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    BasisW::new(elements)
                        .map_err(|e| CliError::Usage(e.to_string()))?
                }
            };
            let e = x
                .extactic(&w)
                .map_err(|err| CliError::Usage(err.to_string()))?;
            let mut cands = Vec::new();
            for s in &candidates {
                let f = parse_poly(s, n)
                    .map_err(|err| CliError::Usage(format!("candidate '{s}': {err}")))?;
                let multiplicity = if e.is_zero() {
                    None
                } else {
                    Some(e.factor_multiplicity(&f).map_err(|err| {
                        CliError::Usage(format!("candidate '{s}': {err}"))
                    })?)
                };
                cands.push(ExtacticCandidate {
                    form: f.to_string(),
                    multiplicity_defined: multiplicity.is_some(),
                    multiplicity,
                });
            }
            let doc = ExtacticDocument {
                version: version(),
                basis: w.elements().iter().map(|b| b.to_string()).collect(),
                extactic: e.to_string(),
                extactic_is_zero: e.is_zero(),
                candidates: cands,
            };
            let mut text = format!("extactic polynomial: {}\n", doc.extactic);
            if doc.extactic_is_zero {
                text.push_str("no defined algebraic multiplicity (extactic polynomial is zero)\n");
            }
            for c in &doc.candidates {
                match c.multiplicity {
                    Some(m) => text.push_str(&format!("{}: multiplicity {m}\n", c.form)),
                    None => text.push_str(&format!("{}: no defined multiplicity\n", c.form)),
                }
            }
            Ok((emit(render(&doc, format, text), &out)?, 0))
        }
        Command::Meridians { field, format, out } => {
            let (surface, x) = read_field(&field)?;
            if x.field_degree() > 1 {
                return Err(CliError::Usage(
                    "meridian listing requires a degree-1 field".into(),
                ));
            }
            let report = classify_degree_one(&x, &surface)?;
            if report.admissible != report.on_surface {
                return Err(CliError::Internal(
                    "structural verdict disagrees with the division check".into(),
                ));
            }
            if !report.admissible {
                return Err(CliError::Semantic(
                    "field is not on the surface; no meridian analysis".into(),
                ));
            }
            let found = degree_one_meridians(&x, &surface)?;
            let rank = report.upper_block.rank();
            let doc = MeridiansDocument {
                version: version(),
                admissible: report.admissible,
                on_surface: report.on_surface,
                upper_rank: rank,
                nonreal_eigenvalue_pairs: rank / 2,
                kernel_full: found.kernel_full,
                meridians: found.meridians.iter().map(|m| m.to_string()).collect(),
            };
            let mut text = format!(
                "upper block rank: {} ({} nonreal eigenvalue pairs)\n",
                doc.upper_rank, doc.nonreal_eigenvalue_pairs
            );
            if doc.kernel_full {
                text.push_str("upper block is zero: every meridian is invariant\n");
            }
            for m in &doc.meridians {
                text.push_str(&format!("meridian: {m}\n"));
            }
            Ok((emit(render(&doc, format, text), &out)?, 0))
        }
        Command::Classify { field, format, out } => {
            let (surface, x) = read_field(&field)?;
            let deg = x.field_degree();
            let (doc, ok) = match deg {
                0 | 1 => {
                    let r = classify_degree_one(&x, &surface)?;
                    if r.admissible != r.on_surface {
                        return Err(CliError::Internal(
                            "structural verdict disagrees with the division check".into(),
                        ));
                    }
                    let ok = r.admissible;
                    (
                        ClassifyDocument::DegreeOne {
                            version: version(),
                            degree: deg,
                            upper_skew: r.upper_skew,
                            lower_skew: r.lower_skew,
                            cross_blocks_zero: r.cross_blocks_zero,
                            constants_zero: r.constants_zero,
                            admissible: r.admissible,
                            on_surface: r.on_surface,
                        },
                        ok,
                    )
                }
                2 => {
                    let r = verify_degree_two(&x, &surface)?;
                    if !r.consistent {
                        return Err(CliError::Internal(
                            "relation verdict disagrees with the division check".into(),
                        ));
                    }
                    let ok = r.relations_hold;
                    (
                        ClassifyDocument::DegreeTwo {
                            version: version(),
                            degree: 2,
                            relations_hold: r.relations_hold,
                            violations: r.violations.clone(),
                            alpha: r.alpha.iter().map(|a| a.to_string()).collect(),
                            predicted_cofactor: r.predicted_cofactor.to_string(),
                            division_cofactor: r.division_cofactor.as_ref().map(|k| k.to_string()),
                            consistent: r.consistent,
                        },
                        ok,
                    )
                }
                d => {
                    return Err(CliError::Usage(format!(
                        "classification covers degree <= 2 fields, got degree {d}"
                    )));
                }
            };
            let text = match &doc {
                ClassifyDocument::DegreeOne { admissible, on_surface, .. } => format!(
                    "degree: {deg}\nadmissible: {admissible}\non surface: {on_surface}\n"
                ),
                ClassifyDocument::DegreeTwo {
                    relations_hold,
                    predicted_cofactor,
                    violations,
                    ..
                } => {
                    let mut t = format!(
                        "degree: 2\nrelations hold: {relations_hold}\npredicted cofactor: {predicted_cofactor}\n"
                    );
                    for v in violations {
                        t.push_str(&format!("violated: {v}\n"));
                    }
                    t
                }
            };
            Ok((emit(render(&doc, format, text), &out)?, if ok { 0 } else { 2 }))
        }
        Command::Bounds { p, q, degrees, a, format } => {
            let degs: Vec<Option<u32>> = degrees
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    if t == "-" {
                        Ok(None)
                    } else {
                        t.parse::<u32>().map(Some).map_err(|_| {
                            CliError::Usage(format!("bad degree entry '{t}'"))
                        })
                    }
                })
                .collect::<Result<_, _>>()?;
            let n = degs.len();
            if p + 2 > n {
                return Err(CliError::Usage(format!(
                    "p = {p} needs at least {} degree entries",
                    p + 2
                )));
            }
            let q_val = n - 1 - p;
            if let Some(q) = q {
                if q != q_val {
                    return Err(CliError::Usage(format!(
                        "q = {q} inconsistent with {n} degree entries and p = {p}"
                    )));
                }
            }
            let threshold = match a {
                Some(a) => {
                    let a = parse_rational(&a)?;
                    let surface = ProductSpheresSurface::new(p, q_val, a)?;
                    let m = degs.iter().flatten().max().copied().unwrap_or(0);
                    Some(first_integral_threshold(&surface, m)?.to_string())
                }
                None => None,
            };
            let meridian = meridian_bound(&degs, p);
            let parallel = parallel_bound(&degs, p, q_val);
            if let (Err(me), Err(pe)) = (&meridian, &parallel) {
                return Err(CliError::Semantic(format!(
                    "no bound applies: meridian: {me}; parallel: {pe}"
                )));
            }
            let doc = BoundsDocument {
                version: version(),
                p,
                q: q_val,
                meridian_bound: meridian.ok(),
                parallel_bound: parallel.ok(),
                first_integral_threshold: threshold,
                degrees: degs,
            };
            let mut text = String::new();
            if let Some(b) = doc.meridian_bound {
                text.push_str(&format!("meridian bound: {b}\n"));
            }
            if let Some(b) = doc.parallel_bound {
                text.push_str(&format!("parallel bound: {b}\n"));
            }
            if let Some(t) = &doc.first_integral_threshold {
                text.push_str(&format!("first-integral threshold: {t}\n"));
            }
            Ok((render(&doc, format, text), 0))
        }
        Command::Family {
            kind,
            p,
            q,
            a,
            m,
            normal,
            roots,
            lines,
            alphas,
            index,
            upper,
            lower,
            seed,
            out,
            format,
        } => {
            let need = |opt: Option<String>, name: &str| {
                opt.ok_or_else(|| CliError::Usage(format!("--{name} is required for this kind")))
            };
            let need_usize = |opt: Option<usize>, name: &str| {
                opt.ok_or_else(|| CliError::Usage(format!("--{name} is required for this kind")))
            };
            let need_u32 = |opt: Option<u32>, name: &str| {
                opt.ok_or_else(|| CliError::Usage(format!("--{name} is required for this kind")))
            };
            let csv_strings = |s: &str| -> Vec<String> {
                if s.trim().is_empty() {
                    Vec::new()
                } else {
                    s.split(',').map(|t| t.trim().to_string()).collect()
                }
            };
            let spec = match kind.as_str() {
                "degree-one-skew" => FamilySpec::DegreeOneSkew {
                    p: need_usize(p, "p")?,
                    q: need_usize(q, "q")?,
                    a: need(a, "a")?,
                    upper: csv_strings(&need(upper, "upper")?),
                    lower: csv_strings(&need(lower, "lower")?),
                },
                "thm4-p2" => FamilySpec::P2MeridianStack {
                    m: need_u32(m, "m")?,
                    a: need(a, "a")?,
                    normal: csv_strings(&need(normal, "normal")?),
                    q: need_usize(q, "q")?,
                },
                "thm4-p3" => FamilySpec::P3MeridianStack {
                    m: need_u32(m, "m")?,
                    a: need(a, "a")?,
                    normal: csv_strings(&need(normal, "normal")?),
                    q: need_usize(q, "q")?,
                },
                "hyperplane-family" => FamilySpec::HyperplaneFamily {
                    p: need_usize(p, "p")?,
                    q: need_usize(q, "q")?,
                    a: need(a, "a")?,
                    index: need_usize(index, "index")?,
                    roots: roots.as_deref().map(csv_strings).unwrap_or_default(),
                },
                "s1q-meridians" => {
                    let flat = csv_strings(&need(lines, "lines")?);
                    if flat.len() % 2 != 0 {
                        return Err(CliError::Usage(
                            "--lines needs an even number of entries (pairs)".into(),
                        ));
                    }
                    FamilySpec::S1qMeridians {
                        q: need_usize(q, "q")?,
                        a: need(a, "a")?,
                        lines: flat.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect(),
                    }
                }
                "s1q-first-integral" => FamilySpec::S1qFirstIntegral {
                    q: need_usize(q, "q")?,
                    a: need(a, "a")?,
                },
                "sp1-parallels" => FamilySpec::Sp1Parallels {
                    p: need_usize(p, "p")?,
                    m: need_u32(m, "m")?,
                    a: need(a, "a")?,
                    roots: roots.as_deref().map(csv_strings).unwrap_or_default(),
                },
                "sp1-first-integral" => FamilySpec::Sp1FirstIntegral {
                    p: need_usize(p, "p")?,
                    a: need(a, "a")?,
                },
                "degree-two-sample" => FamilySpec::DegreeTwoSample {
                    p: need_usize(p, "p")?,
                    q: need_usize(q, "q")?,
                    a: need(a, "a")?,
                    alphas: csv_strings(&need(alphas, "alphas")?),
                    seed,
                },
                other => {
                    return Err(CliError::Usage(format!("unknown family kind '{other}'")));
                }
            };
            let build = spec.build()?;
            if let Some(path) = &out {
                let field_doc = FieldDocument::from_parts(&build.surface, &build.field);
                let mut json = serde_json::to_string_pretty(&field_doc)
                    .expect("field document serializes");
                json.push('\n');
                std::fs::write(path, json).map_err(|e| {
                    CliError::Usage(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let report = invariance_report(&build.field, &build.surface, &build.sections)?;
            if !report.on_surface {
                return Err(CliError::Internal(
                    "constructed family is not on its surface".into(),
                ));
            }
            let mut doc = ReportDocument::from_report(&build.surface, &build.field, &report);
            doc.attach_family(&build);
            let rendered = render(&doc, format, doc.to_text());
            Ok((rendered, 0))
        }
        Command::Parse { field, expr, nvars } => match (field, expr) {
            (Some(path), None) => {
                let (surface, x) = read_field(&path)?;
                let echo = FieldDocument::from_parts(&surface, &x);
                let mut json = serde_json::to_string_pretty(&echo).expect("document serializes");
                json.push('\n');
                Ok((json, 0))
            }
            (None, Some(text)) => {
                let n = nvars.ok_or_else(|| {
                    CliError::Usage("--nvars is required when parsing an expression".into())
                })?;
                let p = parse_poly(&text, n)
                    .map_err(|e| CliError::Semantic(e.to_string()))?;
                Ok((format!("{p}\n"), 0))
            }
            _ => Err(CliError::Usage(
                "parse needs either --field FILE or a single expression with --nvars".into(),
            )),
        },
    }
}
