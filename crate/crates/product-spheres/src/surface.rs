//! The S_{p,q} hypersurface model and everything that lives on it:
//! invariance of the field and of hyperplane sections, cofactor extraction,
//! meridian/parallel bounds, connected-component counts, degree-1 and
//! degree-2 classification, and the rational-first-integral threshold.

use crate::derivation::{BasisW, VectorField};
use crate::linalg::RationalMatrix;
use crate::poly::{rat, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The hypersurface S_{p,q} in R^n, n = p+q+1, cut out by
/// h = (x1^2+...+x_{p+1}^2 - a^2)^2 + x_{p+2}^2+...+xn^2 - 1 with a > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpheresSurface {
    p: usize,
    q: usize,
    a: Rational,
    h: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("the surface parameter must satisfy a > 1 (got {0})")]
    ParameterOutOfRange(Rational),
    #[error("p and q must be >= 1")]
    BadDimensions,
    #[error("variable count mismatch: field has {field}, surface needs {surface}")]
    VariableCountMismatch { field: usize, surface: usize },
    #[error("candidate form is neither a meridian nor a parallel for this surface")]
    NotMeridianOrParallel,
    #[error("linear form must have at least one nonzero coefficient")]
    ZeroForm,
    #[error("expected a polynomial of degree at most 1")]
    NotLinear,
    #[error("operation requires a field of degree at most {max}, got {got}")]
    DegreeTooHigh { max: u32, got: u32 },
    #[error("cofactor requires a nonconstant polynomial")]
    ConstantCandidate,
    #[error("classification verdict is inadmissible; no meridian analysis available")]
    Inadmissible,
    #[error("degree block contains only zero components")]
    AllZeroBlock,
    #[error("bound formula not applicable: {0}")]
    BoundNotApplicable(String),
    #[error("component count not covered: {0}")]
    ComponentCountNotCovered(String),
    #[error("first-integral threshold requires field degree m >= 1")]
    ZeroDegreeThreshold,
}

impl ProductSpheresSurface {
    /// Build S_{p,q} with parameter a > 1.
    pub fn new(p: usize, q: usize, a: Rational) -> Result<Self, SurfaceError> {
        if p < 1 || q < 1 {
            return Err(SurfaceError::BadDimensions);
        }
        if a <= Rational::one() {
            return Err(SurfaceError::ParameterOutOfRange(a));
        }
        let n = p + q + 1;
        let mut upper = Polynomial::constant(n, -(&a * &a));
        for i in 1..=p + 1 {
            upper = upper.add(&Polynomial::var(n, i).pow(2));
        }
        let mut h = upper.pow(2).sub(&Polynomial::one(n));
        for j in p + 2..=n {
            h = h.add(&Polynomial::var(n, j).pow(2));
        }
        Ok(ProductSpheresSurface { p, q, a, h })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Ambient variable count n = p + q + 1.
    pub fn nvars(&self) -> usize {
        self.p + self.q + 1
    }

    /// The defining polynomial h.
    pub fn defining_poly(&self) -> &Polynomial {
        &self.h
    }

    /// Indices 1..=p+1 ("sphere factor" coordinates).
    pub fn upper_indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.p + 1
    }

    /// Indices p+2..=n.
    pub fn lower_indices(&self) -> std::ops::RangeInclusive<usize> {
        self.p + 2..=self.nvars()
    }
}

/// A hyperplane sum(a_i x_i) - c, normalized so the first nonzero
/// coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
    constant: Rational,
}

/// How a hyperplane meets S_{p,q}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// Support in the upper coordinates, c = 0.
    Meridian,
    /// Support in the lower coordinates, |c| < 1.
    Parallel,
    /// Support in the lower coordinates but |c| >= 1: tangential or empty
    /// section. Accepted in reports, never counted as a parallel.
    DegenerateParallel,
    /// Mixes upper and lower coordinates (or upper with c != 0).
    Mixed,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>, constant: Rational) -> Result<Self, SurfaceError> {
        let Some(first) = coefficients.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(SurfaceError::ZeroForm);
        };
        let coefficients = coefficients.iter().map(|c| c / &first).collect();
        Ok(LinearForm { coefficients, constant: constant / first })
    }

    /// Read a linear form from a degree-<=1 polynomial p = sum(a_i x_i) + p0,
    /// interpreted as the hyperplane sum(a_i x_i) = -p0.
    pub fn from_polynomial(f: &Polynomial) -> Result<Self, SurfaceError> {
        if f.total_degree().map_or(true, |d| d > 1) {
            return Err(SurfaceError::NotLinear);
        }
        let n = f.nvars();
        let mut coefficients = vec![Rational::zero(); n];
        let mut constant = Rational::zero();
        for (m, c) in f.terms() {
            if m.is_one() {
                constant = -c.clone();
            } else {
                let i = m.exponents().iter().position(|&e| e == 1).unwrap();
                coefficients[i] = c.clone();
            }
        }
        LinearForm::new(coefficients, constant)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    /// The polynomial sum(a_i x_i) - c.
    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.coefficients.len();
        let mut f = Polynomial::constant(n, -self.constant.clone());
        for (i, c) in self.coefficients.iter().enumerate() {
            f = f.add(&Polynomial::var(n, i + 1).scale(c));
        }
        f
    }

    /// 1-based indices of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn kind(&self, surface: &ProductSpheresSurface) -> FormKind {
        let support = self.support();
        let upper = support.iter().all(|&i| i <= surface.p + 1);
        let lower = support.iter().all(|&i| i >= surface.p + 2);
        if upper && self.constant.is_zero() {
            FormKind::Meridian
        } else if lower && self.constant.abs() < Rational::one() {
            FormKind::Parallel
        } else if lower {
            FormKind::DegenerateParallel
        } else {
            FormKind::Mixed
        }
    }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", {
            let n = self.coefficients.len();
            let mut lhs = Polynomial::zero(n);
            for (i, c) in self.coefficients.iter().enumerate() {
                lhs = lhs.add(&Polynomial::var(n, i + 1).scale(c));
            }
            lhs
        }, self.constant)
    }
}

/// K with X(f) = K * f when it exists; `Some(0)` when X(f) = 0.
pub fn cofactor(field: &VectorField, f: &Polynomial) -> Result<Option<Polynomial>, SurfaceError> {
    if f.is_constant() {
        return Err(SurfaceError::ConstantCandidate);
    }
    let image = field.apply(f);
    if image.is_zero() {
        return Ok(Some(Polynomial::zero(f.nvars())));
    }
    Ok(image.exact_div(f))
}

/// Result of checking X(h) = K * h on the surface's defining polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnSurface {
    pub on_surface: bool,
    pub cofactor_h: Option<Polynomial>,
}

pub fn is_field_on_surface(
    field: &VectorField,
    surface: &ProductSpheresSurface,
) -> Result<OnSurface, SurfaceError> {
    if field.nvars() != surface.nvars() {
        return Err(SurfaceError::VariableCountMismatch {
            field: field.nvars(),
            surface: surface.nvars(),
        });
    }
    let k = cofactor(field, surface.defining_poly()).expect("h is nonconstant");
    Ok(OnSurface { on_surface: k.is_some(), cofactor_h: k })
}

/// Algebraic multiplicity of a candidate in an extactic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Defined(u32),
    /// The extactic polynomial is identically zero: no defined multiplicity.
    Undefined,
}

/// Outcome of checking one meridian/parallel candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateResult {
    pub form: LinearForm,
    pub kind: FormKind,
    pub invariant: bool,
    pub cofactor: Option<Polynomial>,
    pub extactic_multiplicity: Multiplicity,
    /// Connected components of the section; `None` for degenerate parallels
    /// and cases not covered by the component table.
    pub components: Option<u32>,
}

/// Check one hyperplane candidate: cofactor by exact division, multiplicity
/// in the extactic polynomial over the meridian basis {x1..x_{p+1}} or the
/// parallel basis {1, x_{p+2}..xn}, and the component count.
pub fn check_invariant_section(
    field: &VectorField,
    surface: &ProductSpheresSurface,
    form: &LinearForm,
) -> Result<CandidateResult, SurfaceError> {
    let kind = form.kind(surface);
    let basis = match kind {
        FormKind::Meridian => BasisW::meridian(surface.nvars(), surface.p),
        FormKind::Parallel | FormKind::DegenerateParallel => {
            BasisW::parallel(surface.nvars(), surface.p)
        }
        FormKind::Mixed => return Err(SurfaceError::NotMeridianOrParallel),
    };
    let f = form.to_polynomial();
    let k = cofactor(field, &f)?;
    let extactic = field.extactic(&basis).expect("basis has dimension >= 2");
    let extactic_multiplicity = if extactic.is_zero() {
        Multiplicity::Undefined
    } else {
        Multiplicity::Defined(
            extactic
                .factor_multiplicity(&f)
                .expect("nonzero extactic, nonconstant form"),
        )
    };
    let component_kind = match kind {
        FormKind::Meridian => Some(SectionKind::Meridian),
        FormKind::Parallel => Some(SectionKind::Parallel),
        _ => None,
    };
    let components = component_kind
        .and_then(|k| component_count(k, surface.p, surface.q, form.constant()).ok());
    Ok(CandidateResult {
        form: form.clone(),
        kind,
        invariant: k.is_some(),
        cofactor: k,
        extactic_multiplicity,
        components,
    })
}

/// Which family of hyperplane sections a count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    Meridian,
    Parallel,
}

/// Connected components of a meridian or parallel section, per the covered
/// table: 1/1 for p,q >= 2; meridian 2, parallel 1 on S_{1,q}; meridian 1,
/// parallel 2 (|c| < 1) on S_{p,1}.
pub fn component_count(
    kind: SectionKind,
    p: usize,
    q: usize,
    c: &Rational,
) -> Result<u32, SurfaceError> {
    if p == 1 && q == 1 {
        return Err(SurfaceError::ComponentCountNotCovered(
            "p = q = 1 (torus case) is out of scope".into(),
        ));
    }
    match kind {
        SectionKind::Meridian => Ok(if p == 1 { 2 } else { 1 }),
        SectionKind::Parallel => {
            if c.abs() >= Rational::one() {
                return Err(SurfaceError::ComponentCountNotCovered(format!(
                    "parallel requires |c| < 1, got c = {c}"
                )));
            }
            Ok(if q == 1 { 2 } else { 1 })
        }
    }
}

/// Sorted finite degrees of one block (zero components contribute nothing);
/// errors when the block has no nonzero component.
fn sorted_block_degrees(
    degrees: &[Option<u32>],
    block: std::ops::RangeInclusive<usize>,
) -> Result<Vec<u32>, SurfaceError> {
    let mut ds: Vec<u32> = block
        .filter_map(|i| degrees.get(i - 1).copied().flatten())
        .collect();
    if ds.is_empty() {
        return Err(SurfaceError::AllZeroBlock);
    }
    ds.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ds)
}

/// Upper bound on the number of invariant meridians:
/// C(p,2)(m1-1) + sum_{i=2}^{p+1} m_i + 1, with the upper-block degrees
/// sorted in decreasing order internally.
pub fn meridian_bound(degrees: &[Option<u32>], p: usize) -> Result<i64, SurfaceError> {
    let ds = sorted_block_degrees(degrees, 1..=p + 1)?;
    let m1 = ds[0] as i64;
    let tail: i64 = (1..=p).map(|i| *ds.get(i).unwrap_or(&0) as i64).sum();
    Ok(binomial_i64(p as i64, 2) * (m1 - 1) + tail + 1)
}

/// Upper bound on the number of invariant parallels:
/// C(q,2)(m_{p+2}-1) + sum_{j=1}^{q-1} m_{p+j+1}, lower-block degrees sorted
/// decreasing.
pub fn parallel_bound(degrees: &[Option<u32>], p: usize, q: usize) -> Result<i64, SurfaceError> {
    if q < 2 {
        // the formula degenerates to 0 for a single lower coordinate, where
        // the sharp count is m - 1 instead
        return Err(SurfaceError::BoundNotApplicable(
            "the parallel bound formula needs q >= 2".into(),
        ));
    }
    let n = p + q + 1;
    let ds = sorted_block_degrees(degrees, p + 2..=n)?;
    let m1 = ds[0] as i64;
    let tail: i64 = (0..q - 1).map(|i| *ds.get(i).unwrap_or(&0) as i64).sum();
    Ok(binomial_i64(q as i64, 2) * (m1 - 1) + tail)
}

fn binomial_i64(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r = 1i64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn binomial_big(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Invariant-hypersurface count at which a degree-m field on S_{p,q} is
/// guaranteed a rational first integral: with the formula's n = p+q (ambient
/// dimension n+1) and d = 4, C(n+m, n+1) - C(n+m-4, n+1) + n. Binomials with
/// negative upper argument are zero.
pub fn first_integral_threshold(
    surface: &ProductSpheresSurface,
    m: u32,
) -> Result<BigInt, SurfaceError> {
    if m == 0 {
        return Err(SurfaceError::ZeroDegreeThreshold);
    }
    let n = (surface.p + surface.q) as i64;
    let m = m as i64;
    Ok(binomial_big(n + m, n + 1) - binomial_big(n + m - 4, n + 1) + BigInt::from(n))
}

/// Structural classification of a degree <= 1 field against the
/// skew-symmetric block conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeOneReport {
    pub upper_block: RationalMatrix,
    pub lower_block: RationalMatrix,
    pub upper_skew: bool,
    pub lower_skew: bool,
    pub cross_blocks_zero: bool,
    pub constants_zero: bool,
    /// All structural conditions hold.
    pub admissible: bool,
    /// Direct division check X(h) = K h; must agree with `admissible`.
    pub on_surface: bool,
}

fn linear_coefficient(r: &Polynomial, j: usize) -> Rational {
    let n = r.nvars();
    r.coeff(&crate::poly::Monomial::var(n, j).clone())
}

fn constant_coefficient(r: &Polynomial) -> Rational {
    r.coeff(&crate::poly::Monomial::one(r.nvars()))
}

/// Classify a degree <= 1 field: upper and lower coefficient blocks must be
/// skew-symmetric, cross blocks and constants zero (the full condition set
/// from the degree-one analysis). Cross-validated against the division
/// check.
pub fn classify_degree_one(
    field: &VectorField,
    surface: &ProductSpheresSurface,
) -> Result<DegreeOneReport, SurfaceError> {
    if field.nvars() != surface.nvars() {
        return Err(SurfaceError::VariableCountMismatch {
            field: field.nvars(),
            surface: surface.nvars(),
        });
    }
    let deg = field.field_degree();
    if deg > 1 {
        return Err(SurfaceError::DegreeTooHigh { max: 1, got: deg });
    }
    let n = surface.nvars();
    let p1 = surface.p + 1;
    let q = surface.q;
    let c = |i: usize, j: usize| linear_coefficient(field.component(i), j);

    let upper_entries: Vec<Rational> = (1..=p1)
        .flat_map(|i| (1..=p1).map(move |j| (i, j)))
        .map(|(i, j)| c(i, j))
        .collect();
    let upper_block = RationalMatrix::new(p1, p1, upper_entries);
    let lower_entries: Vec<Rational> = (p1 + 1..=n)
        .flat_map(|i| (p1 + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| c(i, j))
        .collect();
    let lower_block = RationalMatrix::new(q, q, lower_entries);

    let upper_skew = upper_block.is_skew_symmetric().expect("square");
    let lower_skew = lower_block.is_skew_symmetric().expect("square");
    let cross_blocks_zero = (1..=p1)
        .all(|i| (p1 + 1..=n).all(|j| c(i, j).is_zero()))
        && (p1 + 1..=n).all(|i| (1..=p1).all(|j| c(i, j).is_zero()));
    let constants_zero = (1..=n).all(|i| constant_coefficient(field.component(i)).is_zero());

    let admissible = upper_skew && lower_skew && cross_blocks_zero && constants_zero;
    let on_surface = is_field_on_surface(field, surface)?.on_surface;
    Ok(DegreeOneReport {
        upper_block,
        lower_block,
        upper_skew,
        lower_skew,
        cross_blocks_zero,
        constants_zero,
        admissible,
        on_surface,
    })
}

/// Invariant meridians of an admissible degree-1 field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeOneMeridians {
    pub meridians: Vec<LinearForm>,
    /// The upper block is the zero matrix: its kernel is everything, and
    /// every meridian is invariant (the reported forms are only a basis).
    pub kernel_full: bool,
}

/// Kernel vectors of the upper coefficient block, mapped to meridians
/// sum(v_i x_i) = 0. For a nonzero upper block of size p+1 the list has at
/// most p-1 entries (nonzero skew matrices have rank >= 2).
pub fn degree_one_meridians(
    field: &VectorField,
    surface: &ProductSpheresSurface,
) -> Result<DegreeOneMeridians, SurfaceError> {
    let report = classify_degree_one(field, surface)?;
    if !report.admissible {
        return Err(SurfaceError::Inadmissible);
    }
    let n = surface.nvars();
    let kernel_full = report.upper_block.rank() == 0;
    let meridians = report
        .upper_block
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut coeffs = vec![Rational::zero(); n];
            coeffs[..v.len()].clone_from_slice(&v);
            LinearForm::new(coeffs, Rational::zero()).expect("kernel vector is nonzero")
        })
        .collect();
    Ok(DegreeOneMeridians { meridians, kernel_full })
}

/// Structural verification of a degree <= 2 field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTwoReport {
    /// alpha_l for l = p+2..n, read off 4*beta_{1,1,l}.
    pub alpha: Vec<Rational>,
    pub relations_hold: bool,
    pub violations: Vec<String>,
    /// sum(alpha_l x_l), the cofactor the relations predict.
    pub predicted_cofactor: Polynomial,
    /// Cofactor of h found by exact division, if any.
    pub division_cofactor: Option<Polynomial>,
    /// Relation verdict and division verdict agree, and when the field is on
    /// the surface the division cofactor equals the predicted one.
    pub consistent: bool,
}

/// Check every coefficient relation characterizing degree <= 2 fields on
/// S_{p,q}, and cross-validate against the direct division check: the
/// relation set holds iff X(h) = (sum alpha_l x_l) h.
pub fn verify_degree_two(
    field: &VectorField,
    surface: &ProductSpheresSurface,
) -> Result<DegreeTwoReport, SurfaceError> {
    if field.nvars() != surface.nvars() {
        return Err(SurfaceError::VariableCountMismatch {
            field: field.nvars(),
            surface: surface.nvars(),
        });
    }
    let deg = field.field_degree();
    if deg > 2 {
        return Err(SurfaceError::DegreeTooHigh { max: 2, got: deg });
    }
    let n = surface.nvars();
    let p1 = surface.p + 1;
    let a2 = surface.a() * surface.a();
    let a4 = &a2 * &a2;

    // beta(i, {j,k}): coefficient of the monomial x_j x_k in R_i.
    let beta = |i: usize, j: usize, k: usize| -> Rational {
        let mut exps = vec![0u32; n];
        exps[j - 1] += 1;
        exps[k - 1] += 1;
        field.component(i).coeff(&crate::poly::Monomial::new(exps))
    };
    let lin = |i: usize, j: usize| linear_coefficient(field.component(i), j);
    let konst = |i: usize| constant_coefficient(field.component(i));

    let upper: Vec<usize> = (1..=p1).collect();
    let lower: Vec<usize> = (p1 + 1..=n).collect();

    // alpha_l is pinned by 4*beta_{i,i,l}; read it from i = 1.
    let alpha: Vec<Rational> = lower.iter().map(|&l| beta(1, 1, l) * rat(4)).collect();
    let alpha_of = |l: usize| alpha[l - p1 - 1].clone();

    let mut violations: Vec<String> = Vec::new();
    let mut check = |ok: bool, desc: String| {
        if !ok {
            violations.push(desc);
        }
    };

    for &i in &upper {
        check(beta(i, i, i).is_zero(), format!("4*beta_{i}{i}{i} = alpha_{i} = 0"));
        check(konst(i).is_zero(), format!("beta_{i}0 = 0"));
        for &j in &upper {
            if j != i {
                check(
                    (beta(i, i, j) + beta(j, i, i)).is_zero(),
                    format!("beta_{i}{i}{j} + beta_{j}{i}{i} = 0"),
                );
            }
        }
        for &l in &lower {
            check(
                beta(i, i, l) * rat(4) == alpha_of(l),
                format!("4*beta_{i}{i}{l} = alpha_{l}"),
            );
            check(lin(i, l).is_zero(), format!("beta_{i}{l} = 0 (cross linear)"));
            for &w in &lower {
                if w >= l {
                    check(beta(i, l, w).is_zero(), format!("beta_{i}{l}{w} = 0"));
                }
            }
        }
    }
    for (ai, &i) in upper.iter().enumerate() {
        for &j in &upper[ai + 1..] {
            check(
                (lin(i, j) + lin(j, i)).is_zero(),
                format!("beta_{i}{j} + beta_{j}{i} = 0"),
            );
            for &k in &upper {
                if k > j {
                    check(
                        (beta(i, j, k) + beta(j, i, k) + beta(k, i, j)).is_zero(),
                        format!("beta_{i}{j}{k} + beta_{j}{i}{k} + beta_{k}{i}{j} = 0"),
                    );
                }
            }
            for &l in &lower {
                check(
                    (beta(i, j, l) + beta(j, i, l)).is_zero(),
                    format!("beta_{i}{j}{l} + beta_{j}{i}{l} = 0"),
                );
            }
        }
        check(lin(i, i).is_zero(), format!("beta_{i}{i} = 0"));
    }
    for &l in &lower {
        check(
            beta(l, l, l) * rat(2) == alpha_of(l),
            format!("2*beta_{l}{l}{l} = alpha_{l}"),
        );
        check(
            konst(l) * rat(2) == (&a4 - rat(1)) * alpha_of(l),
            format!("2*beta_{l}0 = (a^4 - 1)*alpha_{l}"),
        );
        for &j in &upper {
            check(
                beta(l, j, j) * rat(2) == -(&a2 * alpha_of(l)),
                format!("2*beta_{l}{j}{j} = -a^2*alpha_{l}"),
            );
            check(beta(l, j, l).is_zero(), format!("beta_{l}{j}{l} = 0"));
            check(lin(l, j).is_zero(), format!("beta_{l}{j} = 0 (cross linear)"));
            for &k in &upper {
                if k > j {
                    check(beta(l, j, k).is_zero(), format!("beta_{l}{j}{k} = 0"));
                }
            }
        }
        check(lin(l, l).is_zero(), format!("beta_{l}{l} = 0"));
        for &w in &lower {
            if w == l {
                continue;
            }
            check(
                (beta(l, w, w) + beta(w, l, w)) * rat(2) == alpha_of(l),
                format!("2*(beta_{l}{w}{w} + beta_{w}{l}{w}) = alpha_{l}"),
            );
            if w > l {
                check(
                    (lin(l, w) + lin(w, l)).is_zero(),
                    format!("beta_{l}{w} + beta_{w}{l} = 0"),
                );
                for &j in &upper {
                    check(
                        (beta(l, j, w) + beta(w, j, l)).is_zero(),
                        format!("beta_{l}{j}{w} + beta_{w}{j}{l} = 0"),
                    );
                }
                for &v in &lower {
                    if v > w {
                        check(
                            (beta(l, w, v) + beta(w, l, v) + beta(v, l, w)).is_zero(),
                            format!("beta_{l}{w}{v} + beta_{w}{l}{v} + beta_{v}{l}{w} = 0"),
                        );
                    }
                }
            }
        }
    }

    let relations_hold = violations.is_empty();
    let mut predicted_cofactor = Polynomial::zero(n);
    for (idx, &l) in lower.iter().enumerate() {
        predicted_cofactor = predicted_cofactor.add(&Polynomial::var(n, l).scale(&alpha[idx]));
    }
    let division_cofactor = is_field_on_surface(field, surface)?.cofactor_h;
    let consistent = match &division_cofactor {
        Some(k) => relations_hold && k == &predicted_cofactor,
        None => !relations_hold,
    };
    Ok(DegreeTwoReport {
        alpha,
        relations_hold,
        violations,
        predicted_cofactor,
        division_cofactor,
        consistent,
    })
}

/// Full invariance report for a field, surface and a set of candidate forms.
#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub on_surface: bool,
    pub cofactor_h: Option<Polynomial>,
    pub candidates: Vec<CandidateResult>,
    pub meridian_bound: Option<i64>,
    pub parallel_bound: Option<i64>,
    pub first_integral_threshold: Option<BigInt>,
}

/// Assemble the report: surface membership, per-candidate invariance (sorted
/// by the candidates' normalized printed form), both bounds, and the
/// first-integral threshold for m = deg X.
pub fn invariance_report(
    field: &VectorField,
    surface: &ProductSpheresSurface,
    candidates: &[LinearForm],
) -> Result<InvarianceReport, SurfaceError> {
    let on = is_field_on_surface(field, surface)?;
    let mut results = candidates
        .iter()
        .map(|lf| check_invariant_section(field, surface, lf))
        .collect::<Result<Vec<_>, _>>()?;
    results.sort_by_key(|r| r.form.to_polynomial().to_string());
    let degrees = field.degree_vector();
    Ok(InvarianceReport {
        on_surface: on.on_surface,
        cofactor_h: on.cofactor_h,
        meridian_bound: meridian_bound(&degrees, surface.p).ok(),
        parallel_bound: parallel_bound(&degrees, surface.p, surface.q).ok(),
        first_integral_threshold: first_integral_threshold(surface, field.field_degree()).ok(),
        candidates: results,
    })
}
