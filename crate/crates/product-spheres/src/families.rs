//! Constructors for the vector-field families with known invariant
//! meridians, parallels, or hyperplane sections on S_{p,q}, each
//! parameterized so the known counts become runnable checks.

use crate::derivation::VectorField;
use crate::linalg::RationalMatrix;
use crate::poly::{rat, ratio, Polynomial, Rational};
use crate::surface::{
    degree_one_meridians, LinearForm, ProductSpheresSurface, SurfaceError,
};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter(msg.into())
}

/// Parse an exact rational from "num" or "num/den" text.
pub fn parse_rational(s: &str) -> Result<Rational, FamilyError> {
    let s = s.trim();
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().chars().all(|c| c == '0' || c == '+' || c == '-')
        {
            return Err(bad(format!("zero denominator in rational '{s}'")));
        }
    }
    Rational::from_str(s).map_err(|_| bad(format!("cannot parse rational '{s}'")))
}

/// Degree-1 field from skew-symmetric upper and lower blocks:
/// R_i = sum_j U_ij x_j for i <= p+1, R_{p+1+j} = sum_k L_jk x_{p+1+k}.
/// On every S_{p,q} with cofactor 0.
pub fn build_degree_one(
    upper: &RationalMatrix,
    lower: &RationalMatrix,
) -> Result<VectorField, FamilyError> {
    let p1 = upper.rows();
    let q = lower.rows();
    if p1 < 2 || q < 1 {
        return Err(bad("upper block must be at least 2x2 and lower at least 1x1"));
    }
    if !upper.is_skew_symmetric().map_err(|_| bad("upper block must be square"))? {
        return Err(bad("upper block is not skew-symmetric"));
    }
    if !lower.is_skew_symmetric().map_err(|_| bad("lower block must be square"))? {
        return Err(bad("lower block is not skew-symmetric"));
    }
    let n = p1 + q;
    let mut components = Vec::with_capacity(n);
    for i in 0..p1 {
        let mut r = Polynomial::zero(n);
        for j in 0..p1 {
            r = r.add(&Polynomial::var(n, j + 1).scale(upper.get(i, j)));
        }
        components.push(r);
    }
    for i in 0..q {
        let mut r = Polynomial::zero(n);
        for j in 0..q {
            r = r.add(&Polynomial::var(n, p1 + j + 1).scale(lower.get(i, j)));
        }
        components.push(r);
    }
    VectorField::new(components).map_err(|_| bad("both blocks are zero"))
}

/// Degree-m field on S_{2,q} built so the meridian sum(a_i x_i) = 0 is
/// invariant. With D = (a1 x1 + a2 x2 + a3 x3)^{m-3}: R1 = x4(x1^2-a^2)D/2,
/// R2 = x4 x1 x2 D/2, R3 = x4 x1 x3 D/2, R4 = x1(x4^2-1)D, Rj = x1 x4 xj D
/// for j >= 5. The surface cofactor is 2 x1 x4 D and the meridian cofactor
/// is (x4/2) f^{m-4} (x1 f - a1 a^2), f = sum(a_i x_i).
///
/// Caveat: the row-degree counting behind this construction targets
/// extactic multiplicity 3m-10, but R2 and R3 are x2 and x3 times one
/// common factor, which makes two extactic columns proportional. The
/// extactic polynomial over {x1, x2, x3} is therefore identically zero and
/// no algebraic multiplicity is defined for this family.
pub fn build_p2_meridian_stack(
    m: u32,
    a: &Rational,
    normal: &[Rational; 3],
    q: usize,
) -> Result<VectorField, FamilyError> {
    if m < 4 {
        return Err(bad("stacked-multiplicity family needs m >= 4"));
    }
    if q < 2 {
        return Err(bad("this family needs q >= 2"));
    }
    if normal.iter().all(|c| c.is_zero()) {
        return Err(bad("normal vector must be nonzero"));
    }
    let n = 3 + q;
    let mut plane = Polynomial::zero(n);
    for (i, c) in normal.iter().enumerate() {
        plane = plane.add(&Polynomial::var(n, i + 1).scale(c));
    }
    let d = plane.pow(m - 3);
    let x = |i: usize| Polynomial::var(n, i);
    let a2 = Polynomial::constant(n, a * a);
    let half = ratio(1, 2);
    let mut components = vec![
        x(4).mul(&x(1).pow(2).sub(&a2)).scale(&half).mul(&d),
        x(4).mul(&x(1)).mul(&x(2)).scale(&half).mul(&d),
        x(4).mul(&x(1)).mul(&x(3)).scale(&half).mul(&d),
        x(1).mul(&x(4).pow(2).sub(&Polynomial::one(n))).mul(&d),
    ];
    for j in 5..=n {
        components.push(x(1).mul(&x(4)).mul(&x(j)).mul(&d));
    }
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Degree-m field on S_{3,q} built so the meridian sum(a_i x_i) = 0
/// (i = 1..4) is invariant; same construction as the p = 2 family one
/// dimension up, targeting multiplicity 6m-21. The same caveat applies:
/// columns 2..4 of the extactic matrix are proportional, so the extactic
/// polynomial over {x1..x4} is identically zero.
pub fn build_p3_meridian_stack(
    m: u32,
    a: &Rational,
    normal: &[Rational; 4],
    q: usize,
) -> Result<VectorField, FamilyError> {
    if m < 4 {
        return Err(bad("stacked-multiplicity family needs m >= 4"));
    }
    if q < 1 {
        return Err(bad("this family needs q >= 1"));
    }
    if normal.iter().all(|c| c.is_zero()) {
        return Err(bad("normal vector must be nonzero"));
    }
    let n = 4 + q;
    let mut plane = Polynomial::zero(n);
    for (i, c) in normal.iter().enumerate() {
        plane = plane.add(&Polynomial::var(n, i + 1).scale(c));
    }
    let d = plane.pow(m - 3);
    let x = |i: usize| Polynomial::var(n, i);
    let a2 = Polynomial::constant(n, a * a);
    let half = ratio(1, 2);
    let mut components = vec![x(5).mul(&x(1).pow(2).sub(&a2)).scale(&half).mul(&d)];
    for k in 2..=4 {
        components.push(x(5).mul(&x(1)).mul(&x(k)).scale(&half).mul(&d));
    }
    components.push(x(1).mul(&x(5).pow(2).sub(&Polynomial::one(n))).mul(&d));
    for j in 6..=n {
        components.push(x(1).mul(&x(5)).mul(&x(j)).mul(&d));
    }
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Field on S_{p,q} (p, q >= 2) whose invariant hyperplanes stack up along
/// one chosen coordinate x_i. With G = prod(x_i - c_j) over the supplied
/// roots, every component of the base field (which has surface cofactor
/// 2 x1 x_{p+2}) is multiplied by G, so each x_i = c_j becomes invariant and
/// the extactic polynomial over {1, x_i} equals R_i.
pub fn build_hyperplane_family(
    p: usize,
    q: usize,
    a: &Rational,
    index: usize,
    roots: &[Rational],
) -> Result<VectorField, FamilyError> {
    if p < 2 || q < 2 {
        return Err(bad("hyperplane family needs p >= 2 and q >= 2"));
    }
    let n = p + q + 1;
    if index < 1 || index > n {
        return Err(bad(format!("coordinate index {index} out of range 1..={n}")));
    }
    if index >= p + 2 {
        if let Some(c) = roots.iter().find(|c| c.abs() >= Rational::one()) {
            return Err(bad(format!(
                "lower-coordinate root {c} must satisfy |c| < 1"
            )));
        }
    }
    let x = |i: usize| Polynomial::var(n, i);
    let mut g = Polynomial::one(n);
    for c in roots {
        g = g.mul(&x(index).sub(&Polynomial::constant(n, c.clone())));
    }
    let a2 = Polynomial::constant(n, a * a);
    let half = ratio(1, 2);
    let mut components = vec![x(p + 2).mul(&x(1).pow(2).sub(&a2)).scale(&half).mul(&g)];
    for k in 2..=p + 1 {
        components.push(x(p + 2).mul(&x(1)).mul(&x(k)).scale(&half).mul(&g));
    }
    components.push(x(1).mul(&x(p + 2).pow(2).sub(&Polynomial::one(n))).mul(&g));
    for j in p + 3..=n {
        components.push(x(1).mul(&x(p + 2)).mul(&x(j)).mul(&g));
    }
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Field on S_{1,q} with one invariant meridian a_i x1 + b_i x2 = 0 per
/// supplied line. With P = x3...xn and G = prod(a_i x1 + b_i x2):
/// R1 = x1 P - x2 G, R2 = x2 P + x1 G,
/// Rj = (2/q)(-a^2(x1^2+x2^2) + sum(x_s^2) + a^4 - 1) * (P / xj).
/// The extactic polynomial over {x1, x2} is (x1^2 + x2^2) G, and the surface
/// cofactor is 4P.
pub fn build_s1q_meridians(
    q: usize,
    a: &Rational,
    lines: &[(Rational, Rational)],
) -> Result<VectorField, FamilyError> {
    if q < 1 {
        return Err(bad("q must be >= 1"));
    }
    if lines.is_empty() {
        return Err(bad("at least one line is required"));
    }
    if lines.iter().any(|(u, v)| u.is_zero() && v.is_zero()) {
        return Err(bad("each line must have a nonzero coefficient pair"));
    }
    let n = q + 2;
    let m = (q + 1).max(lines.len() + 1) as u32;
    if (m as usize) < q + 1 {
        return Err(bad("degree hypothesis m - 1 >= q is violated"));
    }
    let x = |i: usize| Polynomial::var(n, i);
    let mut big_p = Polynomial::one(n);
    for s in 3..=n {
        big_p = big_p.mul(&x(s));
    }
    let mut g = Polynomial::one(n);
    for (u, v) in lines {
        g = g.mul(&x(1).scale(u).add(&x(2).scale(v)));
    }
    let a2 = a * a;
    let a4 = &a2 * &a2;
    // C = -a^2 (x1^2 + x2^2) + sum_{s>=3} x_s^2 + a^4 - 1
    let mut c = x(1)
        .pow(2)
        .add(&x(2).pow(2))
        .scale(&-a2)
        .add(&Polynomial::constant(n, a4 - rat(1)));
    for s in 3..=n {
        c = c.add(&x(s).pow(2));
    }
    let mut components = vec![
        x(1).mul(&big_p).sub(&x(2).mul(&g)),
        x(2).mul(&big_p).add(&x(1).mul(&g)),
    ];
    for j in 3..=n {
        let mut skip = Polynomial::one(n);
        for s in 3..=n {
            if s != j {
                skip = skip.mul(&x(s));
            }
        }
        components.push(c.mul(&skip).scale(&ratio(2, q as i64)));
    }
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Degree-2 field on S_{1,q} for which every meridian is invariant (and a
/// rational first integral exists). With T = sum_{s>=3} x_s:
/// R_i = (x_i/4) T for i = 1,2 and
/// R_j = (x_j/2) T - (a^2/2)(x1^2 + x2^2) + (a^4 - 1)/2 for j >= 3.
/// The surface cofactor is T and every meridian has cofactor T/4.
pub fn build_s1q_first_integral(q: usize, a: &Rational) -> Result<VectorField, FamilyError> {
    if q < 1 {
        return Err(bad("q must be >= 1"));
    }
    let n = q + 2;
    let x = |i: usize| Polynomial::var(n, i);
    let mut t = Polynomial::zero(n);
    for s in 3..=n {
        t = t.add(&x(s));
    }
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let tail = x(1)
        .pow(2)
        .add(&x(2).pow(2))
        .scale(&(-&a2 / rat(2)))
        .add(&Polynomial::constant(n, (a4 - rat(1)) / rat(2)));
    let mut components = vec![
        x(1).scale(&ratio(1, 4)).mul(&t),
        x(2).scale(&ratio(1, 4)).mul(&t),
    ];
    for j in 3..=n {
        components.push(x(j).scale(&ratio(1, 2)).mul(&t).add(&tail));
    }
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Degree-m field on S_{p,1} with m-1 invariant parallels. With
/// H = prod(x_{p+2} - c_i) over the m-3 supplied roots:
/// R_i = x_{p+2} ((sum x_k^2 - a^2)/4) H for i <= p+1,
/// R_{p+2} = ((sum x_i)(x_{p+2}^2 - 1)/2) H.
/// The extactic polynomial over {1, x_{p+2}} is R_{p+2}, whose linear
/// factors in x_{p+2} are x_{p+2} -+ 1 and the roots; the surface cofactor
/// is x_{p+2} (sum x_i) H.
pub fn build_sp1_parallels(
    p: usize,
    m: u32,
    a: &Rational,
    roots: &[Rational],
) -> Result<VectorField, FamilyError> {
    if p < 1 {
        return Err(bad("p must be >= 1"));
    }
    if m < 3 {
        return Err(bad("this family needs m >= 3"));
    }
    if roots.len() != (m - 3) as usize {
        return Err(bad(format!(
            "m = {m} requires exactly {} roots, got {}",
            m - 3,
            roots.len()
        )));
    }
    if let Some(c) = roots.iter().find(|c| c.abs() >= Rational::one()) {
        return Err(bad(format!("root {c} must satisfy |c| < 1")));
    }
    for (i, c) in roots.iter().enumerate() {
        if roots[i + 1..].contains(c) {
            return Err(bad(format!("root {c} is repeated")));
        }
    }
    let n = p + 2;
    let x = |i: usize| Polynomial::var(n, i);
    let mut h = Polynomial::one(n);
    for c in roots {
        h = h.mul(&x(n).sub(&Polynomial::constant(n, c.clone())));
    }
    let mut sq = Polynomial::constant(n, -(a * a));
    let mut lin = Polynomial::zero(n);
    for i in 1..=p + 1 {
        sq = sq.add(&x(i).pow(2));
        lin = lin.add(&x(i));
    }
    let upper = x(n).mul(&sq).scale(&ratio(1, 4)).mul(&h);
    let mut components = vec![upper; p + 1];
    components.push(
        lin.mul(&x(n).pow(2).sub(&Polynomial::one(n)))
            .scale(&ratio(1, 2))
            .mul(&h),
    );
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Degree-2 field on S_{p,1} for which every meridian is invariant:
/// R_i = x_i x_{p+2}/4, R_{p+2} = x_{p+2}^2/2 - (a^2/2) sum x_i^2 +
/// (a^4 - 1)/2. The surface cofactor is x_{p+2} and every meridian has
/// cofactor x_{p+2}/4.
pub fn build_sp1_first_integral(p: usize, a: &Rational) -> Result<VectorField, FamilyError> {
    if p < 1 {
        return Err(bad("p must be >= 1"));
    }
    let n = p + 2;
    let x = |i: usize| Polynomial::var(n, i);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let mut sq = Polynomial::zero(n);
    for i in 1..=p + 1 {
        sq = sq.add(&x(i).pow(2));
    }
    let mut components: Vec<Polynomial> = (1..=p + 1)
        .map(|i| x(i).mul(&x(n)).scale(&ratio(1, 4)))
        .collect();
    components.push(
        x(n).pow(2)
            .scale(&ratio(1, 2))
            .add(&sq.scale(&(-a2 / rat(2))))
            .add(&Polynomial::constant(n, (a4 - rat(1)) / rat(2))),
    );
    Ok(VectorField::new(components).expect("components are nonzero"))
}

/// Random degree-<=2 field on S_{p,q} satisfying every coefficient relation
/// for surface invariance, with surface cofactor sum(alpha_l x_l) over the
/// lower coordinates. Free coefficient slots are filled with small rationals
/// from a seeded generator, so identical parameters reproduce identical
/// fields.
pub fn build_degree_two_sample(
    p: usize,
    q: usize,
    a: &Rational,
    alphas: &[Rational],
    seed: u64,
) -> Result<VectorField, FamilyError> {
    if p < 1 || q < 1 {
        return Err(bad("p and q must be >= 1"));
    }
    if alphas.len() != q {
        return Err(bad(format!("expected {q} alpha values, got {}", alphas.len())));
    }
    let n = p + q + 1;
    let p1 = p + 1;
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = |rng: &mut ChaCha8Rng| ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3i64));
    let alpha = |l: usize| alphas[l - p1 - 1].clone();

    // quad[i-1] holds (monomial exponent pair (j,k), coefficient) for R_i
    let mut quad = vec![std::collections::BTreeMap::<(usize, usize), Rational>::new(); n];
    let set = |quad: &mut Vec<std::collections::BTreeMap<(usize, usize), Rational>>,
                   i: usize,
                   j: usize,
                   k: usize,
                   c: Rational| {
        let key = (j.min(k), j.max(k));
        quad[i - 1].insert(key, c);
    };

    let upper: Vec<usize> = (1..=p1).collect();
    let lower: Vec<usize> = (p1 + 1..=n).collect();

    // pinned slots in the upper components
    for &i in &upper {
        for &l in &lower {
            set(&mut quad, i, i, l, alpha(l) / rat(4));
        }
    }
    // free x_i^2 x_j pairs: beta_{i,i,j} free, beta_{j,i,i} its negative
    for &i in &upper {
        for &j in &upper {
            if i != j {
                let v = small(&mut rng);
                set(&mut quad, i, i, j, v.clone());
                set(&mut quad, j, i, i, -v);
            }
        }
    }
    // distinct upper triples: two free, one balancing
    for (ai, &i) in upper.iter().enumerate() {
        for (aj, &j) in upper.iter().enumerate().skip(ai + 1) {
            for &k in &upper[aj + 1..] {
                let v1 = small(&mut rng);
                let v2 = small(&mut rng);
                set(&mut quad, i, j, k, v1.clone());
                set(&mut quad, j, i, k, v2.clone());
                set(&mut quad, k, i, j, -(v1 + v2));
            }
            // x_i x_j x_l cross terms: antisymmetric pair per lower l
            for &l in &lower {
                let v = small(&mut rng);
                set(&mut quad, i, j, l, v.clone());
                set(&mut quad, j, i, l, -v);
            }
        }
    }
    // pinned slots in the lower components
    for &l in &lower {
        for &j in &upper {
            set(&mut quad, l, j, j, -(&a2 * alpha(l)) / rat(2));
        }
        set(&mut quad, l, l, l, alpha(l) / rat(2));
    }
    // lower pairs: beta_l(x_w^2) free with beta_w(x_l x_w) balancing, both ways
    for (al, &l) in lower.iter().enumerate() {
        for &w in &lower[al + 1..] {
            let v1 = small(&mut rng);
            set(&mut quad, l, w, w, v1.clone());
            set(&mut quad, w, l, w, alpha(l) / rat(2) - v1);
            let v2 = small(&mut rng);
            set(&mut quad, w, l, l, v2.clone());
            set(&mut quad, l, l, w, alpha(w) / rat(2) - v2);
            // x_j x_l x_w cross terms: antisymmetric pair per upper j
            for &j in &upper {
                let v = small(&mut rng);
                set(&mut quad, l, j, w, v.clone());
                set(&mut quad, w, j, l, -v);
            }
        }
    }
    // distinct lower triples: two free, one balancing
    for (al, &l) in lower.iter().enumerate() {
        for (aw, &w) in lower.iter().enumerate().skip(al + 1) {
            for &v in &lower[aw + 1..] {
                let v1 = small(&mut rng);
                let v2 = small(&mut rng);
                set(&mut quad, l, w, v, v1.clone());
                set(&mut quad, w, l, v, v2.clone());
                set(&mut quad, v, l, w, -(v1 + v2));
            }
        }
    }

    // linear parts: skew blocks, zero cross blocks
    let mut lin = vec![std::collections::BTreeMap::<usize, Rational>::new(); n];
    for (ai, &i) in upper.iter().enumerate() {
        for &j in &upper[ai + 1..] {
            let v = small(&mut rng);
            lin[i - 1].insert(j, v.clone());
            lin[j - 1].insert(i, -v);
        }
    }
    for (al, &l) in lower.iter().enumerate() {
        for &w in &lower[al + 1..] {
            let v = small(&mut rng);
            lin[l - 1].insert(w, v.clone());
            lin[w - 1].insert(l, -v);
        }
    }

    let mut components = Vec::with_capacity(n);
    for i in 1..=n {
        let mut r = Polynomial::zero(n);
        for (&(j, k), c) in &quad[i - 1] {
            let mut exps = vec![0u32; n];
            exps[j - 1] += 1;
            exps[k - 1] += 1;
            r = r.add(&Polynomial::from_term(crate::poly::Monomial::new(exps), c.clone()));
        }
        for (&j, c) in &lin[i - 1] {
            r = r.add(&Polynomial::var(n, j).scale(c));
        }
        if i > p1 {
            r = r.add(&Polynomial::constant(n, (&a4 - rat(1)) * alpha(i) / rat(2)));
        }
        components.push(r);
    }
    VectorField::new(components)
        .map_err(|_| bad("degenerate sample: all components vanished (try another seed)"))
}

/// Serializable description of one family instance; rationals travel as
/// "num/den" strings so documents stay exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FamilySpec {
    #[serde(rename = "degree-one-skew")]
    DegreeOneSkew {
        p: usize,
        q: usize,
        a: String,
        /// (p+1)^2 entries, row-major.
        upper: Vec<String>,
        /// q^2 entries, row-major.
        lower: Vec<String>,
    },
    #[serde(rename = "thm4-p2")]
    P2MeridianStack { m: u32, a: String, normal: Vec<String>, q: usize },
    #[serde(rename = "thm4-p3")]
    P3MeridianStack { m: u32, a: String, normal: Vec<String>, q: usize },
    #[serde(rename = "hyperplane-family")]
    HyperplaneFamily {
        p: usize,
        q: usize,
        a: String,
        index: usize,
        roots: Vec<String>,
    },
    #[serde(rename = "s1q-meridians")]
    S1qMeridians { q: usize, a: String, lines: Vec<(String, String)> },
    #[serde(rename = "s1q-first-integral")]
    S1qFirstIntegral { q: usize, a: String },
    #[serde(rename = "sp1-parallels")]
    Sp1Parallels { p: usize, m: u32, a: String, roots: Vec<String> },
    #[serde(rename = "sp1-first-integral")]
    Sp1FirstIntegral { p: usize, a: String },
    #[serde(rename = "degree-two-sample")]
    DegreeTwoSample {
        p: usize,
        q: usize,
        a: String,
        alphas: Vec<String>,
        seed: u64,
    },
}

/// A constructed family: the field, its surface, the hyperplane sections the
/// construction makes invariant, and the counts the construction achieves.
#[derive(Debug, Clone)]
pub struct FamilyBuild {
    pub spec: FamilySpec,
    pub surface: ProductSpheresSurface,
    pub field: VectorField,
    /// Invariant hyperplane sections known from the construction; for the
    /// first-integral families this is empty because every meridian is
    /// invariant.
    pub sections: Vec<LinearForm>,
    /// Target stacked multiplicity of the single section from the
    /// construction's degree counting. The measured extactic multiplicity
    /// may differ or be undefined (see the constructor docs).
    pub stacked_multiplicity: Option<u32>,
    /// Total connected components over the listed sections, when the
    /// component table covers them all.
    pub component_total: Option<u32>,
    pub all_meridians_invariant: bool,
    pub notes: Vec<String>,
}

fn parse_all(values: &[String]) -> Result<Vec<Rational>, FamilyError> {
    values.iter().map(|s| parse_rational(s)).collect()
}

impl FamilySpec {
    /// Build the field and its companion data. Deterministic: identical
    /// specs (including seeds) produce identical output.
    pub fn build(&self) -> Result<FamilyBuild, FamilyError> {
        let mut notes = Vec::new();
        match self {
            FamilySpec::DegreeOneSkew { p, q, a, upper, lower } => {
                let a = parse_rational(a)?;
                let p1 = p + 1;
                if upper.len() != p1 * p1 {
                    return Err(bad(format!("upper block needs {} entries", p1 * p1)));
                }
                if lower.len() != q * q {
                    return Err(bad(format!("lower block needs {} entries", q * q)));
                }
                let u = RationalMatrix::new(p1, p1, parse_all(upper)?);
                let l = RationalMatrix::new(*q, *q, parse_all(lower)?);
                let field = build_degree_one(&u, &l)?;
                let surface = ProductSpheresSurface::new(*p, *q, a)?;
                let found = degree_one_meridians(&field, &surface)?;
                if found.kernel_full {
                    notes.push(
                        "upper block is zero: every meridian is invariant".into(),
                    );
                }
                let count = found.meridians.len() as u32;
                let per = crate::surface::component_count(
                    crate::surface::SectionKind::Meridian,
                    *p,
                    *q,
                    &Rational::zero(),
                )
                .ok();
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections: found.meridians,
                    stacked_multiplicity: None,
                    component_total: per.map(|c| c * count),
                    all_meridians_invariant: found.kernel_full,
                    notes,
                })
            }
            FamilySpec::P2MeridianStack { m, a, normal, q } => {
                let a = parse_rational(a)?;
                let ns = parse_all(normal)?;
                let [n1, n2, n3] = <[Rational; 3]>::try_from(ns)
                    .map_err(|_| bad("normal needs exactly 3 entries"))?;
                let field = build_p2_meridian_stack(*m, &a, &[n1.clone(), n2.clone(), n3.clone()], *q)?;
                let surface = ProductSpheresSurface::new(2, *q, a)?;
                let n = surface.nvars();
                let mut coeffs = vec![Rational::zero(); n];
                coeffs[0] = n1;
                coeffs[1] = n2;
                coeffs[2] = n3;
                let section = LinearForm::new(coeffs, Rational::zero())?;
                notes.push(
                    "extactic polynomial over the meridian basis is identically zero; \
                     the stacked multiplicity is the construction's target, not a measurement"
                        .into(),
                );
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections: vec![section],
                    stacked_multiplicity: Some(3 * m - 10),
                    component_total: Some(1),
                    all_meridians_invariant: false,
                    notes,
                })
            }
            FamilySpec::P3MeridianStack { m, a, normal, q } => {
                let a = parse_rational(a)?;
                let ns = parse_all(normal)?;
                if ns.len() != 4 {
                    return Err(bad("normal needs exactly 4 entries"));
                }
                let arr: [Rational; 4] = ns.clone().try_into().unwrap();
                let field = build_p3_meridian_stack(*m, &a, &arr, *q)?;
                let surface = ProductSpheresSurface::new(3, *q, a)?;
                let n = surface.nvars();
                let mut coeffs = vec![Rational::zero(); n];
                coeffs[..4].clone_from_slice(&ns);
                let section = LinearForm::new(coeffs, Rational::zero())?;
                notes.push(
                    "extactic polynomial over the meridian basis is identically zero; \
                     the stacked multiplicity is the construction's target, not a measurement"
                        .into(),
                );
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections: vec![section],
                    stacked_multiplicity: Some(6 * m - 21),
                    component_total: Some(1),
                    all_meridians_invariant: false,
                    notes,
                })
            }
            FamilySpec::HyperplaneFamily { p, q, a, index, roots } => {
                let a = parse_rational(a)?;
                let rs = parse_all(roots)?;
                let field = build_hyperplane_family(*p, *q, &a, *index, &rs)?;
                let surface = ProductSpheresSurface::new(*p, *q, a.clone())?;
                let n = surface.nvars();
                let i = *index;
                let axis = |c: Rational| {
                    let mut coeffs = vec![Rational::zero(); n];
                    coeffs[i - 1] = Rational::one();
                    LinearForm::new(coeffs, c).expect("axis form is nonzero")
                };
                let mut sections: Vec<LinearForm> = Vec::new();
                if i == 1 {
                    sections.push(axis(a.clone()));
                    sections.push(axis(-a.clone()));
                    notes.push("base factors are x1 - a and x1 + a".into());
                } else if i <= p + 1 {
                    sections.push(axis(Rational::zero()));
                } else if i == p + 2 {
                    sections.push(axis(Rational::one()));
                    sections.push(axis(-Rational::one()));
                    notes.push(format!(
                        "base factors x{i} - 1 and x{i} + 1 are degenerate parallels"
                    ));
                } else {
                    sections.push(axis(Rational::zero()));
                }
                for c in &rs {
                    sections.push(axis(c.clone()));
                }
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections,
                    stacked_multiplicity: None,
                    component_total: None,
                    all_meridians_invariant: false,
                    notes,
                })
            }
            FamilySpec::S1qMeridians { q, a, lines } => {
                let a = parse_rational(a)?;
                let ls: Vec<(Rational, Rational)> = lines
                    .iter()
                    .map(|(u, v)| Ok((parse_rational(u)?, parse_rational(v)?)))
                    .collect::<Result<_, FamilyError>>()?;
                let field = build_s1q_meridians(*q, &a, &ls)?;
                let surface = ProductSpheresSurface::new(1, *q, a)?;
                let n = surface.nvars();
                let mut sections = Vec::new();
                for (u, v) in &ls {
                    let mut coeffs = vec![Rational::zero(); n];
                    coeffs[0] = u.clone();
                    coeffs[1] = v.clone();
                    let lf = LinearForm::new(coeffs, Rational::zero())?;
                    if sections.contains(&lf) {
                        notes.push(format!(
                            "line {lf} is repeated: higher multiplicity, not a new meridian"
                        ));
                    } else {
                        sections.push(lf);
                    }
                }
                let per = if *q == 1 { None } else { Some(2u32) };
                let count = sections.len() as u32;
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections,
                    stacked_multiplicity: None,
                    component_total: per.map(|c| c * count),
                    all_meridians_invariant: false,
                    notes,
                })
            }
            FamilySpec::S1qFirstIntegral { q, a } => {
                let a = parse_rational(a)?;
                let field = build_s1q_first_integral(*q, &a)?;
                let surface = ProductSpheresSurface::new(1, *q, a)?;
                notes.push("every meridian is invariant; a rational first integral exists".into());
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections: Vec::new(),
                    stacked_multiplicity: None,
                    component_total: None,
                    all_meridians_invariant: true,
                    notes,
                })
            }
            FamilySpec::Sp1Parallels { p, m, a, roots } => {
                let a = parse_rational(a)?;
                let rs = parse_all(roots)?;
                let field = build_sp1_parallels(*p, *m, &a, &rs)?;
                let surface = ProductSpheresSurface::new(*p, 1, a)?;
                let n = surface.nvars();
                let axis = |c: Rational| {
                    let mut coeffs = vec![Rational::zero(); n];
                    coeffs[n - 1] = Rational::one();
                    LinearForm::new(coeffs, c).expect("axis form is nonzero")
                };
                let mut sections = vec![axis(Rational::one()), axis(-Rational::one())];
                for c in &rs {
                    sections.push(axis(c.clone()));
                }
                // the two c = +-1 sections are single spheres; each |c| < 1
                // section has two components
                let total = 2 + 2 * rs.len() as u32;
                notes.push(format!(
                    "{} linear factors; the two c = +-1 sections count one component each",
                    m - 1
                ));
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections,
                    stacked_multiplicity: None,
                    component_total: Some(total),
                    all_meridians_invariant: false,
                    notes,
                })
            }
            FamilySpec::Sp1FirstIntegral { p, a } => {
                let a = parse_rational(a)?;
                let field = build_sp1_first_integral(*p, &a)?;
                let surface = ProductSpheresSurface::new(*p, 1, a)?;
                notes.push("every meridian is invariant; a rational first integral exists".into());
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections: Vec::new(),
                    stacked_multiplicity: None,
                    component_total: None,
                    all_meridians_invariant: true,
                    notes,
                })
            }
            FamilySpec::DegreeTwoSample { p, q, a, alphas, seed } => {
                let a = parse_rational(a)?;
                let als = parse_all(alphas)?;
                let field = build_degree_two_sample(*p, *q, &a, &als, *seed)?;
                let surface = ProductSpheresSurface::new(*p, *q, a)?;
                Ok(FamilyBuild {
                    spec: self.clone(),
                    surface,
                    field,
                    sections: Vec::new(),
                    stacked_multiplicity: None,
                    component_total: None,
                    all_meridians_invariant: false,
                    notes,
                })
            }
        }
    }
}
