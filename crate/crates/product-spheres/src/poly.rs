//! Sparse multivariate polynomial arithmetic over exact rationals.
//!
//! Polynomials live in Q[x1,...,xn] with a fixed number of variables and a
//! fixed global monomial order (graded lexicographic, x1 > x2 > ... > xn).
//! All operations are exact; no coefficient is ever stored as zero.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar. Always reduced, denominator positive, zero is 0/1;
/// `num_rational` maintains those invariants.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}

/// A power product of the variables, stored as an exponent vector of fixed
/// length n (the ambient variable count).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The constant monomial 1 in n variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    /// x_i (1-based index) in n variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index x{i} out of range 1..={nvars}");
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Monomial { exponents: e }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact monomial quotient, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut e = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial { exponents: e })
    }
}

/// Graded lexicographic order with x1 > x2 > ... > xn, fixed project-wide.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over `Rational`.
///
/// Two polynomials are equal iff they have the same variable count and the
/// same term map. The zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable x_i (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Polynomial::from_term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars, "monomial length does not match nvars");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under the graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch in sub");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch in mul");
        let mut out = Polynomial::zero(self.nvars);
        // Iterate the smaller operand on the outside.
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// f^k by repeated squaring; f^0 = 1.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Formal partial derivative with respect to x_i (1-based).
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i <= self.nvars, "variable index x{i} out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i - 1];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i - 1] -= 1;
            out.add_term(Monomial::new(exps), c * rat(e as i64));
        }
        out
    }

    /// Max total degree over stored terms; `None` for the zero polynomial
    /// (degree is left undefined rather than encoded as a number).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Exact substitution at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point length does not match nvars");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact single-divisor division: `Some(q)` with `self = q * g` when `g`
    /// divides `self` exactly, `None` otherwise.
    ///
    /// Repeatedly cancels the leading term under graded-lex; because there is
    /// a single divisor, a leading term not divisible by LT(g) already
    /// certifies a nonzero remainder.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, g.nvars, "variable count mismatch in exact_div");
        assert!(!g.is_zero(), "division by the zero polynomial");
        let (gm, gc) = g.leading_term().expect("nonzero divisor");
        let gm = gm.clone();
        let gc = gc.clone();
        let mut r = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((rm, rc)) = r.leading_term() {
            let tm = rm.div(&gm)?;
            let tc = rc / &gc;
            let t = Polynomial::from_term(tm, tc);
            r = r.sub(&t.mul(g));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Largest m with g^m dividing self, by repeated exact division.
    ///
    /// Errors when self is zero (no defined multiplicity) or g is constant.
    pub fn factor_multiplicity(&self, g: &Polynomial) -> Result<u32, MultiplicityError> {
        if self.is_zero() {
            return Err(MultiplicityError::UndefinedForZero);
        }
        if g.is_constant() {
            return Err(MultiplicityError::ConstantFactor);
        }
        let mut m = 0;
        let mut f = self.clone();
        while let Some(q) = f.exact_div(g) {
            m += 1;
            f = q;
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultiplicityError {
    /// Mirrors the "no defined algebraic multiplicity" state when the target
    /// polynomial is identically zero.
    #[error("multiplicity undefined: target polynomial is zero")]
    UndefinedForZero,
    #[error("multiplicity requires a nonconstant factor")]
    ConstantFactor,
}

impl fmt::Display for Polynomial {
    /// Canonical text form, re-parseable by the expression grammar. Terms are
    /// printed in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", i + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", i + 1, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
