//! The vector field as a derivation on the polynomial ring.
//!
//! A `VectorField` is an ordered list of component polynomials R1..Rn; it
//! acts on polynomials as X(f) = sum_i R_i * df/dx_i. Iterating the action
//! builds the extactic matrix for a basis W, whose determinant is the
//! extactic polynomial: every invariant zero set of an element of W divides
//! it.

use crate::linalg::{PolyMatrix, RationalMatrix};
use crate::poly::{Polynomial, Rational};

/// Polynomial vector field X = (R1, ..., Rn).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    components: Vec<Polynomial>,
    nvars: usize,
}

impl VectorField {
    /// Component count must equal the shared variable count, and at least one
    /// component must be nonzero.
    pub fn new(components: Vec<Polynomial>) -> Result<Self, VectorFieldError> {
        let nvars = components.len();
        if nvars == 0 {
            return Err(VectorFieldError::Empty);
        }
        if components.iter().any(|c| c.nvars() != nvars) {
            return Err(VectorFieldError::VariableCountMismatch);
        }
        if components.iter().all(|c| c.is_zero()) {
            return Err(VectorFieldError::AllZero);
        }
        Ok(VectorField { components, nvars })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i - 1]
    }

    /// X(f) = sum_i R_i * df/dx_i.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch in apply");
        let mut out = Polynomial::zero(self.nvars);
        for (i, r) in self.components.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let d = f.partial_derivative(i + 1);
            if !d.is_zero() {
                out = out.add(&r.mul(&d));
            }
        }
        out
    }

    /// X^k(f); X^0(f) = f.
    pub fn apply_power(&self, f: &Polynomial, k: u32) -> Polynomial {
        let mut g = f.clone();
        for _ in 0..k {
            g = self.apply(&g);
        }
        g
    }

    /// Componentwise total degrees (None marks a zero component).
    pub fn degree_vector(&self) -> Vec<Option<u32>> {
        self.components.iter().map(|r| r.total_degree()).collect()
    }

    /// deg X = max over component degrees. At least one component is
    /// nonzero, so the degree is always defined.
    pub fn field_degree(&self) -> u32 {
        self.components
            .iter()
            .filter_map(|r| r.total_degree())
            .max()
            .expect("vector field has a nonzero component")
    }

    /// The extactic polynomial E_W(X): determinant of the k x k matrix whose
    /// row j+1 is (X^j(v1), ..., X^j(vk)). Requires |W| >= 2.
    pub fn extactic(&self, basis: &BasisW) -> Result<Polynomial, ExtacticError> {
        let k = basis.elements().len();
        if k < 2 {
            return Err(ExtacticError::BasisTooSmall);
        }
        if basis.nvars() != self.nvars {
            return Err(ExtacticError::VariableCountMismatch);
        }
        // rows computed top-down, reusing X^j(v) to get X^(j+1)(v)
        let mut row: Vec<Polynomial> = basis.elements().to_vec();
        let mut entries: Vec<Polynomial> = Vec::with_capacity(k * k);
        entries.extend(row.iter().cloned());
        for _ in 1..k {
            row = row.iter().map(|v| self.apply(v)).collect();
            entries.extend(row.iter().cloned());
        }
        Ok(PolyMatrix::new(k, entries).determinant())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VectorFieldError {
    #[error("a vector field needs at least one component")]
    Empty,
    #[error("every component must have nvars equal to the component count")]
    VariableCountMismatch,
    #[error("the zero vector field is not allowed")]
    AllZero,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtacticError {
    #[error("extactic polynomial requires a basis of dimension >= 2")]
    BasisTooSmall,
    #[error("basis variable count does not match the vector field")]
    VariableCountMismatch,
}

/// An ordered basis of a finite-dimensional subspace of Q[x1..xn].
/// Linear independence over Q is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisW {
    elements: Vec<Polynomial>,
    nvars: usize,
}

impl BasisW {
    pub fn new(elements: Vec<Polynomial>) -> Result<Self, BasisError> {
        let Some(first) = elements.first() else {
            return Err(BasisError::Empty);
        };
        let nvars = first.nvars();
        if elements.iter().any(|e| e.nvars() != nvars) {
            return Err(BasisError::VariableCountMismatch);
        }
        // coefficient matrix over the union of supports; rank must equal k
        let mut monomials: Vec<_> = Vec::new();
        for e in &elements {
            for (m, _) in e.terms() {
                if !monomials.contains(m) {
                    monomials.push(m.clone());
                }
            }
        }
        let k = elements.len();
        let mut grid: Vec<Rational> = Vec::with_capacity(k * monomials.len().max(1));
        for e in &elements {
            for m in &monomials {
                grid.push(e.coeff(m));
            }
        }
        let mat = RationalMatrix::new(k, monomials.len(), grid);
        if mat.rank() != k {
            return Err(BasisError::LinearlyDependent);
        }
        Ok(BasisW { elements, nvars })
    }

    /// The meridian basis {x1, ..., x_{p+1}}.
    pub fn meridian(nvars: usize, p: usize) -> Self {
        let elements = (1..=p + 1).map(|i| Polynomial::var(nvars, i)).collect();
        BasisW::new(elements).expect("coordinate functions are independent")
    }

    /// The parallel basis {1, x_{p+2}, ..., xn}.
    pub fn parallel(nvars: usize, p: usize) -> Self {
        let mut elements = vec![Polynomial::one(nvars)];
        elements.extend((p + 2..=nvars).map(|i| Polynomial::var(nvars, i)));
        BasisW::new(elements).expect("1 and coordinate functions are independent")
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("basis must be nonempty")]
    Empty,
    #[error("basis elements must share one variable count")]
    VariableCountMismatch,
    #[error("basis elements are linearly dependent over Q")]
    LinearlyDependent,
}
