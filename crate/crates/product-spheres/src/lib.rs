//! Exact-arithmetic toolkit for polynomial vector fields on the algebraic
//! model S_{p,q} of the product of spheres S^p x S^q.
//!
//! The hypersurface S_{p,q} in R^n (n = p+q+1) is the zero set of
//!
//! ```text
//! h = (x1^2 + ... + x_{p+1}^2 - a^2)^2 + x_{p+2}^2 + ... + xn^2 - 1,   a > 1.
//! ```
//!
//! The crate provides, all over exact rationals:
//!
//! - sparse multivariate polynomial arithmetic with exact division and a
//!   text parser/printer ([`poly`], [`parse`]),
//! - exact rational linear algebra and fraction-free polynomial
//!   determinants ([`linalg`]),
//! - the derivation action of a vector field and extactic polynomials
//!   ([`derivation`]),
//! - invariance checks, cofactor extraction, meridian/parallel bounds and
//!   degree-1/degree-2 classification on S_{p,q} ([`surface`]),
//! - generators for the vector-field families with known counts of
//!   invariant meridians and parallels ([`families`]),
//! - file formats and the `spq` command line ([`docs`], [`cli`]).
//!
//! Start with the runnable programs under `examples/`; each demonstrates one
//! capability end to end.

pub mod cli;
pub mod derivation;
pub mod docs;
pub mod families;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod surface;

pub use derivation::{BasisW, VectorField};
pub use poly::{Polynomial, Rational};
pub use surface::ProductSpheresSurface;
