//! Exact integer, polynomial, quadratic-integer and integer-matrix arithmetic.

mod matrix;
mod poly;
mod quad;
mod resultant;
mod snf;

pub use matrix::{circulant_matrix, IntMatrix};
pub use poly::IntPolynomial;
pub use quad::QuadInt;
pub use resultant::{poly_resultant, sylvester_matrix};
pub use snf::{smith_normal_form, smith_normal_form_with_transforms, SnfResult};
