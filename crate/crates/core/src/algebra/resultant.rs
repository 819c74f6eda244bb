use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::matrix::bareiss_determinant;
use super::{IntMatrix, IntPolynomial};
use crate::{Error, Result};

/// Sylvester matrix of `f` (degree p) and `g` (degree q): q shifted rows of
/// `f`'s coefficients, highest degree first, followed by p shifted rows of
/// `g`'s. Zero polynomials are treated as degree 0.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> IntMatrix {
    let p = f.degree().unwrap_or(0);
    let q = g.degree().unwrap_or(0);
    let n = p + q;
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..q {
        for j in 0..=p {
            m[(i, i + j)] = f.coeff(p - j);
        }
    }
    for i in 0..p {
        for j in 0..=q {
            m[(q + i, i + j)] = g.coeff(q - j);
        }
    }
    m
}

/// Resultant of `f` and `g`: the determinant of their Sylvester matrix,
/// evaluated by fraction-free elimination.
///
/// `Res(f, c) = c^deg(f)` for a constant `c`, and the resultant of the zero
/// polynomial against anything of positive degree is 0.
pub fn poly_resultant(f: &IntPolynomial, g: &IntPolynomial) -> Result<BigInt> {
    match (f.degree(), g.degree()) {
        (None, None) => Err(Error::invalid("resultant of two zero polynomials")),
        (None, Some(q)) | (Some(q), None) => Ok(if q > 0 { BigInt::zero() } else { BigInt::one() }),
        (Some(p), Some(0)) => Ok(Pow::pow(&g.coeffs()[0], p)),
        (Some(0), Some(q)) => Ok(Pow::pow(&f.coeffs()[0], q)),
        _ => Ok(bareiss_determinant(sylvester_matrix(f, g).to_rows())),
    }
}
