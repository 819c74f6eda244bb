use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Element `a + b*sqrt(d)` of the real quadratic ring `Z[sqrt(d)]`, with
/// `d` restricted to 2 or 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    d: u32,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: u32) -> Result<Self> {
        if d != 2 && d != 3 {
            return Err(Error::invalid(format!("radicand must be 2 or 3, got {d}")));
        }
        Ok(QuadInt {
            a: a.into(),
            b: b.into(),
            d,
        })
    }

    pub fn integer(a: impl Into<BigInt>, d: u32) -> Result<Self> {
        Self::new(a, 0, d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: u32) -> Result<Self> {
        Self::new(0, 1, d)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn radicand(&self) -> u32 {
        self.d
    }

    pub fn is_integral(&self) -> bool {
        self.b.is_zero()
    }

    /// The integer value, if the irrational part vanishes.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integral().then(|| self.a.clone())
    }

    /// `(a + b sqrt d)(a - b sqrt d) = a^2 - d b^2`
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(self.d) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        QuadInt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * f64::from(self.d).sqrt()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::invalid(format!(
                "mixed radicands {} and {}",
                self.d, other.d
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(QuadInt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(QuadInt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = BigInt::from(self.d);
        QuadInt {
            a: &self.a * &other.a + d * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QuadInt {
            a: &self.a * c,
            b: &self.b * c,
            d: self.d,
        }
    }

    /// Square-and-multiply power.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuadInt {
            a: BigInt::one(),
            b: BigInt::zero(),
            d: self.d,
        };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*sqrt({})", self.a, sign, self.b.abs(), self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, d: u32) -> QuadInt {
        QuadInt::new(a, b, d).unwrap()
    }

    #[test]
    fn sqrt2_squared_is_two() {
        let s = q(0, 1, 2);
        assert_eq!(s.checked_mul(&s).unwrap(), q(2, 0, 2));
    }

    #[test]
    fn norm_form() {
        let x = q(1, 1, 3);
        let prod = x.checked_mul(&x.conjugate()).unwrap();
        assert_eq!(prod, q(-2, 0, 3));
        assert_eq!(x.norm(), BigInt::from(-2));
    }

    #[test]
    fn pow_of_sqrt2() {
        assert_eq!(q(0, 1, 2).pow(10), q(32, 0, 2));
        assert_eq!(q(0, 1, 2).pow(0), q(1, 0, 2));
        assert_eq!(q(0, 1, 2).pow(3), q(0, 2, 2));
    }

    #[test]
    fn mixed_radicands_rejected() {
        assert!(q(1, 1, 2).checked_add(&q(1, 1, 3)).is_err());
        assert!(q(1, 1, 2).checked_mul(&q(1, 1, 3)).is_err());
        assert!(QuadInt::new(1, 1, 5).is_err());
    }
}
