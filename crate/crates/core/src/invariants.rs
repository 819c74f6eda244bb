//! Abelianizations, via Smith normal form of the exponent-sum matrix or via
//! resultants of representer polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{poly_resultant, smith_normal_form, IntPolynomial};
use crate::presentation::{BicyclicPresentation, CyclicPresentation, Presentation, Word};
use crate::{Error, Result};

/// Order of a group: a finite value, or infinite with the free rank of the
/// abelianization when it is known.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(BigInt),
    Infinite { free_rank: Option<usize> },
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Order::Finite(v) => Some(v),
            Order::Infinite { .. } => None,
        }
    }

    /// Reads `|value|` as a group order, with zero meaning infinite.
    pub fn from_resultant(value: BigInt, free_rank: Option<usize>) -> Self {
        if value.is_zero() {
            Order::Infinite { free_rank }
        } else {
            Order::Finite(value.abs())
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(v) => write!(f, "{v}"),
            Order::Infinite { .. } => f.write_str("infinite"),
        }
    }
}

/// `Z^free_rank + Z_{d_1} + ... + Z_{d_r}` with `1 < d_1 | d_2 | ... | d_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    /// Builds the group from arbitrary cyclic orders (zero means `Z`, one is
    /// dropped) by normalizing to invariant factors.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let mut free_rank = 0;
        // Prime-power decomposition is avoided: repeatedly replace pairs
        // (a, b) by (gcd, lcm), which converges to the invariant factors.
        let mut fs: Vec<BigInt> = Vec::new();
        for o in orders {
            let o = o.abs();
            if o.is_zero() {
                free_rank += 1;
            } else if !o.is_one() {
                fs.push(o);
            }
        }
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                let g = fs[i].gcd(&fs[j]);
                let l = &fs[i] / &g * &fs[j];
                fs[i] = g;
                fs[j] = l;
            }
        }
        fs.retain(|d| !d.is_one());
        AbelianGroup {
            invariant_factors: fs,
            free_rank,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn order(&self) -> Order {
        if self.free_rank == 0 {
            Order::Finite(self.torsion_order())
        } else {
            Order::Infinite {
                free_rank: Some(self.free_rank),
            }
        }
    }

    /// Direct sum of `copies` copies of `self`.
    pub fn power(&self, copies: usize) -> Self {
        let mut fs: Vec<BigInt> = Vec::with_capacity(self.invariant_factors.len() * copies);
        for d in &self.invariant_factors {
            fs.extend(std::iter::repeat_n(d.clone(), copies));
        }
        AbelianGroup {
            invariant_factors: fs,
            free_rank: self.free_rank * copies,
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z_{d}")));
        f.write_str(&parts.join(" + "))
    }
}

pub fn abelianization<P: Presentation + ?Sized>(p: &P) -> AbelianGroup {
    let m = p.relation_matrix();
    let snf = smith_normal_form(&m);
    AbelianGroup {
        invariant_factors: snf.torsion(),
        free_rank: p.generator_count() - snf.rank(),
    }
}

/// `|Res(f_w, x^r - 1)|`; a zero resultant means infinite.
pub fn cyclic_ab_order(cp: &CyclicPresentation) -> Order {
    let g = IntPolynomial::x_pow_minus_one(cp.rank());
    let res = poly_resultant(&cp.representer_polynomial(), &g).expect("x^r - 1 is nonzero");
    Order::from_resultant(res, None)
}

fn is_u_form(v: &Word, rank: usize) -> bool {
    let half = rank / 2;
    match v.letters() {
        [a, b] => {
            a.exponent == 1
                && b.exponent == 1
                && (a.generator + half) % rank == b.generator
                && (b.generator + half) % rank == a.generator
        }
        _ => false,
    }
}

/// `|Res(f_w, 1 + x^(r/2))|` for `G_r(w, x_j x_{j+r/2})`.
///
/// When `f_w` vanishes at every root of `1 + x^(r/2)` the abelianization is
/// free abelian of rank `r/2`.
pub fn bicyclic_u_ab_order(bp: &BicyclicPresentation) -> Result<Order> {
    let r = bp.rank();
    if r % 2 != 0 || !is_u_form(bp.v(), r) {
        return Err(Error::invalid(format!(
            "second word `{}` is not of the form x_j x_(j+{}) over {r} generators",
            bp.v(),
            r / 2
        )));
    }
    let half = r / 2;
    let f = bp
        .w()
        .representer_polynomial(r)
        .expect("indices checked at construction");
    if f.reduce_mod_x_pow_plus_one(half).is_zero() {
        return Ok(Order::Infinite {
            free_rank: Some(half),
        });
    }
    let res = poly_resultant(&f, &IntPolynomial::x_pow_plus_one(half))?;
    Ok(Order::from_resultant(res, Some(half)))
}

/// `|r^n - s^n|`, the order of the cyclic group `G_n(x_0^r x_1^-s)`.
pub fn lemma33_order(r: i64, s: i64, n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if r.gcd(&s) != 1 {
        return Err(Error::invalid(format!("gcd({r}, {s}) must be 1")));
    }
    Ok((num_traits::pow(BigInt::from(r), n as usize) - num_traits::pow(BigInt::from(s), n as usize)).abs())
}

/// `n |(m-k)^n - k^n|`, the order of `< t, y | t^n, y^(m-k) t y^k t^-1 >`.
pub fn relative_presentation_order(n: u32, m: i64, k: i64) -> Result<BigInt> {
    if m.gcd(&k) != 1 {
        return Err(Error::invalid(format!("gcd({m}, {k}) must be 1")));
    }
    Ok(BigInt::from(n) * lemma33_order(m - k, k, n)?)
}
