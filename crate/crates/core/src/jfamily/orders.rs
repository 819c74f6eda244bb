use num_bigint::BigInt;

use super::JParams;
use crate::algebra::{poly_resultant, IntPolynomial, QuadInt};
use crate::invariants::{abelianization, AbelianGroup, Order};
use crate::presentation::{build_derived_presentation, derived_relator};
use crate::{Error, Result};

/// `2cos(j pi / 4)` for `j mod 8`, as `(a, b)` meaning `a + b sqrt 2`.
const TWO_COS_EIGHTHS: [(i64, i64); 8] = [
    (2, 0),
    (0, 1),
    (0, 0),
    (0, -1),
    (-2, 0),
    (0, -1),
    (0, 0),
    (0, 1),
];

/// `2cos(j pi / 6)` for `j mod 12`, as `a + b sqrt 3`.
const TWO_COS_TWELFTHS: [(i64, i64); 12] = [
    (2, 0),
    (0, 1),
    (1, 0),
    (0, 0),
    (-1, 0),
    (0, -1),
    (-2, 0),
    (0, -1),
    (-1, 0),
    (0, 0),
    (1, 0),
    (0, 1),
];

fn positive(p: &JParams) -> Result<JParams> {
    let q = p.normalize();
    if q.m == 0 {
        return Err(Error::DegenerateInput(format!(
            "{p}: m = 0, J is infinite cyclic"
        )));
    }
    Ok(q)
}

/// Closed form for `a_n(m,k)` with `gcd(m,k) = 1`, evaluated in `Z[sqrt d]`:
///
/// `a_4 = 2^m + 1 - (sqrt 2)^m 2cos((2k-m) pi/4)`,
/// `a_6 = 3^m + 4^m - (2 sqrt 3)^m 2cos((2k-m) pi/6)`.
pub fn a_closed_form(p: &JParams) -> Result<BigInt> {
    let q = positive(p)?;
    if !q.is_coprime() {
        return Err(Error::invalid(format!(
            "{p}: the closed form needs gcd(m, k) = 1"
        )));
    }
    let m = u32::try_from(q.m).map_err(|_| Error::invalid(format!("{p}: m too large")))?;
    let j = 2 * q.k - q.m;
    let (d, base, (ca, cb)) = match q.n {
        4 => (
            2,
            QuadInt::integer(BigInt::from(2).pow(m) + 1, 2)?,
            TWO_COS_EIGHTHS[j.rem_euclid(8) as usize],
        ),
        _ => (
            3,
            QuadInt::integer(BigInt::from(3).pow(m) + BigInt::from(4).pow(m), 3)?,
            TWO_COS_TWELFTHS[j.rem_euclid(12) as usize],
        ),
    };
    let mut radical = QuadInt::sqrt_d(d)?.pow(m);
    if q.n == 6 {
        radical = radical.scale(&BigInt::from(2).pow(m));
    }
    let cosine = QuadInt::new(ca, cb, d)?;
    let value = base.checked_sub(&radical.checked_mul(&cosine)?)?;
    value.to_integer().ok_or_else(|| {
        Error::Internal(format!(
            "{p}: closed form left an irrational part ({value})"
        ))
    })
}

/// `f_{w_n(m,k)}` over `nm` generators, for normalized `m >= 1`.
pub fn derived_polynomial(p: &JParams) -> Result<IntPolynomial> {
    let q = positive(p)?;
    derived_relator(q.n, q.m, q.k).representer_polynomial(q.rank())
}

/// `|Res(f_w, 1 + x^(nm/2))|`, the order of the abelianized derived subgroup,
/// for any `m >= 1`.
///
/// `f_w` is first folded modulo `x^(nm/2) + 1`; if the fold vanishes the
/// abelianization is `Z^(nm/2)`.
pub fn a_resultant(p: &JParams) -> Result<Order> {
    let q = positive(p)?;
    let half = q.rank() / 2;
    let folded = derived_polynomial(&q)?.reduce_mod_x_pow_plus_one(half);
    if folded.is_zero() {
        return Ok(Order::Infinite {
            free_rank: Some(half),
        });
    }
    let res = poly_resultant(&folded, &IntPolynomial::x_pow_plus_one(half))?;
    Ok(Order::from_resultant(res, Some(half)))
}

/// Abelian invariants of the derived subgroup by Smith normal form of the
/// `(w_n, v_n)` bicyclic presentation.
pub fn derived_abelianization_snf(p: &JParams) -> Result<AbelianGroup> {
    Ok(abelianization(&build_derived_presentation(p)?))
}

/// `|J_n(m,k)|`: infinite for `m = 0`; `nm a_n(m,k)` when `gcd(m,k) = 1`;
/// for `gcd(m,k) > 1`, `nm` if the derived subgroup is trivial and infinite
/// (virtually free) otherwise.
pub fn group_order(p: &JParams) -> Order {
    let q = p.normalize();
    if q.m == 0 {
        return Order::Infinite { free_rank: Some(1) };
    }
    let nm = BigInt::from(q.nm());
    if q.has_trivial_derived() {
        return Order::Finite(nm);
    }
    if !q.is_coprime() {
        return Order::Infinite { free_rank: None };
    }
    match a_resultant(&q).expect("m >= 1") {
        Order::Finite(a) => Order::Finite(nm * a),
        // Never reached for coprime parameters: J is finite.
        inf => inf,
    }
}

pub(crate) fn finite_a(p: &JParams) -> Result<BigInt> {
    match a_resultant(p)? {
        Order::Finite(a) => Ok(a),
        Order::Infinite { .. } => Err(Error::Internal(format!(
            "{p}: abelianized derived subgroup is infinite"
        ))),
    }
}
