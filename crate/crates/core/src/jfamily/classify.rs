use std::fmt;

use num_bigint::BigInt;

use super::orders::{finite_a, group_order};
use super::JParams;
use crate::invariants::{AbelianGroup, Order};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureTag {
    /// `J` is cyclic of order `nm`.
    TrivialCyclic,
    /// Finite, with cyclic derived subgroup.
    Metacyclic,
    /// Finite, derived subgroup `Z_q + Z_q`.
    MetabelianNonMetacyclic,
    /// `gcd(m,k) > 1` and `J'` nontrivial: `J''` is free of finite rank > 1.
    VirtuallyFree,
    /// `m = 0`.
    InfiniteCyclic,
}

impl StructureTag {
    pub fn name(&self) -> &'static str {
        match self {
            StructureTag::TrivialCyclic => "trivial-cyclic",
            StructureTag::Metacyclic => "metacyclic",
            StructureTag::MetabelianNonMetacyclic => "metabelian-non-metacyclic",
            StructureTag::VirtuallyFree => "virtually-free",
            StructureTag::InfiniteCyclic => "infinite-cyclic",
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            StructureTag::TrivialCyclic
                | StructureTag::Metacyclic
                | StructureTag::MetabelianNonMetacyclic
        )
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// Normalized parameters.
    pub params: JParams,
    pub order: Order,
    /// `|J'/J''|`, for `m >= 1`.
    pub a_value: Option<BigInt>,
    pub structure: StructureTag,
    /// Invariants of `J'` when it is abelian.
    pub derived_invariants: Option<AbelianGroup>,
    /// Rank of the free group `J''` in the virtually free case.
    pub j2_free_rank: Option<BigInt>,
    /// `gcd(m, k)`.
    pub d: i64,
    /// `J_n(m/d, k/d)`, whose derived subgroup `A` is the free factor of
    /// `J'` in the virtually free case.
    pub free_factor: Option<JParams>,
    /// `|A|`.
    pub free_factor_order: Option<BigInt>,
}

/// `1 - d|A|^(d-1) + d|A|^d - |A|^d`
pub fn j2_free_rank(d: u32, a: &BigInt) -> BigInt {
    let dd = BigInt::from(d);
    let ad = a.pow(d);
    1 - &dd * a.pow(d - 1) + &dd * &ad - ad
}

/// `q` with `J' = Z_q + Z_q` when `gcd(m,k) = 1` and `m - 2k = 0 mod n`.
///
/// n = 4: `2^(m/2) - 1` if `m - 2k = 0 mod 8`, else `2^(m/2) + 1`.
/// n = 6: `4^(m/2) - 3^(m/2)` if `m - 2k = 0 mod 12`, else `4^(m/2) + 3^(m/2)`.
pub fn two_generator_q(p: &JParams) -> Option<BigInt> {
    let q = p.normalize();
    let n = q.n as i64;
    if q.m == 0
        || !q.is_coprime()
        || q.has_trivial_derived()
        || (q.m - 2 * q.k).rem_euclid(n) != 0
    {
        return None;
    }
    let half = u32::try_from(q.m / 2).ok()?;
    let minus = (q.m - 2 * q.k).rem_euclid(2 * n) == 0;
    let (x, y) = match q.n {
        4 => (BigInt::from(2).pow(half), BigInt::from(1)),
        _ => (BigInt::from(4).pow(half), BigInt::from(3).pow(half)),
    };
    Some(if minus { x - y } else { x + y })
}

pub fn classify(p: &JParams) -> Result<StructureReport> {
    let q = p.normalize();
    let d = q.gcd();
    let order = group_order(&q);
    let mut report = StructureReport {
        params: q,
        order,
        a_value: None,
        structure: StructureTag::InfiniteCyclic,
        derived_invariants: None,
        j2_free_rank: None,
        d,
        free_factor: None,
        free_factor_order: None,
    };
    if q.m == 0 {
        report.derived_invariants = Some(AbelianGroup::trivial());
        return Ok(report);
    }

    let a = finite_a(&q)?;
    report.a_value = Some(a.clone());

    if q.has_trivial_derived() {
        report.structure = StructureTag::TrivialCyclic;
        report.derived_invariants = Some(AbelianGroup::trivial());
    } else if d == 1 {
        if let Some(qq) = two_generator_q(&q) {
            if &qq * &qq != a {
                return Err(Error::Internal(format!(
                    "{p}: expected a = {qq}^2, resultant gives {a}"
                )));
            }
            report.structure = StructureTag::MetabelianNonMetacyclic;
            report.derived_invariants = Some(AbelianGroup::from_cyclic_orders(&[qq.clone(), qq]));
        } else {
            report.structure = StructureTag::Metacyclic;
            report.derived_invariants = Some(AbelianGroup::from_cyclic_orders(&[a]));
        }
    } else {
        let base = JParams::new(q.n, q.m / d, q.k / d)?;
        let a_base = finite_a(&base)?;
        let du = u32::try_from(d).map_err(|_| Error::invalid(format!("{p}: gcd too large")))?;
        report.structure = StructureTag::VirtuallyFree;
        report.j2_free_rank = Some(j2_free_rank(du, &a_base));
        report.free_factor = Some(base);
        report.free_factor_order = Some(a_base);
    }

    if report.structure.is_finite() {
        let expected = BigInt::from(q.nm()) * report.a_value.as_ref().expect("m >= 1");
        if report.order != Order::Finite(expected) {
            return Err(Error::Internal(format!(
                "{p}: order {} disagrees with nm * a",
                report.order
            )));
        }
    }
    Ok(report)
}
