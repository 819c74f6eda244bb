use num_integer::Integer;

use super::JParams;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub reason: String,
}

fn coprime_positive(p: &JParams) -> Result<JParams> {
    let q = p.normalize();
    if q.m == 0 || !q.is_coprime() {
        return Err(Error::unsupported(format!(
            "{p}: isomorphism is decided only for m != 0 and gcd(m, k) = 1"
        )));
    }
    Ok(q)
}

/// For coprime parameters with equal `n`: `J_n(m1,k1) = J_n(m2,k2)` iff
/// `m1 = m2` and either `k1 = k2` or `k1 + k2 = m` mod `n`.
pub fn is_isomorphic(p1: &JParams, p2: &JParams) -> Result<IsoVerdict> {
    if p1.n != p2.n {
        return Err(Error::unsupported(format!(
            "{p1} and {p2} have different n; only equal n is decided"
        )));
    }
    let a = coprime_positive(p1)?;
    let b = coprime_positive(p2)?;
    let n = a.n as i64;
    let verdict = |isomorphic, reason: &str| IsoVerdict {
        isomorphic,
        reason: reason.to_string(),
    };
    Ok(if a.m != b.m {
        verdict(false, "m1 ≠ m2")
    } else if (a.k - b.k).rem_euclid(n) == 0 {
        verdict(true, "k1 ≡ k2 mod n")
    } else if (a.k + b.k - a.m).rem_euclid(n) == 0 {
        verdict(true, "k1 + k2 ≡ m mod n")
    } else {
        verdict(false, "k1 ≢ k2 and k1 + k2 ≢ m mod n")
    })
}

/// Least representative of the isomorphism class among `J_n(m, 1)`,
/// `J_6(m, 3)` (when `3` does not divide `m`) and `J_n(m, nm - 1)`.
pub fn canonical_form(p: &JParams) -> Result<JParams> {
    let q = coprime_positive(p)?;
    let mut candidates = vec![1];
    if q.n == 6 && q.m.gcd(&3) == 1 {
        candidates.push(3);
    }
    candidates.push(q.nm() - 1);
    candidates.sort_unstable();
    candidates.dedup();
    for c in candidates {
        let cand = JParams::new(q.n, q.m, c)?;
        if cand.is_coprime() && is_isomorphic(&q, &cand)?.isomorphic {
            return Ok(cand);
        }
    }
    Err(Error::Internal(format!("{p}: no canonical representative found")))
}

/// `m = +-1` and `k = 0` or `k = m` mod `n`, read on the parameters as given.
pub fn is_aspherical(p: &JParams) -> bool {
    let n = p.n as i64;
    p.m.abs() == 1 && (p.k.rem_euclid(n) == 0 || (p.k - p.m).rem_euclid(n) == 0)
}
