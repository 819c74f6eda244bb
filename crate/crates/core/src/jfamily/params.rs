use std::fmt;

use num_integer::Integer;

use crate::{Error, Result};

/// Parameters `(n, m, k)` of `J_n(m,k)`, with `n` in `{4, 6}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JParams {
    pub n: u32,
    pub m: i64,
    pub k: i64,
}

impl JParams {
    pub fn new(n: u32, m: i64, k: i64) -> Result<Self> {
        if n != 4 && n != 6 {
            return Err(Error::invalid(format!("n must be 4 or 6, got {n}")));
        }
        // Keeps n*m and k +- n*m well inside i64.
        const LIMIT: i64 = 1 << 40;
        if m.abs() > LIMIT || k.abs() > LIMIT {
            return Err(Error::invalid(format!(
                "|m| and |k| must not exceed {LIMIT}"
            )));
        }
        Ok(JParams { n, m, k })
    }

    /// `m >= 0`, and `0 <= k < nm` when `m > 0`. For `m = 0` the group is
    /// infinite cyclic for every `k`; the sign of `k` is dropped so that
    /// `(m, k)` and `(-m, -k)` still normalize alike.
    pub fn normalize(&self) -> JParams {
        let (m, k) = if self.m < 0 {
            (-self.m, -self.k)
        } else {
            (self.m, self.k)
        };
        let k = if m == 0 {
            k.abs()
        } else {
            k.rem_euclid(self.n as i64 * m)
        };
        JParams { n: self.n, m, k }
    }

    /// Normalized parameters with `k` replaced by the representative of
    /// `k mod nm` that minimizes the relator length `|m-k| + |k|`. Since
    /// `y^(nm) = 1` in `J`, this presents the same group.
    pub fn shortest_relator(&self) -> JParams {
        let q = self.normalize();
        if q.m == 0 {
            return q;
        }
        let nm = q.nm();
        let cost = |k: i64| (q.m - k).abs() + k.abs();
        let k = [q.k - nm, q.k].into_iter().min_by_key(|&k| (cost(k), k.abs())).expect("two candidates");
        JParams { k, ..q }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// `m = 0`: `J` is infinite cyclic.
    pub fn is_degenerate(&self) -> bool {
        self.m == 0
    }

    /// `n |m|`, the number of generators of the derived presentations.
    pub fn rank(&self) -> usize {
        self.n as usize * self.m.unsigned_abs() as usize
    }

    pub fn nm(&self) -> i64 {
        self.n as i64 * self.m.abs()
    }

    pub fn gcd(&self) -> i64 {
        self.m.gcd(&self.k)
    }

    pub fn is_coprime(&self) -> bool {
        self.gcd() == 1
    }

    /// One of `k`, `m-k`, `m-2k` is `0 mod nm`: the derived subgroup is
    /// trivial and `J` is cyclic of order `nm`.
    pub fn has_trivial_derived(&self) -> bool {
        let q = self.normalize();
        if q.m == 0 {
            return false;
        }
        let nm = q.nm();
        [q.k, q.m - q.k, q.m - 2 * q.k]
            .iter()
            .any(|x| x.rem_euclid(nm) == 0)
    }
}

impl fmt::Display for JParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J_{}({},{})", self.n, self.m, self.k)
    }
}
