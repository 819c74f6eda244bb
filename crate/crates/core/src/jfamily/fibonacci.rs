use num_bigint::BigInt;

use super::iso::canonical_form;
use super::orders::group_order;
use super::JParams;
use crate::invariants::Order;
use crate::presentation::FibonacciParams;
use crate::{Error, Result};

/// The unique index-`n` normal subgroup `N` of `J_n(m,k)` when
/// `m = +-1 mod n`, identified as a generalized Fibonacci group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciSubgroup {
    pub params: FibonacciParams,
    /// `|N| = |J| / n`.
    pub order: BigInt,
    /// Canonical representative used to pick the case.
    pub canonical: JParams,
}

impl FibonacciSubgroup {
    /// `(r, n, l, s)` of the split extension `E(r,n,l,s) = N x| Z_n`, which
    /// is isomorphic to `J`.
    pub fn e_params(&self) -> (i64, i64, i64, i64) {
        let f = self.params;
        (f.r as i64, f.n as i64, f.l as i64, f.s as i64)
    }
}

pub fn fibonacci_subgroup(p: &JParams) -> Result<FibonacciSubgroup> {
    let q = p.normalize();
    let n = q.n as i64;
    if q.m == 0 || !q.is_coprime() {
        return Err(Error::unsupported(format!(
            "{p}: needs m >= 1 and gcd(m, k) = 1"
        )));
    }
    let eps = match q.m.rem_euclid(n) {
        1 => 1,
        r if r == n - 1 => -1,
        _ => {
            return Err(Error::unsupported(format!(
                "{p}: needs m ≡ ±1 mod {n}"
            )))
        }
    };
    let c = canonical_form(&q)?;
    let m = q.m;
    let (r, l, s) = match (q.n, c.k, eps) {
        (_, k, _) if k == q.nm() - 1 => (m + 1, n / 2, 1),
        (4, 1, 1) => (m + 3, 3, 3),
        (4, 1, -1) => (m + 2, 1, 2),
        (6, 1, 1) => (m + 5, 4, 5),
        (6, 1, -1) => (m + 2, 2, 2),
        (6, 3, _) => (m + 3, 1, 3),
        _ => return Err(Error::Internal(format!("{p}: unexpected canonical form {c}"))),
    };
    let order = match group_order(&q) {
        Order::Finite(v) => v / n,
        Order::Infinite { .. } => {
            return Err(Error::Internal(format!("{p}: coprime J should be finite")))
        }
    };
    Ok(FibonacciSubgroup {
        params: FibonacciParams::new(r, n, l, s)?,
        order,
        canonical: c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib(n: u32, m: i64, k: i64) -> (String, BigInt) {
        let f = fibonacci_subgroup(&JParams::new(n, m, k).unwrap()).unwrap();
        (f.params.to_string(), f.order)
    }

    #[test]
    fn known_subgroups() {
        assert_eq!(fib(4, 3, -1), ("F(4,4,2)".into(), BigInt::from(39)));
        assert_eq!(fib(6, 5, -1), ("F(6,6,3)".into(), BigInt::from(10655)));
        assert_eq!(fib(4, 3, 1), ("H(5,4,2)".into(), BigInt::from(15)));
    }

    #[test]
    fn cases_by_canonical_form() {
        assert_eq!(fib(4, 5, 1).0, "F(8,4,3,3)");
        assert_eq!(fib(6, 7, 1).0, "F(12,6,4,5)");
        assert_eq!(fib(6, 5, 1).0, "F(7,6,2,2)");
        assert_eq!(fib(6, 5, 3).0, "H(8,6,3)");
    }

    #[test]
    fn hypotheses() {
        for (n, m, k) in [(4, 4, 1), (4, 3, 3), (6, 4, 1)] {
            let r = fibonacci_subgroup(&JParams::new(n, m, k).unwrap());
            assert!(matches!(r, Err(Error::Unsupported(_))), "{n} {m} {k}");
        }
    }
}
