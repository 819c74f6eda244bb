use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use super::orders::a_resultant;
use super::JParams;
use crate::invariants::Order;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimeFamily {
    /// `2^p - 1`
    Mersenne,
    /// `4^p - 3^p`
    FourMinusThree,
    /// `GM_m = 2^m -+ 2^((m+1)/2) + 1` for odd `m`
    GaussianMersenne,
}

impl PrimeFamily {
    pub fn name(&self) -> &'static str {
        match self {
            PrimeFamily::Mersenne => "mersenne",
            PrimeFamily::FourMinusThree => "four-minus-three",
            PrimeFamily::GaussianMersenne => "gm",
        }
    }

    /// Family value at `index`, or `None` where the family is undefined.
    pub fn value(&self, index: u32) -> Option<BigInt> {
        let two = BigInt::from(2);
        match self {
            PrimeFamily::Mersenne => Some(two.pow(index) - 1),
            PrimeFamily::FourMinusThree => Some(BigInt::from(4).pow(index) - BigInt::from(3).pow(index)),
            PrimeFamily::GaussianMersenne => {
                if index % 2 == 0 {
                    return None;
                }
                let middle = two.pow(index.div_ceil(2));
                let big = two.pow(index) + 1;
                Some(match index % 8 {
                    1 | 7 => big - middle,
                    _ => big + middle,
                })
            }
        }
    }

    /// Smallest `J` whose `a`-value realizes the family value: the square of
    /// it for the two Mersenne-like families, the value itself for `GM_m`.
    pub fn witness(&self, index: u32) -> Option<JParams> {
        let i = index as i64;
        let (n, m, modulus, residue) = match self {
            PrimeFamily::Mersenne => (4, 2 * i, 4, i),
            PrimeFamily::FourMinusThree => (6, 2 * i, 6, i),
            PrimeFamily::GaussianMersenne => (4, i, 4, 2 - i),
        };
        if m <= 0 {
            return None;
        }
        (0..n as i64 * m)
            .filter(|k| (k - residue).rem_euclid(modulus) == 0)
            .map(|k| JParams { n, m, k })
            .find(|p| p.is_coprime() && !p.has_trivial_derived())
    }

    fn squared(&self) -> bool {
        !matches!(self, PrimeFamily::GaussianMersenne)
    }

    fn indices(&self, max_index: u32) -> Vec<u32> {
        match self {
            PrimeFamily::GaussianMersenne => (3..=max_index).step_by(2).collect(),
            _ => (2..=max_index).collect(),
        }
    }
}

impl FromStr for PrimeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mersenne" | "m" => Ok(PrimeFamily::Mersenne),
            "four-minus-three" | "fmt" | "4-3" => Ok(PrimeFamily::FourMinusThree),
            "gm" | "gaussian-mersenne" => Ok(PrimeFamily::GaussianMersenne),
            _ => Err(Error::invalid(format!(
                "unknown family `{s}` (expected mersenne, four-minus-three or gm)"
            ))),
        }
    }
}

impl fmt::Display for PrimeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primality {
    Prime,
    Composite,
    /// Passed the probabilistic test.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(&self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_deterministic(&self) -> bool {
        !matches!(self, Primality::ProbablePrime)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFamilyEntry {
    pub family: PrimeFamily,
    pub index: u32,
    pub value: BigInt,
    pub primality: Primality,
    pub witness_params: Option<JParams>,
    /// `a_resultant` of the witness.
    pub witness_a: Option<BigInt>,
}

impl PrimeFamilyEntry {
    pub fn is_prime(&self) -> bool {
        self.primality.is_prime()
    }
}

pub fn prime_families(family: PrimeFamily, max_index: u32) -> Result<Vec<PrimeFamilyEntry>> {
    let mut out = Vec::new();
    for index in family.indices(max_index) {
        let Some(value) = family.value(index) else {
            continue;
        };
        let witness_params = family.witness(index);
        let witness_a = match witness_params {
            Some(w) => {
                let expected = if family.squared() {
                    &value * &value
                } else {
                    value.clone()
                };
                match a_resultant(&w)? {
                    Order::Finite(a) if a == expected => Some(a),
                    got => {
                        return Err(Error::Internal(format!(
                            "{family} index {index}: witness {w} has a = {got}, expected {expected}"
                        )))
                    }
                }
            }
            None => None,
        };
        out.push(PrimeFamilyEntry {
            family,
            index,
            primality: primality(&value),
            value,
            witness_params,
            witness_a,
        });
    }
    Ok(out)
}

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const PROBABILISTIC_ROUNDS: usize = 40;
const SEED: u64 = 0x5eed;

/// Deterministic Miller-Rabin below `2^64`, 40 seeded random rounds above.
pub fn primality(n: &BigInt) -> Primality {
    let verdict = |b| if b { Primality::Prime } else { Primality::Composite };
    let Some(n) = n.to_biguint() else {
        return Primality::Composite;
    };
    if let Some(small) = n.to_u64() {
        return verdict(is_prime_u64(small));
    }
    for &p in &SMALL_PRIMES {
        if (&n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let mut rng = ChaCha20Rng::seed_from_u64(SEED);
    let two = BigUint::from(2u32);
    let upper = &n - 1u32;
    for _ in 0..PROBABILISTIC_ROUNDS {
        let a = rng.gen_biguint_range(&two, &upper);
        if !miller_rabin_round(&n, &a) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

fn miller_rabin_round(n: &BigUint, a: &BigUint) -> bool {
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n1 {
            return true;
        }
    }
    false
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Miller-Rabin with the first twelve primes as bases, exact for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}
