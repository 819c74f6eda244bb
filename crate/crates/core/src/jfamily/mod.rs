//! The groups `J_n(m,k)`: parameters, orders, structure, isomorphism,
//! Fibonacci subgroups and the prime families visible in their orders.

mod classify;
mod fibonacci;
mod iso;
mod orders;
mod params;
mod primes;

pub use classify::{classify, j2_free_rank, two_generator_q, StructureReport, StructureTag};
pub use fibonacci::{fibonacci_subgroup, FibonacciSubgroup};
pub use iso::{canonical_form, is_aspherical, is_isomorphic, IsoVerdict};
pub use orders::{
    a_closed_form, a_resultant, derived_abelianization_snf, derived_polynomial, group_order,
};
pub use params::JParams;
pub use primes::{
    is_prime_u64, prime_families, primality, Primality, PrimeFamily, PrimeFamilyEntry,
};
