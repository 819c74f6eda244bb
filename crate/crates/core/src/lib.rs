//! Exact computations for the two-generator groups
//! `J_n(m,k) = < t, y | t^n, y^(m-k) t^3 y^k t^2 >` (n = 4, 6) and for the
//! cyclically and bicyclically presented groups that describe their derived
//! subgroups.
//!
//! Every quantity the crate reports can be reached along more than one route:
//! closed-form evaluation in a real quadratic ring, polynomial resultants,
//! Smith normal form of relation matrices, and Todd-Coxeter coset
//! enumeration. The [`verify`] module runs those routes against each other.

pub mod algebra;
pub mod cosets;
mod error;
pub mod invariants;
pub mod jfamily;
pub mod presentation;
pub mod verify;

pub use error::{Error, Result};

pub use algebra::{IntMatrix, IntPolynomial, QuadInt, SnfResult};
pub use cosets::{enumerate, CosetOutcome, CosetTable, DEFAULT_MAX_COSETS};
pub use invariants::{AbelianGroup, Order};
pub use jfamily::{JParams, StructureReport, StructureTag};
pub use presentation::{BicyclicPresentation, CyclicPresentation, GroupPresentation, Word};
