//! Exact computations for two families of metacyclic Galois coverings of the
//! projective line: the groups `G(q,n) = <a, b | a^q = b^n = 1, b a b^-1 = a^k>`
//! and `G_m = <a, b | a^(2^m) = b^2 = 1, b a b = a^d>` with `d = 2^(m-1) - 1`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: group data is
//! enumerated, character values live in cyclotomic fields with rational
//! coefficients, and real signs are certified with interval arithmetic.
//!
//! Module map:
//!
//! * [`groups`]: element arithmetic, subgroups, conjugacy classes, double
//!   cosets and the quotient-genus formula.
//! * [`characters`]: monomial representations, irreducible inventories,
//!   induced characters, the H^1 character of a covering and isotypic
//!   dimensions of the Jacobian.
//! * [`cyclotomic`]: arithmetic in `Q(zeta_n)`, Galois action and certified
//!   signs of real elements.
//! * [`cmtypes`]: orbit tables, Chevalley-Weil multiplicities, CM-types and
//!   primitivity tests, signature classification.
//! * [`curves`]: explicit curve models, symbolic automorphism checks and
//!   Igusa-Clebsch invariants.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod characters;
pub mod cmtypes;
pub mod curves;
pub mod cyclotomic;
mod error;
pub mod groups;
pub mod poly;

pub use error::{Error, Result};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;
