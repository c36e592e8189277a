//! Exact arithmetic for the zeta functions of binary Hermitian forms.
//!
//! Over an imaginary quadratic field of fundamental discriminant `D < 0`,
//! this crate computes and cross-checks, entirely in exact rationals:
//!
//! - representation counts `r(delta, n)` and `r*(delta, n)` for the norm
//!   form of the ring of integers, by definitional lattice enumeration and
//!   by a multiplicative fast counter ([`counting`]);
//! - the finite Euler products `theta(delta, s)` attached to those counts
//!   and their local factors ([`euler`]);
//! - q-expansions of Eisenstein series `E_k(chi1, chi2)` for pairs of real
//!   quadratic characters, and the rational combinations of them that
//!   reproduce the generating series of special values ([`eisenstein`]);
//! - exact special values `Z(delta, 2k)` as rational multiples of
//!   `sqrt(|D|)/pi`, together with truncated-series numeric cross-checks.
//!
//! Scalars are arbitrary-precision integers and rationals throughout
//! ([`arith`]); Bernoulli numbers use the first-kind convention
//! `B_1 = -1/2`. All operations are pure functions on immutable values and
//! are safe to call from any number of threads.

pub mod arith;
pub mod characters;
pub mod counting;
pub mod discriminants;
pub mod eisenstein;
pub mod error;
pub mod euler;

pub use characters::QuadraticCharacter;
pub use discriminants::FundamentalDiscriminant;
pub use error::{Error, Result};
