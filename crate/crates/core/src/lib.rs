//! Exact Bernoulli and Euler polynomials over Q(i), generating-function
//! oracles, and a verifier for identities between them.

pub mod arith;
pub mod catalog;
pub mod dsl;
pub mod poly;
pub mod series;
pub mod special;
pub mod verify;

pub use arith::{ArithError, BigRational, GaussRational, Int};
pub use poly::Polynomial;
pub use series::{KernelId, SeriesZ};
pub use special::Family;
