//! Exact cutting-plane machinery for 0/1 knapsack rows.
//!
//! The crate builds, validates, and separates five families of knapsack
//! inequalities: cover, extended cover, (1,k)-configuration, generalized
//! (1,k)-configuration, and weight inequalities. Separation comes in three
//! strengths: polynomial sparse-support routines gated by explicit budgets,
//! a pseudo-polynomial dynamic program for covers, and exhaustive oracles
//! for desk-scale ground truth. All arithmetic is exact; there is no
//! tolerance parameter anywhere.

pub mod cuts;
pub mod error;
pub mod families;
pub mod gen;
pub mod io;
pub mod model;
pub mod oracles;
pub mod reductions;
pub mod separators;

/// Arbitrary-precision integer used for weights, capacities, and objectives.
pub type Int = num::BigInt;
/// Exact rational used for points, coefficients, and violations.
pub type Rat = num::BigRational;

pub use cuts::{build_cut, violation, Certificate, Cut, Family};
pub use error::{Error, Result};
pub use model::{validate_instance, Instance, KnapsackRow, Point};

/// Shorthand for small integer literals in tests and examples.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for the exact rational p/q. Panics when q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}
