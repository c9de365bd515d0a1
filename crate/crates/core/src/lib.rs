//! Generalized partition counting `p(n; S, M)`: the number of ways to write
//! `n` as `sum mu_a * a` with parts `a` from `S` and multiplicities `mu_a`
//! from `M`.
//!
//! Counts are exact big integers. Bounds are exact rationals where the
//! expression is algebraic and enclosed high-precision reals otherwise.

pub mod arith;
pub mod bounds;
pub mod corpus;
pub mod counting;
pub mod error;
pub mod real;
pub mod setspec;

/// Exact partition count.
pub type BigCount = num_bigint::BigUint;
/// Exact rational used for algebraic bounds.
pub type ExactRational = num_rational::BigRational;

pub use arith::{
    coprime_prefix, eventually_strictly_increasing, frobenius_threshold, gcd_of_set,
    is_eventually_positive, FiniteCoprimeSet, PrefixGcdTrace,
};
pub use bounds::{BoundEntry, BoundId, BoundReport, BoundValue, Direction, Verdict};
pub use counting::{
    brute_force_count, count_partitions, count_table, pentagonal_partition_numbers, Count,
    CountTable,
};
pub use error::{Error, Result, SetSpecError};
pub use real::{HighPrecisionReal, DEFAULT_DIGITS};
pub use setspec::{
    construct_sparse_set, parse_set_spec, EpsilonTable, IntegerSetSpec, RationalThreshold, SetKind,
};
