//! Exact combinatorics of independent covers.
//!
//! A matroid's ground set can be covered by pairwise disjoint independent
//! sets; this crate computes, with exact integer arithmetic:
//!
//! - the minimum number of parts any such cover needs (the arboricity
//!   number), with a witness subset and a constructive partition;
//! - the counting polynomial `A_M(k)`: the number of maps `g: E -> [k]`
//!   whose fibers are all independent, as a polynomial in `k`;
//! - scheduling polynomials in general: counting functions of boolean
//!   formulas over order atoms `x_i <= x_j`, of which graph coloring and
//!   independent covering are both instances.
//!
//! Everything is enumeration-backed and capped at desk scale; the heavy
//! paths prune through hereditary predicates and can fan out across
//! threads with bit-identical results.

pub mod arboricity;
pub mod demo;
pub mod error;
pub mod matroid;
pub mod partition;
pub mod polynomial;
pub mod scheduling;
pub mod subset;
pub mod text;

pub use arboricity::{
    arboricity_number, arboricity_number_with_partition, arboricity_partition,
    arboricity_polynomial, arboricity_polynomial_threaded, brute_force_covers, ArboricityResult,
    ArboricityValue,
};
pub use demo::{demo_chromatic_contrast, demo_condel, demo_cycles, demo_valuativity, DemoReport};
pub use error::{Error, Result};
pub use matroid::{validate_bases, CircuitList, Matroid};
pub use partition::{
    count_by_block_count, ordered_partitions, set_partitions, OrderedSetPartition, SetPartition,
};
pub use polynomial::{stirling2, IntPolynomial};
pub use scheduling::{
    arboricity_instance, chromatic_instance, count_schedules, parse_formula,
    scheduling_polynomial, Expr, SchedulePredicate, SchedulingFormula,
};
pub use subset::Subset;
pub use text::parse_matroid;
