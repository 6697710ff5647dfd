//! The graded poset of m-colored integer compositions.
//!
//! Compositions of n whose parts carry one of m colors form a graded
//! poset under three covering moves; its saturated chains from the
//! empty composition biject with colored permutations through colored
//! descent compositions. This crate implements the elements and their
//! enumeration ([`composition`], [`permutation`]), the order structure
//! ([`poset`], [`subword`]), descent statistics and the chain bijection
//! ([`descent`]), colored fundamental quasisymmetric functions with the
//! shuffle-product and Pieri-rule checks ([`qsym`]), and the urn-model
//! chain labeling with the Möbius function by three independent routes
//! ([`shelling`]).
//!
//! All values are immutable after construction and all operations are
//! pure functions; per-thread memoization is the only caching.

pub mod composition;
pub mod descent;
pub mod error;
pub mod permutation;
pub mod poset;
pub mod qsym;
pub mod shelling;
pub mod subword;

pub use composition::{
    count_compositions, enumerate_compositions, Color, ColoredComposition, Part,
};
pub use error::Error;
pub use permutation::{count_permutations, enumerate_permutations, ColoredPermutation, Letter};
pub use poset::{
    down_covers, hasse_dot, interval, less_or_equal, maximal_chains, up_covers, Interval,
};
