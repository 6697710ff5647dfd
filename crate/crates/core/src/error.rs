//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong when building or combining colored
/// compositions, permutations, polynomials, and chains.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The ambient color count is too small (m = 0 is never valid; some
    /// operations need m >= 2).
    #[error("ambient color count m = {m} is invalid here (need m >= {min})")]
    InvalidColorCount { m: u8, min: u8 },

    /// A color index at or beyond the ambient color count.
    #[error("color index {color} out of range for m = {m}")]
    ColorOutOfRange { color: u8, m: u8 },

    /// Parts of size zero are never stored.
    #[error("part size must be positive")]
    ZeroPartSize,

    /// Text that does not match the canonical grammar.
    #[error("malformed text {input:?}: expected comma-separated `<size>c<color>` items")]
    MalformedText { input: String },

    /// Letter values that are not a permutation of 1..=n.
    #[error("letter values do not form a permutation of 1..=n")]
    NotAPermutation,

    /// Two values with different ambient color counts were combined.
    #[error("mismatched ambient color counts: {left} vs {right}")]
    MismatchedColorCounts { left: u8, right: u8 },

    /// Two polynomials over different truncated alphabets were combined.
    #[error(
        "mismatched polynomial alphabets: (m={left_m}, N={left_n}) vs (m={right_m}, N={right_n})"
    )]
    MismatchedAlphabets {
        left_m: u8,
        left_n: u32,
        right_m: u8,
        right_n: u32,
    },

    /// Exact integer arithmetic left the machine range.
    #[error("arithmetic overflow")]
    Overflow,

    /// An interval [bottom, top] was requested with bottom not below top.
    #[error("{lower:?} is not <= {upper:?} in the poset")]
    NotBelow { lower: String, upper: String },

    /// An index outside its valid range.
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: u32, max: u32 },

    /// A chain fed to the inverse bijection does not start at the empty
    /// composition.
    #[error("chain is not anchored at the empty composition")]
    ChainNotAnchoredAtEmpty,

    /// Consecutive chain elements whose weights do not step by one.
    #[error("chain is not saturated: weights must increase by exactly 1")]
    ChainNotSaturated,

    /// A chain step that matches no cover case (and so is not a cover).
    #[error("chain step is not a covering relation")]
    ChainStepNotCover,

    /// A chain step that matched more than one cover case; covers are
    /// produced by a unique insertion, so this signals corrupted input.
    #[error("chain step matched more than one cover case")]
    ChainStepAmbiguous,

    /// A sweep whose size exceeds the configured guard.
    #[error("size guard exceeded: need {required} but limit is {limit}")]
    SizeGuard { required: u64, limit: u64 },

    /// Urn moves were requested from a state with no balls.
    #[error("urn state holds no balls")]
    EmptyUrnState,

    /// A polynomial truncation too small for the requested identity.
    #[error("truncation N = {given} too small (need N >= {needed})")]
    TruncationTooSmall { needed: u32, given: u32 },

    /// Two fundamental polynomials shared a leading monomial, so triangular
    /// extraction cannot proceed.
    #[error("leading monomial collision during fundamental-basis extraction")]
    LeadingMonomialCollision,

    /// A polynomial outside the span of the fundamental polynomials of the
    /// requested degree.
    #[error("polynomial is not a Z-combination of fundamental polynomials of degree {degree}")]
    NotInFundamentalSpan { degree: u32 },
}
