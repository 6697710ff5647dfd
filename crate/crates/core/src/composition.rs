//! m-colored integer compositions: the elements of the poset.
//!
//! A colored composition is an ordered tuple of parts, each a positive
//! size carrying one of `m` colors. Colors are stored as exponents
//! `0..m` of a formal primitive m-th root of unity; the root itself is
//! never evaluated numerically.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A color, stored as the exponent of a formal m-th root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(pub u8);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One part of a colored composition: a positive size and a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Part {
    pub size: u32,
    pub color: Color,
}

impl Part {
    pub fn new(size: u32, color: u8) -> Self {
        Part {
            size,
            color: Color(color),
        }
    }
}

/// An m-colored composition. The empty composition is the unique
/// composition of 0.
///
/// Each value carries its ambient color count `m`, so compositions that
/// print the same but live in different posets compare unequal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComposition", into = "RawComposition")]
pub struct ColoredComposition {
    m: u8,
    parts: Vec<Part>,
}

#[derive(Serialize, Deserialize)]
struct RawComposition {
    m: u8,
    parts: Vec<Part>,
}

impl TryFrom<RawComposition> for ColoredComposition {
    type Error = Error;

    fn try_from(raw: RawComposition) -> Result<Self, Error> {
        ColoredComposition::new(raw.m, raw.parts)
    }
}

impl From<ColoredComposition> for RawComposition {
    fn from(c: ColoredComposition) -> Self {
        RawComposition {
            m: c.m,
            parts: c.parts,
        }
    }
}

impl ColoredComposition {
    /// Builds a composition, validating part sizes and color ranges.
    pub fn new(m: u8, parts: Vec<Part>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidColorCount { m, min: 1 });
        }
        for part in &parts {
            if part.size == 0 {
                return Err(Error::ZeroPartSize);
            }
            if part.color.0 >= m {
                return Err(Error::ColorOutOfRange {
                    color: part.color.0,
                    m,
                });
            }
        }
        Ok(ColoredComposition { m, parts })
    }

    /// The unique composition of 0.
    pub fn empty(m: u8) -> Result<Self, Error> {
        Self::new(m, Vec::new())
    }

    /// Constructor for parts already known to be valid.
    pub(crate) fn from_parts_unchecked(m: u8, parts: Vec<Part>) -> Self {
        debug_assert!(m >= 1);
        debug_assert!(parts.iter().all(|p| p.size >= 1 && p.color.0 < m));
        ColoredComposition { m, parts }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Number of parts, l(alpha).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of part sizes; the rank of the composition in the poset.
    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Parses the canonical grammar: comma-separated `<size>c<color>`
    /// items, empty string for the empty composition.
    pub fn parse(text: &str, m: u8) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidColorCount { m, min: 1 });
        }
        let text = text.trim();
        if text.is_empty() {
            return Self::empty(m);
        }
        let mut parts = Vec::new();
        for item in text.split(',') {
            let (size, color) = parse_item(item, text)?;
            if size == 0 {
                return Err(Error::ZeroPartSize);
            }
            parts.push(Part::new(size, color));
        }
        Self::new(m, parts)
    }
}

/// Parses one `<number>c<color>` item; shared by compositions and
/// permutations.
pub(crate) fn parse_item(item: &str, whole: &str) -> Result<(u32, u8), Error> {
    let malformed = || Error::MalformedText {
        input: whole.to_string(),
    };
    let (num, color) = item.split_once('c').ok_or_else(malformed)?;
    let num: u32 = num.parse().map_err(|_| malformed())?;
    let color: u8 = color.parse().map_err(|_| malformed())?;
    Ok((num, color))
}

impl fmt::Display for ColoredComposition {
    /// Canonical text: parts joined by commas, the empty composition as
    /// the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for part in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}c{}", part.size, part.color)?;
            first = false;
        }
        Ok(())
    }
}

impl PartialOrd for ColoredComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ColoredComposition {
    /// Canonical order: ambient m, then weight (rank), then the size
    /// sequence lexicographically, then the color sequence
    /// lexicographically. Within one rank no size sequence is a proper
    /// prefix of another, so this is the documented enumeration order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| {
                self.parts
                    .iter()
                    .map(|p| p.size)
                    .cmp(other.parts.iter().map(|p| p.size))
            })
            .then_with(|| {
                self.parts
                    .iter()
                    .map(|p| p.color)
                    .cmp(other.parts.iter().map(|p| p.color))
            })
    }
}

/// Number of m-colored compositions of n: m(m+1)^(n-1) for n >= 1 and 1
/// for n = 0. Overflow is an error, never wraparound.
pub fn count_compositions(m: u8, n: u32) -> Result<u64, Error> {
    if m == 0 {
        return Err(Error::InvalidColorCount { m, min: 1 });
    }
    if n == 0 {
        return Ok(1);
    }
    let base = u64::from(m) + 1;
    let pow = base.checked_pow(n - 1).ok_or(Error::Overflow)?;
    u64::from(m).checked_mul(pow).ok_or(Error::Overflow)
}

/// All ordinary compositions of `n` in lexicographic order by part
/// sequence.
fn ordinary_compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in ordinary_compositions(n - first) {
            let mut comp = Vec::with_capacity(rest.len() + 1);
            comp.push(first);
            comp.extend(rest);
            out.push(comp);
        }
    }
    out
}

/// All m-colored compositions of `n`, each exactly once, in canonical
/// order: ordinary compositions lexicographically by part sequence, then
/// colorings lexicographically by color indices.
pub fn enumerate_compositions(m: u8, n: u32) -> Result<Vec<ColoredComposition>, Error> {
    if m == 0 {
        return Err(Error::InvalidColorCount { m, min: 1 });
    }
    let mut out = Vec::new();
    for sizes in ordinary_compositions(n) {
        let k = sizes.len();
        let mut colors = vec![0u8; k];
        loop {
            let parts = sizes
                .iter()
                .zip(&colors)
                .map(|(&size, &color)| Part::new(size, color))
                .collect();
            out.push(ColoredComposition::from_parts_unchecked(m, parts));
            // advance the color odometer, last index fastest
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                colors[i] += 1;
                if colors[i] < m {
                    break;
                }
                colors[i] = 0;
            }
            if colors.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}
