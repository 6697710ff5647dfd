//! Colored permutations: words over colored letters whose values form a
//! permutation of 1..=n. These are the elements of the wreath product of
//! a cyclic color group with the symmetric group.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::composition::{parse_item, Color};
use crate::error::Error;

/// One letter of a colored permutation: a value and a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub value: u32,
    pub color: Color,
}

impl Letter {
    pub fn new(value: u32, color: u8) -> Self {
        Letter {
            value,
            color: Color(color),
        }
    }
}

/// An m-colored permutation, written as a word of colored letters. The
/// letter values form a permutation of 1..=n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation", into = "RawPermutation")]
pub struct ColoredPermutation {
    m: u8,
    letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct RawPermutation {
    m: u8,
    letters: Vec<Letter>,
}

impl TryFrom<RawPermutation> for ColoredPermutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self, Error> {
        ColoredPermutation::new(raw.m, raw.letters)
    }
}

impl From<ColoredPermutation> for RawPermutation {
    fn from(u: ColoredPermutation) -> Self {
        RawPermutation {
            m: u.m,
            letters: u.letters,
        }
    }
}

impl ColoredPermutation {
    /// Builds a colored permutation, checking that the values are a
    /// permutation of 1..=n and the colors are within range.
    pub fn new(m: u8, letters: Vec<Letter>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidColorCount { m, min: 1 });
        }
        let n = letters.len();
        let mut seen = vec![false; n];
        for letter in &letters {
            if letter.color.0 >= m {
                return Err(Error::ColorOutOfRange {
                    color: letter.color.0,
                    m,
                });
            }
            let v = letter.value as usize;
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(ColoredPermutation { m, letters })
    }

    pub fn empty(m: u8) -> Result<Self, Error> {
        Self::new(m, Vec::new())
    }

    pub(crate) fn from_letters_unchecked(m: u8, letters: Vec<Letter>) -> Self {
        debug_assert!(ColoredPermutation::new(m, letters.clone()).is_ok());
        ColoredPermutation { m, letters }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters, n.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The underlying uncolored word |u| as a value sequence.
    pub fn values(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.value).collect()
    }

    /// Parses the canonical grammar: comma-separated `<value>c<color>`
    /// items, empty string for the empty permutation.
    pub fn parse(text: &str, m: u8) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidColorCount { m, min: 1 });
        }
        let text = text.trim();
        if text.is_empty() {
            return Self::empty(m);
        }
        let mut letters = Vec::new();
        for item in text.split(',') {
            let (value, color) = parse_item(item, text)?;
            letters.push(Letter::new(value, color));
        }
        Self::new(m, letters)
    }
}

impl fmt::Display for ColoredPermutation {
    /// Canonical text: letters joined by commas, the empty permutation
    /// as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}c{}", letter.value, letter.color)?;
            first = false;
        }
        Ok(())
    }
}

/// Number of m-colored permutations of `[n]`: m^n n!.
pub fn count_permutations(m: u8, n: u32) -> Result<u64, Error> {
    if m == 0 {
        return Err(Error::InvalidColorCount { m, min: 1 });
    }
    let mut total = u64::from(m).checked_pow(n).ok_or(Error::Overflow)?;
    for i in 1..=u64::from(n) {
        total = total.checked_mul(i).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// All m^n n! colored permutations of `[n]`, refusing sweeps beyond
/// `limit`. The brute-force oracle behind the bijection and counting
/// tests.
pub fn enumerate_permutations(m: u8, n: u32, limit: u64) -> Result<Vec<ColoredPermutation>, Error> {
    let total = count_permutations(m, n)?;
    if total > limit {
        return Err(Error::SizeGuard {
            required: total,
            limit,
        });
    }
    let n = n as usize;
    let mut out = Vec::with_capacity(total as usize);
    for values in (1..=n as u32).permutations(n) {
        let mut colors = vec![0u8; n];
        loop {
            let letters = values
                .iter()
                .zip(&colors)
                .map(|(&value, &color)| Letter::new(value, color))
                .collect();
            out.push(ColoredPermutation::from_letters_unchecked(m, letters));
            let mut i = n;
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_golden() {
        let u = ColoredPermutation::parse("2c1,1c0,3c1", 2).unwrap();
        assert_eq!(
            u.letters(),
            &[Letter::new(2, 1), Letter::new(1, 0), Letter::new(3, 1)]
        );
        assert_eq!(u.values(), vec![2, 1, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            ColoredPermutation::parse("1c0,1c1", 2),
            Err(Error::NotAPermutation)
        ));
        assert!(matches!(
            ColoredPermutation::parse("1c0,3c0", 2),
            Err(Error::NotAPermutation)
        ));
        assert!(matches!(
            ColoredPermutation::parse("1c2", 2),
            Err(Error::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            ColoredPermutation::parse("xc0", 2),
            Err(Error::MalformedText { .. })
        ));
    }

    #[test]
    fn render_parse_round_trip() {
        for u in enumerate_permutations(2, 3, 1_000).unwrap() {
            let text = u.to_string();
            assert_eq!(ColoredPermutation::parse(&text, 2).unwrap(), u);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count_permutations(2, 2).unwrap(), 8);
        assert_eq!(enumerate_permutations(2, 2, 100).unwrap().len(), 8);
        assert_eq!(enumerate_permutations(3, 3, 1_000).unwrap().len(), 162);
        assert_eq!(enumerate_permutations(2, 0, 10).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_respects_guard() {
        assert!(matches!(
            enumerate_permutations(2, 5, 100),
            Err(Error::SizeGuard {
                required: 3840,
                limit: 100
            })
        ));
    }

    #[test]
    fn json_round_trip() {
        let u = ColoredPermutation::parse("2c1,1c0", 2).unwrap();
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(
            json,
            r#"{"m":2,"letters":[{"value":2,"color":1},{"value":1,"color":0}]}"#
        );
        let back: ColoredPermutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, u);
    }
}
