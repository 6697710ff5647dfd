//! Descent statistics of colored permutations and the bijection between
//! colored permutations and saturated chains from the empty composition.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::composition::{Color, ColoredComposition, Part};
use crate::error::Error;
use crate::permutation::{enumerate_permutations, ColoredPermutation, Letter};

/// Descent composition of a word of distinct letters: the lengths of
/// its maximal increasing runs, left to right.
pub fn descent_composition(word: &[u32]) -> Result<Vec<u32>, Error> {
    let distinct: BTreeSet<u32> = word.iter().copied().collect();
    if distinct.len() != word.len() {
        return Err(Error::NotAPermutation);
    }
    let mut parts = Vec::new();
    let mut run = 0u32;
    for i in 0..word.len() {
        run += 1;
        if i + 1 == word.len() || word[i] > word[i + 1] {
            parts.push(run);
            run = 0;
        }
    }
    Ok(parts)
}

/// Descent set by direct scan: positions i with w_i > w_{i+1},
/// 1-indexed.
pub fn descent_set(word: &[u32]) -> Result<BTreeSet<u32>, Error> {
    let distinct: BTreeSet<u32> = word.iter().copied().collect();
    if distinct.len() != word.len() {
        return Err(Error::NotAPermutation);
    }
    Ok(word
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] > pair[1])
        .map(|(i, _)| i as u32 + 1)
        .collect())
}

/// Descent set recovered from a composition: the proper partial sums of
/// its parts.
pub fn descent_set_of_composition(parts: &[u32]) -> BTreeSet<u32> {
    parts
        .iter()
        .scan(0u32, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .take(parts.len().saturating_sub(1))
        .collect()
}

/// Maximal constant-color blocks of `u` as (start, end) index ranges.
fn color_blocks(u: &ColoredPermutation) -> Vec<(usize, usize)> {
    let letters = u.letters();
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=letters.len() {
        if i == letters.len() || letters[i].color != letters[start].color {
            blocks.push((start, i));
            start = i;
        }
    }
    blocks
}

/// Color composition col(u): the lengths of the maximal constant-color
/// blocks of `u`, each part colored by its block. Adjacent parts have
/// distinct colors by construction.
pub fn color_composition(u: &ColoredPermutation) -> ColoredComposition {
    let letters = u.letters();
    let parts = color_blocks(u)
        .into_iter()
        .map(|(start, end)| Part {
            size: (end - start) as u32,
            color: letters[start].color,
        })
        .collect();
    ColoredComposition::from_parts_unchecked(u.m(), parts)
}

/// Colored descent composition: within each constant-color block, the
/// block length is refined by the descent composition of the block's
/// values; every refined part keeps the block color.
pub fn colored_descent_composition(u: &ColoredPermutation) -> ColoredComposition {
    let letters = u.letters();
    let mut parts = Vec::new();
    for (start, end) in color_blocks(u) {
        let color = letters[start].color;
        let values: Vec<u32> = letters[start..end].iter().map(|l| l.value).collect();
        let runs = descent_composition(&values).expect("permutation letters are distinct");
        parts.extend(runs.into_iter().map(|size| Part { size, color }));
    }
    ColoredComposition::from_parts_unchecked(u.m(), parts)
}

/// Restriction `u[i]`: the subword of letters with value at most `i`,
/// colors carried along.
pub fn restrict(u: &ColoredPermutation, i: u32) -> Result<ColoredPermutation, Error> {
    let n = u.len() as u32;
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let letters = u
        .letters()
        .iter()
        .copied()
        .filter(|l| l.value <= i)
        .collect();
    Ok(ColoredPermutation::from_letters_unchecked(u.m(), letters))
}

/// The saturated chain of `u`: colored descent compositions of the
/// restrictions `u[0], u[1], ..., u[n]`, bottom-up from the empty
/// composition.
pub fn chain_of_permutation(u: &ColoredPermutation) -> Vec<ColoredComposition> {
    let n = u.len() as u32;
    (0..=n)
        .map(|i| {
            let restricted = restrict(u, i).expect("i <= n");
            colored_descent_composition(&restricted)
        })
        .collect()
}

/// The unique (insertion position, color) pair realizing the cover
/// `prev` -> `next`, where the new letter is the largest so far.
///
/// The position counts letters of the current word after which the new
/// letter is placed. Covers arise four ways: growing a part at a block
/// boundary, starting a fresh size-1 part at a boundary, splitting a
/// part with its own color, or splitting a part around a size-1 part of
/// another color. Each candidate is collected; a valid cover yields
/// exactly one distinct (position, color).
fn classify_cover_step(
    prev: &ColoredComposition,
    next: &ColoredComposition,
) -> Result<(usize, Color), Error> {
    let a = prev.parts();
    let b = next.parts();
    let mut candidates: BTreeSet<(usize, Color)> = BTreeSet::new();
    let prefix_weight = |parts: &[Part], upto: usize| -> usize {
        parts[..upto].iter().map(|p| p.size as usize).sum()
    };

    if b.len() == a.len() {
        // one part grew by one
        for s in 0..a.len() {
            if b[s].color == a[s].color
                && b[s].size == a[s].size + 1
                && a[..s] == b[..s]
                && a[s + 1..] == b[s + 1..]
            {
                candidates.insert((prefix_weight(a, s + 1), a[s].color));
            }
        }
    } else if b.len() == a.len() + 1 {
        // a fresh size-1 part appeared at a gap; its color must differ
        // from the part before the gap, else the letter would have
        // extended that part instead
        for gap in 0..=a.len() {
            if b[gap].size == 1
                && a[..gap] == b[..gap]
                && a[gap..] == b[gap + 1..]
                && (gap == 0 || b[gap].color != a[gap - 1].color)
            {
                candidates.insert((prefix_weight(a, gap), b[gap].color));
            }
        }
        // one part split into two of its own color; a split leaving a
        // size-1 left fragment is a gap insertion, legal only when the
        // part before the gap has a different color
        for s in 0..a.len() {
            if b[s].color == a[s].color
                && b[s + 1].color == a[s].color
                && b[s].size + b[s + 1].size == a[s].size + 1
                && a[..s] == b[..s]
                && a[s + 1..] == b[s + 2..]
                && (b[s].size >= 2 || s == 0 || a[s - 1].color != a[s].color)
            {
                candidates.insert((prefix_weight(a, s) + b[s].size as usize - 1, a[s].color));
            }
        }
    } else if b.len() == a.len() + 2 {
        // one part split around an inner size-1 part of another color
        for s in 0..a.len() {
            if b[s].color == a[s].color
                && b[s + 2].color == a[s].color
                && b[s + 1].size == 1
                && b[s + 1].color != a[s].color
                && b[s].size + b[s + 2].size == a[s].size
                && a[..s] == b[..s]
                && a[s + 1..] == b[s + 3..]
            {
                candidates.insert((prefix_weight(a, s) + b[s].size as usize, b[s + 1].color));
            }
        }
    }

    match candidates.len() {
        0 => Err(Error::ChainStepNotCover),
        1 => Ok(candidates.into_iter().next().expect("len checked")),
        _ => Err(Error::ChainStepAmbiguous),
    }
}

/// Inverse of `chain_of_permutation`: rebuilds the unique colored
/// permutation whose restriction chain is `chain` (bottom-up from the
/// empty composition). Every step is re-verified against the rebuilt
/// word, so a non-cover step is always detected.
pub fn permutation_of_chain(chain: &[ColoredComposition]) -> Result<ColoredPermutation, Error> {
    let first = chain.first().ok_or(Error::ChainNotAnchoredAtEmpty)?;
    if !first.is_empty() {
        return Err(Error::ChainNotAnchoredAtEmpty);
    }
    let m = first.m();
    let mut letters: Vec<Letter> = Vec::with_capacity(chain.len() - 1);
    for (i, step) in chain.windows(2).enumerate() {
        let (prev, next) = (&step[0], &step[1]);
        if next.m() != m {
            return Err(Error::MismatchedColorCounts {
                left: m,
                right: next.m(),
            });
        }
        if next.weight() != prev.weight() + 1 {
            return Err(Error::ChainNotSaturated);
        }
        let (position, color) = classify_cover_step(prev, next)?;
        letters.insert(
            position,
            Letter {
                value: i as u32 + 1,
                color,
            },
        );
        let rebuilt = ColoredPermutation::from_letters_unchecked(m, letters.clone());
        if colored_descent_composition(&rebuilt) != *next {
            return Err(Error::ChainStepNotCover);
        }
    }
    Ok(ColoredPermutation::from_letters_unchecked(m, letters))
}

/// Tallies colored descent compositions over all of C_m wr S_n. Values
/// sum to m^n n!; the support is every colored composition of n.
pub fn count_by_descent_composition(
    m: u8,
    n: u32,
    limit: u64,
) -> Result<BTreeMap<ColoredComposition, u64>, Error> {
    let mut counts = BTreeMap::new();
    for u in enumerate_permutations(m, n, limit)? {
        *counts.entry(colored_descent_composition(&u)).or_insert(0) += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::enumerate_compositions;
    use crate::poset::up_covers;

    fn cc(m: u8, text: &str) -> ColoredComposition {
        ColoredComposition::parse(text, m).unwrap()
    }

    fn cp(m: u8, text: &str) -> ColoredPermutation {
        ColoredPermutation::parse(text, m).unwrap()
    }

    /// The running example: u = 2̄ 1 7 6̄ 3̄ 4̄ 5 8 with two colors.
    fn paper_perm() -> ColoredPermutation {
        cp(2, "2c1,1c0,7c0,6c1,3c1,4c1,5c0,8c0")
    }

    #[test]
    fn descent_composition_golden() {
        assert_eq!(
            descent_composition(&[3, 4, 5, 2, 6, 1]).unwrap(),
            vec![3, 2, 1]
        );
        assert_eq!(descent_composition(&[1, 2, 3, 4]).unwrap(), vec![4]);
        assert_eq!(descent_composition(&[7, 5]).unwrap(), vec![1, 1]);
        assert_eq!(descent_composition(&[]).unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn descent_composition_rejects_repeats() {
        assert!(matches!(
            descent_composition(&[1, 2, 1]),
            Err(Error::NotAPermutation)
        ));
    }

    #[test]
    fn descent_set_recovery() {
        for word in [&[3u32, 4, 5, 2, 6, 1][..], &[2, 1, 3], &[9, 4, 7], &[1]] {
            let comp = descent_composition(word).unwrap();
            assert_eq!(
                descent_set_of_composition(&comp),
                descent_set(word).unwrap()
            );
        }
    }

    #[test]
    fn color_composition_golden() {
        let u = cp(2, "1c0,2c1,3c1,4c0,8c1,5c1,7c0,6c0");
        assert_eq!(color_composition(&u), cc(2, "1c0,2c1,1c0,2c1,2c0"));

        let all_one = cp(2, "2c1,1c1,3c1");
        assert_eq!(color_composition(&all_one), cc(2, "3c1"));

        let alternating = cp(2, "2c1,1c0,3c1");
        assert_eq!(color_composition(&alternating), cc(2, "1c1,1c0,1c1"));
    }

    #[test]
    fn colored_descent_composition_golden() {
        let u = cp(2, "1c0,2c1,3c1,4c0,8c1,5c1,7c0,6c0");
        assert_eq!(
            colored_descent_composition(&u),
            cc(2, "1c0,2c1,1c0,1c1,1c1,1c0,1c0")
        );

        assert_eq!(
            colored_descent_composition(&cp(2, "2c1,1c0,3c1,4c1,5c0")),
            cc(2, "1c1,1c0,2c1,1c0")
        );

        assert_eq!(colored_descent_composition(&cp(3, "1c2")), cc(3, "1c2"));
    }

    #[test]
    fn refinement_merges_back_to_color_composition() {
        for u in enumerate_permutations(2, 4, 10_000).unwrap() {
            let refined = colored_descent_composition(&u);
            let mut merged: Vec<Part> = Vec::new();
            for &part in refined.parts() {
                match merged.last_mut() {
                    Some(last) if last.color == part.color => last.size += part.size,
                    _ => merged.push(part),
                }
            }
            let merged = ColoredComposition::new(2, merged).unwrap();
            assert_eq!(merged, color_composition(&u));
        }
    }

    #[test]
    fn restrict_golden() {
        let u = paper_perm();
        assert_eq!(restrict(&u, 5).unwrap(), cp(2, "2c1,1c0,3c1,4c1,5c0"));
        assert_eq!(restrict(&u, 8).unwrap(), u);
        assert_eq!(restrict(&u, 0).unwrap(), cp(2, ""));
        assert!(matches!(
            restrict(&u, 9),
            Err(Error::IndexOutOfRange { index: 9, max: 8 })
        ));
    }

    #[test]
    fn chain_of_paper_perm_matches_display() {
        let chain = chain_of_permutation(&paper_perm());
        let rendered: Vec<String> = chain.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            rendered,
            vec![
                "",
                "1c0",
                "1c1,1c0",
                "1c1,1c0,1c1",
                "1c1,1c0,2c1",
                "1c1,1c0,2c1,1c0",
                "1c1,1c0,1c1,2c1,1c0",
                "1c1,2c0,1c1,2c1,1c0",
                "1c1,2c0,1c1,2c1,2c0",
            ]
        );
    }

    #[test]
    fn chain_steps_are_covers() {
        for u in enumerate_permutations(2, 4, 10_000).unwrap() {
            let chain = chain_of_permutation(&u);
            for pair in chain.windows(2) {
                assert!(
                    up_covers(&pair[0]).contains(&pair[1]),
                    "non-cover step in chain of {u}"
                );
            }
        }
    }

    #[test]
    fn chain_of_identity_word() {
        let u = cp(1, "1c0,2c0,3c0");
        let chain = chain_of_permutation(&u);
        let rendered: Vec<String> = chain.iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, vec!["", "1c0", "2c0", "3c0"]);
    }

    #[test]
    fn chain_of_single_letter() {
        let u = cp(3, "1c2");
        let chain = chain_of_permutation(&u);
        assert_eq!(chain, vec![cc(3, ""), cc(3, "1c2")]);
    }

    #[test]
    fn inverse_rebuilds_paper_perm() {
        let chain = chain_of_permutation(&paper_perm());
        assert_eq!(permutation_of_chain(&chain).unwrap(), paper_perm());
    }

    #[test]
    fn inverse_golden_tiny() {
        let chain = vec![cc(2, ""), cc(2, "1c1"), cc(2, "1c1,1c0")];
        let u = permutation_of_chain(&chain).unwrap();
        assert_eq!(u, cp(2, "1c1,2c0"));
        assert_eq!(chain_of_permutation(&u), chain);

        let chain = vec![cc(2, ""), cc(2, "1c0")];
        assert_eq!(permutation_of_chain(&chain).unwrap(), cp(2, "1c0"));
    }

    #[test]
    fn inverse_error_cases_are_distinct() {
        assert!(matches!(
            permutation_of_chain(&[]),
            Err(Error::ChainNotAnchoredAtEmpty)
        ));
        assert!(matches!(
            permutation_of_chain(&[cc(2, "1c0"), cc(2, "2c0")]),
            Err(Error::ChainNotAnchoredAtEmpty)
        ));
        assert!(matches!(
            permutation_of_chain(&[cc(2, ""), cc(2, "2c0")]),
            Err(Error::ChainNotSaturated)
        ));
        // weight steps by one but the step is not a cover
        assert!(matches!(
            permutation_of_chain(&[cc(2, ""), cc(2, "1c0"), cc(2, "1c1,1c1")]),
            Err(Error::ChainStepNotCover)
        ));
    }

    #[test]
    fn bijection_round_trip_small() {
        for m in 1..=2u8 {
            for n in 0..=4u32 {
                let mut seen = BTreeSet::new();
                for u in enumerate_permutations(m, n, 100_000).unwrap() {
                    let chain = chain_of_permutation(&u);
                    assert!(seen.insert(chain.clone()), "chain collision for {u}");
                    assert_eq!(permutation_of_chain(&chain).unwrap(), u);
                }
            }
        }
    }

    #[test]
    fn counts_golden() {
        let counts = count_by_descent_composition(2, 2, 1_000).unwrap();
        assert_eq!(counts.values().sum::<u64>(), 8);
        assert_eq!(counts[&cc(2, "2c0")], 1);
        // support is all of the rank
        assert_eq!(counts.len(), enumerate_compositions(2, 2).unwrap().len());

        let counts = count_by_descent_composition(1, 3, 1_000).unwrap();
        assert_eq!(counts[&cc(1, "3c0")], 1);
        assert_eq!(counts[&cc(1, "1c0,1c0,1c0")], 1);
        assert_eq!(counts[&cc(1, "2c0,1c0")], 2);
        assert_eq!(counts[&cc(1, "1c0,2c0")], 2);
        assert_eq!(counts.values().sum::<u64>(), 6);
    }

    #[test]
    fn chain_counts_match_descent_counts() {
        // chains from the empty composition to alpha are counted by the
        // permutations with colored descent composition alpha
        use crate::poset::{interval, maximal_chains};
        for m in 1..=2u8 {
            for n in 0..=4u32 {
                let empty = ColoredComposition::empty(m).unwrap();
                let counts = count_by_descent_composition(m, n, 100_000).unwrap();
                for alpha in enumerate_compositions(m, n).unwrap() {
                    let chains = maximal_chains(&interval(&empty, &alpha).unwrap());
                    assert_eq!(
                        chains.len() as u64,
                        counts[&alpha],
                        "chain count vs descent count at {alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn counts_respect_guard() {
        assert!(matches!(
            count_by_descent_composition(2, 6, 1_000),
            Err(Error::SizeGuard { .. })
        ));
    }
}
