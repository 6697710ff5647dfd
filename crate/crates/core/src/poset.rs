//! Order structure of the colored composition poset: covers in both
//! directions, order testing, intervals, saturated chains, and Hasse
//! diagram export.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::rc::Rc;

use crate::composition::{enumerate_compositions, ColoredComposition, Part};
use crate::error::Error;

/// All compositions covering `alpha`: add 1 to a part, add 1 to a part
/// and split it keeping the color, or insert a size-1 part of a
/// different color anywhere inside or beside a part, dropping size-0
/// fragments. Distinct rule applications can produce equal
/// compositions, so the result is a set.
pub fn up_covers(alpha: &ColoredComposition) -> BTreeSet<ColoredComposition> {
    let m = alpha.m();
    let parts = alpha.parts();
    let mut covers = BTreeSet::new();

    if parts.is_empty() {
        for color in 0..m {
            covers.insert(ColoredComposition::from_parts_unchecked(
                m,
                vec![Part::new(1, color)],
            ));
        }
        return covers;
    }

    for j in 0..parts.len() {
        let Part { size, color } = parts[j];

        // grow part j in place
        let mut grown = parts.to_vec();
        grown[j].size += 1;
        covers.insert(ColoredComposition::from_parts_unchecked(m, grown));

        // split part j into two parts of its color summing to size + 1
        for left in 1..=size {
            let mut split = Vec::with_capacity(parts.len() + 1);
            split.extend_from_slice(&parts[..j]);
            split.push(Part { size: left, color });
            split.push(Part {
                size: size + 1 - left,
                color,
            });
            split.extend_from_slice(&parts[j + 1..]);
            covers.insert(ColoredComposition::from_parts_unchecked(m, split));
        }

        // insert a size-1 part of a different color, splitting part j
        // into fragments of sizes h and size - h; empty fragments drop
        for new_color in 0..m {
            if new_color == color.0 {
                continue;
            }
            for h in 0..=size {
                let mut inserted = Vec::with_capacity(parts.len() + 2);
                inserted.extend_from_slice(&parts[..j]);
                if h > 0 {
                    inserted.push(Part { size: h, color });
                }
                inserted.push(Part::new(1, new_color));
                if size - h > 0 {
                    inserted.push(Part {
                        size: size - h,
                        color,
                    });
                }
                inserted.extend_from_slice(&parts[j + 1..]);
                covers.insert(ColoredComposition::from_parts_unchecked(m, inserted));
            }
        }
    }
    covers
}

/// All compositions covered by `beta`, by direct inversion of the three
/// cover rules. The exponential filter over all compositions of weight
/// |beta| - 1 is kept as a test oracle only.
pub fn down_covers(beta: &ColoredComposition) -> BTreeSet<ColoredComposition> {
    let m = beta.m();
    let parts = beta.parts();
    let k = parts.len();
    let mut covers = BTreeSet::new();

    for i in 0..k {
        let Part { size, color } = parts[i];

        // undo rule (1): shrink a part of size >= 2
        if size >= 2 {
            let mut shrunk = parts.to_vec();
            shrunk[i].size -= 1;
            covers.insert(ColoredComposition::from_parts_unchecked(m, shrunk));
        }

        // undo rule (2): merge an equal-colored adjacent pair
        if i + 1 < k && parts[i + 1].color == color {
            let mut merged = Vec::with_capacity(k - 1);
            merged.extend_from_slice(&parts[..i]);
            merged.push(Part {
                size: size + parts[i + 1].size - 1,
                color,
            });
            merged.extend_from_slice(&parts[i + 2..]);
            covers.insert(ColoredComposition::from_parts_unchecked(m, merged));
        }

        // undo rule (3): delete a size-1 part whose color differs from a
        // neighbor, or splice the flanking fragments back together
        if size == 1 {
            if k == 1 {
                covers.insert(ColoredComposition::from_parts_unchecked(m, Vec::new()));
            }
            let left_differs = i > 0 && parts[i - 1].color != color;
            let right_differs = i + 1 < k && parts[i + 1].color != color;
            if left_differs || right_differs {
                let mut dropped = Vec::with_capacity(k - 1);
                dropped.extend_from_slice(&parts[..i]);
                dropped.extend_from_slice(&parts[i + 1..]);
                covers.insert(ColoredComposition::from_parts_unchecked(m, dropped));
            }
            if i > 0
                && i + 1 < k
                && parts[i - 1].color == parts[i + 1].color
                && parts[i - 1].color != color
            {
                let mut spliced = Vec::with_capacity(k - 2);
                spliced.extend_from_slice(&parts[..i - 1]);
                spliced.push(Part {
                    size: parts[i - 1].size + parts[i + 1].size,
                    color: parts[i - 1].color,
                });
                spliced.extend_from_slice(&parts[i + 2..]);
                covers.insert(ColoredComposition::from_parts_unchecked(m, spliced));
            }
        }
    }
    covers
}

/// The full down-set of `top`, sliced by rank 0..=|top|.
type DownSet = Vec<BTreeSet<ColoredComposition>>;

thread_local! {
    // Memoized down-sets keyed by the top composition. Confined to one
    // thread: concurrent callers each fill their own cache and observe
    // no shared mutable state.
    static DOWN_SETS: RefCell<HashMap<ColoredComposition, Rc<DownSet>>> =
        RefCell::new(HashMap::new());
}

fn down_set(top: &ColoredComposition) -> Rc<DownSet> {
    DOWN_SETS.with(|cache| {
        if let Some(hit) = cache.borrow().get(top) {
            return Rc::clone(hit);
        }
        let n = top.weight() as usize;
        let mut slices: DownSet = vec![BTreeSet::new(); n + 1];
        slices[n].insert(top.clone());
        for rank in (1..=n).rev() {
            let mut below = BTreeSet::new();
            for gamma in &slices[rank] {
                below.extend(down_covers(gamma));
            }
            slices[rank - 1] = below;
        }
        let set = Rc::new(slices);
        cache.borrow_mut().insert(top.clone(), Rc::clone(&set));
        set
    })
}

/// Whether `alpha <= beta` in the poset, by memoized downward search
/// from `beta`.
pub fn less_or_equal(alpha: &ColoredComposition, beta: &ColoredComposition) -> Result<bool, Error> {
    if alpha.m() != beta.m() {
        return Err(Error::MismatchedColorCounts {
            left: alpha.m(),
            right: beta.m(),
        });
    }
    if alpha.weight() > beta.weight() {
        return Ok(false);
    }
    if alpha == beta {
        return Ok(true);
    }
    Ok(down_set(beta)[alpha.weight() as usize].contains(alpha))
}

/// A closed interval [bottom, top] with its elements sliced by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    bottom: ColoredComposition,
    top: ColoredComposition,
    by_rank: Vec<BTreeSet<ColoredComposition>>,
}

impl Interval {
    pub fn bottom(&self) -> &ColoredComposition {
        &self.bottom
    }

    pub fn top(&self) -> &ColoredComposition {
        &self.top
    }

    /// Number of cover steps from bottom to top.
    pub fn length(&self) -> u32 {
        self.top.weight() - self.bottom.weight()
    }

    /// The elements of weight `rank`, if the rank is spanned.
    pub fn rank_slice(&self, rank: u32) -> Option<&BTreeSet<ColoredComposition>> {
        let lo = self.bottom.weight();
        if rank < lo || rank > self.top.weight() {
            return None;
        }
        Some(&self.by_rank[(rank - lo) as usize])
    }

    pub fn contains(&self, gamma: &ColoredComposition) -> bool {
        self.rank_slice(gamma.weight())
            .is_some_and(|slice| slice.contains(gamma))
    }

    /// All elements, bottom rank first.
    pub fn elements(&self) -> impl Iterator<Item = &ColoredComposition> {
        self.by_rank.iter().flatten()
    }

    pub fn size(&self) -> usize {
        self.by_rank.iter().map(|s| s.len()).sum()
    }
}

/// The interval [bottom, top]: the down-set of `top` intersected with
/// the up-set of `bottom`.
pub fn interval(bottom: &ColoredComposition, top: &ColoredComposition) -> Result<Interval, Error> {
    if !less_or_equal(bottom, top)? {
        return Err(Error::NotBelow {
            lower: bottom.to_string(),
            upper: top.to_string(),
        });
    }
    let below = down_set(top);
    let lo = bottom.weight() as usize;
    let hi = top.weight() as usize;
    let mut by_rank: Vec<BTreeSet<ColoredComposition>> = Vec::with_capacity(hi - lo + 1);
    let mut frontier = BTreeSet::new();
    frontier.insert(bottom.clone());
    by_rank.push(frontier.clone());
    for rank in lo + 1..=hi {
        let mut next = BTreeSet::new();
        for gamma in &frontier {
            for cover in up_covers(gamma) {
                if below[rank].contains(&cover) {
                    next.insert(cover);
                }
            }
        }
        by_rank.push(next.clone());
        frontier = next;
    }
    Ok(Interval {
        bottom: bottom.clone(),
        top: top.clone(),
        by_rank,
    })
}

/// All saturated chains from `iv.top()` down to `iv.bottom()`, each a
/// top-down list of compositions. Depth-first with interval membership
/// pruning.
pub fn maximal_chains(iv: &Interval) -> Vec<Vec<ColoredComposition>> {
    let mut chains = Vec::new();
    let mut path = vec![iv.top().clone()];
    descend(iv, &mut path, &mut chains);
    chains
}

fn descend(
    iv: &Interval,
    path: &mut Vec<ColoredComposition>,
    chains: &mut Vec<Vec<ColoredComposition>>,
) {
    let current = path.last().expect("path never empty");
    if current == iv.bottom() {
        chains.push(path.clone());
        return;
    }
    let rank = current.weight();
    for below in down_covers(current) {
        if iv
            .rank_slice(rank - 1)
            .is_some_and(|slice| slice.contains(&below))
        {
            path.push(below);
            descend(iv, path, chains);
            path.pop();
        }
    }
}

/// DOT node label: canonical text, with the empty composition shown as
/// the empty-set symbol.
pub fn dot_label(comp: &ColoredComposition) -> String {
    if comp.is_empty() {
        "∅".to_string()
    } else {
        comp.to_string()
    }
}

/// DOT digraph of the poset restricted to weights <= `n_max`: one
/// vertex per composition, one edge per cover relation, vertices and
/// edges emitted in canonical order rank by rank.
pub fn hasse_dot(m: u8, n_max: u32) -> Result<String, Error> {
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    let mut levels = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        levels.push(enumerate_compositions(m, n)?);
    }
    for level in &levels {
        for comp in level {
            writeln!(out, "  \"{}\";", dot_label(comp)).expect("write to string");
        }
    }
    for level in &levels[..n_max as usize] {
        for comp in level {
            for cover in up_covers(comp) {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    dot_label(comp),
                    dot_label(&cover)
                )
                .expect("write to string");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
