//! Urn-model chain labeling and the Möbius function of the poset.
//!
//! A composition becomes a row of urns holding colored balls; each
//! downward cover removes one ball via a unique (urn, move-type) pair.
//! Labels are ordered lexicographically, chains with weakly increasing
//! labels certify shellability, and strictly decreasing labels count
//! the Möbius function. An incidence-algebra recursion and a closed
//! form give two independent routes for cross-checking.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::composition::{Color, ColoredComposition, Part};
use crate::error::Error;
use crate::poset::{interval, less_or_equal, Interval};

/// A nonempty urn: some balls of one color. Moves never mix colors in
/// an urn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Urn {
    pub count: u32,
    pub color: Color,
}

/// A fixed row of urns. Emptied urns keep their position, so labels can
/// reference absolute urn indices along a whole chain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UrnState {
    m: u8,
    urns: Vec<Option<Urn>>,
}

impl UrnState {
    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn urns(&self) -> &[Option<Urn>] {
        &self.urns
    }

    /// Total number of balls.
    pub fn total(&self) -> u32 {
        self.urns.iter().flatten().map(|u| u.count).sum()
    }

    /// The composition read off by skipping empty urns.
    pub fn read_off(&self) -> ColoredComposition {
        let parts = self
            .urns
            .iter()
            .flatten()
            .map(|u| Part {
                size: u.count,
                color: u.color,
            })
            .collect();
        ColoredComposition::from_parts_unchecked(self.m, parts)
    }
}

/// One urn per part: counts are the part sizes, colors the part colors.
pub fn urns_of(alpha: &ColoredComposition) -> UrnState {
    UrnState {
        m: alpha.m(),
        urns: alpha
            .parts()
            .iter()
            .map(|p| {
                Some(Urn {
                    count: p.size,
                    color: p.color,
                })
            })
            .collect(),
    }
}

/// The three ways a ball leaves an urn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveType {
    /// Remove one ball.
    Remove = 1,
    /// Remove the only ball, then pour both like-colored neighbors in.
    Merge = 2,
    /// Pour the right like-colored neighbor in, then remove one ball.
    Absorb = 3,
}

impl MoveType {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// A chain-edge label (urn index, move type), compared
/// lexicographically. Urn indices are 1-based and refer to the fixed
/// urn row of the chain's top composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveLabel {
    pub urn: u32,
    pub move_type: MoveType,
}

impl Serialize for MoveLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.urn, self.move_type.code()).serialize(serializer)
    }
}

impl std::fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.urn, self.move_type.code())
    }
}

/// All legal moves from a state, sorted by label. Each move realizes a
/// distinct down-cover of the read-off composition, and together they
/// realize all of them.
pub fn legal_moves(state: &UrnState) -> Result<Vec<(MoveLabel, UrnState)>, Error> {
    if state.total() == 0 {
        return Err(Error::EmptyUrnState);
    }
    let urns = &state.urns;
    let mut moves = Vec::new();
    for i in 0..urns.len() {
        let Some(urn) = urns[i] else { continue };
        let left = urns[..i].iter().rposition(|u| u.is_some());
        let right = urns[i + 1..]
            .iter()
            .position(|u| u.is_some())
            .map(|off| i + 1 + off);
        let left_color = left.map(|h| urns[h].expect("nonempty").color);
        let right_color = right.map(|j| urns[j].expect("nonempty").color);

        let label = |move_type| MoveLabel {
            urn: i as u32 + 1,
            move_type,
        };

        // type 1: remove a ball, unless that would strand a singleton
        // between nothing and a like-colored left neighbor
        if urn.count >= 2 || left.is_none() || left_color != Some(urn.color) {
            let mut next = state.clone();
            next.urns[i] = (urn.count > 1).then_some(Urn {
                count: urn.count - 1,
                color: urn.color,
            });
            moves.push((label(MoveType::Remove), next));
        }

        // type 2: drop the only ball and pour both neighbors in
        if let (Some(shared), true) = (
            left_color,
            urn.count == 1 && left_color == right_color && left_color != Some(urn.color),
        ) {
            let (h, j) = (left.expect("checked"), right.expect("checked"));
            let mut next = state.clone();
            next.urns[i] = Some(Urn {
                count: urns[h].expect("nonempty").count + urns[j].expect("nonempty").count,
                color: shared,
            });
            next.urns[h] = None;
            next.urns[j] = None;
            moves.push((label(MoveType::Merge), next));
        }

        // type 3: pour the like-colored right neighbor in, remove a ball
        if urn.count >= 2 && right_color == Some(urn.color) {
            let j = right.expect("checked");
            let mut next = state.clone();
            next.urns[i] = Some(Urn {
                count: urn.count + urns[j].expect("nonempty").count - 1,
                color: urn.color,
            });
            next.urns[j] = None;
            moves.push((label(MoveType::Absorb), next));
        }
    }
    moves.sort_by_key(|(label, _)| *label);
    Ok(moves)
}

/// A saturated chain (top-down) together with its urn states and move
/// labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    chain: Vec<ColoredComposition>,
    states: Vec<UrnState>,
    labels: Vec<MoveLabel>,
}

impl LabeledChain {
    /// Top-down compositions, one more than the labels.
    pub fn chain(&self) -> &[ColoredComposition] {
        &self.chain
    }

    pub fn states(&self) -> &[UrnState] {
        &self.states
    }

    pub fn labels(&self) -> &[MoveLabel] {
        &self.labels
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] > w[1])
    }
}

impl Serialize for LabeledChain {
    /// Wire form: `{chain: [...], label: [[urn, type], ...]}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut out = serializer.serialize_struct("LabeledChain", 2)?;
        out.serialize_field("chain", &self.chain)?;
        out.serialize_field("label", &self.labels)?;
        out.end()
    }
}

/// Labels a top-down saturated chain, starting the urn row at the top
/// composition. Interval chains label the same way: moves above the
/// bottom depend only on the top's urn configuration.
pub fn label_chain(chain: &[ColoredComposition]) -> Result<LabeledChain, Error> {
    let top = chain.first().ok_or(Error::ChainNotSaturated)?;
    let mut states = vec![urns_of(top)];
    let mut labels = Vec::with_capacity(chain.len() - 1);
    for step in chain.windows(2) {
        let current = states.last().expect("states never empty");
        let moves = legal_moves(current)?;
        let mut found = None;
        for (label, next) in moves {
            if next.read_off() == step[1] {
                if found.is_some() {
                    return Err(Error::ChainStepAmbiguous);
                }
                found = Some((label, next));
            }
        }
        let (label, next) = found.ok_or(Error::ChainStepNotCover)?;
        labels.push(label);
        states.push(next);
    }
    Ok(LabeledChain {
        chain: chain.to_vec(),
        states,
        labels,
    })
}

/// The lexicographically first maximal chain of [bottom, top]: at each
/// state take the least-labeled legal move whose result stays above
/// `bottom`. Its label is weakly increasing, and it is the unique chain
/// of the interval with that property.
pub fn lex_first_chain(
    bottom: &ColoredComposition,
    top: &ColoredComposition,
) -> Result<LabeledChain, Error> {
    if !less_or_equal(bottom, top)? {
        return Err(Error::NotBelow {
            lower: bottom.to_string(),
            upper: top.to_string(),
        });
    }
    let mut chain = vec![top.clone()];
    let mut states = vec![urns_of(top)];
    let mut labels = Vec::new();
    while chain.last().expect("nonempty") != bottom {
        let current = states.last().expect("nonempty");
        let mut advanced = false;
        for (label, next) in legal_moves(current)? {
            let gamma = next.read_off();
            if less_or_equal(bottom, &gamma)? {
                chain.push(gamma);
                states.push(next);
                labels.push(label);
                advanced = true;
                break;
            }
        }
        if !advanced {
            // cannot happen on a valid interval: every element strictly
            // above bottom has a down-cover still above bottom
            return Err(Error::ChainStepNotCover);
        }
    }
    Ok(LabeledChain {
        chain,
        states,
        labels,
    })
}

/// Möbius function via the labeling: (-1)^length times the number of
/// maximal chains of [bottom, top] with strictly decreasing labels.
pub fn mobius_via_labels(
    bottom: &ColoredComposition,
    top: &ColoredComposition,
) -> Result<i64, Error> {
    if !less_or_equal(bottom, top)? {
        return Err(Error::NotBelow {
            lower: bottom.to_string(),
            upper: top.to_string(),
        });
    }
    let length = top.weight() - bottom.weight();
    let count = count_decreasing(&urns_of(top), bottom, None)?;
    let sign = if length.is_multiple_of(2) { 1 } else { -1 };
    Ok(sign * count)
}

/// Counts descents to `bottom` whose labels strictly decrease,
/// abandoning any prefix that already fails.
fn count_decreasing(
    state: &UrnState,
    bottom: &ColoredComposition,
    last: Option<MoveLabel>,
) -> Result<i64, Error> {
    if state.read_off() == *bottom {
        return Ok(1);
    }
    let mut total = 0i64;
    for (label, next) in legal_moves(state)? {
        if let Some(last) = last {
            if label >= last {
                continue;
            }
        }
        if less_or_equal(bottom, &next.read_off())? {
            total += count_decreasing(&next, bottom, Some(label))?;
        }
    }
    Ok(total)
}

/// Möbius function by the incidence-algebra recursion over the interval
/// [bottom, top]: mu(bottom, bottom) = 1 and each element's value is
/// minus the sum over everything strictly below it. The independent
/// oracle for the label route.
pub fn mobius_recursive(
    bottom: &ColoredComposition,
    top: &ColoredComposition,
) -> Result<i64, Error> {
    let iv = interval(bottom, top)?;
    Ok(mobius_over_interval(&iv)[top])
}

/// Möbius values mu(bottom, gamma) for every gamma in the interval.
pub fn mobius_over_interval(iv: &Interval) -> BTreeMap<ColoredComposition, i64> {
    let mut mu: BTreeMap<ColoredComposition, i64> = BTreeMap::new();
    mu.insert(iv.bottom().clone(), 1);
    for rank in iv.bottom().weight() + 1..=iv.top().weight() {
        for gamma in iv.rank_slice(rank).expect("rank spanned") {
            let mut below_sum = 0i64;
            for (delta, value) in &mu {
                if less_or_equal(delta, gamma).expect("same ambient m") {
                    below_sum += value;
                }
            }
            mu.insert(gamma.clone(), -below_sum);
        }
    }
    mu
}

/// Closed form for lower intervals: (-1)^weight when every part has
/// size 1 and consecutive parts have distinct colors, else 0.
pub fn mobius_closed_form(alpha: &ColoredComposition) -> i64 {
    let parts = alpha.parts();
    let alternating =
        parts.iter().all(|p| p.size == 1) && parts.windows(2).all(|w| w[0].color != w[1].color);
    if !alternating {
        return 0;
    }
    if alpha.weight().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Möbius values mu(empty, gamma) for every gamma of weight <= n_max,
/// computed by one bottom-up recursion pass.
pub fn lower_mobius_table(m: u8, n_max: u32) -> Result<BTreeMap<ColoredComposition, i64>, Error> {
    let mut mu: BTreeMap<ColoredComposition, i64> = BTreeMap::new();
    mu.insert(ColoredComposition::empty(m)?, 1);
    for n in 1..=n_max {
        for gamma in crate::composition::enumerate_compositions(m, n)? {
            let mut below_sum = 0i64;
            for (delta, value) in &mu {
                if delta.weight() < n && less_or_equal(delta, &gamma)? {
                    below_sum += value;
                }
            }
            mu.insert(gamma, -below_sum);
        }
    }
    Ok(mu)
}

/// Möbius function of the truncated poset with an adjoined maximum
/// covering all compositions of weight n, by recursion. Guarded: the
/// ranks up to n must stay within `MAX_TRUNCATED_ELEMENTS` elements.
pub fn truncated_mobius(m: u8, n: u32) -> Result<i64, Error> {
    const MAX_TRUNCATED_ELEMENTS: u64 = 1_000_000;
    let mut elements = 0u64;
    for k in 0..=n {
        elements = elements
            .checked_add(crate::composition::count_compositions(m, k)?)
            .ok_or(Error::Overflow)?;
    }
    if elements > MAX_TRUNCATED_ELEMENTS {
        return Err(Error::SizeGuard {
            required: elements,
            limit: MAX_TRUNCATED_ELEMENTS,
        });
    }
    // the adjoined top covers all of rank n, and everything of weight
    // <= n sits below it
    let table = lower_mobius_table(m, n)?;
    Ok(-table.values().sum::<i64>())
}

/// Closed form for the truncated poset: (-1)^(n+1) (m-1)^n.
pub fn truncated_mobius_formula(m: u8, n: u32) -> Result<i64, Error> {
    if m == 0 {
        return Err(Error::InvalidColorCount { m, min: 1 });
    }
    let base = i64::from(m) - 1;
    let pow = base.checked_pow(n).ok_or(Error::Overflow)?;
    Ok(if n.is_multiple_of(2) { -pow } else { pow })
}

/// Rank-by-rank sums of the Möbius function on lower intervals.
///
/// `signed[n]` sums mu(empty, alpha) over all alpha of weight n;
/// `unsigned[n]` counts the compositions with nonzero Möbius value,
/// which is m(m-1)^(n-1) for n >= 1. The generating function
/// (1+t)/(1-(m-1)t) matches the unsigned sequence; the signed sequence
/// alternates and matches (1-t)/(1+(m-1)t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MobiusSeries {
    pub signed: Vec<i64>,
    pub unsigned: Vec<u64>,
}

/// Both Möbius series from the closed form, for m >= 2.
pub fn mobius_series(m: u8, n_max: u32) -> Result<MobiusSeries, Error> {
    if m < 2 {
        return Err(Error::InvalidColorCount { m, min: 2 });
    }
    let mut signed = vec![1i64];
    let mut unsigned = vec![1u64];
    for n in 1..=n_max {
        let count = u64::from(m)
            .checked_mul(u64::from(m - 1).checked_pow(n - 1).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        unsigned.push(count);
        let magnitude = i64::try_from(count).map_err(|_| Error::Overflow)?;
        signed.push(if n.is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        });
    }
    Ok(MobiusSeries { signed, unsigned })
}

/// Coefficients of (1+t)/(1-(m-1)t) up to t^n_max, the series displayed
/// for the Möbius support counts.
pub fn support_series_coefficients(m: u8, n_max: u32) -> Result<Vec<u64>, Error> {
    if m < 2 {
        return Err(Error::InvalidColorCount { m, min: 2 });
    }
    let mut coefficients = vec![1u64];
    let ratio = u64::from(m - 1);
    for n in 1..=n_max {
        let prev = coefficients[n as usize - 1];
        let next = if n == 1 {
            u64::from(m)
        } else {
            prev.checked_mul(ratio).ok_or(Error::Overflow)?
        };
        coefficients.push(next);
    }
    Ok(coefficients)
}
