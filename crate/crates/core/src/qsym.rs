//! Colored fundamental quasisymmetric functions realized as truncated
//! sparse polynomials with exact integer coefficients, together with the
//! shuffle-product and Pieri-rule checks that tie them to the poset.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::composition::{Color, ColoredComposition};
use crate::error::Error;
use crate::permutation::{ColoredPermutation, Letter};
use crate::poset::up_covers;

/// One variable x_{color, position} of the truncated colored alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub position: u32,
    pub color: Color,
}

/// A monomial: sparse exponent map. Ordered by the (position, color)
/// variable order, which fixes the leading monomial of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<Variable, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Variable, &u32)> {
        self.0.iter()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    fn push(&mut self, var: Variable) {
        *self.0.entry(var).or_insert(0) += 1;
    }

    fn merged(&self, other: &Monomial) -> Result<Monomial, Error> {
        let mut out = self.0.clone();
        for (&var, &exp) in &other.0 {
            let slot = out.entry(var).or_insert(0);
            *slot = slot.checked_add(exp).ok_or(Error::Overflow)?;
        }
        Ok(Monomial(out))
    }
}

/// A polynomial in the variables x_{j,i} with j < m and 1 <= i <= N,
/// stored sparsely with nonzero exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    m: u8,
    positions: u32,
    terms: BTreeMap<Monomial, i64>,
}

impl SparsePolynomial {
    pub fn zero(m: u8, positions: u32) -> Self {
        SparsePolynomial {
            m,
            positions,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1.
    pub fn one(m: u8, positions: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), 1);
        SparsePolynomial {
            m,
            positions,
            terms,
        }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn positions(&self) -> u32 {
        self.positions
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> i64 {
        self.terms.get(monomial).copied().unwrap_or(0)
    }

    /// Largest monomial under the canonical variable order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), Error> {
        if self.m != other.m || self.positions != other.positions {
            return Err(Error::MismatchedAlphabets {
                left_m: self.m,
                left_n: self.positions,
                right_m: other.m,
                right_n: other.positions,
            });
        }
        Ok(())
    }

    fn insert_term(&mut self, monomial: Monomial, coef: i64) -> Result<(), Error> {
        if coef == 0 {
            return Ok(());
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().checked_add(coef).ok_or(Error::Overflow)?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (monomial, &coef) in &other.terms {
            out.insert_term(monomial.clone(), coef)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (monomial, &coef) in &other.terms {
            out.insert_term(monomial.clone(), coef.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, scalar: i64) -> Result<Self, Error> {
        let mut out = Self::zero(self.m, self.positions);
        for (monomial, &coef) in &self.terms {
            out.insert_term(
                monomial.clone(),
                coef.checked_mul(scalar).ok_or(Error::Overflow)?,
            )?;
        }
        Ok(out)
    }

    /// Distributive product with exact coefficients; overflow is an
    /// error, never wraparound.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.m, self.positions);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let coef = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.insert_term(ma.merged(mb)?, coef)?;
            }
        }
        Ok(out)
    }
}

impl Serialize for SparsePolynomial {
    /// Canonical dump: a list of `{coef, vars: [{color, pos, exp}]}`
    /// entries sorted by monomial order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct VarRepr {
            color: u8,
            pos: u32,
            exp: u32,
        }
        #[derive(Serialize)]
        struct TermRepr {
            coef: i64,
            vars: Vec<VarRepr>,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (monomial, &coef) in &self.terms {
            let vars = monomial
                .exponents()
                .map(|(var, &exp)| VarRepr {
                    color: var.color.0,
                    pos: var.position,
                    exp,
                })
                .collect();
            seq.serialize_element(&TermRepr { coef, vars })?;
        }
        seq.end()
    }
}

/// The colored fundamental quasisymmetric function of `alpha`,
/// truncated to positions 1..=N.
///
/// Letters 1..n take the colors of the parts containing them; position
/// sequences are weakly increasing, with a strict increase at a part
/// boundary exactly when the color exponent does not increase across
/// it.
pub fn fundamental_polynomial(
    alpha: &ColoredComposition,
    positions: u32,
) -> Result<SparsePolynomial, Error> {
    if positions == 0 {
        return Err(Error::TruncationTooSmall {
            needed: 1,
            given: 0,
        });
    }
    let mut letter_colors: Vec<Color> = Vec::with_capacity(alpha.weight() as usize);
    for part in alpha.parts() {
        for _ in 0..part.size {
            letter_colors.push(part.color);
        }
    }
    let boundaries: std::collections::BTreeSet<usize> = alpha
        .parts()
        .iter()
        .scan(0usize, |acc, p| {
            *acc += p.size as usize;
            Some(*acc)
        })
        .take(alpha.len().saturating_sub(1))
        .collect();
    let n = letter_colors.len();
    // strict[i]: the step from letter i to letter i+1 must increase
    let strict: Vec<bool> = (0..n.saturating_sub(1))
        .map(|i| boundaries.contains(&(i + 1)) && letter_colors[i] >= letter_colors[i + 1])
        .collect();

    let mut poly = SparsePolynomial::zero(alpha.m(), positions);
    let mut monomial = Monomial::one();
    fill(
        0,
        1,
        n,
        positions,
        &letter_colors,
        &strict,
        &mut monomial,
        &mut poly,
    )?;
    Ok(poly)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    idx: usize,
    min_pos: u32,
    n: usize,
    positions: u32,
    letter_colors: &[Color],
    strict: &[bool],
    monomial: &mut Monomial,
    poly: &mut SparsePolynomial,
) -> Result<(), Error> {
    if idx == n {
        poly.insert_term(monomial.clone(), 1)?;
        return Ok(());
    }
    for pos in min_pos..=positions {
        let var = Variable {
            position: pos,
            color: letter_colors[idx],
        };
        monomial.push(var);
        let next_min = if idx < n - 1 && strict[idx] {
            pos + 1
        } else {
            pos
        };
        fill(
            idx + 1,
            next_min,
            n,
            positions,
            letter_colors,
            strict,
            monomial,
            poly,
        )?;
        let entry = monomial.0.get_mut(&var).expect("just pushed");
        if *entry == 1 {
            monomial.0.remove(&var);
        } else {
            *entry -= 1;
        }
    }
    Ok(())
}

/// All shuffles of `u` with `v`, where `v` is relabeled onto the values
/// n+1..n+r above `u`. The relabeling keeps the value ranges disjoint
/// by construction; descent compositions only see relative order, so
/// passing `v` on 1..r is equivalent to the shifted word.
pub fn shuffles(
    u: &ColoredPermutation,
    v: &ColoredPermutation,
) -> Result<Vec<ColoredPermutation>, Error> {
    if u.m() != v.m() {
        return Err(Error::MismatchedColorCounts {
            left: u.m(),
            right: v.m(),
        });
    }
    let n = u.len() as u32;
    let shifted: Vec<Letter> = v
        .letters()
        .iter()
        .map(|l| Letter {
            value: l.value + n,
            color: l.color,
        })
        .collect();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(u.len() + v.len());
    interleave(u.m(), u.letters(), &shifted, &mut word, &mut out);
    Ok(out)
}

fn interleave(
    m: u8,
    a: &[Letter],
    b: &[Letter],
    word: &mut Vec<Letter>,
    out: &mut Vec<ColoredPermutation>,
) {
    if a.is_empty() && b.is_empty() {
        out.push(ColoredPermutation::from_letters_unchecked(m, word.clone()));
        return;
    }
    if let Some((&first, rest)) = a.split_first() {
        word.push(first);
        interleave(m, rest, b, word, out);
        word.pop();
    }
    if let Some((&first, rest)) = b.split_first() {
        word.push(first);
        interleave(m, a, rest, word, out);
        word.pop();
    }
}

/// First monomial whose coefficients disagree between two polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub monomial: Monomial,
    pub left: i64,
    pub right: i64,
}

fn first_mismatch(left: &SparsePolynomial, right: &SparsePolynomial) -> Option<Mismatch> {
    let monomials: std::collections::BTreeSet<&Monomial> =
        left.terms.keys().chain(right.terms.keys()).collect();
    for monomial in monomials {
        let l = left.coefficient(monomial);
        let r = right.coefficient(monomial);
        if l != r {
            return Some(Mismatch {
                monomial: monomial.clone(),
                left: l,
                right: r,
            });
        }
    }
    None
}

/// Checks the shuffle-product identity for `u` and `v` at truncation
/// `positions`: the product of their fundamental polynomials must equal
/// the sum over all shuffles. `None` means the identity holds.
pub fn verify_shuffle_product(
    u: &ColoredPermutation,
    v: &ColoredPermutation,
    positions: u32,
) -> Result<Option<Mismatch>, Error> {
    let degree = (u.len() + v.len()) as u32;
    if positions < degree {
        return Err(Error::TruncationTooSmall {
            needed: degree,
            given: positions,
        });
    }
    let left =
        fundamental_polynomial(&crate::descent::colored_descent_composition(u), positions)?.mul(
            &fundamental_polynomial(&crate::descent::colored_descent_composition(v), positions)?,
        )?;
    let mut right = SparsePolynomial::zero(u.m(), positions);
    for w in shuffles(u, v)? {
        right = right.add(&fundamental_polynomial(
            &crate::descent::colored_descent_composition(&w),
            positions,
        )?)?;
    }
    Ok(first_mismatch(&left, &right))
}

/// Checks the Pieri rule at `alpha`: multiplying by the sum of the m
/// degree-1 fundamentals must expand as the sum over the up-covers of
/// `alpha`. `None` means the identity holds.
pub fn verify_pieri(alpha: &ColoredComposition, positions: u32) -> Result<Option<Mismatch>, Error> {
    let degree = alpha.weight() + 1;
    if positions < degree {
        return Err(Error::TruncationTooSmall {
            needed: degree,
            given: positions,
        });
    }
    let m = alpha.m();
    let mut degree_one = SparsePolynomial::zero(m, positions);
    for color in 0..m {
        let singleton = ColoredComposition::new(m, vec![crate::composition::Part::new(1, color)])?;
        degree_one = degree_one.add(&fundamental_polynomial(&singleton, positions)?)?;
    }
    let left = degree_one.mul(&fundamental_polynomial(alpha, positions)?)?;
    let mut right = SparsePolynomial::zero(m, positions);
    for beta in up_covers(alpha) {
        right = right.add(&fundamental_polynomial(&beta, positions)?)?;
    }
    Ok(first_mismatch(&left, &right))
}

/// Expands a polynomial over the fundamental polynomials of the given
/// degree by triangular elimination against leading monomials.
pub fn expand_in_fundamental_basis(
    p: &SparsePolynomial,
    degree: u32,
) -> Result<BTreeMap<ColoredComposition, i64>, Error> {
    let mut by_leading: BTreeMap<Monomial, (ColoredComposition, SparsePolynomial)> =
        BTreeMap::new();
    for alpha in crate::composition::enumerate_compositions(p.m(), degree)? {
        let basis = fundamental_polynomial(&alpha, p.positions())?;
        let leading = basis
            .leading_monomial()
            .expect("fundamental polynomials are nonzero")
            .clone();
        if by_leading.insert(leading, (alpha, basis)).is_some() {
            return Err(Error::LeadingMonomialCollision);
        }
    }
    let mut remainder = p.clone();
    let mut coefficients = BTreeMap::new();
    while let Some(monomial) = remainder.leading_monomial().cloned() {
        let coef = remainder.coefficient(&monomial);
        let (alpha, basis) = by_leading
            .get(&monomial)
            .ok_or(Error::NotInFundamentalSpan { degree })?;
        remainder = remainder.sub(&basis.scale(coef)?)?;
        coefficients.insert(alpha.clone(), coef);
    }
    Ok(coefficients)
}
