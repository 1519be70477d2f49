//! Words and exact linear combinations of words: the tensor algebra over a
//! presentation's basis.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::error::AlgebraError;
use crate::lincomb::{LinComb, Rational};
use crate::presentation::{BasisIndex, LiePresentation, SpaceId, Vector};

/// A finite sequence of basis indices. The empty word is the unit.
///
/// Words order by length first, then lexicographically. This is the storage
/// and printing order of [`TensorElement`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<BasisIndex>);

impl Word {
    pub fn new(letters: Vec<BasisIndex>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Word(indices.iter().copied().map(BasisIndex).collect())
    }

    pub fn letter(i: BasisIndex) -> Self {
        Word(vec![i])
    }

    /// Build a word from single-token names, e.g. `["c", "b", "a"]`.
    pub fn from_names(lie: &LiePresentation, names: &[&str]) -> Option<Self> {
        names
            .iter()
            .map(|n| lie.index_of(n))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[BasisIndex] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Positions `p` (1-based) with `w[p] > w[p+1]`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] > pair[1])
            .map(|(p, _)| p + 1)
            .collect()
    }

    /// Number of pairs `p < q` with `w[p] > w[q]`.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for (p, x) in self.0.iter().enumerate() {
            count += self.0[p + 1..].iter().filter(|y| x > y).count();
        }
        count
    }

    /// Weakly increasing.
    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|pair| pair[0] <= pair[1])
    }

    /// Copy with the letters at 1-based positions `p`, `p+1` exchanged.
    pub fn swapped(&self, p: usize) -> Word {
        let mut v = self.0.clone();
        v.swap(p - 1, p);
        Word(v)
    }

    /// `(prefix, x, y, suffix)` around the 1-based position `p`.
    pub fn split_at_pair(&self, p: usize) -> (Word, BasisIndex, BasisIndex, Word) {
        (
            Word(self.0[..p - 1].to_vec()),
            self.0[p - 1],
            self.0[p],
            Word(self.0[p + 1..].to_vec()),
        )
    }

    pub fn check_position(&self, p: usize) -> Result<(), AlgebraError> {
        if p >= 1 && p < self.len() {
            Ok(())
        } else {
            Err(AlgebraError::PositionOutOfRange {
                position: p,
                len: self.len(),
            })
        }
    }

    /// Space-separated basis names.
    pub fn display(&self, lie: &LiePresentation) -> String {
        self.0
            .iter()
            .map(|&i| lie.name(i))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<BasisIndex>> for Word {
    fn from(v: Vec<BasisIndex>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.0.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A finite linear combination of words over one presentation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorElement {
    space: SpaceId,
    terms: LinComb<Word>,
}

impl TensorElement {
    pub fn zero(lie: &LiePresentation) -> Self {
        TensorElement {
            space: lie.space(),
            terms: LinComb::zero(),
        }
    }

    /// The empty word with coefficient one.
    pub fn unit(lie: &LiePresentation) -> Self {
        Self::monomial_unchecked(lie.space(), Word::empty(), Rational::one())
    }

    pub fn monomial(
        lie: &LiePresentation,
        word: Word,
        coeff: Rational,
    ) -> Result<Self, AlgebraError> {
        for &i in word.letters() {
            lie.check_index(i)?;
        }
        Ok(Self::monomial_unchecked(lie.space(), word, coeff))
    }

    /// `1 · word`.
    pub fn word(lie: &LiePresentation, word: Word) -> Result<Self, AlgebraError> {
        Self::monomial(lie, word, Rational::one())
    }

    /// Build from `(word, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(lie: &LiePresentation, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut out = Self::zero(lie);
        for (w, c) in terms {
            for &i in w.letters() {
                lie.check_index(i)?;
            }
            out.terms.add_term(w, c);
        }
        Ok(out)
    }

    /// Degree-one element with the coefficients of `v`.
    pub fn from_vector(lie: &LiePresentation, v: &Vector) -> Self {
        TensorElement {
            space: lie.space(),
            terms: v.map_keys(|&i| Word::letter(i)),
        }
    }

    pub(crate) fn monomial_unchecked(space: SpaceId, word: Word, coeff: Rational) -> Self {
        TensorElement {
            space,
            terms: LinComb::single(word, coeff),
        }
    }

    pub(crate) fn from_parts(space: SpaceId, terms: LinComb<Word>) -> Self {
        TensorElement { space, terms }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn terms(&self) -> &LinComb<Word> {
        &self.terms
    }

    pub(crate) fn terms_mut(&mut self) -> &mut LinComb<Word> {
        &mut self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.coeff(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest word length; zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn same_space(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(AlgebraError::MixedPresentations)
        }
    }

    pub(crate) fn check_space(&self, lie: &LiePresentation) -> Result<(), AlgebraError> {
        if self.space == lie.space() {
            Ok(())
        } else {
            Err(AlgebraError::MixedPresentations)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_space(other)?;
        Ok(TensorElement {
            space: self.space,
            terms: self.terms.add(&other.terms),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_space(other)?;
        Ok(TensorElement {
            space: self.space,
            terms: self.terms.sub(&other.terms),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TensorElement {
            space: self.space,
            terms: self.terms.scale(c),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Bilinear extension of word concatenation.
    pub fn concat(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_space(other)?;
        let mut terms = LinComb::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                terms.add_term(u.concat(v), a * b);
            }
        }
        Ok(TensorElement {
            space: self.space,
            terms,
        })
    }
}

/// `prefix ⊗ [e_i, e_j] ⊗ suffix`, expanded through the structure constants.
pub fn bracket_in_context(
    lie: &LiePresentation,
    prefix: &Word,
    i: BasisIndex,
    j: BasisIndex,
    suffix: &Word,
) -> Result<TensorElement, AlgebraError> {
    for &x in prefix
        .letters()
        .iter()
        .chain(suffix.letters())
        .chain([&i, &j])
    {
        lie.check_index(x)?;
    }
    Ok(bracket_in_context_unchecked(lie, prefix, i, j, suffix))
}

pub(crate) fn bracket_in_context_unchecked(
    lie: &LiePresentation,
    prefix: &Word,
    i: BasisIndex,
    j: BasisIndex,
    suffix: &Word,
) -> TensorElement {
    let mut terms = LinComb::zero();
    if let Some((negate, v)) = lie.bracket_entry(i, j) {
        for (k, c) in v {
            let mut letters = Vec::with_capacity(prefix.len() + 1 + suffix.len());
            letters.extend_from_slice(prefix.letters());
            letters.push(*k);
            letters.extend_from_slice(suffix.letters());
            terms.add_term(Word(letters), if negate { -c } else { c.clone() });
        }
    }
    TensorElement::from_parts(lie.space(), terms)
}
