//! Straightening to PBW canonical form.
//!
//! A word is canonical when its letters are weakly increasing in the basis
//! order. Any descent `x y` with `x > y` is rewritten through
//! `x ⊗ y = y ⊗ x + [x, y]`: the same-length word loses exactly one
//! inversion and the bracket contributes strictly shorter words, so
//! repeated rewriting terminates.
//!
//! [`normalize`] applies a fixed deterministic rule. [`normalize_all_ways`]
//! explores every rewrite order and is the brute-force confluence check.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::AlgebraError;
use crate::lincomb::{LinComb, Rational};
use crate::presentation::{BasisIndex, LiePresentation};
use crate::tensor::{bracket_in_context_unchecked, TensorElement, Word};

/// Which descent of the selected word to rewrite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    LeftmostDescent,
    RightmostDescent,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::LeftmostDescent, Strategy::RightmostDescent];

    fn pick(self, w: &Word) -> Option<usize> {
        let d = w.descents();
        match self {
            Strategy::LeftmostDescent => d.first().copied(),
            Strategy::RightmostDescent => d.last().copied(),
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leftmost" => Ok(Strategy::LeftmostDescent),
            "rightmost" => Ok(Strategy::RightmostDescent),
            other => Err(format!("unknown strategy `{other}` (leftmost|rightmost)")),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::LeftmostDescent => "leftmost",
            Strategy::RightmostDescent => "rightmost",
        })
    }
}

/// Every word of `x` is weakly increasing.
pub fn is_canonical(x: &TensorElement) -> bool {
    x.iter().all(|(w, _)| w.is_sorted())
}

/// 1-based descent positions of `w`.
pub fn descents(w: &Word) -> Vec<usize> {
    w.descents()
}

/// Rewrite the descent at `p`: `w = w' + prefix·[x,y]·suffix`, where `w'` is
/// `w` with positions `p`, `p+1` swapped.
pub fn swap_reduce_at(
    lie: &LiePresentation,
    w: &Word,
    p: usize,
) -> Result<TensorElement, AlgebraError> {
    for &i in w.letters() {
        lie.check_index(i)?;
    }
    w.check_position(p)?;
    let (prefix, x, y, suffix) = w.split_at_pair(p);
    if x <= y {
        return Err(AlgebraError::NotADescent { position: p });
    }
    Ok(swap_reduce_unchecked(lie, w, p, &prefix, x, y, &suffix))
}

fn swap_reduce_unchecked(
    lie: &LiePresentation,
    w: &Word,
    p: usize,
    prefix: &Word,
    x: BasisIndex,
    y: BasisIndex,
    suffix: &Word,
) -> TensorElement {
    let swapped = w.swapped(p);
    debug_assert_eq!(swapped.inversions() + 1, w.inversions());
    let mut out = bracket_in_context_unchecked(lie, prefix, x, y, suffix);
    out.terms_mut().add_term(swapped, num_traits::One::one());
    out
}

/// One rewrite performed by [`normalize_traced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub word: Word,
    pub coeff: Rational,
    pub position: usize,
    /// `coeff · prefix·[x,y]·suffix`, the lower-order terms introduced.
    pub correction: TensorElement,
}

/// The word rewritten next: the highest degree non-canonical word, first in
/// storage order among those.
fn select_redex(x: &LinComb<Word>) -> Option<(&Word, &Rational)> {
    let mut best: Option<(&Word, &Rational)> = None;
    for (w, c) in x {
        if w.is_sorted() {
            continue;
        }
        match best {
            Some((b, _)) if b.len() >= w.len() => {}
            _ => best = Some((w, c)),
        }
    }
    best
}

fn run(
    lie: &LiePresentation,
    x: &TensorElement,
    strategy: Strategy,
    mut trace: Option<&mut Vec<RewriteStep>>,
) -> Result<TensorElement, AlgebraError> {
    x.check_space(lie)?;
    let mut cur = x.terms().clone();
    while let Some((w, c)) = select_redex(&cur) {
        let (w, c) = (w.clone(), c.clone());
        let p = strategy
            .pick(&w)
            .expect("non-canonical words have a descent");
        let (prefix, a, b, suffix) = w.split_at_pair(p);
        let step = swap_reduce_unchecked(lie, &w, p, &prefix, a, b, &suffix);
        if let Some(t) = trace.as_deref_mut() {
            let correction = bracket_in_context_unchecked(lie, &prefix, a, b, &suffix).scale(&c);
            t.push(RewriteStep {
                word: w.clone(),
                coeff: c.clone(),
                position: p,
                correction,
            });
        }
        cur.take(&w);
        cur.add_scaled(step.terms(), &c);
    }
    Ok(TensorElement::from_parts(lie.space(), cur))
}

/// Rewrite `x` to canonical form.
pub fn normalize(
    lie: &LiePresentation,
    x: &TensorElement,
    strategy: Strategy,
) -> Result<TensorElement, AlgebraError> {
    run(lie, x, strategy, None)
}

/// [`normalize`], also returning every rewrite in the order performed.
pub fn normalize_traced(
    lie: &LiePresentation,
    x: &TensorElement,
    strategy: Strategy,
) -> Result<(TensorElement, Vec<RewriteStep>), AlgebraError> {
    let mut steps = Vec::new();
    let out = run(lie, x, strategy, Some(&mut steps))?;
    Ok((out, steps))
}

/// Equality in the enveloping algebra: equal canonical forms under the
/// default strategy.
pub fn equal_in_enveloping(
    lie: &LiePresentation,
    x: &TensorElement,
    y: &TensorElement,
) -> Result<bool, AlgebraError> {
    let diff = x.sub(y)?;
    Ok(normalize(lie, &diff, Strategy::default())?.is_zero())
}

/// Cap on distinct intermediate elements visited by [`normalize_all_ways`].
pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

/// Every canonical form reachable from `1·w` when each step may rewrite any
/// descent of any word. A singleton result means the rewriting is confluent
/// on this input.
pub fn normalize_all_ways(
    lie: &LiePresentation,
    w: &Word,
    max_results: usize,
) -> Result<BTreeSet<TensorElement>, AlgebraError> {
    normalize_all_ways_with_limit(lie, w, max_results, DEFAULT_STATE_LIMIT)
}

pub fn normalize_all_ways_with_limit(
    lie: &LiePresentation,
    w: &Word,
    max_results: usize,
    max_states: usize,
) -> Result<BTreeSet<TensorElement>, AlgebraError> {
    let start = TensorElement::word(lie, w.clone())?;
    let mut seen: HashSet<LinComb<Word>> = HashSet::new();
    let mut stack = vec![start.terms().clone()];
    seen.insert(start.terms().clone());
    let mut results = BTreeSet::new();
    while let Some(state) = stack.pop() {
        let mut terminal = true;
        for (word, c) in &state {
            for p in word.descents() {
                terminal = false;
                let (prefix, a, b, suffix) = word.split_at_pair(p);
                let step = swap_reduce_unchecked(lie, word, p, &prefix, a, b, &suffix);
                let mut next = state.clone();
                next.take(word);
                next.add_scaled(step.terms(), c);
                if !seen.contains(&next) {
                    if seen.len() >= max_states {
                        return Err(AlgebraError::StateBudgetExceeded { limit: max_states });
                    }
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        if terminal {
            results.insert(TensorElement::from_parts(lie.space(), state));
            if results.len() > max_results {
                return Err(AlgebraError::TooManyResults { limit: max_results });
            }
        }
    }
    Ok(results)
}
