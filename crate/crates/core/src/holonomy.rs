//! Transport of a monomial around walks in the symmetric group.
//!
//! The state is a leading word `top` plus a `remainder` of strictly shorter
//! words. Swapping positions `p, p+1` of `top` (in either direction) uses
//! `x ⊗ y = y ⊗ x + [x, y]`, so the sum `top + remainder` is unchanged in the
//! enveloping algebra. Remainder words are never moved again.
//!
//! Around a loop the top word comes back to where it started, and what is
//! left in the remainder is the holonomy. It must straighten to zero if the
//! rewriting is consistent.

use thiserror::Error;

use crate::coxeter::{self, CoxeterError, GeneratorWord};
use crate::error::AlgebraError;
use crate::normalize::{normalize, Strategy};
use crate::presentation::{BasisIndex, JacobiFailure, LiePresentation, Vector};
use crate::tensor::{bracket_in_context_unchecked, TensorElement, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HolonomyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("word has length {word} but the loop lives in S_{n}")]
    LengthMismatch { word: usize, n: usize },
    #[error("positions {p} and {q} are adjacent; that is a hexagon, not a square")]
    NotASquare { p: usize, q: usize },
    #[error("the table violates the Jacobi identity at {} triple(s); use hexagon_defect to locate them", .0.len())]
    NotALieAlgebra(Vec<JacobiFailure>),
}

/// Leading word and frozen lower-order terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportState {
    pub top: Word,
    pub remainder: TensorElement,
    pub steps: usize,
}

impl TransportState {
    pub fn new(lie: &LiePresentation, top: Word) -> Result<Self, AlgebraError> {
        for &i in top.letters() {
            lie.check_index(i)?;
        }
        Ok(TransportState {
            top,
            remainder: TensorElement::zero(lie),
            steps: 0,
        })
    }

    /// `top + remainder` as one element.
    pub fn total(&self) -> TensorElement {
        let mut out = self.remainder.clone();
        out.terms_mut()
            .add_term(self.top.clone(), num_traits::One::one());
        out
    }
}

/// Swap positions `p`, `p+1` of the top word and record the bracket term.
pub fn transport_step(
    lie: &LiePresentation,
    st: &TransportState,
    p: usize,
) -> Result<TransportState, AlgebraError> {
    st.top.check_position(p)?;
    st.remainder.check_space(lie)?;
    let (prefix, x, y, suffix) = st.top.split_at_pair(p);
    let correction = bracket_in_context_unchecked(lie, &prefix, x, y, &suffix);
    Ok(TransportState {
        top: st.top.swapped(p),
        remainder: st.remainder.add(&correction)?,
        steps: st.steps + 1,
    })
}

/// Transport along every letter of `g` in order.
pub fn transport_path(
    lie: &LiePresentation,
    w: &Word,
    g: &GeneratorWord,
) -> Result<TransportState, HolonomyError> {
    if w.len() != g.n() {
        return Err(HolonomyError::LengthMismatch {
            word: w.len(),
            n: g.n(),
        });
    }
    let mut st = TransportState::new(lie, w.clone())?;
    for &p in g.letters() {
        st = transport_step(lie, &st, p)?;
    }
    Ok(st)
}

/// Transport `w` once around the identity loop `g` and return the remainder.
pub fn transport_loop(
    lie: &LiePresentation,
    w: &Word,
    g: &GeneratorWord,
) -> Result<TensorElement, HolonomyError> {
    if !coxeter::is_identity_loop(g) {
        return Err(CoxeterError::NotALoop.into());
    }
    let st = transport_path(lie, w, g)?;
    assert_eq!(&st.top, w, "an identity loop returns the top word");
    Ok(st.remainder)
}

/// Straightened holonomy of `w` around `g`; zero when consistent.
pub fn loop_holonomy(
    lie: &LiePresentation,
    w: &Word,
    g: &GeneratorWord,
) -> Result<TensorElement, HolonomyError> {
    let r = transport_loop(lie, w, g)?;
    Ok(normalize(lie, &r, Strategy::default())?)
}

/// Take `(k, j, i)` to `(i, j, k)` along `[1,2,1]` and along `[2,1,2]`, and
/// straighten the difference of the two remainders.
///
/// The degree-two parts cancel in pairs up to terms `X ⊗ v - v ⊗ X`, each of
/// which straightens to `[X, v]`, so the result is exactly the Jacobi defect
/// of `(i, j, k)` for any antisymmetric table.
pub fn hexagon_defect(
    lie: &LiePresentation,
    i: BasisIndex,
    j: BasisIndex,
    k: BasisIndex,
) -> Result<Vector, HolonomyError> {
    let w = Word::new(vec![k, j, i]);
    let one = transport_path(lie, &w, &GeneratorWord::new(3, vec![1, 2, 1])?)?;
    let two = transport_path(lie, &w, &GeneratorWord::new(3, vec![2, 1, 2])?)?;
    debug_assert_eq!(one.top, two.top);
    let diff = one.remainder.sub(&two.remainder)?;
    let nf = normalize(lie, &diff, Strategy::default())?;
    let mut out = Vector::zero();
    for (word, c) in nf.iter() {
        match word.letters() {
            [x] => out.add_term(*x, c.clone()),
            _ => unreachable!("hexagon defect has degree one, found {word}"),
        }
    }
    Ok(out)
}

/// Remainders of `w` along `[p, q]` and along `[q, p]` for commuting
/// transpositions `|p - q| >= 2`.
pub fn square_residuals(
    lie: &LiePresentation,
    w: &Word,
    p: usize,
    q: usize,
) -> Result<(TensorElement, TensorElement), HolonomyError> {
    if p.abs_diff(q) < 2 {
        return Err(HolonomyError::NotASquare { p, q });
    }
    let n = w.len();
    let first = transport_path(lie, w, &GeneratorWord::new(n, vec![p, q])?)?;
    let second = transport_path(lie, w, &GeneratorWord::new(n, vec![q, p])?)?;
    debug_assert_eq!(first.top, second.top);
    Ok((first.remainder, second.remainder))
}

/// A word/loop pair whose holonomy did not vanish.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub word: Word,
    pub lp: GeneratorWord,
    pub holonomy: TensorElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub checked: usize,
    /// Sorted by word, then loop.
    pub failures: Vec<Counterexample>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.failures.first()
    }
}

/// Transport every sampled word around every sampled loop and check that the
/// straightened holonomy vanishes. Refuses tables that fail Jacobi.
pub fn check_pbw_consistency(
    lie: &LiePresentation,
    n: usize,
    words: &[Word],
    loops: &[GeneratorWord],
) -> Result<ConsistencyReport, HolonomyError> {
    let failures = lie.check_jacobi();
    if !failures.is_empty() {
        return Err(HolonomyError::NotALieAlgebra(failures));
    }
    use rayon::prelude::*;
    let jobs: Vec<(&Word, &GeneratorWord)> = words
        .iter()
        .flat_map(|w| loops.iter().map(move |g| (w, g)))
        .collect();
    for w in words {
        if w.len() != n {
            return Err(HolonomyError::LengthMismatch { word: w.len(), n });
        }
    }
    for g in loops {
        if g.n() != n {
            return Err(HolonomyError::LengthMismatch { word: n, n: g.n() });
        }
    }
    let results: Vec<Result<Option<Counterexample>, HolonomyError>> = jobs
        .par_iter()
        .map(|(w, g)| {
            let h = loop_holonomy(lie, w, g)?;
            Ok((!h.is_zero()).then(|| Counterexample {
                word: (*w).clone(),
                lp: (*g).clone(),
                holonomy: h,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for r in results {
        if let Some(c) = r? {
            failures.push(c);
        }
    }
    failures.sort();
    Ok(ConsistencyReport {
        checked: jobs.len(),
        failures,
    })
}
