//! The expression grammar used on the command line.
//!
//! ```text
//! expr     := [sign] term (sign term)*
//! term     := rational name* | name+
//! rational := integer ['/' positive-integer]
//! sign     := '+' | '-'
//! ```
//!
//! Names are whitespace-separated basis names, so `c b a` is the word
//! `c ⊗ b ⊗ a`. A bare rational denotes a multiple of the empty word.
//! [`format_element`] prints every coefficient and sign explicitly, in
//! canonical order, and its output parses back to the same element.

use num_traits::Signed;

use crate::error::ParseError;
use crate::presentation::LiePresentation;
use crate::syntax;
use crate::tensor::{TensorElement, Word};

pub fn parse_expression(lie: &LiePresentation, text: &str) -> Result<TensorElement, ParseError> {
    let tokens = syntax::tokenize(text)?;
    let mut out = TensorElement::zero(lie);
    for term in syntax::parse_terms(&tokens)? {
        let letters = term
            .names
            .iter()
            .map(|n| {
                lie.index_of(n)
                    .ok_or_else(|| ParseError::UnknownName(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.terms_mut().add_term(Word::new(letters), term.coeff);
    }
    Ok(out)
}

/// Canonical text: shortest words first, then lexicographic; `0` for zero.
pub fn format_element(lie: &LiePresentation, x: &TensorElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (w, c)) in x.iter().enumerate() {
        if n == 0 {
            if c.is_negative() {
                out.push_str("- ");
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&c.abs().to_string());
        if !w.is_empty() {
            out.push(' ');
            out.push_str(&w.display(lie));
        }
    }
    out
}
