//! Tokenizer and term parser shared by the `.lie` format and the expression
//! grammar.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::lincomb::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Plus,
    Minus,
    Equals,
    Number(Rational),
    Ident(String),
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Equals => "`=`".into(),
            Token::Number(q) => format!("number `{q}`"),
            Token::Ident(s) => format!("name `{s}`"),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '=' => {
                out.push(Token::Equals);
                i += 1;
            }
            c if c.is_ascii_digit() || c == '/' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || matches!(chars[i], '/' | '.' | '_'))
                {
                    i += 1;
                }
                let raw: String = chars[start..i].iter().collect();
                out.push(Token::Number(parse_rational(&raw)?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(ParseError::UnexpectedChar(other)),
        }
    }
    Ok(out)
}

/// `p` or `p/q` with `p` a nonnegative integer and `q` a positive integer.
pub(crate) fn parse_rational(raw: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::MalformedRational(raw.to_string());
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match raw.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (raw, None),
    };
    if !digits(num) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// One signed monomial `[sign]* [rational] name*` as parsed from tokens.
#[derive(Debug)]
pub(crate) struct RawTerm {
    pub coeff: Rational,
    pub names: Vec<String>,
}

/// Parse `term (('+'|'-') term)*` with an optional leading sign. Each term is
/// `[rational] name*`; a term with neither part is an error.
pub(crate) fn parse_terms(tokens: &[Token]) -> Result<Vec<RawTerm>, ParseError> {
    let mut terms = Vec::new();
    let mut pos = 0;
    if tokens.is_empty() {
        return Err(ParseError::EmptyTerm);
    }
    while pos < tokens.len() {
        let mut negative = false;
        let mut saw_sign = false;
        while let Some(tok @ (Token::Plus | Token::Minus)) = tokens.get(pos) {
            if *tok == Token::Minus {
                negative = !negative;
            }
            saw_sign = true;
            pos += 1;
        }
        if !terms.is_empty() && !saw_sign {
            return Err(ParseError::Unexpected {
                expected: "`+` or `-` between terms",
                found: tokens[pos].describe(),
            });
        }
        let mut coeff = Rational::one();
        let mut has_coeff = false;
        if let Some(Token::Number(q)) = tokens.get(pos) {
            coeff = q.clone();
            has_coeff = true;
            pos += 1;
        }
        let mut names = Vec::new();
        while let Some(Token::Ident(name)) = tokens.get(pos) {
            names.push(name.clone());
            pos += 1;
        }
        if !has_coeff && names.is_empty() {
            return match tokens.get(pos) {
                Some(tok) => Err(ParseError::Unexpected {
                    expected: "a term",
                    found: tok.describe(),
                }),
                None => Err(ParseError::EmptyTerm),
            };
        }
        if let Some(tok @ (Token::Number(_) | Token::Equals)) = tokens.get(pos) {
            return Err(ParseError::Unexpected {
                expected: "`+`, `-` or end of expression",
                found: tok.describe(),
            });
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(RawTerm { coeff, names });
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::rational;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("7").unwrap(), rational(7, 1));
        assert_eq!(parse_rational("6/4").unwrap(), rational(3, 2));
        for bad in ["1/0", "1/", "/2", "1.5", "2x", "1/2/3"] {
            assert!(
                matches!(parse_rational(bad), Err(ParseError::MalformedRational(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn signs_and_terms() {
        let toks = tokenize("2/3 a b - 1 c a").unwrap();
        let terms = parse_terms(&toks).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].coeff, rational(2, 3));
        assert_eq!(terms[0].names, ["a", "b"]);
        assert_eq!(terms[1].coeff, rational(-1, 1));
        assert_eq!(terms[1].names, ["c", "a"]);
    }

    #[test]
    fn juxtaposed_terms_need_an_operator() {
        let toks = tokenize("a 2 b").unwrap();
        assert!(parse_terms(&toks).is_err());
        let toks = tokenize("a +").unwrap();
        assert_eq!(parse_terms(&toks).unwrap_err(), ParseError::EmptyTerm);
    }

    #[test]
    fn identifiers() {
        assert!(is_identifier("u1"));
        assert!(is_identifier("_x"));
        assert!(!is_identifier("1u"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("a-b"));
    }
}
