//! Finite-dimensional Lie algebras given by an ordered basis and exact
//! structure constants.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored. `[e_j, e_i]` is read
//! off as the negation and `[e_i, e_i]` is always zero, so antisymmetry holds
//! by construction. The Jacobi identity is *not* enforced: tables that violate
//! it are legal values, and [`LiePresentation::check_jacobi`] reports where
//! they fail.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{AlgebraError, ParseError};
use crate::lincomb::{LinComb, Rational};
use crate::syntax::{self, Token};

/// Position of a basis element in the chosen ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BasisIndex(pub usize);

impl BasisIndex {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for BasisIndex {
    fn from(i: usize) -> Self {
        BasisIndex(i)
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A degree-one element of the Lie algebra.
pub type Vector = LinComb<BasisIndex>;

/// Identifies the presentation an element was built against. Structurally
/// equal presentations share an id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpaceId(u64);

/// An ordered basis with an antisymmetric bracket table.
#[derive(Clone, Debug)]
pub struct LiePresentation {
    names: Vec<String>,
    lookup: HashMap<String, BasisIndex>,
    constants: BTreeMap<(BasisIndex, BasisIndex), Vector>,
    space: SpaceId,
}

impl PartialEq for LiePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.constants == other.constants
    }
}

impl Eq for LiePresentation {}

/// A Jacobi triple `i < j < k` together with its nonzero defect.
pub type JacobiFailure = ((BasisIndex, BasisIndex, BasisIndex), Vector);

/// Incremental construction of a [`LiePresentation`].
#[derive(Clone, Debug)]
pub struct PresentationBuilder {
    names: Vec<String>,
    lookup: HashMap<String, BasisIndex>,
    constants: BTreeMap<(BasisIndex, BasisIndex), Vector>,
}

impl PresentationBuilder {
    pub fn new<I, S>(names: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut builder = PresentationBuilder {
            names: Vec::new(),
            lookup: HashMap::new(),
            constants: BTreeMap::new(),
        };
        for name in names {
            let name = name.into();
            if !syntax::is_identifier(&name) {
                return Err(ParseError::InvalidName(name));
            }
            if builder.lookup.contains_key(&name) {
                return Err(ParseError::DuplicateName(name));
            }
            builder
                .lookup
                .insert(name.clone(), BasisIndex(builder.names.len()));
            builder.names.push(name);
        }
        if builder.names.is_empty() {
            return Err(ParseError::EmptyBasis);
        }
        Ok(builder)
    }

    fn resolve(&self, name: &str) -> Result<BasisIndex, ParseError> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| ParseError::UnknownName(name.to_string()))
    }

    /// Set `[x, y] = Σ c · name`. Each pair may be given once, in either order.
    pub fn bracket(
        &mut self,
        x: &str,
        y: &str,
        value: &[(Rational, &str)],
    ) -> Result<&mut Self, ParseError> {
        let i = self.resolve(x)?;
        let j = self.resolve(y)?;
        let mut v = Vector::zero();
        for (c, name) in value {
            v.add_term(self.resolve(name)?, c.clone());
        }
        self.set(i, j, v)?;
        Ok(self)
    }

    fn set(&mut self, i: BasisIndex, j: BasisIndex, value: Vector) -> Result<(), ParseError> {
        if i == j {
            return Err(ParseError::SelfBracket(self.names[i.0].clone()));
        }
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.neg())
        };
        if self.constants.contains_key(&key) {
            return Err(ParseError::DuplicatePair(
                self.names[i.0].clone(),
                self.names[j.0].clone(),
            ));
        }
        self.constants.insert(key, value);
        Ok(())
    }

    pub fn build(self) -> LiePresentation {
        let constants: BTreeMap<_, _> = self
            .constants
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let mut hasher = DefaultHasher::new();
        self.names.hash(&mut hasher);
        constants.hash(&mut hasher);
        LiePresentation {
            names: self.names,
            lookup: self.lookup,
            constants,
            space: SpaceId(hasher.finish()),
        }
    }
}

impl LiePresentation {
    /// Parse the line-oriented `.lie` format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut builder: Option<PresentationBuilder> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: ParseError| e.at_line(lineno + 1);
            let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match directive {
                "basis" => {
                    if builder.is_some() {
                        return Err(at(ParseError::RepeatedBasis));
                    }
                    builder = Some(PresentationBuilder::new(rest.split_whitespace()).map_err(at)?);
                }
                "bracket" => {
                    let b = builder
                        .as_mut()
                        .ok_or_else(|| at(ParseError::BasisNotFirst))?;
                    parse_bracket_line(b, rest).map_err(at)?;
                }
                other => return Err(at(ParseError::UnknownDirective(other.to_string()))),
            }
        }
        builder
            .map(PresentationBuilder::build)
            .ok_or(ParseError::MissingBasis)
    }

    /// Serialize to the `.lie` format; `parse` of the output reproduces `self`.
    pub fn to_lie_string(&self) -> String {
        let mut out = format!("basis {}\n", self.names.join(" "));
        for ((i, j), v) in &self.constants {
            let terms: Vec<String> = v
                .iter()
                .map(|(k, c)| format!("{} {}", c, self.names[k.0]))
                .collect();
            out.push_str(&format!(
                "bracket {} {} = {}\n",
                self.names[i.0],
                self.names[j.0],
                terms.join(" + ")
            ));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: BasisIndex) -> &str {
        &self.names[i.0]
    }

    pub fn index_of(&self, name: &str) -> Option<BasisIndex> {
        self.lookup.get(name).copied()
    }

    pub fn basis(&self) -> impl Iterator<Item = BasisIndex> {
        (0..self.dim()).map(BasisIndex)
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    /// Stored brackets `[e_i, e_j]` with `i < j`, zero entries omitted.
    pub fn constants(&self) -> impl Iterator<Item = (&(BasisIndex, BasisIndex), &Vector)> {
        self.constants.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    pub fn check_index(&self, i: BasisIndex) -> Result<(), AlgebraError> {
        if i.0 < self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::IndexOutOfRange {
                index: i.0,
                dim: self.dim(),
            })
        }
    }

    /// `[e_i, e_j]` as a sign and a borrowed table entry. `None` means zero.
    pub(crate) fn bracket_entry(&self, i: BasisIndex, j: BasisIndex) -> Option<(bool, &Vector)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => None,
            Less => self.constants.get(&(i, j)).map(|v| (false, v)),
            Greater => self.constants.get(&(j, i)).map(|v| (true, v)),
        }
    }

    /// `[e_i, e_j]` expanded in the basis.
    pub fn bracket(&self, i: BasisIndex, j: BasisIndex) -> Result<Vector, AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(match self.bracket_entry(i, j) {
            None => Vector::zero(),
            Some((false, v)) => v.clone(),
            Some((true, v)) => v.neg(),
        })
    }

    /// Bilinear extension of the bracket to arbitrary vectors.
    pub fn bracket_vectors(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x {
            for (j, b) in y {
                if let Some((negate, v)) = self.bracket_entry(*i, *j) {
                    let c = if negate { -(a * b) } else { a * b };
                    out.add_scaled(v, &c);
                }
            }
        }
        out
    }

    /// `[e_i,[e_j,e_k]] + [[e_i,e_k],e_j] + [e_k,[e_i,e_j]]`.
    pub fn jacobi_defect(
        &self,
        i: BasisIndex,
        j: BasisIndex,
        k: BasisIndex,
    ) -> Result<Vector, AlgebraError> {
        for x in [i, j, k] {
            self.check_index(x)?;
        }
        let unit = |x: BasisIndex| Vector::single(x, Rational::one());
        let (ei, ej, ek) = (unit(i), unit(j), unit(k));
        let mut out = self.bracket_vectors(&ei, &self.bracket_vectors(&ej, &ek));
        out = out.add(&self.bracket_vectors(&self.bracket_vectors(&ei, &ek), &ej));
        out = out.add(&self.bracket_vectors(&ek, &self.bracket_vectors(&ei, &ej)));
        Ok(out)
    }

    /// Every triple `i < j < k` whose Jacobi defect is nonzero, in
    /// lexicographic order. Empty iff the table defines a Lie algebra.
    pub fn check_jacobi(&self) -> Vec<JacobiFailure> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (i, j, k) = (BasisIndex(i), BasisIndex(j), BasisIndex(k));
                    let d = self.jacobi_defect(i, j, k).expect("indices in range");
                    if !d.is_zero() {
                        out.push(((i, j, k), d));
                    }
                }
            }
        }
        out
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.check_jacobi().is_empty()
    }

    /// Render a vector as `c name + c name`, or `0`.
    pub fn format_vector(&self, v: &Vector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (k, c)) in v.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    out.push_str("- ");
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(&format!("{} {}", c.abs(), self.names[k.0]));
        }
        out
    }
}

fn parse_bracket_line(builder: &mut PresentationBuilder, rest: &str) -> Result<(), ParseError> {
    let tokens = syntax::tokenize(rest)?;
    let (x, y) = match tokens.as_slice() {
        [Token::Ident(x), Token::Ident(y), Token::Equals, ..] => (x.clone(), y.clone()),
        _ => {
            return Err(ParseError::Unexpected {
                expected: "`bracket <name> <name> = <terms>`",
                found: rest.to_string(),
            })
        }
    };
    let rhs = &tokens[3..];
    let mut value = Vec::new();
    let is_zero_literal = matches!(rhs, [Token::Number(q)] if num_traits::Zero::is_zero(q));
    if !is_zero_literal {
        for term in syntax::parse_terms(rhs)? {
            match term.names.as_slice() {
                [name] => value.push((term.coeff, name.as_str().to_owned())),
                _ => {
                    let shown = if term.names.is_empty() {
                        term.coeff.to_string()
                    } else {
                        term.names.join(" ")
                    };
                    return Err(ParseError::NotLinear(shown));
                }
            }
        }
    }
    let borrowed: Vec<(Rational, &str)> =
        value.iter().map(|(c, n)| (c.clone(), n.as_str())).collect();
    builder.bracket(&x, &y, &borrowed)?;
    Ok(())
}

impl fmt::Display for LiePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_lie_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras;
    use crate::lincomb::rational;

    fn idx(l: &LiePresentation, name: &str) -> BasisIndex {
        l.index_of(name).unwrap()
    }

    #[test]
    fn abelian_from_text() {
        let l = LiePresentation::parse("basis a b c\n").unwrap();
        assert_eq!(l.dim(), 3);
        assert!(l.is_abelian());
        assert_eq!(l.names(), ["a", "b", "c"]);
    }

    #[test]
    fn sl2_from_text() {
        let l = LiePresentation::parse(
            "basis e f h\nbracket e f = h\nbracket e h = -2 e\nbracket f h = 2 f",
        )
        .unwrap();
        assert_eq!(l, algebras::sl2());
        assert!(l.check_jacobi().is_empty());
        let (e, f) = (idx(&l, "e"), idx(&l, "f"));
        let h = idx(&l, "h");
        assert_eq!(l.bracket(e, f).unwrap(), Vector::single(h, rational(1, 1)));
        assert_eq!(l.bracket(f, e).unwrap(), Vector::single(h, rational(-1, 1)));
        assert!(l.bracket(e, e).unwrap().is_zero());
    }

    #[test]
    fn parse_errors() {
        let cases: &[(&str, ParseError)] = &[
            (
                "basis a b\nbracket a a = b",
                ParseError::SelfBracket("a".into()),
            ),
            ("basis a a", ParseError::DuplicateName("a".into())),
            (
                "basis a b\nbracket a q = b",
                ParseError::UnknownName("q".into()),
            ),
            (
                "basis a b\nbracket a b = q",
                ParseError::UnknownName("q".into()),
            ),
            (
                "basis a b c\nbracket a b = c\nbracket b a = c",
                ParseError::DuplicatePair("b".into(), "a".into()),
            ),
            (
                "basis a b\nbracket a b = 1/0 b",
                ParseError::MalformedRational("1/0".into()),
            ),
            (
                "basis a b\nbracket a b = 1.5 b",
                ParseError::MalformedRational("1.5".into()),
            ),
            ("# nothing\n", ParseError::MissingBasis),
            ("bracket a b = 0\nbasis a b", ParseError::BasisNotFirst),
            (
                "basis a b\nbracket a b = a b",
                ParseError::NotLinear("a b".into()),
            ),
            ("basis a 1b", ParseError::InvalidName("1b".into())),
        ];
        for (text, expected) in cases {
            let err = LiePresentation::parse(text).unwrap_err();
            assert_eq!(err.root(), expected, "{text:?}");
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = LiePresentation::parse("# header\nbasis a b\n\nbracket a a = b").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 4, .. }));
        assert!(err.to_string().starts_with("line 4:"));
    }

    #[test]
    fn zero_and_comments() {
        let l =
            LiePresentation::parse("basis x y # two\nbracket x y = 0 # explicit zero\n").unwrap();
        assert!(l.is_abelian());
    }

    #[test]
    fn reversed_pair_is_negated() {
        let l = LiePresentation::parse("basis x y z\nbracket y x = z").unwrap();
        let (x, y, z) = (idx(&l, "x"), idx(&l, "y"), idx(&l, "z"));
        assert_eq!(l.bracket(x, y).unwrap(), Vector::single(z, rational(-1, 1)));
    }

    #[test]
    fn out_of_range() {
        let l = algebras::sl2();
        assert_eq!(
            l.bracket(BasisIndex(0), BasisIndex(3)),
            Err(AlgebraError::IndexOutOfRange { index: 3, dim: 3 })
        );
        assert!(l
            .jacobi_defect(BasisIndex(7), BasisIndex(0), BasisIndex(1))
            .is_err());
    }

    #[test]
    fn antisymmetry_exhaustive() {
        for l in algebras::test_suite() {
            for i in l.basis() {
                assert!(l.bracket(i, i).unwrap().is_zero());
                for j in l.basis() {
                    let sum = l.bracket(i, j).unwrap().add(&l.bracket(j, i).unwrap());
                    assert!(sum.is_zero());
                }
            }
        }
    }

    #[test]
    fn jacobi_reports() {
        let sl2 = algebras::sl2();
        let (e, f, h) = (idx(&sl2, "e"), idx(&sl2, "f"), idx(&sl2, "h"));
        assert!(sl2.jacobi_defect(e, f, h).unwrap().is_zero());
        assert!(algebras::abelian(4).check_jacobi().is_empty());

        let bad = algebras::bad_table();
        let (a, b, c) = (idx(&bad, "a"), idx(&bad, "b"), idx(&bad, "c"));
        assert_eq!(
            bad.jacobi_defect(a, b, c).unwrap(),
            Vector::single(a, rational(1, 1))
        );
        let failures = bad.check_jacobi();
        assert_eq!(failures[0], ((a, b, c), Vector::single(a, rational(1, 1))));
        // [c,u] = a also breaks (b,c,u): [b,[c,u]] = [b,a] = -u.
        let u = idx(&bad, "u");
        assert_eq!(
            failures[1..],
            [((b, c, u), Vector::single(u, rational(-1, 1)))]
        );
    }

    #[test]
    fn defect_is_alternating() {
        for l in algebras::test_suite().into_iter().filter(|l| l.dim() <= 6) {
            for i in l.basis() {
                for j in l.basis() {
                    for k in l.basis() {
                        let d = l.jacobi_defect(i, j, k).unwrap();
                        assert_eq!(d.neg(), l.jacobi_defect(j, i, k).unwrap());
                        assert_eq!(d.neg(), l.jacobi_defect(i, k, j).unwrap());
                        assert_eq!(d.neg(), l.jacobi_defect(k, j, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn lie_text_round_trip() {
        for l in algebras::test_suite() {
            let text = l.to_lie_string();
            let back = LiePresentation::parse(&text).unwrap();
            assert_eq!(back, l);
            assert_eq!(back.space(), l.space());
            assert_eq!(back.to_lie_string(), text);
        }
    }

    #[test]
    fn vector_formatting() {
        let l = algebras::sl2();
        let v: Vector = [
            (idx(&l, "e"), rational(-2, 1)),
            (idx(&l, "h"), rational(1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(l.format_vector(&v), "- 2 e + 1/2 h");
        assert_eq!(l.format_vector(&Vector::zero()), "0");
    }
}
