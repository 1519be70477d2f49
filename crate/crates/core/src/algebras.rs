//! Small named presentations used throughout the tests, the guide and the
//! bundled `.lie` fixtures.

use num_traits::One;

use crate::lincomb::Rational;
use crate::presentation::{LiePresentation, PresentationBuilder};

fn letters(n: usize) -> Vec<String> {
    assert!(n <= 26, "at most 26 single-letter names");
    (b'a'..).take(n).map(|c| (c as char).to_string()).collect()
}

/// `n`-dimensional abelian algebra on `a, b, c, …`.
pub fn abelian(n: usize) -> LiePresentation {
    PresentationBuilder::new(letters(n))
        .expect("letters are valid names")
        .build()
}

/// Heisenberg algebra: `x < y < z`, `[x,y] = z`, `z` central.
pub fn heisenberg() -> LiePresentation {
    let mut b = PresentationBuilder::new(["x", "y", "z"]).unwrap();
    b.bracket("x", "y", &[(Rational::one(), "z")]).unwrap();
    b.build()
}

/// `sl2` with `e < f < h`: `[e,f] = h`, `[e,h] = -2e`, `[f,h] = 2f`.
pub fn sl2() -> LiePresentation {
    let mut b = PresentationBuilder::new(["e", "f", "h"]).unwrap();
    b.bracket("e", "f", &[(Rational::one(), "h")]).unwrap();
    b.bracket("e", "h", &[(Rational::from_integer((-2).into()), "e")])
        .unwrap();
    b.bracket("f", "h", &[(Rational::from_integer(2.into()), "f")])
        .unwrap();
    b.build()
}

/// Free two-step nilpotent algebra on the given generators. Every pair
/// `g_i < g_j` gets its own central element, named by `central` in
/// lexicographic pair order; the generators precede the central elements.
pub fn free_two_step(generators: &[&str], central: &[&str]) -> LiePresentation {
    let pairs: Vec<(usize, usize)> = (0..generators.len())
        .flat_map(|i| (i + 1..generators.len()).map(move |j| (i, j)))
        .collect();
    assert_eq!(pairs.len(), central.len(), "one central name per pair");
    let names = generators.iter().chain(central).copied();
    let mut b = PresentationBuilder::new(names).unwrap();
    for ((i, j), z) in pairs.into_iter().zip(central) {
        b.bracket(generators[i], generators[j], &[(Rational::one(), z)])
            .unwrap();
    }
    b.build()
}

/// F(3,2) on `a < b < c < u < v < w`: `[a,b] = u`, `[a,c] = v`, `[b,c] = w`.
pub fn free_nilpotent_3_2() -> LiePresentation {
    free_two_step(&["a", "b", "c"], &["u", "v", "w"])
}

/// F(4,2) on `a < b < c < d < u1 < … < u6` with
/// `u1 = [a,b]`, `u2 = [a,c]`, `u3 = [a,d]`, `u4 = [b,c]`, `u5 = [b,d]`,
/// `u6 = [c,d]`.
pub fn free_nilpotent_4_2() -> LiePresentation {
    free_two_step(&["a", "b", "c", "d"], &["u1", "u2", "u3", "u4", "u5", "u6"])
}

/// F(3,2) with the extra bracket `[c,u] = a`, which breaks the Jacobi
/// identity: the defect at `(a,b,c)` is `a`.
pub fn bad_table() -> LiePresentation {
    let mut b = PresentationBuilder::new(["a", "b", "c", "u", "v", "w"]).unwrap();
    b.bracket("a", "b", &[(Rational::one(), "u")]).unwrap();
    b.bracket("a", "c", &[(Rational::one(), "v")]).unwrap();
    b.bracket("b", "c", &[(Rational::one(), "w")]).unwrap();
    b.bracket("c", "u", &[(Rational::one(), "a")]).unwrap();
    b.build()
}

/// The Jacobi-valid algebras exercised by the test suite.
pub fn lie_algebras() -> Vec<LiePresentation> {
    vec![
        abelian(4),
        heisenberg(),
        sl2(),
        free_nilpotent_3_2(),
        free_nilpotent_4_2(),
    ]
}

/// [`lie_algebras`] plus [`bad_table`].
pub fn test_suite() -> Vec<LiePresentation> {
    let mut out = lie_algebras();
    out.push(bad_table());
    out
}

/// Look up a bundled presentation by short name.
pub fn by_name(name: &str) -> Option<LiePresentation> {
    Some(match name {
        "abelian3" => abelian(3),
        "abelian4" => abelian(4),
        "heisenberg" => heisenberg(),
        "sl2" => sl2(),
        "f32" => free_nilpotent_3_2(),
        "f42" => free_nilpotent_4_2(),
        "bad" => bad_table(),
        _ => return None,
    })
}
