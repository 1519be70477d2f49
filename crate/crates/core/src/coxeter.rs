//! The symmetric group `S_n` as a Coxeter group generated by the adjacent
//! transpositions `s_1, …, s_{n-1}`.
//!
//! A [`GeneratorWord`] is a walk through the Cayley graph: each letter `p`
//! swaps the entries in positions `p` and `p+1` of the current arrangement.
//! Words that return to the start are loops, and every loop can be shrunk to
//! nothing by three local moves:
//!
//! * `Cancel`: delete a backtrack `s_p s_p`;
//! * `Commute`: `s_i s_j = s_j s_i` for `|i - j| >= 2` (a square cell);
//! * `Braid`: `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}` (a hexagonal cell).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("need n >= {min}, got n = {n}")]
    RankTooSmall { n: usize, min: usize },
    #[error("n = {n} is too large for this operation (max {max})")]
    RankTooLarge { n: usize, max: usize },
    #[error("generator {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("the word does not evaluate to the identity")]
    NotALoop,
    #[error("{mv} is not applicable to the word")]
    InapplicableMove { mv: Move },
    #[error("step {step}: {mv} is not applicable")]
    ReplayFailed { step: usize, mv: Move },
    #[error("braid-class search exceeded {limit} words")]
    SearchBudgetExceeded { limit: usize },
    #[error("pair ({i}, {j}) invalid for S_{n}: need 1 <= i < j <= {max}", max = n - 1)]
    InvalidPair { i: usize, j: usize, n: usize },
    #[error("`{0}` and `{1}` are not related by an adjacent transposition")]
    NotAdjacent(String, String),
    #[error("cannot parse `{0}` as a generator index")]
    BadToken(String),
}

/// A permutation in one-line notation: entry `k` is the item in slot `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_one_line(entries: Vec<usize>) -> Result<Self, CoxeterError> {
        let n = entries.len();
        let mut seen = vec![false; n];
        for &e in &entries {
            if e >= n || seen[e] {
                return Err(CoxeterError::NotAPermutation(n));
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &e)| k == e)
    }

    /// Right multiplication by `s_p`: exchange slots `p` and `p+1` (1-based).
    pub fn swap_slots(&mut self, p: usize) {
        self.0.swap(p - 1, p);
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &e) in self.0.iter().enumerate() {
            inv[e] = k;
        }
        Permutation(inv)
    }

    /// The arrangement of letters `a, b, c, …` this permutation describes,
    /// e.g. `"bacd"`.
    pub fn arrangement(&self) -> String {
        self.0.iter().map(|&e| (b'a' + e as u8) as char).collect()
    }

    pub fn from_arrangement(s: &str) -> Result<Self, CoxeterError> {
        let entries: Option<Vec<usize>> = s
            .chars()
            .map(|c| c.is_ascii_lowercase().then(|| (c as u8 - b'a') as usize))
            .collect();
        Self::from_one_line(entries.ok_or(CoxeterError::NotAPermutation(s.chars().count()))?)
    }

    /// A shortest generator word evaluating to `self` (bubble sort).
    pub fn reduced_word(&self) -> GeneratorWord {
        let mut cur = self.0.clone();
        let mut letters = Vec::new();
        // sorting cur by adjacent swaps records self = s_{k_m} … s_{k_1}
        while let Some(p) = (1..cur.len()).find(|&p| cur[p - 1] > cur[p]) {
            cur.swap(p - 1, p);
            letters.push(p);
        }
        letters.reverse();
        GeneratorWord {
            n: self.n(),
            letters,
        }
    }

    /// Number of inversions, i.e. the Coxeter length.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for (i, a) in self.0.iter().enumerate() {
            count += self.0[i + 1..].iter().filter(|b| a > b).count();
        }
        count
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.arrangement())
    }
}

/// A word in the adjacent transpositions of `S_n`; letter `p` is `s_p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GeneratorWord {
    n: usize,
    letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::RankTooSmall { n, min: 2 });
        }
        if let Some(&bad) = letters.iter().find(|&&p| p == 0 || p >= n) {
            return Err(CoxeterError::GeneratorOutOfRange {
                index: bad,
                max: n - 1,
            });
        }
        Ok(GeneratorWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        GeneratorWord {
            n,
            letters: Vec::new(),
        }
    }

    /// Whitespace-separated indices, e.g. `"1 2 1 2 1 2"`.
    pub fn parse(n: usize, text: &str) -> Result<Self, CoxeterError> {
        let letters = text
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| CoxeterError::BadToken(t.to_string())))
            .collect::<Result<Vec<usize>, _>>()?;
        Self::new(n, letters)
    }

    /// The walk visiting the given arrangements in order, e.g.
    /// `["abc", "bac", "bca"]` gives `[1, 2]`.
    pub fn from_arrangements(path: &[&str]) -> Result<Self, CoxeterError> {
        let n = path.first().map_or(0, |s| s.chars().count());
        let mut letters = Vec::new();
        for pair in path.windows(2) {
            let (x, y) = (
                Permutation::from_arrangement(pair[0])?,
                Permutation::from_arrangement(pair[1])?,
            );
            let diff: Vec<usize> = (0..n).filter(|&k| x.0.get(k) != y.0.get(k)).collect();
            let step = match diff.as_slice() {
                [k, l] if *l == k + 1 && x.0[*k] == y.0[*l] && x.0[*l] == y.0[*k] => k + 1,
                _ => return Err(CoxeterError::NotAdjacent(pair[0].into(), pair[1].into())),
            };
            letters.push(step);
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        GeneratorWord { n: self.n, letters }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GeneratorWord { n: self.n, letters }
    }

    /// The arrangements visited, starting from the identity.
    pub fn walk(&self) -> Vec<Permutation> {
        let mut cur = Permutation::identity(self.n);
        let mut out = vec![cur.clone()];
        for &p in &self.letters {
            cur.swap_slots(p);
            out.push(cur.clone());
        }
        out
    }

    fn has_adjacent_equal(&self) -> Option<usize> {
        self.letters
            .windows(2)
            .position(|w| w[0] == w[1])
            .map(|k| k + 1)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Product of the transpositions in order; the empty word is the identity.
pub fn evaluate(g: &GeneratorWord) -> Permutation {
    let mut cur = Permutation::identity(g.n);
    for &p in &g.letters {
        cur.swap_slots(p);
    }
    cur
}

pub fn is_identity_loop(g: &GeneratorWord) -> bool {
    evaluate(g).is_identity()
}

/// A local move at a 1-based position of a generator word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "move", content = "at", rename_all = "lowercase")]
pub enum Move {
    /// Delete `s_p s_p` starting at the position.
    Cancel(usize),
    /// Swap `s_i s_j`, `|i - j| >= 2`, starting at the position.
    Commute(usize),
    /// Replace `s_i s_{i±1} s_i` by `s_{i±1} s_i s_{i±1}` starting at the position.
    Braid(usize),
}

impl Move {
    pub fn position(self) -> usize {
        match self {
            Move::Cancel(k) | Move::Commute(k) | Move::Braid(k) => k,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Cancel(k) => write!(f, "cancel@{k}"),
            Move::Commute(k) => write!(f, "commute@{k}"),
            Move::Braid(k) => write!(f, "braid@{k}"),
        }
    }
}

impl FromStr for Move {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoxeterError::BadToken(s.to_string());
        let (kind, pos) = s.trim().split_once('@').ok_or_else(bad)?;
        let pos: usize = pos.parse().map_err(|_| bad())?;
        match kind {
            "cancel" => Ok(Move::Cancel(pos)),
            "commute" => Ok(Move::Commute(pos)),
            "braid" => Ok(Move::Braid(pos)),
            _ => Err(bad()),
        }
    }
}

/// Apply one move. `evaluate` is unchanged by every applicable move.
pub fn apply_move(g: &GeneratorWord, mv: Move) -> Result<GeneratorWord, CoxeterError> {
    let w = &g.letters;
    let k = mv.position();
    let inapplicable = Err(CoxeterError::InapplicableMove { mv });
    if k == 0 {
        return inapplicable;
    }
    let at = k - 1;
    let mut letters = w.clone();
    match mv {
        Move::Cancel(_) => {
            if at + 1 >= w.len() || w[at] != w[at + 1] {
                return inapplicable;
            }
            letters.drain(at..at + 2);
        }
        Move::Commute(_) => {
            if at + 1 >= w.len() || w[at].abs_diff(w[at + 1]) < 2 {
                return inapplicable;
            }
            letters.swap(at, at + 1);
        }
        Move::Braid(_) => {
            if at + 2 >= w.len() {
                return inapplicable;
            }
            let (x, y, z) = (w[at], w[at + 1], w[at + 2]);
            if x != z || x.abs_diff(y) != 1 {
                return inapplicable;
            }
            letters[at] = y;
            letters[at + 1] = x;
            letters[at + 2] = y;
        }
    }
    Ok(GeneratorWord { n: g.n, letters })
}

/// A sequence of moves to be applied in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MoveCertificate {
    pub moves: Vec<Move>,
}

impl MoveCertificate {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// One move per line: `cancel@k`, `commute@k` or `braid@k`.
    pub fn to_lines(&self) -> String {
        self.moves.iter().map(|m| format!("{m}\n")).collect()
    }

    pub fn parse(text: &str) -> Result<Self, CoxeterError> {
        let moves = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        Ok(MoveCertificate { moves })
    }
}

/// Apply every move of `cert` in turn. Failing steps are reported 1-based.
pub fn replay(g: &GeneratorWord, cert: &MoveCertificate) -> Result<GeneratorWord, CoxeterError> {
    let mut cur = g.clone();
    for (step, &mv) in cert.moves.iter().enumerate() {
        cur =
            apply_move(&cur, mv).map_err(|_| CoxeterError::ReplayFailed { step: step + 1, mv })?;
    }
    Ok(cur)
}

/// Default cap on words visited by one braid-class search.
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

/// Contract an identity loop to the empty word.
pub fn contract_loop(g: &GeneratorWord) -> Result<MoveCertificate, CoxeterError> {
    contract_loop_with_budget(g, DEFAULT_SEARCH_BUDGET)
}

/// Cancel the leftmost backtrack while one exists; otherwise breadth-first
/// search the words reachable by `Commute`/`Braid` for one that has a
/// backtrack. A non-reduced word always reaches one, so each round shortens
/// the loop by two.
pub fn contract_loop_with_budget(
    g: &GeneratorWord,
    budget: usize,
) -> Result<MoveCertificate, CoxeterError> {
    if !is_identity_loop(g) {
        return Err(CoxeterError::NotALoop);
    }
    let mut cert = MoveCertificate::default();
    let mut cur = g.clone();
    while !cur.is_empty() {
        if let Some(k) = cur.has_adjacent_equal() {
            cert.moves.push(Move::Cancel(k));
            cur = apply_move(&cur, Move::Cancel(k))?;
            continue;
        }
        let (path, reached) = search_backtrack(&cur, budget)?;
        cert.moves.extend(path);
        cur = reached;
    }
    Ok(cert)
}

/// Length-preserving moves applicable to `g`, ordered by resulting word.
fn braid_class_neighbours(g: &GeneratorWord) -> Vec<(GeneratorWord, Move)> {
    let mut out = Vec::new();
    for k in 1..=g.len() {
        for mv in [Move::Commute(k), Move::Braid(k)] {
            if let Ok(next) = apply_move(g, mv) {
                out.push((next, mv));
            }
        }
    }
    out.sort();
    out
}

fn search_backtrack(
    start: &GeneratorWord,
    budget: usize,
) -> Result<(Vec<Move>, GeneratorWord), CoxeterError> {
    let mut parent: HashMap<GeneratorWord, (GeneratorWord, Move)> = HashMap::new();
    let mut seen: HashSet<GeneratorWord> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(word) = queue.pop_front() {
        for (next, mv) in braid_class_neighbours(&word) {
            if !seen.insert(next.clone()) {
                continue;
            }
            if seen.len() > budget {
                return Err(CoxeterError::SearchBudgetExceeded { limit: budget });
            }
            parent.insert(next.clone(), (word.clone(), mv));
            if next.has_adjacent_equal().is_some() {
                let mut path = Vec::new();
                let mut at = next.clone();
                while let Some((prev, mv)) = parent.get(&at) {
                    path.push(*mv);
                    at = prev.clone();
                }
                path.reverse();
                return Ok((path, next));
            }
            queue.push_back(next);
        }
    }
    // Only reduced words have no backtrack anywhere in their braid class,
    // and a nonempty reduced word is never an identity loop.
    Err(CoxeterError::NotALoop)
}

/// The codimension-2 cell type of a pair of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellType {
    /// `<s_i, s_{i+1}>` ≅ `S_3`: six chambers around a hexagonal cell.
    Tricky,
    /// `<s_i, s_j>`, `|i - j| >= 2`, ≅ `Z_2 × Z_2`: four chambers around a square.
    Easy,
}

impl CellType {
    /// Order of the rank-2 parabolic subgroup.
    pub fn stabilizer_order(self) -> usize {
        match self {
            CellType::Tricky => 6,
            CellType::Easy => 4,
        }
    }
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellType::Tricky => "tricky",
            CellType::Easy => "easy",
        })
    }
}

pub fn classify_pair(n: usize, i: usize, j: usize) -> Result<CellType, CoxeterError> {
    if n < 3 || i < 1 || i >= j || j > n - 1 {
        return Err(CoxeterError::InvalidPair { i, j, n });
    }
    Ok(if j == i + 1 {
        CellType::Tricky
    } else {
        CellType::Easy
    })
}

/// Number of codimension-2 cells of each type in the Coxeter complex of `S_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CellCensus {
    pub tricky: u64,
    pub easy: u64,
}

impl CellCensus {
    pub fn get(&self, kind: CellType) -> u64 {
        match kind {
            CellType::Tricky => self.tricky,
            CellType::Easy => self.easy,
        }
    }
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Closed form: `n - 2` adjacent pairs each contribute `n!/6` hexagons, the
/// remaining `(n-1)(n-2)/2 - (n-2)` pairs each contribute `n!/4` squares.
pub fn codim2_census(n: usize) -> Result<CellCensus, CoxeterError> {
    if n < 3 {
        return Err(CoxeterError::RankTooSmall { n, min: 3 });
    }
    let fact = factorial(n).ok_or(CoxeterError::RankTooLarge { n, max: 20 })?;
    let n = n as u64;
    let adjacent = n - 2;
    let pairs = (n - 1) * (n - 2) / 2;
    Ok(CellCensus {
        tricky: adjacent * (fact / 6),
        easy: (pairs - adjacent) * (fact / 4),
    })
}

/// Every element of `S_n`, found by breadth-first search of the Cayley graph.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>, CoxeterError> {
    const MAX: usize = 8;
    if n > MAX {
        return Err(CoxeterError::RankTooLarge { n, max: MAX });
    }
    let start = Permutation::identity(n);
    let mut seen = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for s in 1..n {
            let mut q = p.clone();
            q.swap_slots(s);
            if seen.insert(q.clone()) {
                order.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    order.sort();
    Ok(order)
}

/// One codimension-2 cell: the chambers `w·<s_i, s_j>` around it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codim2Cell {
    pub pair: (usize, usize),
    pub kind: CellType,
    pub chambers: Vec<Permutation>,
}

/// Partition `S_n` into left cosets of every rank-2 parabolic subgroup.
pub fn enumerate_codim2_cells(n: usize) -> Result<Vec<Codim2Cell>, CoxeterError> {
    if n < 3 {
        return Err(CoxeterError::RankTooSmall { n, min: 3 });
    }
    let elements = all_permutations(n)?;
    let mut cells = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            let kind = classify_pair(n, i, j)?;
            let mut assigned: HashSet<Permutation> = HashSet::new();
            for w in &elements {
                if assigned.contains(w) {
                    continue;
                }
                // orbit of w under right multiplication by s_i, s_j
                let mut coset = vec![w.clone()];
                let mut frontier = vec![w.clone()];
                assigned.insert(w.clone());
                while let Some(p) = frontier.pop() {
                    for s in [i, j] {
                        let mut q = p.clone();
                        q.swap_slots(s);
                        if assigned.insert(q.clone()) {
                            coset.push(q.clone());
                            frontier.push(q);
                        }
                    }
                }
                coset.sort();
                cells.push(Codim2Cell {
                    pair: (i, j),
                    kind,
                    chambers: coset,
                });
            }
        }
    }
    Ok(cells)
}

/// `(s_i s_{i+1})^3`: once around a hexagonal cell.
pub fn hexagon_loop(n: usize, i: usize) -> Result<GeneratorWord, CoxeterError> {
    GeneratorWord::new(n, [i, i + 1].repeat(3))
}

/// `(s_i s_j)^2` for `|i - j| >= 2`: once around a square cell.
pub fn square_loop(n: usize, i: usize, j: usize) -> Result<GeneratorWord, CoxeterError> {
    if i.abs_diff(j) < 2 {
        return Err(CoxeterError::InvalidPair {
            i: i.min(j),
            j: i.max(j),
            n,
        });
    }
    GeneratorWord::new(n, [i, j].repeat(2))
}

/// A random identity loop of length at most `max_len` (an even number is
/// always reached when `max_len >= 2`).
///
/// Half of the time the loop is a random walk followed by a shortest way
/// home; otherwise it is built by inserting backtracks, squares and hexagons
/// at random positions of the empty loop.
pub fn random_identity_loop<R: Rng + ?Sized>(
    n: usize,
    max_len: usize,
    rng: &mut R,
) -> Result<GeneratorWord, CoxeterError> {
    if n < 2 {
        return Err(CoxeterError::RankTooSmall { n, min: 2 });
    }
    if rng.gen_bool(0.5) {
        let out_len = rng.gen_range(0..=max_len / 2);
        let letters: Vec<usize> = (0..out_len).map(|_| rng.gen_range(1..n)).collect();
        let there = GeneratorWord::new(n, letters)?;
        let back = evaluate(&there).inverse().reduced_word();
        let g = there.concat(&back);
        debug_assert!(is_identity_loop(&g));
        return Ok(g);
    }
    let mut letters: Vec<usize> = Vec::new();
    let target = rng.gen_range(0..=max_len);
    for _ in 0..64 {
        let room = max_len - letters.len();
        let mut options: Vec<Vec<usize>> = Vec::new();
        if room >= 2 {
            let p = rng.gen_range(1..n);
            options.push(vec![p, p]);
        }
        if room >= 4 && n >= 4 {
            let i = rng.gen_range(1..n - 2);
            let j = rng.gen_range(i + 2..n);
            options.push([i, j].repeat(2));
        }
        if room >= 6 && n >= 3 {
            let i = rng.gen_range(1..n - 1);
            let pair = if rng.gen_bool(0.5) {
                [i, i + 1]
            } else {
                [i + 1, i]
            };
            options.push(pair.repeat(3));
        }
        if options.is_empty() || letters.len() >= target {
            break;
        }
        let relator = options.swap_remove(rng.gen_range(0..options.len()));
        let at = rng.gen_range(0..=letters.len());
        letters.splice(at..at, relator);
    }
    let g = GeneratorWord::new(n, letters)?;
    debug_assert!(is_identity_loop(&g));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gw(n: usize, letters: &[usize]) -> GeneratorWord {
        GeneratorWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert!(evaluate(&gw(3, &[])).is_identity());
        assert!(evaluate(&gw(2, &[1, 1])).is_identity());
        let a = evaluate(&gw(3, &[1, 2, 1]));
        assert_eq!(a.one_line(), [2, 1, 0]);
        assert_eq!(a, evaluate(&gw(3, &[2, 1, 2])));
    }

    #[test]
    fn loops() {
        assert!(is_identity_loop(&gw(3, &[1, 2, 1, 2, 1, 2])));
        assert!(!is_identity_loop(&gw(3, &[1])));
        assert!(is_identity_loop(&gw(3, &[])));
    }

    #[test]
    fn word_validation() {
        assert!(matches!(
            GeneratorWord::new(3, vec![1, 3]),
            Err(CoxeterError::GeneratorOutOfRange { index: 3, max: 2 })
        ));
        assert!(GeneratorWord::new(3, vec![0]).is_err());
        assert_eq!(
            GeneratorWord::parse(4, "1 3 1 3").unwrap(),
            gw(4, &[1, 3, 1, 3])
        );
        assert!(GeneratorWord::parse(4, "1 x").is_err());
    }

    #[test]
    fn moves() {
        assert_eq!(
            apply_move(&gw(2, &[1, 1]), Move::Cancel(1)).unwrap(),
            gw(2, &[])
        );
        assert_eq!(
            apply_move(&gw(4, &[1, 3]), Move::Commute(1)).unwrap(),
            gw(4, &[3, 1])
        );
        assert_eq!(
            apply_move(&gw(3, &[1, 2, 1]), Move::Braid(1)).unwrap(),
            gw(3, &[2, 1, 2])
        );
        assert!(apply_move(&gw(3, &[1, 2]), Move::Cancel(1)).is_err());
        assert!(apply_move(&gw(3, &[1, 2]), Move::Commute(1)).is_err());
        assert!(apply_move(&gw(4, &[1, 3, 1]), Move::Braid(1)).is_err());
        assert!(apply_move(&gw(3, &[1, 2, 1]), Move::Braid(2)).is_err());
        assert!(apply_move(&gw(3, &[1, 1]), Move::Cancel(0)).is_err());
    }

    #[test]
    fn move_text() {
        for mv in [Move::Cancel(3), Move::Commute(1), Move::Braid(12)] {
            assert_eq!(mv.to_string().parse::<Move>().unwrap(), mv);
        }
        assert!("twist@1".parse::<Move>().is_err());
        let cert = MoveCertificate {
            moves: vec![Move::Braid(1), Move::Cancel(3)],
        };
        assert_eq!(cert.to_lines(), "braid@1\ncancel@3\n");
        assert_eq!(MoveCertificate::parse(&cert.to_lines()).unwrap(), cert);
    }

    #[test]
    fn replay_examples() {
        let cert = MoveCertificate {
            moves: vec![
                Move::Braid(1),
                Move::Cancel(3),
                Move::Cancel(2),
                Move::Cancel(1),
            ],
        };
        assert!(replay(&gw(3, &[1, 2, 1, 2, 1, 2]), &cert)
            .unwrap()
            .is_empty());
        let square = MoveCertificate {
            moves: vec![Move::Commute(2), Move::Cancel(1), Move::Cancel(1)],
        };
        assert!(replay(&gw(4, &[1, 3, 1, 3]), &square).unwrap().is_empty());
        let one = MoveCertificate {
            moves: vec![Move::Cancel(1)],
        };
        assert!(replay(&gw(2, &[1, 1]), &one).unwrap().is_empty());
        assert_eq!(
            replay(&gw(3, &[1, 2]), &one),
            Err(CoxeterError::ReplayFailed {
                step: 1,
                mv: Move::Cancel(1)
            })
        );
    }

    #[test]
    fn contract_examples() {
        assert!(contract_loop(&gw(3, &[])).unwrap().is_empty());
        assert_eq!(
            contract_loop(&gw(2, &[1, 1])).unwrap().moves,
            [Move::Cancel(1)]
        );
        for g in [gw(3, &[1, 2, 1, 2, 1, 2]), gw(4, &[1, 3, 1, 3])] {
            let cert = contract_loop(&g).unwrap();
            assert!(replay(&g, &cert).unwrap().is_empty(), "{g}");
        }
        assert_eq!(contract_loop(&gw(3, &[1])), Err(CoxeterError::NotALoop));
    }

    #[test]
    fn contract_budget() {
        let g = gw(3, &[1, 2, 1, 2, 1, 2]);
        assert_eq!(
            contract_loop_with_budget(&g, 1),
            Err(CoxeterError::SearchBudgetExceeded { limit: 1 })
        );
    }

    #[test]
    fn classification() {
        assert_eq!(classify_pair(4, 1, 2).unwrap(), CellType::Tricky);
        assert_eq!(classify_pair(4, 1, 3).unwrap(), CellType::Easy);
        assert_eq!(classify_pair(4, 2, 3).unwrap(), CellType::Tricky);
        assert!(classify_pair(4, 2, 2).is_err());
        assert!(classify_pair(4, 1, 4).is_err());
        assert!(classify_pair(4, 0, 1).is_err());
    }

    #[test]
    fn census_closed_form() {
        assert_eq!(codim2_census(4).unwrap(), CellCensus { tricky: 8, easy: 6 });
        assert_eq!(codim2_census(3).unwrap(), CellCensus { tricky: 1, easy: 0 });
        assert_eq!(
            codim2_census(5).unwrap(),
            CellCensus {
                tricky: 60,
                easy: 90
            }
        );
        assert!(codim2_census(2).is_err());
        assert!(codim2_census(40).is_err());
    }

    #[test]
    fn cosets_partition_the_group() {
        for n in 3..=5 {
            let elements = all_permutations(n).unwrap();
            let cells = enumerate_codim2_cells(n).unwrap();
            for i in 1..n {
                for j in i + 1..n {
                    let mut covered: Vec<Permutation> = cells
                        .iter()
                        .filter(|c| c.pair == (i, j))
                        .flat_map(|c| c.chambers.iter().cloned())
                        .collect();
                    covered.sort();
                    assert_eq!(covered, elements);
                }
            }
            for c in &cells {
                assert_eq!(c.chambers.len(), c.kind.stabilizer_order());
            }
        }
    }

    #[test]
    fn cells_around_last_letter_fixed() {
        // the hexagon <s1, s2> through "adcb" consists of the arrangements ending in b
        let cells = enumerate_codim2_cells(4).unwrap();
        let adcb = Permutation::from_arrangement("adcb").unwrap();
        let cell = cells
            .iter()
            .find(|c| c.pair == (1, 2) && c.chambers.contains(&adcb))
            .unwrap();
        let mut names: Vec<String> = cell.chambers.iter().map(|p| p.arrangement()).collect();
        names.sort();
        assert_eq!(names, ["acdb", "adcb", "cadb", "cdab", "dacb", "dcab"]);
    }

    #[test]
    fn reduced_words() {
        for p in all_permutations(4).unwrap() {
            let w = p.reduced_word();
            assert_eq!(evaluate(&w), p);
            assert_eq!(w.len(), p.length());
        }
    }

    #[test]
    fn arrangements_path() {
        let g =
            GeneratorWord::from_arrangements(&["abc", "bac", "bca", "cba", "cab", "acb", "abc"])
                .unwrap();
        assert_eq!(g.letters(), [1, 2, 1, 2, 1, 2]);
        assert!(GeneratorWord::from_arrangements(&["abc", "cba"]).is_err());
        assert_eq!(g.walk().last().unwrap().arrangement(), "abc");
    }

    #[test]
    fn random_loops_are_loops() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [3, 4, 5] {
            for _ in 0..200 {
                let g = random_identity_loop(n, 12, &mut rng).unwrap();
                assert!(g.len() <= 12);
                assert!(is_identity_loop(&g));
            }
        }
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_arrangement("cadb").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::from_one_line(vec![0, 0]).is_err());
        assert_eq!(all_permutations(4).unwrap().len(), 24);
        assert_eq!(all_permutations(5).unwrap().len(), 120);
    }
}
