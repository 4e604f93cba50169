//! Vertex shifts and shifts of finite type.
//!
//! A [`VertexShift`] is a 0/1 transition matrix over an [`Alphabet`]. Its
//! words are the label sequences of finite paths in the matrix graph, which
//! agrees with the language of the bi-infinite shift whenever every vertex
//! lies on a cycle (in particular for irreducible matrices).
//!
//! Periodic data comes from exact integer matrix powers: `p_n = tr(A^n)`,
//! `zeta(z) = 1/det(I - zA)`, and the first return series to a symbol `s` is
//! `1 - det(I - zA)/det(I - zB)` with `B` the matrix with `s` deleted.

mod matrix;
mod sft;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::PartSet;
use crate::error::{Error, Result};
use crate::numtheory::{self, ArithSequence};
use crate::scales::{DimReport, Method};
use crate::series::{RationalFunction, TruncatedSeries};

pub use matrix::IntMatrix;
pub use sft::{parse_forbidden, HigherBlock, SftPresentation};

/// Default bound on the number of words an enumeration may generate.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000_000;

/// Ordered set of distinct symbol tokens.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl TryFrom<Vec<String>> for Alphabet {
    type Error = Error;

    fn try_from(symbols: Vec<String>) -> Result<Self> {
        Alphabet::new(symbols)
    }
}

impl From<Alphabet> for Vec<String> {
    fn from(a: Alphabet) -> Self {
        a.symbols
    }
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        let mut seen = BTreeSet::new();
        for s in &symbols {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlphabet(format!("bad token `{s}`")));
            }
            if !seen.insert(s.as_str()) {
                return Err(Error::InvalidAlphabet(format!("duplicate token `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The binary alphabet `∘ •`.
    pub fn binary() -> Self {
        Alphabet::new(["∘", "•"]).expect("valid")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> &str {
        &self.symbols[i]
    }

    pub fn index_of(&self, token: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == token)
            .ok_or_else(|| Error::UnknownSymbol(token.to_string()))
    }

    fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Concatenates letters when every token is one character wide, and
    /// separates them with spaces otherwise.
    pub fn render(&self, word: &Word) -> String {
        let sep = if self.single_char() { "" } else { " " };
        word.0
            .iter()
            .map(|&i| self.symbol(i))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses a word written with whitespace-separated tokens, or as a run of
    /// one-character tokens.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        let letters = if text.chars().any(char::is_whitespace) {
            text.split_whitespace()
                .map(|t| self.index_of(t))
                .collect::<Result<Vec<_>>>()?
        } else if self.single_char() || self.index_of(text).is_err() {
            text.chars()
                .map(|c| self.index_of(&c.to_string()))
                .collect::<Result<Vec<_>>>()?
        } else {
            vec![self.index_of(text)?]
        };
        Ok(Word(letters))
    }
}

/// A finite word, stored as symbol indices into its alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `other` occurs as a contiguous factor of `self`.
    pub fn contains_factor(&self, other: &Word) -> bool {
        other.is_empty() || self.0.windows(other.len()).any(|w| w == other.0.as_slice())
    }
}

/// A 1-step shift of finite type given by a 0/1 transition matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexShift {
    alphabet: Alphabet,
    rows: Vec<Vec<u8>>,
}

/// `zeta(z) = 1/det(I - zA)` in closed and expanded form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaReport {
    #[serde(serialize_with = "ser_poly")]
    pub determinant: Vec<BigInt>,
    #[serde(skip)]
    pub rational: RationalFunction,
    pub series: TruncatedSeries,
}

fn ser_poly<S: serde::Serializer>(p: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|c| c.to_string()))
}

/// The first return loop system to a distinguished symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopSystem {
    pub symbol: String,
    pub series: TruncatedSeries,
    /// Loop lengths `k <= order` with a nonzero coefficient.
    pub support: BTreeSet<usize>,
    pub support_unbounded: bool,
    /// Longest loop length when the support is finite.
    pub support_max: Option<usize>,
}

impl LoopSystem {
    /// The support as a part set, exact through the series order.
    pub fn parts(&self) -> PartSet {
        PartSet::finite(self.support.iter().copied())
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

/// Matrix of first-passage series between the members of a distinguished
/// set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstReturnMatrix {
    pub symbols: Vec<String>,
    pub entries: Vec<Vec<TruncatedSeries>>,
}

impl VertexShift {
    pub fn new(alphabet: Alphabet, rows: Vec<Vec<u8>>) -> Result<Self> {
        let n = alphabet.len();
        if rows.len() != n {
            return Err(Error::InvalidMatrix(format!(
                "{} rows for {n} symbols",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if row.iter().any(|&v| v > 1) {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has an entry other than 0/1",
                    i + 1
                )));
            }
        }
        Ok(VertexShift { alphabet, rows })
    }

    /// The golden mean shift on `∘ •`, forbidding `••`.
    pub fn golden_mean() -> Self {
        Self::new(Alphabet::binary(), vec![vec![1, 1], vec![1, 0]]).expect("valid")
    }

    /// The full shift on `k` symbols named `0..k`, or `∘ •` when `k = 2`.
    pub fn full_shift(k: usize) -> Self {
        let alphabet = if k == 2 {
            Alphabet::binary()
        } else {
            Alphabet::new((0..k).map(|i| i.to_string())).expect("k >= 1")
        };
        Self::new(alphabet, vec![vec![1; k]; k]).expect("valid")
    }

    /// Parses the text matrix format: a line of symbol tokens followed by
    /// one row of 0/1 entries per symbol. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidMatrix("missing symbol line".into()))?;
        let alphabet = Alphabet::new(header.split_whitespace())?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| match t {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        _ => Err(Error::InvalidMatrix(format!("entry `{t}` is not 0 or 1"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, rows)
    }

    /// Inverse of [`VertexShift::parse`].
    pub fn to_text(&self) -> String {
        let mut out = self.alphabet.symbols().join(" ");
        out.push('\n');
        for row in &self.rows {
            let r: Vec<String> = row.iter().map(u8::to_string).collect();
            out.push_str(&r.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn allows(&self, i: usize, j: usize) -> bool {
        self.rows[i][j] == 1
    }

    pub fn symbol_index(&self, token: &str) -> Result<usize> {
        self.alphabet.index_of(token)
    }

    pub fn int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows)
    }

    /// `A^0, A^1, ..., A^max`.
    pub fn powers(&self, max: usize) -> Vec<IntMatrix> {
        let a = self.int_matrix();
        let mut out = Vec::with_capacity(max + 1);
        out.push(IntMatrix::identity(self.size()));
        for k in 1..=max {
            let next = out[k - 1].mul(&a);
            out.push(next);
        }
        out
    }

    fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i]
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(j, _)| j)
    }

    fn walk(
        &self,
        starts: &[usize],
        n: usize,
        cap: usize,
        visit: &mut dyn FnMut(&[usize]),
    ) -> Result<()> {
        fn go(
            x: &VertexShift,
            n: usize,
            cap: usize,
            count: &mut usize,
            cur: &mut Vec<usize>,
            visit: &mut dyn FnMut(&[usize]),
        ) -> Result<()> {
            if cur.len() == n {
                *count += 1;
                if *count > cap {
                    return Err(Error::EnumerationCap { cap });
                }
                visit(cur);
                return Ok(());
            }
            let last = *cur.last().expect("nonempty");
            for j in x.successors(last).collect::<Vec<_>>() {
                cur.push(j);
                go(x, n, cap, count, cur, visit)?;
                cur.pop();
            }
            Ok(())
        }
        if n == 0 {
            visit(&[]);
            return Ok(());
        }
        let mut count = 0;
        for &s in starts {
            let mut cur = vec![s];
            go(self, n, cap, &mut count, &mut cur, visit)?;
        }
        Ok(())
    }

    /// Visits every admissible word of length `n` starting with one of
    /// `starts`, in lexicographic order of symbol indices.
    pub fn for_each_word(
        &self,
        starts: &[usize],
        n: usize,
        cap: usize,
        mut visit: impl FnMut(&[usize]),
    ) -> Result<()> {
        self.walk(starts, n, cap, &mut visit)
    }

    /// Number of admissible words of length `n` starting with one of
    /// `starts`, by dynamic programming over path endpoints.
    pub fn count_words(&self, starts: &[usize], n: usize) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        let mut ends = vec![BigInt::zero(); self.size()];
        for &s in starts {
            ends[s] += 1;
        }
        for _ in 1..n {
            let mut next = vec![BigInt::zero(); self.size()];
            for (v, c) in ends.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for w in self.successors(v) {
                    next[w] += c;
                }
            }
            ends = next;
        }
        ends.into_iter().sum()
    }

    /// Fails unless enumerating every word of length `1..=order` from
    /// `starts` stays within `cap`.
    pub fn check_enumeration_budget(
        &self,
        starts: &[usize],
        order: usize,
        cap: usize,
    ) -> Result<()> {
        let total: BigInt = (1..=order).map(|n| self.count_words(starts, n)).sum();
        if total > BigInt::from(cap) {
            return Err(Error::EnumerationCap { cap });
        }
        Ok(())
    }

    /// `L_n(X)`: labels of paths with `n` vertices. `n = 0` gives the empty
    /// word.
    pub fn language(&self, n: usize) -> Result<BTreeSet<Word>> {
        self.language_capped(n, DEFAULT_ENUMERATION_CAP)
    }

    pub fn language_capped(&self, n: usize, cap: usize) -> Result<BTreeSet<Word>> {
        let starts: Vec<usize> = (0..self.size()).collect();
        let mut out = BTreeSet::new();
        self.for_each_word(&starts, n, cap, |w| {
            out.insert(Word(w.to_vec()));
        })?;
        Ok(out)
    }

    /// `L_n(X, s)`: the words of `L_n(X)` starting with `s`.
    pub fn language_from(&self, symbol: &str, n: usize) -> Result<BTreeSet<Word>> {
        let s = self.symbol_index(symbol)?;
        let mut out = BTreeSet::new();
        if n == 0 {
            out.insert(Word::default());
            return Ok(out);
        }
        self.for_each_word(&[s], n, DEFAULT_ENUMERATION_CAP, |w| {
            out.insert(Word(w.to_vec()));
        })?;
        Ok(out)
    }

    fn reachable(&self, from: &[usize], allowed: &[bool], forward: bool) -> Vec<bool> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &v in from {
            if allowed[v] && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                let edge = if forward {
                    self.allows(v, w)
                } else {
                    self.allows(w, v)
                };
                if edge && allowed[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// True when for all symbols `i, j` some path of positive length leads
    /// from `i` to `j`.
    pub fn is_irreducible(&self) -> bool {
        let n = self.size();
        let all = vec![true; n];
        (0..n).all(|i| {
            let succ: Vec<usize> = self.successors(i).collect();
            self.reachable(&succ, &all, true).into_iter().all(|b| b)
        })
    }

    /// `det(I - zA)` and the expansion of `1/det(I - zA)` through `order`.
    pub fn zeta(&self, order: usize) -> ZetaReport {
        let determinant = self.int_matrix().det_one_minus_z();
        let rational = RationalFunction::new(vec![BigInt::one()], determinant.clone())
            .expect("det(I - zA) has constant term 1");
        let series = rational.expand(order);
        ZetaReport {
            determinant,
            rational,
            series,
        }
    }

    /// `p_n = tr(A^n)` for `n = 1..=order`.
    pub fn periodic_counts(&self, order: usize) -> ArithSequence {
        let powers = self.powers(order.max(1));
        ArithSequence::new(
            powers[1..=order.max(1)]
                .iter()
                .map(IntMatrix::trace)
                .collect(),
        )
        .expect("order >= 1")
    }

    /// `q_n`, the number of points of least period `n`.
    pub fn minimal_periodic_counts(&self, order: usize) -> ArithSequence {
        numtheory::mobius_invert(&self.periodic_counts(order))
    }

    /// `q_n / n`, the number of periodic orbits of least period `n`.
    pub fn orbit_counts(&self, order: usize) -> Result<Vec<BigInt>> {
        self.minimal_periodic_counts(order)
            .iter()
            .map(|(n, q)| exact_div(q, n))
            .collect()
    }

    /// `sum_{k | n} q_k / k`, the number of periodic orbits with period
    /// dividing `n`.
    pub fn necklace_counts(&self, order: usize) -> Result<Vec<BigInt>> {
        let orbits = self.orbit_counts(order)?;
        Ok((1..=order as u64)
            .map(|n| {
                numtheory::divisors(n)
                    .expect("n >= 1")
                    .into_iter()
                    .map(|k| &orbits[k as usize - 1])
                    .sum()
            })
            .collect())
    }

    /// First return loop system to `symbol`, through `order`.
    pub fn first_return(&self, symbol: &str, order: usize) -> Result<LoopSystem> {
        let s = self.symbol_index(symbol)?;
        let keep: Vec<usize> = (0..self.size()).filter(|&i| i != s).collect();
        let det_a = self.int_matrix().det_one_minus_z();
        let det_b = self.int_matrix().restrict(&keep).det_one_minus_z();
        let len = det_a.len().max(det_b.len());
        let num: Vec<BigInt> = (0..len)
            .map(|k| {
                det_b.get(k).cloned().unwrap_or_default()
                    - det_a.get(k).cloned().unwrap_or_default()
            })
            .collect();
        let series = RationalFunction::new(num, det_b)?.expand(order);
        let support = series
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect();
        let (support_unbounded, support_max) = self.loop_support_bounds(s);
        Ok(LoopSystem {
            symbol: symbol.to_string(),
            series,
            support,
            support_unbounded,
            support_max,
        })
    }

    /// Decides from the graph alone whether first-return loop lengths at `s`
    /// are unbounded, and otherwise finds the longest one.
    fn loop_support_bounds(&self, s: usize) -> (bool, Option<usize>) {
        let n = self.size();
        let others: Vec<bool> = (0..n).map(|i| i != s).collect();
        let outs: Vec<usize> = (0..n).filter(|&v| v != s && self.allows(s, v)).collect();
        let ins: Vec<usize> = (0..n).filter(|&v| v != s && self.allows(v, s)).collect();
        let fwd = self.reachable(&outs, &others, true);
        let bwd = self.reachable(&ins, &others, false);
        let relevant: Vec<bool> = (0..n).map(|v| fwd[v] && bwd[v]).collect();

        // Longest path (in edges) ending at each relevant vertex, by DFS with
        // cycle detection over the relevant subgraph.
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        fn longest_from(
            x: &VertexShift,
            v: usize,
            relevant: &[bool],
            ins: &[usize],
            marks: &mut [Mark],
            best: &mut [Option<usize>],
        ) -> std::result::Result<Option<usize>, ()> {
            match marks[v] {
                Mark::Open => return Err(()),
                Mark::Done => return Ok(best[v]),
                Mark::New => {}
            }
            marks[v] = Mark::Open;
            // Longest path from v to some in-neighbor of s.
            let mut here = if ins.contains(&v) { Some(0) } else { None };
            for w in 0..x.size() {
                if relevant[w] && x.allows(v, w) {
                    if let Some(len) = longest_from(x, w, relevant, ins, marks, best)? {
                        here = Some(here.map_or(len + 1, |h: usize| h.max(len + 1)));
                    }
                }
            }
            marks[v] = Mark::Done;
            best[v] = here;
            Ok(here)
        }

        let mut marks = vec![Mark::New; n];
        let mut best = vec![None; n];
        let mut longest: Option<usize> = if self.allows(s, s) { Some(1) } else { None };
        for &v in &outs {
            if !relevant[v] {
                continue;
            }
            match longest_from(self, v, &relevant, &ins, &mut marks, &mut best) {
                Err(()) => return (true, None),
                Ok(Some(len)) => longest = Some(longest.map_or(len + 2, |l| l.max(len + 2))),
                Ok(None) => {}
            }
        }
        // A cycle among relevant vertices not reached from an out-neighbor
        // cannot exist: every relevant vertex is reachable from one.
        (false, longest)
    }

    /// First-passage series between members of `set`: entry `(s, t)` counts
    /// paths from `s` to `t` whose interior avoids `set`.
    pub fn first_return_matrix(&self, set: &[&str], order: usize) -> Result<FirstReturnMatrix> {
        if set.is_empty() {
            return Err(Error::EmptyDistinguishedSet);
        }
        let idx: Vec<usize> = set
            .iter()
            .map(|t| self.symbol_index(t))
            .collect::<Result<_>>()?;
        let in_set: Vec<bool> = (0..self.size()).map(|i| idx.contains(&i)).collect();
        let mut entries = Vec::with_capacity(idx.len());
        for &s in &idx {
            // frontier[v]: number of paths from s with the current length,
            // ending at v, whose vertices after s all avoid the set.
            let mut counts: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); order + 1]; idx.len()];
            let mut frontier = vec![BigInt::zero(); self.size()];
            for v in 0..self.size() {
                if self.allows(s, v) {
                    frontier[v] = BigInt::one();
                }
            }
            for len in 1..=order {
                for (col, &t) in idx.iter().enumerate() {
                    counts[col][len] = frontier[t].clone();
                }
                let mut next = vec![BigInt::zero(); self.size()];
                for v in 0..self.size() {
                    if in_set[v] || frontier[v].is_zero() {
                        continue;
                    }
                    for w in self.successors(v) {
                        next[w] += &frontier[v];
                    }
                }
                frontier = next;
            }
            entries.push(
                counts
                    .into_iter()
                    .map(|c| {
                        TruncatedSeries::from_coeffs(
                            c.into_iter().map(num_rational::BigRational::from_integer),
                            order,
                        )
                    })
                    .collect(),
            );
        }
        Ok(FirstReturnMatrix {
            symbols: set.iter().map(|s| s.to_string()).collect(),
            entries,
        })
    }

    /// Transversal and orbital dimensions of `L_n(X)` for `n = 1..=order`,
    /// counting rotations inside `A^n`.
    ///
    /// A word whose last-to-first junction is forbidden is alone in its
    /// rotation class inside the language and has a full orbit of size `n`;
    /// the other words are the periodic ones and group into necklaces.
    pub fn language_dims(&self, order: usize) -> Result<DimReport> {
        let powers = self.powers(order);
        let necklaces = self.necklace_counts(order)?;
        let mut transversal = Vec::with_capacity(order);
        let mut orbital = Vec::with_capacity(order);
        let mut sizes = Vec::with_capacity(order);
        for n in 1..=order {
            let a = &powers[n - 1];
            let mut open = BigInt::zero();
            let mut total = BigInt::zero();
            for i in 0..self.size() {
                for j in 0..self.size() {
                    total += a.get(i, j);
                    if !self.allows(j, i) {
                        open += a.get(i, j);
                    }
                }
            }
            let p_n = powers[n].trace();
            transversal.push(&open + &necklaces[n - 1]);
            orbital.push(&open * BigInt::from(n) + p_n);
            sizes.push(total);
        }
        Ok(DimReport {
            method: Method::ClosedForm,
            min_n: 1,
            transversal,
            orbital,
            class_sizes: Some(sizes),
            bivariate_transversal: None,
            bivariate_orbital: None,
        })
    }

    /// Deletes `symbols` and returns the remaining shift, or `None` when
    /// nothing is left.
    pub fn without(&self, symbols: &[&str]) -> Result<Option<VertexShift>> {
        let drop: Vec<usize> = symbols
            .iter()
            .map(|t| self.symbol_index(t))
            .collect::<Result<_>>()?;
        let keep: Vec<usize> = (0..self.size()).filter(|i| !drop.contains(i)).collect();
        if keep.is_empty() {
            return Ok(None);
        }
        let alphabet = Alphabet::new(keep.iter().map(|&i| self.alphabet.symbol(i).to_string()))?;
        let rows = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.rows[i][j]).collect())
            .collect();
        Ok(Some(VertexShift::new(alphabet, rows)?))
    }

    /// Every vertex shift on `k` symbols `0..k` (all `2^(k^2)` matrices), in
    /// order of the matrix read as a binary number.
    pub fn all_on(k: usize) -> Vec<VertexShift> {
        let alphabet = Alphabet::new((0..k).map(|i| i.to_string())).expect("k >= 1");
        (0u32..1 << (k * k))
            .map(|bits| {
                let rows = (0..k)
                    .map(|i| (0..k).map(|j| ((bits >> (i * k + j)) & 1) as u8).collect())
                    .collect();
                VertexShift::new(alphabet.clone(), rows).expect("valid")
            })
            .collect()
    }
}

fn exact_div(q: &BigInt, n: usize) -> Result<BigInt> {
    let (d, r) = q.div_rem(&BigInt::from(n));
    if !r.is_zero() {
        return Err(Error::NonIntegral {
            index: n.to_string(),
            value: format!("{q}/{n}"),
        });
    }
    Ok(d)
}

impl fmt::Display for VertexShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl FirstReturnMatrix {
    /// Entry for the pair `(s, t)`.
    pub fn get(&self, s: &str, t: &str) -> Option<&TruncatedSeries> {
        let i = self.symbols.iter().position(|x| x == s)?;
        let j = self.symbols.iter().position(|x| x == t)?;
        Some(&self.entries[i][j])
    }

    pub fn as_map(&self) -> BTreeMap<(String, String), &TruncatedSeries> {
        let mut out = BTreeMap::new();
        for (i, s) in self.symbols.iter().enumerate() {
            for (j, t) in self.symbols.iter().enumerate() {
                out.insert((s.clone(), t.clone()), &self.entries[i][j]);
            }
        }
        out
    }
}
