//! Brute-force counterparts of the counted quantities.
//!
//! Everything here works by exhaustive generation over `A^n` or over all
//! part sequences, with rotations computed naively. Nothing calls into the
//! series, matrix or scale code whose output it checks.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use crate::combinatorics::{Composition, PartSet};
use crate::error::{Error, Result};
use crate::shiftspace::VertexShift;

/// Largest alphabet the word oracles accept.
pub const MAX_ALPHABET: usize = 4;
/// Longest word the word oracles accept.
pub const MAX_WORD_LEN: usize = 14;
/// Largest size for composition and wheel counts.
pub const MAX_COMPOSITION_SIZE: usize = 24;
/// Longest loop the first return oracle accepts.
pub const MAX_LOOP_LEN: usize = 12;

/// One oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub quantity: String,
    pub parameters: BTreeMap<String, Value>,
    pub expected: String,
    pub actual: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl OracleReport {
    pub fn new(
        quantity: &str,
        parameters: &[(&str, Value)],
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        OracleReport {
            quantity: quantity.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            matched: expected == actual,
            expected,
            actual,
        }
    }

    /// The report as a single JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

fn guard_words(x: &VertexShift, n: usize) -> Result<()> {
    if x.size() > MAX_ALPHABET {
        return Err(Error::CostGuard(format!(
            "alphabet of {} symbols exceeds {MAX_ALPHABET}",
            x.size()
        )));
    }
    if n > MAX_WORD_LEN {
        return Err(Error::CostGuard(format!(
            "word length {n} exceeds {MAX_WORD_LEN}"
        )));
    }
    Ok(())
}

/// Every word of `A^n`, as index vectors in lexicographic order.
fn all_words(k: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.checked_pow(n as u32).expect("guarded");
    (0..total).map(move |mut code| {
        let mut w = vec![0; n];
        for slot in w.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        w
    })
}

fn admissible(x: &VertexShift, w: &[usize]) -> bool {
    w.windows(2).all(|p| x.rows()[p[0]][p[1]] == 1)
}

fn rotations<T: Clone>(w: &[T]) -> Vec<Vec<T>> {
    (0..w.len().max(1))
        .map(|j| {
            w[j.min(w.len())..]
                .iter()
                .chain(&w[..j.min(w.len())])
                .cloned()
                .collect()
        })
        .collect()
}

fn least_rotation_naive<T: Clone + Ord>(w: &[T]) -> Vec<T> {
    rotations(w)
        .into_iter()
        .min()
        .expect("at least one rotation")
}

/// `(dim_T, dim_O)` of `L_n(X)`: rotation classes represented, and the size
/// of the union of the full rotation orbits inside `A^n`.
pub fn oracle_language_dims(x: &VertexShift, n: usize) -> Result<(usize, usize)> {
    guard_words(x, n)?;
    let words: Vec<Vec<usize>> = all_words(x.size(), n)
        .filter(|w| admissible(x, w))
        .collect();
    let classes: BTreeSet<Vec<usize>> = words.iter().map(|w| least_rotation_naive(w)).collect();
    let union: BTreeSet<Vec<usize>> = words.iter().flat_map(|w| rotations(w)).collect();
    Ok((classes.len(), union.len()))
}

/// Gaps between occurrences of the first letter, the last gap running to
/// the end of the word plus one.
fn gaps(w: &[usize]) -> Vec<usize> {
    let positions: Vec<usize> = (0..w.len()).filter(|&i| w[i] == w[0]).collect();
    let mut parts: Vec<usize> = positions.windows(2).map(|p| p[1] - p[0]).collect();
    parts.push(w.len() - positions.last().expect("w[0] occurs"));
    parts
}

/// `phi(L_n(X, s))` by scanning `A^n`.
pub fn oracle_scale_class(
    x: &VertexShift,
    symbol: &str,
    n: usize,
) -> Result<BTreeSet<Composition>> {
    guard_words(x, n)?;
    let s = x.symbol_index(symbol)?;
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    all_words(x.size(), n)
        .filter(|w| w[0] == s && admissible(x, w))
        .map(|w| Composition::new(gaps(&w)))
        .collect()
}

/// `phi(L_n(X))` over every first symbol.
pub fn oracle_global_class(x: &VertexShift, n: usize) -> Result<BTreeSet<Composition>> {
    let mut out = BTreeSet::new();
    for s in x.alphabet().symbols() {
        out.extend(oracle_scale_class(x, s, n)?);
    }
    Ok(out)
}

/// `(dim_T, dim_O)` of a set of compositions.
pub fn oracle_scale_dims(set: &BTreeSet<Composition>) -> (usize, usize) {
    let classes: BTreeSet<Vec<usize>> = set
        .iter()
        .map(|c| least_rotation_naive(c.parts()))
        .collect();
    let union: BTreeSet<Vec<usize>> = set.iter().flat_map(|c| rotations(c.parts())).collect();
    (classes.len(), union.len())
}

/// As [`oracle_scale_dims`], split by number of parts `m = 0..=n`.
pub fn oracle_scale_dims_by_length(
    set: &BTreeSet<Composition>,
    n: usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut t = vec![0; n + 1];
    let mut o = vec![0; n + 1];
    for m in 0..=n {
        let slice: BTreeSet<Composition> = set.iter().filter(|c| c.len() == m).cloned().collect();
        (t[m], o[m]) = oracle_scale_dims(&slice);
    }
    (t, o)
}

/// Counted families for [`oracle_series_coeff`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Compositions,
    Wheels,
}

fn compositions_into(n: usize, parts: &PartSet, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in 1..=n {
        if parts.contains(k) {
            cur.push(k);
            compositions_into(n - k, parts, out, cur);
            cur.pop();
        }
    }
}

/// Number of compositions of `n`, or of wheels of size `n >= 1`, with parts
/// in `parts`, restricted to `m` parts when given.
pub fn oracle_series_coeff(
    kind: SeriesKind,
    parts: &PartSet,
    n: usize,
    m: Option<usize>,
) -> Result<BigInt> {
    if n > MAX_COMPOSITION_SIZE {
        return Err(Error::CostGuard(format!(
            "size {n} exceeds {MAX_COMPOSITION_SIZE}"
        )));
    }
    let mut all = Vec::new();
    compositions_into(n, parts, &mut all, &mut Vec::new());
    all.retain(|c| m.is_none_or(|m| c.len() == m));
    let count = match kind {
        SeriesKind::Compositions => all.len(),
        SeriesKind::Wheels if n == 0 => 0,
        SeriesKind::Wheels => all
            .iter()
            .map(|c| least_rotation_naive(c))
            .collect::<BTreeSet<_>>()
            .len(),
    };
    Ok(BigInt::from(count))
}

/// Number of words `w_0 ... w_k` with `w_0 = w_k = s` and `w_j != s`
/// in between.
pub fn oracle_first_return(x: &VertexShift, symbol: &str, k: usize) -> Result<BigInt> {
    if k > MAX_LOOP_LEN {
        return Err(Error::CostGuard(format!(
            "loop length {k} exceeds {MAX_LOOP_LEN}"
        )));
    }
    if x.size() > MAX_ALPHABET {
        return Err(Error::CostGuard(format!(
            "alphabet of {} symbols exceeds {MAX_ALPHABET}",
            x.size()
        )));
    }
    let s = x.symbol_index(symbol)?;
    if k == 0 {
        return Ok(BigInt::from(0));
    }
    let count = all_words(x.size(), k + 1)
        .filter(|w| w[0] == s && w[k] == s && w[1..k].iter().all(|&c| c != s) && admissible(x, w))
        .count();
    Ok(BigInt::from(count))
}

/// Number of points of period dividing `n`: words `w` of length `n` whose
/// periodic extension is admissible.
pub fn oracle_periodic_points(x: &VertexShift, n: usize) -> Result<BigInt> {
    guard_words(x, n)?;
    let count = all_words(x.size(), n)
        .filter(|w| !w.is_empty() && admissible(x, w) && x.rows()[w[n - 1]][w[0]] == 1)
        .count();
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn language_dims_examples() {
        let g = VertexShift::golden_mean();
        assert_eq!(oracle_language_dims(&g, 3).unwrap(), (3, 7));
        assert_eq!(oracle_language_dims(&g, 6).unwrap(), (8, 36));
        assert_eq!(
            oracle_language_dims(&VertexShift::full_shift(2), 2).unwrap(),
            (3, 4)
        );
        assert!(matches!(
            oracle_language_dims(&g, 15),
            Err(Error::CostGuard(_))
        ));
        assert!(matches!(
            oracle_language_dims(&VertexShift::full_shift(5), 2),
            Err(Error::CostGuard(_))
        ));
    }

    #[test]
    fn series_examples() {
        let c = oracle_series_coeff(SeriesKind::Wheels, &PartSet::all(), 12, None).unwrap();
        assert_eq!(c, BigInt::from(351));
        let c =
            oracle_series_coeff(SeriesKind::Compositions, &PartSet::at_least(2), 12, None).unwrap();
        assert_eq!(c, BigInt::from(89));
        let c = oracle_series_coeff(SeriesKind::Wheels, &PartSet::all(), 12, Some(6)).unwrap();
        assert_eq!(c, BigInt::from(80));
    }

    #[test]
    fn first_return_examples() {
        let g = VertexShift::golden_mean();
        assert_eq!(oracle_first_return(&g, "∘", 2).unwrap(), BigInt::from(1));
        assert_eq!(oracle_first_return(&g, "•", 1).unwrap(), BigInt::from(0));
        assert_eq!(oracle_first_return(&g, "•", 4).unwrap(), BigInt::from(1));
        assert!(oracle_first_return(&g, "•", 13).is_err());
    }

    #[test]
    fn global_five_tet() {
        let set = oracle_global_class(&VertexShift::golden_mean(), 5).unwrap();
        assert_eq!(set.len(), 12);
        assert_eq!(oracle_scale_dims(&set), (6, 13));
    }

    #[test]
    fn report_line() {
        let r = OracleReport::new("wheels", &[("n", 12.into())], 351, 351);
        assert!(r.matched);
        assert_eq!(
            r.to_json_line(),
            r#"{"quantity":"wheels","parameters":{"n":12},"expected":"351","actual":"351","match":true}"#
        );
    }
}
