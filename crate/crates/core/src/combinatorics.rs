//! Integer compositions, wheels and the cyclic shift action on them.
//!
//! A composition `(k_1, ..., k_r)` codes a scale by the gaps between its
//! consecutive notes. Rotating the gaps gives the modes of the scale; the
//! rotation class is a *wheel*. For a set of compositions, the transversal
//! dimension counts wheels and the orbital dimension counts modes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    /// Panics on a zero part. Meant for literals in tests and examples.
    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("composition parts must be positive")
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Cyclic left shift by `j`; negative `j` shifts right.
    pub fn rotate(&self, j: isize) -> Composition {
        let len = self.0.len();
        if len <= 1 {
            return self.clone();
        }
        let shift = j.rem_euclid(len as isize) as usize;
        let mut parts = self.0.clone();
        parts.rotate_left(shift);
        Composition(parts)
    }

    /// All distinct rotations.
    pub fn orbit(&self) -> BTreeSet<Composition> {
        if self.is_empty() {
            return BTreeSet::from([self.clone()]);
        }
        (0..self.len() as isize).map(|j| self.rotate(j)).collect()
    }

    pub fn summarize(&self) -> Result<OrbitSummary> {
        if self.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let orbit_size = self.orbit().len();
        Ok(OrbitSummary {
            orbit_size,
            period: self.len() / orbit_size,
            length: self.len(),
        })
    }

    pub fn canonical_wheel(&self) -> Result<Wheel> {
        if self.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(Wheel {
            rep: self.rotate(least_rotation(&self.0) as isize),
        })
    }

    /// Least rotation, with the empty composition as its own class.
    fn class_key(&self) -> Composition {
        if self.is_empty() {
            self.clone()
        } else {
            self.rotate(least_rotation(&self.0) as isize)
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Booth's algorithm: start index of the lexicographically least rotation.
fn least_rotation(s: &[usize]) -> usize {
    let n = s.len();
    let mut failure: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = s[j % n];
        let mut i = failure[j - k - 1];
        while i != -1 && sj != s[(k + i as usize + 1) % n] {
            if sj < s[(k + i as usize + 1) % n] {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if sj != s[(k + (i + 1) as usize) % n] {
            // i == -1 here
            if sj < s[k % n] {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

/// A rotation class of compositions, stored as its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Wheel {
    rep: Composition,
}

impl Wheel {
    pub fn rep(&self) -> &Composition {
        &self.rep
    }
}

impl fmt::Display for Wheel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.rep)
    }
}

/// Orbit data of a nonempty composition: `orbit_size * period = length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub orbit_size: usize,
    pub period: usize,
    pub length: usize,
}

impl OrbitSummary {
    pub fn is_aperiodic(&self) -> bool {
        self.period == 1
    }
}

/// Number of rotation classes represented in `set`.
pub fn transversal_dim<'a>(set: impl IntoIterator<Item = &'a Composition>) -> usize {
    set.into_iter()
        .map(Composition::class_key)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Size of the union of the rotation orbits of the members of `set`.
pub fn orbital_dim<'a>(set: impl IntoIterator<Item = &'a Composition>) -> usize {
    set.into_iter()
        .map(Composition::class_key)
        .collect::<BTreeSet<_>>()
        .iter()
        .map(|w| w.orbit().len())
        .sum()
}

/// One member of `set` per rotation class: the lexicographically least
/// member of `set` in that class.
pub fn transversal_of(set: &BTreeSet<Composition>) -> BTreeSet<Composition> {
    let mut picked: BTreeMap<Composition, &Composition> = BTreeMap::new();
    // BTreeSet iterates in ascending order, so the first hit per class wins.
    for w in set {
        picked.entry(w.class_key()).or_insert(w);
    }
    picked.into_values().cloned().collect()
}

/// Union of the orbits of the members of `set`.
pub fn modes(set: &BTreeSet<Composition>) -> BTreeSet<Composition> {
    set.iter().flat_map(Composition::orbit).collect()
}

/// True when no member of `a` is a rotation of a member of `b`.
pub fn mutually_independent(a: &BTreeSet<Composition>, b: &BTreeSet<Composition>) -> bool {
    let ka: BTreeSet<_> = a.iter().map(Composition::class_key).collect();
    b.iter().all(|w| !ka.contains(&w.class_key()))
}

/// True when the members of `set` lie in pairwise distinct rotation classes.
pub fn is_independent(set: &BTreeSet<Composition>) -> bool {
    transversal_dim(set) == set.len()
}

/// A set of allowed parts: finitely many listed values together with an
/// optional tail `{k >= tail_from}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSet {
    listed: BTreeSet<usize>,
    tail_from: Option<usize>,
}

impl PartSet {
    /// Every positive integer.
    pub fn all() -> Self {
        Self::at_least(1)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `{k >= k0}` (with `k0 = 0` treated as 1).
    pub fn at_least(k0: usize) -> Self {
        PartSet {
            listed: BTreeSet::new(),
            tail_from: Some(k0.max(1)),
        }
    }

    pub fn finite(parts: impl IntoIterator<Item = usize>) -> Self {
        PartSet {
            listed: parts.into_iter().filter(|&k| k >= 1).collect(),
            tail_from: None,
        }
    }

    pub fn with_tail(mut self, k0: usize) -> Self {
        self.tail_from = Some(k0.max(1));
        self
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= 1 && (self.listed.contains(&k) || self.tail_from.is_some_and(|t| k >= t))
    }

    pub fn is_unbounded(&self) -> bool {
        self.tail_from.is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.listed.is_empty() && self.tail_from.is_none()
    }

    /// Members in `1..=n`, ascending.
    pub fn up_to(&self, n: usize) -> Vec<usize> {
        (1..=n).filter(|&k| self.contains(k)).collect()
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.listed.is_empty() && self.tail_from == Some(1) {
            return write!(f, "all");
        }
        let mut items: Vec<String> = self.listed.iter().map(|k| k.to_string()).collect();
        if let Some(t) = self.tail_from {
            items.push(format!("{t}.."));
        }
        if items.is_empty() {
            return write!(f, "none");
        }
        write!(f, "{}", items.join(","))
    }
}

impl FromStr for PartSet {
    type Err = Error;

    /// Accepts `all`, `none`, or a comma list of integers where the last
    /// entry may be an open tail `k..`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "all" => return Ok(PartSet::all()),
            "none" | "" => return Ok(PartSet::empty()),
            _ => {}
        }
        let mut set = PartSet::empty();
        for item in s.split(',').map(str::trim) {
            let bad = || Error::Parse(format!("bad part `{item}` in `{s}`"));
            if let Some(t) = item.strip_suffix("..") {
                let k: usize = t.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                set.tail_from = Some(set.tail_from.map_or(k, |old| old.min(k)));
            } else {
                let k: usize = item.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                set.listed.insert(k);
            }
        }
        Ok(set)
    }
}

/// All compositions of `n` with parts in `parts`.
pub fn enumerate_compositions(n: usize, parts: &PartSet) -> BTreeSet<Composition> {
    fn go(rest: usize, allowed: &[usize], cur: &mut Vec<usize>, out: &mut BTreeSet<Composition>) {
        if rest == 0 {
            out.insert(Composition(cur.clone()));
            return;
        }
        for &k in allowed {
            if k > rest {
                break;
            }
            cur.push(k);
            go(rest - k, allowed, cur, out);
            cur.pop();
        }
    }
    let allowed = parts.up_to(n);
    let mut out = BTreeSet::new();
    go(n, &allowed, &mut Vec::new(), &mut out);
    out
}

/// All wheels of size `n >= 1` with parts in `parts`, by canonicalizing the
/// compositions. Size 0 yields no wheels.
pub fn enumerate_wheels(n: usize, parts: &PartSet) -> BTreeSet<Wheel> {
    if n == 0 {
        return BTreeSet::new();
    }
    enumerate_compositions(n, parts)
        .iter()
        .map(|c| {
            c.canonical_wheel()
                .expect("n >= 1 gives nonempty compositions")
        })
        .collect()
}

/// Wheel counts of size `n` refined by length: entry `m` counts wheels with
/// `m` parts, for `m = 0..=n`.
pub fn wheels_by_length(n: usize, parts: &PartSet) -> Vec<usize> {
    let mut counts = vec![0; n + 1];
    for w in enumerate_wheels(n, parts) {
        counts[w.rep().len()] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::from_slice(p)
    }

    fn set(items: &[&[usize]]) -> BTreeSet<Composition> {
        items.iter().map(|p| c(p)).collect()
    }

    #[test]
    fn rotations() {
        assert_eq!(
            c(&[2, 2, 1, 2, 2, 2, 1]).rotate(1),
            c(&[2, 1, 2, 2, 2, 1, 2])
        );
        assert_eq!(c(&[5]).rotate(3), c(&[5]));
        assert_eq!(c(&[3, 2, 1, 3, 1, 2]).rotate(6), c(&[3, 2, 1, 3, 1, 2]));
        assert_eq!(c(&[1, 2, 3]).rotate(-1), c(&[3, 1, 2]));
        assert_eq!(Composition::empty().rotate(4), Composition::empty());
    }

    #[test]
    fn orbits() {
        assert_eq!(c(&[4, 1]).orbit(), set(&[&[4, 1], &[1, 4]]));
        assert_eq!(c(&[2, 2]).orbit(), set(&[&[2, 2]]));
        assert_eq!(
            c(&[2, 2, 1]).orbit(),
            set(&[&[2, 2, 1], &[2, 1, 2], &[1, 2, 2]])
        );
    }

    #[test]
    fn summaries() {
        let s = c(&[3, 1, 2, 3, 1, 2]).summarize().unwrap();
        assert_eq!((s.orbit_size, s.period), (3, 2));
        let s = c(&[2, 2, 1, 2, 2, 2, 1]).summarize().unwrap();
        assert_eq!((s.orbit_size, s.period), (7, 1));
        assert!(s.is_aperiodic());
        let s = c(&[4, 4, 4]).summarize().unwrap();
        assert_eq!((s.orbit_size, s.period), (1, 3));
        assert_eq!(
            Composition::empty().summarize(),
            Err(Error::EmptyComposition)
        );
    }

    #[test]
    fn canonical_wheels() {
        assert_eq!(
            c(&[2, 2, 1]).canonical_wheel().unwrap().rep(),
            &c(&[1, 2, 2])
        );
        assert_eq!(
            c(&[1, 1, 1]).canonical_wheel().unwrap().rep(),
            &c(&[1, 1, 1])
        );
        assert_eq!(
            c(&[3, 1, 2]).canonical_wheel().unwrap().rep(),
            &c(&[1, 2, 3])
        );
        assert_eq!(
            c(&[2, 1, 2, 1, 1]).canonical_wheel().unwrap().rep(),
            &c(&[1, 1, 2, 1, 2])
        );
        assert!(Composition::empty().canonical_wheel().is_err());
    }

    #[test]
    fn booth_matches_naive_minimum() {
        for n in 1..=10 {
            for w in enumerate_compositions(n, &PartSet::all()) {
                let naive = w.orbit().into_iter().next().unwrap();
                assert_eq!(w.canonical_wheel().unwrap().rep(), &naive);
            }
        }
    }

    #[test]
    fn dims() {
        let b = set(&[&[5], &[3, 2], &[2, 3], &[4, 1], &[2, 2, 1]]);
        assert_eq!(transversal_dim(&b), 4);
        assert_eq!(orbital_dim(&b), 8);
        assert_eq!(transversal_dim(&BTreeSet::new()), 0);
        assert_eq!(orbital_dim(&BTreeSet::new()), 0);
    }

    #[test]
    fn transversals() {
        assert_eq!(transversal_of(&set(&[&[4, 1], &[1, 4]])), set(&[&[1, 4]]));
        assert_eq!(
            transversal_of(&set(&[&[1, 1], &[2]])),
            set(&[&[1, 1], &[2]])
        );
        // Least member of B in the class, which is not the class minimum.
        assert_eq!(
            transversal_of(&set(&[&[2, 1, 2], &[2, 2, 1]])),
            set(&[&[2, 1, 2]])
        );
    }

    #[test]
    fn composition_enumeration() {
        let five = enumerate_compositions(5, &PartSet::finite([1, 2]));
        assert_eq!(five.len(), 8);
        assert!(five.contains(&c(&[2, 2, 1])));
        assert_eq!(enumerate_compositions(12, &PartSet::all()).len(), 2048);
        assert!(enumerate_compositions(3, &PartSet::finite([2])).is_empty());
        assert_eq!(enumerate_compositions(0, &PartSet::empty()).len(), 1);
    }

    #[test]
    fn wheel_enumeration() {
        assert_eq!(enumerate_wheels(12, &PartSet::all()).len(), 351);
        assert_eq!(
            &wheels_by_length(12, &PartSet::all())[1..],
            &[1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1]
        );
        let w: Vec<_> = enumerate_wheels(5, &PartSet::at_least(2))
            .into_iter()
            .map(|w| w.rep().clone())
            .collect();
        assert_eq!(w, vec![c(&[2, 3]), c(&[5])]);
        assert!(enumerate_wheels(0, &PartSet::all()).is_empty());
    }

    #[test]
    fn part_set_parsing() {
        assert_eq!("all".parse::<PartSet>().unwrap(), PartSet::all());
        assert_eq!("2..".parse::<PartSet>().unwrap(), PartSet::at_least(2));
        let p: PartSet = "1,3,5..".parse().unwrap();
        assert_eq!(p.up_to(7), vec![1, 3, 5, 6, 7]);
        assert_eq!(p.to_string(), "1,3,5..");
        assert!("0".parse::<PartSet>().is_err());
        assert!("x".parse::<PartSet>().is_err());
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&c(&[2, 1])).unwrap(), "[2,1]");
        let w = c(&[2, 1]).canonical_wheel().unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"rep":[1,2]}"#);
        assert!(serde_json::from_str::<Composition>("[1,0]").is_err());
    }

    #[test]
    fn orbit_size_divides_length() {
        for n in 1..=12 {
            for w in enumerate_compositions(n, &PartSet::all()) {
                assert_eq!(w.len() % w.orbit().len(), 0);
            }
        }
    }

    #[test]
    fn canonical_wheel_is_rotation_invariant() {
        for n in 1..=12 {
            for w in enumerate_compositions(n, &PartSet::all()) {
                let wheel = w.canonical_wheel().unwrap();
                for j in 0..w.len() as isize {
                    assert_eq!(w.rotate(j).canonical_wheel().unwrap(), wheel);
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn orbital_dim_sums_orbit_sizes(
            raw in proptest::collection::btree_set(proptest::collection::vec(1usize..4, 1..6), 0..12)
        ) {
            let b: BTreeSet<Composition> = raw.into_iter().map(|p| Composition::new(p).unwrap()).collect();
            let t = transversal_of(&b);
            let total: usize = t.iter().map(|w| w.summarize().unwrap().orbit_size).sum();
            proptest::prop_assert_eq!(orbital_dim(&b), total);
            proptest::prop_assert!(transversal_dim(&b) <= b.len());
            proptest::prop_assert!(b.len() <= orbital_dim(&b));
            proptest::prop_assert_eq!(t.len(), transversal_dim(&b));
            proptest::prop_assert!(t.is_subset(&b));
            proptest::prop_assert_eq!(modes(&b).len(), orbital_dim(&b));
        }
    }
}
