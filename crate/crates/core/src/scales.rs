//! Scales induced by shift spaces through the distinguished symbol rule.
//!
//! A word `w` starting with `s` maps to the composition of gaps between
//! successive occurrences of `s`, the last gap running to the end of the word
//! plus one. For an irreducible vertex shift the scale class of `s` splits
//! into the compositions with parts in the loop support `K(s)` and the
//! compositions whose last part lies outside `K(s)` but below some loop
//! length, which gives closed forms for both dimensions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combinatorics::{Composition, PartSet, Wheel};
use crate::error::{Error, Result};
use crate::numtheory;
use crate::series::{BivariateSeries, TruncatedSeries};
use crate::shiftspace::{LoopSystem, VertexShift, Word, DEFAULT_ENUMERATION_CAP};

/// How a [`DimReport`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Enumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Enumeration => "enumeration",
        }
    }
}

/// Transversal and orbital dimension sequences for sizes `min_n..`.
///
/// Entry `i` of every sequence refers to size `min_n + i`; bivariate row `i`
/// is indexed by length `m = 0..=min_n + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReport {
    pub method: Method,
    pub min_n: usize,
    pub transversal: Vec<BigInt>,
    pub orbital: Vec<BigInt>,
    /// Number of distinct scales of each size, when known.
    pub class_sizes: Option<Vec<BigInt>>,
    pub bivariate_transversal: Option<Vec<Vec<BigInt>>>,
    pub bivariate_orbital: Option<Vec<Vec<BigInt>>>,
}

impl DimReport {
    pub fn max_n(&self) -> usize {
        self.min_n + self.transversal.len() - 1
    }

    fn slot(&self, n: usize) -> Option<usize> {
        n.checked_sub(self.min_n)
            .filter(|&i| i < self.transversal.len())
    }

    pub fn transversal_at(&self, n: usize) -> Option<&BigInt> {
        self.slot(n).map(|i| &self.transversal[i])
    }

    pub fn orbital_at(&self, n: usize) -> Option<&BigInt> {
        self.slot(n).map(|i| &self.orbital[i])
    }

    pub fn class_size_at(&self, n: usize) -> Option<&BigInt> {
        let i = self.slot(n)?;
        self.class_sizes.as_ref().map(|s| &s[i])
    }

    /// Restricts the report to sizes `n >= from`.
    pub fn starting_at(&self, from: usize) -> DimReport {
        let skip = from.saturating_sub(self.min_n);
        let cut = |v: &Vec<BigInt>| v[skip.min(v.len())..].to_vec();
        DimReport {
            method: self.method,
            min_n: self.min_n + skip,
            transversal: cut(&self.transversal),
            orbital: cut(&self.orbital),
            class_sizes: self.class_sizes.as_ref().map(cut),
            bivariate_transversal: self
                .bivariate_transversal
                .as_ref()
                .map(|t| t[skip.min(t.len())..].to_vec()),
            bivariate_orbital: self
                .bivariate_orbital
                .as_ref()
                .map(|t| t[skip.min(t.len())..].to_vec()),
        }
    }

    /// Checks `transversal <= orbital` and that bivariate rows sum to the
    /// univariate entries.
    pub fn check_consistency(&self) -> Result<()> {
        for (i, (t, o)) in self.transversal.iter().zip(&self.orbital).enumerate() {
            if t > o {
                return Err(Error::DecompositionViolated(format!(
                    "transversal {t} exceeds orbital {o} at n = {}",
                    self.min_n + i
                )));
            }
        }
        for (table, uni, name) in [
            (
                &self.bivariate_transversal,
                &self.transversal,
                "transversal",
            ),
            (&self.bivariate_orbital, &self.orbital, "orbital"),
        ] {
            if let Some(table) = table {
                for (i, (row, total)) in table.iter().zip(uni).enumerate() {
                    let sum: BigInt = row.iter().sum();
                    if &sum != total {
                        return Err(Error::DecompositionViolated(format!(
                            "{name} row {} sums to {sum}, expected {total}",
                            self.min_n + i
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// One JSON object per size: `{"n", "transversal", "orbital", "method"}`
    /// plus `"class_size"` when known. Counts are decimal strings.
    pub fn rows_json(&self) -> Vec<Value> {
        (0..self.transversal.len())
            .map(|i| {
                let mut row = json!({
                    "n": self.min_n + i,
                    "transversal": self.transversal[i].to_string(),
                    "orbital": self.orbital[i].to_string(),
                    "method": self.method.as_str(),
                });
                if let Some(sizes) = &self.class_sizes {
                    row["class_size"] = Value::String(sizes[i].to_string());
                }
                row
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let table = |t: &Option<Vec<Vec<BigInt>>>| {
            t.as_ref().map(|rows| {
                rows.iter()
                    .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
        };
        let mut out = json!({
            "method": self.method.as_str(),
            "min_n": self.min_n,
            "rows": self.rows_json(),
        });
        if let Some(t) = table(&self.bivariate_transversal) {
            out["bivariate_transversal"] = json!(t);
        }
        if let Some(t) = table(&self.bivariate_orbital) {
            out["bivariate_orbital"] = json!(t);
        }
        out
    }
}

/// The composition a word induces through its first symbol.
pub fn induced_scale(w: &Word) -> Result<Composition> {
    let first = *w.letters().first().ok_or(Error::EmptyWord)?;
    Ok(scale_of(w.letters(), |c| c == first))
}

/// The composition of gaps between positions whose letter is in `set`. The
/// word must start with a member of `set`.
pub fn induced_scale_by_set(w: &Word, set: &[usize]) -> Result<Composition> {
    let first = *w.letters().first().ok_or(Error::EmptyWord)?;
    if !set.contains(&first) {
        return Err(Error::UnknownSymbol(format!(
            "word does not start in the distinguished set (letter {first})"
        )));
    }
    Ok(scale_of(w.letters(), |c| set.contains(&c)))
}

fn scale_of(letters: &[usize], marked: impl Fn(usize) -> bool) -> Composition {
    let mut parts = Vec::new();
    let mut last = 0;
    for (i, &c) in letters.iter().enumerate().skip(1) {
        if marked(c) {
            parts.push(i - last);
            last = i;
        }
    }
    parts.push(letters.len() - last);
    Composition::new(parts).expect("gaps are positive")
}

static EMPTY: BTreeSet<Composition> = BTreeSet::new();

/// Scales of each size generated by one symbol, or by a set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaleClass {
    pub source: String,
    pub symbol: String,
    pub by_size: BTreeMap<usize, BTreeSet<Composition>>,
}

impl ScaleClass {
    pub fn at(&self, n: usize) -> &BTreeSet<Composition> {
        self.by_size.get(&n).unwrap_or(&EMPTY)
    }

    /// Size-wise union, labelled `symbol`.
    pub fn union(&self, other: &ScaleClass, symbol: &str) -> ScaleClass {
        let mut by_size = self.by_size.clone();
        for (n, set) in &other.by_size {
            by_size.entry(*n).or_default().extend(set.iter().cloned());
        }
        ScaleClass {
            source: self.source.clone(),
            symbol: symbol.to_string(),
            by_size,
        }
    }

    /// Dimensions of every stored size by direct orbit computations.
    pub fn dims(&self) -> DimReport {
        let min_n = self.by_size.keys().next().copied().unwrap_or(1);
        let max_n = self.by_size.keys().last().copied().unwrap_or(min_n);
        let mut report = DimReport {
            method: Method::Enumeration,
            min_n,
            transversal: Vec::new(),
            orbital: Vec::new(),
            class_sizes: Some(Vec::new()),
            bivariate_transversal: Some(Vec::new()),
            bivariate_orbital: Some(Vec::new()),
        };
        for n in min_n..=max_n {
            let set = self.at(n);
            let (t, o) = set_dims_by_length(set, n);
            report.transversal.push(t.iter().sum());
            report.orbital.push(o.iter().sum());
            report
                .class_sizes
                .as_mut()
                .expect("set")
                .push(BigInt::from(set.len()));
            report.bivariate_transversal.as_mut().expect("set").push(t);
            report.bivariate_orbital.as_mut().expect("set").push(o);
        }
        report
    }
}

/// Transversal and orbital dimensions of `set` split by number of parts,
/// indexed `0..=n`.
fn set_dims_by_length(set: &BTreeSet<Composition>, n: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let wheels: BTreeSet<Wheel> = set
        .iter()
        .map(|c| c.canonical_wheel().expect("members are nonempty"))
        .collect();
    let width = set.iter().map(Composition::len).max().unwrap_or(0).max(n);
    let mut t = vec![BigInt::zero(); width + 1];
    let mut o = vec![BigInt::zero(); width + 1];
    for w in &wheels {
        let m = w.rep().len();
        t[m] += 1;
        o[m] += w.rep().summarize().expect("nonempty").orbit_size;
    }
    (t, o)
}

/// `C^(X,s)_n = phi(L_n(X, s))` for `n = 1..=order`.
pub fn scale_class(x: &VertexShift, symbol: &str, order: usize) -> Result<ScaleClass> {
    scale_class_capped(x, symbol, order, DEFAULT_ENUMERATION_CAP)
}

pub fn scale_class_capped(
    x: &VertexShift,
    symbol: &str,
    order: usize,
    cap: usize,
) -> Result<ScaleClass> {
    let s = x.symbol_index(symbol)?;
    x.check_enumeration_budget(&[s], order, cap)?;
    let mut by_size = BTreeMap::new();
    for n in 1..=order {
        let mut set = BTreeSet::new();
        x.for_each_word(&[s], n, cap, |w| {
            set.insert(scale_of(w, |c| c == s));
        })?;
        by_size.insert(n, set);
    }
    Ok(ScaleClass {
        source: "vertex shift".into(),
        symbol: symbol.to_string(),
        by_size,
    })
}

fn part_poly(parts: &[usize], order: usize) -> TruncatedSeries {
    let mut c = vec![BigRational::zero(); order + 1];
    for &k in parts {
        if k <= order {
            c[k] = BigRational::one();
        }
    }
    TruncatedSeries::from_coeffs(c, order)
}

/// `P^0, P^1, ...` until the power vanishes below `z^(order+1)`.
fn powers(p: &TruncatedSeries) -> Result<Vec<TruncatedSeries>> {
    let order = p.order();
    let mut out = vec![TruncatedSeries::one(order)];
    loop {
        let next = out.last().expect("nonempty").mul(p)?;
        if next.is_zero() || out.len() > order {
            break;
        }
        out.push(next);
    }
    Ok(out)
}

/// `1 / (1 - sum_{k in K} z^k)` through `order`.
pub fn composition_gf(parts: &PartSet, order: usize) -> Result<TruncatedSeries> {
    part_poly(&parts.up_to(order), order).quasi_inverse()
}

/// `1 / (1 - u sum_{k in K} z^k)`: `u` marks the number of parts.
pub fn composition_bgf(parts: &PartSet, order: usize) -> Result<BivariateSeries> {
    let pw = powers(&part_poly(&parts.up_to(order), order))?;
    Ok(BivariateSeries::from_fn(order, |n, m| {
        pw.get(m).map_or_else(BigRational::zero, |p| p.coeff(n))
    }))
}

/// `log 1/(1 - u P(z))` as a triangle, from the powers of `P`.
fn log_table(pw: &[TruncatedSeries], order: usize) -> BivariateSeries {
    BivariateSeries::from_fn(order, |n, m| {
        if m == 0 {
            return BigRational::zero();
        }
        pw.get(m).map_or_else(BigRational::zero, |p| {
            p.coeff(n) / BigRational::from_integer(BigInt::from(m))
        })
    })
}

fn require_integral(s: &TruncatedSeries) -> Result<TruncatedSeries> {
    s.integer_coeffs()?;
    Ok(s.clone())
}

/// Wheels with parts in `K`: `sum_k phi(k)/k log 1/(1 - P(z^k))`.
pub fn wheels_gf(parts: &PartSet, order: usize) -> Result<TruncatedSeries> {
    let log = part_poly(&parts.up_to(order), order).log_quasi_inverse()?;
    let mut total = TruncatedSeries::zero(order);
    for k in 1..=order {
        let w = BigRational::new(BigInt::from(numtheory::totient(k as u64)?), BigInt::from(k));
        total = total.add(&log.substitute_power(k)?.scale(&w))?;
    }
    require_integral(&total)
}

/// Wheels refined by number of parts:
/// `sum_k phi(k)/k log 1/(1 - u^k P(z^k))`.
pub fn wheels_bgf(parts: &PartSet, order: usize) -> Result<BivariateSeries> {
    let pw = powers(&part_poly(&parts.up_to(order), order))?;
    let log = log_table(&pw, order);
    let mut total = BivariateSeries::zero(order);
    for k in 1..=order {
        let w = BigRational::new(BigInt::from(numtheory::totient(k as u64)?), BigInt::from(k));
        total = total.add(&log.substitute_power(k)?.scale(&w))?;
    }
    total.integer_rows()?;
    Ok(total)
}

/// Parts `k <= order` outside `K(s)` that lie below some loop length.
pub fn eligible_parts(loops: &LoopSystem, order: usize) -> Vec<usize> {
    (1..=order)
        .filter(|k| !loops.support.contains(k))
        .filter(|&k| loops.support_unbounded || loops.support_max.is_some_and(|m| k < m))
        .collect()
}

/// `a(z) = (sum_{k in E} z^k) C^K(z)` and `a(z,u) = u (sum_E z^k) C^K(z,u)`.
pub fn a_series(loops: &LoopSystem, order: usize) -> Result<(TruncatedSeries, BivariateSeries)> {
    let order = order.min(loops.order());
    let e = part_poly(&eligible_parts(loops, order), order);
    let k = loops.parts();
    let uni = e.mul(&composition_gf(&k, order)?)?;
    let bi = composition_bgf(&k, order)?.mul_univariate(&e)?.mul_u()?;
    Ok((uni, bi))
}

/// `b = u d/du a`, at `u = 1` and as a triangle.
pub fn b_series(loops: &LoopSystem, order: usize) -> Result<(TruncatedSeries, BivariateSeries)> {
    let (_, a) = a_series(loops, order)?;
    Ok((a.partial_u_at_1(), a.u_partial_u()))
}

fn int_vec(s: &TruncatedSeries) -> Result<Vec<BigInt>> {
    s.integer_coeffs()
}

/// Transversal and orbital dimensions of the scale class of `symbol` for
/// `n = 0..=order`, in closed form. The orbital entry at `n = 0` is the
/// empty composition.
pub fn symbol_dims(x: &VertexShift, symbol: &str, order: usize) -> Result<DimReport> {
    if !x.is_irreducible() {
        return Err(Error::Reducible);
    }
    let loops = x.first_return(symbol, order)?;
    let k = loops.parts();
    let (a, a2) = a_series(&loops, order)?;
    let (b, b2) = b_series(&loops, order)?;
    let transversal = wheels_gf(&k, order)?.add(&a)?;
    let orbital = composition_gf(&k, order)?.add(&b)?;
    let t2 = wheels_bgf(&k, order)?.add(&a2)?;
    let o2 = composition_bgf(&k, order)?.add(&b2)?;
    let report = DimReport {
        method: Method::ClosedForm,
        min_n: 0,
        transversal: int_vec(&transversal)?,
        orbital: int_vec(&orbital)?,
        class_sizes: None,
        bivariate_transversal: Some(t2.integer_rows()?),
        bivariate_orbital: Some(o2.integer_rows()?),
    };
    report.check_consistency()?;
    Ok(report)
}

/// Dimensions of `phi(L_n(X))`, the union of all symbols' scale classes, by
/// enumeration for `n = 1..=order`.
pub fn global_dims(x: &VertexShift, order: usize) -> Result<DimReport> {
    global_dims_capped(x, order, DEFAULT_ENUMERATION_CAP)
}

pub fn global_dims_capped(x: &VertexShift, order: usize, cap: usize) -> Result<DimReport> {
    let all: Vec<usize> = (0..x.size()).collect();
    x.check_enumeration_budget(&all, order, cap)?;
    let mut report = DimReport {
        method: Method::Enumeration,
        min_n: 1,
        transversal: Vec::new(),
        orbital: Vec::new(),
        class_sizes: Some(Vec::new()),
        bivariate_transversal: Some(Vec::new()),
        bivariate_orbital: Some(Vec::new()),
    };
    // One size at a time, so only one union is held in memory.
    for n in 1..=order {
        let mut set = BTreeSet::new();
        for &s in &all {
            x.for_each_word(&[s], n, cap, |w| {
                set.insert(scale_of(w, |c| c == s));
            })?;
        }
        let (t, o) = set_dims_by_length(&set, n);
        report.transversal.push(t.iter().sum());
        report.orbital.push(o.iter().sum());
        report
            .class_sizes
            .as_mut()
            .expect("set")
            .push(BigInt::from(set.len()));
        report.bivariate_transversal.as_mut().expect("set").push(t);
        report.bivariate_orbital.as_mut().expect("set").push(o);
    }
    Ok(report)
}

/// `phi(L_n(X))` for `n = 1..=order`.
pub fn global_class(x: &VertexShift, order: usize, cap: usize) -> Result<ScaleClass> {
    let starts: Vec<usize> = (0..x.size()).collect();
    x.check_enumeration_budget(&starts, order, cap)?;
    let mut all = ScaleClass {
        source: "vertex shift".into(),
        symbol: "all".into(),
        by_size: (1..=order).map(|n| (n, BTreeSet::new())).collect(),
    };
    for s in x.alphabet().symbols() {
        all = all.union(&scale_class_capped(x, s, order, cap)?, "all");
    }
    Ok(all)
}

/// Scales from words starting in `set`, with parts the gaps between visits
/// to `set`.
pub fn distinguished_set_scales(x: &VertexShift, set: &[&str], order: usize) -> Result<ScaleClass> {
    let mut out: Option<ScaleClass> = None;
    for start in set {
        let c = distinguished_set_scales_from(x, set, start, order)?;
        out = Some(match out {
            None => c,
            Some(prev) => prev.union(&c, &set.join(",")),
        });
    }
    let mut out = out.ok_or(Error::EmptyDistinguishedSet)?;
    out.symbol = set.join(",");
    Ok(out)
}

/// As [`distinguished_set_scales`], restricted to words starting at `start`.
pub fn distinguished_set_scales_from(
    x: &VertexShift,
    set: &[&str],
    start: &str,
    order: usize,
) -> Result<ScaleClass> {
    distinguished_set_scales_from_capped(x, set, start, order, DEFAULT_ENUMERATION_CAP)
}

pub fn distinguished_set_scales_from_capped(
    x: &VertexShift,
    set: &[&str],
    start: &str,
    order: usize,
    cap: usize,
) -> Result<ScaleClass> {
    if set.is_empty() {
        return Err(Error::EmptyDistinguishedSet);
    }
    let idx: Vec<usize> = set
        .iter()
        .map(|t| x.symbol_index(t))
        .collect::<Result<_>>()?;
    let s = x.symbol_index(start)?;
    if !idx.contains(&s) {
        return Err(Error::UnknownSymbol(format!(
            "{start} is not in the distinguished set"
        )));
    }
    x.check_enumeration_budget(&[s], order, cap)?;
    let mut by_size = BTreeMap::new();
    for n in 1..=order {
        let mut found = BTreeSet::new();
        x.for_each_word(&[s], n, cap, |w| {
            found.insert(scale_of(w, |c| idx.contains(&c)));
        })?;
        by_size.insert(n, found);
    }
    Ok(ScaleClass {
        source: "vertex shift".into(),
        symbol: start.to_string(),
        by_size,
    })
}

/// Checks the structure behind the closed forms on the enumerated class of
/// `symbol`: every part but the last lies in `K(s)`, every last part outside
/// `K(s)` is eligible, and compositions ending outside `K(s)` share no
/// rotation class with each other or with the `K(s)` compositions.
pub fn check_decomposition(x: &VertexShift, symbol: &str, order: usize) -> Result<()> {
    let loops = x.first_return(symbol, order)?;
    let eligible: BTreeSet<usize> = eligible_parts(&loops, order).into_iter().collect();
    let class = scale_class(x, symbol, order)?;
    for n in 1..=order {
        let mut seen: BTreeMap<Wheel, bool> = BTreeMap::new();
        for c in class.at(n) {
            let parts = c.parts();
            let (last, init) = parts.split_last().expect("nonempty");
            if let Some(bad) = init.iter().find(|k| !loops.support.contains(k)) {
                return Err(Error::DecompositionViolated(format!(
                    "{c} has inner part {bad} outside K({symbol})"
                )));
            }
            let tail = !loops.support.contains(last);
            if tail && !eligible.contains(last) {
                return Err(Error::DecompositionViolated(format!(
                    "{c} ends with ineligible part {last}"
                )));
            }
            let wheel = c.canonical_wheel()?;
            if tail && c.summarize()?.orbit_size != c.len() {
                return Err(Error::DecompositionViolated(format!("{c} is periodic")));
            }
            if let Some(prev_tail) = seen.insert(wheel, tail) {
                if prev_tail || tail {
                    return Err(Error::DecompositionViolated(format!(
                        "{c} shares a rotation class"
                    )));
                }
            }
        }
    }
    Ok(())
}
