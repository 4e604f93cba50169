//! Exact truncated formal power series in one variable `z`, and in two
//! variables `z, u` where `u` marks composition length.
//!
//! Coefficients are arbitrary-precision rationals. A series of order `N`
//! stores the coefficients of `z^0..=z^N` and every operation truncates its
//! result at `z^N`. Counting series exported to callers go through
//! [`TruncatedSeries::integer_coeffs`], which refuses to round.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{self, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default truncation order for computations that do not specify one.
pub const DEFAULT_ORDER: usize = 64;

fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn check_orders(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::OrderMismatch { left, right });
    }
    Ok(())
}

fn integral(value: &BigRational, index: impl FnOnce() -> String) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            index: index(),
            value: value.to_string(),
        })
    }
}

/// A power series in `z` known through `z^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c z^k`, or zero when `k > order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms past `order`.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigRational>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[z^n]`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs
            .get(n)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncates (or zero-extends) to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `1 / (1 - g)` for `g` with zero constant term.
    pub fn quasi_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // h_n = sum_{k=1..n} g_k h_{n-k}
        let order = self.order();
        let mut h = Self::one(order);
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                let g = &self.coeffs[k];
                if !g.is_zero() {
                    acc += g * &h.coeffs[n - k];
                }
            }
            h.coeffs[n] = acc;
        }
        Ok(h)
    }

    /// `log(1 / (1 - g)) = sum_{i >= 1} g^i / i` for `g` with zero constant
    /// term.
    pub fn log_quasi_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        let mut power = self.clone();
        for i in 1..=order {
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale(&BigRational::new(BigInt::one(), BigInt::from(i))))?;
            power = power.mul(self)?;
        }
        Ok(out)
    }

    /// `f(z^k)`.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroArgument);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * k > order {
                break;
            }
            out.coeffs[n * k] = c.clone();
        }
        Ok(out)
    }

    /// Formal derivative. The result is known through `z^(order - 1)`.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=order).map(|n| &self.coeffs[n] * rat(n)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer view of the coefficients. Fails on the first non-integral
    /// coefficient.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| integral(c, || n.to_string()))
            .collect()
    }

    /// JSON form with `p/q` strings, for inspection of intermediate values.
    pub fn to_debug_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = n == 0 || !mag.is_one();
            match (show_coeff, n) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}z")?,
                (false, 1) => write!(f, "z")?,
                (true, _) => write!(f, "{mag}z^{n}")?,
                (false, _) => write!(f, "z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.integer_coeffs().map_err(ser::Error::custom)?;
        let mut st = serializer.serialize_struct("TruncatedSeries", 2)?;
        st.serialize_field(
            "coeffs",
            &coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        )?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let parse = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("`{s}`: {e}"))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse(q)?;
            if q.is_zero() {
                return Err(format!("`{s}`: zero denominator"));
            }
            Ok(BigRational::new(parse(p)?, q))
        }
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() > repr.order + 1 {
            return Err(de::Error::custom("more coefficients than the order allows"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(de::Error::custom)?;
        Ok(Self::from_coeffs(coeffs, repr.order))
    }
}

/// `numerator / denominator` with integer polynomial coefficients, lowest
/// degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Vec<BigInt>,
    denominator: Vec<BigInt>,
}

impl RationalFunction {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> Result<Self> {
        match denominator.first() {
            Some(c) if !c.is_zero() => Ok(RationalFunction {
                numerator,
                denominator,
            }),
            _ => Err(Error::ZeroDenominatorConstant),
        }
    }

    pub fn from_i64s(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        Self::new(
            numerator.iter().map(|&c| BigInt::from(c)).collect(),
            denominator.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    /// Power series expansion through `z^order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let d0 = rat(self.denominator[0].clone());
        let mut s = TruncatedSeries::zero(order);
        for n in 0..=order {
            let mut acc = self
                .numerator
                .get(n)
                .map(|c| rat(c.clone()))
                .unwrap_or_default();
            for (k, d) in self.denominator.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    acc -= rat(d.clone()) * &s.coeffs[n - k];
                }
            }
            s.coeffs[n] = acc / &d0;
        }
        s
    }
}

/// Product of two integer polynomials.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// A power series in `z` and `u` with `[z^n u^m] = 0` whenever `m > n`.
///
/// Row `n` stores the coefficients of `z^n u^0 ..= z^n u^n`. Truncation is
/// in `z` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<Vec<BigRational>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            rows: (0..=order)
                .map(|n| vec![BigRational::zero(); n + 1])
                .collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0][0] = BigRational::one();
        s
    }

    /// Builds a series from a coefficient function evaluated on the
    /// triangle `0 <= m <= n <= order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        BivariateSeries {
            rows: (0..=order)
                .map(|n| (0..=n).map(|m| f(n, m)).collect())
                .collect(),
        }
    }

    /// `u^m * f(z)`; terms of `f` below `z^m` must vanish.
    pub fn from_univariate_times_u_power(f: &TruncatedSeries, m: usize) -> Result<Self> {
        let order = f.order();
        let mut s = Self::zero(order);
        for (n, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if m > n {
                return Err(Error::OutsideTriangle { n, m });
            }
            s.rows[n][m] = c.clone();
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[z^n u^m]`, zero outside the stored triangle.
    pub fn coeff(&self, n: usize, m: usize) -> BigRational {
        self.rows
            .get(n)
            .and_then(|row| row.get(m))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        Ok(Self::from_fn(self.order(), |n, m| {
            &self.rows[n][m] + &other.rows[n][m]
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        Ok(Self::from_fn(self.order(), |n, m| {
            &self.rows[n][m] - &other.rows[n][m]
        }))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_fn(self.order(), |n, m| &self.rows[n][m] * c)
    }

    fn nonzero_terms(&self) -> Vec<(usize, usize, &BigRational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(move |(m, c)| (n, m, c))
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_orders(self.order(), other.order())?;
        let order = self.order();
        let mut out = Self::zero(order);
        let rhs = other.nonzero_terms();
        for (n1, m1, a) in self.nonzero_terms() {
            for &(n2, m2, b) in &rhs {
                if n1 + n2 <= order {
                    out.rows[n1 + n2][m1 + m2] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by a series in `z` alone.
    pub fn mul_univariate(&self, f: &TruncatedSeries) -> Result<Self> {
        check_orders(self.order(), f.order())?;
        self.mul(&Self::from_univariate_times_u_power(f, 0)?)
    }

    /// Multiplies by `u`. Fails if a term on the diagonal `m = n` would
    /// leave the triangle.
    pub fn mul_u(&self) -> Result<Self> {
        for (n, row) in self.rows.iter().enumerate() {
            if !row[n].is_zero() {
                return Err(Error::OutsideTriangle { n, m: n + 1 });
            }
        }
        Ok(Self::from_fn(self.order(), |n, m| {
            if m == 0 {
                BigRational::zero()
            } else {
                self.coeff(n, m - 1)
            }
        }))
    }

    pub fn quasi_inverse(&self) -> Result<Self> {
        if !self.rows[0][0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let g = self.nonzero_terms();
        let mut h = Self::one(order);
        for n in 1..=order {
            for &(k, j, c) in &g {
                if k > n {
                    continue;
                }
                for m in j..=n {
                    let prev = h.coeff(n - k, m - j);
                    if !prev.is_zero() {
                        h.rows[n][m] += c * prev;
                    }
                }
            }
        }
        Ok(h)
    }

    pub fn log_quasi_inverse(&self) -> Result<Self> {
        if !self.rows[0][0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        let mut power = self.clone();
        for i in 1..=order {
            if power.is_zero() {
                break;
            }
            out = out.add(&power.scale(&BigRational::new(BigInt::one(), BigInt::from(i))))?;
            power = power.mul(self)?;
        }
        Ok(out)
    }

    /// `f(z^k, u^k)`.
    pub fn substitute_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroArgument);
        }
        let order = self.order();
        let mut out = Self::zero(order);
        for (n, m, c) in self.nonzero_terms() {
            if n * k <= order {
                out.rows[n * k][m * k] = c.clone();
            }
        }
        Ok(out)
    }

    /// `f(z, 1)`.
    pub fn at_u_one(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.rows.iter().map(|row| row.iter().sum::<BigRational>()),
            self.order(),
        )
    }

    /// `d/du f(z, u)` at `u = 1`, i.e. `sum_n (sum_m m c[n][m]) z^n`.
    pub fn partial_u_at_1(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.rows.iter().map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(m, c)| c * rat(m))
                    .sum::<BigRational>()
            }),
            self.order(),
        )
    }

    /// `u d/du f(z, u)`: coefficient `m c[n][m]` at `z^n u^m`.
    pub fn u_partial_u(&self) -> Self {
        Self::from_fn(self.order(), |n, m| &self.rows[n][m] * rat(m))
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.is_integer())
    }

    /// Integer view of the triangle. Fails on the first non-integral entry.
    pub fn integer_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(|(m, c)| integral(c, || format!("({n},{m})")))
                    .collect()
            })
            .collect()
    }
}

impl Serialize for BivariateSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.integer_rows().map_err(ser::Error::custom)?;
        let rows: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        let mut st = serializer.serialize_struct("BivariateSeries", 2)?;
        st.serialize_field("coeffs", &rows)?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn ser(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(c, order)
    }

    // exp(h) for h(0) = 0 via E' = h' E, written out independently of the
    // library's log implementation.
    fn exp_series(h: &TruncatedSeries) -> TruncatedSeries {
        let order = h.order();
        let mut e = vec![BigRational::zero(); order + 1];
        e[0] = BigRational::one();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += rat(k) * h.coeff(k) * &e[n - k];
            }
            e[n] = acc / rat(n);
        }
        TruncatedSeries::from_coeffs(e, order)
    }

    #[test]
    fn products() {
        let p = ser(&[1, 1], 6).mul(&ser(&[1, -1], 6)).unwrap();
        assert_eq!(p, ser(&[1, 0, -1], 6));
        let q = ser(&[0, 1, 1], 6).mul(&ser(&[0, 1, 1], 6)).unwrap();
        assert_eq!(q, ser(&[0, 0, 1, 2, 1], 6));
        let c = RationalFunction::from_i64s(&[1, -1], &[1, -2])
            .unwrap()
            .expand(6);
        assert_eq!(
            c.add(&TruncatedSeries::zero(6)).unwrap(),
            ser(&[1, 1, 2, 4, 8, 16, 32], 6)
        );
        assert_eq!(
            ser(&[1], 3).mul(&ser(&[1], 4)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn quasi_inverse_examples() {
        assert_eq!(
            ints(&ser(&[0, 1, 1], 7).quasi_inverse().unwrap()),
            vec![1, 1, 2, 3, 5, 8, 13, 21]
        );
        assert_eq!(
            TruncatedSeries::zero(5).quasi_inverse().unwrap(),
            TruncatedSeries::one(5)
        );
        let g = RationalFunction::from_i64s(&[0, 0, 1], &[1, -1])
            .unwrap()
            .expand(8);
        assert_eq!(
            ints(&g.quasi_inverse().unwrap()),
            vec![1, 0, 1, 1, 2, 3, 5, 8, 13]
        );
        assert_eq!(
            ser(&[1, 1], 4).quasi_inverse(),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn log_quasi_inverse_examples() {
        let l = ser(&[0, 1], 6).log_quasi_inverse().unwrap();
        for n in 1..=6 {
            assert_eq!(l.coeff(n), BigRational::new(1.into(), BigInt::from(n)));
        }
        assert!(l.coeff(0).is_zero());
        let l2 = ser(&[0, 2], 8).log_quasi_inverse().unwrap();
        for n in 1..=8usize {
            assert_eq!(
                l2.coeff(n),
                BigRational::new(BigInt::from(2).pow(n as u32), BigInt::from(n))
            );
        }
        assert_eq!(
            ser(&[3], 4).log_quasi_inverse(),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn exp_of_log_recovers_quasi_inverse() {
        for g in [
            ser(&[0, 1, 1], 12),
            ser(&[0, 0, 1, 1, 1, 1], 12),
            ser(&[0, 3, 0, -2, 5], 12),
        ] {
            let l = g.log_quasi_inverse().unwrap();
            assert_eq!(exp_series(&l), g.quasi_inverse().unwrap());
        }
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(
            ser(&[0, 1, 1], 6).substitute_power(2).unwrap(),
            ser(&[0, 0, 1, 0, 1], 6)
        );
        assert_eq!(
            TruncatedSeries::one(6).substitute_power(5).unwrap(),
            TruncatedSeries::one(6)
        );
        let geo = ser(&[0, 1], 9).quasi_inverse().unwrap();
        assert_eq!(
            ints(&geo.substitute_power(3).unwrap()),
            vec![1, 0, 0, 1, 0, 0, 1, 0, 0, 1]
        );
        assert_eq!(geo.substitute_power(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn expand_examples() {
        let fib = RationalFunction::from_i64s(&[1], &[1, -1, -1])
            .unwrap()
            .expand(7);
        assert_eq!(ints(&fib), vec![1, 1, 2, 3, 5, 8, 13, 21]);
        let r = RationalFunction::from_i64s(&[0, 1, -1], &[1, -1, -1])
            .unwrap()
            .expand(7);
        assert_eq!(ints(&r), vec![0, 1, 0, 1, 1, 2, 3, 5]);
        assert_eq!(
            RationalFunction::from_i64s(&[1], &[0, 1]),
            Err(Error::ZeroDenominatorConstant)
        );
        let half = RationalFunction::from_i64s(&[1], &[2]).unwrap().expand(2);
        assert_eq!(half.coeff(0), BigRational::new(1.into(), 2.into()));
        assert!(half.integer_coeffs().is_err());
    }

    #[test]
    fn partial_u_examples() {
        // sum_n u z^n
        let f = BivariateSeries::from_fn(6, |n, m| if n >= 1 && m == 1 { rat(1) } else { rat(0) });
        assert_eq!(ints(&f.partial_u_at_1()), vec![0, 1, 1, 1, 1, 1, 1]);
        assert!(BivariateSeries::zero(5).partial_u_at_1().is_zero());

        // u z (1 - z) / (1 - z - u z^2) = u z (1 - z) * 1/(1 - (z + u z^2))
        let order = 8;
        let g = BivariateSeries::from_fn(order, |n, m| match (n, m) {
            (1, 0) | (2, 1) => rat(1),
            _ => rat(0),
        });
        let num = BivariateSeries::from_fn(order, |n, m| match (n, m) {
            (1, 1) => rat(1),
            (2, 1) => rat(-1),
            _ => rat(0),
        });
        let a = num.mul(&g.quasi_inverse().unwrap()).unwrap();
        assert_eq!(ints(&a.partial_u_at_1()), vec![0, 1, 0, 2, 2, 5, 8, 15, 26]);
    }

    #[test]
    fn bivariate_matches_univariate_at_u_one() {
        let order = 10;
        let g = BivariateSeries::from_fn(order, |n, m| match (n, m) {
            (1, 1) | (2, 1) | (3, 2) => rat(1),
            (2, 0) => rat(2),
            _ => rat(0),
        });
        let g1 = g.at_u_one();
        assert_eq!(
            g.quasi_inverse().unwrap().at_u_one(),
            g1.quasi_inverse().unwrap()
        );
        assert_eq!(
            g.log_quasi_inverse().unwrap().at_u_one(),
            g1.log_quasi_inverse().unwrap()
        );
        assert_eq!(g.mul(&g).unwrap().at_u_one(), g1.mul(&g1).unwrap());
        assert_eq!(
            g.substitute_power(3).unwrap().at_u_one(),
            g1.substitute_power(3).unwrap()
        );
        let below = g
            .mul_univariate(&TruncatedSeries::monomial(rat(1), 1, order))
            .unwrap();
        assert_eq!(below.mul_u().unwrap().at_u_one(), below.at_u_one());
        assert!(g.mul_u().is_err());
    }

    #[test]
    fn json_shape() {
        let s = ser(&[1, 1, 2], 3);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"order": 3, "coeffs": ["1", "1", "2", "0"]})
        );
        let back: TruncatedSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
        let half = TruncatedSeries::monomial(BigRational::new(1.into(), 2.into()), 1, 2);
        assert!(serde_json::to_value(&half).is_err());
        assert_eq!(half.to_debug_json()["coeffs"][1], "1/2");
    }

    #[test]
    fn display() {
        assert_eq!(ser(&[1, -1, 0, 2], 3).to_string(), "1 - z + 2z^3 + O(z^4)");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0 + O(z^3)");
    }

    proptest::proptest! {
        #[test]
        fn quasi_inverse_is_inverse(c in proptest::collection::vec(-5i64..5, 1..12)) {
            let order = 11;
            let mut g = ser(&c, order);
            g = g.sub(&TruncatedSeries::monomial(g.coeff(0), 0, order)).unwrap();
            let h = g.quasi_inverse().unwrap();
            let one_minus_g = TruncatedSeries::one(order).sub(&g).unwrap();
            proptest::prop_assert_eq!(h.mul(&one_minus_g).unwrap(), TruncatedSeries::one(order));
        }

        #[test]
        fn log_derivative(c in proptest::collection::vec(-5i64..5, 1..12)) {
            let order = 11;
            let mut g = ser(&c, order);
            g = g.sub(&TruncatedSeries::monomial(g.coeff(0), 0, order)).unwrap();
            let lhs = g.log_quasi_inverse().unwrap().derivative();
            let rhs = g.derivative().mul(&g.quasi_inverse().unwrap().with_order(order - 1)).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_commutes_and_associates(
            a in proptest::collection::vec(-9i64..9, 1..10),
            b in proptest::collection::vec(-9i64..9, 1..10),
            c in proptest::collection::vec(-9i64..9, 1..10),
        ) {
            let (a, b, c) = (ser(&a, 9), ser(&b, 9), ser(&c, 9));
            proptest::prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            proptest::prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }
    }
}
