//! Elementary arithmetic functions and Möbius inversion.
//!
//! Everything here works by trial division. Arguments are bounded by the
//! truncation order of a series computation, so nothing fancier is needed.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence `a_1, a_2, ..., a_N` of big integers, indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithSequence {
    values: Vec<BigInt>,
}

impl ArithSequence {
    /// Builds a sequence from its terms `a_1..a_N`. Rejects an empty list.
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::ZeroArgument);
        }
        Ok(ArithSequence { values })
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Term `a_n`. Index 0 does not exist.
    pub fn get(&self, n: usize) -> Result<&BigInt> {
        if n == 0 || n > self.values.len() {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.values.len(),
            });
        }
        Ok(&self.values[n - 1])
    }

    /// Terms in order, starting at `a_1`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Iterates `(n, a_n)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

/// Euler's totient: the number of `1 <= k <= n` coprime to `n`.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Recovers `q_n = sum_{k | n} mu(n/k) p_k` from `p`.
pub fn mobius_invert(p: &ArithSequence) -> ArithSequence {
    let values = (1..=p.len() as u64)
        .map(|n| {
            divisors(n)
                .expect("n >= 1")
                .into_iter()
                .fold(BigInt::zero(), |acc, k| {
                    let mu = mobius(n / k).expect("n/k >= 1");
                    acc + BigInt::from(mu) * &p.values[k as usize - 1]
                })
        })
        .collect();
    ArithSequence { values }
}

/// Forward transform `p_n = sum_{k | n} q_k`.
pub fn divisor_sum(q: &ArithSequence) -> ArithSequence {
    let values = (1..=q.len() as u64)
        .map(|n| {
            divisors(n)
                .expect("n >= 1")
                .into_iter()
                .map(|k| &q.values[k as usize - 1])
                .sum()
        })
        .collect();
    ArithSequence { values }
}
