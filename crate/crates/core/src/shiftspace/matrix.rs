use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense square matrix over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.data[i * dim + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| &self.data[i * self.dim + i]).sum()
    }

    /// Coefficients of `det(I - zA)`, lowest degree first, by the
    /// Faddeev-LeVerrier recurrence. Every division in it is exact.
    pub fn det_one_minus_z(&self) -> Vec<BigInt> {
        let n = self.dim;
        // c[k] is the coefficient of z^k, i.e. of lambda^(n-k) in det(lambda I - A).
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::one();
        let mut m = IntMatrix::zeros(n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                next.data[i * n + i] += &c[k - 1];
            }
            m = next;
            let t = self.mul(&m).trace();
            debug_assert!((&t % BigInt::from(k)).is_zero());
            c[k] = -(t / BigInt::from(k));
        }
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c
    }

    /// Submatrix keeping the listed indices, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> IntMatrix {
        let k = keep.len();
        let mut out = Self::zeros(k);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.data[a * k + b] = self.get(i, j).clone();
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn determinants() {
        let golden = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]);
        assert_eq!(ints(&golden.det_one_minus_z()), vec![1, -1, -1]);
        let full = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(ints(&full.det_one_minus_z()), vec![1, -2]);
        let ex = IntMatrix::from_rows(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]);
        assert_eq!(ints(&ex.det_one_minus_z()), vec![1, 0, -1, -1]);
        assert_eq!(ints(&IntMatrix::zeros(0).det_one_minus_z()), vec![1]);
    }

    #[test]
    fn products_and_traces() {
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]);
        let a2 = a.mul(&a);
        assert_eq!(a2, IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]));
        assert_eq!(a2.trace(), BigInt::from(3));
        assert_eq!(a.restrict(&[1]), IntMatrix::from_rows(&[vec![0]]));
    }
}
