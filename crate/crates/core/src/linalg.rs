//! Tiny exact matrices. Everything here is at most 3x3, so the algorithms are
//! the textbook ones.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::Rational;

/// Square integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        IntMatrix { rows }
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            rows: vec![vec![0; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
            .collect();
        IntMatrix { rows }
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        debug_assert_eq!(v.len(), self.dim());
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn determinant(&self) -> i64 {
        det_generic(&self.rows)
    }

    /// Adjugate, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.dim();
        if n == 1 {
            return IntMatrix::from_rows(vec![vec![1]]);
        }
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<i64>> = (0..n)
                    .filter(|&r| r != i)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| self.rows[r][c])
                            .collect()
                    })
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                // cofactor (i, j) lands at (j, i)
                out.rows[j][i] = sign * det_generic(&minor);
            }
        }
        out
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        }
    }

    /// Exact inverse over the rationals, `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let det = self.determinant();
        if det == 0 {
            return None;
        }
        let adj = self.adjugate();
        Some(RatMatrix {
            rows: adj
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| Rational::new(v, det)).collect())
                .collect(),
        })
    }

    /// Block-diagonal assembly.
    pub fn block_diagonal(blocks: &[IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(IntMatrix::dim).sum();
        let mut out = IntMatrix::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    out.rows[off + i][off + j] = b.rows[i][j];
                }
            }
            off += b.dim();
        }
        out
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.dim();
        assert_eq!(n, rhs.dim());
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.rows[i][j] = (0..n).map(|k| self.rows[i][k] * rhs.rows[k][j]).sum();
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

fn det_generic<T>(m: &[Vec<T>]) -> T
where
    T: Copy + Zero + One + std::ops::Sub<Output = T> + Mul<Output = T> + std::ops::Neg<Output = T>,
{
    let n = m.len();
    match n {
        0 => T::one(),
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut acc = T::zero();
            for j in 0..n {
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = m[0][j] * det_generic(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Square rational matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: Vec<Vec<Rational>>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMatrix { rows }
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix::identity(n).to_rational()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        RatMatrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        det_generic(&self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| *q.numer() as f64 / *q.denom() as f64)
                    .collect()
            })
            .collect()
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        let n = self.dim();
        assert_eq!(n, rhs.dim());
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Rational::zero(), |acc, k| {
                            acc + self.rows[i][k] * rhs.rows[k][j]
                        })
                    })
                    .collect()
            })
            .collect();
        RatMatrix { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse_3x3() {
        let m = IntMatrix::from_rows(vec![vec![2, 0, 0], vec![0, 2, -3], vec![0, -1, 2]]);
        assert_eq!(m.determinant(), 2);
        let inv = m.inverse().unwrap();
        assert_eq!(&m.to_rational() * &inv, RatMatrix::identity(3));
        let adj = m.adjugate();
        let prod = &m * &adj;
        assert_eq!(prod, {
            let mut d = IntMatrix::identity(3);
            for i in 0..3 {
                d.set(i, i, 2);
            }
            d
        });
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_none());
    }
}
