//! Small dense square matrices over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = alloc::vec![Rational::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Rational::one();
        }
        RationalMatrix { dim, data }
    }

    /// Square matrix from rows; panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        RationalMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.dim.max(1))
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let factor = &a[r * n + col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &factor * &a[col * n + j];
                    a[r * n + j] -= v;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].recip();
            for j in 0..n {
                a[col * n + j] *= &p;
                inv[col * n + j] *= &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let va = &factor * &a[col * n + j];
                    a[r * n + j] -= va;
                    let vi = &factor * &inv[col * n + j];
                    inv[r * n + j] -= vi;
                }
            }
        }
        Some(RationalMatrix { dim: n, data: inv })
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.dim;
        assert_eq!(n, other.dim);
        let mut data = alloc::vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        RationalMatrix { dim: n, data }
    }
}
