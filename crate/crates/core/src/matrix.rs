//! Dense exact matrices indexed by arcs.
//!
//! Entry `(b, a)` (row `b`, column `a`) is the coefficient from arc `a` to
//! arc `b`, so matrices act on column vectors.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

/// Square matrix over a ring of exact scalars, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

pub type IntMatrix = DenseMatrix<BigInt>;
pub type RatMatrix = DenseMatrix<Rational>;

impl<T: std::fmt::Debug> std::fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for row in self.data.chunks(self.dim.max(1)) {
            list.entry(&row);
        }
        list.finish()
    }
}

impl<T> DenseMatrix<T>
where
    T: Clone + Zero + One + PartialEq,
{
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix { dim, data: vec![T::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = T::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        DenseMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let dim = self.dim;
        self.data.iter().enumerate().map(move |(i, v)| (i / dim, i % dim, v))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        DenseMatrix { dim: self.dim, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let acc = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in acc.iter_mut().zip(&other.data[k * n..(k + 1) * n]) {
                    if !b.is_zero() {
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// `self^exp`; `self^0` is the identity.
    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::identity(self.dim);
        for _ in 0..exp {
            result = result.mul(self);
        }
        result
    }

    /// Permutes rows: `out[p(r)] = self[r]` becomes `out[r] = self[perm[r]]`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(perm[i], j).clone())
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, perm[j]).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.entries().all(|(i, j, v)| if i == j { v.is_one() } else { v.is_zero() })
    }
}

impl<T: Display> DenseMatrix<T> {
    /// Row-major CSV, one matrix row per line, exact entries (`p/q` for
    /// non-integral rationals).
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.data.chunks(self.dim.max(1)) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Types whose entries have an exact sign.
pub trait PositiveSupport {
    /// 0/1 matrix marking the strictly positive entries.
    fn positive_support(&self) -> IntMatrix;
}

impl<T: Signed + Clone + Zero + One + PartialEq> PositiveSupport for DenseMatrix<T> {
    fn positive_support(&self) -> IntMatrix {
        self.map(|v| if v.is_positive() { BigInt::one() } else { BigInt::zero() })
    }
}

impl IntMatrix {
    /// Every entry is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|v| v.is_zero() || v.is_one())
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|v| Rational::from_integer(v.clone()))
    }

    /// Characteristic polynomial `det(x I - self)`, constant term first.
    ///
    /// Reduces to upper Hessenberg form over the rationals and runs the
    /// standard Hessenberg recurrence; the result is integral.
    pub fn charpoly(&self) -> Vec<BigInt> {
        let n = self.dim;
        let mut h: Vec<Vec<Rational>> =
            (0..n).map(|i| self.row(i).iter().map(|v| Rational::from_integer(v.clone())).collect()).collect();

        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if piv != m {
                h.swap(piv, m);
                for row in h.iter_mut() {
                    row.swap(piv, m);
                }
            }
            for j in m + 1..n {
                if h[j][m - 1].is_zero() {
                    continue;
                }
                let u = &h[j][m - 1] / &h[m][m - 1];
                let pivot_row = h[m].clone();
                for (x, p) in h[j].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &u * p;
                    }
                }
                for row in h.iter_mut() {
                    let add = &u * &row[j];
                    if !add.is_zero() {
                        row[m] += add;
                    }
                }
            }
        }

        // p[m] = char poly of the leading m x m block
        let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for m in 1..=n {
            let prev = &p[m - 1];
            let mut next = vec![Rational::zero(); m + 1];
            for (i, c) in prev.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &h[m - 1][m - 1];
            }
            let mut t = Rational::one();
            for i in 1..m {
                t *= &h[m - i][m - i - 1];
                if t.is_zero() {
                    break;
                }
                let coef = &t * &h[m - i - 1][m - 1];
                if coef.is_zero() {
                    continue;
                }
                for (k, c) in p[m - i - 1].iter().enumerate() {
                    next[k] -= &coef * c;
                }
            }
            p.push(next);
        }
        p.pop()
            .expect("non-empty")
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "integer matrix has integral char poly");
                c.to_integer()
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}
