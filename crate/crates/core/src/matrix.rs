//! Dense exact `n × n` matrices over a ring `R` or its fraction field `K`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{lcm, Field, Frac, GcdDomain, Scalar};

/// A square matrix stored row-major. Value type: operations return new
/// matrices and never mutate their inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Mat { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Mat { n, data })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The matrix unit `E_ij` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { row: i + 1, col: j + 1, n });
        }
        Ok(Self::from_fn(n, |r, c| if r == i && c == j { T::one() } else { T::zero() }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let n = self.n;
        self.data.iter().enumerate().map(move |(k, v)| (k / n, k % n, v))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Mat { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.clone() * b.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Every entry is `≥ 0`.
    pub fn is_nonneg(&self) -> bool {
        self.data.iter().all(Scalar::is_nonneg)
    }

    /// First negative entry in row-major order.
    pub fn first_negative(&self) -> Option<(usize, usize, &T)> {
        self.entries().find(|(_, _, v)| !v.is_nonneg())
    }

    /// Entrywise maximum.
    pub fn max_entrywise(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| if a >= b { a.clone() } else { b.clone() })
    }

    /// Entrywise minimum.
    pub fn min_entrywise(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| if a <= b { a.clone() } else { b.clone() })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: rhs.n });
        }
        Ok(self * rhs)
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let m = self.n - 1;
        Self::from_fn(m, |i, j| {
            let r = if i < row { i } else { i + 1 };
            let c = if j < col { j } else { j + 1 };
            self.get(r, c).clone()
        })
    }

    /// Exact determinant: cofactor expansion up to 3 × 3, Bareiss
    /// fraction-free elimination above.
    pub fn det(&self) -> T {
        let a = |i, j| self.get(i, j).clone();
        match self.n {
            0 => T::one(),
            1 => a(0, 0),
            2 => a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0),
            3 => {
                a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                    - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                    + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
            }
            _ => self.det_bareiss(),
        }
    }

    /// Bareiss elimination; every division is exact in an integral domain.
    pub fn det_bareiss(&self) -> T {
        let n = self.n;
        let mut m = self.to_rows();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = T::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// The classical adjoint: `M · adj(M) = adj(M) · M = det(M) · I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, |i, j| {
            let c = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }
}

impl<R: GcdDomain> Mat<R> {
    /// Inverse over `R`, which exists exactly when `det` is a unit of `R`.
    pub fn inverse_unit(&self) -> Result<Self> {
        let det = self.det();
        let inv = det.unit_inverse().ok_or_else(|| Error::NotAUnit { det: det.to_string() })?;
        Ok(self.adjugate().scale(&inv))
    }

    /// Embeds the matrix into `M_n(K)`.
    pub fn to_field(&self) -> Mat<Frac<R>> {
        self.map(|x| Frac::from_ring(x.clone()))
    }
}

impl<R: GcdDomain> Mat<Frac<R>> {
    /// The matrix as a member of `M_n(R)`, if every entry lies in `R`.
    pub fn to_ring(&self) -> Option<Mat<R>> {
        let data = self.data.iter().map(Frac::to_ring).collect::<Option<Vec<_>>>()?;
        Some(Mat { n: self.n, data })
    }

    /// Returns `(k, N)` with `k > 0` the lcm of the denominators (up to a
    /// unit) and `N = k · M` over `R`.
    pub fn clear_denominators(&self) -> (R, Mat<R>) {
        let k = self
            .data
            .iter()
            .fold(R::one(), |acc, x| lcm(&acc, x.denom()).expect("denominators are nonzero"));
        let kf = Frac::from_ring(k.clone());
        let n = self
            .scale(&kf)
            .to_ring()
            .expect("k clears every denominator");
        (k, n)
    }
}

impl<F: Field> Mat<F> {
    /// Inverse over the field, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        let inv = det.inv()?;
        Some(self.adjugate().scale(&inv))
    }

    /// Solves `self · Y = rhs` by Gauss–Jordan elimination. Independent of
    /// the adjugate route used by [`Mat::inverse`].
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        let cols = solve_columns(self.to_rows(), rhs.to_rows())?;
        Self::from_rows(cols).ok()
    }
}

/// Solves `A · Y = B` for square `A` (given as rows) over a field by
/// Gauss–Jordan elimination with first-nonzero pivoting. `B` has one row per
/// row of `A` and any number of columns. Returns `None` if `A` is singular.
pub fn solve_columns<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<Vec<F>>) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return None;
    }
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inv()?;
        for v in a[col].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for v in b[col].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let v = a[r][c].clone() - f.clone() * a[col][c].clone();
                a[r][c] = v;
            }
            for c in 0..b[r].len() {
                let v = b[r][c].clone() - f.clone() * b[col][c].clone();
                b[r][c] = v;
            }
        }
    }
    Some(b)
}

/// Rank of a list of vectors over a field.
pub fn rank<F: Field>(mut vectors: Vec<Vec<F>>) -> usize {
    let mut rank = 0;
    let width = vectors.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(p) = (rank..vectors.len()).find(|&r| !vectors[r][col].is_zero()) else {
            continue;
        };
        vectors.swap(rank, p);
        let inv = vectors[rank][col].inv().expect("pivot is nonzero");
        for r in rank + 1..vectors.len() {
            if vectors[r][col].is_zero() {
                continue;
            }
            let f = vectors[r][col].clone() * inv.clone();
            for c in col..width {
                let v = vectors[r][c].clone() - f.clone() * vectors[rank][c].clone();
                vectors[r][c] = v;
            }
        }
        rank += 1;
    }
    rank
}

impl<T: Scalar> Mul for &Mat<T> {
    type Output = Mat<T>;

    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        Mat::from_fn(n, |i, j| T::dot((0..n).map(|k| (self.get(i, k), rhs.get(k, j)))))
    }
}

impl<T: Scalar> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &Mat<T>) -> Mat<T> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }
}

impl<T: Scalar> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: &Mat<T>) -> Mat<T> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }
}

impl<T: Scalar> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        self.map(|a| -a.clone())
    }
}

impl<T: Scalar> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
