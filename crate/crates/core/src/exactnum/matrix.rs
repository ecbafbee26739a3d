use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix over Q(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// The matrix unit `e_{row,col}` (0-based).
    pub fn unit(rows: usize, cols: usize, row: usize, col: usize) -> Self {
        let mut m = ExactMatrix::zeros(rows, cols);
        m[(row, col)] = Scalar::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    expected: (n, cols),
                    got: (n, row.len()),
                });
            }
            data.extend(row);
        }
        Ok(ExactMatrix { rows: n, cols, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    /// Column vector.
    pub fn column(values: Vec<Scalar>) -> Self {
        ExactMatrix {
            rows: values.len(),
            cols: 1,
            data: values,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Scalar> {
        (row < self.rows && col < self.cols).then(|| &self.data[row * self.cols + col])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `(row, col, value)` for every nonzero entry in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(idx, v)| (idx / self.cols, idx % self.cols, v))
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn scale(&self, k: &Scalar) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    fn check_same_shape(&self, other: &ExactMatrix) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                expected: self.shape(),
                got: other.shape(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &ExactMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, k: &Scalar, other: &ExactMatrix) -> Result<()> {
        self.check_same_shape(other)?;
        if k.is_zero() {
            return Ok(());
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += &(k * b);
            }
        }
        Ok(())
    }

    /// Matrix product. Zero entries are skipped, which matters because almost every
    /// matrix in this crate is a sum of a handful of matrix units.
    pub fn try_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected: (self.cols, other.cols),
                got: other.shape(),
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * other.cols + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `xy - yx`
    pub fn commutator(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `xy + yx`
    pub fn anticommutator(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.try_mul(other)?.try_add(&other.try_mul(self)?)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Scalar;
    fn index(&self, (row, col): (usize, usize)) -> &Scalar {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of range");
        &self.data[row * self.cols + col]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut Scalar {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of range");
        &mut self.data[row * self.cols + col]
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).expect("matrix shapes differ")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).expect("matrix shapes differ")
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("inner dimensions differ")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form and the list of pivot columns.
///
/// Columns are scanned left to right; within a column the first row at or below the
/// current pivot row holding a nonzero entry becomes the pivot. The result is therefore
/// fully determined by the input.
pub fn rref(m: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let Some(found) = (pivot_row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(pivot_row, found);
        let inv = a[(pivot_row, col)].inverse().expect("pivot is nonzero");
        for j in col..a.cols {
            let idx = pivot_row * a.cols + j;
            if !a.data[idx].is_zero() {
                a.data[idx] = &a.data[idx] * &inv;
            }
        }
        for r in 0..a.rows {
            if r == pivot_row {
                continue;
            }
            let factor = a[(r, col)].clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..a.cols {
                let p = &a.data[pivot_row * a.cols + j];
                if p.is_zero() {
                    continue;
                }
                let delta = &factor * p;
                a.data[r * a.cols + j] -= &delta;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (a, pivots)
}

/// Basis of the right nullspace, one column vector per free column in ascending order.
/// The vector for free column `f` has a 1 in position `f` and zeros at the other free positions.
pub fn nullspace(m: &ExactMatrix) -> Vec<ExactMatrix> {
    let (reduced, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); m.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&reduced[(row, free)];
            }
            ExactMatrix::column(v)
        })
        .collect()
}

fn stack_flattened<'a>(vectors: impl IntoIterator<Item = &'a ExactMatrix>) -> Result<ExactMatrix> {
    let mut shape = None;
    let mut data = Vec::new();
    let mut count = 0;
    for v in vectors {
        match shape {
            None => shape = Some(v.shape()),
            Some(s) if s != v.shape() => {
                return Err(Error::ShapeMismatch {
                    expected: s,
                    got: v.shape(),
                })
            }
            Some(_) => {}
        }
        data.extend_from_slice(v.as_slice());
        count += 1;
    }
    let len = shape.map_or(0, |(r, c)| r * c);
    Ok(ExactMatrix {
        rows: count,
        cols: len,
        data,
    })
}

/// Dimension of the linear span of same-shaped matrices (treated as flat vectors).
pub fn span_dim<'a>(vectors: impl IntoIterator<Item = &'a ExactMatrix>) -> Result<usize> {
    Ok(stack_flattened(vectors)?.rank())
}

/// Expresses targets as exact linear combinations of a fixed independent family.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    vectors: Vec<ExactMatrix>,
    pivots: Vec<usize>,
    // Row i expresses the i-th reduced basis row in terms of the original vectors.
    transform: ExactMatrix,
}

impl SpanSolver {
    /// Fails with `Precondition` if the vectors are linearly dependent.
    pub fn new(vectors: Vec<ExactMatrix>) -> Result<Self> {
        let stacked = stack_flattened(&vectors)?;
        let k = stacked.rows;
        let len = stacked.cols;
        let augmented = ExactMatrix::from_fn(k, len + k, |i, j| {
            if j < len {
                stacked[(i, j)].clone()
            } else if j - len == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (reduced, pivots) = rref(&augmented);
        if pivots.iter().take_while(|&&p| p < len).count() != k {
            return Err(Error::Precondition("spanning vectors are linearly dependent".into()));
        }
        let transform = ExactMatrix::from_fn(k, k, |i, j| reduced[(i, len + j)].clone());
        Ok(SpanSolver {
            vectors,
            pivots,
            transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Coefficients `c` with `target = Σ c_k v_k`, or `None` if the target is outside the span.
    pub fn solve(&self, target: &ExactMatrix) -> Option<Vec<Scalar>> {
        let first = self.vectors.first();
        if first.map_or(!target.is_zero(), |v| v.shape() != target.shape()) {
            return None;
        }
        let k = self.dim();
        let mut coeffs = vec![Scalar::zero(); k];
        let flat = target.as_slice();
        for (i, &p) in self.pivots.iter().enumerate() {
            let t = &flat[p];
            if t.is_zero() {
                continue;
            }
            for (j, c) in coeffs.iter_mut().enumerate() {
                let e = &self.transform[(i, j)];
                if !e.is_zero() {
                    *c += &(t * e);
                }
            }
        }
        let mut rebuilt = ExactMatrix::zeros(target.rows(), target.cols());
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            rebuilt.add_scaled(c, v).ok()?;
        }
        (rebuilt == *target).then_some(coeffs)
    }
}
