use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

pub type Vector = Vec<Rational>;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

type SparseRow = Vec<(usize, Rational)>;

/// Row echelon form with unit pivots. `rows[i]` starts at column `pivots[i]`
/// with coefficient 1; pivot columns are strictly increasing.
struct Echelon {
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

/// `target - factor * source`, dropping cancelled entries.
fn axpy(target: &SparseRow, factor: &Rational, source: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        let ti = target.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let sj = source.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ti < sj {
            out.push(target[i].clone());
            i += 1;
        } else if sj < ti {
            out.push((sj, -(factor * &source[j].1)));
            j += 1;
        } else {
            let v = &target[i].1 - &(factor * &source[j].1);
            if !v.is_zero() {
                out.push((ti, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Forward elimination over columns `0..limit`. Rows are bucketed by their
/// leading column so that only rows with a nonzero entry in the current pivot
/// column are touched. Among candidate rows the sparsest (then smallest
/// leading entry) becomes the pivot, which keeps fill-in and entry growth low
/// on the very sparse differentials this crate produces.
///
/// Returns the echelon rows and the leftover nonzero rows whose leading
/// column is `>= limit`.
fn eliminate(rows: Vec<SparseRow>, ncols: usize, limit: usize) -> (Echelon, Vec<SparseRow>) {
    let mut buckets: Vec<Vec<SparseRow>> = vec![Vec::new(); ncols];
    for r in rows {
        if let Some(&(c, _)) = r.first() {
            buckets[c].push(r);
        }
    }
    let mut echelon = Echelon {
        rows: Vec::new(),
        pivots: Vec::new(),
    };
    for c in 0..limit.min(ncols) {
        let mut cand = std::mem::take(&mut buckets[c]);
        if cand.is_empty() {
            continue;
        }
        let best = cand
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (r.len(), r[0].1.height()))
            .map(|(i, _)| i)
            .unwrap();
        let mut pivot = cand.swap_remove(best);
        let inv = pivot[0].1.recip().expect("leading entry is nonzero");
        if !inv.is_one() {
            for e in pivot.iter_mut() {
                e.1 = &e.1 * &inv;
            }
        }
        for r in cand {
            let factor = r[0].1.clone();
            let reduced = axpy(&r, &factor, &pivot);
            if let Some(&(lead, _)) = reduced.first() {
                debug_assert!(lead > c);
                buckets[lead].push(reduced);
            }
        }
        echelon.rows.push(pivot);
        echelon.pivots.push(c);
    }
    let leftover = buckets.into_iter().skip(limit).flatten().collect();
    (echelon, leftover)
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows x cols` matrix from row-major data.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Convenience for literals in tests and the catalog.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Matrix) -> Result<Matrix> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// Stacks `self` above `below`.
    pub fn vstack(&self, below: &Matrix) -> Result<Matrix> {
        if self.cols != below.cols && self.rows > 0 && below.rows > 0 {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { below.cols };
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + below.rows,
            cols,
            data,
        })
    }

    fn sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        eliminate(self.sparse_rows(), self.cols, self.cols).0.pivots.len()
    }

    /// Basis of the kernel: one vector per non-pivot column, with a 1 in that
    /// column and zeros in the other free columns.
    pub fn null_space(&self) -> Vec<Vector> {
        let (ech, _) = eliminate(self.sparse_rows(), self.cols, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                back_substitute(&ech, &mut x);
                x
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let n = self.cols;
        let mut rows = self.sparse_rows();
        for (row, v) in rows.iter_mut().zip(b) {
            if !v.is_zero() {
                row.push((n, v.clone()));
            }
        }
        let (ech, leftover) = eliminate(rows, n + 1, n);
        if !leftover.is_empty() {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); n + 1];
        x[n] = -Rational::one();
        back_substitute(&ech, &mut x);
        x.truncate(n);
        Ok(Some(x))
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut a = self.clone();
        let mut prev = Rational::one();
        let mut negate = false;
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(Rational::zero());
                };
                for j in 0..n {
                    a.data.swap(k * n + j, swap * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[(i, j)] * &a[(k, k)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = &v / &prev;
                }
                a[(i, k)] = Rational::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut inv = Matrix::zeros(n, n);
        // Solve against each unit vector; the echelon form is rebuilt per
        // column, which is fine for the small change-of-basis matrices used here.
        let rows = self.sparse_rows();
        let mut augmented = rows;
        for (i, row) in augmented.iter_mut().enumerate() {
            row.push((n + i, Rational::one()));
        }
        let (ech, _) = eliminate(augmented, 2 * n, n);
        if ech.pivots.len() < n {
            return Err(Error::Singular);
        }
        for j in 0..n {
            let mut x = vec![Rational::zero(); 2 * n];
            x[n + j] = -Rational::one();
            back_substitute(&ech, &mut x);
            for i in 0..n {
                inv[(i, j)] = x[i].clone();
            }
        }
        Ok(inv)
    }
}

/// Row-sparse matrix for the large, very sparse differentials of the
/// cochain complexes. Rows hold `(column, value)` pairs sorted by column with
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl SparseMatrix {
    /// Builds from unsorted rows; duplicate columns are summed.
    pub fn new(rows: usize, cols: usize, data: Vec<Vec<(usize, Rational)>>) -> Self {
        assert_eq!(data.len(), rows, "row count");
        let data = data
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                let mut out: SparseRow = Vec::with_capacity(r.len());
                for (c, v) in r {
                    assert!(c < cols, "column {c} out of range {cols}");
                    match out.last_mut() {
                        Some(last) if last.0 == c => last.1 += &v,
                        _ => out.push((c, v)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        SparseMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.sparse_rows(),
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                m[(i, *j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                out[*j].push((i, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: out,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .map(|r| {
                r.iter()
                    .filter(|(j, _)| !v[*j].is_zero())
                    .map(|(j, x)| x * &v[*j])
                    .sum()
            })
            .collect())
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: Vec<(usize, Rational)> = Vec::new();
                for (k, a) in r {
                    for (j, b) in &rhs.data[*k] {
                        acc.push((*j, a * b));
                    }
                }
                acc
            })
            .collect();
        Ok(SparseMatrix::new(self.rows, rhs.cols, data))
    }

    pub fn rank(&self) -> usize {
        eliminate(self.data.clone(), self.cols, self.cols).0.pivots.len()
    }

    /// Kernel basis with the same normalization as [`Matrix::null_space`].
    pub fn null_space(&self) -> Vec<Vector> {
        let (ech, _) = eliminate(self.data.clone(), self.cols, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                back_substitute(&ech, &mut x);
                x
            })
            .collect()
    }

    /// The columns, as dense vectors.
    pub fn column_vectors(&self) -> Vec<Vector> {
        let mut out = vec![vec![Rational::zero(); self.rows]; self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                out[*j][i] = v.clone();
            }
        }
        out
    }
}

/// Fills the pivot coordinates of `x` so every echelon row evaluates to zero,
/// given the values already present in the non-pivot coordinates.
fn back_substitute(ech: &Echelon, x: &mut [Rational]) {
    for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
        let mut acc = Rational::zero();
        for (j, v) in row.iter().skip(1) {
            if !x[*j].is_zero() {
                acc += v * &x[*j];
            }
        }
        x[p] = -acc;
    }
}

/// Reduced row echelon basis of the span of `vectors` (all of length `dim`).
/// The result is canonical for the span: equal spans give equal output.
pub fn rref(vectors: &[Vector], dim: usize) -> (Vec<Vector>, Vec<usize>) {
    let rows: Vec<SparseRow> = vectors
        .iter()
        .map(|v| {
            debug_assert_eq!(v.len(), dim);
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect()
        })
        .collect();
    let (ech, _) = eliminate(rows, dim, dim);
    let mut dense: Vec<Vector> = ech
        .rows
        .iter()
        .map(|r| {
            let mut v = vec![Rational::zero(); dim];
            for (j, x) in r {
                v[*j] = x.clone();
            }
            v
        })
        .collect();
    for k in (0..dense.len()).rev() {
        let p = ech.pivots[k];
        let (upper, lower) = dense.split_at_mut(k);
        let pivot_row = &lower[0];
        for row in upper.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..dim {
                if !pivot_row[j].is_zero() {
                    let d = &f * &pivot_row[j];
                    row[j] -= d;
                }
            }
        }
    }
    (dense, ech.pivots)
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.row_vectors().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::zeros(4, 7).rank(), 0);
    }

    #[test]
    fn null_space_examples() {
        let ns = Matrix::from_ints(&[&[1, 1]]).null_space();
        assert_eq!(ns, vec![vec![q(-1), q(1)]]);
        assert!(Matrix::identity(2).null_space().is_empty());
        let ns = Matrix::zeros(2, 2).null_space();
        assert_eq!(ns.len(), 2);
        assert_eq!(Matrix::from_columns(2, &ns).rank(), 2);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(2);
        assert_eq!(id.solve(&[q(3), q(5)]).unwrap(), Some(vec![q(3), q(5)]));
        let ones = Matrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(ones.solve(&[q(1), q(2)]).unwrap(), None);
        let two = Matrix::from_ints(&[&[2]]);
        assert_eq!(two.solve(&[q(1)]).unwrap(), Some(vec![Rational::new(1, 2)]));
        assert!(two.solve(&[q(1), q(1)]).is_err());
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(5).det().unwrap(), q(1));
        assert_eq!(Matrix::from_ints(&[&[0, 4], &[4, 0]]).det().unwrap(), q(-16));
        // Killing matrix of sl2 in the (h, e, f) basis; cofactor expansion
        // along the first row gives 8 * (0*0 - 4*4) = -128.
        let killing = Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]);
        assert_eq!(killing.det().unwrap(), q(-128));
        assert!(matches!(
            Matrix::zeros(2, 3).det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        assert!(matches!(
            Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn rref_is_canonical() {
        let a = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(7)]];
        let b = vec![vec![q(3), q(6), q(10)], vec![q(0), q(0), q(5)]];
        assert_eq!(rref(&a, 3).0, rref(&b, 3).0);
        assert_eq!(rref(&a, 3).1, vec![0, 2]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix> {
            (1..=max, 1..=max).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                    Matrix::from_vec(r, c, v.into_iter().map(Rational::from_integer).collect())
                        .unwrap()
                })
            })
        }

        fn arb_invertible(n: usize) -> impl Strategy<Value = Matrix> {
            proptest::collection::vec(-2i64..=2, n * n).prop_filter_map("singular", move |v| {
                let m = Matrix::from_vec(n, n, v.into_iter().map(Rational::from_integer).collect())
                    .unwrap();
                (!m.det().unwrap().is_zero()).then_some(m)
            })
        }

        /// Cofactor expansion, independent of the elimination code.
        fn det_cofactor(m: &Matrix) -> Rational {
            let n = m.rows();
            if n == 0 {
                return Rational::one();
            }
            (0..n)
                .map(|j| {
                    let minor_rows: Vec<Vec<Rational>> = (1..n)
                        .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect())
                        .collect();
                    let minor = Matrix::from_vec(
                        n - 1,
                        n - 1,
                        minor_rows.into_iter().flatten().collect(),
                    )
                    .unwrap();
                    let term = &m[(0, j)] * &det_cofactor(&minor);
                    if j % 2 == 0 { term } else { -term }
                })
                .sum()
        }

        proptest! {
            #[test]
            fn rank_nullity(m in arb_matrix(7)) {
                let ns = m.null_space();
                prop_assert_eq!(m.rank() + ns.len(), m.cols());
                for v in &ns {
                    prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
                }
                if !ns.is_empty() {
                    prop_assert_eq!(Matrix::from_columns(m.cols(), &ns).rank(), ns.len());
                }
            }

            #[test]
            fn rank_invariant_under_invertible(
                m in arb_matrix(4).prop_filter("square-compatible", |m| m.rows() == 4),
                p in arb_invertible(4),
                q in arb_invertible(3),
            ) {
                let r = m.rank();
                prop_assert_eq!(p.mul(&m).unwrap().rank(), r);
                if m.cols() == 3 {
                    prop_assert_eq!(m.mul(&q).unwrap().rank(), r);
                }
                prop_assert_eq!(m.transpose().rank(), r);
            }

            #[test]
            fn solve_is_exact(m in arb_matrix(6), seed in proptest::collection::vec(-3i64..=3, 6)) {
                let x0: Vec<Rational> = seed.iter().take(m.cols()).map(|&v| Rational::from_integer(v))
                    .chain(std::iter::repeat(Rational::zero())).take(m.cols()).collect();
                let b = m.mul_vec(&x0).unwrap();
                let x = m.solve(&b).unwrap().expect("consistent by construction");
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }

            #[test]
            fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(|n|
                proptest::collection::vec(-4i64..=4, n * n).prop_map(move |v|
                    Matrix::from_vec(n, n, v.into_iter().map(Rational::from_integer).collect()).unwrap()))) {
                prop_assert_eq!(m.det().unwrap(), det_cofactor(&m));
            }

            #[test]
            fn sparse_agrees_with_dense(a in arb_matrix(6), b in arb_matrix(6)) {
                let sa = SparseMatrix::from_dense(&a);
                prop_assert_eq!(sa.to_dense(), a.clone());
                prop_assert_eq!(sa.rank(), a.rank());
                prop_assert_eq!(sa.null_space(), a.null_space());
                prop_assert_eq!(sa.transpose().to_dense(), a.transpose());
                if a.cols() == b.rows() {
                    let sb = SparseMatrix::from_dense(&b);
                    prop_assert_eq!(sa.mul(&sb).unwrap().to_dense(), a.mul(&b).unwrap());
                }
            }
        }
    }
}
