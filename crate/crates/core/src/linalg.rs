//! Dense matrices over the exact rationals.
//!
//! Everything downstream (relation spaces, quotient bases, operator blocks,
//! weight filtrations) reduces to row reduction and rank over `BigRational`,
//! so this module keeps the representation deliberately plain: row-major
//! `Vec<BigRational>` with Gauss-Jordan elimination and recorded pivots.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used across the engine.
pub type Q = BigRational;

/// Dense row-major matrix over `Q`. Zero-row and zero-column shapes are
/// legal; they show up as blocks into or out of empty graded pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Builds from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged row lengths"
        );
        QMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from columns of length `rows` (columns may be empty).
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = QMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product; shapes must agree.
    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        RowEchelon::new(self.clone()).rank()
    }

    /// Determinant by fraction-free-ish Gaussian elimination; square only.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<Q>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Q::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Q::zero();
            };
            if pr != col {
                rows.swap(col, pr);
                det = -det;
            }
            det *= &rows[col][col];
            let pivot = rows[col][col].clone();
            let (head, tail) = rows.split_at_mut(col + 1);
            let prow = &head[col];
            for row in tail {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot;
                for (v, p) in row[col..].iter_mut().zip(&prow[col..]) {
                    *v -= &factor * p;
                }
            }
        }
        det
    }
}

/// Reduced row echelon form with its pivot columns.
///
/// Pivots are chosen greedily left to right, so the non-pivot columns are the
/// lexicographically earliest set completing the row space to the full
/// ambient space; quotient-basis selection relies on exactly that.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    /// Nonzero rows of the RREF, one per pivot, in pivot order.
    rows: Vec<Vec<Q>>,
    /// Strictly increasing pivot column indices.
    pivots: Vec<usize>,
    width: usize,
}

impl RowEchelon {
    pub fn new(m: QMatrix) -> Self {
        let width = m.cols();
        let mut rows: Vec<Vec<Q>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..width {
            let Some(pr) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, pr);
            let inv = rows[next][col].clone().recip();
            for v in rows[next][col..].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= &factor * p;
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(pivots.len());
        RowEchelon {
            rows,
            pivots,
            width,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The i-th nonzero RREF row (pivot order).
    pub fn row(&self, i: usize) -> &[Q] {
        &self.rows[i]
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Columns without a pivot, ascending.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.width - self.pivots.len());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.width {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Subtracts row-space elements until every pivot coordinate of `v`
    /// vanishes. The result is the canonical representative of `v` modulo
    /// the row space, supported on the non-pivot columns.
    pub fn reduce_vector(&self, v: &mut [Q]) {
        assert_eq!(v.len(), self.width, "vector width mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v[p..].iter_mut().zip(&row[p..]) {
                *x -= &factor * r;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn test_rank_of_singular_and_full_matrices() {
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(mat(&[&[1, 0], &[0, 3]]).rank(), 2);
        assert_eq!(QMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(QMatrix::zeros(0, 5).rank(), 0);
    }

    #[test]
    fn test_pivots_are_leftmost() {
        let e = RowEchelon::new(mat(&[&[0, 1, 1], &[0, 2, 3]]));
        assert_eq!(e.pivots(), &[1, 2]);
        assert_eq!(e.non_pivots(), vec![0]);
    }

    #[test]
    fn test_reduce_vector_clears_pivot_coordinates() {
        let e = RowEchelon::new(mat(&[&[1, 0, -1], &[0, 1, -1]]));
        let mut v = vec![q(1), q(1), q(1)];
        e.reduce_vector(&mut v);
        assert_eq!(v, vec![q(0), q(0), q(3)]);
    }

    #[test]
    fn test_product_and_identity() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul(&QMatrix::identity(2)), a);
        let b = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), mat(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn test_determinant_signs_and_singularity() {
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).determinant(), q(-2));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), q(-1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant(), q(0));
        assert_eq!(
            mat(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).determinant(),
            q(30)
        );
    }

    #[test]
    fn test_empty_shapes_multiply() {
        let a = QMatrix::zeros(0, 3);
        let b = QMatrix::zeros(3, 2);
        assert_eq!(a.mul(&b).rows(), 0);
        let c = QMatrix::zeros(2, 0);
        let d = QMatrix::zeros(0, 4);
        let p = c.mul(&d);
        assert_eq!((p.rows(), p.cols()), (2, 4));
        assert!(p.is_zero());
    }
}
