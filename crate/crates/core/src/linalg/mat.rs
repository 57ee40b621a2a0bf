//! Dense rational matrices with exact elimination routines.

use super::rational::Rational;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::integer::lcm;
use num::{One, Zero};

/// A dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Mat {
    /// Builds a matrix from a row-major entry list.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat { rows, cols, entries })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::dim(format!(
                "ragged rows: expected {} columns, got {}",
                cols,
                bad.len()
            )));
        }
        let nrows = rows.len();
        Ok(Mat {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::dim(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| super::rational::dot(self.row(r), v))
            .collect())
    }

    /// Appends `b` as an extra column.
    pub fn augment(&self, b: &[Rational]) -> Result<Mat> {
        if b.len() != self.rows {
            return Err(Error::dim(format!(
                "augment column of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut m = Mat::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.at_mut(r, c) = self.at(r, c).clone();
            }
            *m.at_mut(r, self.cols) = b[r].clone();
        }
        Ok(m)
    }

    /// Exact determinant by fraction-free Bareiss elimination on an integer
    /// lift of the matrix (denominators cleared row by row).
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }

        // Integer lift: row i is scaled by the lcm of its denominators.
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let row = self.row(r);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| lcm(acc, x.denom().clone()));
            m.push(
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
            scale *= l;
        }

        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    // Bareiss: division by the previous pivot is exact.
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }

        let det = Rational::new(m[n - 1][n - 1].clone(), scale);
        Ok(if sign < 0 { -det } else { det })
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m.at(pivot_row, col).clone();
            for c in col..m.cols {
                let v = m.at(pivot_row, c).clone() / &inv;
                *m.at_mut(pivot_row, c) = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c).clone() - &f * m.at(pivot_row, c);
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}` as a canonical subspace of
    /// `Q^cols` with dimension `cols - rank`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        let mut next_pivot = 0;
        for col in 0..self.cols {
            if next_pivot < pivots.len() && pivots[next_pivot] == col {
                next_pivot += 1;
                continue;
            }
            // Free column: back-substitute with this coordinate set to one.
            let mut v = vec![Rational::zero(); self.cols];
            v[col] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, col).clone();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.cols, basis)
            .expect("kernel vectors share the ambient dimension")
    }

    /// Decides `M x = b` exactly. Returns a witness when consistent; the
    /// witness sets all free variables to zero.
    pub fn solve_consistent(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        let (r, pivots) = self.augment(b)?.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{rat, rint};

    fn mi(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rint(x)).collect()).collect())
            .unwrap()
    }

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &Mat) -> Rational {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        if n == 0 {
            return rint(1);
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = rint(0);
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = (1..n)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m.at(r, c).clone()).collect())
                .collect();
            let sub = det_cofactor(&Mat::from_rows(minor).unwrap());
            let term = m.at(0, j) * &sub;
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn det_identity_is_one() {
        assert_eq!(Mat::identity(2).det().unwrap(), rint(1));
    }

    #[test]
    fn det_repeated_column_is_zero() {
        assert_eq!(mi(&[&[1, 0], &[1, 0]]).det().unwrap(), rint(0));
    }

    #[test]
    fn det_three_by_three() {
        // Expansion by hand gives 1.
        assert_eq!(mi(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]).det().unwrap(), rint(1));
    }

    #[test]
    fn det_rejects_rectangular() {
        assert!(matches!(
            mi(&[&[1, 2, 3]]).det(),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn det_matches_cofactor_oracle_on_rational_entries() {
        let m = Mat::from_rows(vec![
            vec![rat(1, 2), rat(-3, 4), rint(2)],
            vec![rat(5, 3), rint(0), rat(1, 6)],
            vec![rint(-1), rat(7, 2), rat(2, 5)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), det_cofactor(&m));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::zeros(3, 3).rank(), 0);
        assert_eq!(Mat::identity(4).rank(), 4);
        // Third row is the sum of the first two.
        assert_eq!(mi(&[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(3).kernel_basis().dim(), 0);
        assert_eq!(mi(&[&[1, 1, -1]]).kernel_basis().dim(), 2);
        let k = mi(&[&[1, -1, 0], &[0, 1, -1]]).kernel_basis();
        assert_eq!(k.basis(), &[vec![rint(1), rint(1), rint(1)]]);
    }

    #[test]
    fn solve_examples() {
        let sol = Mat::identity(2).solve_consistent(&[rint(3), rint(5)]).unwrap();
        assert_eq!(sol, Some(vec![rint(3), rint(5)]));

        let none = mi(&[&[1, 0], &[1, 0]]).solve_consistent(&[rint(0), rint(1)]).unwrap();
        assert_eq!(none, None);

        let sol = mi(&[&[1, 0], &[0, 1], &[1, 1]])
            .solve_consistent(&[rint(1), rint(2), rint(3)])
            .unwrap();
        assert_eq!(sol, Some(vec![rint(1), rint(2)]));
    }

    #[test]
    fn solve_rejects_wrong_length() {
        assert!(Mat::identity(2).solve_consistent(&[rint(1)]).is_err());
    }
}
