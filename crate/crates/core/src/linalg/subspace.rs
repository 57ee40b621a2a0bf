//! Linear subspaces of `Q^n` in canonical form.
//!
//! A subspace is stored as the reduced row-echelon basis of its row span,
//! so two subspaces are equal as sets exactly when their representations
//! are equal component-wise.

use super::mat::Mat;
use super::rational::Rational;
use crate::error::{Error, Result};
use num::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// The zero subspace of `Q^ambient_dim`.
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// All of `Q^ambient_dim`.
    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim).row_vecs(),
        }
    }

    /// Span of the given vectors, canonicalized to a reduced row-echelon
    /// basis with zero rows dropped.
    pub fn from_rows(
        ambient_dim: usize,
        rows: impl IntoIterator<Item = Vec<Rational>>,
    ) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = rows.into_iter().collect();
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient_dim) {
            return Err(Error::dim(format!(
                "spanning vector of length {} in ambient dimension {}",
                bad.len(),
                ambient_dim
            )));
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient_dim));
        }
        let (rref, pivots) = Mat::from_rows(rows)?.rref();
        let basis = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The canonical (reduced row-echelon) basis rows.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Set equality of spans; with canonical storage this is representation
    /// equality.
    pub fn equal(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Membership of a vector in the span.
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::dim(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        Ok(super::rational::is_zero_vec(&self.reduce(v)))
    }

    /// Residue of `v` after eliminating every pivot coordinate of the basis.
    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis has no zero rows");
            if v[pivot].is_zero() {
                continue;
            }
            let f = v[pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    /// True when `self` is contained in `other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Span of the union of the two bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::from_rows(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Intersection, computed through the kernel of the stacked constraint
    /// systems of both spans.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let constraints = self
            .orthogonal_complement()
            .sum(&other.orthogonal_complement())?;
        Ok(constraints.orthogonal_complement())
    }

    /// The subspace of vectors orthogonal to every basis vector.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        Mat::from_rows(self.basis.clone())
            .expect("canonical basis rows are equally long")
            .kernel_basis()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::dim(format!(
                "subspaces of ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::rint;

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect::<Vec<_>>()),
        )
        .unwrap()
    }

    #[test]
    fn scaling_does_not_change_span() {
        assert!(span(2, &[&[1, 0]]).equal(&span(2, &[&[2, 0]])).unwrap());
        assert!(!span(2, &[&[1, 0]]).equal(&span(2, &[&[0, 1]])).unwrap());
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = span(3, &[&[1, 2, 1], &[1, 1, 0]]);
        assert!(a.equal(&b).unwrap());
    }

    #[test]
    fn membership() {
        let s = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(s.contains(&[rint(0), rint(0), rint(0)]).unwrap());
        assert!(s.contains(&[rint(1), rint(2), rint(1)]).unwrap());
        assert!(!span(2, &[&[0, 1]]).contains(&[rint(1), rint(0)]).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let a = span(3, &[&[1, 0, 0]]);
        let b = span(3, &[&[0, 1, 0]]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);

        let c = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let d = span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let meet = c.intersect(&d).unwrap();
        assert!(meet.equal(&span(3, &[&[0, 1, 0]])).unwrap());

        let zero = Subspace::zero(3);
        assert!(a.sum(&zero).unwrap().equal(&a).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert!(span(2, &[&[1, 0]]).equal(&span(3, &[&[1, 0, 0]])).is_err());
        assert!(span(2, &[&[1, 0]]).sum(&span(3, &[&[1, 0, 0]])).is_err());
        assert!(span(2, &[&[1, 0]]).contains(&[rint(1)]).is_err());
    }
}
