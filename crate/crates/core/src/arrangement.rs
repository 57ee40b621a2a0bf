//! Central generic arrangements and their parallel translates.
//!
//! An arrangement is given purely by its normal vectors: hyperplane `i` is
//! `{x : a_i . x = 0}`, and a translate vector `t` moves it to
//! `{x : a_i . x = t_i}`. Hyperplane indices are 0-based throughout the
//! library API.

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Mat, Rational, Subspace};
use itertools::Itertools;

/// A central arrangement of `n` hyperplanes through the origin of `Q^k`
/// whose normals are generic: every `k` of them are linearly independent.
///
/// Genericity is validated eagerly at construction, over all `C(n, k)`
/// subsets; everything downstream assumes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralArrangement {
    k: usize,
    normals: Vec<Vec<Rational>>,
}

/// A point of the space of translates: one offset per hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translate {
    coords: Vec<Rational>,
}

impl Translate {
    pub fn new(coords: Vec<Rational>) -> Self {
        Translate { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// The origin of the space of translates, i.e. the central position.
    pub fn origin(n: usize) -> Self {
        Translate {
            coords: vec![Rational::from_integer(0.into()); n],
        }
    }
}

impl From<Vec<Rational>> for Translate {
    fn from(coords: Vec<Rational>) -> Self {
        Translate::new(coords)
    }
}

impl CentralArrangement {
    /// Validates and builds an arrangement from its normal vectors.
    ///
    /// Fails with [`Error::ZeroNormal`] on a zero normal and with
    /// [`Error::NotGeneric`] carrying the first offending subset (in
    /// lexicographic order) when some `k` normals are dependent.
    pub fn new(k: usize, normals: Vec<Vec<Rational>>) -> Result<Self> {
        let n = normals.len();
        if k == 0 || k >= n {
            return Err(Error::pre(format!(
                "need 1 <= k < n, got k = {k}, n = {n}"
            )));
        }
        if let Some((i, bad)) = normals.iter().enumerate().find(|(_, v)| v.len() != k) {
            let _ = i;
            return Err(Error::dim(format!(
                "normal of length {} in ambient dimension {k}",
                bad.len()
            )));
        }
        if let Some(i) = normals.iter().position(|v| is_zero_vec(v)) {
            return Err(Error::ZeroNormal(i));
        }
        let arr = CentralArrangement { k, normals };
        for subset in (0..n).combinations(k) {
            if !arr.subset_has_full_rank(&subset) {
                return Err(Error::NotGeneric(subset));
            }
        }
        Ok(arr)
    }

    pub fn n(&self) -> usize {
        self.normals.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn normal(&self, i: usize) -> &[Rational] {
        &self.normals[i]
    }

    pub fn normals(&self) -> &[Vec<Rational>] {
        &self.normals
    }

    /// The `n x k` matrix whose rows are the normals.
    pub fn normal_matrix(&self) -> Mat {
        Mat::from_rows(self.normals.clone()).expect("normals are equally long")
    }

    fn subset_has_full_rank(&self, idxs: &[usize]) -> bool {
        let rows: Vec<Vec<Rational>> = idxs.iter().map(|&i| self.normals[i].clone()).collect();
        let m = Mat::from_rows(rows).expect("normals are equally long");
        m.rank() == idxs.len()
    }

    /// Whether the selected normals are linearly independent.
    ///
    /// Requires `|idxs| <= k`; always true on a valid arrangement, exposed
    /// for use during validation-style queries.
    pub fn is_generic_subset(&self, idxs: &[usize]) -> Result<bool> {
        let idxs = self.checked_index_set(idxs)?;
        if idxs.len() > self.k {
            return Err(Error::pre(format!(
                "subset of size {} exceeds k = {}",
                idxs.len(),
                self.k
            )));
        }
        Ok(self.subset_has_full_rank(&idxs))
    }

    /// The space of central translates: all `t` with `t_i = a_i . v` for a
    /// single point `v`, i.e. the column space of the normal matrix. Its
    /// dimension is exactly `k`.
    pub fn central_subspace(&self) -> Subspace {
        let cols = self.normal_matrix().transpose().row_vecs();
        Subspace::from_rows(self.n(), cols).expect("columns have length n")
    }

    /// Decides whether the translated hyperplanes indexed by `idxs` share a
    /// point, and returns one witness point if so.
    pub fn common_point(
        &self,
        t: &Translate,
        idxs: &[usize],
    ) -> Result<Option<Vec<Rational>>> {
        let idxs = self.checked_index_set(idxs)?;
        if idxs.is_empty() {
            return Err(Error::pre("index set must be nonempty".to_string()));
        }
        self.check_translate(t)?;
        let rows: Vec<Vec<Rational>> = idxs.iter().map(|&i| self.normals[i].clone()).collect();
        let rhs: Vec<Rational> = idxs.iter().map(|&i| t.coords()[i].clone()).collect();
        Mat::from_rows(rows)?.solve_consistent(&rhs)
    }

    pub(crate) fn check_translate(&self, t: &Translate) -> Result<()> {
        if t.len() != self.n() {
            return Err(Error::dim(format!(
                "translate of length {} for an arrangement with n = {}",
                t.len(),
                self.n()
            )));
        }
        Ok(())
    }

    /// Validates an index set against `[n]`, returning it sorted.
    pub(crate) fn checked_index_set(&self, idxs: &[usize]) -> Result<Vec<usize>> {
        let mut sorted = idxs.to_vec();
        sorted.sort_unstable();
        if let Some(&i) = sorted.iter().find(|&&i| i >= self.n()) {
            return Err(Error::pre(format!(
                "hyperplane index {i} out of range for n = {}",
                self.n()
            )));
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::pre("repeated hyperplane index".to_string()));
        }
        Ok(sorted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rint, Subspace};

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rint(x)).collect())
            .collect()
    }

    #[test]
    fn accepts_braid_directions() {
        let a = CentralArrangement::new(1, vecs(&[&[1], &[1], &[1]])).unwrap();
        assert_eq!(a.n(), 3);
        assert_eq!(a.k(), 1);
    }

    #[test]
    fn accepts_generic_lines() {
        CentralArrangement::new(2, vecs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
    }

    #[test]
    fn rejects_parallel_pair() {
        let err = CentralArrangement::new(2, vecs(&[&[1, 0], &[2, 0], &[0, 1]])).unwrap_err();
        assert_eq!(err, Error::NotGeneric(vec![0, 1]));
    }

    #[test]
    fn rejects_zero_normal() {
        let err = CentralArrangement::new(2, vecs(&[&[1, 0], &[0, 0], &[0, 1]])).unwrap_err();
        assert_eq!(err, Error::ZeroNormal(1));
    }

    #[test]
    fn generic_subset_queries() {
        let a = CentralArrangement::new(2, vecs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(a.is_generic_subset(&[0]).unwrap());
        assert!(a.is_generic_subset(&[0, 2]).unwrap());
        assert!(a.is_generic_subset(&[0, 1, 2]).is_err());
    }

    #[test]
    fn central_subspace_examples() {
        let braid = CentralArrangement::new(1, vecs(&[&[1], &[1], &[1]])).unwrap();
        let diag = Subspace::from_rows(3, vec![vec![rint(1), rint(1), rint(1)]]).unwrap();
        assert!(braid.central_subspace().equal(&diag).unwrap());

        let a = CentralArrangement::new(2, vecs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let expect = Subspace::from_rows(
            3,
            vec![
                vec![rint(1), rint(0), rint(1)],
                vec![rint(0), rint(1), rint(1)],
            ],
        )
        .unwrap();
        assert!(a.central_subspace().equal(&expect).unwrap());
        assert_eq!(a.central_subspace().dim(), a.k());
    }

    #[test]
    fn common_point_examples() {
        let a = CentralArrangement::new(2, vecs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();

        let zero = Translate::origin(3);
        let p = a.common_point(&zero, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(p, vec![rint(0), rint(0)]);

        let t = Translate::new(vec![rint(3), rint(5), rint(8)]);
        let p = a.common_point(&t, &[0, 1]).unwrap().unwrap();
        assert_eq!(p, vec![rint(3), rint(5)]);

        let t = Translate::new(vec![rint(1), rint(1), rint(3)]);
        assert_eq!(a.common_point(&t, &[0, 1, 2]).unwrap(), None);
    }

    #[test]
    fn common_point_requires_nonempty_indices() {
        let a = CentralArrangement::new(2, vecs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert!(a.common_point(&Translate::origin(3), &[]).is_err());
    }
}
