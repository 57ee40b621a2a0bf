//! The discriminantal arrangement of a central generic arrangement.
//!
//! For every (k+1)-subset `L` of hyperplane indices there is one hyperplane
//! `D_L` in the space of translates, consisting of the translates where the
//! hyperplanes indexed by `L` share a point. `D_L` is cut out by a single
//! linear form whose coefficients are signed `k x k` minors of the normal
//! matrix (the Laplace expansion of the bordered determinant along the
//! translate column). Intersections of the `D_L` are represented as kernels
//! of stacked normal vectors.

use crate::arrangement::{CentralArrangement, Translate};
use crate::error::{Error, Result};
use crate::linalg::{dot, sign_normalize, Mat, Rational, Subspace};
use itertools::Itertools;
use num::Zero;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// The normal vector of one hyperplane `D_L` of the discriminantal
/// arrangement, supported exactly on `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscNormal {
    support: Vec<usize>,
    coeffs: Vec<Rational>,
}

impl DiscNormal {
    /// The defining (k+1)-subset, sorted ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// The length-n coefficient vector; nonzero exactly on the support,
    /// first nonzero coefficient positive.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

/// Computes the normal of `D_L`.
///
/// The coefficient at the p-th smallest index of `L` is `(-1)^p` times the
/// determinant of the normals of `L` with that index removed; the whole
/// vector is then scaled so its first nonzero coefficient is positive.
/// A translate `t` puts the hyperplanes of `L` through a common point
/// exactly when the returned coefficients are orthogonal to `t`.
pub fn disc_normal(a: &CentralArrangement, l_set: &[usize]) -> Result<DiscNormal> {
    let l = a.checked_index_set(l_set)?;
    if l.len() != a.k() + 1 {
        return Err(Error::pre(format!(
            "L must have k + 1 = {} elements, got {}",
            a.k() + 1,
            l.len()
        )));
    }
    let mut coeffs = vec![Rational::zero(); a.n()];
    for (p, &i) in l.iter().enumerate() {
        let rows: Vec<Vec<Rational>> = l
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| a.normal(j).to_vec())
            .collect();
        let minor = Mat::from_rows(rows)?.det()?;
        coeffs[i] = if p % 2 == 0 { minor } else { -minor };
    }
    let coeffs = sign_normalize(coeffs);
    Ok(DiscNormal { support: l, coeffs })
}

/// Membership of a translate in `D_L`, decided by one dot product.
pub fn in_dl(a: &CentralArrangement, t: &Translate, l_set: &[usize]) -> Result<bool> {
    a.check_translate(t)?;
    let normal = disc_normal(a, l_set)?;
    Ok(dot(&normal.coeffs, t.coords()).is_zero())
}

/// An intersection of discriminantal hyperplanes: for a family of index
/// sets `S_i`, the flat is the common kernel of the normals of every `D_L`
/// with `L` inside some `S_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    family: Vec<Vec<usize>>,
    subspace: Subspace,
    rank: usize,
}

impl Flat {
    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    /// The flat as a subspace of the space of translates. Always contains
    /// the central subspace.
    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// Codimension of the flat, i.e. the rank of the stacked normals.
    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Builds the flat of a family of index sets, each of size at least k+1.
pub fn flat_of(a: &CentralArrangement, family: &[Vec<usize>]) -> Result<Flat> {
    let mut sorted_family = Vec::with_capacity(family.len());
    let mut subsets = BTreeSet::new();
    for s in family {
        let s = a.checked_index_set(s)?;
        if s.len() < a.k() + 1 {
            return Err(Error::pre(format!(
                "family member of size {} is below k + 1 = {}",
                s.len(),
                a.k() + 1
            )));
        }
        for l in s.iter().copied().combinations(a.k() + 1) {
            subsets.insert(l);
        }
        sorted_family.push(s);
    }
    let rows: Vec<Vec<Rational>> = subsets
        .iter()
        .map(|l| disc_normal(a, l).map(|d| d.coeffs))
        .collect::<Result<_>>()?;
    let kernel = Mat::from_rows(rows)?.kernel_basis();
    let rank = a.n() - kernel.dim();
    Ok(Flat {
        family: sorted_family,
        subspace: kernel,
        rank,
    })
}

/// Precomputed discriminantal normals of one arrangement, shared by the
/// enumeration-heavy operations. All `C(n, k+1)` normals are materialized
/// eagerly; intended for desk-scale n.
pub(crate) struct DiscTable {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    coeffs: Vec<Vec<Rational>>,
}

impl DiscTable {
    pub(crate) fn new(a: &CentralArrangement) -> Result<DiscTable> {
        let subsets: Vec<Vec<usize>> = (0..a.n()).combinations(a.k() + 1).collect();
        let coeffs: Vec<Vec<Rational>> = subsets
            .iter()
            .map(|l| disc_normal(a, l).map(|d| d.coeffs))
            .collect::<Result<_>>()?;
        let index = subsets
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(DiscTable {
            n: a.n(),
            k: a.k(),
            subsets,
            index,
            coeffs,
        })
    }

    /// All (k+1)-subsets in lexicographic order.
    pub(crate) fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub(crate) fn coeffs_of(&self, l: &[usize]) -> &[Rational] {
        &self.coeffs[self.index[l]]
    }

    /// Rank of the stacked normals of a list of (k+1)-subsets.
    pub(crate) fn members_rank(&self, members: &[Vec<usize>]) -> usize {
        let rows: Vec<Vec<Rational>> = members.iter().map(|l| self.coeffs_of(l).to_vec()).collect();
        Mat::from_rows(rows).expect("equal lengths").rank()
    }

    /// Rank of the full flat of one index set `S`: all `D_L` with `L` in `S`.
    pub(crate) fn s_rank(&self, s: &[usize]) -> usize {
        let rows: Vec<Vec<Rational>> = s
            .iter()
            .copied()
            .combinations(self.k + 1)
            .map(|l| self.coeffs_of(&l).to_vec())
            .collect();
        Mat::from_rows(rows).expect("equal lengths").rank()
    }

    /// Ranks of every `S`-flat with `|S| >= k + 2`, keyed by the sorted set.
    pub(crate) fn all_s_ranks(&self) -> HashMap<Vec<usize>, usize> {
        let sets: Vec<Vec<usize>> = (self.k + 2..=self.n)
            .flat_map(|size| (0..self.n).combinations(size))
            .collect();
        sets.into_par_iter()
            .map(|s| {
                let rank = self.s_rank(&s);
                (s, rank)
            })
            .collect()
    }
}

fn union_of(members: &[Vec<usize>]) -> Vec<usize> {
    let set: BTreeSet<usize> = members.iter().flatten().copied().collect();
    set.into_iter().collect()
}

/// Shared simplicity test. `s_rank` resolves the rank of a full `S`-flat.
///
/// A sub-intersection over `I` coincides with a `D_S` flat exactly when the
/// two stacked-normal row spans are equal; since every normal stacked for
/// `I` also appears in the stack of any `S` containing the union of the
/// `I`-members, span equality reduces to rank equality.
pub(crate) fn is_simple_core(
    table: &DiscTable,
    s_rank: &mut dyn FnMut(&[usize]) -> usize,
    members: &[Vec<usize>],
) -> bool {
    let r = members.len();
    let full_union = union_of(members);
    for size in 2..=r {
        for i_subset in (0..r).combinations(size) {
            let chosen: Vec<Vec<usize>> = i_subset.iter().map(|&i| members[i].clone()).collect();
            let sub_rank = table.members_rank(&chosen);
            let u = union_of(&chosen);
            let extra: Vec<usize> = full_union
                .iter()
                .copied()
                .filter(|i| !u.contains(i))
                .collect();
            for mask in 0u32..(1 << extra.len()) {
                let mut s = u.clone();
                for (b, &e) in extra.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        s.push(e);
                    }
                }
                s.sort_unstable();
                debug_assert!(s.len() > table.k + 1);
                if sub_rank == s_rank(&s) {
                    return false;
                }
            }
        }
    }
    true
}

fn validate_members(a: &CentralArrangement, members: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    if members.len() < 2 {
        return Err(Error::pre(format!(
            "need at least 2 members, got {}",
            members.len()
        )));
    }
    let sorted: Vec<Vec<usize>> = members
        .iter()
        .map(|l| {
            let l = a.checked_index_set(l)?;
            if l.len() != a.k() + 1 {
                return Err(Error::pre(format!(
                    "member of size {} is not a (k+1)-subset, k = {}",
                    l.len(),
                    a.k()
                )));
            }
            Ok(l)
        })
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&Vec<usize>> = sorted.iter().collect();
    if distinct.len() != sorted.len() {
        return Err(Error::pre("members must be distinct".to_string()));
    }
    Ok(sorted)
}

/// Whether the intersection of the hyperplanes `D_L`, `L` in `members`, is
/// a simple intersection: no sub-intersection over two or more members
/// equals a full `D_S` flat with `|S| > k + 1`. Candidate `S` range between
/// the union of the chosen members and the union of all members.
pub fn is_simple(a: &CentralArrangement, members: &[Vec<usize>]) -> Result<bool> {
    let members = validate_members(a, members)?;
    let table = DiscTable::new(a)?;
    let mut memo: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut s_rank = |s: &[usize]| {
        if let Some(&r) = memo.get(s) {
            return r;
        }
        let r = table.s_rank(s);
        memo.insert(s.to_vec(), r);
        r
    };
    Ok(is_simple_core(&table, &mut s_rank, &members))
}

/// One codimension-2 flat of the discriminantal arrangement: the span of
/// the normals of the hyperplanes containing it, plus those hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusFlat {
    normal_span: Subspace,
    members: Vec<Vec<usize>>,
}

impl CensusFlat {
    /// The 2-dimensional span of the normals vanishing on the flat.
    pub fn normal_span(&self) -> &Subspace {
        &self.normal_span
    }

    /// The subsets `L` of all hyperplanes `D_L` containing the flat.
    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// Number of hyperplanes through the flat.
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }

    /// The flat itself, as a subspace of the space of translates.
    pub fn flat_subspace(&self) -> Subspace {
        self.normal_span.orthogonal_complement()
    }
}

/// Census of all rank-2 intersections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    flats: Vec<CensusFlat>,
}

impl Census {
    /// Flats in canonical order (lexicographic on the normal-span basis).
    pub fn flats(&self) -> &[CensusFlat] {
        &self.flats
    }

    /// `(multiplicity, number of flats)` pairs, ascending by multiplicity.
    pub fn aggregates(&self) -> Vec<(usize, usize)> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for f in &self.flats {
            *counts.entry(f.multiplicity()).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// The multiplicities that occur.
    pub fn multiplicities(&self) -> BTreeSet<usize> {
        self.flats.iter().map(CensusFlat::multiplicity).collect()
    }
}

/// Groups every pair of discriminantal hyperplanes by their common rank-2
/// intersection and reports, per flat, all hyperplanes containing it.
pub fn rank2_census(a: &CentralArrangement) -> Result<Census> {
    let table = DiscTable::new(a)?;
    let m = table.subsets.len();
    let pairs: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let keyed: Vec<(Vec<Vec<Rational>>, (usize, usize))> = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let span = Subspace::from_rows(
                table.n,
                vec![table.coeffs[i].clone(), table.coeffs[j].clone()],
            )
            .expect("normals have length n");
            debug_assert_eq!(span.dim(), 2);
            (span.basis().to_vec(), (i, j))
        })
        .collect();

    let mut groups: BTreeMap<Vec<Vec<Rational>>, BTreeSet<usize>> = BTreeMap::new();
    for (key, (i, j)) in keyed {
        groups.entry(key).or_default().extend([i, j]);
    }
    let flats = groups
        .into_iter()
        .map(|(basis, member_ids)| CensusFlat {
            normal_span: Subspace::from_rows(table.n, basis).expect("canonical basis"),
            members: member_ids.iter().map(|&i| table.subsets[i].clone()).collect(),
        })
        .collect();
    Ok(Census { flats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rint;

    fn lines3() -> CentralArrangement {
        CentralArrangement::new(
            2,
            vec![
                vec![rint(1), rint(0)],
                vec![rint(0), rint(1)],
                vec![rint(1), rint(1)],
            ],
        )
        .unwrap()
    }

    fn lines4() -> CentralArrangement {
        CentralArrangement::new(
            2,
            vec![
                vec![rint(1), rint(0)],
                vec![rint(0), rint(1)],
                vec![rint(1), rint(1)],
                vec![rint(1), rint(-1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn disc_normal_of_three_lines() {
        let d = disc_normal(&lines3(), &[0, 1, 2]).unwrap();
        assert_eq!(d.coeffs(), &[rint(1), rint(1), rint(-1)]);
        assert_eq!(d.support(), &[0, 1, 2]);
    }

    #[test]
    fn disc_normal_rejects_wrong_size() {
        assert!(disc_normal(&lines3(), &[0, 1]).is_err());
    }

    #[test]
    fn disc_normal_is_deterministic() {
        let a = lines4();
        assert_eq!(
            disc_normal(&a, &[0, 2, 3]).unwrap(),
            disc_normal(&a, &[0, 2, 3]).unwrap()
        );
    }

    #[test]
    fn membership_examples() {
        let a = lines3();
        assert!(in_dl(&a, &Translate::origin(3), &[0, 1, 2]).unwrap());
        let t = Translate::new(vec![rint(1), rint(1), rint(2)]);
        assert!(in_dl(&a, &t, &[0, 1, 2]).unwrap());
        let t = Translate::new(vec![rint(1), rint(1), rint(3)]);
        assert!(!in_dl(&a, &t, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn single_hyperplane_flat_has_rank_one() {
        let f = flat_of(&lines3(), &[vec![0, 1, 2]]).unwrap();
        assert_eq!(f.rank(), 1);
        assert_eq!(f.subspace().dim(), 2);
    }

    #[test]
    fn full_set_flat_rank_is_size_minus_k() {
        let f = flat_of(&lines4(), &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(f.rank(), 2);
    }

    #[test]
    fn overlapping_triples_are_not_simple() {
        // Both triples force the same four-line concurrence, so their
        // intersection equals the flat of {0,1,2,3}.
        let a = lines4();
        assert!(!is_simple(&a, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap());
        let sub = flat_of(&a, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let full = flat_of(&a, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(sub.subspace().equal(full.subspace()).unwrap());
    }

    #[test]
    fn is_simple_rejects_duplicate_members() {
        assert!(is_simple(&lines4(), &[vec![0, 1, 2], vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn census_of_four_lines() {
        // n=4, k=2: four D_L, and every pair of them meets in a distinct
        // rank-2 flat equal to the flat of S = {0,1,2,3}... except that all
        // four normals contain that flat, so there is exactly one flat of
        // multiplicity 4.
        let census = rank2_census(&lines4()).unwrap();
        assert_eq!(census.flats().len(), 1);
        assert_eq!(census.flats()[0].multiplicity(), 4);
    }
}
