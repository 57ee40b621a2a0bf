//! The very-generic reference model: the membership condition for the
//! very-generic intersection lattice, the transversal rank it predicts, and
//! a scan comparing an actual arrangement against that prediction.

use crate::arrangement::CentralArrangement;
use crate::discriminantal::{is_simple_core, DiscTable};
use crate::error::{Error, Result};
use itertools::Itertools;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// A family of index sets `S_i` over `[n]`, each of size at least `k + 1`,
/// candidate element of the very-generic intersection lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    k: usize,
    members: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(n: usize, k: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::pre("family must be nonempty".to_string()));
        }
        let mut sorted = Vec::with_capacity(members.len());
        for s in members {
            let mut s = s;
            s.sort_unstable();
            s.dedup();
            if s.len() < k + 1 {
                return Err(Error::pre(format!(
                    "member of size {} is below k + 1 = {}",
                    s.len(),
                    k + 1
                )));
            }
            if s.iter().any(|&i| i >= n) {
                return Err(Error::pre(format!("member index out of range for n = {n}")));
            }
            sorted.push(s);
        }
        let distinct: BTreeSet<&Vec<usize>> = sorted.iter().collect();
        if distinct.len() != sorted.len() {
            return Err(Error::pre("members must be distinct".to_string()));
        }
        Ok(SetFamily { n, k, members: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }
}

/// The membership condition for the very-generic lattice: for every subset
/// `I` of at least two members, `|union of S_i| > k + sum (|S_i| - k)`.
/// Vacuously true for a single member.
pub fn athanasiadis_condition(f: &SetFamily) -> bool {
    let m = f.members.len();
    for size in 2..=m {
        for idxs in (0..m).combinations(size) {
            let union: BTreeSet<usize> = idxs.iter().flat_map(|&i| f.members[i].iter().copied()).collect();
            let excess: usize = idxs.iter().map(|&i| f.members[i].len() - f.k).sum();
            if union.len() <= f.k + excess {
                return false;
            }
        }
    }
    true
}

/// Transversal rank of the family's intersection in the very-generic case:
/// `sum (|S_i| - k)`. Only defined when [`athanasiadis_condition`] holds.
pub fn expected_rank(f: &SetFamily) -> Result<usize> {
    if !athanasiadis_condition(f) {
        return Err(Error::pre(
            "family violates the very-generic membership condition".to_string(),
        ));
    }
    Ok(f.members.iter().map(|s| s.len() - f.k).sum())
}

/// A simple intersection whose rank falls short of its multiplicity,
/// certifying that the arrangement is not very generic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VgDefect {
    pub members: Vec<Vec<usize>>,
    pub rank: usize,
    pub multiplicity: usize,
}

/// Outcome of the witness scan up to a given multiplicity.
///
/// `defect: None` means no simple defect up to `r_max`; it does not assert
/// very-genericity, which this test cannot decide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VgOutcome {
    pub r_max: usize,
    pub defect: Option<VgDefect>,
}

impl VgOutcome {
    pub fn defect_found(&self) -> bool {
        self.defect.is_some()
    }
}

/// Scans every family of `r <= r_max` distinct (k+1)-subsets, in ascending
/// `r` and lexicographic order, for a simple intersection of rank strictly
/// below its multiplicity. Returns the first witness found.
pub fn very_generic_upto(a: &CentralArrangement, r_max: usize) -> Result<VgOutcome> {
    if r_max < 2 {
        return Err(Error::pre(format!("r_max must be at least 2, got {r_max}")));
    }
    let table = DiscTable::new(a)?;
    let s_ranks = table.all_s_ranks();
    let subsets = table.subsets().to_vec();

    for r in 2..=r_max.min(subsets.len()) {
        let candidates: Vec<Vec<usize>> = (0..subsets.len()).combinations(r).collect();
        let witness = candidates.par_iter().find_first(|ids| {
            let members: Vec<Vec<usize>> = ids.iter().map(|&i| subsets[i].clone()).collect();
            let rank = table.members_rank(&members);
            if rank >= r {
                return false;
            }
            let mut s_rank = |s: &[usize]| s_ranks[s];
            is_simple_core(&table, &mut s_rank, &members)
        });
        if let Some(ids) = witness {
            let members: Vec<Vec<usize>> = ids.iter().map(|&i| subsets[i].clone()).collect();
            let rank = table.members_rank(&members);
            return Ok(VgOutcome {
                r_max,
                defect: Some(VgDefect {
                    rank,
                    multiplicity: members.len(),
                    members,
                }),
            });
        }
    }
    Ok(VgOutcome { r_max, defect: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, members: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, k, members.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_member_is_vacuously_admissible() {
        assert!(athanasiadis_condition(&fam(6, 2, &[&[0, 1, 2]])));
    }

    #[test]
    fn disjoint_triples_are_admissible() {
        // |union| = 6 > 2 + 1 + 1.
        assert!(athanasiadis_condition(&fam(6, 2, &[&[0, 1, 2], &[3, 4, 5]])));
    }

    #[test]
    fn overlapping_quadruples_are_not() {
        // |union| = 6 is not > 2 + 2 + 2.
        assert!(!athanasiadis_condition(&fam(
            6,
            2,
            &[&[0, 1, 2, 3], &[2, 3, 4, 5]]
        )));
    }

    #[test]
    fn expected_rank_examples() {
        assert_eq!(expected_rank(&fam(6, 2, &[&[0, 1, 2]])).unwrap(), 1);
        // Four triples, k = 2: each contributes one.
        assert_eq!(
            expected_rank(&fam(
                6,
                2,
                &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 4, 5]]
            ))
            .unwrap(),
            4
        );
        // Three quadruples, k = 3.
        assert_eq!(
            expected_rank(&fam(
                6,
                3,
                &[&[0, 1, 2, 3], &[0, 1, 4, 5], &[2, 3, 4, 5]]
            ))
            .unwrap(),
            3
        );
        assert!(expected_rank(&fam(6, 2, &[&[0, 1, 2, 3], &[2, 3, 4, 5]])).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(SetFamily::new(6, 2, vec![vec![0, 1]]).is_err());
        assert!(SetFamily::new(6, 2, vec![vec![0, 1, 6]]).is_err());
        assert!(SetFamily::new(6, 2, vec![vec![0, 1, 2], vec![2, 1, 0]]).is_err());
        assert!(SetFamily::new(6, 2, vec![]).is_err());
    }

    #[test]
    fn very_generic_upto_requires_r_max_two() {
        let a = crate::catalog::braid(4).unwrap();
        assert!(very_generic_upto(&a, 1).is_err());
    }
}
