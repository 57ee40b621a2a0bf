//! Detection and certification of non-very-generic arrangements through
//! r-sets, vertex configurations and dependency certificates.
//!
//! The central object is a family `T` of r pairwise-intersecting
//! (k+1)-subsets whose union is covered by every r-1 of them. A translate
//! realizing all vertices `P_i` (the common point of the hyperplanes in
//! `L_i`) draws a complete graph on the `P_i` whose edge `P_i P_j` lies in
//! the intersection of the hyperplanes shared by `L_i` and `L_j`. When
//! moving the single hyperplane `H_l` to realize one missing vertex forces
//! every other vertex over `l`, the r hyperplanes `D_{L_i}` intersect in
//! rank at most `r - s + 1 < r`, which certifies non-very-genericity.

use crate::arrangement::{CentralArrangement, Translate};
use crate::discriminantal::{disc_normal, flat_of, is_simple_core, DiscTable};
use crate::error::{Error, Result};
use crate::linalg::{dot, Mat, Rational, Subspace};
use itertools::Itertools;
use num::Zero;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// An ordered family of r distinct (k+1)-subsets of `[n]`, stored with
/// members sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TSet {
    n: usize,
    k: usize,
    members: Vec<Vec<usize>>,
}

impl TSet {
    pub fn new(n: usize, k: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::pre(format!(
                "need at least 2 members, got {}",
                members.len()
            )));
        }
        let mut sorted = Vec::with_capacity(members.len());
        for l in members {
            let mut l = l;
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::pre("repeated index inside a member".to_string()));
            }
            if l.len() != k + 1 {
                return Err(Error::pre(format!(
                    "member of size {} is not a (k+1)-subset, k = {k}",
                    l.len()
                )));
            }
            if l.iter().any(|&i| i >= n) {
                return Err(Error::pre(format!("member index out of range for n = {n}")));
            }
            sorted.push(l);
        }
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::pre("members must be distinct".to_string()));
        }
        Ok(TSet { n, k, members: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of members.
    pub fn r(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// Union of all members, ascending.
    pub fn union(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.members.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Intersection of all members, ascending.
    pub fn intersection(&self) -> Vec<usize> {
        let mut iter = self.members.iter();
        let first: BTreeSet<usize> = iter.next().map(|l| l.iter().copied().collect()).unwrap_or_default();
        self.members[1..]
            .iter()
            .fold(first, |acc, l| acc.intersection(&l.iter().copied().collect()).copied().collect())
            .into_iter()
            .collect()
    }
}

/// The r-set conditions: every index of the union lies in at least two
/// members (so dropping any one member keeps the union), and every two
/// members intersect.
pub fn is_r_set(t: &TSet) -> bool {
    let mut occurrences: BTreeMap<usize, usize> = BTreeMap::new();
    for l in t.members() {
        for &i in l {
            *occurrences.entry(i).or_default() += 1;
        }
    }
    if occurrences.values().any(|&c| c < 2) {
        return false;
    }
    t.members()
        .iter()
        .tuple_combinations()
        .all(|(a, b)| a.iter().any(|i| b.contains(i)))
}

/// Streams every r-set over `[n]` with (k+1)-subset members, duplicate-free,
/// members sorted lexicographically and families emitted in lexicographic
/// order. The search tree prunes any branch containing a disjoint pair.
pub fn enumerate_r_sets(n: usize, k: usize, r: usize) -> Result<RSetIter> {
    if r < 2 {
        return Err(Error::pre(format!("r must be at least 2, got {r}")));
    }
    if k + 1 > n {
        return Err(Error::pre(format!("need k + 1 <= n, got k = {k}, n = {n}")));
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k + 1).collect();
    Ok(RSetIter {
        n,
        k,
        r,
        subsets,
        stack: vec![Frame { chosen: Vec::new(), next: 0 }],
    })
}

struct Frame {
    chosen: Vec<usize>,
    next: usize,
}

/// Depth-first enumeration of r-sets; see [`enumerate_r_sets`].
pub struct RSetIter {
    n: usize,
    k: usize,
    r: usize,
    subsets: Vec<Vec<usize>>,
    stack: Vec<Frame>,
}

impl RSetIter {
    fn covers_twice(&self, chosen: &[usize]) -> bool {
        let mut occurrences: BTreeMap<usize, usize> = BTreeMap::new();
        for &id in chosen {
            for &i in &self.subsets[id] {
                *occurrences.entry(i).or_default() += 1;
            }
        }
        occurrences.values().all(|&c| c >= 2)
    }

    fn intersects_all(&self, chosen: &[usize], candidate: usize) -> bool {
        chosen.iter().all(|&id| {
            self.subsets[id]
                .iter()
                .any(|i| self.subsets[candidate].contains(i))
        })
    }
}

impl Iterator for RSetIter {
    type Item = TSet;

    fn next(&mut self) -> Option<TSet> {
        while let Some(mut frame) = self.stack.pop() {
            if frame.chosen.len() == self.r {
                if self.covers_twice(&frame.chosen) {
                    let members: Vec<Vec<usize>> = frame
                        .chosen
                        .iter()
                        .map(|&id| self.subsets[id].clone())
                        .collect();
                    return Some(TSet {
                        n: self.n,
                        k: self.k,
                        members,
                    });
                }
                continue;
            }
            let missing = self.r - frame.chosen.len();
            while frame.next + missing <= self.subsets.len() {
                let candidate = frame.next;
                frame.next += 1;
                if self.intersects_all(&frame.chosen, candidate) {
                    let mut chosen = frame.chosen.clone();
                    chosen.push(candidate);
                    let child = Frame {
                        chosen,
                        next: candidate + 1,
                    };
                    self.stack.push(frame);
                    self.stack.push(child);
                    break;
                }
            }
        }
        None
    }
}

/// The complete graph drawn by a translate realizing every vertex of a
/// family: the vertices `P_i`, the edge vectors `P_j - P_i`, and any
/// deviations from strictness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KtConfiguration {
    points: Vec<Vec<Rational>>,
    edges: BTreeMap<(usize, usize), Vec<Rational>>,
    extra_incidences: Vec<(usize, usize)>,
    degenerate: bool,
}

impl KtConfiguration {
    /// Vertex `P_i`, in member order.
    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Edge vectors `P_j - P_i` keyed by `(i, j)` with `i < j`.
    pub fn edges(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.edges
    }

    /// Pairs `(i, q)` where hyperplane `q` outside `L_i` also passes
    /// through `P_i`; nonempty means the translate is not strict.
    pub fn extra_incidences(&self) -> &[(usize, usize)] {
        &self.extra_incidences
    }

    /// No hyperplane outside any `L_i` passes through `P_i`.
    pub fn is_strict(&self) -> bool {
        self.extra_incidences.is_empty()
    }

    /// Some vertices coincide (all edges between them are zero).
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Computes the vertex configuration of `t` for the family `T`.
///
/// Fails with [`Error::MissingVertex`] when some member has no common point
/// under `t`. Extra incidences and coincident vertices are reported in the
/// returned value, not as errors: the dependency machinery is linear and
/// tolerates them.
pub fn kt_configuration(
    a: &CentralArrangement,
    t: &Translate,
    tset: &TSet,
) -> Result<KtConfiguration> {
    check_context(a, tset)?;
    a.check_translate(t)?;
    let mut points = Vec::with_capacity(tset.r());
    for (i, l) in tset.members().iter().enumerate() {
        match a.common_point(t, l)? {
            Some(p) => points.push(p),
            None => return Err(Error::MissingVertex(i)),
        }
    }
    let mut extra_incidences = Vec::new();
    for (i, l) in tset.members().iter().enumerate() {
        for q in 0..a.n() {
            if l.contains(&q) {
                continue;
            }
            if dot(a.normal(q), &points[i]) == t.coords()[q] {
                extra_incidences.push((i, q));
            }
        }
    }
    let mut edges = BTreeMap::new();
    let mut degenerate = false;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let edge: Vec<Rational> = points[j]
                .iter()
                .zip(&points[i])
                .map(|(a, b)| a - b)
                .collect();
            if edge.iter().all(Zero::is_zero) {
                degenerate = true;
            }
            edges.insert((i, j), edge);
        }
    }
    Ok(KtConfiguration {
        points,
        edges,
        extra_incidences,
        degenerate,
    })
}

/// Picks a deterministic non-central translate shared by every `D_{L_i}`:
/// the first canonical kernel basis vector outside the central subspace.
/// Fails with [`Error::OnlyCentral`] when every common translate is central.
pub fn witness_translate(a: &CentralArrangement, tset: &TSet) -> Result<Translate> {
    check_context(a, tset)?;
    let flat = flat_of(a, tset.members())?;
    let central = a.central_subspace();
    for v in flat.subspace().basis() {
        if !central.contains(v)? {
            return Ok(Translate::new(v.clone()));
        }
    }
    Err(Error::OnlyCentral)
}

/// A verified dependency certificate: moving the single hyperplane `l` to
/// realize one member of `s_members` realizes all of them over the flat of
/// the remaining members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyCertificate {
    tset: TSet,
    l: usize,
    s_members: Vec<Vec<usize>>,
    rank_base: usize,
}

impl DependencyCertificate {
    pub fn tset(&self) -> &TSet {
        &self.tset
    }

    /// The distinguished hyperplane index.
    pub fn l(&self) -> usize {
        self.l
    }

    /// The members forced through the single translation of `l`.
    pub fn s_members(&self) -> &[Vec<usize>] {
        &self.s_members
    }

    /// `s`, the number of forced members.
    pub fn s(&self) -> usize {
        self.s_members.len()
    }

    /// Rank of the stacked normals of the unforced members.
    pub fn rank_base(&self) -> usize {
        self.rank_base
    }

    /// Rank after adjoining any one forced member; always `rank_base + 1`.
    pub fn rank_full(&self) -> usize {
        self.rank_base + 1
    }
}

fn check_context(a: &CentralArrangement, tset: &TSet) -> Result<()> {
    if tset.n() != a.n() || tset.k() != a.k() {
        return Err(Error::dim(format!(
            "family over (n, k) = ({}, {}) against arrangement with (n, k) = ({}, {})",
            tset.n(),
            tset.k(),
            a.n(),
            a.k()
        )));
    }
    Ok(())
}

/// Attempts to certify that `T` is (r,s)-dependent at hyperplane `l` with
/// forced members `s_members`.
///
/// With `N` the stacked normals of the unforced members and `c(i)` the
/// normal of member `i`, the certificate requires, for a pivot `j` among
/// the forced members:
///
/// 1. `c(j)` lies outside the row span of `N` (the move of `l` is a genuine
///    one-parameter family on the base flat), and
/// 2. for every forced member `i`, `c(i) - (c(i)_l / c(j)_l) c(j)` lies in
///    the row span of `N`.
///
/// Condition 2 says exactly that on the base flat, the unique value of
/// `t_l` solving member `j` solves every forced member; the outcome does
/// not depend on the choice of pivot. Returns `Ok(None)` when the
/// conditions fail, and an error only for precondition violations.
pub fn certify_rs_dependency(
    a: &CentralArrangement,
    tset: &TSet,
    l: usize,
    s_members: &[Vec<usize>],
) -> Result<Option<DependencyCertificate>> {
    check_context(a, tset)?;
    if !is_r_set(tset) {
        return Err(Error::pre("family is not an r-set".to_string()));
    }
    let union = tset.union();
    let intersection = tset.intersection();
    if !union.contains(&l) || intersection.contains(&l) {
        return Err(Error::pre(format!(
            "index {l} must lie in the union but not in every member"
        )));
    }
    let mut forced: Vec<Vec<usize>> = Vec::with_capacity(s_members.len());
    for m in s_members {
        let mut m = m.clone();
        m.sort_unstable();
        if !tset.members().contains(&m) {
            return Err(Error::pre(format!("{m:?} is not a member of the family")));
        }
        if !m.contains(&l) {
            return Err(Error::pre(format!("member {m:?} does not contain {l}")));
        }
        forced.push(m);
    }
    forced.sort();
    forced.dedup();
    if forced.len() < 2 || forced.len() != s_members.len() {
        return Err(Error::pre(
            "need at least two distinct forced members".to_string(),
        ));
    }

    let base: Vec<Vec<usize>> = tset
        .members()
        .iter()
        .filter(|m| !forced.contains(m))
        .cloned()
        .collect();
    debug_assert!(!base.is_empty());
    let base_rows: Vec<Vec<Rational>> = base
        .iter()
        .map(|m| disc_normal(a, m).map(|d| d.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let base_span = Subspace::from_rows(a.n(), base_rows)?;
    let rank_base = base_span.dim();

    let normals: Vec<Vec<Rational>> = forced
        .iter()
        .map(|m| disc_normal(a, m).map(|d| d.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let pivot = &normals[0];
    if base_span.contains(pivot)? {
        return Ok(None);
    }
    for c in &normals[1..] {
        let scale = &c[l] / &pivot[l];
        let reduced: Vec<Rational> = c
            .iter()
            .zip(pivot)
            .map(|(ci, pj)| ci - &scale * pj)
            .collect();
        if !base_span.contains(&reduced)? {
            return Ok(None);
        }
    }
    Ok(Some(DependencyCertificate {
        tset: tset.clone(),
        l,
        s_members: forced,
        rank_base,
    }))
}

/// The dimension test for 3-sets on the block shape `n = 3s`, `k = 2s - 1`:
/// the three central spaces `H_{i,j}`, intersections of the kernels of the
/// normals shared by two members, span dimension `2s - 2` instead of the
/// generic `2s - 1`.
pub fn ls_dependency_check(a: &CentralArrangement, tset: &TSet) -> Result<bool> {
    check_context(a, tset)?;
    let n = a.n();
    let k = a.k();
    if n % 3 != 0 || n / 3 < 2 || k != 2 * (n / 3) - 1 {
        return Err(Error::pre(format!(
            "shape requires n = 3s and k = 2s - 1 with s >= 2, got n = {n}, k = {k}"
        )));
    }
    let s = n / 3;
    if tset.r() != 3 || !is_r_set(tset) || tset.union().len() != n {
        return Err(Error::pre(
            "family must be a 3-set covering all hyperplanes".to_string(),
        ));
    }
    let mut total = Subspace::zero(k);
    for (i, j) in (0..3).tuple_combinations() {
        let shared: Vec<usize> = tset.members()[i]
            .iter()
            .copied()
            .filter(|p| tset.members()[j].contains(p))
            .collect();
        if shared.len() != s {
            return Err(Error::pre(format!(
                "members {i} and {j} share {} indices, expected {s}",
                shared.len()
            )));
        }
        let rows: Vec<Vec<Rational>> = shared.iter().map(|&p| a.normal(p).to_vec()).collect();
        let h_ij = Mat::from_rows(rows)?.kernel_basis();
        debug_assert_eq!(h_ij.dim(), s - 1);
        total = total.sum(&h_ij)?;
    }
    debug_assert!(total.dim() == 2 * s - 2 || total.dim() == 2 * s - 1);
    Ok(total.dim() == 2 * s - 2)
}

/// One detected defect: a simple r-set whose flat rank falls short of r,
/// with every dependency certificate found for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NvgFinding {
    pub tset: TSet,
    pub rank: usize,
    pub certificates: Vec<DependencyCertificate>,
}

/// Scans all r-sets with `r <= r_max` for simple intersections of deficient
/// rank and attempts dependency certification on each, over every
/// admissible `(l, S_l)`. Output is deterministic: ascending r, families in
/// lexicographic order, certificates by `l` then by forced-member list.
pub fn find_simple_nvg(a: &CentralArrangement, r_max: usize) -> Result<Vec<NvgFinding>> {
    if r_max < 2 {
        return Err(Error::pre(format!("r_max must be at least 2, got {r_max}")));
    }
    let table = DiscTable::new(a)?;
    let s_ranks = table.all_s_ranks();
    let mut findings = Vec::new();
    for r in 2..=r_max {
        let candidates: Vec<TSet> = enumerate_r_sets(a.n(), a.k(), r)?.collect();
        let found: Vec<NvgFinding> = candidates
            .into_par_iter()
            .filter_map(|tset| {
                let rank = table.members_rank(tset.members());
                if rank >= r {
                    return None;
                }
                let mut s_rank = |s: &[usize]| s_ranks[s];
                if !is_simple_core(&table, &mut s_rank, tset.members()) {
                    return None;
                }
                let certificates = certificates_for(a, &tset).ok()?;
                Some(NvgFinding {
                    tset,
                    rank,
                    certificates,
                })
            })
            .collect();
        findings.extend(found);
    }
    Ok(findings)
}

/// All successful certificates of a family, over every admissible `(l, S_l)`.
fn certificates_for(a: &CentralArrangement, tset: &TSet) -> Result<Vec<DependencyCertificate>> {
    let intersection = tset.intersection();
    let mut certificates = Vec::new();
    for l in tset.union() {
        if intersection.contains(&l) {
            continue;
        }
        let holders: Vec<Vec<usize>> = tset
            .members()
            .iter()
            .filter(|m| m.contains(&l))
            .cloned()
            .collect();
        for size in 2..=holders.len() {
            for s_members in holders.iter().cloned().combinations(size) {
                if let Some(cert) = certify_rs_dependency(a, tset, l, &s_members)? {
                    certificates.push(cert);
                }
            }
        }
    }
    Ok(certificates)
}
