//! Reproducible input arrangements: the braid directions, the quadrilateral
//! of six lines, the six-plane arrangement with three collinear direction
//! lines, and seeded random arrangements.
//!
//! Random arrangements use ChaCha8 seeded with `seed_from_u64`; entries are
//! drawn row by row as `next_u64 % (2 * bound + 1) - bound`, and a normal
//! that breaks genericity against the ones already accepted is redrawn
//! whole. The stream is fixed, so identical inputs give identical output on
//! any platform.

use crate::arrangement::{CentralArrangement, Translate};
use crate::error::{Error, Result};
use crate::linalg::{dot, rint, Mat, Rational};
use crate::nvg::TSet;
use num::Zero;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The arrangement of n copies of the direction `(1)` on the line; its
/// discriminantal arrangement is the braid arrangement `t_i = t_j`.
pub fn braid(n: usize) -> Result<CentralArrangement> {
    if n < 2 {
        return Err(Error::pre(format!("braid needs n >= 2, got {n}")));
    }
    CentralArrangement::new(1, vec![vec![rint(1)]; n])
}

/// The four vertices used by [`crapo`], chosen so that all six connecting
/// lines are pairwise non-parallel.
pub fn crapo_points() -> [[Rational; 2]; 4] {
    [
        [rint(0), rint(0)],
        [rint(4), rint(0)],
        [rint(3), rint(4)],
        [rint(1), rint(3)],
    ]
}

/// Pair order of the six lines through four points: line m joins the
/// points indexed by `LINE_PAIRS[m]`.
const LINE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn line_normals(points: &[[Rational; 2]; 4]) -> Result<Vec<Vec<Rational>>> {
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                let d1 = [&points[j][0] - &points[i][0], &points[j][1] - &points[i][1]];
                let d2 = [&points[k][0] - &points[i][0], &points[k][1] - &points[i][1]];
                if (&d1[0] * &d2[1] - &d1[1] * &d2[0]).is_zero() {
                    return Err(Error::pre(format!("points {i}, {j}, {k} are collinear")));
                }
            }
        }
    }
    Ok(LINE_PAIRS
        .iter()
        .map(|&(p, q)| {
            let dx = &points[q][0] - &points[p][0];
            let dy = &points[q][1] - &points[p][1];
            vec![-dy, dx]
        })
        .collect())
}

/// The central arrangement of the six lines through four points in general
/// position (sides and diagonals of a quadrilateral), translated to the
/// origin, together with the family of the four triples of lines meeting at
/// each point.
pub fn quadrilateral(points: &[[Rational; 2]; 4]) -> Result<(CentralArrangement, TSet)> {
    let normals = line_normals(points)?;
    let arr = CentralArrangement::new(2, normals)?;
    let tset = TSet::new(
        6,
        2,
        vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]],
    )?;
    Ok((arr, tset))
}

/// The translate that puts every line of [`quadrilateral`] back through its
/// two defining points.
pub fn quadrilateral_translate(points: &[[Rational; 2]; 4]) -> Result<Translate> {
    let normals = line_normals(points)?;
    let coords = LINE_PAIRS
        .iter()
        .zip(&normals)
        .map(|(&(p, _), normal)| dot(normal, &points[p]))
        .collect();
    Ok(Translate::new(coords))
}

/// The quadrilateral arrangement on the default points.
pub fn crapo() -> (CentralArrangement, TSet) {
    quadrilateral(&crapo_points()).expect("default points are in general position")
}

/// A central generic arrangement of six planes in `Q^3` whose three
/// direction lines `a_0 x a_1`, `a_2 x a_3`, `a_4 x a_5` span only a plane,
/// with the family `{0,1,2,3}, {0,1,4,5}, {2,3,4,5}`.
///
/// The first five normals are fixed; the last one is searched over the
/// plane spanned by `a_4` and the normal of the target plane, taking the
/// first candidate that passes genericity validation. The search is a fixed
/// sequence, so the output is deterministic.
pub fn falk() -> (CentralArrangement, TSet) {
    let a: [Vec<Rational>; 5] = [
        vec![rint(1), rint(0), rint(0)],
        vec![rint(0), rint(1), rint(0)],
        vec![rint(0), rint(0), rint(1)],
        vec![rint(1), rint(1), rint(1)],
        vec![rint(1), rint(2), rint(3)],
    ];
    let d01 = cross(&a[0], &a[1]);
    let d23 = cross(&a[2], &a[3]);
    // Normal of the plane spanned by the two direction lines.
    let w = cross(&d01, &d23);

    let tset = TSet::new(
        6,
        3,
        vec![vec![0, 1, 2, 3], vec![0, 1, 4, 5], vec![2, 3, 4, 5]],
    )
    .expect("fixed family is valid");

    let mut coefficients: Vec<(i64, i64)> = vec![(0, 1), (0, -1)];
    for beta in 1..=64i64 {
        coefficients.push((1, beta));
        coefficients.push((1, -beta));
    }
    for (alpha, beta) in coefficients {
        let candidate: Vec<Rational> = (0..3)
            .map(|i| rint(alpha) * &a[4][i] + rint(beta) * &w[i])
            .collect();
        let mut normals: Vec<Vec<Rational>> = a.to_vec();
        normals.push(candidate);
        if let Ok(arr) = CentralArrangement::new(3, normals) {
            let d45 = cross(arr.normal(4), arr.normal(5));
            let span = Mat::from_rows(vec![d01.clone(), d23.clone(), d45])
                .expect("directions have length 3");
            debug_assert_eq!(span.rank(), 2);
            return (arr, tset);
        }
    }
    unreachable!("the candidate sequence contains a generic completion");
}

fn cross(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// A seeded random central generic arrangement with integer normal entries
/// in `[-coeff_bound, coeff_bound]`.
pub fn random_arrangement(
    n: usize,
    k: usize,
    seed: u64,
    coeff_bound: u64,
) -> Result<CentralArrangement> {
    if k == 0 || k >= n {
        return Err(Error::pre(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    if coeff_bound < 2 {
        return Err(Error::pre(format!(
            "coefficient bound must be at least 2, got {coeff_bound}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = 2 * u128::from(coeff_bound) + 1;
    let draw_entry = move |rng: &mut ChaCha8Rng| {
        let v = u128::from(rng.next_u64()) % range;
        rint(v as i64 - coeff_bound as i64)
    };

    let mut normals: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let mut resamples = 0usize;
    while normals.len() < n {
        let candidate: Vec<Rational> = (0..k).map(|_| draw_entry(&mut rng)).collect();
        if accepts(&normals, &candidate, k) {
            normals.push(candidate);
        } else {
            resamples += 1;
        }
    }
    if resamples > 0 {
        log::debug!("random_arrangement(n={n}, k={k}, seed={seed}): {resamples} resamples");
    }
    CentralArrangement::new(k, normals)
}

/// Incremental genericity: every subset of size `min(k, count)` that
/// includes the candidate must have full rank.
fn accepts(accepted: &[Vec<Rational>], candidate: &[Rational], k: usize) -> bool {
    use itertools::Itertools;
    if candidate.iter().all(Zero::is_zero) {
        return false;
    }
    let size = k.min(accepted.len() + 1);
    for others in (0..accepted.len()).combinations(size - 1) {
        let mut rows: Vec<Vec<Rational>> = others.iter().map(|&i| accepted[i].clone()).collect();
        rows.push(candidate.to_vec());
        let m = Mat::from_rows(rows).expect("normals are equally long");
        if m.rank() != size {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discriminantal::{disc_normal, flat_of};
    use crate::nvg::is_r_set;

    #[test]
    fn braid_basics() {
        let b = braid(3).unwrap();
        assert_eq!(b.n(), 3);
        assert_eq!(b.k(), 1);
        let expected = [
            (vec![0, 1], vec![rint(1), rint(-1), rint(0)]),
            (vec![0, 2], vec![rint(1), rint(0), rint(-1)]),
            (vec![1, 2], vec![rint(0), rint(1), rint(-1)]),
        ];
        for (l, coeffs) in expected {
            assert_eq!(disc_normal(&b, &l).unwrap().coeffs(), &coeffs[..]);
        }
        let full = flat_of(&b, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(full.rank(), 2);
        assert!(braid(1).is_err());
    }

    #[test]
    fn quadrilateral_is_generic_and_an_r_set() {
        let (arr, tset) = crapo();
        assert_eq!(arr.n(), 6);
        assert_eq!(arr.k(), 2);
        assert!(is_r_set(&tset));
    }

    #[test]
    fn quadrilateral_rejects_collinear_points() {
        let pts = [
            [rint(0), rint(0)],
            [rint(1), rint(0)],
            [rint(2), rint(0)],
            [rint(0), rint(1)],
        ];
        assert!(quadrilateral(&pts).is_err());
    }

    #[test]
    fn quadrilateral_rejects_parallel_sides() {
        // A parallelogram: opposite sides are parallel directions.
        let pts = [
            [rint(0), rint(0)],
            [rint(2), rint(0)],
            [rint(3), rint(1)],
            [rint(1), rint(1)],
        ];
        let err = quadrilateral(&pts).unwrap_err();
        assert!(matches!(err, Error::NotGeneric(_)));
    }

    #[test]
    fn falk_shape() {
        let (arr, tset) = falk();
        assert_eq!((arr.n(), arr.k()), (6, 3));
        assert!(is_r_set(&tset));
        assert_eq!(tset.union().len(), 6);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let shared: Vec<usize> = tset.members()[i]
                .iter()
                .copied()
                .filter(|p| tset.members()[j].contains(p))
                .collect();
            assert_eq!(shared.len(), 2);
        }
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_arrangement(6, 2, 1, 100).unwrap();
        let b = random_arrangement(6, 2, 1, 100).unwrap();
        assert_eq!(a, b);
        let c = random_arrangement(6, 2, 2, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_rejects_bad_parameters() {
        assert!(random_arrangement(6, 0, 1, 100).is_err());
        assert!(random_arrangement(2, 2, 1, 100).is_err());
        assert!(random_arrangement(6, 2, 1, 1).is_err());
    }
}
