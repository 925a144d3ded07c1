//! Brute-force checks of the search-based routines on small planes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trilattice::groupalg::{smith_normal_form, IntegerMatrix};
use trilattice::incidence::{
    check_desargues_config, enumerate_collineations, enumerate_correlations, CollineationFilter,
    ProjectivePlane,
};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, out);
            v.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), 0, &mut out);
    out
}

/// Line permutation induced by a point permutation, if it maps lines to lines.
fn induced_lines(plane: &ProjectivePlane, perm: &[usize]) -> Option<Vec<usize>> {
    let rows = plane.rows();
    let sets: Vec<BTreeSet<usize>> = rows.iter().map(|r| r.iter().copied().collect()).collect();
    rows.iter()
        .map(|r| {
            let image: BTreeSet<usize> = r.iter().map(|&p| perm[p]).collect();
            sets.iter().position(|s| *s == image)
        })
        .collect()
}

#[test]
fn order_two_collineations_match_all_permutations() {
    let fano = ProjectivePlane::difference_set(2).unwrap();
    let brute: BTreeSet<Vec<usize>> = permutations(7)
        .into_iter()
        .filter(|p| induced_lines(&fano, p).is_some())
        .collect();
    assert_eq!(brute.len(), 168);
    let found: BTreeSet<Vec<usize>> =
        enumerate_collineations(&fano, &CollineationFilter::default())
            .into_iter()
            .map(|c| c.point_perm)
            .collect();
    assert_eq!(found, brute);
}

#[test]
fn order_two_correlations_match_all_bijections() {
    let fano = ProjectivePlane::difference_set(2).unwrap();
    let rows = fano.rows();
    // pl: point -> line; reverses incidence iff the points of each line go to
    // lines through one common point
    let mut brute = BTreeSet::new();
    for pl in permutations(7) {
        let ok = rows.iter().all(|r| {
            let images: Vec<usize> = r.iter().map(|&p| pl[p]).collect();
            (0..7).any(|x| images.iter().all(|&l| fano.incident(x, l)))
        });
        if ok {
            brute.insert(pl);
        }
    }
    assert_eq!(brute.len(), 168);
    let found: BTreeSet<Vec<usize>> = enumerate_correlations(&fano, None)
        .into_iter()
        .map(|c| c.pl)
        .collect();
    assert_eq!(found, brute);
}

#[test]
fn order_three_plane_is_desarguesian() {
    let plane = ProjectivePlane::difference_set(3).unwrap();
    let n = plane.n();
    let mut checked = 0;
    for center in 0..n {
        // ordered triples of distinct lines through the center, one point off
        // the center on each line for each triangle
        let through: Vec<usize> = plane.pencil(center).iter().collect();
        for &l1 in &through {
            for &l2 in &through {
                for &l3 in &through {
                    if l1 >= l2 || l2 >= l3 {
                        continue;
                    }
                    let pts = |l: usize| {
                        plane
                            .line(l)
                            .iter()
                            .filter(move |&p| p != center)
                            .collect::<Vec<_>>()
                    };
                    for &a1 in &pts(l1) {
                        for &a2 in &pts(l2) {
                            for &a3 in &pts(l3) {
                                for &b1 in &pts(l1) {
                                    for &b2 in &pts(l2) {
                                        for &b3 in &pts(l3) {
                                            if a1 == b1 || a2 == b2 || a3 == b3 {
                                                continue;
                                            }
                                            let degenerate = plane.collinear(a1, a2, a3)
                                                || plane.collinear(b1, b2, b3)
                                                || plane.join(a1, a2) == plane.join(b1, b2)
                                                || plane.join(a2, a3) == plane.join(b2, b3)
                                                || plane.join(a1, a3) == plane.join(b1, b3);
                                            let verdict = check_desargues_config(
                                                &plane,
                                                center,
                                                [a1, a2, a3],
                                                [b1, b2, b3],
                                            );
                                            assert_eq!(verdict.is_err(), degenerate);
                                            if let Ok(v) = verdict {
                                                assert!(
                                                    v.collinear,
                                                    "{center} {:?} {:?}",
                                                    [a1, a2, a3],
                                                    [b1, b2, b3]
                                                );
                                                checked += 1;
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all k×k minors.
fn minor_gcd(rows: &[Vec<i64>], k: usize) -> BigInt {
    let (r, c) = (rows.len(), rows[0].len());
    let mut g = BigInt::zero();
    for rs in subsets(r, k) {
        for cs in subsets(c, k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| BigInt::from(rows[i][j])).collect())
                .collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

#[test]
fn smith_form_matches_minor_gcds() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let r = rng.gen_range(1..=4);
        let c = rng.gen_range(1..=4);
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect())
            .collect();
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&rows), true);
        let d = &snf.diagonal;
        for i in 1..d.len() {
            assert!(
                d[i].is_zero() || (!d[i - 1].is_zero() && d[i].is_multiple_of(&d[i - 1])),
                "{d:?}"
            );
        }
        let mut prefix = BigInt::from(1);
        for k in 1..=r.min(c) {
            prefix *= &d[k - 1];
            assert_eq!(prefix.abs(), minor_gcd(&rows, k), "{rows:?} {d:?}");
        }
        let (u, v) = snf.transforms.unwrap();
        let m = IntegerMatrix::from_rows(&rows);
        let prod = u.mul(&m).mul(&v);
        for i in 0..r {
            for j in 0..c {
                let want = if i == j { d[i].clone() } else { BigInt::zero() };
                assert_eq!(prod[(i, j)], want);
            }
        }
    }
}
