use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;

use trilattice::correspondence::{estimated_score, PointLineCorrespondence};
use trilattice::fixtures;
use trilattice::groupalg::{smith_normal_form, IntegerMatrix};
use trilattice::incidence::ProjectivePlane;
use trilattice::presentation::{
    orbit_representative, rotations, verify_presentation, TrianglePresentation, Verdict,
};

fn plane_for(which: u8) -> ProjectivePlane {
    match which {
        0 => ProjectivePlane::difference_set(2).unwrap(),
        1 => ProjectivePlane::difference_set(3).unwrap(),
        _ => fixtures::hughes_plane(),
    }
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn plane_and_lambda() -> impl Strategy<Value = (u8, Vec<usize>)> {
    (0u8..3).prop_flat_map(|w| {
        let n = plane_for(w).n();
        (Just(w), shuffled(n))
    })
}

fn edge_set(plane: &ProjectivePlane, lam: &PointLineCorrespondence) -> BTreeSet<(usize, usize)> {
    lam.edges(plane)
        .into_iter()
        .map(|e| (e.from, e.to))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn representative_is_rotation_invariant(t in prop::array::uniform3(0usize..20)) {
        let rep = orbit_representative(t);
        for r in rotations(t) {
            prop_assert_eq!(orbit_representative(r), rep);
        }
        prop_assert!(rotations(t).contains(&rep));
    }

    #[test]
    fn cover_never_gives_an_invalid_set((w, image) in plane_and_lambda()) {
        let plane = plane_for(w);
        let lam = PointLineCorrespondence::new(image).unwrap();
        let cover = estimated_score(&plane, &lam);
        let t = TrianglePresentation::from_cover(plane.n(), &cover);
        let v = verify_presentation(&plane, &lam, &t);
        let invalid = matches!(v, Verdict::Invalid { .. });
        prop_assert!(!invalid, "{:?}", v);
        prop_assert_eq!(t.len(), cover.score);
    }

    #[test]
    fn swap_only_changes_edges_out_of_the_swapped_points(
        (w, image) in plane_and_lambda(), a in 0usize..91, b in 0usize..91,
    ) {
        let plane = plane_for(w);
        let (n, q) = (plane.n(), plane.order());
        let (a, b) = (a % n, b % n);
        let lam = PointLineCorrespondence::new(image).unwrap();
        let swapped = lam.swap(a, b);
        let before = edge_set(&plane, &lam);
        let after = edge_set(&plane, &swapped);
        let changed: Vec<_> = before.symmetric_difference(&after).collect();
        prop_assert!(changed.iter().all(|&&(x, _)| x == a || x == b));
        prop_assert!(changed.len() <= 4 * (q + 1));
    }

    #[test]
    fn a_swap_loses_at_most_six_q_plus_one_covered_edges(
        (w, image) in plane_and_lambda(), a in 0usize..91, b in 0usize..91,
    ) {
        let plane = plane_for(w);
        let (n, q) = (plane.n(), plane.order());
        let (a, b) = (a % n, b % n);
        let lam = PointLineCorrespondence::new(image).unwrap();
        let swapped = lam.swap(a, b);
        let t = TrianglePresentation::from_cover(n, &estimated_score(&plane, &lam));
        let after = edge_set(&plane, &swapped);
        // keep the orbits whose three edges survive the swap
        let kept = t.orbit_representatives().into_iter().filter(|&[x, y, z]| {
            [(x, y), (y, z), (z, x)].iter().all(|e| after.contains(e))
        });
        let kept = TrianglePresentation::from_orbits(n, kept).unwrap();
        let invalid = matches!(verify_presentation(&plane, &swapped, &kept), Verdict::Invalid { .. });
        prop_assert!(!invalid);
        prop_assert!(t.len() - kept.len() <= 6 * (q + 1));
    }

    #[test]
    fn smith_form_ignores_row_and_column_order(
        rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..5),
        rp in shuffled(4), cp in shuffled(4),
    ) {
        let r = rows.len();
        let rp: Vec<usize> = rp.into_iter().filter(|&i| i < r).collect();
        let permuted: Vec<Vec<i64>> = rp.iter().map(|&i| cp.iter().map(|&j| rows[i][j]).collect()).collect();
        let d1 = smith_normal_form(&IntegerMatrix::from_rows(&rows), false).diagonal;
        let d2 = smith_normal_form(&IntegerMatrix::from_rows(&permuted), false).diagonal;
        prop_assert_eq!(d1, d2);
    }

    #[test]
    fn dropping_orbits_from_a_full_set_gives_partial(keep in subsequence((0..314).collect::<Vec<usize>>(), 0..314)) {
        let h = fixtures::hughes_plane();
        let reps = fixtures::hughes_triangles().orbit_representatives();
        let t = TrianglePresentation::from_orbits(91, keep.iter().map(|&i| reps[i])).unwrap();
        let partial = matches!(verify_presentation(&h, &fixtures::hughes_lambda(), &t), Verdict::Partial { .. });
        prop_assert!(partial);
    }
}

#[test]
fn full_set_partitions_the_edges() {
    let h = fixtures::hughes_plane();
    let lam = fixtures::hughes_lambda();
    let t = fixtures::hughes_triangles();
    for e in lam.edges(&h) {
        let zs: Vec<usize> = t
            .triples()
            .filter(|tr| tr[0] == e.from && tr[1] == e.to)
            .map(|tr| tr[2])
            .collect();
        assert_eq!(zs.len(), 1, "{e:?}");
        assert_eq!(t.lookup(e.from, e.to), Some(zs[0]));
    }
}
