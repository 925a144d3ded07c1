use crate::correspondence::PointLineCorrespondence;
use crate::incidence::{Correlation, ProjectivePlane};

/// `(a, b)` for a correlation: `a` counts points `p` with `p ∈ λ³(p)`, `b`
/// those among them with `λ⁶(p) = p`.
pub fn correlation_ab(plane: &ProjectivePlane, c: &Correlation) -> (usize, usize) {
    let mut a = 0;
    let mut b = 0;
    for p in 0..plane.n() {
        let cube = c.pl[c.lp[c.pl[p]]];
        if plane.incident(p, cube) {
            a += 1;
            let sixth = c.lp[c.pl[c.lp[cube]]];
            if sixth == p {
                b += 1;
            }
        }
    }
    (a, b)
}

/// `(q+1)(q²+q+1) − (2q−3)·a − b`, the maximum number of edges of `G_λ`
/// coverable by disjoint triangles when `λ` is a correlation.
pub fn exact_score_correlation(order: usize, a: usize, b: usize) -> i64 {
    let q = order as i64;
    (q + 1) * (q * q + q + 1) - (2 * q - 3) * a as i64 - b as i64
}

/// Edges `(x, y)` of `G_λ` with `λ(y) = λ⁻¹(x)`; each lies in `q + 1`
/// triangles, every other edge in exactly one.
pub fn popular_edge_count(plane: &ProjectivePlane, c: &Correlation) -> usize {
    let mut line_of_point = vec![0; plane.n()];
    for (l, &p) in c.lp.iter().enumerate() {
        line_of_point[p] = l;
    }
    (0..plane.n())
        .map(|x| {
            plane
                .line(c.pl[x])
                .iter()
                .filter(|&y| c.pl[y] == line_of_point[x])
                .count()
        })
        .sum()
}

/// Number of admissible triples of a correspondence.
pub fn admissible_triple_count(plane: &ProjectivePlane, lambda: &PointLineCorrespondence) -> usize {
    let g = lambda.graph(plane);
    (0..lambda.n())
        .flat_map(|x| g.out(x).iter().map(move |y| (x, y)))
        .map(|(x, y)| g.out(y).intersection(g.inn(x)).len())
        .sum()
}
