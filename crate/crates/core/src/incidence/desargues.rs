use serde::Serialize;

use crate::error::{Error, Result};
use crate::incidence::ProjectivePlane;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesarguesVerdict {
    /// Meets of corresponding sides, in side order (01, 12, 02).
    pub axis_points: [usize; 3],
    /// Line through the first two axis points.
    pub axis_line: usize,
    /// Whether the third axis point lies on `axis_line`.
    pub collinear: bool,
}

/// Evaluate one Desargues configuration: two triangles in perspective from
/// `center`. Reports the three meets of corresponding sides and whether they
/// are collinear.
pub fn check_desargues_config(
    plane: &ProjectivePlane,
    center: usize,
    t1: [usize; 3],
    t2: [usize; 3],
) -> Result<DesarguesVerdict> {
    let n = plane.n();
    for &p in t1.iter().chain(&t2).chain(std::iter::once(&center)) {
        if p >= n {
            return Err(Error::OutOfRange { index: p, bound: n });
        }
    }
    for (name, t) in [("first", t1), ("second", t2)] {
        if plane.collinear(t[0], t[1], t[2]) {
            return Err(Error::Degenerate(format!(
                "{name} triangle {t:?} is collinear"
            )));
        }
    }
    for i in 0..3 {
        let (a, b) = (t1[i], t2[i]);
        if a == center || b == center || a == b {
            return Err(Error::Degenerate(format!(
                "vertices {a}, {b} and center {center} are not distinct"
            )));
        }
        if !plane.incident(center, plane.join(a, b)) {
            return Err(Error::Degenerate(format!(
                "{a} and {b} are not in perspective from {center}"
            )));
        }
    }
    let sides = [(0, 1), (1, 2), (0, 2)];
    let mut axis_points = [0; 3];
    for (k, &(i, j)) in sides.iter().enumerate() {
        let l1 = plane.join(t1[i], t1[j]);
        let l2 = plane.join(t2[i], t2[j]);
        if l1 == l2 {
            return Err(Error::Degenerate(format!(
                "side {i}{j} coincides in both triangles"
            )));
        }
        axis_points[k] = plane.meet(l1, l2);
    }
    let [x, y, z] = axis_points;
    if x == y {
        return Err(Error::Degenerate("first two axis points coincide".into()));
    }
    let axis_line = plane.join(x, y);
    Ok(DesarguesVerdict {
        axis_points,
        axis_line,
        collinear: plane.incident(z, axis_line),
    })
}
