use serde::Serialize;

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::incidence::ProjectivePlane;

/// A subplane given by a point subset and a line subset of an ambient plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubplaneEmbedding {
    /// Ambient indices, ascending.
    pub points: Vec<usize>,
    /// Ambient indices, ascending.
    pub lines: Vec<usize>,
    pub sub_order: usize,
    /// Every ambient point is on a subplane line and every ambient line
    /// carries a subplane point.
    pub baer: bool,
}

impl SubplaneEmbedding {
    pub fn point_set(&self) -> PointSet {
        self.points.iter().copied().collect()
    }

    pub fn line_set(&self) -> PointSet {
        self.lines.iter().copied().collect()
    }
}

/// Validate `(points, lines)` as a subplane of order at least 2.
pub fn subplane(
    plane: &ProjectivePlane,
    points: &[usize],
    lines: &[usize],
) -> Result<SubplaneEmbedding> {
    let n = plane.n();
    for &i in points.iter().chain(lines) {
        if i >= n {
            return Err(Error::OutOfRange { index: i, bound: n });
        }
    }
    let pset: PointSet = points.iter().copied().collect();
    let lset: PointSet = lines.iter().copied().collect();
    if pset.len() != lset.len() {
        return Err(Error::NotSubplane(format!(
            "{} points but {} lines",
            pset.len(),
            lset.len()
        )));
    }
    let k = match lset.first() {
        Some(l) => plane.line(l).intersection(pset).len(),
        None => return Err(Error::NotSubplane("empty".into())),
    };
    if k < 3 {
        return Err(Error::NotSubplane(format!(
            "lines carry {k} subplane points; order would be below 2"
        )));
    }
    let q0 = k - 1;
    if pset.len() != q0 * q0 + q0 + 1 {
        return Err(Error::NotSubplane(format!(
            "{} points do not fit order {q0} ({} expected)",
            pset.len(),
            q0 * q0 + q0 + 1
        )));
    }
    for l in lset.iter() {
        let c = plane.line(l).intersection(pset).len();
        if c != k {
            return Err(Error::NotSubplane(format!(
                "line {l} carries {c} subplane points, expected {k}"
            )));
        }
    }
    for p in pset.iter() {
        let c = plane.pencil(p).intersection(lset).len();
        if c != k {
            return Err(Error::NotSubplane(format!(
                "point {p} lies on {c} subplane lines, expected {k}"
            )));
        }
    }
    let pts: Vec<usize> = pset.iter().collect();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            if !lset.contains(plane.join(a, b)) {
                return Err(Error::NotSubplane(format!(
                    "the line through {a} and {b} is not a subplane line"
                )));
            }
        }
    }
    let ls: Vec<usize> = lset.iter().collect();
    for (i, &l) in ls.iter().enumerate() {
        for &m in &ls[i + 1..] {
            if !pset.contains(plane.meet(l, m)) {
                return Err(Error::NotSubplane(format!(
                    "lines {l} and {m} meet outside the subplane"
                )));
            }
        }
    }
    let proper = pset.len() < n;
    let baer = proper
        && (0..n).all(|p| !plane.pencil(p).intersection(lset).is_empty())
        && (0..n).all(|l| !plane.line(l).intersection(pset).is_empty());
    Ok(SubplaneEmbedding {
        points: pts,
        lines: ls,
        sub_order: q0,
        baer,
    })
}

/// Validate a Baer subplane: a proper subplane meeting every line and every
/// pencil of the ambient plane.
pub fn is_baer_subplane(
    plane: &ProjectivePlane,
    points: &[usize],
    lines: &[usize],
) -> Result<SubplaneEmbedding> {
    let emb = subplane(plane, points, lines)?;
    if emb.points.len() == plane.n() {
        return Err(Error::NotBaer("the subplane is the whole plane".into()));
    }
    if !emb.baer {
        return Err(Error::NotBaer(format!(
            "order {} subplane does not meet every line and pencil",
            emb.sub_order
        )));
    }
    Ok(emb)
}

/// A subplane re-indexed as a plane in its own right.
#[derive(Debug, Clone)]
pub struct RestrictedPlane {
    pub plane: ProjectivePlane,
    /// `point_map[i]` is the ambient index of restricted point `i`.
    pub point_map: Vec<usize>,
    /// `line_map[j]` is the ambient index of restricted line `j`.
    pub line_map: Vec<usize>,
}

impl RestrictedPlane {
    /// Restricted index of an ambient point, if it belongs to the subplane.
    pub fn local_point(&self, ambient: usize) -> Option<usize> {
        self.point_map.iter().position(|&p| p == ambient)
    }

    pub fn local_line(&self, ambient: usize) -> Option<usize> {
        self.line_map.iter().position(|&l| l == ambient)
    }
}

pub fn restrict_to_subplane(plane: &ProjectivePlane, emb: &SubplaneEmbedding) -> RestrictedPlane {
    let point_map = emb.points.clone();
    let line_map = emb.lines.clone();
    let rows = line_map
        .iter()
        .map(|&l| {
            plane
                .line(l)
                .iter()
                .filter_map(|p| point_map.iter().position(|&x| x == p))
                .collect()
        })
        .collect();
    let sub = ProjectivePlane::from_lines(rows).expect("validated subplane restricts to a plane");
    RestrictedPlane {
        plane: sub,
        point_map,
        line_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, HUGHES_BAER_LINES, HUGHES_BAER_POINTS};

    #[test]
    fn hughes_baer_subplane() {
        let h = fixtures::hughes_plane();
        let emb = is_baer_subplane(&h, &HUGHES_BAER_POINTS, &HUGHES_BAER_LINES).unwrap();
        assert_eq!(emb.sub_order, 3);
        assert!(emb.baer);
        let r = restrict_to_subplane(&h, &emb);
        assert_eq!(r.plane.n(), 13);
        assert_eq!(r.plane.order(), 3);
        let distinct: PointSet = r.point_map.iter().copied().collect();
        assert_eq!(distinct.len(), 13);
        for (j, &l) in r.line_map.iter().enumerate() {
            for i in 0..13 {
                assert_eq!(r.plane.incident(i, j), h.incident(r.point_map[i], l));
            }
        }
    }

    #[test]
    fn whole_plane_is_not_baer() {
        let plane = ProjectivePlane::difference_set(2).unwrap();
        let all: Vec<usize> = (0..7).collect();
        let emb = subplane(&plane, &all, &all).unwrap();
        assert!(!emb.baer);
        assert!(matches!(
            is_baer_subplane(&plane, &all, &all),
            Err(Error::NotBaer(_))
        ));
    }

    #[test]
    fn triangle_is_not_a_subplane() {
        let plane = ProjectivePlane::difference_set(3).unwrap();
        let (a, b, c) = (0, 1, 2);
        assert!(!plane.collinear(a, b, c));
        let lines = [plane.join(a, b), plane.join(b, c), plane.join(a, c)];
        assert!(matches!(
            is_baer_subplane(&plane, &[a, b, c], &lines),
            Err(Error::NotSubplane(_))
        ));
    }

    #[test]
    fn wrong_line_set_rejected() {
        let h = fixtures::hughes_plane();
        let mut lines = HUGHES_BAER_LINES;
        lines[0] = 0;
        assert!(matches!(
            is_baer_subplane(&h, &HUGHES_BAER_POINTS, &lines),
            Err(Error::NotSubplane(_))
        ));
    }
}
