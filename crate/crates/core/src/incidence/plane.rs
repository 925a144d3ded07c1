use std::fmt::Write as _;

use crate::bitset::{PointSet, MAX_POINTS};
use crate::error::{Error, Result};

const NONE: u8 = u8::MAX;

/// A finite projective plane of order `q` on `n = q² + q + 1` points and lines.
///
/// Points and lines are both indexed `0..n`. Joins and meets are tabulated at
/// construction, so every lookup is O(1).
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectivePlane {
    order: usize,
    lines: Vec<PointSet>,
    pencils: Vec<PointSet>,
    join: Vec<u8>,
    meet: Vec<u8>,
}

impl std::fmt::Debug for ProjectivePlane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProjectivePlane")
            .field("order", &self.order)
            .field("n", &self.n())
            .finish()
    }
}

impl ProjectivePlane {
    /// Parse an incidence table: one row per line, each row the `q + 1`
    /// points on that line. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut width = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        message: format!("`{tok}` is not a non-negative integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: format!("row has {} entries, expected {w}", row.len()),
                    })
                }
                _ => {}
            }
            rows.push((lineno + 1, row));
        }
        let width = width.ok_or(Error::Parse {
            line: 0,
            message: "empty incidence table".into(),
        })?;
        if width < 3 {
            return Err(Error::Parse {
                line: rows[0].0,
                message: format!(
                    "rows of length {width} do not describe a plane of order at least 2"
                ),
            });
        }
        let q = width - 1;
        let n = q * q + q + 1;
        if rows.len() != n {
            return Err(Error::Parse {
                line: rows.last().map(|r| r.0).unwrap_or(0),
                message: format!("{} rows found, a plane of order {q} needs {n}", rows.len()),
            });
        }
        for (lineno, row) in &rows {
            if let Some(&bad) = row.iter().find(|&&p| p >= n) {
                return Err(Error::Parse {
                    line: *lineno,
                    message: format!("point index {bad} out of range 0..{n}"),
                });
            }
        }
        Self::from_lines(rows.into_iter().map(|(_, r)| r).collect())
    }

    /// Build from explicit rows (`rows[l]` = points on line `l`) and verify
    /// the axioms.
    pub fn from_lines(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_POINTS {
            return Err(Error::TooLarge(n));
        }
        let k = rows.first().map(|r| r.len()).unwrap_or(0);
        if k < 3 || (k - 1) * (k - 1) + k != n {
            return Err(Error::InvalidPlane(format!(
                "{n} lines of {k} points do not match any order q >= 2"
            )));
        }
        let mut lines = Vec::with_capacity(n);
        for (l, row) in rows.iter().enumerate() {
            if let Some(&p) = row.iter().find(|&&p| p >= n) {
                return Err(Error::OutOfRange { index: p, bound: n });
            }
            let set: PointSet = row.iter().copied().collect();
            lines.push(set);
            if set.len() != k {
                return Err(Error::InvalidPlane(format!(
                    "line {l} has {} distinct points, expected {k}",
                    set.len()
                )));
            }
        }
        Self::from_line_sets(k - 1, lines)
    }

    fn from_line_sets(order: usize, lines: Vec<PointSet>) -> Result<Self> {
        let n = lines.len();
        let k = order + 1;
        let mut pencils = vec![PointSet::EMPTY; n];
        for (l, set) in lines.iter().enumerate() {
            for p in set.iter() {
                pencils[p].insert(l);
            }
        }
        for (p, pencil) in pencils.iter().enumerate() {
            if pencil.len() != k {
                return Err(Error::InvalidPlane(format!(
                    "point {p} lies on {} lines, expected {k}",
                    pencil.len()
                )));
            }
        }
        let mut join = vec![NONE; n * n];
        for a in 0..n {
            for b in (a + 1)..n {
                let common = pencils[a].intersection(pencils[b]);
                if common.len() != 1 {
                    return Err(Error::InvalidPlane(format!(
                        "points {a} and {b} lie on {} common lines, expected 1",
                        common.len()
                    )));
                }
                let l = common.first().unwrap() as u8;
                join[a * n + b] = l;
                join[b * n + a] = l;
            }
        }
        let mut meet = vec![NONE; n * n];
        for a in 0..n {
            for b in (a + 1)..n {
                let common = lines[a].intersection(lines[b]);
                if common.len() != 1 {
                    return Err(Error::InvalidPlane(format!(
                        "lines {a} and {b} meet in {} points, expected 1",
                        common.len()
                    )));
                }
                let p = common.first().unwrap() as u8;
                meet[a * n + b] = p;
                meet[b * n + a] = p;
            }
        }
        Ok(ProjectivePlane {
            order,
            lines,
            pencils,
            join,
            meet,
        })
    }

    /// The cyclic plane of order 2 (difference set {1, 2, 4} mod 7) or
    /// order 3 ({0, 1, 3, 9} mod 13). Line `x` is `{x + d}`.
    pub fn difference_set(q: usize) -> Result<Self> {
        let (modulus, set): (usize, &[usize]) = match q {
            2 => (7, &[1, 2, 4]),
            3 => (13, &[0, 1, 3, 9]),
            _ => return Err(Error::UnsupportedOrder(q)),
        };
        Self::from_difference_set(modulus, set)
    }

    /// Cyclic plane from a perfect difference set modulo `modulus`.
    pub fn from_difference_set(modulus: usize, set: &[usize]) -> Result<Self> {
        let rows = (0..modulus)
            .map(|x| set.iter().map(|d| (x + d) % modulus).collect())
            .collect();
        Self::from_lines(rows)
    }

    /// Exchange the roles of points and lines.
    pub fn dual(&self) -> ProjectivePlane {
        let n = self.n();
        let mut join = vec![NONE; n * n];
        let mut meet = vec![NONE; n * n];
        join.copy_from_slice(&self.meet);
        meet.copy_from_slice(&self.join);
        ProjectivePlane {
            order: self.order,
            lines: self.pencils.clone(),
            pencils: self.lines.clone(),
            join,
            meet,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of points (equal to the number of lines).
    pub fn n(&self) -> usize {
        self.lines.len()
    }

    /// `(q + 1)(q² + q + 1)`, the number of flags.
    pub fn flag_count(&self) -> usize {
        (self.order + 1) * self.n()
    }

    pub fn line(&self, l: usize) -> PointSet {
        self.lines[l]
    }

    /// Lines through point `p`.
    pub fn pencil(&self, p: usize) -> PointSet {
        self.pencils[p]
    }

    pub fn lines(&self) -> &[PointSet] {
        &self.lines
    }

    #[inline]
    pub fn incident(&self, p: usize, l: usize) -> bool {
        self.lines[l].contains(p)
    }

    /// The line through two distinct points.
    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        debug_assert_ne!(a, b);
        self.join[a * self.n() + b] as usize
    }

    /// The common point of two distinct lines.
    #[inline]
    pub fn meet(&self, l: usize, m: usize) -> usize {
        debug_assert_ne!(l, m);
        self.meet[l * self.n() + m] as usize
    }

    pub fn collinear(&self, a: usize, b: usize, c: usize) -> bool {
        if a == b || b == c || a == c {
            return true;
        }
        self.incident(c, self.join(a, b))
    }

    /// Rows of the incidence table, each sorted ascending.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.lines.iter().map(|s| s.iter().collect()).collect()
    }

    /// Text in the format accepted by [`ProjectivePlane::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let strs: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(out, "{}", strs.join(" ")).unwrap();
        }
        out
    }

    /// Smallest set of points and lines containing the given points and
    /// closed under joins and meets.
    pub fn closure(&self, seeds: &[usize]) -> (PointSet, PointSet) {
        self.closure_capped(seeds, usize::MAX)
    }

    /// As [`closure`](Self::closure), stopping once more than `cap` points
    /// have been generated.
    pub fn closure_capped(&self, seeds: &[usize], cap: usize) -> (PointSet, PointSet) {
        let mut points: PointSet = seeds.iter().copied().collect();
        let mut lines = PointSet::EMPTY;
        loop {
            let mut new_lines = lines;
            let pts: Vec<usize> = points.iter().collect();
            for (i, &a) in pts.iter().enumerate() {
                for &b in &pts[i + 1..] {
                    new_lines.insert(self.join(a, b));
                }
            }
            let mut new_points = points;
            let ls: Vec<usize> = new_lines.iter().collect();
            for (i, &l) in ls.iter().enumerate() {
                for &m in &ls[i + 1..] {
                    new_points.insert(self.meet(l, m));
                }
            }
            if new_points == points && new_lines == lines {
                return (points, lines);
            }
            points = new_points;
            lines = new_lines;
            if points.len() > cap {
                return (points, lines);
            }
        }
    }
}
