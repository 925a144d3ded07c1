//! Greedy forced-triangle cover of `G_λ` (the estimated score).
//!
//! Edges are scanned in lexicographic `(from, to)` order. The first edge that
//! lies in exactly one triangle of the remaining graph has that triangle
//! committed; its edges are removed and the scan restarts from the first
//! edge. When no edge lies in exactly one triangle the cover stops: it
//! succeeds if no triangle is left, and fails otherwise.
//!
//! The implementation keeps a per-edge triangle count and the set of edges
//! whose count is one, so "restart the scan" is a lowest-set-bit lookup.

use serde::{Deserialize, Serialize};

use crate::bitset::PointSet;
use crate::correspondence::{Edge, PointLineCorrespondence};
use crate::incidence::ProjectivePlane;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverStatus {
    Success,
    /// Triangles remain but every remaining edge lies in zero or at least
    /// two of them.
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    pub status: CoverStatus,
    /// Covered edges: 3 per committed triangle, 1 per committed loop.
    pub score: usize,
    /// Committed triangles as `(x, y, z)`, where `(x, y)` is the edge that
    /// forced the commit.
    pub chosen: Vec<[usize; 3]>,
    /// Edges left uncovered, ascending.
    pub uncovered: Vec<Edge>,
}

impl CoverResult {
    pub fn is_success(&self) -> bool {
        self.status == CoverStatus::Success
    }
}

struct Remaining {
    n: usize,
    out: Vec<PointSet>,
    inn: Vec<PointSet>,
    count: Vec<u8>,
    single: Vec<u64>,
}

impl Remaining {
    fn new(plane: &ProjectivePlane, lambda: &PointLineCorrespondence) -> Self {
        let n = lambda.n();
        let out: Vec<PointSet> = (0..n).map(|x| plane.line(lambda.line_of(x))).collect();
        let mut inn = vec![PointSet::EMPTY; n];
        for (z, set) in out.iter().enumerate() {
            for x in set.iter() {
                inn[x].insert(z);
            }
        }
        let mut r = Remaining {
            n,
            out,
            inn,
            count: vec![0; n * n],
            single: vec![0; (n * n).div_ceil(64)],
        };
        for x in 0..n {
            for y in r.out[x].iter() {
                let c = r.out[y].intersection(r.inn[x]).len();
                r.set_count(x * n + y, c as u8);
            }
        }
        r
    }

    #[inline]
    fn set_count(&mut self, id: usize, c: u8) {
        self.count[id] = c;
        let (w, b) = (id / 64, id % 64);
        if c == 1 {
            self.single[w] |= 1 << b;
        } else {
            self.single[w] &= !(1 << b);
        }
    }

    #[inline]
    fn decrement(&mut self, u: usize, v: usize) {
        let id = u * self.n + v;
        let c = self.count[id] - 1;
        self.set_count(id, c);
    }

    fn first_single(&self) -> Option<usize> {
        self.single
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Remove edge `(u, v)`, destroying every triangle through it.
    fn remove(&mut self, u: usize, v: usize) {
        for z in self.out[v].intersection(self.inn[u]).iter() {
            if u == v && v == z {
                continue;
            }
            self.decrement(v, z);
            self.decrement(z, u);
        }
        self.out[u].remove(v);
        self.inn[v].remove(u);
        self.set_count(u * self.n + v, 0);
    }
}

/// Run the greedy cover with the fixed lexicographic edge order.
pub fn estimated_score(plane: &ProjectivePlane, lambda: &PointLineCorrespondence) -> CoverResult {
    let mut g = Remaining::new(plane, lambda);
    let n = g.n;
    let mut score = 0;
    let mut chosen = Vec::new();
    while let Some(id) = g.first_single() {
        let (x, y) = (id / n, id % n);
        let z = g.out[y]
            .intersection(g.inn[x])
            .first()
            .expect("count is one");
        chosen.push([x, y, z]);
        if x == y && y == z {
            score += 1;
            g.remove(x, x);
        } else {
            score += 3;
            g.remove(x, y);
            g.remove(y, z);
            g.remove(z, x);
        }
    }
    let mut uncovered = Vec::new();
    let mut triangles_left = false;
    for x in 0..n {
        for y in g.out[x].iter() {
            uncovered.push(Edge::new(x, y));
            triangles_left |= g.count[x * n + y] > 0;
        }
    }
    let status = if triangles_left {
        CoverStatus::Fail
    } else {
        CoverStatus::Success
    };
    CoverResult {
        status,
        score,
        chosen,
        uncovered,
    }
}
