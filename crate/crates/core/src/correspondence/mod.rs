//! Point-line correspondences `λ: P -> L` and their directed graphs `G_λ`.
//!
//! `G_λ` has an edge `(x, y)` whenever `y ∈ λ(x)`. A triangle through the
//! edge `(x, y)` is a point `z` with `z ∈ λ(y)` and `x ∈ λ(z)`; the triple
//! `(x, y, z)` is then called admissible.

mod correlation;
mod cover;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use correlation::{
    admissible_triple_count, correlation_ab, exact_score_correlation, popular_edge_count,
};
pub use cover::{estimated_score, CoverResult, CoverStatus};

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::incidence::{Correlation, ProjectivePlane};

/// A directed edge `(from, to)` of `G_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
}

impl Edge {
    pub fn new(from: usize, to: usize) -> Self {
        Edge { from, to }
    }

    pub fn is_loop(self) -> bool {
        self.from == self.to
    }
}

/// A bijection from points to lines, `image[x] = λ(p_x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointLineCorrespondence {
    image: Vec<usize>,
}

impl PointLineCorrespondence {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n > crate::bitset::MAX_POINTS {
            return Err(Error::TooLarge(n));
        }
        let mut seen = PointSet::EMPTY;
        for (x, &l) in image.iter().enumerate() {
            if l >= n {
                return Err(Error::OutOfRange { index: l, bound: n });
            }
            if seen.contains(l) {
                return Err(Error::NotBijection(format!(
                    "line {l} is the image of two points (second: {x})"
                )));
            }
            seen.insert(l);
        }
        Ok(PointLineCorrespondence { image })
    }

    pub fn identity(n: usize) -> Self {
        PointLineCorrespondence {
            image: (0..n).collect(),
        }
    }

    /// The point-to-line half of a correlation.
    pub fn from_correlation(c: &Correlation) -> Self {
        PointLineCorrespondence {
            image: c.pl.clone(),
        }
    }

    /// Parse whitespace-separated line indices; position `i` is `λ(p_i)`.
    /// Any row layout is accepted; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut image = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                image.push(tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("`{tok}` is not a non-negative integer"),
                })?);
            }
        }
        if image.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "empty correspondence".into(),
            });
        }
        Self::new(image)
    }

    /// Parse and check the length against a plane.
    pub fn parse_for(text: &str, plane: &ProjectivePlane) -> Result<Self> {
        let lambda = Self::parse(text)?;
        if lambda.n() != plane.n() {
            return Err(Error::SizeMismatch {
                expected: plane.n(),
                found: lambda.n(),
            });
        }
        Ok(lambda)
    }

    /// One line of `n` space-separated integers.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.image.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{l}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn line_of(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Preimage array: `inverse()[l]` is the point mapped to line `l`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (x, &l) in self.image.iter().enumerate() {
            inv[l] = x;
        }
        inv
    }

    /// `λ_{a,b}`: the images of `a` and `b` exchanged.
    pub fn swap(&self, a: usize, b: usize) -> Self {
        let mut image = self.image.clone();
        image.swap(a, b);
        PointLineCorrespondence { image }
    }

    /// Whether every point of `points` is sent into `lines`, and onto it.
    pub fn maps_onto(&self, points: PointSet, lines: PointSet) -> bool {
        points.iter().map(|x| self.image[x]).collect::<PointSet>() == lines
    }

    /// The directed graph `G_λ` as out- and in-neighbourhood bitsets.
    pub fn graph(&self, plane: &ProjectivePlane) -> LambdaGraph {
        LambdaGraph::new(plane, self)
    }

    /// Edges of `G_λ` in lexicographic `(from, to)` order.
    pub fn edges(&self, plane: &ProjectivePlane) -> Vec<Edge> {
        (0..self.n())
            .flat_map(|x| {
                plane
                    .line(self.image[x])
                    .iter()
                    .map(move |y| Edge::new(x, y))
            })
            .collect()
    }

    /// `y ∈ λ(x)`, `z ∈ λ(y)` and `x ∈ λ(z)`.
    pub fn is_admissible(&self, plane: &ProjectivePlane, x: usize, y: usize, z: usize) -> bool {
        plane.incident(y, self.image[x])
            && plane.incident(z, self.image[y])
            && plane.incident(x, self.image[z])
    }

    /// All `z` completing the edge `(x, y)` to an admissible triple.
    pub fn triangles_through_edge(&self, plane: &ProjectivePlane, e: Edge) -> Result<Vec<usize>> {
        if e.from >= self.n() || e.to >= self.n() || !plane.incident(e.to, self.image[e.from]) {
            return Err(Error::NotAnEdge(e.from, e.to));
        }
        let g = self.graph(plane);
        Ok(g.out(e.to).intersection(g.inn(e.from)).iter().collect())
    }
}

/// Adjacency of `G_λ`: `out(x) = λ(x)` and `inn(x) = {z : x ∈ λ(z)}`.
#[derive(Debug, Clone)]
pub struct LambdaGraph {
    out: Vec<PointSet>,
    inn: Vec<PointSet>,
}

impl LambdaGraph {
    pub fn new(plane: &ProjectivePlane, lambda: &PointLineCorrespondence) -> Self {
        let n = lambda.n();
        let out: Vec<PointSet> = (0..n).map(|x| plane.line(lambda.line_of(x))).collect();
        let mut inn = vec![PointSet::EMPTY; n];
        for (z, set) in out.iter().enumerate() {
            for x in set.iter() {
                inn[x].insert(z);
            }
        }
        LambdaGraph { out, inn }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn out(&self, x: usize) -> PointSet {
        self.out[x]
    }

    #[inline]
    pub fn inn(&self, x: usize) -> PointSet {
        self.inn[x]
    }

    /// Number of triangles through `(x, y)`.
    #[inline]
    pub fn triangle_count(&self, e: Edge) -> usize {
        self.out[e.to].intersection(self.inn[e.from]).len()
    }

    /// Every admissible triple `(x, y, z)`, ordered lexicographically.
    pub fn admissible_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for x in 0..self.n() {
            for y in self.out[x].iter() {
                for z in self.out[y].intersection(self.inn[x]).iter() {
                    out.push([x, y, z]);
                }
            }
        }
        out
    }
}

/// How [`badness`] attributes an uncovered edge to points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum BadnessMode {
    /// Both endpoints are charged (a loop charges its point once).
    #[default]
    BothEndpoints,
    /// Only the origin is charged.
    OriginOnly,
}

impl std::str::FromStr for BadnessMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "both" | "both-endpoints" => Ok(BadnessMode::BothEndpoints),
            "origin" | "origin-only" => Ok(BadnessMode::OriginOnly),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

/// Per-point count of uncovered edges.
pub fn badness(n: usize, uncovered: &[Edge], mode: BadnessMode) -> Vec<usize> {
    let mut out = vec![0; n];
    for e in uncovered {
        out[e.from] += 1;
        if mode == BadnessMode::BothEndpoints && !e.is_loop() {
            out[e.to] += 1;
        }
    }
    out
}
