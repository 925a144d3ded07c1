//! Triangle (partial) presentations: sets of triples `(x, y, z)` closed under
//! rotation, with at most one `z` per pair `(x, y)` and `y ∈ λ(x)`.

mod export;
mod parity;
mod restrict;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use export::{export_group_presentation, ExportFormat};
pub use parity::{check_parity, ParityVerdict};
pub use restrict::{restrict, Restriction};

use crate::correspondence::{CoverResult, PointLineCorrespondence};
use crate::error::{Error, Result};
use crate::incidence::ProjectivePlane;

pub type Triple = [usize; 3];

/// The least of the three rotations of `t`.
pub fn orbit_representative(t: Triple) -> Triple {
    let [x, y, z] = t;
    [t, [y, z, x], [z, x, y]].into_iter().min().unwrap()
}

pub fn rotations(t: Triple) -> [Triple; 3] {
    let [x, y, z] = t;
    [[x, y, z], [y, z, x], [z, x, y]]
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TrianglePresentation {
    n: usize,
    triples: BTreeSet<Triple>,
}

impl TrianglePresentation {
    pub fn empty(n: usize) -> Self {
        TrianglePresentation {
            n,
            triples: BTreeSet::new(),
        }
    }

    /// Exactly the given triples, with no closure applied.
    pub fn from_triples(n: usize, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let triples: BTreeSet<Triple> = triples.into_iter().collect();
        for t in &triples {
            if let Some(&i) = t.iter().find(|&&i| i >= n) {
                return Err(Error::OutOfRange { index: i, bound: n });
            }
        }
        Ok(TrianglePresentation { n, triples })
    }

    /// All rotations of the given orbit representatives.
    pub fn from_orbits(n: usize, reps: impl IntoIterator<Item = Triple>) -> Result<Self> {
        Self::from_triples(n, reps.into_iter().flat_map(rotations))
    }

    /// Parse one orbit representative per line (`x y z`); `#` comments and
    /// blank lines are ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut reps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')')
                .filter(|s| !s.is_empty())
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        message: format!("`{tok}` is not a non-negative integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if nums.len() != 3 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected 3 indices, found {}", nums.len()),
                });
            }
            if let Some(&i) = nums.iter().find(|&&i| i >= n) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("index {i} out of range 0..{n}"),
                });
            }
            reps.push([nums[0], nums[1], nums[2]]);
        }
        Self::from_orbits(n, reps)
    }

    /// One orbit representative per line, ascending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for [x, y, z] in self.orbit_representatives() {
            writeln!(out, "{x} {y} {z}").unwrap();
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn contains(&self, t: Triple) -> bool {
        self.triples.contains(&t)
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.triples.iter().copied()
    }

    pub fn is_rotation_closed(&self) -> bool {
        self.triples
            .iter()
            .all(|&[x, y, z]| self.triples.contains(&[y, z, x]))
    }

    /// Distinct orbit representatives, ascending.
    pub fn orbit_representatives(&self) -> Vec<Triple> {
        let reps: BTreeSet<Triple> = self
            .triples
            .iter()
            .map(|&t| orbit_representative(t))
            .collect();
        reps.into_iter().collect()
    }

    /// `(non-loop orbits, loops)`.
    pub fn orbit_decomposition(&self) -> (usize, usize) {
        let reps = self.orbit_representatives();
        let loops = reps.iter().filter(|t| t[0] == t[1] && t[1] == t[2]).count();
        (reps.len() - loops, loops)
    }

    /// The unique `z` with `(x, y, z)` in the set, if any. Panics-free:
    /// returns the least such `z` if uniqueness is violated.
    pub fn lookup(&self, x: usize, y: usize) -> Option<usize> {
        self.triples
            .range([x, y, 0]..=[x, y, usize::MAX])
            .next()
            .map(|t| t[2])
    }

    /// Triangle set of a greedy cover: each committed triangle contributes
    /// its three rotations (a loop contributes one triple).
    pub fn from_cover(n: usize, cover: &CoverResult) -> Self {
        Self::from_orbits(n, cover.chosen.iter().copied()).expect("cover triples are in range")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "UPPERCASE")]
pub enum Verdict {
    /// A triangle presentation compatible with `λ`.
    Full {
        triples: usize,
    },
    /// A partial presentation that does not cover every edge of `G_λ`.
    Partial {
        triples: usize,
    },
    Invalid {
        reason: String,
        triple: Triple,
    },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Full { .. } => "FULL",
            Verdict::Partial { .. } => "PARTIAL",
            Verdict::Invalid { .. } => "INVALID",
        }
    }
}

/// Check rotation closure, `y ∈ λ(x)` and uniqueness of `z` for every
/// triple (in ascending order); FULL when the set also has one triple per
/// edge of `G_λ`.
pub fn verify_presentation(
    plane: &ProjectivePlane,
    lambda: &PointLineCorrespondence,
    t: &TrianglePresentation,
) -> Verdict {
    let n = plane.n();
    let mut prev: Option<Triple> = None;
    for tr in t.triples() {
        let [x, y, z] = tr;
        if x >= n || y >= n || z >= n || lambda.n() != n {
            return Verdict::Invalid {
                reason: "index out of range".into(),
                triple: tr,
            };
        }
        if !t.contains([y, z, x]) {
            return Verdict::Invalid {
                reason: format!("rotation ({y}, {z}, {x}) missing"),
                triple: tr,
            };
        }
        if !plane.incident(y, lambda.line_of(x)) {
            return Verdict::Invalid {
                reason: format!("{y} is not on λ({x}) = line {}", lambda.line_of(x)),
                triple: tr,
            };
        }
        if let Some([px, py, pz]) = prev {
            if px == x && py == y {
                return Verdict::Invalid {
                    reason: format!("pair ({x}, {y}) completed by both {pz} and {z}"),
                    triple: tr,
                };
            }
        }
        prev = Some(tr);
    }
    if t.len() == plane.flag_count() {
        Verdict::Full { triples: t.len() }
    } else {
        Verdict::Partial { triples: t.len() }
    }
}
