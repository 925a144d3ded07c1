//! The finite chamber complex of a triangle presentation and its rank-2
//! residues.
//!
//! The complex has three vertices and three families of `n` edges: `e_x`
//! joins v₁ and v₂, `e'_x` joins v₂ and v₃, `e''_x` joins v₃ and v₁. The
//! triple `(x, y, z)` contributes a chamber glued to `e_x`, `e'_y`, `e''_z`.

mod graph;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use graph::{generalized_triangle_defect, verify_generalized_triangle, BipartiteGraph};

use crate::error::{Error, Result};
use crate::incidence::{find_isomorphism, Collineation, ProjectivePlane};
use crate::presentation::{TrianglePresentation, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScabVertex {
    V1,
    V2,
    V3,
}

impl ScabVertex {
    pub const ALL: [ScabVertex; 3] = [ScabVertex::V1, ScabVertex::V2, ScabVertex::V3];
}

impl fmt::Display for ScabVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScabVertex::V1 => "v1",
            ScabVertex::V2 => "v2",
            ScabVertex::V3 => "v3",
        })
    }
}

impl FromStr for ScabVertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v1" | "1" => Ok(ScabVertex::V1),
            "v2" | "2" => Ok(ScabVertex::V2),
            "v3" | "3" => Ok(ScabVertex::V3),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

/// Edge families: 0 for `e`, 1 for `e'`, 2 for `e''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScabEdge {
    pub family: u8,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberComplex {
    n: usize,
    chambers: Vec<[ScabEdge; 3]>,
}

impl ChamberComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        3
    }

    pub fn edge_count(&self) -> usize {
        3 * self.n
    }

    pub fn chambers(&self) -> &[[ScabEdge; 3]] {
        &self.chambers
    }

    /// Image of an edge under the rotation `e_x → e'_x → e''_x → e_x`.
    pub fn rotate_edge(e: ScabEdge) -> ScabEdge {
        ScabEdge {
            family: (e.family + 1) % 3,
            index: e.index,
        }
    }

    /// Does the rotation map every chamber onto a chamber?
    pub fn rotation_preserves_chambers(&self) -> bool {
        let mut set: Vec<[ScabEdge; 3]> = self.chambers.iter().map(|c| canonical(*c)).collect();
        set.sort();
        self.chambers.iter().all(|c| {
            let rotated = canonical(c.map(Self::rotate_edge));
            set.binary_search(&rotated).is_ok()
        })
    }

    /// The rank-2 residue at a vertex: the bipartite graph on the `2n`
    /// edges through it, adjacent when some chamber contains both.
    pub fn residue(&self, v: ScabVertex) -> BipartiteGraph {
        let (left, right) = residue_families(v);
        let mut g = BipartiteGraph::new(self.n, self.n);
        for chamber in &self.chambers {
            let a = chamber.iter().find(|e| e.family == left).unwrap();
            let b = chamber.iter().find(|e| e.family == right).unwrap();
            g.add_edge(a.index, b.index);
        }
        g
    }
}

/// `(left family, right family)` of the edges through a vertex.
pub fn residue_families(v: ScabVertex) -> (u8, u8) {
    match v {
        ScabVertex::V1 => (0, 2),
        ScabVertex::V2 => (0, 1),
        ScabVertex::V3 => (1, 2),
    }
}

fn canonical(mut c: [ScabEdge; 3]) -> [ScabEdge; 3] {
    c.sort();
    c
}

fn chamber_of([x, y, z]: Triple) -> [ScabEdge; 3] {
    [
        ScabEdge {
            family: 0,
            index: x,
        },
        ScabEdge {
            family: 1,
            index: y,
        },
        ScabEdge {
            family: 2,
            index: z,
        },
    ]
}

/// Build the complex of a full presentation of a plane of order `q`
/// (`(q+1)(q²+q+1)` triples). The rotation is checked to permute chambers.
pub fn build_scab(t: &TrianglePresentation) -> Result<ChamberComplex> {
    let n = t.n();
    let flags = (2..=11)
        .map(|q| q * q + q + 1)
        .position(|m| m == n)
        .map(|i| (i + 3) * n);
    if flags != Some(t.len()) {
        return Err(Error::NotFull(format!(
            "{} triples on {} points",
            t.len(),
            n
        )));
    }
    let complex = ChamberComplex {
        n,
        chambers: t.triples().map(chamber_of).collect(),
    };
    if !complex.rotation_preserves_chambers() {
        return Err(Error::NotFull("set is not closed under rotation".into()));
    }
    Ok(complex)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueIsomorphism {
    /// `true` if the left part is sent to points, `false` if to lines.
    pub left_to_points: bool,
    /// Image of each left vertex (a point or line of the target).
    pub left: Vec<usize>,
    /// Image of each right vertex.
    pub right: Vec<usize>,
}

/// Find a part-respecting isomorphism from `g` onto the incidence graph of
/// `plane`, trying both ways of matching the parts.
pub fn residue_plane_iso(
    g: &BipartiteGraph,
    plane: &ProjectivePlane,
) -> Option<ResidueIsomorphism> {
    let n = plane.n();
    if g.left_len() != n || g.right_len() != n {
        return None;
    }
    // right vertices as lines through their left neighbours
    let as_lines: Vec<Vec<usize>> = (0..n).map(|r| g.right_neighbors(r).to_vec()).collect();
    let built = ProjectivePlane::from_lines(as_lines).ok()?;
    if let Some(Collineation {
        point_perm,
        line_perm,
    }) = find_isomorphism(&built, plane)
    {
        return Some(ResidueIsomorphism {
            left_to_points: true,
            left: point_perm,
            right: line_perm,
        });
    }
    let dual = built.dual();
    find_isomorphism(&dual, plane).map(
        |Collineation {
             point_perm,
             line_perm,
         }| ResidueIsomorphism {
            left_to_points: false,
            left: line_perm,
            right: point_perm,
        },
    )
}

impl ResidueIsomorphism {
    /// Check adjacency is carried exactly onto incidence.
    pub fn is_valid(&self, g: &BipartiteGraph, plane: &ProjectivePlane) -> bool {
        let n = plane.n();
        (0..n).all(|l| {
            (0..n).all(|r| {
                let (p, line) = if self.left_to_points {
                    (self.left[l], self.right[r])
                } else {
                    (self.right[r], self.left[l])
                };
                g.has_edge(l, r) == plane.incident(p, line)
            })
        })
    }
}
