//! Finite projective planes: loading, validation, duality, automorphisms,
//! correlations, Baer subplanes and Desargues configurations.

mod desargues;
mod iso;
mod plane;
mod subplane;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

pub use desargues::{check_desargues_config, DesarguesVerdict};
pub use iso::IsomorphismSearch;
pub use plane::ProjectivePlane;
pub use subplane::{
    is_baer_subplane, restrict_to_subplane, subplane, RestrictedPlane, SubplaneEmbedding,
};

use crate::bitset::PointSet;

/// An incidence-preserving pair of permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Collineation {
    pub point_perm: Vec<usize>,
    pub line_perm: Vec<usize>,
}

impl Collineation {
    pub fn identity(n: usize) -> Self {
        Collineation {
            point_perm: (0..n).collect(),
            line_perm: (0..n).collect(),
        }
    }

    pub fn is_valid(&self, plane: &ProjectivePlane) -> bool {
        self.is_valid_between(plane, plane)
    }

    /// Whether this pair of maps is an isomorphism `src -> dst`.
    pub fn is_valid_between(&self, src: &ProjectivePlane, dst: &ProjectivePlane) -> bool {
        let n = src.n();
        n == dst.n()
            && is_permutation(&self.point_perm, n)
            && is_permutation(&self.line_perm, n)
            && (0..n).all(|l| {
                let image: PointSet = src.line(l).iter().map(|p| self.point_perm[p]).collect();
                image == dst.line(self.line_perm[l])
            })
    }
}

/// An incidence-reversing pair of bijections: points to lines and lines to
/// points, with `p ∈ l` iff `lp(l) ∈ pl(p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Correlation {
    pub pl: Vec<usize>,
    pub lp: Vec<usize>,
}

impl Correlation {
    pub fn is_valid(&self, plane: &ProjectivePlane) -> bool {
        let n = plane.n();
        is_permutation(&self.pl, n)
            && is_permutation(&self.lp, n)
            && (0..n).all(|p| {
                (0..n).all(|l| plane.incident(p, l) == plane.incident(self.lp[l], self.pl[p]))
            })
    }
}

fn is_permutation(v: &[usize], n: usize) -> bool {
    v.len() == n && v.iter().copied().collect::<PointSet>().len() == n && v.iter().all(|&x| x < n)
}

/// Constraints for [`enumerate_collineations`].
#[derive(Debug, Clone, Default)]
pub struct CollineationFilter<'a> {
    /// Points that must be fixed individually.
    pub fixed_points: &'a [usize],
    /// Lines that must be fixed individually.
    pub fixed_lines: &'a [usize],
    pub limit: Option<usize>,
}

/// Visit collineations in deterministic order.
pub fn for_each_collineation<F>(
    plane: &ProjectivePlane,
    filter: &CollineationFilter<'_>,
    mut visit: F,
) where
    F: FnMut(Collineation) -> ControlFlow<()>,
{
    let mut search = IsomorphismSearch::new(plane, plane);
    for &p in filter.fixed_points {
        search.fix_point(p, p);
    }
    for &l in filter.fixed_lines {
        search.fix_line(l, l);
    }
    let mut remaining = filter.limit.unwrap_or(usize::MAX);
    if remaining == 0 {
        return;
    }
    search.for_each(|pm, lm| {
        remaining -= 1;
        visit(Collineation {
            point_perm: pm.to_vec(),
            line_perm: lm.to_vec(),
        })?;
        if remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
}

pub fn enumerate_collineations(
    plane: &ProjectivePlane,
    filter: &CollineationFilter<'_>,
) -> Vec<Collineation> {
    let mut out = Vec::new();
    for_each_collineation(plane, filter, |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out
}

/// Visit correlations in deterministic order. A correlation is an
/// isomorphism from the plane to its dual.
pub fn for_each_correlation<F>(plane: &ProjectivePlane, limit: Option<usize>, mut visit: F)
where
    F: FnMut(Correlation) -> ControlFlow<()>,
{
    let dual = plane.dual();
    let mut remaining = limit.unwrap_or(usize::MAX);
    if remaining == 0 {
        return;
    }
    IsomorphismSearch::new(plane, &dual).for_each(|pm, lm| {
        remaining -= 1;
        visit(Correlation {
            pl: pm.to_vec(),
            lp: lm.to_vec(),
        })?;
        if remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
}

pub fn enumerate_correlations(plane: &ProjectivePlane, limit: Option<usize>) -> Vec<Correlation> {
    let mut out = Vec::new();
    for_each_correlation(plane, limit, |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out
}

/// Any isomorphism between two planes, if one exists.
pub fn find_isomorphism(src: &ProjectivePlane, dst: &ProjectivePlane) -> Option<Collineation> {
    let mut found = None;
    IsomorphismSearch::new(src, dst).for_each(|pm, lm| {
        found = Some(Collineation {
            point_perm: pm.to_vec(),
            line_perm: lm.to_vec(),
        });
        ControlFlow::Break(())
    });
    found
}
