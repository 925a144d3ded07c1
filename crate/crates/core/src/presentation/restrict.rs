use crate::correspondence::PointLineCorrespondence;
use crate::error::{Error, Result};
use crate::incidence::{restrict_to_subplane, ProjectivePlane, RestrictedPlane, SubplaneEmbedding};
use crate::presentation::{verify_presentation, TrianglePresentation, Verdict};

/// A presentation carried down to a subplane, in the subplane's own indices.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub sub: RestrictedPlane,
    pub lambda: PointLineCorrespondence,
    pub triangles: TrianglePresentation,
}

impl Restriction {
    /// Orbit representatives of the restricted set in ambient indices.
    pub fn ambient_orbits(&self) -> Vec<[usize; 3]> {
        let map = &self.sub.point_map;
        let mut reps: Vec<[usize; 3]> = self
            .triangles
            .triples()
            .map(|[x, y, z]| crate::presentation::orbit_representative([map[x], map[y], map[z]]))
            .collect();
        reps.sort();
        reps.dedup();
        reps
    }
}

/// Restrict `(λ, 𝒯)` to a subplane that `λ` preserves. The result must be a
/// full presentation of the subplane.
pub fn restrict(
    plane: &ProjectivePlane,
    lambda: &PointLineCorrespondence,
    t: &TrianglePresentation,
    emb: &SubplaneEmbedding,
) -> Result<Restriction> {
    let points = emb.point_set();
    let lines = emb.line_set();
    if !lambda.maps_onto(points, lines) {
        let bad = emb
            .points
            .iter()
            .find(|&&x| !lines.contains(lambda.line_of(x)))
            .copied();
        return Err(Error::SubplaneNotPreserved(match bad {
            Some(x) => format!("λ({x}) = line {} is not a subplane line", lambda.line_of(x)),
            None => "λ does not map the subplane points onto its lines".into(),
        }));
    }
    for [x, y, z] in t.triples() {
        if points.contains(x) && points.contains(y) && !points.contains(z) {
            return Err(Error::NotClosed(format!(
                "({x}, {y}, {z}) leaves the subplane"
            )));
        }
    }
    let sub = restrict_to_subplane(plane, emb);
    let local_point = local_index(&sub.point_map, plane.n());
    let local_line = local_index(&sub.line_map, plane.n());
    let lambda0 = PointLineCorrespondence::new(
        sub.point_map
            .iter()
            .map(|&x| local_line[lambda.line_of(x)])
            .collect(),
    )?;
    let inside = |tr: &[usize; 3]| tr.iter().all(|&i| points.contains(i));
    let triples0 = TrianglePresentation::from_triples(
        sub.plane.n(),
        t.triples()
            .filter(inside)
            .map(|[x, y, z]| [local_point[x], local_point[y], local_point[z]]),
    )?;
    match verify_presentation(&sub.plane, &lambda0, &triples0) {
        Verdict::Full { .. } => Ok(Restriction {
            sub,
            lambda: lambda0,
            triangles: triples0,
        }),
        other => Err(Error::NotFull(format!(
            "restricted set is {}",
            other.label()
        ))),
    }
}

fn local_index(map: &[usize], n: usize) -> Vec<usize> {
    let mut local = vec![usize::MAX; n];
    for (i, &a) in map.iter().enumerate() {
        local[a] = i;
    }
    local
}
