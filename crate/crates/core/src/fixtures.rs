//! Reference data for the Hughes plane of order 9, shipped with the crate.
//!
//! * `HUGHES_PLANE`: 91 rows, row `i` lists the ten points on line `i`.
//! * `HUGHES_LAMBDA`: a point-line correspondence, ten entries per row.
//! * `HUGHES_TRIANGLES`: one orbit representative per row of a triangle
//!   presentation compatible with `HUGHES_LAMBDA`.
//! * `HUGHES_BAER_TRIANGLES`: the orbits of `HUGHES_TRIANGLES` lying inside
//!   the Baer subplane below.

pub const HUGHES_PLANE: &str = include_str!("../fixtures/hughes9.plane");
pub const HUGHES_LAMBDA: &str = include_str!("../fixtures/hughes9.lambda");
pub const HUGHES_TRIANGLES: &str = include_str!("../fixtures/hughes9.tri");
pub const HUGHES_BAER_TRIANGLES: &str = include_str!("../fixtures/hughes9_baer.tri");

/// Points of the order-3 Baer subplane preserved by every collineation.
pub const HUGHES_BAER_POINTS: [usize; 13] = [9, 17, 20, 33, 38, 42, 43, 46, 47, 56, 59, 64, 70];
/// Lines of the same subplane.
pub const HUGHES_BAER_LINES: [usize; 13] = [3, 11, 22, 34, 46, 53, 62, 64, 70, 79, 84, 87, 89];
/// Lines whose union `A` defines the index-2 parity character.
pub const HUGHES_PARITY_LINES: [usize; 5] = [3, 11, 62, 64, 87];

/// Resolve a built-in fixture by name (`hughes9.plane`, `hughes9.lambda`,
/// `hughes9.tri`, `hughes9_baer.tri`).
pub fn builtin(name: &str) -> Option<&'static str> {
    match name {
        "hughes9.plane" => Some(HUGHES_PLANE),
        "hughes9.lambda" => Some(HUGHES_LAMBDA),
        "hughes9.tri" => Some(HUGHES_TRIANGLES),
        "hughes9_baer.tri" => Some(HUGHES_BAER_TRIANGLES),
        _ => None,
    }
}

use crate::correspondence::PointLineCorrespondence;
use crate::incidence::ProjectivePlane;
use crate::presentation::TrianglePresentation;

pub fn hughes_plane() -> ProjectivePlane {
    ProjectivePlane::parse(HUGHES_PLANE).expect("bundled Hughes plane is valid")
}

pub fn hughes_lambda() -> PointLineCorrespondence {
    PointLineCorrespondence::parse(HUGHES_LAMBDA).expect("bundled correspondence is valid")
}

pub fn hughes_triangles() -> TrianglePresentation {
    TrianglePresentation::parse(HUGHES_TRIANGLES, 91).expect("bundled triples parse")
}
