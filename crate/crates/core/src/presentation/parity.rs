use serde::{Deserialize, Serialize};

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::incidence::ProjectivePlane;
use crate::presentation::{TrianglePresentation, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityVerdict {
    pub holds: bool,
    /// Points of the union of the chosen lines, ascending.
    pub set_a: Vec<usize>,
    /// First triple (ascending) meeting `A` an even number of times.
    pub violation: Option<Triple>,
}

/// Does `a_x ↦ 0` for `x ∈ A`, `a_x ↦ 1` otherwise define a homomorphism to
/// C₂? Holds iff every triple meets `A` an odd number of times, counting
/// repeated coordinates separately.
pub fn check_parity(
    plane: &ProjectivePlane,
    t: &TrianglePresentation,
    lines: &[usize],
) -> Result<ParityVerdict> {
    let mut a = PointSet::EMPTY;
    for &l in lines {
        if l >= plane.n() {
            return Err(Error::OutOfRange {
                index: l,
                bound: plane.n(),
            });
        }
        a = a.union(plane.line(l));
    }
    let violation = t
        .triples()
        .find(|tr| tr.iter().filter(|&&x| a.contains(x)).count() % 2 == 0);
    Ok(ParityVerdict {
        holds: violation.is_none(),
        set_a: a.iter().collect(),
        violation,
    })
}
