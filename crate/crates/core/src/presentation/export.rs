//! Group presentations `⟨a_0, …, a_{n-1} | a_x a_y a_z = 1⟩`, one relator
//! per rotation orbit.
//!
//! Generic format:
//!
//! ```text
//! generators <n>
//! relators <m>
//! a0*a3*a41
//! ...
//! ```
//!
//! The GAP format defines `F`, `rels` and `G := F / rels`, with `F.(i+1)`
//! standing for `a_i`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::presentation::TrianglePresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum ExportFormat {
    #[default]
    Generic,
    Gap,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "generic" => Ok(ExportFormat::Generic),
            "gap" => Ok(ExportFormat::Gap),
            other => Err(Error::UnknownStrategy(other.to_string())),
        }
    }
}

pub fn export_group_presentation(t: &TrianglePresentation, format: ExportFormat) -> String {
    let n = t.n();
    let reps = t.orbit_representatives();
    let mut out = String::new();
    match format {
        ExportFormat::Generic => {
            writeln!(out, "generators {n}").unwrap();
            writeln!(out, "relators {}", reps.len()).unwrap();
            for [x, y, z] in reps {
                writeln!(out, "a{x}*a{y}*a{z}").unwrap();
            }
        }
        ExportFormat::Gap => {
            writeln!(
                out,
                "F := FreeGroup(List([0..{}], i -> Concatenation(\"a\", String(i))));;",
                n.saturating_sub(1)
            )
            .unwrap();
            if reps.is_empty() {
                writeln!(out, "rels := [ ];;").unwrap();
            } else {
                writeln!(out, "rels := [").unwrap();
                let last = reps.len() - 1;
                for (i, [x, y, z]) in reps.into_iter().enumerate() {
                    let sep = if i == last { "" } else { "," };
                    writeln!(out, "  F.{}*F.{}*F.{}{sep}", x + 1, y + 1, z + 1).unwrap();
                }
                writeln!(out, "];;").unwrap();
            }
            writeln!(out, "G := F / rels;;").unwrap();
        }
    }
    out
}
