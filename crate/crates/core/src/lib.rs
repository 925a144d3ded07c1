//! Finite projective planes, point-line correspondences and the triangle
//! presentations they induce.

pub mod bitset;
pub mod correspondence;
pub mod error;
pub mod fixtures;
pub mod groupalg;
pub mod incidence;
pub mod presentation;
pub mod scab;
pub mod search;

pub use error::{Error, Result};
