//! High-dimensional tournaments and their notions of acyclicity.
//!
//! A d-tournament on `[1, n]` orients every d-face of the simplex. This crate
//! decides cycles exactly (rational LP with Farkas certificates), searches
//! for 0/1-cycles and (d+2)-cycles, collapses free faces, realizes
//! tournaments from point configurations and arrangement chambers, extracts
//! large acyclic subtournaments and runs exhaustive censuses of small cases.

pub mod census;
pub mod collapse;
pub mod cycles;
pub mod error;
pub mod extraction;
pub mod face;
pub mod fixtures;
pub mod geometry;
pub mod incidence;
pub mod linear;
pub mod regression;
pub mod tournament;

pub use error::{Error, Result};
pub use face::Face;
pub use incidence::{degree_sequence, IncidenceMatrix, Skeleton};
pub use tournament::{LabelMap, Tournament};
