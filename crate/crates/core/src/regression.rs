//! Frozen census results. Each value was produced by the exhaustive census
//! in this crate and is checked again by the test suite; a change here means
//! a checker changed behavior.

use crate::census::Convention;

/// Acyclic complete 2-tournaments on 5 vertices. Produced by
/// `census::enumerate(5, 2, ..)` with the exact LP checker over all 1024
/// tournaments. Collapsible, 0/1-acyclic and (d+2)-cycle-free counts at
/// (5, 2) coincide with it.
pub const ACYCLIC_5_2: u64 = 544;

/// Acyclic complete 2-tournaments on 4 vertices (all but the two boundary
/// patterns).
pub const ACYCLIC_4_2: u64 = 14;

/// Acyclic complete 3-tournaments on 5 vertices, from `census::enumerate(5, 3, ..)`.
pub const ACYCLIC_5_3: u64 = 30;

/// Orbits of acyclic (4, 2)-tournaments under relabeling (sizes 6 and 8);
/// adding global reversal does not merge them.
pub const ACYCLIC_ORBITS_4_2: usize = 2;

/// Orbits of acyclic (5, 2)-tournaments, from `census::orbit_census`.
/// Orbit sizes in canonical order: 24, 120, 120, 40, 120, 120.
pub const ACYCLIC_ORBITS_5_2: usize = 6;

/// Convention under which [`ACYCLIC_ORBITS_5_2`] was counted. Relabel-or-
/// global-reversal also gives six, so every relabeling orbit is closed under
/// reversing all signs and both conventions induce the same partition.
pub const ORBIT_CONVENTION: Convention = Convention::RelabelOnly;

/// Distinct degree sequences over all 1024 (5, 2)-tournaments.
pub const DEGREE_SEQUENCES_5_2: usize = 728;
