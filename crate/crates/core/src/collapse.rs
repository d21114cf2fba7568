//! Free faces and elementary collapses.
//!
//! A (d-1)-face is free when its incidence row is nonzero and one-signed. An
//! elementary collapse zeroes every present coface of a free face. Rows that
//! have become all-zero are spent, not free.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{rank_sorted, subsets, Face};
use crate::incidence::Skeleton;
use crate::tournament::Tournament;

/// Default cap on the number of present faces for [`is_collapsible_exact`].
pub const DEFAULT_COLLAPSE_CAP: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseStep {
    pub free: Face,
    pub removed: Vec<Face>,
}

/// Collapses that take a tournament to the empty one, in order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CollapseWitness {
    pub steps: Vec<CollapseStep>,
}

impl CollapseWitness {
    /// Replays the steps on `t`, checking each one is a legal collapse that
    /// removes exactly the listed faces. Returns the final tournament.
    pub fn replay(&self, t: &Tournament) -> Result<Tournament> {
        let mut cur = t.clone();
        for step in &self.steps {
            let next = collapse_at(&cur, &step.free)?;
            let removed: Vec<Face> = (0..cur.num_faces())
                .filter(|&r| cur.sign_at(r) != 0 && next.sign_at(r) == 0)
                .map(|r| cur.face(r))
                .collect();
            if removed != step.removed {
                return Err(Error::InvalidTournament(format!(
                    "collapse at {:?} removes {removed:?}, witness lists {:?}",
                    step.free, step.removed
                )));
            }
            cur = next;
        }
        Ok(cur)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

/// Order in which [`greedy_collapse`] scans candidate free faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Lexicographic,
    /// Decreasing lexicographic order: `{n-d+1..n}` first, `{1..d}` last.
    ReverseLexicographic,
    /// Most present cofaces first, ties by lexicographic rank.
    MostCofacesFirst,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::Lexicographic,
        Strategy::ReverseLexicographic,
        Strategy::MostCofacesFirst,
    ];
}

/// Per-row summary over present faces: (positive entries, negative entries).
fn row_counts(t: &Tournament, sk: &Skeleton, r: usize) -> (usize, usize) {
    let mut pos = 0;
    let mut neg = 0;
    for &(c, coef) in sk.row(r) {
        match t.sign_at(c) * coef {
            0 => {}
            v if v > 0 => pos += 1,
            _ => neg += 1,
        }
    }
    (pos, neg)
}

fn is_free_row(t: &Tournament, sk: &Skeleton, r: usize) -> bool {
    let (pos, neg) = row_counts(t, sk, r);
    (pos > 0) != (neg > 0)
}

/// Free (d-1)-faces in lexicographic order.
pub fn free_faces(t: &Tournament) -> Vec<Face> {
    let sk = Skeleton::for_tournament(t);
    free_face_ranks(t, &sk)
        .into_iter()
        .map(|r| rank_face(t, r))
        .collect()
}

pub fn free_face_ranks(t: &Tournament, sk: &Skeleton) -> Vec<usize> {
    (0..sk.num_rows()).filter(|&r| is_free_row(t, sk, r)).collect()
}

fn rank_face(t: &Tournament, r: usize) -> Face {
    Face::unrank(r, t.d(), t.n()).expect("row rank in range")
}

/// Zeroes all present cofaces of the free face `tau`.
pub fn collapse_at(t: &Tournament, tau: &Face) -> Result<Tournament> {
    if tau.len() != t.d() {
        return Err(Error::DimensionMismatch(format!(
            "{tau:?} is not a ({})-face",
            t.d() as isize - 1
        )));
    }
    let sk = Skeleton::for_tournament(t);
    let r = tau.rank(t.n())?;
    if !is_free_row(t, &sk, r) {
        return Err(Error::NotFree(tau.clone()));
    }
    Ok(collapse_row(t, &sk, r))
}

fn collapse_row(t: &Tournament, sk: &Skeleton, r: usize) -> Tournament {
    let mut signs = t.signs().to_vec();
    for &(c, _) in sk.row(r) {
        signs[c] = 0;
    }
    t.with_signs_unchecked(signs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GreedyOutcome {
    pub success: bool,
    pub witness: CollapseWitness,
    pub residue: Tournament,
}

/// Row ranks of all (d-1)-faces sorted by the strategy's static key.
fn static_order(n: usize, d: usize, strategy: Strategy) -> Vec<usize> {
    let mut rows: Vec<usize> = subsets(n, d).map(|f| rank_sorted(&f, n)).collect();
    if strategy == Strategy::ReverseLexicographic {
        rows.reverse();
    }
    rows
}

/// Repeatedly collapses the first free face in the strategy's order.
pub fn greedy_collapse(t: &Tournament, strategy: Strategy) -> GreedyOutcome {
    let sk = Skeleton::for_tournament(t);
    let order = static_order(t.n(), t.d(), strategy);
    let mut cur = t.clone();
    let mut witness = CollapseWitness::default();
    loop {
        let pick = match strategy {
            Strategy::MostCofacesFirst => order
                .iter()
                .copied()
                .filter(|&r| is_free_row(&cur, &sk, r))
                .max_by_key(|&r| {
                    let (p, q) = row_counts(&cur, &sk, r);
                    (p + q, std::cmp::Reverse(r))
                }),
            _ => order.iter().copied().find(|&r| is_free_row(&cur, &sk, r)),
        };
        let Some(r) = pick else { break };
        let next = collapse_row(&cur, &sk, r);
        witness.steps.push(step_record(&cur, &next, &sk, r));
        cur = next;
    }
    GreedyOutcome {
        success: cur.is_empty(),
        witness,
        residue: cur,
    }
}

fn step_record(before: &Tournament, after: &Tournament, sk: &Skeleton, r: usize) -> CollapseStep {
    let mut removed: Vec<usize> = sk
        .row(r)
        .iter()
        .map(|&(c, _)| c)
        .filter(|&c| before.sign_at(c) != 0 && after.sign_at(c) == 0)
        .collect();
    removed.sort_unstable();
    CollapseStep {
        free: rank_face(before, r),
        removed: removed.into_iter().map(|c| before.face(c)).collect(),
    }
}

/// Decides collapsibility by depth-first search over collapse sequences. A
/// state is the set of remaining faces; states from which no sequence
/// empties the tournament are memoized. Returns a replayable witness when the
/// tournament is collapsible.
pub fn is_collapsible_exact(t: &Tournament, cap: usize) -> Result<Option<CollapseWitness>> {
    let present = t.support();
    if present.len() > cap {
        return Err(Error::TooLarge {
            what: "collapsibility search face set",
            size: present.len(),
            cap,
        });
    }
    let sk = Skeleton::for_tournament(t);
    let mut search = CollapseSearch::new(t, &sk, &present);
    let mut state = FaceBits::full(present.len());
    let mut path = Vec::new();
    if !search.descend(&mut state, &mut path) {
        return Ok(None);
    }
    let mut witness = CollapseWitness::default();
    let mut cur = t.clone();
    for r in path {
        let next = collapse_row(&cur, &sk, r);
        witness.steps.push(step_record(&cur, &next, &sk, r));
        cur = next;
    }
    debug_assert!(cur.is_empty());
    Ok(Some(witness))
}

/// Number of states the exact search visited, for diagnostics.
pub fn exact_search_states(t: &Tournament, cap: usize) -> Result<(bool, usize)> {
    let present = t.support();
    if present.len() > cap {
        return Err(Error::TooLarge {
            what: "collapsibility search face set",
            size: present.len(),
            cap,
        });
    }
    let sk = Skeleton::for_tournament(t);
    let mut search = CollapseSearch::new(t, &sk, &present);
    let mut state = FaceBits::full(present.len());
    let ok = search.descend(&mut state, &mut Vec::new());
    Ok((ok, search.visited))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct FaceBits(Vec<u64>);

impl FaceBits {
    fn full(len: usize) -> Self {
        let mut words = vec![u64::MAX; len.div_ceil(64)];
        if len % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (len % 64)) - 1;
            }
        }
        FaceBits(words)
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

struct CollapseSearch {
    /// Per (d-1)-face rank: `(local face, induced sign)` over present faces.
    rows: Vec<Vec<(usize, i8)>>,
    failed: HashSet<FaceBits>,
    visited: usize,
}

impl CollapseSearch {
    fn new(t: &Tournament, sk: &Skeleton, present: &[usize]) -> Self {
        let mut rows = vec![Vec::new(); sk.num_rows()];
        for (local, &c) in present.iter().enumerate() {
            let eps = t.sign_at(c);
            for &(r, coef) in sk.col(c) {
                rows[r].push((local, eps * coef));
            }
        }
        CollapseSearch {
            rows,
            failed: HashSet::new(),
            visited: 0,
        }
    }

    fn is_free(&self, state: &FaceBits, r: usize) -> bool {
        let mut sign = 0i8;
        for &(f, s) in &self.rows[r] {
            if state.get(f) {
                if sign == 0 {
                    sign = s;
                } else if sign != s {
                    return false;
                }
            }
        }
        sign != 0
    }

    fn descend(&mut self, state: &mut FaceBits, path: &mut Vec<usize>) -> bool {
        if state.is_empty() {
            return true;
        }
        if self.failed.contains(state) {
            return false;
        }
        self.visited += 1;
        for r in 0..self.rows.len() {
            if !self.is_free(state, r) {
                continue;
            }
            let removed: Vec<usize> = self.rows[r]
                .iter()
                .map(|&(f, _)| f)
                .filter(|&f| state.get(f))
                .collect();
            for &f in &removed {
                state.clear(f);
            }
            path.push(r);
            if self.descend(state, path) {
                return true;
            }
            path.pop();
            for &f in &removed {
                state.set(f);
            }
        }
        self.failed.insert(state.clone());
        false
    }
}
