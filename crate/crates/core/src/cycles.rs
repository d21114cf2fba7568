//! Cycles of every flavour: general cycles decided by exact LP duality,
//! 0/1-cycles by exhaustive search, and (d+2)-cycles on vertex sets of size
//! `d + 2`.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::face::{subsets, Face};
use crate::incidence::{IncidenceMatrix, Skeleton};
use crate::linear::{format_rational, nonneg_kernel_or_certificate, KernelOrCertificate, Rational};
use crate::tournament::Tournament;

/// Default face-count cap for [`find_zero_one_cycle`].
pub const DEFAULT_ZERO_ONE_CAP: usize = 64;

/// A nonempty set of faces carrying positive rational weights, summing to 1,
/// whose weighted incidence columns cancel.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleCertificate {
    /// `(face rank, face, weight)` in rank order; every weight is positive.
    pub weights: Vec<(usize, Face, Rational)>,
}

impl CycleCertificate {
    pub fn support(&self) -> Vec<Face> {
        self.weights.iter().map(|(_, f, _)| f.clone()).collect()
    }

    pub fn support_ranks(&self) -> Vec<usize> {
        self.weights.iter().map(|(r, _, _)| *r).collect()
    }

    /// Exact check against `t`: positive weights, sum one, `A v = 0`.
    pub fn verify(&self, t: &Tournament) -> bool {
        let a = IncidenceMatrix::new(t);
        let mut acc = vec![Rational::zero(); a.num_rows()];
        let mut total = Rational::zero();
        for (rank, _, w) in &self.weights {
            if !w.is_positive() || t.sign_at(*rank) == 0 {
                return false;
            }
            total += w;
            for &(r, v) in a.col(*rank) {
                acc[r] += w * Rational::from_integer(v.into());
            }
        }
        !self.weights.is_empty() && total == Rational::from_integer(1.into()) && acc.iter().all(Zero::is_zero)
    }
}

impl Serialize for CycleCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CycleCertificate", 2)?;
        st.serialize_field("kind", "cycle")?;
        st.serialize_field(
            "weights",
            &FaceMap(self.weights.iter().map(|(_, f, w)| (f.key(), format_rational(w))).collect()),
        )?;
        st.end()
    }
}

/// `y` indexed by the (d-1)-faces with `y . column >= 1` on every present
/// face: the Farkas alternative to a cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveCertificate {
    pub n: usize,
    pub d: usize,
    /// One entry per (d-1)-face, in lexicographic order.
    pub y: Vec<Rational>,
}

impl PositiveCertificate {
    pub fn verify(&self, t: &Tournament) -> bool {
        let a = IncidenceMatrix::new(t);
        if self.y.len() != a.num_rows() {
            return false;
        }
        let one = Rational::from_integer(1.into());
        (0..a.num_cols()).filter(|&c| t.sign_at(c) != 0).all(|c| {
            let s: Rational = a
                .col(c)
                .iter()
                .map(|&(r, v)| &self.y[r] * Rational::from_integer(v.into()))
                .sum();
            s >= one
        })
    }
}

impl Serialize for PositiveCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PositiveCertificate", 2)?;
        st.serialize_field("kind", "chamber")?;
        let entries = subsets(self.n, self.d)
            .zip(&self.y)
            .map(|(f, y)| (Face::from_sorted(&f).key(), format_rational(y)))
            .collect();
        st.serialize_field("y", &FaceMap(entries))?;
        st.end()
    }
}

/// Faces whose (unweighted) columns sum to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneCycle {
    pub ranks: Vec<usize>,
    pub faces: Vec<Face>,
}

impl ZeroOneCycle {
    pub fn verify(&self, t: &Tournament) -> bool {
        let a = IncidenceMatrix::new(t);
        !self.ranks.is_empty()
            && self.ranks.iter().all(|&r| t.sign_at(r) != 0)
            && a.column_sum(self.ranks.iter().copied()).iter().all(|&v| v == 0)
    }
}

impl Serialize for ZeroOneCycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ZeroOneCycle", 2)?;
        st.serialize_field("kind", "zero-one")?;
        st.serialize_field("faces", &self.faces)?;
        st.end()
    }
}

/// Ordered string map for face-keyed JSON objects.
pub(crate) struct FaceMap(pub Vec<(String, String)>);

impl Serialize for FaceMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Verdict of [`is_acyclic`] with its exact witness.
#[derive(Debug, Clone, PartialEq)]
pub enum Acyclicity {
    Acyclic(PositiveCertificate),
    Cyclic(CycleCertificate),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic(_))
    }

    pub fn to_json(&self) -> String {
        match self {
            Acyclicity::Acyclic(c) => serde_json::to_string(c),
            Acyclicity::Cyclic(c) => serde_json::to_string(c),
        }
        .expect("certificate serializes")
    }
}

/// Decides acyclicity by exact phase-1 simplex over the columns of the
/// present faces.
pub fn is_acyclic(t: &Tournament) -> Acyclicity {
    let sk = Skeleton::for_tournament(t);
    is_acyclic_with(t, &sk)
}

pub fn is_acyclic_with(t: &Tournament, sk: &Skeleton) -> Acyclicity {
    let present = t.support();
    match lp_on_faces(t, sk, &present) {
        KernelOrCertificate::Kernel(v) => {
            let weights = present
                .iter()
                .zip(v)
                .filter(|(_, w)| w.is_positive())
                .map(|(&r, w)| (r, t.face(r), w))
                .collect();
            Acyclicity::Cyclic(CycleCertificate { weights })
        }
        KernelOrCertificate::Certificate(y) => Acyclicity::Acyclic(PositiveCertificate {
            n: t.n(),
            d: t.d(),
            y,
        }),
    }
}

fn lp_on_faces(t: &Tournament, sk: &Skeleton, faces: &[usize]) -> KernelOrCertificate {
    let cols: Vec<Vec<(usize, i8)>> = faces
        .iter()
        .map(|&c| {
            let eps = t.sign_at(c);
            sk.col(c).iter().map(|&(r, coef)| (r, eps * coef)).collect()
        })
        .collect();
    nonneg_kernel_or_certificate(sk.num_rows(), &cols)
}

/// [`find_zero_one_cycle`] with the default cap.
pub fn has_zero_one_cycle(t: &Tournament) -> Result<Option<ZeroOneCycle>> {
    find_zero_one_cycle(t, DEFAULT_ZERO_ONE_CAP)
}

/// Exhaustive search for a nonempty face set whose columns sum to zero.
///
/// Faces lying in a row whose present entries all share one sign cannot be in
/// such a set and are pruned repeatedly first; if the LP then shows the
/// remaining faces acyclic there is no 0/1-cycle either. Otherwise a
/// depth-first search runs over at most `cap` remaining faces (else
/// [`Error::TooLarge`]), deciding faces in an order that keeps touching the
/// same rows. A row's partial sum plus what its undecided faces can still add
/// must be able to reach zero. Failed `(position, nonempty, row sums)` states
/// are memoized. Worst case exponential in the number of faces.
pub fn find_zero_one_cycle(t: &Tournament, cap: usize) -> Result<Option<ZeroOneCycle>> {
    let sk = Skeleton::for_tournament(t);
    find_zero_one_cycle_with(t, &sk, cap)
}

pub fn find_zero_one_cycle_with(
    t: &Tournament,
    sk: &Skeleton,
    cap: usize,
) -> Result<Option<ZeroOneCycle>> {
    let active = prune_one_signed_rows(t, sk, t.support());
    if active.is_empty() {
        return Ok(None);
    }
    if let KernelOrCertificate::Certificate(_) = lp_on_faces(t, sk, &active) {
        return Ok(None);
    }
    if active.len() > cap {
        return Err(Error::TooLarge {
            what: "0/1-cycle search face set",
            size: active.len(),
            cap,
        });
    }
    let order = search_order(sk, &active);
    let mut search = ZeroOneDfs::new(t, sk, &order);
    let found = search.run();
    Ok(found.map(|mut ranks| {
        ranks.sort_unstable();
        let cycle = ZeroOneCycle {
            faces: ranks.iter().map(|&r| t.face(r)).collect(),
            ranks,
        };
        assert!(cycle.verify(t), "0/1-cycle witness does not cancel");
        cycle
    }))
}

/// Removes, until stable, every face lying in a row whose remaining nonzero
/// entries all have the same sign.
fn prune_one_signed_rows(t: &Tournament, sk: &Skeleton, faces: Vec<usize>) -> Vec<usize> {
    let mut alive = vec![false; sk.num_cols()];
    for &c in &faces {
        alive[c] = true;
    }
    loop {
        let mut removed = false;
        for r in 0..sk.num_rows() {
            let (mut pos, mut neg) = (false, false);
            for &(c, coef) in sk.row(r) {
                if alive[c] {
                    if t.sign_at(c) * coef > 0 {
                        pos = true;
                    } else {
                        neg = true;
                    }
                }
            }
            if pos != neg {
                for &(c, _) in sk.row(r) {
                    alive[c] = false;
                }
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    faces.into_iter().filter(|&c| alive[c]).collect()
}

/// Next face = the one with most rows already touched by earlier faces, ties
/// by lowest rank.
fn search_order(sk: &Skeleton, faces: &[usize]) -> Vec<usize> {
    let mut touched = vec![false; sk.num_rows()];
    let mut left: Vec<usize> = faces.to_vec();
    let mut order = Vec::with_capacity(faces.len());
    while !left.is_empty() {
        let (idx, _) = left
            .iter()
            .enumerate()
            .map(|(i, &c)| (i, sk.col(c).iter().filter(|&&(r, _)| touched[r]).count()))
            .max_by_key(|&(i, k)| (k, std::cmp::Reverse(i)))
            .expect("nonempty");
        let c = left.remove(idx);
        for &(r, _) in sk.col(c) {
            touched[r] = true;
        }
        order.push(c);
    }
    order
}

struct ZeroOneDfs {
    /// Per ordered face: `(local row, entry)`.
    cols: Vec<Vec<(usize, i8)>>,
    ranks: Vec<usize>,
    sums: Vec<i8>,
    rem_pos: Vec<i32>,
    rem_neg: Vec<i32>,
    chosen: Vec<bool>,
    failed: HashSet<(usize, bool, Vec<i8>)>,
}

impl ZeroOneDfs {
    fn new(t: &Tournament, sk: &Skeleton, order: &[usize]) -> Self {
        let mut local = vec![usize::MAX; sk.num_rows()];
        let mut num_local = 0;
        let cols: Vec<Vec<(usize, i8)>> = order
            .iter()
            .map(|&c| {
                let eps = t.sign_at(c);
                sk.col(c)
                    .iter()
                    .map(|&(r, coef)| {
                        if local[r] == usize::MAX {
                            local[r] = num_local;
                            num_local += 1;
                        }
                        (local[r], eps * coef)
                    })
                    .collect()
            })
            .collect();
        let mut rem_pos = vec![0; num_local];
        let mut rem_neg = vec![0; num_local];
        for col in &cols {
            for &(r, v) in col {
                if v > 0 {
                    rem_pos[r] += 1;
                } else {
                    rem_neg[r] += 1;
                }
            }
        }
        ZeroOneDfs {
            cols,
            ranks: order.to_vec(),
            sums: vec![0; num_local],
            rem_pos,
            rem_neg,
            chosen: vec![false; order.len()],
            failed: HashSet::new(),
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        if self.descend(0, false) {
            Some(
                (0..self.ranks.len())
                    .filter(|&i| self.chosen[i])
                    .map(|i| self.ranks[i])
                    .collect(),
            )
        } else {
            None
        }
    }

    fn feasible(&self, p: usize) -> bool {
        self.cols[p].iter().all(|&(r, _)| {
            let s = self.sums[r] as i32;
            s + self.rem_pos[r] >= 0 && s - self.rem_neg[r] <= 0
        })
    }

    fn descend(&mut self, p: usize, any: bool) -> bool {
        if p == self.cols.len() {
            return any;
        }
        if self.failed.contains(&(p, any, self.sums.clone())) {
            return false;
        }
        for &(r, v) in &self.cols[p] {
            if v > 0 {
                self.rem_pos[r] -= 1;
            } else {
                self.rem_neg[r] -= 1;
            }
        }
        // include first
        for &(r, v) in &self.cols[p] {
            self.sums[r] += v;
        }
        self.chosen[p] = true;
        if self.feasible(p) && self.descend(p + 1, true) {
            return true;
        }
        self.chosen[p] = false;
        for i in 0..self.cols[p].len() {
            let (r, v) = self.cols[p][i];
            self.sums[r] -= v;
        }
        if self.feasible(p) && self.descend(p + 1, any) {
            return true;
        }
        for &(r, v) in &self.cols[p] {
            if v > 0 {
                self.rem_pos[r] += 1;
            } else {
                self.rem_neg[r] += 1;
            }
        }
        self.failed.insert((p, any, self.sums.clone()));
        false
    }
}

fn check_cycle_set(t: &Tournament, u: &[usize]) -> Result<Vec<usize>> {
    let mut u = u.to_vec();
    u.sort_unstable();
    u.dedup();
    if u.len() != t.d() + 2 {
        return Err(Error::InvalidFace(format!(
            "a (d+2)-cycle needs {} distinct vertices, got {u:?}",
            t.d() + 2
        )));
    }
    if u.iter().any(|&v| v == 0 || v > t.n()) {
        return Err(Error::InvalidFace(format!("{u:?} not inside [1, {}]", t.n())));
    }
    Ok(u)
}

/// Whether the `d + 2` vertices `u` carry a (d+2)-cycle: for every d-subset
/// `tau` of `u`, the two faces of `u` containing it induce opposite
/// orientations on `tau`.
pub fn is_d_plus_2_cycle(t: &Tournament, u: &[usize]) -> Result<bool> {
    let u = check_cycle_set(t, u)?;
    let d = t.d();
    let faces: Vec<Vec<usize>> = (0..u.len())
        .map(|k| u.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect())
        .collect();
    let signs: Vec<i8> = faces.iter().map(|f| t.sign_sorted(f)).collect();
    if let Some(k) = signs.iter().position(|&s| s == 0) {
        return Err(Error::InvalidTournament(format!(
            "face {:?} of the candidate cycle is unoriented",
            Face::from_sorted(&faces[k])
        )));
    }
    let mut opposite = true;
    'pairs: for a in 0..u.len() {
        for b in a + 1..u.len() {
            // tau = u minus {u_a, u_b}; faces[b] = tau + u_a, faces[a] = tau + u_b
            let tau: Vec<usize> = u
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != a && i != b)
                .map(|(_, &v)| v)
                .collect();
            let ia = signs[b] * crate::face::boundary_coefficient_sorted(&tau, &faces[b]);
            let ib = signs[a] * crate::face::boundary_coefficient_sorted(&tau, &faces[a]);
            if ia != -ib {
                opposite = false;
                break 'pairs;
            }
        }
    }
    debug_assert_eq!(opposite, {
        // alternating pattern eps(u \ u_k) = c (-1)^(d+1-k)
        let c = signs[0] * crate::face::sign_of_power(d + 1);
        (0..u.len()).all(|k| signs[k] == c * crate::face::sign_of_power(d + 1 - k))
    });
    Ok(opposite)
}

/// Number of cyclic (d+2)-subsets of a complete tournament.
pub fn count_d_plus_2_cycles(t: &Tournament) -> Result<usize> {
    require_complete(t)?;
    let mut count = 0;
    for u in subsets(t.n(), t.d() + 2) {
        if is_d_plus_2_cycle(t, &u)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether every `k`-subset of vertices contains a (d+2)-cycle.
pub fn all_k_subsets_contain_d2_cycle(t: &Tournament, k: usize) -> Result<bool> {
    require_complete(t)?;
    if k > t.n() {
        return Ok(true);
    }
    for s in subsets(t.n(), k) {
        let mut found = false;
        for pick in subsets(k, t.d() + 2) {
            let u: Vec<usize> = pick.iter().map(|&i| s[i - 1]).collect();
            if is_d_plus_2_cycle(t, &u)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_complete(t: &Tournament) -> Result<()> {
    if t.is_complete() {
        Ok(())
    } else {
        Err(Error::Incomplete)
    }
}

/// Result of [`extend_avoiding_01_cycles`].
#[derive(Debug, Clone, PartialEq)]
pub enum Extension {
    /// Every listed face was oriented without creating a 0/1-cycle.
    Extended(Tournament),
    /// Both orientations of `face` create a 0/1-cycle; `partial` is the
    /// tournament just before `face`.
    Blocked {
        face: Face,
        plus: ZeroOneCycle,
        minus: ZeroOneCycle,
        partial: Tournament,
    },
    /// The input already contains a 0/1-cycle.
    AlreadyCyclic(ZeroOneCycle),
}

/// Orients the faces of `order` one at a time, trying `+1` then `-1`, and
/// rejecting a sign that creates a 0/1-cycle.
pub fn extend_avoiding_01_cycles(t: &Tournament, order: &[Face], cap: usize) -> Result<Extension> {
    let sk = Skeleton::for_tournament(t);
    if let Some(c) = find_zero_one_cycle_with(t, &sk, cap)? {
        return Ok(Extension::AlreadyCyclic(c));
    }
    let mut cur = t.clone();
    for face in order {
        if cur.sign(face)? != 0 {
            return Err(Error::InvalidTournament(format!("face {face:?} is already oriented")));
        }
        let plus = cur.with_sign(face, 1)?;
        let Some(plus_cycle) = find_zero_one_cycle_with(&plus, &sk, cap)? else {
            cur = plus;
            continue;
        };
        let minus = cur.with_sign(face, -1)?;
        let Some(minus_cycle) = find_zero_one_cycle_with(&minus, &sk, cap)? else {
            cur = minus;
            continue;
        };
        return Ok(Extension::Blocked {
            face: face.clone(),
            plus: plus_cycle,
            minus: minus_cycle,
            partial: cur,
        });
    }
    Ok(Extension::Extended(cur))
}
