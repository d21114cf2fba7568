//! Exhaustive enumeration of small tournaments.
//!
//! Every complete tournament is visited by its sign-array index (bit `i` set
//! means face of rank `i` has sign `+1`). Work is split into index ranges and
//! merged with associative, commutative reductions, so totals do not depend on
//! the number of threads.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::collapse::{is_collapsible_exact, DEFAULT_COLLAPSE_CAP};
use crate::cycles::{count_d_plus_2_cycles, find_zero_one_cycle_with, is_acyclic, is_acyclic_with, DEFAULT_ZERO_ONE_CAP};
use crate::error::{Error, Result};
use crate::face::{binomial, rank_sorted, subsets};
use crate::geometry::{orient_from_points, PointConfiguration};
use crate::incidence::{degree_sequence_with, Skeleton};
use crate::tournament::Tournament;

/// Default limit on the number of tournaments a census may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 22;
/// Default number of random configurations behind `realizable_hits`.
pub const DEFAULT_REALIZABLE_SAMPLES: usize = 10_000;

const CHUNK: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Acyclic,
    Collapsible,
    ZeroOneAcyclic,
    /// No (d+2)-subset is a (d+2)-cycle.
    D2CycleFree,
    /// Hit by `orient_from_points` on some sampled configuration.
    Realizable,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::Acyclic,
        Predicate::Collapsible,
        Predicate::ZeroOneAcyclic,
        Predicate::D2CycleFree,
        Predicate::Realizable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Acyclic => "acyclic",
            Predicate::Collapsible => "collapsible",
            Predicate::ZeroOneAcyclic => "zero-one-acyclic",
            Predicate::D2CycleFree => "k2cycle-free",
            Predicate::Realizable => "realizable",
        }
    }

    /// Evaluates a predicate other than [`Predicate::Realizable`].
    pub fn holds(self, t: &Tournament, sk: &Skeleton) -> Result<bool> {
        Ok(match self {
            Predicate::Acyclic => is_acyclic_with(t, sk).is_acyclic(),
            Predicate::Collapsible => is_collapsible_exact(t, DEFAULT_COLLAPSE_CAP)?.is_some(),
            Predicate::ZeroOneAcyclic => find_zero_one_cycle_with(t, sk, DEFAULT_ZERO_ONE_CAP)?.is_none(),
            Predicate::D2CycleFree => count_d_plus_2_cycles(t)? == 0,
            Predicate::Realizable => {
                return Err(Error::Missing(
                    "realizability is sampled, not decided per tournament".into(),
                ))
            }
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown predicate {s:?}")))
    }
}

/// Which symmetries identify two tournaments in [`orbit_census`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    RelabelOnly,
    RelabelOrGlobalReversal,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::RelabelOnly, Convention::RelabelOrGlobalReversal];

    pub fn name(self) -> &'static str {
        match self {
            Convention::RelabelOnly => "relabel-only",
            Convention::RelabelOrGlobalReversal => "relabel-or-global-reversal",
        }
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Convention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown convention {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub predicates: Vec<Predicate>,
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    pub budget: u64,
    pub realizable_samples: usize,
    pub seed: u64,
    pub degree_sequences: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            predicates: Predicate::ALL.to_vec(),
            threads: None,
            budget: DEFAULT_BUDGET,
            realizable_samples: DEFAULT_REALIZABLE_SAMPLES,
            seed: 0,
            degree_sequences: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    /// Distinct degree sequences over all tournaments.
    pub distinct: usize,
    /// Distinct sequences over acyclic tournaments, when acyclicity was counted.
    pub distinct_acyclic: Option<usize>,
    /// Largest number of acyclic tournaments sharing one sequence.
    pub max_acyclic_multiplicity: Option<usize>,
    /// Pairs of distinct tournaments (by index) sharing a sequence where at
    /// least one is cyclic; only the first few are kept.
    pub cyclic_collision_examples: Vec<(u64, u64)>,
    pub cyclic_collisions: u64,
}

/// Counts per class; `None` means not computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub d: usize,
    pub total: u64,
    pub acyclic: Option<u64>,
    pub collapsible: Option<u64>,
    pub zero_one_acyclic: Option<u64>,
    pub d2_cycle_free: Option<u64>,
    pub realizable_hits: Option<u64>,
    pub realizable_samples: Option<usize>,
    pub degree_sequences: Option<DegreeStats>,
    pub bounds: Option<BoundVerdicts>,
}

impl CensusReport {
    pub fn count(&self, p: Predicate) -> Option<u64> {
        match p {
            Predicate::Acyclic => self.acyclic,
            Predicate::Collapsible => self.collapsible,
            Predicate::ZeroOneAcyclic => self.zero_one_acyclic,
            Predicate::D2CycleFree => self.d2_cycle_free,
            Predicate::Realizable => self.realizable_hits,
        }
    }

    /// `realizable <= collapsible <= acyclic <= 0/1-acyclic <= k2cycle-free <= total`
    /// over whichever counts are present.
    pub fn respects_containment_chain(&self) -> bool {
        let chain = [
            self.realizable_hits,
            self.collapsible,
            self.acyclic,
            self.zero_one_acyclic,
            self.d2_cycle_free,
            Some(self.total),
        ];
        let present: Vec<u64> = chain.into_iter().flatten().collect();
        present.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let cell = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "n,d,total,acyclic,collapsible,zero_one_acyclic,d2_cycle_free,realizable_hits\n{},{},{},{},{},{},{},{}\n",
            self.n,
            self.d,
            self.total,
            cell(self.acyclic),
            cell(self.collapsible),
            cell(self.zero_one_acyclic),
            cell(self.d2_cycle_free),
            cell(self.realizable_hits),
        )
    }
}

/// Sign-array index of a complete tournament.
pub fn tournament_index(t: &Tournament) -> Result<u64> {
    if !t.is_complete() {
        return Err(Error::Incomplete);
    }
    if t.num_faces() > 64 {
        return Err(Error::TooLarge {
            what: "faces for an index",
            size: t.num_faces(),
            cap: 64,
        });
    }
    Ok(t.signs()
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i))
}

/// Number of complete tournaments, if within `budget`.
pub fn check_budget(n: usize, d: usize, budget: u64) -> Result<u64> {
    let m = binomial(n, d + 1);
    if m >= 63 || (1u64 << m) > budget {
        return Err(Error::TooLarge {
            what: "tournaments to enumerate",
            size: if m >= 63 { usize::MAX } else { 1usize << m },
            cap: budget as usize,
        });
    }
    Ok(1u64 << m)
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Construction(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

#[derive(Default)]
struct Partial {
    counts: [u64; 4],
    degrees: BTreeMap<Vec<i64>, Vec<(u64, bool)>>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        for (k, mut v) in other.degrees {
            self.degrees.entry(k).or_default().append(&mut v);
        }
        self
    }
}

const COUNTED: [Predicate; 4] = [
    Predicate::Acyclic,
    Predicate::Collapsible,
    Predicate::ZeroOneAcyclic,
    Predicate::D2CycleFree,
];

/// Visits every complete tournament on `[1, n]` and counts each requested
/// class with the exact checkers. Realizable hits are a lower bound obtained
/// by sampling random rational configurations.
pub fn enumerate(n: usize, d: usize, opts: &CensusOptions) -> Result<CensusReport> {
    let total = check_budget(n, d, opts.budget)?;
    let sk = Skeleton::new(n, d);
    let wanted: Vec<bool> = COUNTED.iter().map(|p| opts.predicates.contains(p)).collect();
    let track_acyclic = wanted[0];
    let chunks = total.div_ceil(CHUNK);
    let partial = with_threads(opts.threads, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| -> Result<Partial> {
                let mut part = Partial::default();
                for index in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    let t = Tournament::from_index(n, d, index)?;
                    let mut acyclic = false;
                    for (slot, p) in COUNTED.iter().enumerate() {
                        if wanted[slot] && p.holds(&t, &sk)? {
                            part.counts[slot] += 1;
                            if slot == 0 {
                                acyclic = true;
                            }
                        }
                    }
                    if opts.degree_sequences {
                        part.degrees
                            .entry(degree_sequence_with(&t, &sk))
                            .or_default()
                            .push((index, acyclic));
                    }
                }
                Ok(part)
            })
            .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))
    })??;

    let pick = |slot: usize| wanted[slot].then_some(partial.counts[slot]);
    let (realizable_hits, realizable_samples) = if opts.predicates.contains(&Predicate::Realizable) {
        let hits = realizable_hits(n, d, opts.realizable_samples, opts.seed)?;
        (Some(hits.len() as u64), Some(opts.realizable_samples))
    } else {
        (None, None)
    };
    let degree_sequences = opts
        .degree_sequences
        .then(|| degree_stats(&partial.degrees, track_acyclic));
    let mut report = CensusReport {
        n,
        d,
        total,
        acyclic: pick(0),
        collapsible: pick(1),
        zero_one_acyclic: pick(2),
        d2_cycle_free: pick(3),
        realizable_hits,
        realizable_samples,
        degree_sequences,
        bounds: None,
    };
    if let Some(a) = report.acyclic {
        report.bounds = verify_bounds(n, d, a, opts.budget).ok();
    }
    Ok(report)
}

fn degree_stats(groups: &BTreeMap<Vec<i64>, Vec<(u64, bool)>>, track_acyclic: bool) -> DegreeStats {
    let mut examples = Vec::new();
    let mut collisions = 0u64;
    let mut distinct_acyclic = 0;
    let mut max_mult = 0;
    for members in groups.values() {
        let mut members = members.clone();
        members.sort_unstable();
        let acyclic = members.iter().filter(|m| m.1).count();
        if acyclic > 0 {
            distinct_acyclic += 1;
        }
        max_mult = max_mult.max(acyclic);
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if !(a.1 && b.1) {
                    collisions += 1;
                    if examples.len() < 8 {
                        examples.push((a.0, b.0));
                    }
                }
            }
        }
    }
    DegreeStats {
        distinct: groups.len(),
        distinct_acyclic: track_acyclic.then_some(distinct_acyclic),
        max_acyclic_multiplicity: track_acyclic.then_some(max_mult),
        cyclic_collision_examples: examples,
        cyclic_collisions: collisions,
    }
}

/// Result of grouping all tournaments by degree sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCensus {
    pub n: usize,
    pub d: usize,
    pub distinct: usize,
    /// No two distinct acyclic tournaments share a sequence.
    pub acyclic_injective: bool,
    /// Sequences shared by two acyclic tournaments (should be empty).
    pub acyclic_collisions: Vec<(u64, u64)>,
    /// Sequences shared by distinct tournaments, at least one cyclic.
    pub cyclic_collisions: u64,
    pub cyclic_collision_examples: Vec<(u64, u64)>,
    /// `(n - d + 1)^C(n, d)`.
    pub sequence_bound: String,
}

pub fn degree_sequence_census(n: usize, d: usize, budget: u64, threads: Option<usize>) -> Result<DegreeCensus> {
    let opts = CensusOptions {
        predicates: vec![Predicate::Acyclic],
        threads,
        budget,
        degree_sequences: true,
        ..CensusOptions::default()
    };
    let total = check_budget(n, d, budget)?;
    let sk = Skeleton::new(n, d);
    let groups = with_threads(opts.threads, || {
        (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| -> Result<BTreeMap<Vec<i64>, Vec<(u64, bool)>>> {
                let mut map: BTreeMap<Vec<i64>, Vec<(u64, bool)>> = BTreeMap::new();
                for index in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    let t = Tournament::from_index(n, d, index)?;
                    let acyclic = is_acyclic_with(&t, &sk).is_acyclic();
                    map.entry(degree_sequence_with(&t, &sk)).or_default().push((index, acyclic));
                }
                Ok(map)
            })
            .try_reduce(BTreeMap::new, |mut a, b| {
                for (k, mut v) in b {
                    a.entry(k).or_default().append(&mut v);
                }
                Ok(a)
            })
    })??;
    let stats = degree_stats(&groups, true);
    let mut acyclic_collisions = Vec::new();
    for members in groups.values() {
        let acyclic: BTreeSet<u64> = members.iter().filter(|m| m.1).map(|m| m.0).collect();
        let acyclic: Vec<u64> = acyclic.into_iter().collect();
        for (i, &a) in acyclic.iter().enumerate() {
            for &b in &acyclic[i + 1..] {
                acyclic_collisions.push((a, b));
            }
        }
    }
    let bound = BigUint::from(n - d + 1).pow(binomial(n, d) as u32);
    Ok(DegreeCensus {
        n,
        d,
        distinct: stats.distinct,
        acyclic_injective: acyclic_collisions.is_empty(),
        acyclic_collisions,
        cyclic_collisions: stats.cyclic_collisions,
        cyclic_collision_examples: stats.cyclic_collision_examples,
        sequence_bound: bound.to_string(),
    })
}

/// Distinct tournament indices produced by `orient_from_points` on `samples`
/// random rational configurations from one ChaCha8 stream.
pub fn realizable_hits(n: usize, d: usize, samples: usize, seed: u64) -> Result<BTreeSet<u64>> {
    if d == 0 || n < d + 1 {
        return Err(Error::InvalidTournament(format!(
            "no point configurations for n = {n}, d = {d}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = BTreeSet::new();
    for _ in 0..samples {
        let cfg = PointConfiguration::random(n, d, &mut rng);
        hits.insert(tournament_index(&orient_from_points(&cfg)?)?);
    }
    Ok(hits)
}

/// All permutations of `[1, n]` in lexicographic order, as image vectors.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Smallest sign array in the orbit of `t`. Sign arrays compare element-wise
/// with `-1 < 0 < 1`, which is also the order of their compact JSON text.
pub fn canonical_form(t: &Tournament, perms: &[Vec<usize>], convention: Convention) -> Result<Vec<i8>> {
    let mut best: Option<Vec<i8>> = None;
    for pi in perms {
        let u = t.relabel(pi)?;
        let mut cands = vec![u.signs().to_vec()];
        if convention == Convention::RelabelOrGlobalReversal {
            cands.push(u.reversed().signs().to_vec());
        }
        for c in cands {
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    Ok(best.unwrap_or_else(|| t.signs().to_vec()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub n: usize,
    pub d: usize,
    pub predicate: String,
    pub convention: Convention,
    /// Tournaments satisfying the predicate.
    pub members: u64,
    pub orbits: usize,
    /// Canonical representatives in increasing order.
    pub representatives: Vec<Tournament>,
    pub orbit_sizes: Vec<u64>,
}

impl OrbitCensus {
    /// Index of the orbit containing `t`, if any.
    pub fn orbit_of(&self, t: &Tournament) -> Result<Option<usize>> {
        let perms = permutations(self.n);
        let c = canonical_form(t, &perms, self.convention)?;
        Ok(self.representatives.iter().position(|r| r.signs() == c.as_slice()))
    }
}

/// Counts orbits of the tournaments satisfying `predicate` under the relabel
/// action, optionally extended by global sign reversal.
pub fn orbit_census(
    n: usize,
    d: usize,
    predicate: Predicate,
    convention: Convention,
    budget: u64,
    threads: Option<usize>,
) -> Result<OrbitCensus> {
    let total = check_budget(n, d, budget)?;
    let sk = Skeleton::new(n, d);
    let perms = permutations(n);
    let canon = with_threads(threads, || {
        (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| -> Result<BTreeMap<Vec<i8>, u64>> {
                let mut map = BTreeMap::new();
                for index in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    let t = Tournament::from_index(n, d, index)?;
                    if predicate.holds(&t, &sk)? {
                        *map.entry(canonical_form(&t, &perms, convention)?).or_insert(0) += 1;
                    }
                }
                Ok(map)
            })
            .try_reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                Ok(a)
            })
    })??;
    let members = canon.values().sum();
    let orbit_sizes = canon.values().copied().collect();
    let representatives = canon
        .into_keys()
        .map(|s| Tournament::new(n, d, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitCensus {
        n,
        d,
        predicate: predicate.name().to_string(),
        convention,
        members,
        orbits: representatives.len(),
        representatives,
        orbit_sizes,
    })
}

/// Builds the tournament whose link at each `i` in `1..=n-d`, restricted to
/// the vertices above `i`, is `links[i - 1]` (a (d-1)-tournament on `n - i`
/// vertices). Faces with minimum `i` get `eps_link(tau) * (-1)^d`. Every link
/// must be acyclic, and then so is the result.
pub fn assemble_from_links(n: usize, d: usize, links: &[Tournament]) -> Result<Tournament> {
    if d == 0 || n < d + 1 {
        return Err(Error::InvalidTournament(format!(
            "link assembly needs 1 <= d < n, got n = {n}, d = {d}"
        )));
    }
    if links.len() != n - d {
        return Err(Error::InvalidTournament(format!(
            "expected {} links, got {}",
            n - d,
            links.len()
        )));
    }
    for (k, link) in links.iter().enumerate() {
        let i = k + 1;
        if link.n() != n - i || link.d() != d - 1 || !link.is_complete() {
            return Err(Error::InvalidTournament(format!(
                "link {i} must be a complete {}-tournament on {} vertices",
                d - 1,
                n - i
            )));
        }
        if !is_acyclic(link).is_acyclic() {
            return Err(Error::CyclicLink { index: i });
        }
    }
    let flip: i8 = if d % 2 == 0 { 1 } else { -1 };
    let mut tau = Vec::with_capacity(d);
    let signs = subsets(n, d + 1)
        .map(|sigma| {
            let i = sigma[0];
            tau.clear();
            tau.extend(sigma[1..].iter().map(|&v| v - i));
            links[i - 1].sign_at(rank_sorted(&tau, n - i)) * flip
        })
        .collect();
    Tournament::new(n, d, signs)
}

/// Restrictions of the links of `t` to the vertices above each `i`.
pub fn links_above(t: &Tournament) -> Result<Vec<Tournament>> {
    let (n, d) = (t.n(), t.d());
    (1..=n - d)
        .map(|i| {
            let (lk, _) = t.link(i)?;
            // link relabels V \ {i}; vertices above i become i..=n-1
            let above: Vec<usize> = (i..n).collect();
            Ok(lk.restrict(&above)?.0)
        })
        .collect()
}

/// Transitive tournament ranking the vertices in the order `order`
/// (first = beats everyone): `eps_{u<v} = +1` iff `u` comes before `v`.
pub fn transitive_from_order(order: &[usize]) -> Result<Tournament> {
    let n = order.len();
    let mut pos = vec![0; n + 1];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let signs = subsets(n, 2)
        .map(|e| if pos[e[0]] < pos[e[1]] { 1 } else { -1 })
        .collect();
    Tournament::new(n, 1, signs)
}

/// A random member of the link-assembly family, deterministic per seed.
pub fn sample_acyclic(n: usize, d: usize, seed: u64) -> Result<Tournament> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_acyclic_with(n, d, &mut rng)
}

/// At `d = 1` a uniform permutation; at `d = 0` a uniform constant sign;
/// otherwise links sampled recursively and assembled.
pub fn sample_acyclic_with(n: usize, d: usize, rng: &mut impl RngCore) -> Result<Tournament> {
    match d {
        0 => {
            let s = if rng.next_u32() & 1 == 1 { 1 } else { -1 };
            Tournament::new(n, 0, vec![s; n])
        }
        1 => {
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(rng);
            transitive_from_order(&order)
        }
        _ => {
            if n < d + 1 {
                return Err(Error::InvalidTournament(format!(
                    "need n >= d + 1, got n = {n}, d = {d}"
                )));
            }
            let links = (1..=n - d)
                .map(|i| sample_acyclic_with(n - i, d - 1, rng))
                .collect::<Result<Vec<_>>>()?;
            assemble_from_links(n, d, &links)
        }
    }
}

/// Exact `a_d(k)` where it is known in closed form: `k <= d` (only the empty
/// tournament), `d = 0` (constant signs) and `d = 1` (`k!`).
pub fn known_acyclic_count(k: usize, d: usize) -> Option<BigUint> {
    if k <= d {
        return Some(BigUint::one());
    }
    match d {
        0 => Some(BigUint::from(2u32)),
        1 => Some((1..=k).map(BigUint::from).product()),
        _ => None,
    }
}

/// `a_d(k)` from the closed forms, else by enumeration within `budget`.
pub fn acyclic_count(k: usize, d: usize, budget: u64) -> Result<BigUint> {
    if let Some(v) = known_acyclic_count(k, d) {
        return Ok(v);
    }
    let opts = CensusOptions {
        predicates: vec![Predicate::Acyclic],
        budget,
        degree_sequences: false,
        ..CensusOptions::default()
    };
    let report = enumerate(k, d, &opts).map_err(|e| match e {
        Error::TooLarge { .. } => Error::Missing(format!("a_{d}({k}) is not computable within budget")),
        e => e,
    })?;
    Ok(BigUint::from(report.acyclic.expect("requested")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundVerdicts {
    pub count: u64,
    /// `prod_{k=d-1}^{n-1} a_{d-1}(k)`.
    pub product_lower: String,
    pub product_ok: bool,
    /// `sum_{k=0}^{C(n,d)} C(C(n,d+1), k)`.
    pub chamber_upper: String,
    pub chamber_ok: bool,
    /// `n^C(n,d)`.
    pub power_upper: String,
    pub power_ok: bool,
}

impl BoundVerdicts {
    pub fn all_hold(&self) -> bool {
        self.product_ok && self.chamber_ok && self.power_ok
    }
}

pub fn verify_bounds(n: usize, d: usize, count: u64, budget: u64) -> Result<BoundVerdicts> {
    if d == 0 {
        return Err(Error::Missing("bounds need d >= 1".into()));
    }
    let mut product = BigUint::one();
    for k in d - 1..n {
        product *= acyclic_count(k, d - 1, budget)?;
    }
    let m = binomial(n, d + 1);
    let chamber: BigUint = (0..=binomial(n, d).min(m))
        .map(|k| BigUint::from(binomial(m, k)))
        .sum();
    let power = BigUint::from(n).pow(binomial(n, d) as u32);
    let c = BigUint::from(count);
    Ok(BoundVerdicts {
        count,
        product_ok: c >= product,
        product_lower: product.to_string(),
        chamber_ok: c <= chamber,
        chamber_upper: chamber.to_string(),
        power_ok: c <= power,
        power_upper: power.to_string(),
    })
}
