//! Point configurations, the arrangement whose chambers correspond to
//! acyclic tournaments, and conversions in both directions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::collapse::free_faces;
use crate::cycles::{is_acyclic, Acyclicity, CycleCertificate, FaceMap};
use crate::error::{Error, Result};
use crate::face::{binomial, rank_sorted, sign_of_power, subsets, Face};
use crate::linear::{format_rational, parse_rational, Rational};
use crate::tournament::Tournament;

/// `n` points in `R^d` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfiguration {
    pub d: usize,
    pub points: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsFile {
    d: usize,
    points: Vec<Vec<String>>,
}

impl PointConfiguration {
    pub fn new(d: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "point with {} coordinates in dimension {d}",
                p.len()
            )));
        }
        if points.len() < d + 1 {
            return Err(Error::InvalidTournament(format!(
                "need at least {} points in dimension {d}",
                d + 1
            )));
        }
        Ok(PointConfiguration { d, points })
    }

    pub fn from_integers(d: usize, points: &[&[i64]]) -> Result<Self> {
        PointConfiguration::new(
            d,
            points
                .iter()
                .map(|p| p.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `{"d":2,"points":[["0","0"],["1/2","3"],..]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PointsFile {
            d: self.d,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(format_rational).collect())
                .collect(),
        })
        .expect("points serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PointsFile = serde_json::from_str(text)?;
        let points = raw
            .points
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(raw.d, points)
    }

    /// Random configuration with coordinates `a / b`, `|a| <= 1000`,
    /// `1 <= b <= 16`, redrawn until it is in general position.
    pub fn random(n: usize, d: usize, rng: &mut impl Rng) -> Self {
        loop {
            let points = (0..n)
                .map(|_| {
                    (0..d)
                        .map(|_| {
                            let a: i64 = rng.gen_range(-1000..=1000);
                            let b: i64 = rng.gen_range(1..=16);
                            Rational::new(a.into(), b.into())
                        })
                        .collect()
                })
                .collect();
            let cfg = PointConfiguration { d, points };
            if orient_from_points(&cfg).is_ok() {
                return cfg;
            }
        }
    }
}

/// Exact determinant by Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Order type of a configuration: `eps_sigma = sign det[p_i1 - p_i0, ..,
/// p_id - p_i0]` for `sigma = {i0 < .. < id}`.
pub fn orient_from_points(p: &PointConfiguration) -> Result<Tournament> {
    let n = p.n();
    let d = p.d;
    let mut signs = Vec::with_capacity(binomial(n, d + 1));
    for sigma in subsets(n, d + 1) {
        let base = &p.points[sigma[0] - 1];
        let m: Vec<Vec<Rational>> = sigma[1..]
            .iter()
            .map(|&i| {
                p.points[i - 1]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let det = determinant(m);
        if det.is_zero() {
            return Err(Error::Degenerate(Face::from_sorted(&sigma)));
        }
        signs.push(if det.is_positive() { 1 } else { -1 });
    }
    Tournament::new(n, d, signs)
}

/// A point of `R^C(n,d)` with coordinates indexed by d-subsets in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct ChamberPoint {
    pub n: usize,
    pub d: usize,
    pub x: Vec<Rational>,
}

impl ChamberPoint {
    pub fn new(n: usize, d: usize, x: Vec<Rational>) -> Result<Self> {
        if x.len() != binomial(n, d) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates for n = {n}, d = {d}, got {}",
                binomial(n, d),
                x.len()
            )));
        }
        if n < d + 1 {
            return Err(Error::InvalidTournament(format!(
                "need n >= d + 1, got n = {n}, d = {d}"
            )));
        }
        Ok(ChamberPoint { n, d, x })
    }

    pub fn from_integers(n: usize, d: usize, x: &[i64]) -> Result<Self> {
        ChamberPoint::new(n, d, x.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn coordinate(&self, face: &[usize]) -> &Rational {
        &self.x[rank_sorted(face, self.n)]
    }

    pub fn scaled(&self, factor: &Rational) -> ChamberPoint {
        ChamberPoint {
            n: self.n,
            d: self.d,
            x: self.x.iter().map(|v| v * factor).collect(),
        }
    }

    /// `{"x":{"1,2":"42",..}}`
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out {
            x: FaceMap,
        }
        let entries = subsets(self.n, self.d)
            .zip(&self.x)
            .map(|(f, v)| (Face::from_sorted(&f).key(), format_rational(v)))
            .collect();
        serde_json::to_string(&Out { x: FaceMap(entries) }).expect("chamber point serializes")
    }

    /// Parses the `{"x":{..}}` form; `n` is the largest label and `d` the key
    /// size, and every d-subset of `[1, n]` must be present.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct In {
            x: BTreeMap<String, String>,
        }
        let raw: In = serde_json::from_str(text)?;
        let mut entries = Vec::with_capacity(raw.x.len());
        for (k, v) in &raw.x {
            entries.push((Face::from_key(k)?, parse_rational(v)?));
        }
        let d = entries
            .first()
            .map(|(f, _)| f.len())
            .ok_or_else(|| Error::Parse("empty chamber point".into()))?;
        if entries.iter().any(|(f, _)| f.len() != d) {
            return Err(Error::Parse("chamber point keys of mixed size".into()));
        }
        let n = entries.iter().filter_map(|(f, _)| f.max()).max().unwrap_or(0);
        if entries.len() != binomial(n, d) {
            return Err(Error::Parse(format!(
                "expected {} coordinates for n = {n}, d = {d}, got {}",
                binomial(n, d),
                entries.len()
            )));
        }
        let mut x = vec![Rational::zero(); entries.len()];
        for (f, v) in entries {
            x[f.rank(n)?] = v;
        }
        ChamberPoint::new(n, d, x)
    }
}

/// `sum_k (-1)^(d-k) x_{sigma \ i_k}`.
pub fn hyperplane_eval(sigma: &Face, x: &ChamberPoint) -> Result<Rational> {
    if sigma.len() != x.d + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{sigma:?} is not a {}-face",
            x.d
        )));
    }
    if sigma.max().is_some_and(|v| v > x.n) {
        return Err(Error::InvalidFace(format!("{sigma:?} outside [1, {}]", x.n)));
    }
    Ok(alternating_sum(sigma.vertices(), x) * Rational::from_integer(sign_of_power(x.d).into()))
}

/// `sum_k (-1)^k x_{sigma \ i_k}`.
fn alternating_sum(sigma: &[usize], x: &ChamberPoint) -> Rational {
    let mut tau = Vec::with_capacity(sigma.len() - 1);
    let mut acc = Rational::zero();
    for k in 0..sigma.len() {
        tau.clear();
        tau.extend(sigma.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v));
        if k % 2 == 0 {
            acc += x.coordinate(&tau);
        } else {
            acc -= x.coordinate(&tau);
        }
    }
    acc
}

/// `eps_sigma = sgn(sum_k (-1)^k x_{sigma \ i_k})`.
pub fn chamber_to_tournament(x: &ChamberPoint) -> Result<Tournament> {
    let mut signs = Vec::with_capacity(binomial(x.n, x.d + 1));
    for sigma in subsets(x.n, x.d + 1) {
        let v = alternating_sum(&sigma, x);
        if v.is_zero() {
            return Err(Error::OnHyperplane(Face::from_sorted(&sigma)));
        }
        signs.push(if v.is_positive() { 1 } else { -1 });
    }
    Tournament::new(x.n, x.d, signs)
}

#[derive(Debug, Clone, PartialEq)]
pub enum ChamberOrCycle {
    Chamber(ChamberPoint),
    Cycle(CycleCertificate),
}

/// A point of the chamber of an acyclic complete tournament, or the cycle
/// that rules one out.
///
/// The LP certificate `y` satisfies `y . column_sigma >= 1`, and column
/// `sigma` is `(-1)^d eps_sigma` times the coefficient vector of the
/// alternating sum in [`chamber_to_tournament`], so `x = (-1)^d y`.
pub fn tournament_to_chamber_point(t: &Tournament) -> Result<ChamberOrCycle> {
    if !t.is_complete() {
        return Err(Error::Incomplete);
    }
    match is_acyclic(t) {
        Acyclicity::Cyclic(c) => Ok(ChamberOrCycle::Cycle(c)),
        Acyclicity::Acyclic(cert) => {
            let s = Rational::from_integer(BigInt::from(sign_of_power(t.d())));
            let x = ChamberPoint::new(t.n(), t.d(), cert.y.iter().map(|y| y * &s).collect())?;
            debug_assert_eq!(chamber_to_tournament(&x).ok().as_ref(), Some(t));
            Ok(ChamberOrCycle::Chamber(x))
        }
    }
}

/// Connected components of the graph formed by the free edges of a
/// 2-tournament, over the vertices they touch. Components are sorted.
pub fn free_edge_components(t: &Tournament) -> Result<Vec<Vec<usize>>> {
    if t.d() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "free-edge graph needs d = 2, got d = {}",
            t.d()
        )));
    }
    let edges = free_faces(t);
    let mut parent: Vec<usize> = (0..=t.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    let mut touched = vec![false; t.n() + 1];
    for e in &edges {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=t.n() {
        if touched[v] {
            let r = find(&mut parent, v);
            comps.entry(r).or_default().push(v);
        }
    }
    Ok(comps.into_values().collect())
}
