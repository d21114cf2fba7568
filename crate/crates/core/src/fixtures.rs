//! Worked examples and counterexamples, each built programmatically.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::collapse::{free_faces, is_collapsible_exact, DEFAULT_COLLAPSE_CAP};
use crate::cycles::{count_d_plus_2_cycles, has_zero_one_cycle, is_acyclic};

use crate::error::{Error, Result};
use crate::face::{subsets, Face};
use crate::geometry::{
    chamber_to_tournament, free_edge_components, orient_from_points, ChamberPoint, PointConfiguration,
};
use crate::incidence::Skeleton;
use crate::linear::{rat, ratio, solve_linear, LinearSolution, Rational};
use crate::tournament::Tournament;

pub const NAMES: [&str; 7] = [
    "example-1",
    "example-2",
    "octahedron",
    "rp2-plus-sigma",
    "chamber-9",
    "chamber-10",
    "cone-5",
];

pub fn by_name(name: &str) -> Result<Tournament> {
    match name {
        "example-1" => Ok(example_1()),
        "example-2" => Ok(example_2()),
        "octahedron" => Ok(octahedron()),
        "rp2-plus-sigma" => rp2_plus_sigma(),
        "chamber-9" => chamber_fixture_9(),
        "chamber-10" => chamber_fixture_10(),
        "cone-5" => Ok(cone_5()),
        _ => Err(Error::Missing(format!("no fixture named {name:?}"))),
    }
}

fn face(v: &[usize]) -> Face {
    Face::new(v.to_vec()).expect("fixture faces are valid")
}

/// The cyclic 2-tournament on four vertices with signs `(1, -1, 1, -1)`.
pub fn example_1() -> Tournament {
    Tournament::new(4, 2, vec![1, -1, 1, -1]).expect("valid")
}

/// The collapsible 2-tournament on four vertices with all signs `+1`.
pub fn example_2() -> Tournament {
    Tournament::new(4, 2, vec![1, 1, 1, 1]).expect("valid")
}

/// Label `i` sits at `e_i` and `i + 3` at `-e_i`.
pub fn octahedron_vertex(label: usize) -> [i64; 3] {
    let mut v = [0; 3];
    if label <= 3 {
        v[label - 1] = 1;
    } else {
        v[label - 4] = -1;
    }
    v
}

/// The eight octahedron facets (one vertex per axis).
pub fn octahedron_facets() -> Vec<Face> {
    subsets(6, 3)
        .filter(|s| {
            let mut axes: Vec<usize> = s.iter().map(|&v| (v - 1) % 3).collect();
            axes.sort_unstable();
            axes == [0, 1, 2]
        })
        .map(|s| Face::from_sorted(&s))
        .collect()
}

/// Octahedron 2-tournament on six vertices. Facets get the sign of
/// `det[v_a, v_b, v_c]` in ascending-label order, the outer-normal
/// orientation. Every other face contains exactly one antipodal pair
/// `{i, i + 3}` and is oriented to induce `-1` on it, i.e. the edge points
/// from `-e_i` to `e_i`.
pub fn octahedron() -> Tournament {
    let mut signs = Vec::new();
    for s in subsets(6, 3) {
        let axes: Vec<usize> = s.iter().map(|&v| (v - 1) % 3).collect();
        let pair = (0..3).find(|&i| s.contains(&(i + 1)) && s.contains(&(i + 4)));
        let sign = match pair {
            None => {
                let m: Vec<Vec<i64>> = s.iter().map(|&v| octahedron_vertex(v).to_vec()).collect();
                det3(&m).signum() as i8
            }
            Some(i) => {
                let tau = [i + 1, i + 4];
                let coef = crate::face::boundary_coefficient_sorted(&tau, &s);
                -coef
            }
        };
        debug_assert!(pair.is_some() || axes.iter().collect::<std::collections::BTreeSet<_>>().len() == 3);
        signs.push(sign);
    }
    Tournament::new(6, 2, signs).expect("valid")
}

fn det3(m: &[Vec<i64>]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// The ten triangles of the 6-vertex projective plane, read off as the union
/// of the faces in the two identities for `rho = {3,4,5}`.
pub const RP2_FACES: [[usize; 3]; 10] = [
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 6],
    [1, 4, 5],
    [2, 3, 4],
    [2, 3, 5],
    [2, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

pub const RP2_SIGMA: [usize; 3] = [1, 2, 3];
pub const RP2_RHO: [usize; 3] = [3, 4, 5];
/// `rho = sigma + 134 + 145 + 125 + 235` up to a global sign.
pub const RP2_IDENTITY_SHORT: [[usize; 3]; 4] = [[1, 3, 4], [1, 4, 5], [1, 2, 5], [2, 3, 5]];
/// `-rho = sigma + 234 + 246 + 456 + 356 + 126 + 136`.
pub const RP2_IDENTITY_LONG: [[usize; 3]; 6] =
    [[2, 3, 4], [2, 4, 6], [4, 5, 6], [3, 5, 6], [1, 2, 6], [1, 3, 6]];

/// Checks that the ten faces triangulate a closed surface in which every
/// vertex link is a 5-cycle.
pub fn check_rp2_triangulation() -> Result<()> {
    for e in subsets(6, 2) {
        let k = RP2_FACES.iter().filter(|f| f.contains(&e[0]) && f.contains(&e[1])).count();
        if k != 2 {
            return Err(Error::Construction(format!("edge {e:?} lies in {k} triangles")));
        }
    }
    for v in 1..=6 {
        // link edges of v; a 5-cycle has 5 vertices of degree 2 and is connected
        let link: Vec<Vec<usize>> = RP2_FACES
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&x| x != v).collect())
            .collect();
        if link.len() != 5 {
            return Err(Error::Construction(format!("vertex {v} has {} triangles", link.len())));
        }
        let mut seen = vec![v];
        let mut cur = link[0][0];
        let mut prev = v;
        for _ in 0..5 {
            seen.push(cur);
            let next = link
                .iter()
                .filter(|e| e.contains(&cur))
                .flat_map(|e| e.iter().copied())
                .find(|&x| x != cur && x != prev && (seen.len() == 6 || !seen.contains(&x)));
            match next {
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        if cur != link[0][0] || seen.len() != 6 {
            return Err(Error::Construction(format!("link of vertex {v} is not a 5-cycle")));
        }
    }
    Ok(())
}

/// The ten projective-plane triangles plus `sigma = {1,2,3}` with sign +1.
/// The ten signs are the unique solution of
/// `sum_F eps_F col_F + 2 col_sigma = 0`, solved exactly.
pub fn rp2_plus_sigma() -> Result<Tournament> {
    check_rp2_triangulation()?;
    let sk = Skeleton::new(6, 2);
    let ranks: Vec<usize> = RP2_FACES
        .iter()
        .map(|f| face(f).rank(6))
        .collect::<Result<_>>()?;
    let sigma = face(&RP2_SIGMA).rank(6)?;
    // rows = edges, columns = unknown signs on the positively oriented faces
    let mut a = vec![vec![Rational::zero(); ranks.len()]; sk.num_rows()];
    for (j, &c) in ranks.iter().enumerate() {
        for &(r, coef) in sk.col(c) {
            a[r][j] = rat(coef as i64);
        }
    }
    let mut b = vec![Rational::zero(); sk.num_rows()];
    for &(r, coef) in sk.col(sigma) {
        b[r] = rat(-2 * coef as i64);
    }
    let x = match solve_linear(&a, &b)? {
        LinearSolution::Solution { x, free } if free.is_empty() => x,
        LinearSolution::Solution { free, .. } => {
            return Err(Error::Construction(format!(
                "cancellation system is underdetermined ({} free signs)",
                free.len()
            )))
        }
        LinearSolution::Inconsistent { .. } => {
            return Err(Error::Construction("cancellation system is inconsistent".into()))
        }
    };
    let mut t = Tournament::empty(6, 2)?;
    for (j, &c) in ranks.iter().enumerate() {
        let s = if x[j] == Rational::one() {
            1
        } else if x[j] == -Rational::one() {
            -1
        } else {
            return Err(Error::Construction(format!(
                "solved sign {} for face {:?} is not +-1",
                x[j],
                t.face(c)
            )));
        };
        t = t.with_sign(&t.face(c), s)?;
    }
    t.with_sign(&face(&RP2_SIGMA), 1)
}

/// Coordinates of the 9-vertex chamber point, pairs in lexicographic order.
pub const CHAMBER_9: [i64; 36] = [
    42, 0, 3, 88, 91, 87, 66, 28, 64, 60, 87, 11, 39, 81, 37, 51, 0, 23, 77, 33, 23, 58, 11, 7,
    70, 64, 73, 57, 86, 52, 98, 49, 57, 100, 43, 60,
];

/// Coordinates of the 10-vertex chamber point, pairs in lexicographic order.
pub const CHAMBER_10: [i64; 45] = [
    76, 61, 70, 6, 95, 97, 45, 11, 26, 12, 33, 93, 5, 97, 92, 9, 48, 26, 58, 82, 4, 96, 14, 83,
    87, 92, 93, 92, 92, 18, 64, 11, 76, 4, 39, 82, 24, 94, 25, 36, 30, 40, 64, 21, 7,
];

pub fn chamber_point_9() -> ChamberPoint {
    ChamberPoint::from_integers(9, 2, &CHAMBER_9).expect("36 coordinates")
}

pub fn chamber_point_10() -> ChamberPoint {
    ChamberPoint::from_integers(10, 2, &CHAMBER_10).expect("45 coordinates")
}

/// Acyclic, not collapsible.
pub fn chamber_fixture_9() -> Result<Tournament> {
    chamber_to_tournament(&chamber_point_9())
}

/// Acyclic, no free faces.
pub fn chamber_fixture_10() -> Result<Tournament> {
    chamber_to_tournament(&chamber_point_10())
}

/// Triangle `p1 = (0,0)`, `p2 = (0,2)`, `p3 = (2,0)` with 4 and 5 both at
/// `(1/2, 1/2)`.
pub fn cone_points() -> [[Rational; 2]; 5] {
    let q = || [ratio(1, 2), ratio(1, 2)];
    [[rat(0), rat(0)], [rat(0), rat(2)], [rat(2), rat(0)], q(), q()]
}

/// Collapsible but not realizable 5-vertex 2-tournament. Faces with at most
/// one of {4, 5} take the determinant sign of [`cone_points`]; the faces
/// `{x, 4, 5}` get +1 so all three induce the same orientation on `{4, 5}`.
pub fn cone_5() -> Tournament {
    let pts = cone_points();
    let mut signs = Vec::new();
    for s in subsets(5, 3) {
        if s.contains(&4) && s.contains(&5) {
            signs.push(1);
            continue;
        }
        let p: Vec<Vec<Rational>> = s.iter().map(|&v| pts[v - 1].to_vec()).collect();
        let cfg = PointConfiguration::new(2, p).expect("three planar points");
        let t = orient_from_points(&cfg).expect("nondegenerate triangle");
        signs.push(t.sign_at(0));
    }
    Tournament::new(5, 2, signs).expect("valid")
}

/// A verdict a fixture is expected to produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "check", content = "expected", rename_all = "kebab-case")]
pub enum Check {
    Acyclic(bool),
    Collapsible(bool),
    ZeroOneAcyclic(bool),
    D2CycleCount(usize),
    FreeFaces(Vec<Face>),
    FreeFaceCount(usize),
    FreeEdgeComponents(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    #[serde(flatten)]
    pub check: Check,
    pub actual: serde_json::Value,
    pub pass: bool,
}

impl Check {
    pub fn evaluate(&self, t: &Tournament) -> Result<Outcome> {
        use serde_json::json;
        let (actual, pass) = match self {
            Check::Acyclic(want) => {
                let got = is_acyclic(t).is_acyclic();
                (json!(got), got == *want)
            }
            Check::Collapsible(want) => {
                let got = is_collapsible_exact(t, DEFAULT_COLLAPSE_CAP)?.is_some();
                (json!(got), got == *want)
            }
            Check::ZeroOneAcyclic(want) => {
                let got = has_zero_one_cycle(t)?.is_none();
                (json!(got), got == *want)
            }
            Check::D2CycleCount(want) => {
                let got = count_d_plus_2_cycles(t)?;
                (json!(got), got == *want)
            }
            Check::FreeFaces(want) => {
                let got = free_faces(t);
                (json!(got), got == *want)
            }
            Check::FreeFaceCount(want) => {
                let got = free_faces(t).len();
                (json!(got), got == *want)
            }
            Check::FreeEdgeComponents(want) => {
                let got = free_edge_components(t)?.len();
                (json!(got), got == *want)
            }
        };
        Ok(Outcome {
            check: self.clone(),
            actual,
            pass,
        })
    }
}

/// A named construction with the verdicts it must reproduce.
#[derive(Debug, Clone, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub tournament: Tournament,
    pub expected: Vec<Check>,
}

impl Fixture {
    pub fn evaluate(&self) -> Result<Vec<Outcome>> {
        self.expected.iter().map(|c| c.evaluate(&self.tournament)).collect()
    }
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let tournament = by_name(name)?;
    let faces = |v: &[[usize; 2]]| v.iter().map(|e| face(e)).collect::<Vec<_>>();
    let (name, summary, expected) = match name {
        "example-1" => (
            "example-1",
            "four faces whose columns sum to zero; no free faces",
            vec![
                Check::Acyclic(false),
                Check::Collapsible(false),
                Check::ZeroOneAcyclic(false),
                Check::D2CycleCount(1),
                Check::FreeFaceCount(0),
            ],
        ),
        "example-2" => (
            "example-2",
            "all signs +1 on four vertices; collapsible",
            vec![
                Check::Acyclic(true),
                Check::Collapsible(true),
                Check::ZeroOneAcyclic(true),
                Check::D2CycleCount(0),
            ],
        ),
        "octahedron" => (
            "octahedron",
            "facets oriented by outer normal, axis edges from -e_i to e_i; \
             the eight facets sum to zero but no four vertices form a cycle",
            vec![
                Check::Acyclic(false),
                Check::ZeroOneAcyclic(false),
                Check::D2CycleCount(0),
            ],
        ),
        "rp2-plus-sigma" => (
            "rp2-plus-sigma",
            "six-vertex projective plane plus the face 123; ten faces plus \
             twice 123 sum to zero, with no 0/1-cycle",
            vec![Check::Acyclic(false), Check::ZeroOneAcyclic(true)],
        ),
        "chamber-9" => (
            "chamber-9",
            "chamber point on 9 vertices; acyclic but not collapsible",
            vec![Check::Acyclic(true), Check::Collapsible(false)],
        ),
        "chamber-10" => (
            "chamber-10",
            "chamber point on 10 vertices; acyclic with no free faces",
            vec![Check::Acyclic(true), Check::FreeFaceCount(0)],
        ),
        "cone-5" => (
            "cone-5",
            "triangle with 4 and 5 at one interior point, faces x45 all +1; \
             collapsible, but the free edges form a disconnected graph",
            vec![
                Check::FreeFaces(faces(&[[1, 2], [1, 3], [2, 3], [4, 5]])),
                Check::Collapsible(true),
                Check::FreeEdgeComponents(2),
            ],
        ),
        _ => unreachable!("by_name accepted {name:?}"),
    };
    Ok(Fixture {
        name,
        summary,
        tournament,
        expected,
    })
}

pub fn gallery() -> Result<Vec<Fixture>> {
    NAMES.iter().map(|n| fixture(n)).collect()
}
