//! Large acyclic subtournaments: the greedy halving extractor, an exhaustive
//! maximum for small `n`, and the (d+2)-cycle coloring with its clique scan.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::is_acyclic;
use crate::error::{Error, Result};
use crate::face::{binomial, rank_sorted, subsets, Face};
use crate::tournament::Tournament;

/// Default largest `n` accepted by [`max_acyclic_subtournament`].
pub const DEFAULT_MAX_ACYCLIC_CAP: usize = 12;

/// Order in which the extractor visits (d-1)-faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanOrder {
    /// Smallest elements compared first. Every later face has a minimum no
    /// larger than the current one, so vertices of an examined face are never
    /// eliminated afterwards.
    #[default]
    DecreasingLex,
    /// Largest elements compared first.
    DecreasingColex,
}

impl ScanOrder {
    /// All d-subsets of `[1, n]` in this order.
    pub fn faces(self, n: usize, d: usize) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = subsets(n, d).collect();
        match self {
            ScanOrder::DecreasingColex => {
                all.sort_by(|a, b| b.iter().rev().cmp(a.iter().rev()));
            }
            ScanOrder::DecreasingLex => all.reverse(),
        }
        all
    }
}

/// One processed (d-1)-face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionStep {
    pub face: Face,
    /// Surviving vertices below `min(face)` whose coface induces +1.
    pub plus: Vec<usize>,
    /// Those inducing -1.
    pub minus: Vec<usize>,
    pub eliminated: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionTrace {
    pub n: usize,
    pub d: usize,
    pub steps: Vec<ExtractionStep>,
    pub survivors: Vec<usize>,
}

impl ExtractionTrace {
    /// Reapplies the recorded eliminations to `[1, n]`.
    pub fn replay(&self) -> Vec<usize> {
        let mut alive = vec![true; self.n + 1];
        for step in &self.steps {
            for &v in &step.eliminated {
                alive[v] = false;
            }
        }
        (1..=self.n).filter(|&v| alive[v]).collect()
    }

    /// One JSON record per processed face, then a closing survivors record.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step).expect("step serializes"));
            out.push('\n');
        }
        out.push_str(
            &serde_json::json!({ "survivors": self.survivors, "size": self.survivors.len() })
                .to_string(),
        );
        out.push('\n');
        out
    }

    /// `n <= |K| * 2^C(|K|, d)`, saturating for large exponents.
    pub fn satisfies_size_bound(&self) -> bool {
        size_bound_holds(self.n, self.survivors.len(), self.d)
    }
}

pub fn size_bound_holds(n: usize, k: usize, d: usize) -> bool {
    let e = binomial(k, d);
    if e >= 64 {
        return true;
    }
    (k as u128) << e >= n as u128
}

/// Greedy halving in decreasing lexicographic order.
pub fn extract_acyclic_sub(t: &Tournament) -> Result<(Vec<usize>, ExtractionTrace)> {
    extract_acyclic_sub_in(t, ScanOrder::default())
}

/// Visits every (d-1)-face whose vertices all survive. The surviving vertices
/// below its minimum are split by the orientation their coface induces on it
/// and the smaller part is eliminated; on a tie the part inducing -1 goes.
pub fn extract_acyclic_sub_in(t: &Tournament, order: ScanOrder) -> Result<(Vec<usize>, ExtractionTrace)> {
    if !t.is_complete() {
        return Err(Error::Incomplete);
    }
    let (n, d) = (t.n(), t.d());
    // x < min(tau) is removed at position 0, coefficient (-1)^d
    let flip: i8 = if d % 2 == 0 { 1 } else { -1 };
    let mut alive = vec![true; n + 1];
    let mut steps = Vec::new();
    let mut sigma = Vec::with_capacity(d + 1);
    for tau in order.faces(n, d) {
        if tau.iter().any(|&v| !alive[v]) {
            continue;
        }
        let lo = tau.first().copied().unwrap_or(n + 1);
        let (mut plus, mut minus) = (Vec::new(), Vec::new());
        for x in (1..lo).filter(|&x| alive[x]) {
            sigma.clear();
            sigma.push(x);
            sigma.extend_from_slice(&tau);
            match t.sign_at(rank_sorted(&sigma, n)) * flip {
                1 => plus.push(x),
                _ => minus.push(x),
            }
        }
        let eliminated = if plus.len() < minus.len() {
            plus.clone()
        } else {
            minus.clone()
        };
        for &v in &eliminated {
            alive[v] = false;
        }
        steps.push(ExtractionStep {
            face: Face::from_sorted(&tau),
            plus,
            minus,
            eliminated,
        });
    }
    let survivors: Vec<usize> = (1..=n).filter(|&v| alive[v]).collect();
    let trace = ExtractionTrace {
        n,
        d,
        steps,
        survivors: survivors.clone(),
    };
    Ok((survivors, trace))
}

/// Largest vertex set whose restriction is acyclic; among sets of that size
/// the lexicographically first.
pub fn max_acyclic_subtournament(t: &Tournament, cap: usize) -> Result<Vec<usize>> {
    let (n, d) = (t.n(), t.d());
    if n > cap {
        return Err(Error::TooLarge {
            what: "vertices",
            size: n,
            cap,
        });
    }
    for size in (d + 2..=n).rev() {
        let candidates: Vec<Vec<usize>> = subsets(n, size).collect();
        let hit = candidates.par_iter().find_first(|u| {
            let (sub, _) = t.restrict(u).expect("subset of [n]");
            is_acyclic(&sub).is_acyclic()
        });
        if let Some(u) = hit {
            return Ok(u.clone());
        }
    }
    Ok((1..=n.min(d + 1)).collect())
}

/// Blue/red coloring of the (d+2)-subsets, blue meaning a (d+2)-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyColoring {
    n: usize,
    d: usize,
    /// Indexed by lexicographic rank of the (d+2)-subset.
    blue: Vec<bool>,
}

impl RamseyColoring {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_blue(&self, u: &[usize]) -> bool {
        self.blue[rank_sorted(u, self.n)]
    }

    pub fn blue_count(&self) -> usize {
        self.blue.iter().filter(|&&b| b).count()
    }

    pub fn len(&self) -> usize {
        self.blue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blue.is_empty()
    }

    pub fn blue_sets(&self) -> Vec<Face> {
        subsets(self.n, self.d + 2)
            .filter(|u| self.is_blue(u))
            .map(|u| Face::from_sorted(&u))
            .collect()
    }
}

pub fn ramsey_coloring(t: &Tournament) -> Result<RamseyColoring> {
    if !t.is_complete() {
        return Err(Error::Incomplete);
    }
    let (n, d) = (t.n(), t.d());
    let blue = if n < d + 2 {
        Vec::new()
    } else {
        subsets(n, d + 2)
            .map(|u| crate::cycles::is_d_plus_2_cycle(t, &u))
            .collect::<Result<_>>()?
    };
    Ok(RamseyColoring { n, d, blue })
}

/// First `m`-subset (lexicographic) all of whose (d+2)-subsets are blue.
pub fn has_blue_clique(coloring: &RamseyColoring, m: usize) -> Option<Vec<usize>> {
    let k = coloring.d + 2;
    if m < k || m > coloring.n {
        return None;
    }
    let candidates: Vec<Vec<usize>> = subsets(coloring.n, m).collect();
    candidates
        .par_iter()
        .find_first(|u| {
            subsets(m, k).all(|pick| {
                let sub: Vec<usize> = pick.iter().map(|&i| u[i - 1]).collect();
                coloring.is_blue(&sub)
            })
        })
        .cloned()
}

/// Summary of the coloring of one seeded random tournament.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyDemo {
    pub n: usize,
    pub d: usize,
    pub seed: u64,
    pub subsets: usize,
    pub blue: usize,
    /// Largest `m` with an all-blue `m`-set (at least d+1, vacuously).
    pub largest_blue_clique: usize,
    pub blue_clique_witness: Option<Vec<usize>>,
}

pub fn ramsey_demo(n: usize, d: usize, seed: u64) -> Result<RamseyDemo> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Tournament::random_with(n, d, &mut rng)?;
    let coloring = ramsey_coloring(&t)?;
    let mut largest = d + 1;
    let mut witness = None;
    for m in d + 2..=n {
        match has_blue_clique(&coloring, m) {
            Some(u) => {
                largest = m;
                witness = Some(u);
            }
            None => break,
        }
    }
    Ok(RamseyDemo {
        n,
        d,
        seed,
        subsets: coloring.len(),
        blue: coloring.blue_count(),
        largest_blue_clique: largest,
        blue_clique_witness: witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::{greedy_collapse, Strategy};
    use crate::fixtures;

    #[test]
    fn colex_order_compares_largest_first() {
        let faces = ScanOrder::DecreasingColex.faces(4, 2);
        assert_eq!(
            faces,
            vec![vec![3, 4], vec![2, 4], vec![1, 4], vec![2, 3], vec![1, 3], vec![1, 2]]
        );
        let lex = ScanOrder::DecreasingLex.faces(4, 2);
        assert_eq!(lex[0], vec![3, 4]);
        assert_eq!(lex[5], vec![1, 2]);
    }

    #[test]
    fn single_face_keeps_everything() {
        let t = Tournament::new(3, 2, vec![-1]).unwrap();
        let (k, trace) = extract_acyclic_sub(&t).unwrap();
        assert_eq!(k, vec![1, 2, 3]);
        assert_eq!(trace.replay(), k);
    }

    #[test]
    fn extracted_part_collapses() {
        for seed in 0..20 {
            let t = Tournament::random(24, 2, seed).unwrap();
            let (k, trace) = extract_acyclic_sub(&t).unwrap();
            assert_eq!(trace.replay(), k);
            assert!(trace.satisfies_size_bound());
            let (sub, _) = t.restrict(&k).unwrap();
            assert!(greedy_collapse(&sub, Strategy::ReverseLexicographic).success);
        }
    }

    #[test]
    fn max_acyclic_on_examples() {
        let k = max_acyclic_subtournament(&fixtures::example_2(), 12).unwrap();
        assert_eq!(k, vec![1, 2, 3, 4]);
        let k = max_acyclic_subtournament(&fixtures::example_1(), 12).unwrap();
        assert_eq!(k, vec![1, 2, 3]);
        let big = Tournament::random(13, 2, 0).unwrap();
        assert!(matches!(
            max_acyclic_subtournament(&big, 12),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn coloring_of_example_1_is_one_blue_set() {
        let c = ramsey_coloring(&fixtures::example_1()).unwrap();
        assert_eq!(c.blue_count(), 1);
        assert!(has_blue_clique(&c, 4).is_some());
        assert!(has_blue_clique(&c, 5).is_none());
    }

    #[test]
    fn octahedron_has_no_blue_sets() {
        let c = ramsey_coloring(&fixtures::octahedron()).unwrap();
        assert_eq!(c.blue_count(), 0);
    }

    #[test]
    fn demo_is_deterministic() {
        let a = ramsey_demo(8, 2, 3).unwrap();
        assert_eq!(a, ramsey_demo(8, 2, 3).unwrap());
        assert!(a.largest_blue_clique <= 4);
    }
}
