//! d-tournaments: an orientation in {-1, 0, +1} for every (d+1)-subset of
//! `[1, n]`, stored by lexicographic face rank.

use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{binomial, boundary_coefficient_sorted, rank_sorted, subsets, unrank_into, Face};

/// A possibly partial d-tournament. Sign 0 marks an absent face.
///
/// `d = 0` is allowed so that links of 1-tournaments are representable: a
/// 0-tournament assigns a sign to every vertex.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tournament {
    n: usize,
    d: usize,
    signs: Vec<i8>,
}

/// Maps the labels of a derived tournament back to the original ones:
/// entry `i` is the original label of new vertex `i + 1`.
pub type LabelMap = Vec<usize>;

impl Tournament {
    pub fn new(n: usize, d: usize, signs: Vec<i8>) -> Result<Self> {
        if n < d + 1 {
            return Err(Error::InvalidTournament(format!(
                "need n >= d + 1, got n = {n}, d = {d}"
            )));
        }
        let expected = binomial(n, d + 1);
        if signs.len() != expected {
            return Err(Error::InvalidTournament(format!(
                "expected {expected} signs for n = {n}, d = {d}, got {}",
                signs.len()
            )));
        }
        if let Some(s) = signs.iter().find(|s| !(-1..=1).contains(*s)) {
            return Err(Error::InvalidTournament(format!(
                "sign {s} outside {{-1, 0, 1}}"
            )));
        }
        Ok(Tournament { n, d, signs })
    }

    /// The partial tournament with every face absent.
    pub fn empty(n: usize, d: usize) -> Result<Self> {
        Tournament::new(n, d, vec![0; binomial(n, d + 1)])
    }

    /// Complete tournament whose sign at rank `i` is `+1` iff bit `i` of
    /// `index` is set. Used to enumerate all `2^C(n, d+1)` tournaments.
    pub fn from_index(n: usize, d: usize, index: u64) -> Result<Self> {
        let m = binomial(n, d + 1);
        let signs = (0..m)
            .map(|i| if i < 64 && (index >> i) & 1 == 1 { 1 } else { -1 })
            .collect();
        Tournament::new(n, d, signs)
    }

    /// Builds a partial tournament from explicit faces; unlisted faces get 0.
    pub fn from_faces<'a>(
        n: usize,
        d: usize,
        faces: impl IntoIterator<Item = (&'a Face, i8)>,
    ) -> Result<Self> {
        let mut t = Tournament::empty(n, d)?;
        for (face, sign) in faces {
            if face.len() != d + 1 {
                return Err(Error::InvalidTournament(format!(
                    "face {face:?} is not a {d}-face"
                )));
            }
            let r = face.rank(n)?;
            if !(-1..=1).contains(&sign) {
                return Err(Error::InvalidTournament(format!(
                    "sign {sign} outside {{-1, 0, 1}}"
                )));
            }
            t.signs[r] = sign;
        }
        Ok(t)
    }

    /// Uniform i.i.d. signs from ChaCha8 seeded with `seed`: face of rank
    /// `i` gets `+1` iff the low bit of the `i`-th `u32` output is set.
    pub fn random(n: usize, d: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Tournament::random_with(n, d, &mut rng)
    }

    pub fn random_with(n: usize, d: usize, rng: &mut impl RngCore) -> Result<Self> {
        if n < d + 1 {
            return Err(Error::InvalidTournament(format!(
                "need n >= d + 1, got n = {n}, d = {d}"
            )));
        }
        let signs = (0..binomial(n, d + 1))
            .map(|_| if rng.next_u32() & 1 == 1 { 1 } else { -1 })
            .collect();
        Tournament::new(n, d, signs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn num_faces(&self) -> usize {
        self.signs.len()
    }

    pub fn sign_at(&self, rank: usize) -> i8 {
        self.signs[rank]
    }

    pub fn sign(&self, face: &Face) -> Result<i8> {
        if face.len() != self.d + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{face:?} is not a {}-face",
                self.d
            )));
        }
        Ok(self.signs[face.rank(self.n)?])
    }

    /// Sign of the face given as a sorted slice.
    pub(crate) fn sign_sorted(&self, face: &[usize]) -> i8 {
        self.signs[rank_sorted(face, self.n)]
    }

    pub fn face(&self, rank: usize) -> Face {
        let mut buf = vec![0; self.d + 1];
        unrank_into(rank, self.n, &mut buf);
        Face::from_sorted(&buf)
    }

    pub fn is_complete(&self) -> bool {
        self.signs.iter().all(|&s| s != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.signs.iter().all(|&s| s == 0)
    }

    /// Ranks of the faces with nonzero sign.
    pub fn support(&self) -> Vec<usize> {
        (0..self.signs.len()).filter(|&i| self.signs[i] != 0).collect()
    }

    pub fn with_sign(&self, face: &Face, sign: i8) -> Result<Self> {
        let mut signs = self.signs.clone();
        signs[face.rank(self.n)?] = sign;
        Tournament::new(self.n, self.d, signs)
    }

    pub(crate) fn with_signs_unchecked(&self, signs: Vec<i8>) -> Self {
        debug_assert_eq!(signs.len(), self.signs.len());
        Tournament {
            n: self.n,
            d: self.d,
            signs,
        }
    }

    /// Global sign reversal.
    pub fn reversed(&self) -> Self {
        self.with_signs_unchecked(self.signs.iter().map(|s| -s).collect())
    }

    /// The (d-1)-tournament on `[1, n] \ {x}` (relabeled order-preservingly)
    /// giving `tau` the orientation `eps(tau + x) * (tau; tau + x)`.
    pub fn link(&self, x: usize) -> Result<(Tournament, LabelMap)> {
        if x == 0 || x > self.n {
            return Err(Error::InvalidFace(format!(
                "vertex {x} outside [1, {}]",
                self.n
            )));
        }
        if self.d == 0 {
            return Err(Error::InvalidTournament(
                "a 0-tournament has no link".into(),
            ));
        }
        let map: LabelMap = (1..=self.n).filter(|&v| v != x).collect();
        let m = self.n - 1;
        let mut signs = Vec::with_capacity(binomial(m, self.d));
        let mut sigma = Vec::with_capacity(self.d + 1);
        for tau in subsets(m, self.d) {
            let orig: Vec<usize> = tau.iter().map(|&v| map[v - 1]).collect();
            sigma.clear();
            sigma.extend_from_slice(&orig);
            let pos = sigma.partition_point(|&v| v < x);
            sigma.insert(pos, x);
            let eps = self.sign_sorted(&sigma);
            signs.push(eps * boundary_coefficient_sorted(&orig, &sigma));
        }
        Ok((Tournament::new(m, self.d - 1, signs)?, map))
    }

    /// Restriction to the vertex set `u`, relabeled order-preservingly.
    pub fn restrict(&self, u: &[usize]) -> Result<(Tournament, LabelMap)> {
        let mut map: LabelMap = u.to_vec();
        map.sort_unstable();
        map.dedup();
        if map.len() != u.len() {
            return Err(Error::InvalidFace("repeated vertex in restriction set".into()));
        }
        if map.iter().any(|&v| v == 0 || v > self.n) {
            return Err(Error::InvalidFace(format!(
                "restriction set {u:?} not inside [1, {}]",
                self.n
            )));
        }
        if map.len() < self.d + 1 {
            return Err(Error::InvalidTournament(format!(
                "restriction needs at least {} vertices, got {}",
                self.d + 1,
                map.len()
            )));
        }
        let k = map.len();
        let mut buf = vec![0; self.d + 1];
        let signs = subsets(k, self.d + 1)
            .map(|s| {
                for (b, &v) in buf.iter_mut().zip(&s) {
                    *b = map[v - 1];
                }
                self.sign_sorted(&buf)
            })
            .collect();
        Ok((Tournament::new(k, self.d, signs)?, map))
    }

    /// Applies the vertex permutation `pi` (`pi[i - 1]` is the image of `i`).
    /// The image of `sigma` is sorted ascending and its sign multiplied by the
    /// parity of that sort.
    pub fn relabel(&self, pi: &[usize]) -> Result<Tournament> {
        check_permutation(pi, self.n)?;
        let mut signs = vec![0i8; self.signs.len()];
        let mut img = vec![0; self.d + 1];
        for (r, s) in subsets(self.n, self.d + 1).enumerate() {
            for (dst, &v) in img.iter_mut().zip(&s) {
                *dst = pi[v - 1];
            }
            let parity = sort_parity(&mut img);
            signs[rank_sorted(&img, self.n)] = parity * self.signs[r];
        }
        Ok(self.with_signs_unchecked(signs))
    }

    /// Compact JSON: `{"n":4,"d":2,"signs":[1,-1,1,-1]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tournament serializes")
    }

    /// Accepts the compact form or the verbose
    /// `{"n":..,"d":..,"faces":[{"face":[1,2,3],"sign":1}, ..]}` form.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawForm = serde_json::from_str(text)?;
        match (raw.signs, raw.faces) {
            (Some(signs), None) => {
                let signs = signs
                    .into_iter()
                    .map(|s| {
                        if (-1..=1).contains(&s) {
                            Ok(s as i8)
                        } else {
                            Err(Error::Parse(format!("sign {s} outside {{-1, 0, 1}}")))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                Tournament::new(raw.n, raw.d, signs).map_err(|e| Error::Parse(e.to_string()))
            }
            (None, Some(faces)) => {
                let mut parsed = Vec::with_capacity(faces.len());
                for entry in faces {
                    if !(-1..=1).contains(&entry.sign) {
                        return Err(Error::Parse(format!(
                            "sign {} outside {{-1, 0, 1}}",
                            entry.sign
                        )));
                    }
                    parsed.push((Face::new(entry.face)?, entry.sign as i8));
                }
                Tournament::from_faces(raw.n, raw.d, parsed.iter().map(|(f, s)| (f, *s)))
                    .map_err(|e| Error::Parse(e.to_string()))
            }
            _ => Err(Error::Parse(
                "expected exactly one of \"signs\" or \"faces\"".into(),
            )),
        }
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, d={}, {:?})", self.n, self.d, self.signs)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawForm {
    n: usize,
    d: usize,
    signs: Option<Vec<i64>>,
    faces: Option<Vec<RawFace>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFace {
    face: Vec<usize>,
    sign: i64,
}

pub(crate) fn check_permutation(pi: &[usize], n: usize) -> Result<()> {
    if pi.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "length {} for {n} vertices",
            pi.len()
        )));
    }
    let mut seen = vec![false; n + 1];
    for &v in pi {
        if v == 0 || v > n || seen[v] {
            return Err(Error::InvalidPermutation(format!("{pi:?} is not a bijection of [1, {n}]")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Sorts `v` in place and returns the sign of the sorting permutation.
pub(crate) fn sort_parity(v: &mut [usize]) -> i8 {
    let mut parity = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            parity = -parity;
            j -= 1;
        }
    }
    parity
}

/// Composition `(pi . rho)(i) = pi(rho(i))`.
pub fn compose(pi: &[usize], rho: &[usize]) -> Vec<usize> {
    rho.iter().map(|&r| pi[r - 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_1() -> Tournament {
        Tournament::new(4, 2, vec![1, -1, 1, -1]).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Tournament::new(2, 2, vec![]).is_err());
        assert!(Tournament::new(4, 2, vec![1, 1, 1]).is_err());
        assert!(Tournament::new(4, 2, vec![1, 1, 1, 2]).is_err());
    }

    #[test]
    fn link_of_example_1_at_4() {
        // faces 124, 134, 234 with signs -1, 1, -1; vertex 4 is i_2, so
        // (tau; tau + 4) = (-1)^0 = 1 for each
        let (lk, map) = example_1().link(4).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(lk.d(), 1);
        assert_eq!(lk.signs(), &[-1, 1, -1]);
    }

    #[test]
    fn link_of_example_2_at_4() {
        let t = Tournament::new(4, 2, vec![1, 1, 1, 1]).unwrap();
        let (lk, _) = t.link(4).unwrap();
        // rows 12, 13, 23 of the printed matrix in columns 124, 134, 234
        assert_eq!(lk.signs(), &[1, 1, 1]);
    }

    #[test]
    fn link_of_single_face_at_max_vertex() {
        for d in 1..=4 {
            let t = Tournament::new(d + 1, d, vec![1]).unwrap();
            let (lk, _) = t.link(d + 1).unwrap();
            // tau omits i_d, so (tau; sigma) = (-1)^0
            assert_eq!(lk.signs(), &[1]);
            let (lk1, _) = t.link(1).unwrap();
            assert_eq!(lk1.signs(), &[if d % 2 == 0 { 1 } else { -1 }]);
        }
    }

    #[test]
    fn link_of_one_tournament_is_a_sign_per_vertex() {
        // 1 -> 2, 3 -> 1, 2 -> 3
        let t = Tournament::new(3, 1, vec![1, -1, 1]).unwrap();
        let (lk, map) = t.link(1).unwrap();
        assert_eq!(map, vec![2, 3]);
        assert_eq!(lk.d(), 0);
        // {1,2}: x = 1 is i_0, (2; 12) = (-1)^(1-0) = -1
        assert_eq!(lk.signs(), &[-1, 1]);
        assert!(t.link(0).is_err());
        assert!(t.link(4).is_err());
    }

    #[test]
    fn restrict_identity_and_single_face() {
        let t = example_1();
        assert_eq!(t.restrict(&[1, 2, 3, 4]).unwrap().0, t);
        let (r, map) = t.restrict(&[1, 3, 4]).unwrap();
        assert_eq!(map, vec![1, 3, 4]);
        assert_eq!(r.signs(), &[1]);
        assert!(t.restrict(&[1, 2]).is_err());
    }

    #[test]
    fn relabel_by_transposition() {
        let t = example_1();
        assert_eq!(t.relabel(&[1, 2, 3, 4]).unwrap(), t);
        let s = t.relabel(&[2, 1, 3, 4]).unwrap();
        assert_eq!(s.sign(&Face::new(vec![1, 2, 3]).unwrap()).unwrap(), -1);
        assert!(t.relabel(&[1, 1, 3, 4]).is_err());
        assert!(t.relabel(&[1, 2, 3]).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = Tournament::random(4, 2, 7).unwrap();
        let b = Tournament::random(4, 2, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_complete());
        assert_eq!(Tournament::random(3, 2, 1).unwrap().num_faces(), 1);
    }

    #[test]
    fn random_signs_are_balanced() {
        let mut sum = 0i64;
        let mut count = 0i64;
        for seed in 0..10_000u64 {
            let t = Tournament::random(4, 2, seed).unwrap();
            sum += t.signs().iter().map(|&s| s as i64).sum::<i64>();
            count += t.num_faces() as i64;
        }
        // 4 * 10^4 fair signs: standard deviation of the mean is 0.005
        let mean = sum as f64 / count as f64;
        assert!(mean.abs() <= 0.05, "mean {mean}");
    }

    #[test]
    fn json_forms() {
        let t = example_1();
        let text = t.to_json();
        assert_eq!(text, r#"{"n":4,"d":2,"signs":[1,-1,1,-1]}"#);
        assert_eq!(Tournament::from_json(&text).unwrap(), t);
        let verbose = r#"{"n":4,"d":2,"faces":[{"face":[1,2,4],"sign":-1},{"face":[3,1,2],"sign":1}]}"#;
        let v = Tournament::from_json(verbose).unwrap();
        assert_eq!(v.signs(), &[1, -1, 0, 0]);
        assert!(Tournament::from_json(r#"{"n":4,"d":2,"signs":[1,-1,1]}"#).is_err());
        assert!(Tournament::from_json(r#"{"n":4,"d":2,"signs":[1,-1,1,2]}"#).is_err());
        assert!(Tournament::from_json(r#"{"n":4,"d":2}"#).is_err());
        assert!(Tournament::from_json("not json").is_err());
    }

    #[test]
    fn sort_parity_counts_inversions() {
        let mut v = vec![3, 1, 2];
        assert_eq!(sort_parity(&mut v), 1);
        assert_eq!(v, vec![1, 2, 3]);
        let mut w = vec![2, 1, 3];
        assert_eq!(sort_parity(&mut w), -1);
    }
}
