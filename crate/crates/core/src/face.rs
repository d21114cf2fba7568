//! Faces of the simplex on `[1, n]` and their lexicographic ranking.
//!
//! A face is a strictly ascending tuple of 1-based vertex labels. All faces of
//! a given size are indexed by their rank in lexicographic order, which is the
//! row/column order used for incidence matrices and sign arrays.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Binomial coefficient, `None` on overflow.
pub fn checked_binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    usize::try_from(acc).ok()
}

/// Binomial coefficient. Panics on overflow, which cannot happen for any
/// instance whose sign array fits in memory.
pub fn binomial(n: usize, k: usize) -> usize {
    checked_binomial(n, k).expect("binomial coefficient overflows usize")
}

/// A strictly ascending set of 1-based vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Face(Vec<usize>);

impl Face {
    /// Builds a face from vertices in any order. Rejects zero labels and
    /// repeated vertices.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, Error> {
        vertices.sort_unstable();
        if vertices.first() == Some(&0) {
            return Err(Error::InvalidFace(format!(
                "vertex labels are 1-based, got {vertices:?}"
            )));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace(format!(
                "repeated vertex in {vertices:?}"
            )));
        }
        Ok(Face(vertices))
    }

    /// Wraps a slice already known to be strictly ascending and 1-based.
    pub(crate) fn from_sorted(vertices: &[usize]) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices.to_vec())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|vertices| - 1`; the empty face has dimension -1.
    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Lexicographic rank among all faces of the same size on `[1, n]`.
    pub fn rank(&self, n: usize) -> Result<usize, Error> {
        if let Some(&v) = self.0.last() {
            if v > n {
                return Err(Error::InvalidFace(format!(
                    "vertex {v} outside [1, {n}]"
                )));
            }
        }
        Ok(rank_sorted(&self.0, n))
    }

    /// Inverse of [`Face::rank`].
    pub fn unrank(rank: usize, k: usize, n: usize) -> Result<Self, Error> {
        let total = binomial(n, k);
        if rank >= total {
            return Err(Error::RankOutOfRange { rank, k, n });
        }
        let mut out = vec![0; k];
        unrank_into(rank, n, &mut out);
        Ok(Face(out))
    }

    /// `self` with vertex `v` removed.
    pub fn without(&self, v: usize) -> Face {
        Face(self.0.iter().copied().filter(|&x| x != v).collect())
    }

    /// `self` with vertex `v` added.
    pub fn with(&self, v: usize) -> Face {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Face(out)
    }

    /// Key used in JSON maps, e.g. `"1,2,3"`.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses a key produced by [`Face::key`].
    pub fn from_key(key: &str) -> Result<Self, Error> {
        let vertices = key
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFace(format!("bad face key {key:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Face::new(vertices)
    }
}

impl TryFrom<Vec<usize>> for Face {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        Face::new(v)
    }
}

impl From<Face> for Vec<usize> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lexicographic rank of a strictly ascending 1-based tuple with entries in
/// `[1, n]`.
///
/// Uses `rank = C(n,k) - 1 - sum_i C(n - a_i, k - i)` with `a_i` 1-based and
/// `i` starting at 0.
pub fn rank_sorted(vertices: &[usize], n: usize) -> usize {
    let k = vertices.len();
    let mut acc = 0usize;
    for (i, &a) in vertices.iter().enumerate() {
        acc += binomial(n - a, k - i);
    }
    binomial(n, k) - 1 - acc
}

/// Writes the face of lexicographic rank `rank` into `out` (size `k`).
pub fn unrank_into(mut rank: usize, n: usize, out: &mut [usize]) {
    let k = out.len();
    let mut next = 1usize;
    for i in 0..k {
        let remaining = k - i;
        loop {
            // faces starting with `next` at this position
            let block = binomial(n - next, remaining - 1);
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out[i] = next;
        next += 1;
    }
}

/// Iterates over all `k`-subsets of `[1, n]` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Subsets {
    Subsets {
        n,
        current: if k <= n { Some((1..=k).collect()) } else { None },
    }
}

pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut succ = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if succ[i] < self.n - (k - 1 - i) {
                succ[i] += 1;
                for j in i + 1..k {
                    succ[j] = succ[j - 1] + 1;
                }
                self.current = Some(succ);
                return Some(cur);
            }
        }
        Some(cur)
    }
}

/// Induced orientation `(tau; sigma)`: `(-1)^(d-j)` when `tau = sigma \ {i_j}`
/// with `d = dim sigma`, zero when `tau` is not a facet of `sigma`.
pub fn boundary_coefficient(tau: &Face, sigma: &Face) -> Result<i8, Error> {
    if sigma.len() != tau.len() + 1 {
        return Err(Error::DimensionMismatch(format!(
            "(tau; sigma) needs dim sigma = dim tau + 1, got {} and {}",
            tau.dimension(),
            sigma.dimension()
        )));
    }
    Ok(boundary_coefficient_sorted(tau.vertices(), sigma.vertices()))
}

pub(crate) fn boundary_coefficient_sorted(tau: &[usize], sigma: &[usize]) -> i8 {
    let d = tau.len();
    let mut skipped = None;
    let mut t = 0;
    for (j, &v) in sigma.iter().enumerate() {
        if t < tau.len() && tau[t] == v {
            t += 1;
        } else if skipped.is_none() {
            skipped = Some(j);
        } else {
            return 0;
        }
    }
    match skipped {
        Some(j) if t == tau.len() => sign_of_power(d - j),
        _ => 0,
    }
}

/// `(-1)^e`.
pub fn sign_of_power(e: usize) -> i8 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[usize]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ranks_follow_printed_column_and_row_order() {
        assert_eq!(f(&[1, 2, 3]).rank(4).unwrap(), 0);
        assert_eq!(f(&[1, 2, 4]).rank(4).unwrap(), 1);
        assert_eq!(f(&[1, 3, 4]).rank(4).unwrap(), 2);
        assert_eq!(f(&[2, 3, 4]).rank(4).unwrap(), 3);
        assert_eq!(f(&[2, 4]).rank(4).unwrap(), 4);
        assert_eq!(f(&[1]).rank(1).unwrap(), 0);
    }

    #[test]
    fn unrank_inverts_rank_everywhere() {
        for n in 1..=8 {
            for k in 0..=n {
                for (r, s) in subsets(n, k).enumerate() {
                    assert_eq!(rank_sorted(&s, n), r);
                    assert_eq!(Face::unrank(r, k, n).unwrap().vertices(), &s[..]);
                }
                assert_eq!(subsets(n, k).count(), binomial(n, k));
            }
        }
    }

    #[test]
    fn out_of_range_inputs_are_rejected() {
        assert!(f(&[1, 5]).rank(4).is_err());
        assert!(Face::unrank(6, 2, 4).is_err());
        assert!(Face::new(vec![0, 1]).is_err());
        assert!(Face::new(vec![2, 2]).is_err());
    }

    #[test]
    fn boundary_coefficients() {
        assert_eq!(boundary_coefficient(&f(&[1, 3]), &f(&[1, 2, 3])).unwrap(), -1);
        assert_eq!(boundary_coefficient(&f(&[1, 2]), &f(&[1, 3, 4])).unwrap(), 0);
        assert_eq!(boundary_coefficient(&f(&[2, 3]), &f(&[1, 2, 3])).unwrap(), 1);
        assert_eq!(boundary_coefficient(&f(&[1, 2]), &f(&[1, 2, 3])).unwrap(), 1);
        assert!(boundary_coefficient(&f(&[1]), &f(&[1, 2, 3])).is_err());
    }

    #[test]
    fn keys_round_trip() {
        let face = f(&[3, 1, 10]);
        assert_eq!(face.key(), "1,3,10");
        assert_eq!(Face::from_key("1,3,10").unwrap(), face);
    }
}
