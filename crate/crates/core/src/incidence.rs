//! Signed incidence matrices between (d-1)-faces and d-faces.

use crate::face::{binomial, boundary_coefficient_sorted, rank_sorted, subsets};
use crate::tournament::Tournament;

/// Incidence structure of the complete d-skeleton on `[1, n]`, independent of
/// any orientation. Column `c` lists the `d + 1` rows `(rank, (tau; sigma))`,
/// row `r` lists the `n - d` columns containing it.
#[derive(Debug, Clone)]
pub struct Skeleton {
    n: usize,
    d: usize,
    cols: Vec<Vec<(usize, i8)>>,
    rows: Vec<Vec<(usize, i8)>>,
}

impl Skeleton {
    pub fn new(n: usize, d: usize) -> Self {
        let mut rows = vec![Vec::with_capacity(n - d); binomial(n, d)];
        let mut cols = Vec::with_capacity(binomial(n, d + 1));
        let mut tau = Vec::with_capacity(d);
        for (c, sigma) in subsets(n, d + 1).enumerate() {
            let mut col = Vec::with_capacity(d + 1);
            for j in 0..=d {
                tau.clear();
                tau.extend(sigma.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v));
                let r = rank_sorted(&tau, n);
                let coef = boundary_coefficient_sorted(&tau, &sigma);
                col.push((r, coef));
                rows[r].push((c, coef));
            }
            col.sort_unstable();
            cols.push(col);
        }
        Skeleton { n, d, cols, rows }
    }

    pub fn for_tournament(t: &Tournament) -> Self {
        Skeleton::new(t.n(), t.d())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    /// `(row, (tau; sigma))` for the facets `tau` of column `c`.
    pub fn col(&self, c: usize) -> &[(usize, i8)] {
        &self.cols[c]
    }

    /// `(col, (tau; sigma))` for the cofaces `sigma` of row `r`.
    pub fn row(&self, r: usize) -> &[(usize, i8)] {
        &self.rows[r]
    }
}

/// The incidence matrix of a tournament, stored column-sparse. Entry
/// `(tau, sigma)` is `eps_sigma * (tau; sigma)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    num_rows: usize,
    cols: Vec<Vec<(usize, i8)>>,
}

impl IncidenceMatrix {
    pub fn new(t: &Tournament) -> Self {
        let sk = Skeleton::for_tournament(t);
        Self::with_skeleton(t, &sk)
    }

    pub fn with_skeleton(t: &Tournament, sk: &Skeleton) -> Self {
        let cols = (0..sk.num_cols())
            .map(|c| {
                let eps = t.sign_at(c);
                if eps == 0 {
                    Vec::new()
                } else {
                    sk.col(c).iter().map(|&(r, coef)| (r, eps * coef)).collect()
                }
            })
            .collect();
        IncidenceMatrix {
            num_rows: sk.num_rows(),
            cols,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    /// Nonzero entries of column `c`, sorted by row.
    pub fn col(&self, c: usize) -> &[(usize, i8)] {
        &self.cols[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> i8 {
        self.cols[c]
            .iter()
            .find(|&&(row, _)| row == r)
            .map_or(0, |&(_, v)| v)
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<i8>> {
        let mut m = vec![vec![0i8; self.cols.len()]; self.num_rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                m[r][c] = v;
            }
        }
        m
    }

    /// `A * x` for integer `x`.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.num_rows];
        for (col, &xc) in self.cols.iter().zip(x) {
            for &(r, v) in col {
                out[r] += v as i64 * xc;
            }
        }
        out
    }

    /// Sum of the given columns.
    pub fn column_sum(&self, cols: impl IntoIterator<Item = usize>) -> Vec<i64> {
        let mut out = vec![0i64; self.num_rows];
        for c in cols {
            for &(r, v) in &self.cols[c] {
                out[r] += v as i64;
            }
        }
        out
    }
}

/// `A * 1`, indexed like the incidence rows.
pub fn degree_sequence(t: &Tournament) -> Vec<i64> {
    let sk = Skeleton::for_tournament(t);
    degree_sequence_with(t, &sk)
}

pub fn degree_sequence_with(t: &Tournament, sk: &Skeleton) -> Vec<i64> {
    (0..sk.num_rows())
        .map(|r| {
            sk.row(r)
                .iter()
                .map(|&(c, coef)| (t.sign_at(c) * coef) as i64)
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_1_matrix_is_the_printed_one() {
        let t = Tournament::new(4, 2, vec![1, -1, 1, -1]).unwrap();
        let printed: Vec<Vec<i8>> = vec![
            vec![1, -1, 0, 0],
            vec![-1, 0, 1, 0],
            vec![0, 1, -1, 0],
            vec![1, 0, 0, -1],
            vec![0, -1, 0, 1],
            vec![0, 0, 1, -1],
        ];
        assert_eq!(IncidenceMatrix::new(&t).to_dense(), printed);
    }

    #[test]
    fn example_2_matrix_is_the_printed_one() {
        let t = Tournament::new(4, 2, vec![1, 1, 1, 1]).unwrap();
        let printed: Vec<Vec<i8>> = vec![
            vec![1, 1, 0, 0],
            vec![-1, 0, 1, 0],
            vec![0, -1, -1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, -1],
            vec![0, 0, 1, 1],
        ];
        assert_eq!(IncidenceMatrix::new(&t).to_dense(), printed);
    }

    #[test]
    fn single_simplex_column_is_its_signed_boundary() {
        for d in 1..=4 {
            let t = Tournament::new(d + 1, d, vec![1]).unwrap();
            let a = IncidenceMatrix::new(&t);
            // row r omits vertex d + 1 - r, i.e. j = d - r, so the sign is (-1)^r
            let col: Vec<i8> = a.to_dense().iter().map(|row| row[0]).collect();
            let expected: Vec<i8> = (0..=d).map(|r| if r % 2 == 0 { 1 } else { -1 }).collect();
            assert_eq!(col, expected);
        }
    }

    #[test]
    fn zero_signs_give_zero_columns() {
        let t = Tournament::new(4, 2, vec![1, 0, 1, 0]).unwrap();
        let a = IncidenceMatrix::new(&t);
        assert!(a.col(1).is_empty());
        assert_eq!(a.entry(0, 1), 0);
    }

    #[test]
    fn degree_sequences() {
        let e1 = Tournament::new(4, 2, vec![1, -1, 1, -1]).unwrap();
        assert_eq!(degree_sequence(&e1), vec![0; 6]);
        let e2 = Tournament::new(4, 2, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(degree_sequence(&e2), vec![2, 0, -2, 2, 0, 2]);
        let z = Tournament::empty(5, 2).unwrap();
        assert_eq!(degree_sequence(&z), vec![0; 10]);
    }
}
