use num_traits::{One, Signed, Zero};

use super::Rational;

/// The two mutually exclusive alternatives for a set of integer columns
/// `a_1, .., a_N` over `m` rows.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelOrCertificate {
    /// `v >= 0`, `sum v = 1`, `sum v_j a_j = 0`.
    Kernel(Vec<Rational>),
    /// `y` with `y . a_j >= 1` for every column.
    Certificate(Vec<Rational>),
}

/// Decides whether the sparse columns admit a nonnegative, nonzero kernel
/// vector, by exact phase-1 simplex on `{A v = 0, 1^T v = 1, v >= 0}` with
/// Bland's rule. When the phase-1 optimum is positive its dual is turned into
/// a certificate `y = -pi_A / pi_sum`.
///
/// Each column is a list of `(row, value)`. Both alternatives are verified
/// exactly before returning.
pub fn nonneg_kernel_or_certificate(num_rows: usize, cols: &[Vec<(usize, i8)>]) -> KernelOrCertificate {
    if cols.is_empty() {
        return KernelOrCertificate::Certificate(vec![Rational::zero(); num_rows]);
    }
    let mut tab = Tableau::new(num_rows, cols);
    tab.run();
    let out = tab.extract();
    verify(num_rows, cols, &out);
    out
}

fn verify(num_rows: usize, cols: &[Vec<(usize, i8)>], out: &KernelOrCertificate) {
    match out {
        KernelOrCertificate::Kernel(v) => {
            let mut acc = vec![Rational::zero(); num_rows];
            let mut total = Rational::zero();
            for (col, w) in cols.iter().zip(v) {
                assert!(!w.is_negative(), "negative kernel weight");
                total += w;
                for &(r, a) in col {
                    acc[r] += w * Rational::from_integer(a.into());
                }
            }
            assert!(total.is_one(), "kernel weights do not sum to one");
            assert!(acc.iter().all(Zero::is_zero), "kernel vector is not in the kernel");
        }
        KernelOrCertificate::Certificate(y) => {
            for col in cols {
                let s: Rational = col
                    .iter()
                    .map(|&(r, a)| &y[r] * Rational::from_integer(a.into()))
                    .sum();
                assert!(s >= Rational::one(), "certificate is not >= 1 on a column");
            }
        }
    }
}

struct Tableau {
    /// `m + 1` constraint rows, each of width `n + m + 1 + 1` (rhs last).
    rows: Vec<Vec<Rational>>,
    /// Reduced costs, same width; the last entry is minus the objective.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    n: usize,
}

impl Tableau {
    fn new(num_rows: usize, cols: &[Vec<(usize, i8)>]) -> Self {
        let n = cols.len();
        let m = num_rows + 1;
        let width = n + m + 1;
        let mut rows = vec![vec![Rational::zero(); width]; m];
        for (j, col) in cols.iter().enumerate() {
            for &(r, a) in col {
                rows[r][j] = Rational::from_integer(a.into());
            }
            rows[num_rows][j] = Rational::one();
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row[n + i] = Rational::one();
        }
        rows[num_rows][width - 1] = Rational::one();

        // c = (0, .., 0, 1, .., 1); reduced cost c_j - 1^T column_j
        let mut cost = vec![Rational::zero(); width];
        for j in 0..n {
            let s: i64 = cols[j].iter().map(|&(_, a)| a as i64).sum::<i64>() + 1;
            cost[j] = Rational::from_integer((-s).into());
        }
        cost[width - 1] = -Rational::one();
        Tableau {
            rows,
            cost,
            basis: (n..n + m).collect(),
            n,
        }
    }

    fn width(&self) -> usize {
        self.cost.len()
    }

    fn run(&mut self) {
        let rhs = self.width() - 1;
        // Bland: lowest-index entering column with negative reduced cost
        while let Some(enter) = (0..rhs).find(|&j| self.cost[j].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[rhs] / &row[enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let (pivot_row, _) = leave.expect("phase-1 objective is bounded below by zero");
            self.pivot(pivot_row, enter);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (dst, src) in row.iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst -= &f * src;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (dst, src) in self.cost.iter_mut().zip(&pivot_row) {
                if !src.is_zero() {
                    *dst -= &f * src;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn extract(&self) -> KernelOrCertificate {
        let rhs = self.width() - 1;
        let objective = -&self.cost[rhs];
        if objective.is_zero() {
            let mut v = vec![Rational::zero(); self.n];
            for (i, &b) in self.basis.iter().enumerate() {
                if b < self.n {
                    v[b] = self.rows[i][rhs].clone();
                }
            }
            KernelOrCertificate::Kernel(v)
        } else {
            // artificial i has cost 1 and reduced cost 1 - pi_i
            let m = self.rows.len();
            let pi: Vec<Rational> = (0..m)
                .map(|i| Rational::one() - &self.cost[self.n + i])
                .collect();
            let pi_sum = &pi[m - 1];
            debug_assert_eq!(*pi_sum, objective);
            let y = pi[..m - 1].iter().map(|p| -(p / pi_sum)).collect();
            KernelOrCertificate::Certificate(y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::ratio;

    fn dense_to_cols(m: &[&[i8]]) -> Vec<Vec<(usize, i8)>> {
        let ncols = m[0].len();
        (0..ncols)
            .map(|c| {
                (0..m.len())
                    .filter(|&r| m[r][c] != 0)
                    .map(|r| (r, m[r][c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn example_1_has_uniform_kernel() {
        let a: &[&[i8]] = &[
            &[1, -1, 0, 0],
            &[-1, 0, 1, 0],
            &[0, 1, -1, 0],
            &[1, 0, 0, -1],
            &[0, -1, 0, 1],
            &[0, 0, 1, -1],
        ];
        match nonneg_kernel_or_certificate(6, &dense_to_cols(a)) {
            KernelOrCertificate::Kernel(v) => assert_eq!(v, vec![ratio(1, 4); 4]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn example_2_has_certificate() {
        let a: &[&[i8]] = &[
            &[1, 1, 0, 0],
            &[-1, 0, 1, 0],
            &[0, -1, -1, 0],
            &[1, 0, 0, 1],
            &[0, 1, 0, -1],
            &[0, 0, 1, 1],
        ];
        assert!(matches!(
            nonneg_kernel_or_certificate(6, &dense_to_cols(a)),
            KernelOrCertificate::Certificate(_)
        ));
    }

    #[test]
    fn empty_column_set_is_vacuous_certificate() {
        assert_eq!(
            nonneg_kernel_or_certificate(3, &[]),
            KernelOrCertificate::Certificate(vec![Rational::zero(); 3])
        );
    }

    #[test]
    fn opposite_columns_cancel() {
        let cols = vec![vec![(0, 1), (1, -1)], vec![(0, -1), (1, 1)], vec![(0, 1)]];
        match nonneg_kernel_or_certificate(2, &cols) {
            KernelOrCertificate::Kernel(v) => {
                assert_eq!(v, vec![ratio(1, 2), ratio(1, 2), ratio(0, 1)])
            }
            other => panic!("{other:?}"),
        }
    }
}
