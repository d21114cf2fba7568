use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Outcome of [`solve_linear`].
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    /// A solution with every free variable set to zero. `free` lists the free
    /// columns; the solution is unique iff it is empty.
    Solution { x: Vec<Rational>, free: Vec<usize> },
    /// A row combination `y` with `y^T A = 0` and `y^T b = 1`.
    Inconsistent { y: Vec<Rational> },
}

/// Solves `A x = b` exactly by Gauss-Jordan elimination. The identity block
/// carried alongside the augmented matrix records the row operations, which
/// turns an inconsistent row into its witness `y`.
pub fn solve_linear(a: &[Vec<Rational>], b: &[Rational]) -> Result<LinearSolution> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "{m} rows but right-hand side of length {}",
            b.len()
        )));
    }
    let n = a.first().map_or(0, |r| r.len());
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("ragged matrix".into()));
    }

    // [A | b | I]
    let width = n + 1 + m;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend(a[i].iter().cloned());
            row.push(b[i].clone());
            row.extend((0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&i| !t[i][col].is_zero()) else {
            continue;
        };
        t.swap(row, p);
        let inv = t[row][col].recip();
        for v in t[row].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m {
            if i != row && !t[i][col].is_zero() {
                let factor = t[i][col].clone();
                let (src, dst) = if i < row {
                    let (lo, hi) = t.split_at_mut(row);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = t.split_at_mut(i);
                    (&lo[row], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &factor * s;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m {
            break;
        }
    }

    for r in row..m {
        if !t[r][n].is_zero() {
            let scale = t[r][n].recip();
            let y = t[r][n + 1..].iter().map(|v| v * &scale).collect();
            return Ok(LinearSolution::Inconsistent { y });
        }
    }

    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = t[r][n].clone();
    }
    let free = (0..n).filter(|c| !pivots.contains(c)).collect();
    Ok(LinearSolution::Solution { x, free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{rat, ratio};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn identity_system() {
        let a = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = vec![rat(3), ratio(-1, 2), rat(0)];
        assert_eq!(
            solve_linear(&a, &b).unwrap(),
            LinearSolution::Solution { x: b.clone(), free: vec![] }
        );
    }

    #[test]
    fn zero_times_x_is_one() {
        let a = mat(&[&[0]]);
        match solve_linear(&a, &[rat(1)]).unwrap() {
            LinearSolution::Inconsistent { y } => assert_eq!(y, vec![rat(1)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inconsistency_witness_is_valid() {
        let a = mat(&[&[1, 2], &[2, 4], &[0, 1]]);
        let b = vec![rat(1), rat(3), rat(5)];
        let LinearSolution::Inconsistent { y } = solve_linear(&a, &b).unwrap() else {
            panic!("expected inconsistency");
        };
        for c in 0..2 {
            let s: Rational = (0..3).map(|r| &y[r] * &a[r][c]).sum();
            assert!(s.is_zero());
        }
        let yb: Rational = (0..3).map(|r| &y[r] * &b[r]).sum();
        assert_eq!(yb, rat(1));
    }

    #[test]
    fn underdetermined_reports_free_columns() {
        let a = mat(&[&[1, 1, 0]]);
        let LinearSolution::Solution { x, free } = solve_linear(&a, &[rat(2)]).unwrap() else {
            panic!();
        };
        assert_eq!(x, vec![rat(2), rat(0), rat(0)]);
        assert_eq!(free, vec![1, 2]);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(solve_linear(&mat(&[&[1]]), &[rat(1), rat(2)]).is_err());
    }
}
