//! Exact linear algebra over the rationals: a phase-1 simplex for equality
//! systems with nonnegative variables, and Gauss-Jordan reduction for
//! explaining infeasible systems. Everything is BigRational; there is no
//! floating point and no tolerance anywhere.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

/// Finds x ≥ 0 with Ax = b, returning a basic solution, or None when the
/// system is infeasible.
///
/// Classic phase-1: flip rows until b ≥ 0, add one artificial variable per
/// row, and minimize their sum. Entering column: the lowest-index structural
/// column with positive reduced cost (Bland's rule, so no cycling);
/// artificial columns never re-enter. Leaving row: minimum ratio, ties to
/// the lowest basis index. The run is fully deterministic.
pub(crate) fn feasible_point(nvars: usize, rows: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let m = rows.len();
    if m == 0 {
        return Some(vec![Q::zero(); nvars]);
    }
    let width = nvars + m + 1;
    let rhs_col = width - 1;

    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), nvars, "row arity mismatch");
        let flip = rhs[i].is_negative();
        let mut tab = vec![Q::zero(); width];
        for (j, v) in row.iter().enumerate() {
            tab[j] = if flip { -v.clone() } else { v.clone() };
        }
        tab[nvars + i] = Q::one();
        tab[rhs_col] = if flip { -rhs[i].clone() } else { rhs[i].clone() };
        t.push(tab);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| nvars + i).collect();

    // Reduced costs for minimizing the artificial sum: the column sums of
    // the constraint rows, zero over the (basic) artificial columns.
    let mut cost = vec![Q::zero(); width];
    for j in (0..nvars).chain([rhs_col]) {
        cost[j] = t.iter().map(|row| &row[j]).sum();
    }

    loop {
        if cost[rhs_col].is_zero() {
            let mut x = vec![Q::zero(); nvars];
            for (i, &b) in basis.iter().enumerate() {
                if b < nvars {
                    x[b] = t[i][rhs_col].clone();
                }
            }
            return Some(x);
        }
        let entering = match (0..nvars).find(|&j| cost[j].is_positive()) {
            Some(j) => j,
            None => return None,
        };
        let mut leaving: Option<usize> = None;
        for i in 0..m {
            if !t[i][entering].is_positive() {
                continue;
            }
            let better = match leaving {
                None => true,
                Some(l) => {
                    let ratio = &t[i][rhs_col] / &t[i][entering];
                    let best = &t[l][rhs_col] / &t[l][entering];
                    ratio < best || (ratio == best && basis[i] < basis[l])
                }
            };
            if better {
                leaving = Some(i);
            }
        }
        // Phase-1 objective is bounded below by zero, so the entering
        // column always has a positive entry somewhere.
        let leaving = leaving.expect("phase-1 cannot be unbounded");

        let pivot = t[leaving][entering].clone();
        for v in t[leaving].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..m {
            if i == leaving || t[i][entering].is_zero() {
                continue;
            }
            let factor = t[i][entering].clone();
            for j in 0..width {
                let delta = &factor * &t[leaving][j];
                t[i][j] = &t[i][j] - delta;
            }
        }
        if !cost[entering].is_zero() {
            let factor = cost[entering].clone();
            for j in 0..width {
                let delta = &factor * &t[leaving][j];
                cost[j] = &cost[j] - delta;
            }
        }
        basis[leaving] = entering;
    }
}

/// Reduced row echelon form. Returns the nonzero reduced rows and the pivot
/// column of each.
pub(crate) fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    if m.is_empty() {
        return (vec![], vec![]);
    }
    let width = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(src) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, src);
        let pivot = m[row][col].clone();
        for v in m[row].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..m.len() {
            if i == row || m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for j in 0..width {
                let delta = &factor * &m[row][j];
                m[i][j] = &m[i][j] - delta;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> Q {
        Q::from_integer(BigInt::from(v))
    }

    fn qs(vs: &[i64]) -> Vec<Q> {
        vs.iter().copied().map(q).collect()
    }

    fn check(nvars: usize, rows: &[Vec<Q>], rhs: &[Q], x: &[Q]) {
        assert_eq!(x.len(), nvars);
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, b) in rows.iter().zip(rhs) {
            let lhs: Q = row.iter().zip(x).map(|(c, v)| c * v).sum();
            assert_eq!(&lhs, b);
        }
    }

    #[test]
    fn single_equation() {
        let rows = vec![qs(&[1, 1, -1])];
        let rhs = qs(&[-1]);
        let x = feasible_point(3, &rows, &rhs).unwrap();
        check(3, &rows, &rhs, &x);
        assert_eq!(x, qs(&[0, 0, 1]));
    }

    #[test]
    fn zero_rhs_yields_the_origin() {
        let rows = vec![qs(&[1, 0, -1]), qs(&[0, 1, -1])];
        let rhs = qs(&[0, 0]);
        assert_eq!(feasible_point(3, &rows, &rhs).unwrap(), qs(&[0, 0, 0]));
    }

    #[test]
    fn infeasible_sign_conflict() {
        // x1 + x2 = -1 has no nonnegative solution.
        assert!(feasible_point(2, &[qs(&[1, 1])], &qs(&[-1])).is_none());
    }

    #[test]
    fn infeasible_pair() {
        // x1 - x2 = 1 and x2 - x1 = 1 conflict.
        let rows = vec![qs(&[1, -1]), qs(&[-1, 1])];
        assert!(feasible_point(2, &rows, &qs(&[1, 1])).is_none());
    }

    #[test]
    fn consistent_redundant_rows() {
        let rows = vec![qs(&[1, -1]), qs(&[2, -2])];
        let rhs = qs(&[2, 4]);
        let x = feasible_point(2, &rows, &rhs).unwrap();
        check(2, &rows, &rhs, &x);
    }

    #[test]
    fn larger_system_with_fractions() {
        let rows = vec![qs(&[2, 1, 0, -1]), qs(&[0, 3, -1, 0]), qs(&[1, 0, 1, -2])];
        let rhs = qs(&[1, 2, 0]);
        let x = feasible_point(4, &rows, &rhs).unwrap();
        check(4, &rows, &rhs, &x);
    }

    #[test]
    fn no_rows_is_trivially_feasible() {
        assert_eq!(feasible_point(2, &[], &[]), Some(qs(&[0, 0])));
    }

    #[test]
    fn rref_identifies_forced_rows() {
        // b1 - b2 = 0 and b1 + b2 - 2*b3 = 0 and b1 - b3 = 0 reduce with
        // pivots on columns 0 and 1.
        let rows = vec![qs(&[1, -1, 0]), qs(&[1, 1, -2]), qs(&[1, 0, -1])];
        let (reduced, pivots) = rref(&rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(reduced, vec![qs(&[1, 0, -1]), qs(&[0, 1, -1])]);
    }

    #[test]
    fn rref_of_zero_matrix_is_empty() {
        let (reduced, pivots) = rref(&[qs(&[0, 0]), qs(&[0, 0])]);
        assert!(reduced.is_empty());
        assert!(pivots.is_empty());
    }
}
