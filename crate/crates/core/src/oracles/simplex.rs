//! Small dense simplex solver for the unit-objective packing LP
//!
//!   maximize   sum_j x_j
//!   subject to sum_{j : i in col_j} x_j <= b_i   for every row i
//!              x_j >= 0
//!
//! with a 0/1 constraint matrix given column-wise. Instances here are wide
//! and short (thousands of columns, tens of rows), so a dense tableau with
//! slack starting basis is enough. Bland's rule is used for both the entering
//! and leaving choices, which rules out cycling.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{input_err, Result};

const TOL: f64 = 1e-9;

pub(crate) struct PackingLp {
    pub num_rows: usize,
    /// Row capacities; all must be nonnegative (slack basis is then feasible).
    pub rhs: Vec<f64>,
    /// For each column, the ascending row indices with coefficient 1.
    pub cols: Vec<Vec<u32>>,
}

pub(crate) struct LpSolution {
    pub objective: f64,
    pub x: Vec<f64>,
}

pub(crate) fn maximize_unit_sum(lp: &PackingLp) -> Result<LpSolution> {
    let m = lp.num_rows;
    let n = lp.cols.len();
    let total = n + m;
    debug_assert!(lp.rhs.iter().all(|&b| b >= 0.0));

    // Dense tableau rows [A | I], rhs, slack basis.
    let mut rows: Vec<Vec<f64>> = vec![vec![0.0; total]; m];
    for (j, col) in lp.cols.iter().enumerate() {
        for &i in col {
            rows[i as usize][j] = 1.0;
        }
    }
    for i in 0..m {
        rows[i][n + i] = 1.0;
    }
    let mut rhs = lp.rhs.clone();
    let mut basis: Vec<usize> = (n..total).collect();
    // Reduced costs start at the objective: 1 on structural columns.
    let mut reduced: Vec<f64> = (0..total).map(|j| if j < n { 1.0 } else { 0.0 }).collect();

    loop {
        // Bland: smallest-index improving column.
        let Some(entering) = (0..total).find(|&j| reduced[j] > TOL) else {
            break;
        };
        // Ratio test; ties go to the smallest basis variable (Bland).
        let mut pivot_row: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            let a = rows[i][entering];
            if a > TOL {
                let ratio = rhs[i] / a;
                let replace = match pivot_row {
                    None => true,
                    Some(pr) => {
                        ratio < best_ratio - TOL
                            || (ratio < best_ratio + TOL && basis[i] < basis[pr])
                    }
                };
                if replace {
                    best_ratio = ratio;
                    pivot_row = Some(i);
                }
            }
        }
        let Some(pr) = pivot_row else {
            // Every packing column has at least one capacity row, so the LP
            // is bounded; reaching this is an internal error.
            return Err(input_err!("packing LP reported unbounded"));
        };

        // Pivot: normalize the pivot row, eliminate elsewhere.
        let piv = rows[pr][entering];
        for v in rows[pr].iter_mut() {
            *v /= piv;
        }
        rhs[pr] /= piv;
        for i in 0..m {
            if i != pr {
                let factor = rows[i][entering];
                if factor != 0.0 {
                    let (pivot_row_ref, row_i) = if i < pr {
                        let (a, b) = rows.split_at_mut(pr);
                        (&b[0], &mut a[i])
                    } else {
                        let (a, b) = rows.split_at_mut(i);
                        (&a[pr], &mut b[0])
                    };
                    for (x, pv) in row_i.iter_mut().zip(pivot_row_ref) {
                        *x -= factor * pv;
                    }
                    rhs[i] -= factor * rhs[pr];
                    if rhs[i] < 0.0 {
                        rhs[i] = 0.0; // numerical floor; rhs stays feasible
                    }
                }
            }
        }
        let rf = reduced[entering];
        for (r, pv) in reduced.iter_mut().zip(&rows[pr]) {
            *r -= rf * pv;
        }
        basis[pr] = entering;
    }

    let mut x = vec![0.0; n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = rhs[i].max(0.0);
        }
    }
    for v in x.iter_mut() {
        if *v < 1e-12 {
            *v = 0.0;
        }
    }
    let objective = x.iter().sum();
    Ok(LpSolution { objective, x })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_tree_packing_value() {
        // Three columns, each covering two of three unit rows; optimum is
        // x = (1/2, 1/2, 1/2) with value 3/2.
        let lp = PackingLp {
            num_rows: 3,
            rhs: vec![1.0, 1.0, 1.0],
            cols: vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        };
        let sol = maximize_unit_sum(&lp).unwrap();
        assert!((sol.objective - 1.5).abs() < 1e-9);
        let mut usage = [0.0f64; 3];
        for (col, &v) in lp.cols.iter().zip(&sol.x) {
            for &r in col {
                usage[r as usize] += v;
            }
        }
        assert!(usage.iter().all(|&u| u <= 1.0 + 1e-9));
    }

    #[test]
    fn single_column_saturates_smallest_capacity() {
        let lp = PackingLp {
            num_rows: 2,
            rhs: vec![3.0, 2.0],
            cols: vec![vec![0, 1]],
        };
        let sol = maximize_unit_sum(&lp).unwrap();
        assert!((sol.objective - 2.0).abs() < 1e-9);
    }

    #[test]
    fn duplicate_columns_share_capacity() {
        let lp = PackingLp {
            num_rows: 1,
            rhs: vec![5.0],
            cols: vec![vec![0], vec![0], vec![0]],
        };
        let sol = maximize_unit_sum(&lp).unwrap();
        assert!((sol.objective - 5.0).abs() < 1e-9);
    }

    #[test]
    fn zero_capacity_rows_pin_columns_to_zero() {
        let lp = PackingLp {
            num_rows: 2,
            rhs: vec![0.0, 4.0],
            cols: vec![vec![0, 1], vec![1]],
        };
        let sol = maximize_unit_sum(&lp).unwrap();
        assert!((sol.objective - 4.0).abs() < 1e-9);
        assert_eq!(sol.x[0], 0.0);
    }
}
