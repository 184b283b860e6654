//! Exact Gaussian elimination over a cyclotomic field.

use std::sync::Arc;

use super::cyclotomic::{Cyclotomic, CyclotomicField};

/// Solves `A x = b` where `columns[j]` is the `j`-th column of `A`.
/// Returns `None` unless the solution exists and is unique.
pub fn solve_unique(
    field: &Arc<CyclotomicField>,
    columns: &[Vec<Cyclotomic>],
    rhs: &[Cyclotomic],
) -> Option<Vec<Cyclotomic>> {
    let rows = rhs.len();
    let cols = columns.len();
    // augmented row-major matrix
    let mut m: Vec<Vec<Cyclotomic>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Cyclotomic> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            return None;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].inverse().ok()?;
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=cols {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (col, &r) in pivots.iter().enumerate() {
        x[col] = m[r][cols].clone();
    }
    Some(x)
}
