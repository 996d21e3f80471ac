//! Dense exact linear algebra over the rationals.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::Coeff;

/// Row-echelon form in place; returns the rank.
pub fn row_reduce(rows: &mut [Vec<Coeff>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in &mut rows[rank][col..ncols] {
            *x = &*x * &inv;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row[col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *x -= y * &f;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m)
}
