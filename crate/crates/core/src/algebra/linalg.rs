//! Exact linear algebra over the rationals: just enough row reduction for
//! canonical span bases and for solving small linear systems.

use num_traits::Zero;

use crate::Rat;

/// Reduced row echelon form, in place. Returns the pivot column of each
/// nonzero row, in order.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..ncols {
                    let sub = factor.clone() * rows[r][j].clone();
                    rows[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Solve `A x = b` for one `x` per right-hand side, requiring `A` to have
/// full column rank. Returns `None` if any system is inconsistent or the
/// columns of `A` are dependent.
///
/// `a` is given row-major (`n x m`), each `b` has length `n`; solutions have
/// length `m`.
pub fn solve_full_rank(a: &[Vec<Rat>], bs: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let m = if n == 0 { return None } else { a[0].len() };
    let k = bs.len();
    let mut aug: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = a[i].clone();
        for b in bs {
            row.push(b[i].clone());
        }
        aug.push(row);
    }
    let pivots = rref(&mut aug);
    // Columns 0..m must all be pivots (full column rank) and no pivot may land
    // in the augmented part above row m.
    let struct_pivots: Vec<usize> = pivots.iter().copied().filter(|&c| c < m).collect();
    if struct_pivots.len() != m {
        return None;
    }
    if pivots.iter().any(|&c| c >= m) {
        return None; // inconsistent: a pivot in an augmented column
    }
    let mut sols = vec![vec![Rat::zero(); m]; k];
    for (row_idx, &c) in pivots.iter().enumerate() {
        for (bi, sol) in sols.iter_mut().enumerate() {
            sol[c] = aug[row_idx][m + bi].clone();
        }
    }
    Some(sols)
}
