//! Exact row reduction: rank profiles of series expansions, null spaces,
//! and valuations of determinants over truncated power series.

use crate::error::{invalid, Error, Result};
use crate::field::Field;

use super::series::Series;

/// Pivot columns of a reduced row echelon form, plus the echelon rows.
#[derive(Clone, Debug, PartialEq)]
pub struct PivotProfile<E> {
    pub pivots: Vec<usize>,
    /// Row `i` has its first nonzero entry (equal to one) in column `pivots[i]`.
    pub echelon: Vec<Vec<E>>,
}

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
/// Zero rows are moved to the bottom.
pub fn rref<F: Field>(f: &F, m: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.sub(x, &f.mul(&factor, p));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut m = m.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace<F: Field>(f: &F, m: &[Vec<F::Elem>], cols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = m.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[row][fc]);
            }
            v
        })
        .collect()
}

/// Column rank profile of the coefficient matrix of `rows`, restricted to
/// columns `0..=max_order`.
///
/// Every row must be regular (nonnegative valuation). Fails with
/// [`Error::InsufficientPrecision`] when the known coefficients do not
/// determine all pivots.
pub fn pivot_orders<F: Field>(f: &F, rows: &[Series<F::Elem>], max_order: usize) -> Result<PivotProfile<F::Elem>> {
    if rows.iter().any(|s| s.valuation().is_some_and(|v| v < 0)) {
        return Err(invalid("pivot orders need regular rows"));
    }
    let min_prec = rows.iter().map(|s| s.precision()).min().unwrap_or(i64::MAX);
    let wanted = max_order as i64 + 1;
    let cols = wanted.min(min_prec).max(0) as usize;
    let mut m: Vec<Vec<F::Elem>> =
        rows.iter().map(|s| (0..cols as i64).map(|n| s.coeff(f, n).unwrap()).collect()).collect();
    let pivots = rref(f, &mut m);
    if pivots.len() < rows.len() && (cols as i64) < wanted {
        return Err(Error::InsufficientPrecision { needed: wanted, available: min_prec });
    }
    m.truncate(pivots.len());
    Ok(PivotProfile { pivots, echelon: m })
}

/// Valuation of the determinant of a square matrix of series.
///
/// Elimination always pivots on an entry of least valuation, so every
/// quotient is integral; the result is the sum of pivot valuations.
pub fn det_valuation<F: Field>(f: &F, m: &[Vec<Series<F::Elem>>]) -> Result<i64> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(invalid("determinant of a non-square matrix"));
    }
    let mut a: Vec<Vec<Series<F::Elem>>> = m.to_vec();
    let mut total = 0i64;
    for step in 0..n {
        let mut best: Option<(usize, usize, i64)> = None;
        let mut least_unknown = i64::MAX;
        for (r, row) in a.iter().enumerate().skip(step) {
            for (c, e) in row.iter().enumerate().skip(step) {
                match e.valuation() {
                    Some(v) if best.is_none_or(|b| v < b.2) => best = Some((r, c, v)),
                    Some(_) => {}
                    None => least_unknown = least_unknown.min(e.precision()),
                }
            }
        }
        let Some((r, c, v)) = best else {
            return Err(Error::InsufficientPrecision { needed: least_unknown + 1, available: least_unknown });
        };
        if least_unknown < v {
            return Err(Error::InsufficientPrecision { needed: v, available: least_unknown });
        }
        a.swap(step, r);
        for row in a.iter_mut() {
            row.swap(step, c);
        }
        total += v;
        let pinv = a[step][step].inv(f)?;
        let pivot_row = a[step].clone();
        for row in a.iter_mut().skip(step + 1) {
            let factor = row[step].mul(f, &pinv);
            for c in step + 1..n {
                row[c] = row[c].sub(f, &factor.mul(f, &pivot_row[c]));
            }
        }
    }
    Ok(total)
}
