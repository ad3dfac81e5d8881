//! Exact rational cone membership for small dimensions.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{combinations, determinant, rank};

/// Whether `g` is a nonnegative rational combination of `vs`.
///
/// By Carathéodory it suffices to try linearly independent subsets; each
/// one is solved on a nonsingular square subsystem by Cramer's rule and the
/// solution is then checked against all coordinates.
pub fn in_cone(g: &[i64], vs: &[Vec<i64>]) -> bool {
    if g.iter().all(|&x| x == 0) {
        return true;
    }
    let d = g.len();
    for k in 1..=vs.len().min(d) {
        for subset in combinations(vs.len(), k) {
            let cols: Vec<&Vec<i64>> = subset.iter().map(|&i| &vs[i]).collect();
            let as_rows: Vec<Vec<i64>> = cols.iter().map(|c| c.to_vec()).collect();
            if rank(&as_rows) != k {
                continue;
            }
            if solves_nonnegatively(g, &cols) {
                return true;
            }
        }
    }
    false
}

fn solves_nonnegatively(g: &[i64], cols: &[&Vec<i64>]) -> bool {
    let k = cols.len();
    for rows in combinations(g.len(), k) {
        let square = |replace: Option<usize>| -> Vec<Vec<i64>> {
            rows.iter()
                .map(|&r| {
                    (0..k)
                        .map(|j| if Some(j) == replace { g[r] } else { cols[j][r] })
                        .collect()
                })
                .collect()
        };
        let det = determinant(&square(None));
        if det.is_zero() {
            continue;
        }
        let numerators: Vec<BigInt> = (0..k).map(|j| determinant(&square(Some(j)))).collect();
        if numerators.iter().any(|n| (n * &det).is_negative()) {
            return false;
        }
        // the square system pins the solution; confirm it on every row
        return (0..g.len()).all(|r| {
            let lhs: BigInt = (0..k).map(|j| &numerators[j] * BigInt::from(cols[j][r])).sum();
            lhs == &det * BigInt::from(g[r])
        });
    }
    false
}
