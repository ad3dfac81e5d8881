//! Exact integer linear algebra: ranks, determinants and maximal minors.
//!
//! Everything works over the integers with fraction-free elimination. The
//! fast path runs on `i128` with checked arithmetic and falls back to
//! `BigInt` when an intermediate value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, Zero};

trait ExactInt: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> ExactInt for T {}

fn row_content<T: ExactInt>(row: &[T]) -> T {
    row.iter().fold(T::zero(), |g, x| g.gcd(x))
}

fn eliminate<T: ExactInt>(mut rows: Vec<Vec<T>>, ncols: usize) -> Option<usize> {
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pv = pivot_row[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[col]);
            let a = pv.clone() / g.clone();
            let b = row[col].clone() / g;
            for c in col..ncols {
                let lhs = row[c].checked_mul(&a)?;
                let rhs = pivot_row[c].checked_mul(&b)?;
                row[c] = lhs.checked_sub(&rhs)?;
            }
            let content = row_content(&row[col..]);
            if !content.is_zero() && !content.is_one() {
                for x in row[col..].iter_mut() {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(r) = eliminate(small, ncols) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    eliminate(big, ncols).expect("BigInt arithmetic cannot overflow")
}

/// Determinant of a square integer matrix (Bareiss).
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant needs a square matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// gcd of all maximal minors of a `d x n` matrix with `n >= d`; zero when the
/// rank is below `d`.
pub fn gcd_of_maximal_minors(columns: &[Vec<i64>], d: usize) -> BigInt {
    let mut g = BigInt::zero();
    for subset in combinations(columns.len(), d) {
        let m: Vec<Vec<i64>> = (0..d)
            .map(|row| subset.iter().map(|&c| columns[c][row]).collect())
            .collect();
        g = g.gcd(&determinant(&m));
    }
    g
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let mut i = k;
        while i > 0 && current[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        current[i - 1] += 1;
        for j in i..k {
            current[j] = current[j - 1] + 1;
        }
    }
}
