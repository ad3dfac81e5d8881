use crate::error::{Error, Result};

/// Basis of the integer kernel `{u ∈ ℤ^n : Σ u_j c_j = 0}` of the matrix
/// with columns `columns` (each of length `d`).
///
/// Column-style Hermite reduction on `[A; I]`: unimodular column operations
/// bring the top block into echelon form, and the columns whose top block
/// vanished carry a kernel basis in the bottom block.
pub fn lattice_kernel(columns: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = columns.len();
    let d = columns.first().map_or(0, Vec::len);
    let overflow = || Error::Overflow("lattice kernel");
    // cols[j] = (a_j, e_j)
    let mut cols: Vec<Vec<i128>> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut v: Vec<i128> = c.iter().map(|&x| x as i128).collect();
            v.extend((0..n).map(|k| i128::from(k == j)));
            v
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    for row in 0..d {
        loop {
            let mut nonzero: Vec<usize> =
                active.iter().copied().filter(|&j| cols[j][row] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&p) = nonzero.first() {
                    active.retain(|&j| j != p);
                }
                break;
            }
            nonzero.sort_by_key(|&j| (cols[j][row].unsigned_abs(), j));
            let pivot = cols[nonzero[0]].clone();
            for &j in &nonzero[1..] {
                let q = cols[j][row].div_euclid(pivot[row]);
                for (x, &y) in cols[j].iter_mut().zip(&pivot) {
                    let t = y.checked_mul(q).ok_or_else(overflow)?;
                    *x = x.checked_sub(t).ok_or_else(overflow)?;
                }
            }
        }
    }
    let mut basis = Vec::with_capacity(active.len());
    for j in active {
        debug_assert!(cols[j][..d].iter().all(|&x| x == 0));
        let v = cols[j][d..]
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| overflow()))
            .collect::<Result<Vec<_>>>()?;
        basis.push(v);
    }
    Ok(basis)
}
