//! Order obstructions and bounded reduction certificates.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{AffineSemigroup, AperySet, Point};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `b ∈ S` and an extremal ray `a_i` with `ord(b + a_i) > ord(b) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ObstructionWitness {
    pub b: Point,
    pub i: usize,
    pub ord_b: u64,
    pub ord_b_plus: u64,
}

/// Elements of `S` with coordinate sum at most `limit`, sorted by
/// coordinate sum, each with its order.
fn orders_up_to(s: &AffineSemigroup, limit: u64, cap: usize) -> Result<Vec<(Point, u64)>> {
    let mut by_sum: Vec<Point> = vec![Point::zero(s.dim())];
    let mut seen: BTreeSet<Point> = by_sum.iter().cloned().collect();
    let mut frontier = 0;
    while frontier < by_sum.len() {
        let v = by_sum[frontier].clone();
        frontier += 1;
        for g in s.generators() {
            let w = v.checked_add(g).ok_or(Error::Overflow("semigroup element"))?;
            if w.coord_sum() <= limit && seen.insert(w.clone()) {
                by_sum.push(w);
                if by_sum.len() > cap {
                    return Err(Error::resource("semigroup elements below the degree bound", cap));
                }
            }
        }
    }
    by_sum.sort_by_key(|p| (p.coord_sum(), p.clone()));
    let mut ord: HashMap<Point, u64> = HashMap::with_capacity(by_sum.len());
    let mut out = Vec::with_capacity(by_sum.len());
    for v in by_sum {
        let o = s
            .generators()
            .iter()
            .filter_map(|g| v.checked_sub(g))
            .filter_map(|w| ord.get(&w).map(|&x| x + 1))
            .max()
            .unwrap_or(0);
        ord.insert(v.clone(), o);
        out.push((v, o));
    }
    Ok(out)
}

/// All obstructions `b` with coordinate sum at most `degree_bound`, sorted
/// by `(coordinate sum, b, i)`.
pub fn order_obstructions(
    s: &AffineSemigroup,
    degree_bound: u64,
    limits: &Limits,
) -> Result<Vec<ObstructionWitness>> {
    let reach = s.extremal_rays().iter().map(Point::coord_sum).max().unwrap_or(0);
    let table = orders_up_to(s, degree_bound + reach, limits.max_fiber_size)?;
    let ord: HashMap<&Point, u64> = table.iter().map(|(p, o)| (p, *o)).collect();
    let mut out = Vec::new();
    for (b, ob) in table.iter().filter(|(b, _)| b.coord_sum() <= degree_bound) {
        for (i, a) in s.extremal_rays().iter().enumerate() {
            let c = b.checked_add(a).ok_or(Error::Overflow("semigroup element"))?;
            let oc = ord[&c];
            if oc > ob + 1 {
                out.push(ObstructionWitness { b: b.clone(), i, ord_b: *ob, ord_b_plus: oc });
            }
        }
    }
    Ok(out)
}

/// Heuristic search bound for [`order_obstructions`]: twice the largest
/// coordinate sum of an Apéry element plus the coordinate sums of the
/// extremal rays.
pub fn default_degree_bound(s: &AffineSemigroup, ap: &AperySet) -> u64 {
    2 * ap.max_coord_sum() + s.extremal_rays().iter().map(Point::coord_sum).sum::<u64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReductionCertificate {
    /// `(n+1)M = ∪_i (a_i + nM)` holds for this `n`.
    Certified { n: u32 },
    Unresolved { n_max: u32 },
}

impl ReductionCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, ReductionCertificate::Certified { .. })
    }
}

/// Smallest `n` in `1..=n_max` for which every sum of `n + 1` generators is
/// `a_i + (an element of order at least n)` for some extremal ray `a_i`,
/// i.e. the monomial ideal generated by the extremal rays is a reduction of
/// the maximal ideal with reduction number at most `n`.
pub fn verify_reduction(s: &AffineSemigroup, n_max: u32, limits: &Limits) -> Result<ReductionCertificate> {
    let mut order_memo: HashMap<Point, Option<u64>> = HashMap::new();
    let mut order_of = |p: &Point| -> Option<u64> {
        *order_memo.entry(p.clone()).or_insert_with(|| s.order(p).ok())
    };
    let mut level: BTreeSet<Point> = s.generators().iter().cloned().collect();
    for n in 1..=n_max {
        let mut next = BTreeSet::new();
        for v in &level {
            for g in s.generators() {
                next.insert(v.checked_add(g).ok_or(Error::Overflow("semigroup element"))?);
                if next.len() > limits.max_fiber_size {
                    return Err(Error::resource("sums of generators", limits.max_fiber_size));
                }
            }
        }
        let ok = next.iter().all(|v| {
            s.extremal_rays().iter().any(|a| {
                v.checked_sub(a)
                    .and_then(|w| order_of(&w))
                    .is_some_and(|o| o >= u64::from(n))
            })
        });
        if ok {
            return Ok(ReductionCertificate::Certified { n });
        }
        level = next;
    }
    Ok(ReductionCertificate::Unresolved { n_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::apery_set;

    fn pts(v: &[&[u64]]) -> Vec<Point> {
        v.iter().map(|c| Point::new(c.to_vec())).collect()
    }

    #[test]
    fn cohen_macaulay_examples_have_no_obstructions() {
        let l = Limits::default();
        let n = AffineSemigroup::numerical(&[4, 6, 9]).unwrap();
        assert!(order_obstructions(&n, 40, &l).unwrap().is_empty());
        let s = AffineSemigroup::new(pts(&[&[0, 2], &[2, 1], &[0, 3], &[1, 2]]), 2).unwrap();
        assert!(order_obstructions(&s, 20, &l).unwrap().is_empty());
        let ap = apery_set(&s, &l).unwrap();
        assert_eq!(default_degree_bound(&s, &ap), 2 * 6 + 2 + 3);
    }

    #[test]
    fn reduction_certificates() {
        let l = Limits::default();
        let free = AffineSemigroup::free(2).unwrap();
        assert_eq!(verify_reduction(&free, 3, &l).unwrap(), ReductionCertificate::Certified { n: 1 });
        let n = AffineSemigroup::numerical(&[4, 6, 9]).unwrap();
        assert!(verify_reduction(&n, 6, &l).unwrap().is_certified());
        let s = AffineSemigroup::new(pts(&[&[0, 2], &[2, 1], &[0, 3], &[1, 2]]), 2).unwrap();
        assert!(verify_reduction(&s, 6, &l).unwrap().is_certified());
    }
}
