//! The defining ideal `I(S)` of `k[S]`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::groebner::{buchberger, GbStats, IdealBasis};
use super::lattice::lattice_kernel;
use super::{Binomial, Monomial, MonomialOrder, SaturationOrder, TermOrder};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::{AffineSemigroup, Point};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricIdeal {
    /// Minimal generators oriented by the local order, sorted by S-degree.
    pub basis: IdealBasis,
    /// S-degree of each generator.
    pub degrees: Vec<Point>,
}

impl ToricIdeal {
    pub fn generators(&self) -> &[Binomial] {
        &self.basis.binomials
    }

    pub fn len(&self) -> usize {
        self.basis.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.binomials.is_empty()
    }
}

/// Generators of `I(S)`: the lattice ideal of the kernel saturated by every
/// variable in turn.
pub fn toric_generators(s: &AffineSemigroup, limits: &Limits) -> Result<(Vec<Binomial>, GbStats)> {
    let n = s.len();
    let kernel = lattice_kernel(&s.columns())?;
    let mut current: Vec<Binomial> = Vec::new();
    for v in &kernel {
        if let Some(b) = Binomial::from_lattice_vector(v)? {
            current.push(b);
        }
    }
    let weights: Vec<u64> = s.generators().iter().map(Point::coord_sum).collect();
    let mut stats = GbStats::default();
    if current.is_empty() {
        return Ok((current, stats));
    }
    for last in 0..n {
        let order = SaturationOrder { weights: weights.clone(), last };
        let gb = buchberger(&current, &order, limits)?;
        stats.pairs_considered += gb.stats.pairs_considered;
        stats.product_criterion += gb.stats.product_criterion;
        stats.chain_criterion += gb.stats.chain_criterion;
        stats.zero_reductions += gb.stats.zero_reductions;
        current = gb
            .binomials
            .iter()
            .map(|b| b.divide_out_variable(last).oriented(&order))
            .collect();
        current.sort();
        current.dedup();
    }
    Ok((current, stats))
}

/// Connected components of the fiber graph of `b`: factorizations are
/// joined when their supports meet. Each component is sorted by the local
/// order, largest first; components are ordered by their largest element.
pub(crate) fn fiber_components(
    s: &AffineSemigroup,
    b: &Point,
    limits: &Limits,
) -> Result<Vec<Vec<Monomial>>> {
    let order = TermOrder::NegDegRevLex;
    let monomials: Vec<Monomial> = s
        .factorizations_capped(b, limits.max_fiber_size)?
        .into_iter()
        .map(|f| {
            let e = f
                .multiplicities
                .iter()
                .map(|&m| u32::try_from(m).map_err(|_| Error::Overflow("exponent")))
                .collect::<Result<Vec<_>>>()?;
            Ok(Monomial::new(e))
        })
        .collect::<Result<_>>()?;
    let k = monomials.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for i in 0..k {
        for j in i + 1..k {
            if !monomials[i].is_coprime(&monomials[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for (i, m) in monomials.into_iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(m);
    }
    let mut comps: Vec<Vec<Monomial>> = groups.into_values().collect();
    for c in &mut comps {
        c.sort_by(|a, b| order.compare(b, a));
    }
    comps.sort_by(|a, b| order.compare(&b[0], &a[0]));
    Ok(comps)
}

/// Minimal binomial generating set of `I(S)`.
///
/// The minimal generators live in the S-degrees of any generating set. In
/// such a degree `b` the number of minimal generators is one less than the
/// number of connected components of the fiber graph, and a canonical choice
/// joins the largest monomial overall to the largest monomial of each other
/// component (largest for the local order).
pub fn toric_ideal(s: &AffineSemigroup, limits: &Limits) -> Result<ToricIdeal> {
    let (gens, stats) = toric_generators(s, limits)?;
    let columns = s.generators();
    let mut degrees: Vec<Point> = gens
        .iter()
        .map(|g| g.degree_in(columns))
        .collect::<Result<_>>()?;
    degrees.sort_by_key(|p| (p.coord_sum(), p.clone()));
    degrees.dedup();
    let order = TermOrder::NegDegRevLex;
    let mut binomials = Vec::new();
    let mut out_degrees = Vec::new();
    for b in degrees {
        let comps = fiber_components(s, &b, limits)?;
        let top = &comps[0][0];
        let mut here: Vec<Binomial> = comps[1..]
            .iter()
            .map(|c| Binomial::new(top.clone(), c[0].clone()).map(|x| x.oriented(&order)))
            .collect::<Result<_>>()?;
        here.sort_by(|x, y| order.compare(x.tail().unwrap(), y.tail().unwrap()).reverse());
        for h in here {
            if !h.is_balanced(columns)? || !h.has_coprime_terms() {
                return Err(Error::InvariantViolation(format!(
                    "toric generator {h} is not a balanced binomial with coprime terms"
                )));
            }
            binomials.push(h);
            out_degrees.push(b.clone());
        }
    }
    Ok(ToricIdeal {
        basis: IdealBasis {
            binomials,
            order: order.name(),
            reduced: false,
            minimal: true,
            stats,
        },
        degrees: out_degrees,
    })
}
