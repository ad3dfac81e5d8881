//! Simplicial affine semigroups and their combinatorics.

mod apery;
mod cone;
mod obstruction;
mod point;

use std::collections::BTreeSet;

use serde::Serialize;

pub use apery::{
    apery_set, apery_set_from_ideal, homogeneity_of, is_cohen_macaulay_ring, is_homogeneous_semigroup,
    AperyElement, AperySet, HomogeneityVerdict,
};
pub use cone::in_cone;
pub use obstruction::{
    default_degree_bound, order_obstructions, verify_reduction, ObstructionWitness,
    ReductionCertificate,
};
pub use point::Point;

use crate::error::{Error, Result};
use crate::linalg::rank;

/// Largest coordinate accepted in a generator; keeps every intermediate
/// determinant and lattice computation comfortably inside `i128`.
pub const MAX_COORDINATE: u64 = 1 << 31;

/// A semigroup `S ⊆ ℕ^d` given by a minimal generating set whose first `d`
/// members span the extremal rays of its cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<Point>,
    extremal_ray_count: usize,
    #[serde(skip)]
    search_order: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Factorization {
    pub multiplicities: Vec<u64>,
    pub length: u64,
}

impl Factorization {
    pub fn new(multiplicities: Vec<u64>) -> Self {
        let length = multiplicities.iter().sum();
        Factorization { multiplicities, length }
    }
}

fn validate(generators: &[Point], dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for (index, g) in generators.iter().enumerate() {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch { index, expected: dim, found: g.dim() });
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator { index });
        }
        if g.coords().iter().any(|&c| c > MAX_COORDINATE) {
            return Err(Error::InvalidArgument(format!(
                "generator {index} has a coordinate above {MAX_COORDINATE}"
            )));
        }
        if let Some(first) = generators[..index].iter().position(|h| h == g) {
            return Err(Error::DuplicateGenerator { first, second: index });
        }
    }
    for index in 0..generators.len() {
        let others: Vec<Point> = generators
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != index)
            .map(|(_, g)| g.clone())
            .collect();
        if Search::new(&others).contains(&generators[index]) {
            return Err(Error::NonMinimalGenerator { index });
        }
    }
    Ok(())
}

fn parallel(a: &Point, b: &Point) -> bool {
    rank(&[a.to_i64(), b.to_i64()]) == 1
}

/// Indices of generators spanning extremal rays of `cone(generators)`: one
/// per ray, the one with the smallest coordinate sum.
fn extremal_indices(generators: &[Point]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        let same_ray: Vec<usize> =
            (0..generators.len()).filter(|&j| parallel(g, &generators[j])).collect();
        let smallest = *same_ray
            .iter()
            .min_by_key(|&&j| (generators[j].coord_sum(), j))
            .expect("a generator is parallel to itself");
        if smallest != i {
            continue;
        }
        let off_ray: Vec<Vec<i64>> = generators
            .iter()
            .enumerate()
            .filter(|(j, _)| !same_ray.contains(j))
            .map(|(_, h)| h.to_i64())
            .collect();
        if !in_cone(&g.to_i64(), &off_ray) {
            out.push(i);
        }
    }
    out
}

/// Validates `generators`, finds the extremal rays of their cone and returns
/// the semigroup with the rays first (each group keeps its input order).
pub fn detect_extremal_rays(generators: Vec<Point>, dim: usize) -> Result<AffineSemigroup> {
    validate(&generators, dim)?;
    let columns: Vec<Vec<i64>> = generators.iter().map(Point::to_i64).collect();
    let r = rank(&columns);
    if r < dim {
        return Err(Error::NotSimplicial(format!("the cone has dimension {r} < {dim}")));
    }
    let rays = extremal_indices(&generators);
    if rays.len() != dim {
        return Err(Error::NotSimplicial(format!(
            "the cone has {} extremal rays in dimension {dim}",
            rays.len()
        )));
    }
    let mut ordered: Vec<Point> = rays.iter().map(|&i| generators[i].clone()).collect();
    ordered.extend(
        generators
            .iter()
            .enumerate()
            .filter(|(i, _)| !rays.contains(i))
            .map(|(_, g)| g.clone()),
    );
    Ok(AffineSemigroup::assemble(dim, ordered))
}

impl AffineSemigroup {
    fn assemble(dim: usize, generators: Vec<Point>) -> Self {
        let search_order = Search::order_for(&generators);
        AffineSemigroup { dim, generators, extremal_ray_count: dim, search_order }
    }

    /// Same as [`detect_extremal_rays`].
    pub fn new(generators: Vec<Point>, dim: usize) -> Result<Self> {
        detect_extremal_rays(generators, dim)
    }

    /// Builds a semigroup whose generator order is kept verbatim; the first
    /// `dim` generators must be exactly the extremal rays.
    pub fn with_extremal_rays(generators: Vec<Point>, dim: usize) -> Result<Self> {
        let detected = detect_extremal_rays(generators.clone(), dim)?;
        let expected: BTreeSet<&Point> = generators[..dim].iter().collect();
        let found: BTreeSet<&Point> = detected.extremal_rays().iter().collect();
        if expected != found {
            return Err(Error::PreconditionViolated(
                "the leading generators are not the extremal rays".into(),
            ));
        }
        Ok(AffineSemigroup::assemble(dim, generators))
    }

    /// Convenience constructor for numerical semigroups `⟨m_1, ..., m_k⟩`.
    pub fn numerical(generators: &[u64]) -> Result<Self> {
        detect_extremal_rays(generators.iter().map(|&g| Point::new(vec![g])).collect(), 1)
    }

    /// `ℕ^d`, generated by the unit vectors.
    pub fn free(dim: usize) -> Result<Self> {
        detect_extremal_rays((0..dim).map(|i| Point::unit(dim, i)).collect(), dim)
    }

    /// Canonical form: extremal rays sorted, then the remaining generators
    /// sorted. Two generator lists describe the same semigroup iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> AffineSemigroup {
        let mut rays = self.extremal_rays().to_vec();
        let mut rest = self.generators[self.dim..].to_vec();
        rays.sort();
        rest.sort();
        rays.extend(rest);
        AffineSemigroup::assemble(self.dim, rays)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Point {
        &self.generators[i]
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of non-extremal generators, the codimension of `k[S]`.
    pub fn codimension(&self) -> usize {
        self.generators.len() - self.dim
    }

    pub fn extremal_ray_count(&self) -> usize {
        self.extremal_ray_count
    }

    pub fn extremal_rays(&self) -> &[Point] {
        &self.generators[..self.dim]
    }

    /// Generators as `i64` columns of the `d × n` generator matrix.
    pub fn columns(&self) -> Vec<Vec<i64>> {
        self.generators.iter().map(Point::to_i64).collect()
    }

    /// Generators as a numeric list when `d = 1`.
    pub fn numerical_generators(&self) -> Result<Vec<u64>> {
        if self.dim != 1 {
            return Err(Error::NotNumerical(format!("dimension is {}", self.dim)));
        }
        Ok(self.generators.iter().map(|g| g.coords()[0]).collect())
    }

    fn search(&self) -> Search<'_> {
        Search::with_order(&self.generators, self.search_order.clone())
    }

    fn check_dim(&self, v: &Point) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::LengthMismatch(v.dim(), self.dim));
        }
        Ok(())
    }

    pub fn contains(&self, v: &Point) -> bool {
        v.dim() == self.dim && self.search().contains(v)
    }

    /// Every factorization of `v`, sorted.
    pub fn factorizations(&self, v: &Point) -> Result<Vec<Factorization>> {
        self.factorizations_capped(v, usize::MAX)
    }

    /// As [`Self::factorizations`], failing once more than `cap` are found.
    pub fn factorizations_capped(&self, v: &Point, cap: usize) -> Result<Vec<Factorization>> {
        self.check_dim(v)?;
        let mut out = Vec::new();
        if !self.search().all(v, cap, &mut out) {
            return Err(Error::resource("factorizations in one fiber", cap));
        }
        if out.is_empty() {
            return Err(Error::NotInSemigroup(v.to_string()));
        }
        out.sort();
        Ok(out)
    }

    pub fn length_set(&self, v: &Point) -> Result<BTreeSet<u64>> {
        Ok(self.factorizations(v)?.into_iter().map(|f| f.length).collect())
    }

    /// Maximal factorization length of `v`.
    pub fn order(&self, v: &Point) -> Result<u64> {
        self.check_dim(v)?;
        self.search().max_length(v).ok_or_else(|| Error::NotInSemigroup(v.to_string()))
    }

    /// `Σ m_i a_i`.
    pub fn evaluate(&self, multiplicities: &[u64]) -> Result<Point> {
        if multiplicities.len() != self.len() {
            return Err(Error::LengthMismatch(multiplicities.len(), self.len()));
        }
        let mut acc = Point::zero(self.dim);
        for (g, &m) in self.generators.iter().zip(multiplicities) {
            acc = g
                .checked_scale(m)
                .and_then(|x| acc.checked_add(&x))
                .ok_or(Error::Overflow("semigroup element"))?;
        }
        Ok(acc)
    }
}

/// Depth-first search over generator multiplicities. Generators are visited
/// by decreasing coordinate sum; each multiplicity is bounded by the
/// coordinate-wise quotient of what remains.
struct Search<'a> {
    gens: &'a [Point],
    order: Vec<usize>,
    /// `support_suffix[k]`: coordinates reachable by `order[k..]`.
    support_suffix: Vec<Vec<bool>>,
    /// `min_sum_suffix[k]`: smallest coordinate sum among `order[k..]`.
    min_sum_suffix: Vec<u64>,
}

impl<'a> Search<'a> {
    fn order_for(gens: &[Point]) -> Vec<usize> {
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by(|&a, &b| {
            gens[b].coord_sum().cmp(&gens[a].coord_sum()).then_with(|| a.cmp(&b))
        });
        order
    }

    fn new(gens: &'a [Point]) -> Self {
        Self::with_order(gens, Self::order_for(gens))
    }

    fn with_order(gens: &'a [Point], order: Vec<usize>) -> Self {
        let dim = gens.first().map_or(0, Point::dim);
        let mut support_suffix = vec![vec![false; dim]; order.len() + 1];
        let mut min_sum_suffix = vec![u64::MAX; order.len() + 1];
        for k in (0..order.len()).rev() {
            let g = &gens[order[k]];
            support_suffix[k] = support_suffix[k + 1]
                .iter()
                .zip(g.coords())
                .map(|(&s, &c)| s || c > 0)
                .collect();
            min_sum_suffix[k] = min_sum_suffix[k + 1].min(g.coord_sum());
        }
        Search { gens, order, support_suffix, min_sum_suffix }
    }

    fn bound(g: &Point, rem: &[u64]) -> u64 {
        g.coords()
            .iter()
            .zip(rem)
            .filter(|(&a, _)| a > 0)
            .map(|(&a, &r)| r / a)
            .min()
            .unwrap_or(0)
    }

    fn reachable(&self, k: usize, rem: &[u64]) -> bool {
        rem.iter().zip(&self.support_suffix[k]).all(|(&r, &s)| r == 0 || s)
    }

    fn contains(&self, v: &Point) -> bool {
        let mut rem = v.coords().to_vec();
        self.contains_rec(0, &mut rem)
    }

    fn contains_rec(&self, k: usize, rem: &mut Vec<u64>) -> bool {
        if rem.iter().all(|&r| r == 0) {
            return true;
        }
        if k == self.order.len() || !self.reachable(k, rem) {
            return false;
        }
        let g = &self.gens[self.order[k]];
        let top = Self::bound(g, rem);
        for r in (0..=top).rev() {
            for (x, &a) in rem.iter_mut().zip(g.coords()) {
                *x -= a * r;
            }
            let found = self.contains_rec(k + 1, rem);
            for (x, &a) in rem.iter_mut().zip(g.coords()) {
                *x += a * r;
            }
            if found {
                return true;
            }
        }
        false
    }

    /// Collects every factorization; `false` if more than `cap` exist.
    fn all(&self, v: &Point, cap: usize, out: &mut Vec<Factorization>) -> bool {
        let mut rem = v.coords().to_vec();
        let mut mult = vec![0u64; self.gens.len()];
        self.all_rec(0, &mut rem, &mut mult, cap, out)
    }

    fn all_rec(
        &self,
        k: usize,
        rem: &mut Vec<u64>,
        mult: &mut Vec<u64>,
        cap: usize,
        out: &mut Vec<Factorization>,
    ) -> bool {
        if rem.iter().all(|&r| r == 0) {
            if out.len() >= cap {
                return false;
            }
            out.push(Factorization::new(mult.clone()));
            return true;
        }
        if k == self.order.len() || !self.reachable(k, rem) {
            return true;
        }
        let idx = self.order[k];
        let g = &self.gens[idx];
        let top = Self::bound(g, rem);
        for r in (0..=top).rev() {
            for (x, &a) in rem.iter_mut().zip(g.coords()) {
                *x -= a * r;
            }
            mult[idx] = r;
            let ok = self.all_rec(k + 1, rem, mult, cap, out);
            for (x, &a) in rem.iter_mut().zip(g.coords()) {
                *x += a * r;
            }
            mult[idx] = 0;
            if !ok {
                return false;
            }
        }
        true
    }

    /// Maximal factorization length by branch and bound.
    fn max_length(&self, v: &Point) -> Option<u64> {
        let mut rem = v.coords().to_vec();
        let mut best = None;
        self.max_rec(0, &mut rem, 0, &mut best);
        best
    }

    fn max_rec(&self, k: usize, rem: &mut Vec<u64>, len: u64, best: &mut Option<u64>) {
        let left: u64 = rem.iter().sum();
        if left == 0 {
            if best.is_none_or(|b| len > b) {
                *best = Some(len);
            }
            return;
        }
        if k == self.order.len() || !self.reachable(k, rem) {
            return;
        }
        if let Some(b) = *best {
            if len + left / self.min_sum_suffix[k] <= b {
                return;
            }
        }
        let g = &self.gens[self.order[k]];
        let top = Self::bound(g, rem);
        // few copies of large generators leave room for long factorizations
        for r in 0..=top {
            for (x, &a) in rem.iter_mut().zip(g.coords()) {
                *x -= a * r;
            }
            self.max_rec(k + 1, rem, len + r, best);
            for (x, &a) in rem.iter_mut().zip(g.coords()) {
                *x += a * r;
            }
        }
    }
}
