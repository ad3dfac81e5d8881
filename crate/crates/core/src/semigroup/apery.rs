use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::{AffineSemigroup, Point};
use crate::error::{Error, Result};
use crate::ideal::{buchberger, standard_monomials, toric_ideal, Binomial, Monomial, QuotientBasis, TermOrder};
use crate::limits::Limits;
use crate::linalg::{determinant, gcd_of_maximal_minors};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperyElement {
    pub point: Point,
    /// The standard monomial of `I(S) + (z_1, ..., z_d)` mapping to `point`.
    pub monomial: Monomial,
    /// Lengths of all factorizations of `point`.
    pub lengths: Vec<u64>,
}

/// `Ap(S, E) = {s ∈ S : s - a_i ∉ S for every extremal ray a_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    /// Sorted by point.
    pub elements: Vec<AperyElement>,
}

impl AperySet {
    pub fn points(&self) -> Vec<Point> {
        self.elements.iter().map(|e| e.point.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest coordinate sum of an element.
    pub fn max_coord_sum(&self) -> u64 {
        self.elements.iter().map(|e| e.point.coord_sum()).max().unwrap_or(0)
    }

    /// Largest total degree of a standard monomial.
    pub fn max_monomial_degree(&self) -> u64 {
        self.elements.iter().map(|e| e.monomial.degree()).max().unwrap_or(0)
    }

    /// First element with more than one factorization length.
    pub fn inhomogeneous_witness(&self) -> Option<&AperyElement> {
        self.elements.iter().find(|e| e.lengths.len() > 1)
    }
}

/// Apéry set from the standard monomials of a degrevlex Gröbner basis of
/// `I(S) + (z_1, ..., z_d)`. Distinct standard monomials have distinct
/// S-degrees, since two monomials of equal degree differ by an element of
/// `I(S)`.
pub fn apery_set(s: &AffineSemigroup, limits: &Limits) -> Result<AperySet> {
    let toric = toric_ideal(s, limits)?;
    apery_set_from_ideal(s, toric.generators(), limits)
}

/// As [`apery_set`], reusing generators of `I(S)`.
pub fn apery_set_from_ideal(
    s: &AffineSemigroup,
    ideal: &[Binomial],
    limits: &Limits,
) -> Result<AperySet> {
    let n = s.len();
    let mut input = ideal.to_vec();
    input.extend((0..s.dim()).map(|i| Binomial::monomial(Monomial::variable(n, i))));
    let gb = buchberger(&input, &TermOrder::DegRevLex, limits)?;
    let std = match standard_monomials(&gb.leading_monomials(), n, limits.max_standard_monomials)? {
        QuotientBasis::Finite(std) => std,
        QuotientBasis::Infinite { free_variable } => {
            return Err(Error::NotSimplicial(format!(
                "the Apéry set is infinite (z{} is free modulo the extremal rays)",
                free_variable + 1
            )))
        }
    };
    let mut elements = Vec::with_capacity(std.len());
    for m in std {
        let point = m.evaluate(s.generators())?;
        let lengths: Vec<u64> = s
            .factorizations_capped(&point, limits.max_fiber_size)?
            .into_iter()
            .map(|f| f.length)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        elements.push(AperyElement { point, monomial: m, lengths });
    }
    elements.sort_by(|a, b| a.point.cmp(&b.point));
    if elements.windows(2).any(|w| w[0].point == w[1].point) {
        return Err(Error::InvariantViolation(
            "two standard monomials share an S-degree".into(),
        ));
    }
    Ok(AperySet { elements })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneityVerdict {
    pub homogeneous: bool,
    /// An Apéry element with at least two factorization lengths.
    pub witness: Option<AperyElement>,
}

/// `S` is homogeneous when every Apéry element has a single length.
pub fn is_homogeneous_semigroup(s: &AffineSemigroup, limits: &Limits) -> Result<HomogeneityVerdict> {
    Ok(homogeneity_of(&apery_set(s, limits)?))
}

pub fn homogeneity_of(ap: &AperySet) -> HomogeneityVerdict {
    let witness = ap.inhomogeneous_witness().cloned();
    HomogeneityVerdict { homogeneous: witness.is_none(), witness }
}

/// `k[S]` is Cohen–Macaulay iff `|Ap(S, E)|` equals the index of the group
/// generated by the extremal rays in the group of `S`.
pub fn is_cohen_macaulay_ring(s: &AffineSemigroup, ap: &AperySet) -> bool {
    let rays: Vec<Vec<i64>> = s.extremal_rays().iter().map(Point::to_i64).collect();
    let rows: Vec<Vec<i64>> = (0..s.dim()).map(|r| rays.iter().map(|c| c[r]).collect()).collect();
    let det = determinant(&rows).abs();
    let g = gcd_of_maximal_minors(&s.columns(), s.dim());
    BigInt::from(ap.len()) * g == det
}
