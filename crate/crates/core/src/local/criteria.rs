//! Leading-monomial criteria on a minimal standard basis of `I(S)`.

use serde::Serialize;

use super::StandardBasisResult;
use crate::error::{Error, Result};
use crate::ideal::{Binomial, Monomial, MonomialOrder, TermOrder};
use crate::limits::Limits;
use crate::semigroup::{homogeneity_of, AffineSemigroup, AperySet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// Pairs `(j, i)`: the extremal variable `z_j` divides `LM(f_i)`.
    pub offending: Vec<(usize, usize)>,
}

/// The tangent cone is Cohen–Macaulay iff no extremal variable
/// `z_1, ..., z_d` divides a leading monomial of the standard basis.
pub fn cm_check(sb: &StandardBasisResult, d: usize) -> CmVerdict {
    let mut offending = Vec::new();
    for (i, lm) in sb.leading_monomials.iter().enumerate() {
        for j in 0..d.min(lm.nvars()) {
            if lm.exponents()[j] > 0 {
                offending.push((j, i));
            }
        }
    }
    offending.sort();
    CmVerdict { cohen_macaulay: offending.is_empty(), offending }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefutationReason {
    NotCohenMacaulay,
    NotHomogeneous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HomogeneityCheck {
    /// `z_j` (0-based `variable`) lies in the support of every
    /// non-homogeneous element of `basis`.
    Verified { variable: Option<usize>, basis: Vec<Binomial>, rewritten: bool },
    Refuted { reason: RefutationReason },
    Inconclusive { basis: Vec<Binomial> },
}

impl HomogeneityCheck {
    pub fn label(&self) -> &'static str {
        match self {
            HomogeneityCheck::Verified { .. } => "verified",
            HomogeneityCheck::Refuted { .. } => "refuted",
            HomogeneityCheck::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// An extremal variable in the support of every non-homogeneous element.
/// `Some(None)` means there are no non-homogeneous elements.
fn common_extremal_variable(basis: &[Binomial], d: usize) -> Option<Option<usize>> {
    let inhomogeneous: Vec<&Binomial> = basis.iter().filter(|b| !b.is_homogeneous()).collect();
    if inhomogeneous.is_empty() {
        return Some(None);
    }
    (0..d)
        .find(|&j| inhomogeneous.iter().all(|b| b.support().contains(&j)))
        .map(Some)
}

/// Divides the tail of `f` by the other elements' leading monomials until
/// no longer possible. Every step moves to a strictly smaller monomial of
/// the same S-degree, so the loop is finite.
fn rewrite_tail(f: &Binomial, others: &[&Binomial]) -> Binomial {
    let order = TermOrder::NegDegRevLex;
    let Some(mut t) = f.tail().cloned() else { return f.clone() };
    while let Some(g) = others
        .iter()
        .find(|g| g.tail().is_some() && g.lead().divides(&t))
    {
        let next: Monomial = t.div(g.lead()).mul(g.tail().expect("filtered"));
        debug_assert_eq!(order.compare(&next, &t), std::cmp::Ordering::Less);
        t = next;
    }
    Binomial::new(f.lead().clone(), t).expect("tail stays below the lead")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportWitness {
    /// Extremal variable in every non-homogeneous element; `None` when all
    /// elements are homogeneous.
    pub variable: Option<usize>,
    pub basis: Vec<Binomial>,
    /// Whether non-homogeneous tails had to be rewritten.
    pub rewritten: bool,
}

/// Looks for a minimal standard basis with an extremal variable in the
/// support of each non-homogeneous element: the computed basis first, then
/// a version with every non-homogeneous tail rewritten against the rest.
pub fn support_condition(sb: &StandardBasisResult, d: usize) -> Option<SupportWitness> {
    if let Some(variable) = common_extremal_variable(&sb.basis, d) {
        return Some(SupportWitness { variable, basis: sb.basis.clone(), rewritten: false });
    }
    let rewritten: Vec<Binomial> = sb
        .basis
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if f.is_homogeneous() {
                return f.clone();
            }
            let others: Vec<&Binomial> =
                sb.basis.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g).collect();
            rewrite_tail(f, &others)
        })
        .collect();
    common_extremal_variable(&rewritten, d)
        .map(|variable| SupportWitness { variable, basis: rewritten, rewritten: true })
}

/// Decides homogeneity of `S` through the standard basis: with a
/// Cohen–Macaulay tangent cone, `S` is homogeneous iff some minimal
/// standard basis has an extremal variable in the support of each of its
/// non-homogeneous elements (searched by [`support_condition`]).
pub fn homogeneity_gb_check(
    s: &AffineSemigroup,
    sb: &StandardBasisResult,
    ap: &AperySet,
) -> Result<HomogeneityCheck> {
    let d = s.dim();
    if !cm_check(sb, d).cohen_macaulay {
        return Ok(HomogeneityCheck::Refuted { reason: RefutationReason::NotCohenMacaulay });
    }
    let definitional = homogeneity_of(ap).homogeneous;
    let found = support_condition(sb, d).map(|w| (w.variable, w.basis, w.rewritten));
    match (found, definitional) {
        (Some((variable, basis, rewritten)), true) => {
            Ok(HomogeneityCheck::Verified { variable, basis, rewritten })
        }
        (Some(_), false) => Err(Error::InvariantViolation(
            "standard basis certifies homogeneity of a semigroup with an inhomogeneous Apéry element"
                .into(),
        )),
        (None, false) => Ok(HomogeneityCheck::Refuted { reason: RefutationReason::NotHomogeneous }),
        (None, true) => Ok(HomogeneityCheck::Inconclusive { basis: sb.basis.clone() }),
    }
}

/// Images of the basis elements under `z_1, ..., z_i ↦ 0`; `None` marks an
/// element mapped to zero.
pub fn project_basis(sb: &StandardBasisResult, i: usize) -> Result<Vec<Option<Binomial>>> {
    for (k, lm) in sb.leading_monomials.iter().enumerate() {
        if let Some(j) = (0..i.min(lm.nvars())).find(|&j| lm.exponents()[j] > 0) {
            return Err(Error::PreconditionViolated(format!(
                "z{} divides the leading monomial {lm} of element {k}",
                j + 1
            )));
        }
    }
    Ok(sb.basis.iter().map(|b| b.kill_first(i)).collect())
}

/// Convenience wrapper running the full pipeline from a semigroup.
pub fn standard_basis_of(s: &AffineSemigroup, limits: &Limits) -> Result<StandardBasisResult> {
    let t = crate::ideal::toric_ideal(s, limits)?;
    super::standard_basis(t.generators(), limits)
}
