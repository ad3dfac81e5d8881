use serde::Serialize;

use super::{betti_semigroup, betti_standard_graded_with_grading, BettiTable};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::local::{cm_check, standard_basis, support_condition, StandardBasisResult};
use crate::ideal::toric_ideal;
use crate::semigroup::{apery_set_from_ideal, is_cohen_macaulay_ring, verify_reduction, AffineSemigroup, ReductionCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub ring_cohen_macaulay: bool,
    pub tangent_cone_cohen_macaulay: bool,
    /// Some minimal standard basis has an extremal variable in the support
    /// of every non-homogeneous element.
    pub support_condition: bool,
    pub reduction: ReductionCertificate,
}

impl Hypotheses {
    pub fn all_hold(&self) -> bool {
        self.ring_cohen_macaulay
            && self.tangent_cone_cohen_macaulay
            && self.support_condition
            && self.reduction.is_certified()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    /// Fine graded Betti numbers of `k[S]`.
    pub semigroup: BettiTable,
    /// Betti numbers of the tangent cone `A/I(S)*`, graded by
    /// `(total degree, S-degree)`.
    pub tangent_cone: BettiTable,
    pub hypotheses: Hypotheses,
    pub hypotheses_hold: bool,
    pub equal_totals: bool,
    /// `β_i(gr) >= β_i(k[S])` for every `i`.
    pub inequality_holds: bool,
}

/// Computes both tables and checks them against each other: the tangent
/// cone never has smaller Betti numbers, and under the hypotheses the
/// totals agree. A violation of either is reported as an error.
pub fn betti_compare(s: &AffineSemigroup, n_max: u32, limits: &Limits) -> Result<ComparisonReport> {
    let toric = toric_ideal(s, limits)?;
    let sb = standard_basis(toric.generators(), limits)?;
    let ap = apery_set_from_ideal(s, toric.generators(), limits)?;
    let hypotheses = Hypotheses {
        ring_cohen_macaulay: is_cohen_macaulay_ring(s, &ap),
        tangent_cone_cohen_macaulay: cm_check(&sb, s.dim()).cohen_macaulay,
        support_condition: support_condition(&sb, s.dim()).is_some(),
        reduction: verify_reduction(s, n_max, limits)?,
    };
    compare_tables(s, &sb, hypotheses, limits)
}

pub(crate) fn compare_tables(
    s: &AffineSemigroup,
    sb: &StandardBasisResult,
    hypotheses: Hypotheses,
    limits: &Limits,
) -> Result<ComparisonReport> {
    let semigroup = betti_semigroup(s, limits)?;
    let tangent_cone = betti_standard_graded_with_grading(
        &sb.tangent_cone_generators,
        s.len(),
        Some(s.generators()),
        limits,
    )?;
    let (ts, tg) = (semigroup.totals(), tangent_cone.totals());
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let len = ts.len().max(tg.len());
    let inequality_holds = (0..len).all(|i| at(&tg, i) >= at(&ts, i));
    let equal_totals = ts == tg;
    let hypotheses_hold = hypotheses.all_hold();
    if !inequality_holds {
        return Err(Error::InvariantViolation(format!(
            "tangent cone Betti numbers {tg:?} fall below those of k[S] {ts:?}"
        )));
    }
    if hypotheses_hold && !equal_totals {
        return Err(Error::InvariantViolation(format!(
            "Betti numbers differ ({ts:?} vs {tg:?}) although the hypotheses hold"
        )));
    }
    Ok(ComparisonReport {
        semigroup,
        tangent_cone,
        hypotheses,
        hypotheses_hold,
        equal_totals,
        inequality_holds,
    })
}
