//! Nice extensions `S_b = λS ∪ {μb}`, complete intersections, and the
//! geometric-sequence family with its projective closures.

mod geometric;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use geometric::{
    geometric_corpus, geometric_semigroup, projective_closure, GeometricInstance,
    ProjectiveClosure,
};

use crate::betti::{betti_semigroup, betti_standard_graded_with_grading};
use crate::error::{Error, Result};
use crate::ideal::{
    buchberger, toric_ideal, Binomial, Monomial, TermOrder,
};
use crate::limits::Limits;
use crate::local::{cm_check, standard_basis};
use crate::semigroup::{AffineSemigroup, Point};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NiceExtension {
    pub base: AffineSemigroup,
    pub b: Point,
    pub lambda: u64,
    pub mu: u64,
    /// The chosen factorization of `b` over the base generators.
    pub alpha: Vec<u64>,
    /// Generators `λa_1, ..., λa_n, μb`, extremal rays first.
    pub result: AffineSemigroup,
    /// `y^λ - z^{μα}` with `y` the last variable.
    pub relation: Binomial,
}

/// One step of an extension sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionStep {
    pub b: Vec<u64>,
    pub lambda: u64,
    pub mu: u64,
    pub alpha: Vec<u64>,
}

fn exponent(x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Overflow("exponent"))
}

/// Builds the nice extension of `s` by `b = Σ α_i a_i`. Requires
/// `gcd(λ, μ) = 1` and `λ <= Σ α_i`; the new generating set must be
/// minimal with extremal rays `λa_1, ..., λa_d`.
pub fn nice_extension(
    s: &AffineSemigroup,
    b: &Point,
    lambda: u64,
    mu: u64,
    alpha: &[u64],
) -> Result<NiceExtension> {
    if lambda == 0 || mu == 0 {
        return Err(Error::InvalidArgument("λ and μ must be positive".into()));
    }
    if lambda.gcd(&mu) != 1 {
        return Err(Error::GcdViolation(lambda, mu));
    }
    if alpha.len() != s.len() {
        return Err(Error::NotInSpan(format!(
            "factorization has {} entries for {} generators",
            alpha.len(),
            s.len()
        )));
    }
    let value = s.evaluate(alpha)?;
    if &value != b {
        return Err(Error::NotInSpan(format!("Σ α_i a_i = {value}, not {b}")));
    }
    let length: u64 = alpha.iter().sum();
    if lambda > length {
        return Err(Error::NotNice { lambda, length });
    }
    let overflow = || Error::Overflow("extension generator");
    let mut gens: Vec<Point> = s
        .generators()
        .iter()
        .map(|g| g.checked_scale(lambda).ok_or_else(overflow))
        .collect::<Result<_>>()?;
    gens.push(b.checked_scale(mu).ok_or_else(overflow)?);
    let result = AffineSemigroup::with_extremal_rays(gens, s.dim())?;
    let mut tail = alpha
        .iter()
        .map(|&a| a.checked_mul(mu).ok_or_else(overflow).and_then(exponent))
        .collect::<Result<Vec<u32>>>()?;
    tail.push(0);
    let lead = Monomial::power(s.len() + 1, s.len(), exponent(lambda)?);
    let relation = Binomial::new(lead, Monomial::new(tail))?;
    Ok(NiceExtension {
        base: s.clone(),
        b: b.clone(),
        lambda,
        mu,
        alpha: alpha.to_vec(),
        result,
        relation,
    })
}

/// Compares the codimension `n - d` (the height of `I(S)`) with the number
/// of minimal generators of `I(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CiCertificate {
    pub height: usize,
    pub generator_count: usize,
    pub is_ci: bool,
}

pub fn is_complete_intersection(s: &AffineSemigroup, limits: &Limits) -> Result<CiCertificate> {
    let count = toric_ideal(s, limits)?.len();
    let height = s.codimension();
    Ok(CiCertificate { height, generator_count: count, is_ci: height == count })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceResult {
    pub semigroup: AffineSemigroup,
    /// Certificate after each step, starting with `ℕ^d`.
    pub certificates: Vec<CiCertificate>,
}

/// Applies `steps` to `ℕ^d` (generated by the unit vectors). Every
/// intermediate semigroup is certified to be a complete intersection.
pub fn extension_sequence(d: usize, steps: &[ExtensionStep], limits: &Limits) -> Result<SequenceResult> {
    let mut s = AffineSemigroup::free(d)?;
    let mut certificates = vec![is_complete_intersection(&s, limits)?];
    for step in steps {
        let ext = nice_extension(&s, &Point::new(step.b.clone()), step.lambda, step.mu, &step.alpha)?;
        s = ext.result;
        let cert = is_complete_intersection(&s, limits)?;
        if !cert.is_ci {
            return Err(Error::InvariantViolation(format!(
                "a sequence of nice extensions produced a non complete intersection ({} generators, height {})",
                cert.generator_count, cert.height
            )));
        }
        certificates.push(cert);
    }
    Ok(SequenceResult { semigroup: s, certificates })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub lead_is_y_power: bool,
    pub base_generator_count: usize,
    pub extension_generator_count: usize,
    pub generator_count_increment: bool,
    /// `I(S_b) = I(S) + (y^λ - z^{μα})`.
    pub ideal_matches: bool,
    pub base_ci: bool,
    pub extension_ci: bool,
    pub ci_preserved: bool,
    pub base_cm: bool,
    pub extension_cm: bool,
    pub cm_preserved: bool,
    /// Standard basis leading monomials of `S_b` are those of `S` plus
    /// `y^λ`; checked when the base tangent cone is Cohen–Macaulay.
    pub standard_basis_extends: Option<bool>,
    pub base_betti: Vec<usize>,
    pub extension_betti: Vec<usize>,
    pub betti_recursion: bool,
    pub base_tangent_betti: Vec<usize>,
    pub extension_tangent_betti: Vec<usize>,
    /// Checked when the base tangent cone is Cohen–Macaulay.
    pub tangent_betti_recursion: Option<bool>,
}

impl ExtensionReport {
    pub fn all_hold(&self) -> bool {
        self.lead_is_y_power
            && self.generator_count_increment
            && self.ideal_matches
            && self.ci_preserved
            && self.cm_preserved
            && self.standard_basis_extends != Some(false)
            && self.betti_recursion
            && self.tangent_betti_recursion != Some(false)
    }
}

/// `β_i(ext) = β_i(base) + β_{i-1}(base)` for all `i`.
fn recursion_holds(base: &[usize], ext: &[usize]) -> bool {
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let len = base.len().max(ext.len()).max(base.len() + 1);
    (0..len).all(|i| {
        let prev = if i == 0 { 0 } else { at(base, i - 1) };
        at(ext, i) == at(base, i) + prev
    })
}

fn ideals_equal(a: &[Binomial], b: &[Binomial], limits: &Limits) -> Result<bool> {
    let order = TermOrder::DegRevLex;
    let ga = if a.is_empty() { Vec::new() } else { buchberger(a, &order, limits)?.binomials };
    let gb = if b.is_empty() { Vec::new() } else { buchberger(b, &order, limits)?.binomials };
    Ok(ga == gb)
}

/// Checks the structural statements about a nice extension.
pub fn verify_extension_theorems(ext: &NiceExtension, limits: &Limits) -> Result<ExtensionReport> {
    let local = TermOrder::NegDegRevLex;
    let d = ext.base.dim();
    let lead_is_y_power = ext.relation.oriented(&local).lead() == ext.relation.lead();

    let base_ideal = toric_ideal(&ext.base, limits)?;
    let ext_ideal = toric_ideal(&ext.result, limits)?;
    let mut expected: Vec<Binomial> = base_ideal.generators().iter().map(|g| g.extend_vars(1)).collect();
    expected.push(ext.relation.clone());
    let ideal_matches = ideals_equal(&expected, ext_ideal.generators(), limits)?;

    let base_ci = base_ideal.len() == ext.base.codimension();
    let extension_ci = ext_ideal.len() == ext.result.codimension();

    let base_sb = standard_basis(base_ideal.generators(), limits)?;
    let ext_sb = standard_basis(ext_ideal.generators(), limits)?;
    let base_cm = cm_check(&base_sb, d).cohen_macaulay;
    let extension_cm = cm_check(&ext_sb, d).cohen_macaulay;
    let standard_basis_extends = base_cm.then(|| {
        let mut lms: Vec<Monomial> = base_sb.leading_monomials.iter().map(|m| m.extend(0)).collect();
        lms.push(ext.relation.lead().clone());
        lms.sort();
        let mut got = ext_sb.leading_monomials.clone();
        got.sort();
        lms == got
    });

    let base_betti = betti_semigroup(&ext.base, limits)?.totals();
    let extension_betti = betti_semigroup(&ext.result, limits)?.totals();
    let tangent = |sb: &crate::local::StandardBasisResult, s: &AffineSemigroup| {
        betti_standard_graded_with_grading(&sb.tangent_cone_generators, s.len(), Some(s.generators()), limits)
            .map(|t| t.totals())
    };
    let base_tangent_betti = tangent(&base_sb, &ext.base)?;
    let extension_tangent_betti = tangent(&ext_sb, &ext.result)?;

    Ok(ExtensionReport {
        lead_is_y_power,
        base_generator_count: base_ideal.len(),
        extension_generator_count: ext_ideal.len(),
        generator_count_increment: ext_ideal.len() == base_ideal.len() + 1,
        ideal_matches,
        base_ci,
        extension_ci,
        ci_preserved: !base_ci || extension_ci,
        base_cm,
        extension_cm,
        cm_preserved: !base_cm || extension_cm,
        standard_basis_extends,
        betti_recursion: recursion_holds(&base_betti, &extension_betti),
        tangent_betti_recursion: base_cm
            .then(|| recursion_holds(&base_tangent_betti, &extension_tangent_betti)),
        base_betti,
        extension_betti,
        base_tangent_betti,
        extension_tangent_betti,
    })
}
