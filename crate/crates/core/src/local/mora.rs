//! Mora's tangent cone algorithm for binomial ideals under the negative
//! degree reverse lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{reduce_lead_step, s_polynomial, Binomial, GbStats, Monomial, MonomialOrder, TermOrder};
use crate::limits::Limits;

const LOCAL: TermOrder = TermOrder::NegDegRevLex;

/// Reduction steps allowed in one normal form before giving up.
const MAX_NF_STEPS: usize = 1_000_000;

/// Compares exponent tuples: lower degree is larger, ties by revlex.
pub fn compare_negdegrevlex(p: &[u32], q: &[u32]) -> Result<Ordering> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    Ok(LOCAL.compare(&Monomial::new(p.to_vec()), &Monomial::new(q.to_vec())))
}

/// Weak normal form of `f` with respect to `basis`: the result is `None`
/// or has a leading monomial divisible by no leading monomial of `basis`.
///
/// Reducers are chosen with minimal écart, and intermediate results whose
/// écart is smaller than the reducer's are admitted as reducers, which makes
/// the division terminate under a local order.
pub fn mora_normal_form(f: &Binomial, basis: &[Binomial]) -> Result<Option<Binomial>> {
    let mut t: Vec<Binomial> = basis.iter().map(|g| g.oriented(&LOCAL)).collect();
    let mut h = f.oriented(&LOCAL);
    for _ in 0..MAX_NF_STEPS {
        let reducer = t
            .iter()
            .enumerate()
            .filter(|(_, g)| g.lead().divides(h.lead()))
            .min_by_key(|(i, g)| (g.ecart(), *i))
            .map(|(_, g)| g.clone());
        let Some(g) = reducer else { return Ok(Some(h)) };
        if g.ecart() > h.ecart() {
            t.push(h.clone());
        }
        match reduce_lead_step(&h, &g, &LOCAL) {
            Some(next) => h = next,
            None => return Ok(None),
        }
    }
    Err(Error::InvariantViolation(format!(
        "Mora normal form of {f} did not finish in {MAX_NF_STEPS} steps"
    )))
}

/// A minimal standard basis under the local order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardBasisResult {
    /// Sorted by degree of the leading monomial, then by the order.
    pub basis: Vec<Binomial>,
    pub leading_monomials: Vec<Monomial>,
    /// Indices of elements homogeneous in the standard grading.
    pub homogeneous_part: Vec<usize>,
    pub nonhomogeneous_part: Vec<usize>,
    /// Initial forms `f*`; they generate the tangent cone ideal.
    pub tangent_cone_generators: Vec<Binomial>,
    pub stats: GbStats,
}

impl StandardBasisResult {
    pub fn from_basis(mut basis: Vec<Binomial>, stats: GbStats) -> Self {
        basis = basis.iter().map(|b| b.oriented(&LOCAL)).collect();
        basis.sort_by(|a, b| {
            a.lead()
                .degree()
                .cmp(&b.lead().degree())
                .then_with(|| LOCAL.compare(a.lead(), b.lead()))
                .then_with(|| a.cmp(b))
        });
        let leading_monomials = basis.iter().map(|b| b.lead().clone()).collect();
        let (homogeneous_part, nonhomogeneous_part) =
            (0..basis.len()).partition(|&i| basis[i].is_homogeneous());
        let tangent_cone_generators = basis.iter().map(Binomial::initial_form).collect();
        StandardBasisResult {
            basis,
            leading_monomials,
            homogeneous_part,
            nonhomogeneous_part,
            tangent_cone_generators,
            stats,
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn nvars(&self) -> Option<usize> {
        self.basis.first().map(Binomial::nvars)
    }
}

/// Standard basis of the ideal generated by `gens` (Buchberger's loop with
/// Mora's normal form), minimalized by dropping elements whose leading
/// monomial is divisible by another one. Tails are left as computed: tail
/// reduction under a local order need not terminate.
pub fn standard_basis(gens: &[Binomial], limits: &Limits) -> Result<StandardBasisResult> {
    let mut stats = GbStats::default();
    let mut g: Vec<Binomial> = Vec::new();
    for f in gens {
        let f = f.oriented(&LOCAL);
        if !g.contains(&f) {
            g.push(f);
        }
    }
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((g[i].lead().lcm(g[j].lead()).degree(), i, j));
        }
    }
    while let Some((_, i, j)) = pairs.pop_first() {
        stats.pairs_considered += 1;
        if stats.pairs_considered > limits.max_spairs {
            return Err(Error::resource("critical pairs", limits.max_spairs));
        }
        if g[i].lead().is_coprime(g[j].lead()) {
            stats.product_criterion += 1;
            continue;
        }
        let Some(s) = s_polynomial(&g[i], &g[j], &LOCAL) else {
            stats.zero_reductions += 1;
            continue;
        };
        match mora_normal_form(&s, &g)? {
            None => stats.zero_reductions += 1,
            Some(h) => {
                let k = g.len();
                for (idx, b) in g.iter().enumerate() {
                    pairs.insert((b.lead().lcm(h.lead()).degree(), idx, k));
                }
                g.push(h);
            }
        }
    }
    Ok(StandardBasisResult::from_basis(minimalize(g), stats))
}

fn minimalize(mut g: Vec<Binomial>) -> Vec<Binomial> {
    g.sort_by(|a, b| {
        a.lead()
            .degree()
            .cmp(&b.lead().degree())
            .then_with(|| LOCAL.compare(a.lead(), b.lead()))
            .then_with(|| a.cmp(b))
    });
    let mut kept: Vec<Binomial> = Vec::new();
    for b in g {
        if !kept.iter().any(|k| k.lead().divides(b.lead())) {
            kept.push(b);
        }
    }
    kept
}
