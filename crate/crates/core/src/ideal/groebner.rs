//! Buchberger's algorithm for ideals generated by pure binomials and
//! monomials under a global monomial order.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::{Binomial, Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs_considered: usize,
    pub product_criterion: usize,
    pub chain_criterion: usize,
    pub zero_reductions: usize,
}

/// A Gröbner basis, reduced and sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealBasis {
    pub binomials: Vec<Binomial>,
    pub order: String,
    pub reduced: bool,
    pub minimal: bool,
    pub stats: GbStats,
}

impl IdealBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.binomials.iter().map(|b| b.lead().clone()).collect()
    }
}

/// S-polynomial of two oriented binomials.
pub(crate) fn s_polynomial<O: MonomialOrder + ?Sized>(
    f: &Binomial,
    g: &Binomial,
    order: &O,
) -> Option<Binomial> {
    let l = f.lead().lcm(g.lead());
    let from_g = g.tail().map(|t| l.div(g.lead()).mul(t));
    let from_f = f.tail().map(|t| l.div(f.lead()).mul(t));
    Binomial::from_terms(from_g, from_f, order)
}

/// One reduction step of the leading term of `h` by `g` (`LM(g) | LM(h)`).
pub(crate) fn reduce_lead_step<O: MonomialOrder + ?Sized>(
    h: &Binomial,
    g: &Binomial,
    order: &O,
) -> Option<Binomial> {
    let m = h.lead().div(g.lead());
    Binomial::from_terms(g.tail().map(|t| m.mul(t)), h.tail().cloned(), order)
}

fn find_reducer<'a>(m: &Monomial, basis: &'a [Binomial]) -> Option<&'a Binomial> {
    basis.iter().find(|g| g.lead().divides(m))
}

/// Reduces the leading term until no leading monomial of `basis` divides it.
pub fn reduce_lead<O: MonomialOrder>(f: &Binomial, basis: &[Binomial], order: &O) -> Option<Binomial> {
    debug_assert!(order.is_global());
    let mut h = f.oriented(order);
    while let Some(g) = find_reducer(h.lead(), basis) {
        h = reduce_lead_step(&h, g, order)?;
    }
    Some(h)
}

/// Full normal form: no term of the result is divisible by a leading
/// monomial of `basis`. `None` means the remainder is zero.
pub fn reduce<O: MonomialOrder>(f: &Binomial, basis: &[Binomial], order: &O) -> Option<Binomial> {
    let h = reduce_lead(f, basis, order)?;
    Some(reduce_tail(h, basis))
}

fn reduce_tail(mut h: Binomial, basis: &[Binomial]) -> Binomial {
    loop {
        let Some(t) = h.tail() else { return h };
        let Some(g) = find_reducer(t, basis) else { return h };
        let m = t.div(g.lead());
        h = match g.tail() {
            // tail < lead stays true: m * tail(g) < m * LM(g) = tail(h)
            Some(gt) => Binomial::new(h.lead().clone(), m.mul(gt))
                .expect("tail reduction under a global order cannot reach the lead"),
            None => Binomial::monomial(h.lead().clone()),
        };
    }
}

/// Normal form of a monomial modulo a Gröbner basis: a standard monomial,
/// or `None` when the monomial lies in the ideal.
pub fn normal_form_monomial(m: &Monomial, basis: &[Binomial]) -> Option<Monomial> {
    let mut u = m.clone();
    while let Some(g) = find_reducer(&u, basis) {
        u = u.div(g.lead()).mul(g.tail()?);
    }
    Some(u)
}

/// Reduced Gröbner basis of the ideal generated by `gens` under a global
/// order. Critical pairs are processed by ascending degree of their lcm,
/// ties broken by pair indices, so the run is deterministic.
pub fn buchberger<O: MonomialOrder>(
    gens: &[Binomial],
    order: &O,
    limits: &Limits,
) -> Result<IdealBasis> {
    if !order.is_global() {
        return Err(Error::PreconditionViolated(
            "buchberger needs a global order; use the local standard basis engine".into(),
        ));
    }
    let mut stats = GbStats::default();
    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if let Some(h) = reduce_lead(g, &basis, order) {
            if !basis.contains(&h) {
                basis.push(h);
            }
        }
    }
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((basis[i].lead().lcm(basis[j].lead()).degree(), i, j));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while let Some((_, i, j)) = pairs.pop_first() {
        stats.pairs_considered += 1;
        if stats.pairs_considered > limits.max_spairs {
            return Err(Error::resource("critical pairs", limits.max_spairs));
        }
        done.insert((i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lead().is_coprime(fj.lead()) {
            stats.product_criterion += 1;
            continue;
        }
        let l = fi.lead().lcm(fj.lead());
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&l)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chain {
            stats.chain_criterion += 1;
            continue;
        }
        let Some(s) = s_polynomial(fi, fj, order) else {
            stats.zero_reductions += 1;
            continue;
        };
        match reduce_lead(&s, &basis, order) {
            None => stats.zero_reductions += 1,
            Some(h) => {
                let k = basis.len();
                for (idx, b) in basis.iter().enumerate() {
                    pairs.insert((b.lead().lcm(h.lead()).degree(), idx, k));
                }
                basis.push(h);
            }
        }
    }
    Ok(IdealBasis {
        binomials: interreduce(basis, order),
        order: order.name(),
        reduced: true,
        minimal: true,
        stats,
    })
}

/// Minimalizes and tail-reduces a Gröbner basis.
fn interreduce<O: MonomialOrder>(mut basis: Vec<Binomial>, order: &O) -> Vec<Binomial> {
    basis.sort_by(|a, b| order.compare(a.lead(), b.lead()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Binomial> = Vec::new();
    for b in basis {
        if !kept.iter().any(|k| k.lead().divides(b.lead())) {
            kept.push(b);
        }
    }
    let snapshot = kept.clone();
    kept.into_iter()
        .enumerate()
        .map(|(idx, b)| {
            let others: Vec<Binomial> = snapshot
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            reduce_tail(b, &others)
        })
        .collect()
}

/// Whether `f` lies in the ideal with Gröbner basis `basis`.
pub fn ideal_contains<O: MonomialOrder>(basis: &[Binomial], f: &Binomial, order: &O) -> bool {
    reduce_lead(f, basis, order).is_none()
}

/// Minimal generators of the monomial ideal generated by `ms`, sorted.
pub fn minimal_monomial_generators(ms: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = ms.to_vec();
    sorted.sort_by_key(|m| (m.degree(), m.clone()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientBasis {
    /// Standard monomials, in generation order (by degree).
    Finite(Vec<Monomial>),
    /// No pure power of this variable is a leading monomial.
    Infinite { free_variable: usize },
}

/// Standard monomials of `k[z]/I` given the leading monomials of a Gröbner
/// basis of `I`.
pub fn standard_monomials(
    leading: &[Monomial],
    nvars: usize,
    cap: usize,
) -> Result<QuotientBasis> {
    for v in 0..nvars {
        if !leading.iter().any(|m| m.pure_power_variable() == Some(v)) {
            let unit = leading.iter().any(Monomial::is_one);
            if !unit {
                return Ok(QuotientBasis::Infinite { free_variable: v });
            }
        }
    }
    let standard = |m: &Monomial| !leading.iter().any(|l| l.divides(m));
    let one = Monomial::one(nvars);
    if !standard(&one) {
        return Ok(QuotientBasis::Finite(Vec::new()));
    }
    let mut out = vec![one];
    let mut frontier = 0;
    while frontier < out.len() {
        let m = out[frontier].clone();
        frontier += 1;
        let start = m.max_variable().unwrap_or(0);
        for v in start..nvars {
            let next = m.times_variable(v);
            if standard(&next) {
                out.push(next);
                if out.len() > cap {
                    return Err(Error::resource("standard monomials", cap));
                }
            }
        }
    }
    Ok(QuotientBasis::Finite(out))
}
