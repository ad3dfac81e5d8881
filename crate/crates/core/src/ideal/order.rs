//! Monomial orders on exponent tuples.
//!
//! Variables are ranked `z_n > ... > z_1`, so the reverse lexicographic
//! tie-break inspects `z_1` first: for equal degrees `p > q` iff the first
//! nonzero entry of `p - q` is negative.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

pub trait MonomialOrder {
    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering;

    /// Whether `1` is the smallest monomial (a well-order).
    fn is_global(&self) -> bool {
        true
    }

    /// Short label used in reports.
    fn name(&self) -> String;
}

/// Reverse lexicographic comparison on equal-degree tuples.
pub(crate) fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermOrder {
    DegRevLex,
    Lex,
    /// Local order: lower total degree is larger, ties broken by revlex.
    NegDegRevLex,
}

impl MonomialOrder for TermOrder {
    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            TermOrder::DegRevLex => {
                let (da, db) = (degree(a), degree(b));
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            TermOrder::NegDegRevLex => {
                let (da, db) = (degree(a), degree(b));
                db.cmp(&da).then_with(|| revlex(a, b))
            }
            TermOrder::Lex => {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn is_global(&self) -> bool {
        !matches!(self, TermOrder::NegDegRevLex)
    }

    fn name(&self) -> String {
        match self {
            TermOrder::DegRevLex => "degrevlex",
            TermOrder::Lex => "lex",
            TermOrder::NegDegRevLex => "negdegrevlex",
        }
        .to_string()
    }
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

/// Weighted reverse lexicographic order with one distinguished variable
/// ranked below all others. For an ideal homogeneous with respect to
/// `weights`, `z_last` divides the leading monomial of a homogeneous element
/// iff it divides the whole element, which is what saturation relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationOrder {
    pub weights: Vec<u64>,
    pub last: usize,
}

impl MonomialOrder for SaturationOrder {
    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let weigh = |m: &Monomial| -> u128 {
            m.exponents()
                .iter()
                .zip(&self.weights)
                .map(|(&e, &w)| e as u128 * w as u128)
                .sum()
        };
        let (ea, eb) = (a.exponents(), b.exponents());
        weigh(a)
            .cmp(&weigh(b))
            .then_with(|| eb[self.last].cmp(&ea[self.last]))
            .then_with(|| {
                let skip = |e: &[u32]| -> Vec<u32> {
                    e.iter()
                        .enumerate()
                        .filter(|(i, _)| *i != self.last)
                        .map(|(_, &x)| x)
                        .collect()
                };
                revlex(&skip(ea), &skip(eb))
            })
    }

    fn name(&self) -> String {
        format!("weighted-revlex(z{} last)", self.last + 1)
    }
}
