//! Betti numbers of `k[S]` (squarefree divisor complexes) and of standard
//! graded quotients (Koszul homology), and their comparison.

pub(crate) mod compare;
mod complex;
mod koszul;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

pub use compare::{betti_compare, ComparisonReport, Hypotheses};
pub use complex::{divisor_complex, reduced_homology_ranks, SimplicialComplex};
pub use koszul::{betti_standard_graded, betti_standard_graded_with_grading, minimal_generator_count};

use crate::error::{Error, Result};
use crate::ideal::{buchberger, minimal_monomial_generators, toric_ideal, Monomial, TermOrder};
use crate::limits::Limits;
use crate::semigroup::{AffineSemigroup, Point};

/// Nonzero graded Betti numbers `β_{i,b}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, Point), usize>,
}

impl BettiTable {
    pub fn insert(&mut self, i: usize, degree: Point, rank: usize) {
        if rank > 0 {
            *self.entries.entry((i, degree)).or_default() += rank;
        }
    }

    /// `β_i = Σ_b β_{i,b}` up to the last nonzero index.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|(i, _)| *i).max();
        let mut t = vec![0; top.map_or(0, |x| x + 1)];
        for ((i, _), r) in &self.entries {
            t[*i] += r;
        }
        t
    }

    pub fn get(&self, i: usize, degree: &Point) -> usize {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    /// Degrees `b` with `β_{i,b} ≠ 0`, repeated by multiplicity.
    pub fn degrees(&self, i: usize) -> Vec<Point> {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .flat_map(|((_, b), r)| std::iter::repeat_n(b.clone(), *r))
            .collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            i: usize,
            degree: &'a Point,
            rank: usize,
        }
        #[derive(Serialize)]
        struct Table<'a> {
            entries: Vec<Entry<'a>>,
            totals: Vec<usize>,
        }
        Table {
            entries: self
                .entries
                .iter()
                .map(|((i, degree), rank)| Entry { i: *i, degree, rank: *rank })
                .collect(),
            totals: self.totals(),
        }
        .serialize(serializer)
    }
}

/// All lcms of subsets of `gens`, including `1`.
pub(crate) fn taylor_lcms(gens: &[Monomial], nvars: usize, limits: &Limits) -> Result<BTreeSet<Monomial>> {
    if gens.len() > limits.max_taylor_generators {
        return Err(Error::resource("leading ideal generators for Taylor bounds", limits.max_taylor_generators));
    }
    let mut lcms: BTreeSet<Monomial> = BTreeSet::from([Monomial::one(nvars)]);
    for g in gens {
        let more: Vec<Monomial> = lcms.iter().map(|l| l.lcm(g)).collect();
        lcms.extend(more);
        if lcms.len() > limits.max_fiber_size {
            return Err(Error::resource("Taylor lcm degrees", limits.max_fiber_size));
        }
    }
    Ok(lcms)
}

/// Fine graded Betti numbers of `k[S]` over `k[z_1, ..., z_n]`:
/// `β_{i,b} = dim H̃_{i-1}(Δ_b)`, for `b` ranging over the S-degrees of
/// the Taylor lcms of a leading ideal of `I(S)`.
pub fn betti_semigroup(s: &AffineSemigroup, limits: &Limits) -> Result<BettiTable> {
    let toric = toric_ideal(s, limits)?;
    let n = s.len();
    let gb = buchberger(toric.generators(), &TermOrder::DegRevLex, limits)?;
    let lms = minimal_monomial_generators(&gb.leading_monomials());
    let mut candidates: BTreeSet<Point> = BTreeSet::new();
    for l in taylor_lcms(&lms, n, limits)? {
        candidates.insert(l.evaluate(s.generators())?);
    }
    let mut table = BettiTable::default();
    for b in candidates {
        let complex = divisor_complex(s, &b)?;
        for (k, r) in reduced_homology_ranks(&complex).into_iter().enumerate() {
            // H̃_{k-1} contributes to β_k
            table.insert(k, b.clone(), r);
        }
    }
    let mut expected = toric.degrees.clone();
    expected.sort();
    if table.degrees(1) != expected {
        return Err(Error::InvariantViolation(format!(
            "first Betti degrees {:?} differ from the toric generator degrees {:?}",
            table.degrees(1),
            expected
        )));
    }
    Ok(table)
}
