use num_integer::Integer;
use serde::Serialize;

use super::groebner::{buchberger, standard_monomials, QuotientBasis};
use super::{Binomial, Monomial, TermOrder};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::semigroup::AffineSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GastingerOutcome {
    /// `J = I(S)` by the dimension criterion.
    pub holds: bool,
    /// `dim_k A/(J + (z_i))`, absent when infinite.
    pub dimension: Option<u64>,
    /// The generator `a_i` the dimension is compared with.
    pub expected: u64,
    pub diagnostic: Option<String>,
}

/// For a numerical semigroup and `J ⊆ I(S)`: `J = I(S)` iff the quotient
/// `k[z]/(J + (z_i))` has dimension `a_i`.
pub fn gastinger_check(
    j: &[Binomial],
    s: &AffineSemigroup,
    i: usize,
    limits: &Limits,
) -> Result<GastingerOutcome> {
    let gens = s.numerical_generators()?;
    let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(Error::NotNumerical(format!("generators have gcd {g}")));
    }
    if i >= gens.len() {
        return Err(Error::InvalidArgument(format!(
            "variable index {i} out of range for {} generators",
            gens.len()
        )));
    }
    for f in j {
        if f.nvars() != gens.len() || !f.is_balanced(s.generators())? {
            return Err(Error::PreconditionViolated(format!("{f} is not an element of I(S)")));
        }
    }
    let mut input = j.to_vec();
    input.push(Binomial::monomial(Monomial::variable(gens.len(), i)));
    let gb = buchberger(&input, &TermOrder::DegRevLex, limits)?;
    let expected = gens[i];
    let outcome = match standard_monomials(&gb.leading_monomials(), gens.len(), limits.max_standard_monomials)? {
        QuotientBasis::Finite(std) => {
            let dim = std.len() as u64;
            GastingerOutcome {
                holds: dim == expected,
                dimension: Some(dim),
                expected,
                diagnostic: (dim != expected)
                    .then(|| format!("quotient has dimension {dim}, expected {expected}")),
            }
        }
        QuotientBasis::Infinite { free_variable } => GastingerOutcome {
            holds: false,
            dimension: None,
            expected,
            diagnostic: Some(format!(
                "quotient is infinite dimensional: no power of z{} is a leading monomial",
                free_variable + 1
            )),
        },
    };
    Ok(outcome)
}
