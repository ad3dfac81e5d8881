use serde::{Deserialize, Serialize};

/// Caps applied by the expensive algorithms. Exceeding one yields
/// [`crate::Error::ResourceBound`] instead of a silently truncated answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Standard monomials enumerated for a zero-dimensional quotient.
    pub max_standard_monomials: usize,
    /// Critical pairs processed by a single Buchberger or Mora run.
    pub max_spairs: usize,
    /// Largest total degree examined by the Koszul Betti engine.
    pub max_betti_degree: usize,
    /// Minimal generators of a leading ideal used for Taylor degree bounds.
    pub max_taylor_generators: usize,
    /// Monomials in a single S-degree fiber.
    pub max_fiber_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_standard_monomials: 200_000,
            max_spairs: 500_000,
            max_betti_degree: 512,
            max_taylor_generators: 22,
            max_fiber_size: 200_000,
        }
    }
}
