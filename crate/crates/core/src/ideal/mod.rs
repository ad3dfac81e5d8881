//! Binomial ideals: exact arithmetic, Buchberger's algorithm, lattice
//! kernels and toric ideals.

mod binomial;
mod gastinger;
mod groebner;
mod lattice;
mod monomial;
mod order;
mod toric;

pub use binomial::Binomial;
pub use gastinger::{gastinger_check, GastingerOutcome};
pub use groebner::{
    buchberger, ideal_contains, minimal_monomial_generators, normal_form_monomial, reduce,
    reduce_lead, standard_monomials, GbStats, IdealBasis, QuotientBasis,
};
pub(crate) use groebner::{reduce_lead_step, s_polynomial};
pub use lattice::lattice_kernel;
pub use monomial::{default_name, Monomial};
pub use order::{MonomialOrder, SaturationOrder, TermOrder};
pub use toric::{toric_generators, toric_ideal, ToricIdeal};
