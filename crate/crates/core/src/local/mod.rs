//! Standard bases under the local order and the tangent cone criteria.

mod criteria;
mod mora;

pub use criteria::{
    cm_check, homogeneity_gb_check, project_basis, standard_basis_of, support_condition, CmVerdict,
    HomogeneityCheck, RefutationReason, SupportWitness,
};
pub use mora::{compare_negdegrevlex, mora_normal_form, standard_basis, StandardBasisResult};
