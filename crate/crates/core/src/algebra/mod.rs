//! Positive parts, symmetric functions of the roots `u_i`, the operator
//! `Lambda`, and the `Phi_k` recursion.

pub mod identities;
pub mod lagrange;
pub mod lambda;
pub mod laurent;
pub mod phi;
pub mod quad;
pub mod sym;

pub use identities::{
    combi_lin_check, combination_target, g1_form_check, g1_satisfies_identity, g1_symmetric_check,
    root_combination,
};
pub use lagrange::{lagrange_check, LagrangeReport};
pub use lambda::{a_inverse, a_of, a_series, initial_g, lambda_expansion_check, lambda_op};
pub use laurent::{laurent_to_v, nonneg_part, positive_part, v_laurent, v_to_laurent};
pub use phi::{assemble_f, m2_display, m2_display_check, phi_recursion, trivariate_check, PhiJson, PhiTable};
pub use quad::Ext;
pub use sym::{Family, SymContext};
