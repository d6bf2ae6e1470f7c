//! Truncated power series: the EGF solver in `t` and the change of
//! variables to `z` and `u`.

mod checks;
mod subst;
mod tseries;
mod zseries;

pub use checks::{
    delta_u, solver_vs_oracle, transformed_equation_check, transformed_equation_holds,
    verify_q_specialization, QReport, QTableRow,
};
pub use subst::{
    closed_form_f11, closed_form_g1, closed_form_m1_bessel, closed_form_m1_double_sum,
    closed_form_m1_nonneg, exp_poly, substitute_t_of_z, substitute_x_of_zu,
    t_coefficients_from_z, transformed_series,
};
pub use tseries::{delta, delta_q, solve_functional_equation, SeriesJson, TSeries};
pub use zseries::{inv_unit, ZSeries};

use crate::poly::Poly;

impl ZSeries<Poly> {
    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            var: "z".into(),
            order: self.order(),
            coeffs: self.coeffs().iter().map(Poly::to_string_map).collect(),
        }
    }
}
