//! The linear combination `sum_i G(u_i) / prod_{j!=i}(A_i - A_j) = v e^{zvy}`
//! and the corresponding identity for the closed form `G_1`.

use crate::error::Result;
use crate::poly::{one_plus_u_pow, Poly, Var};
use crate::report::{merge, CheckReport};
use crate::ring::{rat, Ring};
use crate::series::{closed_form_g1, exp_poly, solve_functional_equation, transformed_series, ZSeries};
use crate::urat::URat;

use super::lambda::{a_inverse, a_series};
use super::laurent::v_laurent;
use super::quad::{a_of_ext, eval_series_at, explicit_roots, to_base_series, Ext};
use super::sym::{Family, SymContext};

/// `v e^{zvy}` (or `v e^{zv}` when `y_one`), Laurent in `u`.
pub fn combination_target(m: u32, order: usize, y_one: bool) -> ZSeries<Poly> {
    let v = v_laurent(m);
    let arg = if y_one { v.clone() } else { v.mul(&Poly::var(Var::Y)) };
    exp_poly(&arg, order).mul_coeff(&v)
}

/// `sum_i H(u_i) / prod_{j!=i}(A_i - A_j)` with the explicit roots (m = 1, 2).
pub fn root_combination(m: u32, h: &ZSeries<Poly>, order: usize) -> Result<ZSeries<URat>> {
    let roots = explicit_roots(m)?;
    let a: Vec<ZSeries<Ext>> = roots
        .iter()
        .map(|w| a_of_ext(w, order))
        .collect::<Result<_>>()?;
    let mut total = ZSeries::<Ext>::zero(order);
    for (i, w) in roots.iter().enumerate() {
        let mut denom = ZSeries::<Ext>::one(order);
        for (j, aj) in a.iter().enumerate() {
            if j != i {
                denom = denom.mul(&a[i].sub(aj));
            }
        }
        total = total.add(&eval_series_at(h, w)?.mul(&denom.inv()?));
    }
    to_base_series(&total)
}

fn compare_urat(lhs: &ZSeries<URat>, rhs: &ZSeries<Poly>) -> Option<usize> {
    lhs.first_difference(&rhs.map(URat::from_poly_laurent))
}

/// At m = 1: `G(u,y) - G(1/u,y) = (1+u) e^{yz(1+u)(1+1/u)} (e^{-zu} - u^{-1} e^{-z/u})`,
/// on Laurent polynomials.
pub fn combi_lin_m1_laurent(order: usize) -> Result<CheckReport> {
    let g = transformed_series(&solve_functional_equation(1, order, false), 1, order)?;
    let lhs = g.sub(&g.map(|c| c.invert_var(Var::U)));
    let u = Poly::var(Var::U);
    let ub = Poly::var_pow(Var::U, -1);
    let y = Poly::var(Var::Y);
    let e = exp_poly(&y.mul(&one_plus_u_pow(1)).mul(&Poly::int(1).add(&ub)), order);
    let diff = exp_poly(&u.neg(), order).sub(&exp_poly(&ub.neg(), order).mul_coeff(&ub));
    let rhs = e.mul(&diff).mul_coeff(&one_plus_u_pow(1));
    Ok(CheckReport::from_mismatch("combi-lin", 1, order, lhs.first_difference(&rhs)))
}

/// The linear combination on the solver pipeline, through `z^order`.
/// m = 1 uses Laurent polynomials; m = 2 the radical extension.
pub fn combi_lin_check(m: u32, order: usize) -> Result<CheckReport> {
    if m == 1 {
        return combi_lin_m1_laurent(order);
    }
    let g = transformed_series(&solve_functional_equation(m, order, false), m, order)?;
    let lhs = root_combination(m, &g, order)?;
    let rhs = combination_target(m, order, false);
    Ok(CheckReport::from_mismatch("combi-lin", m, order, compare_urat(&lhs, &rhs)))
}

/// `G_1 = e^{(m+1)z} (v A^{m-1} - 1/A)`.
pub fn g1_form_check(m: u32, order: usize) -> Result<CheckReport> {
    let g1 = closed_form_g1(m, order)?.map(|c| URat::from_poly(c.clone()));
    let v = URat::from_poly_laurent(&v_laurent(m));
    let a = a_series(order);
    let alt = a
        .pow(m - 1)
        .mul_coeff(&v)
        .sub(&a_inverse(order))
        .mul(&exp_poly(&Poly::int(m as i64 + 1), order).map(|c| URat::from_poly(c.clone())));
    Ok(CheckReport::from_mismatch("g1-form", m, order, g1.first_difference(&alt)))
}

/// `(-1)^{m+1} e^{(m+1)z} prod_i 1/A_i = v e^{zv}`, with `prod (1+u_i)` and
/// `prod u_i` taken from the elementary symmetric functions and
/// `sum u_i = p_1`.
pub fn g1_symmetric_check(m: u32, order: usize) -> Result<CheckReport> {
    let ctx = SymContext::new(m, -1, 1)?;
    let prod_one_plus: Poly = (0..=m as usize + 1)
        .map(|j| ctx.elementary(Family::All, j))
        .fold(Poly::default(), |acc, e| acc.add(&e));
    let prod_roots = ctx.elementary(Family::All, m as usize + 1);
    let c = prod_roots.constant_term();
    if prod_roots != Poly::constant(c.clone()) || c == rat(0) {
        return Ok(CheckReport::fail("g1-symmetric", m, order, None, "product of roots is not a constant"));
    }
    let sign = if m % 2 == 0 { rat(-1) } else { rat(1) };
    let p1 = ctx.power_sum(Family::All, 1)?;
    let lhs = exp_poly(&p1.add(&Poly::int(m as i64 + 1)), order)
        .mul_coeff(&prod_one_plus)
        .scale(&(sign / c));
    let rhs = combination_target(m, order, true);
    Ok(CheckReport::from_mismatch("g1-symmetric", m, order, lhs.first_difference(&rhs)))
}

/// The linear combination of `G_1(u_i)` with explicit roots (m = 1, 2).
pub fn g1_explicit_check(m: u32, order: usize) -> Result<CheckReport> {
    let g1 = closed_form_g1(m, order)?;
    let lhs = root_combination(m, &g1, order)?;
    let rhs = combination_target(m, order, true);
    Ok(CheckReport::from_mismatch("g1-explicit", m, order, compare_urat(&lhs, &rhs)))
}

/// Form check, symmetric reduction, and (for m <= 2) explicit roots.
pub fn g1_satisfies_identity(m: u32, order: usize) -> Result<CheckReport> {
    let mut parts = vec![g1_form_check(m, order)?, g1_symmetric_check(m, order)?];
    if m <= 2 {
        parts.push(g1_explicit_check(m, order)?);
    }
    Ok(merge("g1-identity", m, order, &parts))
}
