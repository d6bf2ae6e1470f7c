//! The descending recursion for `Phi_m, .., Phi_0` and the assembly
//! `F = sum_k Phi_k(v) A(u)^k`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{one_plus_u_pow, Poly, Var};
use crate::report::CheckReport;
use crate::ring::{binomial, inv_factorial, rat, rat_frac, rat_int, Field, Ring};
use crate::series::{exp_poly, solve_functional_equation, transformed_series, ZSeries};
use crate::urat::URat;

use super::laurent::{
    div_one_plus_u_pow, is_polynomial_in_u, laurent_to_v, nonneg_part, positive_part, v_laurent,
    v_to_laurent,
};
use super::quad::{a_of_ext, explicit_roots, to_base_series, Ext};
use super::sym::{integer_partitions, Family, SymContext};

/// `Phi_0, .., Phi_m` as z-series with coefficients polynomial in `V` (and `Y`),
/// together with the positive parts `Phi_k^>(u)` for `k < m`.
#[derive(Clone, Debug)]
pub struct PhiTable {
    pub m: u32,
    pub order: usize,
    pub phi: Vec<ZSeries<Poly>>,
    pub positive: Vec<ZSeries<Poly>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiJson {
    pub m: u32,
    pub order: usize,
    /// `phi[k][n]` maps monomials in `v`, `y` to the coefficient of `z^n` in `Phi_k`.
    pub phi: Vec<Vec<BTreeMap<String, String>>>,
}

impl PhiTable {
    pub fn to_json(&self) -> PhiJson {
        PhiJson {
            m: self.m,
            order: self.order,
            phi: self
                .phi
                .iter()
                .map(|s| s.coeffs().iter().map(Poly::to_string_map).collect())
                .collect(),
        }
    }

    /// `Phi_k(v)` with `v` expanded as a Laurent polynomial in `u`.
    pub fn phi_laurent(&self, k: usize) -> ZSeries<Poly> {
        self.phi[k].map(|c| v_to_laurent(c, self.m))
    }
}

/// `Phi_m = v e^{zyv}`: the coefficient of `z^n` is `y^n v^{n+1} / n!`.
pub fn phi_top(order: usize) -> ZSeries<Poly> {
    ZSeries::from_fn(order, |n| {
        Poly::var_pow(Var::V, n as i32 + 1)
            .mul(&Poly::var_pow(Var::Y, n as i32))
            .scale(&inv_factorial(n as u64))
    })
}

fn r_window(m: u32, order: usize) -> (i32, i32) {
    let m = m as i32;
    (-m * (m - 1) - 1, m + order as i32 + 1)
}

/// Runs the recursion from `Phi_m = v e^{zyv}` down to `Phi_0`.
pub fn phi_recursion(m: u32, order: usize) -> Result<PhiTable> {
    assert!(m >= 1);
    let mut ctx = SymContext::for_order(m, order)?;
    let (lo, hi) = r_window(m, order);
    ctx = ctx.widened(lo, hi)?;
    let mut phi: Vec<Option<ZSeries<Poly>>> = vec![None; m as usize + 1];
    let mut positive: Vec<Option<ZSeries<Poly>>> = vec![None; m as usize];
    phi[m as usize] = Some(phi_top(order));
    let mut monomials: BTreeMap<Vec<u32>, ZSeries<Poly>> = BTreeMap::new();
    let vl = v_laurent(m);
    for k in (1..=m).rev() {
        let p = m - k + 1;
        let mut s = ZSeries::zero(order);
        for j in k..=m {
            let phij = phi[j as usize]
                .as_ref()
                .expect("computed")
                .map(|c| v_to_laurent(c, m));
            for lambda in integer_partitions(j - k + 1) {
                let l = lambda.len() as i64;
                let c = rat_int(binomial(m as i64 - l, k as i64 - l));
                if c == rat(0) {
                    continue;
                }
                if !monomials.contains_key(&lambda) {
                    let mt = ctx.scaled_monomial_a(&lambda, order)?;
                    monomials.insert(lambda.clone(), mt);
                }
                let size: u32 = lambda.iter().sum();
                let vpow = vl.pow(p - size);
                let term = phij.mul(&monomials[&lambda]).mul_coeff(&vpow).scale(&c);
                s = s.add(&term);
            }
        }
        // divide by v^p = (1+u)^{(m+1)p} u^{-mp}
        let bracket = s.try_map(|c| div_one_plus_u_pow(&c.shift(Var::U, (m * p) as i32), (m + 1) * p))?;
        let scale = -rat_int(binomial(m as i64, k as i64)).recip();
        let pos = bracket.map(|c| positive_part(c).scale(&scale));
        let at_minus_one = pos.map(|c| c.eval(Var::U, &rat(-1)));
        let need = pos
            .coeffs()
            .iter()
            .filter_map(|c| c.max_degree(Var::U))
            .max()
            .unwrap_or(0);
        ctx = ctx.widened(lo, hi.max(need))?;
        let summed = ctx.sum_over_roots_series(Family::All, &pos.map(|c| c.rename(Var::U, Var::R)))?;
        let laurent = summed.sub(&at_minus_one.scale(&rat(m as i64 + 1)));
        let in_v = laurent.try_map(|c| laurent_to_v(c, m))?;
        for (n, c) in in_v.coeffs().iter().enumerate() {
            if !c.coeff_in(Var::V, 0).is_zero() {
                return Err(Error::NotPolynomialInV(format!(
                    "Phi_{} has constant term {} at z^{n}",
                    k - 1,
                    c.coeff_in(Var::V, 0)
                )));
            }
        }
        let back = in_v.map(|c| positive_part(&v_to_laurent(c, m)));
        if let Some(n) = back.first_difference(&pos) {
            return Err(Error::Mismatch(format!(
                "positive part of Phi_{} disagrees at z^{n}",
                k - 1
            )));
        }
        phi[k as usize - 1] = Some(in_v);
        positive[k as usize - 1] = Some(pos);
    }
    Ok(PhiTable {
        m,
        order,
        phi: phi.into_iter().map(Option::unwrap).collect(),
        positive: positive.into_iter().map(Option::unwrap).collect(),
    })
}

/// `sum_k Phi_k(v) A(u)^k`, asserted to be polynomial in `u`.
pub fn assemble_f(table: &PhiTable) -> Result<ZSeries<Poly>> {
    let m = table.m;
    let order = table.order;
    let u = Poly::var(Var::U);
    let mut num = ZSeries::zero(order);
    for k in 0..=m {
        let pre = u.pow(k).mul(&one_plus_u_pow(m - k));
        let e = exp_poly(&u.scale(&rat(-(k as i64))), order);
        num = num.add(&table.phi_laurent(k as usize).mul(&e).mul_coeff(&pre));
    }
    let f = num.try_map(|c| div_one_plus_u_pow(c, m))?;
    for (n, c) in f.coeffs().iter().enumerate() {
        if !is_polynomial_in_u(c) {
            return Err(Error::Cancellation(format!("negative power of u at z^{n}")));
        }
    }
    Ok(f)
}

/// Recursion plus assembly against the solver pipeline, through `z^order`.
pub fn trivariate_check(m: u32, order: usize) -> Result<CheckReport> {
    let table = phi_recursion(m, order)?;
    let f = assemble_f(&table)?;
    let g = transformed_series(&solve_functional_equation(m, order, false), m, order)?;
    Ok(CheckReport::from_mismatch("trivariate", m, order, f.first_difference(&g)))
}

/// The `m = 2` display, evaluated with the explicit radical roots:
/// `F/(1+u) = [u^>=]( Phi_1/(1+u) (A - A_1/2 - A_2/2) + (1+1/u)^2 e^{zyv} (A^2 - A_1^2/2 - A_2^2/2) )`
/// with `Phi_1 = Phi_1^>(u) + Phi_1^>(u_1) + Phi_1^>(u_2) - 3 Phi_1^>(-1)` and
/// `Phi_1^> = -[u^>]( v e^{zyv} (A_1 + A_2) )`.
pub fn m2_display(order: usize) -> Result<ZSeries<Poly>> {
    let roots = explicit_roots(2)?;
    let v = v_laurent(2);
    let ezyv = exp_poly(&v.mul(&Poly::var(Var::Y)), order);
    let a1 = a_of_ext(&roots[1], order)?;
    let a2 = a_of_ext(&roots[2], order)?;
    let sum_a = to_base_series(&a1.add(&a2))?;
    let sum_a2 = to_base_series(&a1.mul(&a1).add(&a2.mul(&a2)))?;
    let lift = |s: &ZSeries<Poly>| s.map(|c| URat::from_poly(c.clone()));
    let laurent = |s: &ZSeries<URat>, what: &str| s.try_map(|c| c.to_laurent_or_err(what));

    let inner = lift(&ezyv.mul_coeff(&v)).mul(&sum_a);
    let phi1_pos = laurent(&inner, "Phi_1^> bracket")?.map(|c| positive_part(c).neg());
    let mut phi1 = phi1_pos.sub(&phi1_pos.map(|c| c.eval(Var::U, &rat(-1))).scale(&rat(3)));
    let mut at_roots = ZSeries::<Ext>::zero(order);
    for w in &roots[1..] {
        at_roots = at_roots.add(&super::quad::eval_series_at(&phi1_pos, w)?);
    }
    phi1 = phi1.add(&laurent(&to_base_series(&at_roots)?, "Phi_1 at the roots")?);

    let a = super::lambda::a_series(order);
    let one_plus_u_inv = URat::from_poly(one_plus_u_pow(1)).inv().unwrap();
    let half = rat_frac(1, 2);
    let first = lift(&phi1)
        .mul_coeff(&one_plus_u_inv)
        .mul(&a.sub(&sum_a.scale(&half)));
    let pre2 = URat::from_poly(one_plus_u_pow(2).shift(Var::U, -2));
    let second = lift(&ezyv)
        .mul_coeff(&pre2)
        .mul(&a.mul(&a).sub(&sum_a2.scale(&half)));
    let total = laurent(&first.add(&second), "display bracket")?;
    Ok(total.map(|c| nonneg_part(c).mul(&one_plus_u_pow(1))))
}

pub fn m2_display_check(order: usize) -> Result<CheckReport> {
    let f = m2_display(order)?;
    let g = transformed_series(&solve_functional_equation(2, order, false), 2, order)?;
    Ok(CheckReport::from_mismatch("m2-display", 2, order, f.first_difference(&g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{closed_form_g1, closed_form_m1_double_sum};

    #[test]
    fn top_series() {
        let t = phi_top(2);
        assert_eq!(t.coeff(0), &Poly::var(Var::V));
        let expected = Poly::var_pow(Var::V, 3).mul(&Poly::var_pow(Var::Y, 2)).scale(&rat_frac(1, 2));
        assert_eq!(t.coeff(2), &expected);
    }

    #[test]
    fn m1_phi0_and_assembly() {
        let table = phi_recursion(1, 5).unwrap();
        for k in 0..=1 {
            for c in table.phi[k].coeffs() {
                assert!(c.coeff_in(Var::V, 0).is_zero());
            }
        }
        let f = assemble_f(&table).unwrap();
        assert_eq!(f, closed_form_m1_double_sum(5));
    }

    #[test]
    fn assembly_matches_solver() {
        assert!(trivariate_check(1, 5).unwrap().passed());
        assert!(trivariate_check(2, 3).unwrap().passed());
    }

    #[test]
    fn y_one_matches_g1() {
        for m in 1..=3 {
            let table = phi_recursion(m, 3).unwrap();
            let f = assemble_f(&table).unwrap().map(|c| c.eval(Var::Y, &rat(1)));
            assert_eq!(f, closed_form_g1(m, 3).unwrap(), "m={m}");
        }
    }

    #[test]
    fn display_m2() {
        assert!(m2_display_check(3).unwrap().passed());
    }

    #[test]
    fn json_export() {
        let table = phi_recursion(1, 2).unwrap();
        let j = table.to_json();
        assert_eq!(j.phi.len(), 2);
        assert_eq!(j.phi[1][0].get("v").map(String::as_str), Some("1"));
    }
}
