//! Cross-checks between the solver, the brute-force counts and the
//! transformed equation in `z` and `u`.

use serde::Serialize;

use crate::counting::{refined_polynomial, RefinedCount};
use crate::error::Result;
use crate::poly::{one_plus_u_pow, Poly, Var};
use crate::report::CheckReport;
use crate::ring::{rat, Ring};
use crate::tamari::TamariPoset;

use super::subst::{exp_poly, transformed_series};
use super::tseries::solve_functional_equation;
use super::zseries::{inv_unit, ZSeries};

/// Solver coefficients against brute-force refined polynomials for `n <= n_max`.
pub fn solver_vs_oracle(m: u32, n_max: usize, with_q: bool, cap: usize) -> Result<CheckReport> {
    let name = if with_q { "solver-oracle-q" } else { "solver-oracle" };
    let f = solve_functional_equation(m, n_max, with_q);
    for n in 0..=n_max {
        let poset = TamariPoset::build_capped(m, n, cap)?;
        let oracle = refined_polynomial(&poset, with_q);
        if &oracle.poly != f.coeff(n) {
            return Ok(CheckReport::fail(
                name,
                m,
                n_max,
                Some(n),
                format!("solver {} against oracle {}", f.coeff(n), oracle.poly),
            ));
        }
    }
    Ok(CheckReport::pass(name, m, n_max))
}

#[derive(Clone, Debug, Serialize)]
pub struct QTableRow {
    pub n: usize,
    /// `n! [t^n] F(t, q; 1, 1)` as a polynomial in `q`.
    pub poly: std::collections::BTreeMap<String, String>,
    pub q_degree: i32,
    pub max_chain: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct QReport {
    pub report: CheckReport,
    pub table: Vec<QTableRow>,
}

/// q-solver at `q = 1` against the plain solver, q-solver against the
/// q-refined brute force, and q-degrees against the longest chains.
pub fn verify_q_specialization(m: u32, n_max: usize, cap: usize) -> Result<QReport> {
    let plain = solve_functional_equation(m, n_max, false);
    let withq = solve_functional_equation(m, n_max, true);
    let one = rat(1);
    let mut table = Vec::new();
    let mut failure: Option<CheckReport> = None;
    for n in 0..=n_max {
        let poset = TamariPoset::build_capped(m, n, cap)?;
        let oracle: RefinedCount = refined_polynomial(&poset, true);
        let coeff = withq.coeff(n);
        let fail = |what: &str| CheckReport::fail("q-analogue", m, n_max, Some(n), what.to_string());
        if failure.is_none() {
            if &coeff.eval(Var::Q, &one) != plain.coeff(n) {
                failure = Some(fail("q = 1 does not give the plain solver"));
            } else if &oracle.poly != coeff {
                failure = Some(fail("q-solver differs from the q-refined brute force"));
            }
        }
        let qdeg = coeff.max_degree(Var::Q).unwrap_or(0);
        let max_chain = poset.max_chain();
        if failure.is_none() && qdeg != max_chain as i32 {
            failure = Some(fail("q-degree differs from the longest chain"));
        }
        let at11 = coeff.eval(Var::X, &one).eval(Var::Y, &one);
        table.push(QTableRow {
            n,
            poly: at11.to_string_map(),
            q_degree: qdeg,
            max_chain,
        });
    }
    Ok(QReport {
        report: failure.unwrap_or_else(|| CheckReport::pass("q-analogue", m, n_max)),
        table,
    })
}

/// `(H - H(u=0)) / u` coefficientwise.
pub fn delta_u(h: &ZSeries<Poly>) -> ZSeries<Poly> {
    h.map(|c| c.sub(&c.eval(Var::U, &rat(0))).shift(Var::U, -1))
}

/// Checks the transformed equation
/// `dG/dy = z (1+u) e^{-mzu - m(m+1)z} (u G(u,1) / ((1+u)e^{-mzu} - 1) Delta_u)^(m) G`
/// on the solver output, through `z^order`.
pub fn transformed_equation_check(m: u32, order: usize) -> Result<CheckReport> {
    let f = solve_functional_equation(m, order, false);
    let g = transformed_series(&f, m, order)?;
    Ok(transformed_equation_holds(&g, m, order))
}

pub fn transformed_equation_holds(g: &ZSeries<Poly>, m: u32, order: usize) -> CheckReport {
    let mi = m as i64;
    let u = Poly::var(Var::U);
    let g1 = g.map(|c| c.eval(Var::Y, &rat(1)));
    // ((1+u) e^{-mzu} - 1) / u has constant term 1
    let d = exp_poly(&u.scale(&rat(-mi)), order)
        .mul_coeff(&one_plus_u_pow(1))
        .sub(&ZSeries::one(order));
    let d_over_u = d.map(|c| c.shift(Var::U, -1));
    let k = g1.mul(&inv_unit(&d_over_u).expect("constant term 1"));
    let mut h = g.clone();
    for _ in 0..m {
        h = k.mul(&delta_u(&h));
    }
    let pre = exp_poly(&u.scale(&rat(-mi)).add(&Poly::int(-mi * (mi + 1))), order)
        .mul_coeff(&one_plus_u_pow(1));
    let rhs = pre.mul(&h).shift(1);
    let lhs = g.map(|c| c.derivative(Var::Y));
    CheckReport::from_mismatch("transformed-equation", m, order, lhs.first_difference(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_small() {
        assert!(solver_vs_oracle(1, 3, false, 1000).unwrap().passed());
        assert!(solver_vs_oracle(2, 2, true, 1000).unwrap().passed());
    }

    #[test]
    fn q_table() {
        let r = verify_q_specialization(1, 3, 1000).unwrap();
        assert!(r.report.passed(), "{:?}", r.report);
        let row = &r.table[2];
        let mut expected = std::collections::BTreeMap::new();
        expected.insert("1".to_string(), "3".to_string());
        expected.insert("q".to_string(), "1".to_string());
        assert_eq!(row.poly, expected);
    }

    #[test]
    fn transformed_equation() {
        for m in 1..=2 {
            assert!(transformed_equation_check(m, 5).unwrap().passed());
        }
    }

    #[test]
    fn transformed_equation_detects_errors() {
        let f = solve_functional_equation(1, 4, false);
        let g = super::super::subst::transformed_series(&f, 1, 4).unwrap();
        let mut c = g.clone().into_coeffs();
        c[3] = c[3].add(&Poly::var(Var::Y).pow(2));
        let bad = ZSeries::from_coeffs(c, 4);
        let r = transformed_equation_holds(&bad, 1, 4);
        assert!(!r.passed());
    }
}
