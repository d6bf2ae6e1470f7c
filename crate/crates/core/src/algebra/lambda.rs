//! `A(u) = u/(1+u) e^{-zu}` and the operator `Lambda(H) = (H - H(0)) / A`.

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::report::CheckReport;
use crate::ring::{inv_factorial, rat, Field, Ring};
use crate::series::ZSeries;
use crate::urat::URat;

/// `A(w) = w/(1+w) e^{-zw}` for a rational function `w` of `u`.
pub fn a_of(w: &URat, order: usize) -> Result<ZSeries<URat>> {
    let inv = w
        .add(&URat::one())
        .inv()
        .ok_or_else(|| Error::Pole("A is evaluated at -1".into()))?;
    let lead = w.mul(&inv);
    let mut pw = URat::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        coeffs.push(lead.mul(&pw).scale(&(sign * inv_factorial(n as u64))));
        pw = pw.mul(w);
    }
    Ok(ZSeries::from_coeffs(coeffs, order))
}

pub fn a_series(order: usize) -> ZSeries<URat> {
    a_of(&URat::u(), order).expect("u is not -1")
}

/// `1/A(u) = (1+u)/u e^{zu}`.
pub fn a_inverse(order: usize) -> ZSeries<URat> {
    let pre = URat::from_poly(crate::poly::one_plus_u_pow(1)).mul(&URat::u().inv().unwrap());
    ZSeries::exp_linear(&URat::u(), order).mul_coeff(&pre)
}

/// Value at `u = 0`, coefficientwise.
pub fn at_zero(h: &ZSeries<URat>) -> Result<ZSeries<URat>> {
    h.try_map(|c| c.at(&rat(0)))
}

/// `Lambda(H) = (H(u) - H(0)) / A(u)`; fails if some coefficient has a pole at 0.
pub fn lambda_op(h: &ZSeries<URat>) -> Result<ZSeries<URat>> {
    let h0 = at_zero(h)?;
    Ok(h.sub(&h0).mul(&a_inverse(h.order())))
}

/// Checks `Lambda^(k) H = A^{-k} (H - sum_{j<k} g_j A^j)` with
/// `g_j = (Lambda^(j) H)(0)`, through `z^order`.
pub fn lambda_expansion_check(h: &ZSeries<URat>, k: u32, order: usize) -> Result<CheckReport> {
    let h = h.truncate(order)?;
    let mut iterates = vec![h.clone()];
    for _ in 0..k {
        let next = lambda_op(iterates.last().unwrap())?;
        iterates.push(next);
    }
    let a = a_series(order);
    let ainv = a_inverse(order);
    let mut rest = h.clone();
    let mut apow = ZSeries::one(order);
    for it in iterates.iter().take(k as usize) {
        let g = at_zero(it)?;
        rest = rest.sub(&g.mul(&apow));
        apow = apow.mul(&a);
    }
    let rhs = rest.mul(&ainv.pow(k));
    let lhs = &iterates[k as usize];
    Ok(CheckReport::from_mismatch("lambda-expansion", 0, order, lhs.first_difference(&rhs)))
}

/// `(1+u) e^{-mzu}` as a series with rational-function coefficients.
pub fn initial_g(m: u32, order: usize) -> ZSeries<URat> {
    let c = Poly::var(Var::U).scale(&rat(-(m as i64)));
    crate::series::exp_poly(&c, order)
        .mul_coeff(&crate::poly::one_plus_u_pow(1))
        .map(|p| URat::from_poly(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::one_plus_u_pow;

    fn lift(s: &ZSeries<Poly>) -> ZSeries<URat> {
        s.map(|p| URat::from_poly(p.clone()))
    }

    #[test]
    fn a_basics() {
        let a = a_series(4);
        let one_plus_u = URat::from_poly(one_plus_u_pow(1));
        assert_eq!(a.coeff(0), &URat::u().mul(&one_plus_u.inv().unwrap()));
        // A(u) = u + O(u^2): every coefficient vanishes at u = 0
        for c in a.coeffs() {
            assert!(c.eval_u(&rat(0)).unwrap().is_zero());
        }
        assert_eq!(a.coeff(0).numer().coeff_in(Var::U, 1), Poly::int(1));
        let abar = a_of(&URat::u().inv().unwrap(), 3).unwrap();
        assert_eq!(abar.coeff(0), &one_plus_u.inv().unwrap());
        assert!(a_of(&URat::from_poly(Poly::int(-1)), 2).is_err());
        assert_eq!(a.mul(&a_inverse(4)), ZSeries::one(4));
    }

    #[test]
    fn lambda_examples() {
        let a = a_series(5);
        assert_eq!(lambda_op(&a).unwrap(), ZSeries::one(5));
        assert!(lambda_op(&ZSeries::one(5)).unwrap().is_zero());
        let u = ZSeries::constant(URat::u(), 5);
        let expected = lift(&crate::series::exp_poly(&Poly::var(Var::U), 5).mul_coeff(&one_plus_u_pow(1)));
        assert_eq!(lambda_op(&u).unwrap(), expected);
        let pole = ZSeries::constant(URat::u().inv().unwrap(), 2);
        assert!(lambda_op(&pole).is_err());
    }

    #[test]
    fn expansion_lemma() {
        let one = ZSeries::one(5);
        for k in 0..=3 {
            assert!(lambda_expansion_check(&one, k, 5).unwrap().passed());
        }
        let u2 = ZSeries::constant(URat::from_poly(Poly::var(Var::U).pow(2)), 5);
        assert!(lambda_expansion_check(&u2, 2, 5).unwrap().passed());
        let g = initial_g(2, 5);
        assert!(lambda_expansion_check(&g, 2, 5).unwrap().passed());
        // g_0 = 1 and g_j = 0 afterwards for H = 1
        assert!(lambda_op(&one).unwrap().is_zero());
    }
}
