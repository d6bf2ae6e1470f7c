//! The change of variables `t = z e^{-m(m+1)z}`, `x = (1+u) e^{-mzu}` and
//! the closed forms it produces.

use crate::error::{Error, Result};
use crate::poly::{one_plus_u_pow, Mono, Poly, Var};
use crate::ring::{factorial, inv_factorial, rat, rat_int, Rat, Ring};

use super::tseries::TSeries;
use super::zseries::ZSeries;

/// `F(t(z))` truncated at `z^order`, where `t = z e^{-m(m+1)z}`.
///
/// `t^n / n! = sum_k (-n m (m+1))^k z^{n+k} / (n! k!)`.
pub fn substitute_t_of_z(f: &TSeries, m: u32, order: usize) -> Result<ZSeries<Poly>> {
    if f.order() < order {
        return Err(Error::InsufficientTruncation {
            have: f.order(),
            need: order,
        });
    }
    let c = (m as i64) * (m as i64 + 1);
    Ok(ZSeries::from_fn(order, |j| {
        let mut acc = Poly::default();
        for n in 0..=j {
            let k = j - n;
            let w = crate::ring::rat(-(n as i64) * c);
            let coef = num_traits::Pow::pow(&w, k as u32) * inv_factorial(n as u64) * inv_factorial(k as u64);
            acc = acc.add(&f.coeff(n).scale(&coef));
        }
        acc
    }))
}

/// Replaces `x` by `(1+u) e^{-mzu}` in a z-series; `[z^j] x^k = (1+u)^k (-kmu)^j / j!`.
pub fn substitute_x_of_zu(s: &ZSeries<Poly>, m: u32, order: usize) -> Result<ZSeries<Poly>> {
    if s.order() < order {
        return Err(Error::InsufficientTruncation {
            have: s.order(),
            need: order,
        });
    }
    let mut out = ZSeries::zero(order);
    let mut out_coeffs: Vec<Poly> = out.clone().into_coeffs();
    for i in 0..=order {
        for (k, rest) in s.coeff(i).collect_in(Var::X) {
            if k < 0 {
                return Err(Error::Pole("negative power of x".into()));
            }
            let base = rest.mul(&one_plus_u_pow(k as u32));
            for (j, slot) in out_coeffs.iter_mut().enumerate().skip(i) {
                let d = (j - i) as i32;
                let w = num_traits::Pow::pow(&rat(-k as i64 * m as i64), d as u32) * inv_factorial(d as u64);
                if w == Rat::from_integer(0.into()) {
                    continue;
                }
                *slot = slot.add(&base.mul_mono(&Mono::var(Var::U, d), &w));
            }
        }
    }
    out = ZSeries::from_coeffs(out_coeffs, order);
    Ok(out)
}

/// Solver output expressed in `z` and `u`: `G(z; u, y[, q]) = F(t; x, y)`.
pub fn transformed_series(f: &TSeries, m: u32, order: usize) -> Result<ZSeries<Poly>> {
    let s = substitute_t_of_z(f, m, order)?;
    substitute_x_of_zu(&s, m, order)
}

/// `exp(c z)` for a polynomial `c`.
pub fn exp_poly(c: &Poly, order: usize) -> ZSeries<Poly> {
    ZSeries::exp_linear(c, order)
}

/// `(1+u) e^{(m+1)z - (m-1)zu} (1 + (1 - e^{mzu})/u)`, with the division by
/// `u` carried out on Laurent polynomials and checked to leave no pole.
pub fn closed_form_g1(m: u32, order: usize) -> Result<ZSeries<Poly>> {
    let m = m as i64;
    let u = Poly::var(Var::U);
    let lin = Poly::int(m + 1).sub(&u.scale(&rat(m - 1)));
    let e1 = exp_poly(&lin, order);
    let emu = exp_poly(&u.scale(&rat(m)), order);
    let frac = ZSeries::one(order)
        .sub(&emu)
        .map(|c| c.shift(Var::U, -1));
    for (i, c) in frac.coeffs().iter().enumerate() {
        if c.min_degree(Var::U).is_some_and(|d| d < 0) {
            return Err(Error::Cancellation(format!("1/u survives at z^{i}")));
        }
    }
    let bracket = ZSeries::one(order).add(&frac);
    Ok(e1.mul(&bracket).mul_coeff(&one_plus_u_pow(1)))
}

/// `F(t;1,1) = (1 - mz) e^{(m+1)z}`.
pub fn closed_form_f11(m: u32, order: usize) -> ZSeries<Poly> {
    let m = m as i64;
    let e = exp_poly(&Poly::int(m + 1), order);
    let lin = ZSeries::from_coeffs(vec![Poly::int(1), Poly::int(-m)], order);
    e.mul(&lin)
}

fn inv_fact_prod(i: usize, j: usize) -> Rat {
    inv_factorial(i as u64) * inv_factorial(j as u64)
}

/// The m = 1 trivariate series as the explicit double sum
/// `(1+u) e^{2yz} (sum_{i<=j} u^{j-i} .. - sum_{j<i} u^{i-j-1} ..)`,
/// with general term `z^{i+j} y^i (y-1)^j / (i! j!)`.
pub fn closed_form_m1_double_sum(order: usize) -> ZSeries<Poly> {
    let y = Poly::var(Var::Y);
    let ym1 = y.sub(&Poly::int(1));
    let mut inner = vec![Poly::default(); order + 1];
    for i in 0..=order {
        for j in 0..=(order - i) {
            let term = y.pow(i as u32).mul(&ym1.pow(j as u32)).scale(&inv_fact_prod(i, j));
            let e = if i <= j { (j - i) as i32 } else { (i - j - 1) as i32 };
            let term = term.mul_mono(&Mono::var(Var::U, e), &Rat::from_integer(1.into()));
            inner[i + j] = if i <= j { inner[i + j].add(&term) } else { inner[i + j].sub(&term) };
        }
    }
    let inner = ZSeries::from_coeffs(inner, order);
    let pre = exp_poly(&y.scale(&rat(2)), order).mul_coeff(&one_plus_u_pow(1));
    pre.mul(&inner)
}

/// The m = 1 trivariate series through its non-negative-part form
/// `(1+u) e^{2yz} [u^>=] (e^{zu(y-1) + zy/u} - u^{-1} e^{z(y-1)/u + zyu})`.
pub fn closed_form_m1_nonneg(order: usize) -> ZSeries<Poly> {
    let y = Poly::var(Var::Y);
    let ym1 = y.sub(&Poly::int(1));
    let u = Poly::var(Var::U);
    let ub = Poly::var_pow(Var::U, -1);
    let a = exp_poly(&u.mul(&ym1).add(&y.mul(&ub)), order);
    let b = exp_poly(&ub.mul(&ym1).add(&y.mul(&u)), order).mul_coeff(&ub);
    let inner = a.sub(&b).map(|c| c.filter_degree(Var::U, |e| e >= 0));
    let pre = exp_poly(&y.scale(&rat(2)), order).mul_coeff(&one_plus_u_pow(1));
    pre.mul(&inner)
}

/// `F(t;1,y)` at m = 1 as simple sums:
/// `e^{2yz} (sum_i z^{2i} y^i (y-1)^i / i!^2 - sum_j z^{2j+1} y^{j+1} (y-1)^j / ((j+1)! j!))`.
pub fn closed_form_m1_bessel(order: usize) -> ZSeries<Poly> {
    let y = Poly::var(Var::Y);
    let ym1 = y.sub(&Poly::int(1));
    let inner = ZSeries::from_fn(order, |k| {
        if k % 2 == 0 {
            let i = k / 2;
            y.pow(i as u32).mul(&ym1.pow(i as u32)).scale(&inv_fact_prod(i, i))
        } else {
            let j = (k - 1) / 2;
            y.pow(j as u32 + 1)
                .mul(&ym1.pow(j as u32))
                .scale(&inv_fact_prod(j + 1, j))
                .neg()
        }
    });
    exp_poly(&y.scale(&rat(2)), order).mul(&inner)
}

/// `n! [t^n]` read back from a z-series in `t`-compatible form: the labelled
/// counts `n! [t^n] F(t;1,1)` recovered from `F` as a series in `z` by
/// Lagrange inversion of `t = z e^{-m(m+1)z}`.
///
/// `[t^n] H(z(t)) = (1/n) [z^{n-1}] H'(z) e^{n m (m+1) z}`.
pub fn t_coefficients_from_z(h: &ZSeries<Poly>, m: u32) -> Vec<Poly> {
    let order = h.order();
    let c = (m as i64) * (m as i64 + 1);
    let mut out = vec![h.coeff(0).clone()];
    let deriv = ZSeries::from_fn(order.saturating_sub(1), |i| h.coeff(i + 1).scale(&rat(i as i64 + 1)));
    for n in 1..=order {
        let e = exp_poly(&Poly::int(n as i64 * c), order.saturating_sub(1));
        let prod = deriv.mul(&e);
        let coeff = prod.coeff(n - 1).scale(&(rat_int(factorial(n as u64)) / rat(n as i64)));
        out.push(coeff);
    }
    out
}
