//! Laurent polynomials in `u` (stored as [`Poly`] with possibly negative
//! `u`-exponents): positive parts, exact division by powers of `1+u`, and
//! conversion to and from polynomials in `v = (1+u)^{m+1} u^{-m}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{one_plus_u_pow, Mono, Poly, Var};
use crate::ring::{rat, Rat, Ring};
use crate::series::ZSeries;

/// `[u^>] L`.
pub fn positive_part(l: &Poly) -> Poly {
    l.filter_degree(Var::U, |e| e > 0)
}

/// `[u^>=] L`.
pub fn nonneg_part(l: &Poly) -> Poly {
    l.filter_degree(Var::U, |e| e >= 0)
}

pub fn positive_part_series(s: &ZSeries<Poly>) -> ZSeries<Poly> {
    s.map(positive_part)
}

pub fn nonneg_part_series(s: &ZSeries<Poly>) -> ZSeries<Poly> {
    s.map(nonneg_part)
}

/// `true` when no `u`-exponent is negative.
pub fn is_polynomial_in_u(l: &Poly) -> bool {
    l.min_degree(Var::U).is_none_or(|d| d >= 0)
}

/// `v = (1+u)^{m+1} u^{-m}` as a Laurent polynomial.
pub fn v_laurent(m: u32) -> Poly {
    one_plus_u_pow(m + 1).shift(Var::U, -(m as i32))
}

/// Exact division by `1+u`; fails if there is a remainder.
pub fn div_one_plus_u(l: &Poly) -> Result<Poly> {
    let parts: BTreeMap<i32, Poly> = l.collect_in(Var::U);
    let (Some(&lo), Some(&hi)) = (parts.keys().next(), parts.keys().next_back()) else {
        return Ok(Poly::default());
    };
    let mut out = Poly::default();
    let mut prev = Poly::default();
    for e in lo..=hi {
        let c = parts.get(&e).cloned().unwrap_or_default().sub(&prev);
        if e == hi {
            if !c.is_zero() {
                return Err(Error::Cancellation(format!("{l} is not divisible by 1+u")));
            }
            break;
        }
        out = out.add(&c.mul_mono(&Mono::var(Var::U, e), &rat(1)));
        prev = c;
    }
    Ok(out)
}

/// Exact division by `(1+u)^k`.
pub fn div_one_plus_u_pow(l: &Poly, k: u32) -> Result<Poly> {
    let mut cur = l.clone();
    for _ in 0..k {
        cur = div_one_plus_u(&cur)?;
    }
    Ok(cur)
}

/// Substitutes `V -> v(u)` in a polynomial in `V`.
pub fn v_to_laurent(p: &Poly, m: u32) -> Poly {
    let vl = v_laurent(m);
    let mut out = Poly::default();
    let mut pows = vec![Poly::int(1)];
    for (e, rest) in p.collect_in(Var::V) {
        assert!(e >= 0, "negative power of v");
        while pows.len() <= e as usize {
            let next = pows.last().unwrap().mul(&vl);
            pows.push(next);
        }
        out = out.add(&rest.mul(&pows[e as usize]));
    }
    out
}

/// The unique polynomial `Q` with `Q(v) = L`, found by descending
/// leading-term division (the top `u`-degree of `v^k` is `k`).
pub fn laurent_to_v(l: &Poly, m: u32) -> Result<Poly> {
    let vl = v_laurent(m);
    let mut rest = l.clone();
    let mut out = Poly::default();
    let mut pows = vec![Poly::int(1)];
    while let Some(d) = rest.max_degree(Var::U) {
        if d < 0 {
            return Err(Error::NotPolynomialInV(format!("remainder {rest}")));
        }
        while pows.len() <= d as usize {
            let next = pows.last().unwrap().mul(&vl);
            pows.push(next);
        }
        let c = rest.coeff_in(Var::U, d);
        rest = rest.sub(&c.mul(&pows[d as usize]));
        out = out.add(&c.mul_mono(&Mono::var(Var::V, d), &Rat::from_integer(1.into())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(e: i32) -> Poly {
        Poly::var_pow(Var::U, e)
    }

    #[test]
    fn parts() {
        let l = u(2).add(&Poly::int(3)).add(&u(-1));
        assert_eq!(positive_part(&l), u(2));
        assert_eq!(nonneg_part(&l), u(2).add(&Poly::int(3)));
        assert!(positive_part(&Poly::default()).is_zero());
        // [u^>](1+u)P = (1+u)[u^>]P + u [u^0]P
        let p = u(-1).add(&Poly::int(2)).add(&u(1));
        let lhs = positive_part(&one_plus_u_pow(1).mul(&p));
        let rhs = one_plus_u_pow(1)
            .mul(&positive_part(&p))
            .add(&u(1).scale(&p.coeff_in(Var::U, 0).constant_term()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_by_one_plus_u() {
        let l = one_plus_u_pow(3).mul(&u(-2)).mul(&Poly::var(Var::Y));
        assert_eq!(div_one_plus_u_pow(&l, 3).unwrap(), u(-2).mul(&Poly::var(Var::Y)));
        assert!(div_one_plus_u(&u(1)).is_err());
        assert!(div_one_plus_u_pow(&one_plus_u_pow(2), 3).is_err());
    }

    #[test]
    fn v_conversions() {
        assert_eq!(laurent_to_v(&Poly::int(5), 1).unwrap(), Poly::int(5));
        let v1 = u(1).add(&Poly::int(2)).add(&u(-1));
        assert_eq!(laurent_to_v(&v1, 1).unwrap(), Poly::var(Var::V));
        let v2 = u(2)
            .add(&u(1).scale(&rat(4)))
            .add(&Poly::int(6))
            .add(&u(-1).scale(&rat(4)))
            .add(&u(-2));
        assert_eq!(laurent_to_v(&v2, 1).unwrap(), Poly::var(Var::V).pow(2));
        assert!(laurent_to_v(&u(-1), 1).is_err());
        assert!(laurent_to_v(&u(1), 2).is_err());
    }

    #[test]
    fn v_round_trip() {
        for m in 1..=3 {
            let mut q = Poly::default();
            for d in 0..=8 {
                q = q.add(&Poly::var(Var::V).pow(d).mul(&Poly::var(Var::Y).pow(d % 3)).scale(&rat(d as i64 - 3)));
            }
            assert_eq!(laurent_to_v(&v_to_laurent(&q, m), m).unwrap(), q);
        }
    }
}
