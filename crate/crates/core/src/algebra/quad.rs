//! The ring `Q(u)[s] / (s^2 - (1+4u))`, which holds the explicit roots
//! `u_{1,2} = (1 + 3u +- (1+u)s) / (2u^2)` of `(1+U)^3 = U^2 v` at `m = 2`.

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::ring::{rat, Field, Rat, Ring};
use crate::series::ZSeries;
use crate::urat::URat;

/// `a + b s` with `s^2 = 1 + 4u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ext {
    pub a: URat,
    pub b: URat,
}

fn disc() -> URat {
    URat::from_poly(Poly::int(1).add(&Poly::var(Var::U).scale(&rat(4))))
}

impl Ext {
    pub fn new(a: URat, b: URat) -> Self {
        Ext { a, b }
    }

    pub fn base(a: URat) -> Self {
        Ext { a, b: URat::zero() }
    }

    /// The square root `s` of `1 + 4u`.
    pub fn s() -> Self {
        Ext {
            a: URat::zero(),
            b: URat::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Ext {
            a: self.a.clone(),
            b: self.b.neg(),
        }
    }

    /// `a^2 - (1+4u) b^2`.
    pub fn norm(&self) -> URat {
        self.a.mul(&self.a).sub(&disc().mul(&self.b).mul(&self.b))
    }

    /// The element itself if it lies in `Q(u)`.
    pub fn to_base(&self) -> Option<&URat> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Integer powers, negative ones through [`Field::inv`].
    pub fn powi(&self, e: i32) -> Result<Ext> {
        if e >= 0 {
            return Ok(Ring::pow(self, e as u32));
        }
        let inv = self.inv().ok_or_else(|| Error::Pole("non-invertible element".into()))?;
        Ok(Ring::pow(&inv, (-e) as u32))
    }

    /// Evaluates a polynomial in `u` (other variables kept as coefficients) at `self`.
    pub fn eval_poly(&self, p: &Poly) -> Result<Ext> {
        let mut out = Ext::zero();
        for (e, rest) in p.collect_in(Var::U) {
            out = out.add(&self.powi(e)?.mul(&Ext::base(URat::from_poly(rest))));
        }
        Ok(out)
    }
}

impl Ring for Ext {
    fn zero() -> Self {
        Ext::base(URat::zero())
    }
    fn one() -> Self {
        Ext::base(URat::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Ext::new(self.a.add(&o.a), self.b.add(&o.b))
    }
    fn sub(&self, o: &Self) -> Self {
        Ext::new(self.a.sub(&o.a), self.b.sub(&o.b))
    }
    fn mul(&self, o: &Self) -> Self {
        let a = self.a.mul(&o.a).add(&disc().mul(&self.b.mul(&o.b)));
        let b = self.a.mul(&o.b).add(&self.b.mul(&o.a));
        Ext::new(a, b)
    }
    fn neg(&self) -> Self {
        Ext::new(self.a.neg(), self.b.neg())
    }
    fn scale(&self, r: &Rat) -> Self {
        Ext::new(self.a.scale(r), self.b.scale(r))
    }
    fn from_rat(r: Rat) -> Self {
        Ext::base(URat::from_rat(r))
    }
}

impl Field for Ext {
    /// Requires a norm free of indeterminates other than `u`.
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conj();
        Some(Ext::new(c.a.mul(&n), c.b.mul(&n)))
    }
}

/// `u_1` (sign `+1`) or `u_2` (sign `-1`).
pub fn m2_root(sign: i64) -> Ext {
    let u = Poly::var(Var::U);
    let denom = URat::from_poly(u.pow(2).scale(&rat(2))).inv().unwrap();
    let a = URat::from_poly(Poly::int(1).add(&u.scale(&rat(3)))).mul(&denom);
    let b = URat::from_poly(Poly::int(1).add(&u)).mul(&denom).scale(&rat(sign));
    Ext::new(a, b)
}

/// All `m+1` roots `u_0 = u, u_1, .., u_m` for `m = 1` or `m = 2`.
pub fn explicit_roots(m: u32) -> Result<Vec<Ext>> {
    let u = Ext::base(URat::u());
    match m {
        1 => Ok(vec![u, Ext::base(URat::u().inv().unwrap())]),
        2 => Ok(vec![u, m2_root(1), m2_root(-1)]),
        _ => Err(Error::Mismatch(format!("no explicit roots for m = {m}"))),
    }
}

/// `A(w) = w/(1+w) e^{-zw}` for `w` in the extension.
pub fn a_of_ext(w: &Ext, order: usize) -> Result<ZSeries<Ext>> {
    let inv = w
        .add(&Ext::one())
        .inv()
        .ok_or_else(|| Error::Pole("A is evaluated at -1".into()))?;
    let lead = w.mul(&inv);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut pw = Ext::one();
    for n in 0..=order {
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        coeffs.push(lead.mul(&pw).scale(&(sign * crate::ring::inv_factorial(n as u64))));
        pw = pw.mul(w);
    }
    Ok(ZSeries::from_coeffs(coeffs, order))
}

/// Evaluates a z-series with coefficients polynomial (or Laurent) in `u` at `w`.
pub fn eval_series_at(h: &ZSeries<Poly>, w: &Ext) -> Result<ZSeries<Ext>> {
    h.try_map(|c| w.eval_poly(c))
}

/// Collapses a series that must lie in `Q(u)` back to rational functions.
pub fn to_base_series(h: &ZSeries<Ext>) -> Result<ZSeries<URat>> {
    h.try_map(|c| {
        c.to_base()
            .cloned()
            .ok_or_else(|| Error::Mismatch(format!("irrational part {} survives", c.b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::v_laurent;

    #[test]
    fn s_squares_to_disc() {
        assert_eq!(Ext::s().mul(&Ext::s()), Ext::base(disc()));
        let x = Ext::new(URat::u(), URat::one());
        assert_eq!(x.mul(&x.inv().unwrap()), Ext::one());
    }

    #[test]
    fn m2_roots_solve_the_equation() {
        let v = Ext::base(URat::from_poly(v_laurent(2).shift(Var::U, 2)).mul(
            &URat::from_poly(Poly::var(Var::U).pow(2)).inv().unwrap(),
        ));
        for w in explicit_roots(2).unwrap() {
            let lhs = Ring::pow(&w.add(&Ext::one()), 3);
            let rhs = Ring::pow(&w, 2).mul(&v);
            assert_eq!(lhs, rhs);
        }
        let r = explicit_roots(2).unwrap();
        // u_1 + u_2 = (1+3u)/u^2 and u_1 u_2 = -1/u
        let sum = r[1].add(&r[2]);
        let u = Poly::var(Var::U);
        let expected = URat::from_poly(Poly::int(1).add(&u.scale(&rat(3))))
            .mul(&URat::from_poly(u.pow(2)).inv().unwrap());
        assert_eq!(sum, Ext::base(expected));
        assert_eq!(r[1].mul(&r[2]), Ext::base(URat::u().inv().unwrap().neg()));
    }

    #[test]
    fn power_sums_match_symmetric_reduction() {
        let ctx = crate::algebra::sym::SymContext::new(2, -4, 4).unwrap();
        let r = explicit_roots(2).unwrap();
        for k in -4..=4 {
            let s = r[1].powi(k).unwrap().add(&r[2].powi(k).unwrap());
            let p = ctx.power_sum(crate::algebra::sym::Family::Others, k).unwrap();
            let expected = URat::from_poly(p.shift(Var::U, 8)).mul(&URat::from_poly(u8()).inv().unwrap());
            assert_eq!(s, Ext::base(expected), "k={k}");
        }
    }

    fn u8() -> Poly {
        Poly::var(Var::U).pow(8)
    }

    #[test]
    fn eval_and_collapse() {
        let w = m2_root(1);
        let p = Poly::var(Var::U).mul(&Poly::var(Var::Y));
        let h = ZSeries::constant(p, 2);
        let e = eval_series_at(&h, &w).unwrap();
        assert!(to_base_series(&e).is_err());
        let sym = e.add(&eval_series_at(&h, &m2_root(-1)).unwrap());
        assert!(to_base_series(&sym).is_ok());
        assert!(explicit_roots(3).is_err());
    }
}
