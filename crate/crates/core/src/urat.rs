//! Rational functions in `u` whose numerators may carry further
//! indeterminates (`y`, ...). The denominator is a monic univariate
//! polynomial in `u`, kept coprime to the numerator.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Mono, Poly, Var};
use crate::ring::{Field, Rat, Ring};
use crate::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct URat {
    num: Poly,
    den: UPoly,
}

impl fmt::Debug for URat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "URat({})", self)
    }
}

impl fmt::Display for URat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den.to_poly())
        }
    }
}

/// Splits a polynomial into `u`-parts indexed by the remaining monomial.
fn u_parts(p: &Poly) -> BTreeMap<Mono, UPoly> {
    let mut raw: BTreeMap<Mono, Vec<Rat>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exp(Var::U);
        debug_assert!(e >= 0);
        let e = e as usize;
        let v = raw.entry(m.with(Var::U, 0)).or_default();
        if v.len() <= e {
            v.resize(e + 1, Rat::zero());
        }
        v[e] = c.clone();
    }
    raw.into_iter().map(|(k, v)| (k, UPoly::new(v))).collect()
}

fn from_parts(parts: &BTreeMap<Mono, UPoly>) -> Poly {
    let mut out = Poly::default();
    for (rest, up) in parts {
        for (i, c) in up.coeffs().iter().enumerate() {
            out.add_term(rest.with(Var::U, i as i32), c.clone());
        }
    }
    out
}

impl URat {
    pub fn new(num: Poly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = URat { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: Poly) -> Self {
        URat::new(p, UPoly::one())
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        URat::from_poly(Poly::var(Var::U))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = UPoly::one();
            return;
        }
        if let Some(lo) = self.num.min_degree(Var::U) {
            if lo < 0 {
                self.num = self.num.shift(Var::U, -lo);
                self.den = self.den.mul(&UPoly::monomial((-lo) as usize));
            }
        }
        if self.den.degree().unwrap_or(0) > 0 {
            let parts = u_parts(&self.num);
            let mut g = self.den.clone();
            for up in parts.values() {
                if g.degree() == Some(0) {
                    break;
                }
                g = g.gcd(up);
            }
            if g.degree().unwrap_or(0) > 0 {
                let reduced: BTreeMap<Mono, UPoly> = parts
                    .iter()
                    .map(|(k, up)| (*k, up.div_rem(&g).0))
                    .collect();
                self.num = from_parts(&reduced);
                self.den = self.den.div_rem(&g).0;
            }
        }
        let lead = self.den.lead().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            self.num = self.num.scale(&lead.recip());
            self.den = self.den.monic();
        }
    }

    /// `true` when the denominator is a power of `u`.
    pub fn is_laurent(&self) -> bool {
        self.den.as_monomial().is_some()
    }

    /// The Laurent polynomial this equals, if the denominator is a power of `u`.
    pub fn to_laurent(&self) -> Option<Poly> {
        let k = self.den.as_monomial()?;
        Some(self.num.shift(Var::U, -(k as i32)))
    }

    pub fn to_laurent_or_err(&self, what: &str) -> Result<Poly> {
        self.to_laurent().ok_or_else(|| {
            Error::Cancellation(format!("{what}: denominator {} does not cancel", self.den.to_poly()))
        })
    }

    /// Value at `u = c`; fails at a pole.
    pub fn eval_u(&self, c: &Rat) -> Result<Poly> {
        let d = self.den.eval(c);
        if d.is_zero() {
            return Err(Error::Pole(format!("pole at u = {}", crate::ring::format_rat(c))));
        }
        Ok(self.num.eval(Var::U, c).scale(&d.recip()))
    }

    /// Value at `u = c`, kept as a (constant in u) rational function.
    pub fn at(&self, c: &Rat) -> Result<URat> {
        Ok(URat::from_poly(self.eval_u(c)?))
    }

    /// Substitutes `u -> 1/u`.
    pub fn invert_u(&self) -> URat {
        let dn = self.den.degree().unwrap_or(0) as i32;
        let num = self.num.invert_var(Var::U).shift(Var::U, dn);
        let den_poly = self.den.to_poly().invert_var(Var::U).shift(Var::U, dn);
        let den = UPoly::from_poly(&den_poly).expect("univariate");
        URat::new(num, den)
    }

    /// Substitutes a rational function of `u` for `u`.
    pub fn compose_u(&self, w: &URat) -> Result<URat> {
        let parts = u_parts(&self.num);
        let mut num = URat::zero();
        let max_deg = parts.values().filter_map(|p| p.degree()).max().unwrap_or(0);
        let max_deg = max_deg.max(self.den.degree().unwrap_or(0));
        let mut pows = vec![URat::one()];
        for _ in 0..max_deg {
            let next = pows.last().unwrap().mul(w);
            pows.push(next);
        }
        for (rest, up) in &parts {
            let mut acc = URat::zero();
            for (i, c) in up.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&pows[i].scale(c));
                }
            }
            num = num.add(&acc.mul(&URat::from_poly(Poly::term(Rat::one(), *rest))));
        }
        let mut den = URat::zero();
        for (i, c) in self.den.coeffs().iter().enumerate() {
            if !c.is_zero() {
                den = den.add(&pows[i].scale(c));
            }
        }
        let inv = den
            .inv()
            .ok_or_else(|| Error::Pole("composition hits a pole".into()))?;
        Ok(num.mul(&inv))
    }

    pub fn mul_poly(&self, p: &Poly) -> URat {
        URat::new(self.num.mul(p), self.den.clone())
    }
}

impl Ring for URat {
    fn zero() -> Self {
        URat {
            num: Poly::default(),
            den: UPoly::one(),
        }
    }
    fn one() -> Self {
        URat {
            num: Poly::int(1),
            den: UPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return URat::new(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = self.den.div_rem(&g).0;
        let b = o.den.div_rem(&g).0;
        let num = self.num.mul(&b.to_poly()).add(&o.num.mul(&a.to_poly()));
        URat::new(num, self.den.mul(&b))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return URat::zero();
        }
        URat::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        URat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return URat::zero();
        }
        URat {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }
    fn from_rat(r: Rat) -> Self {
        URat::from_poly(Poly::constant(r))
    }
}

impl Field for URat {
    /// Only numerators free of indeterminates other than `u` can be inverted.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = UPoly::from_poly(&self.num)?;
        Some(URat::new(self.den.to_poly(), n))
    }
}

impl From<Poly> for URat {
    fn from(p: Poly) -> Self {
        URat::from_poly(p)
    }
}

impl URat {
    /// A Laurent polynomial in `u` as a rational function.
    pub fn from_poly_laurent(p: &Poly) -> URat {
        match p.min_degree(Var::U) {
            Some(d) if d < 0 => URat::new(p.shift(Var::U, -d), UPoly::monomial((-d) as usize)),
            _ => URat::from_poly(p.clone()),
        }
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num == Poly::constant(Rat::one())
    }
}
