//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! One fixed set of indeterminates covers every stage of the computation:
//! `x, y, q` for interval statistics, `u, v` after the change of variables,
//! and `r` as a formal placeholder for "one root" in symmetric reductions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::ring::{format_rat, parse_rat, rat, Rat, Ring};

pub const NVARS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Q = 2,
    U = 3,
    V = 4,
    R = 5,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Q, Var::U, Var::V, Var::R];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Q => "q",
            Var::U => "u",
            Var::V => "v",
            Var::R => "r",
        }
    }

    fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

/// Exponent vector, indexed by [`Var`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub [i32; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn var(v: Var, e: i32) -> Self {
        let mut m = Mono::default();
        m.0[v as usize] = e;
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v as usize]
    }

    pub fn with(mut self, v: Var, e: i32) -> Self {
        self.0[v as usize] = e;
        self
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = *self;
        for i in 0..NVARS {
            out.0[i] += other.0[i];
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Canonical sparse polynomial: no stored zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", format_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", format_rat(&abs), m)?;
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn constant(c: Rat) -> Self {
        Self::term(c, Mono::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rat::one(), Mono::var(v, 1))
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(Rat::one(), Mono::var(v, e))
    }

    pub fn term(c: Rat, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Builds `sum c_i * m_i`, merging repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rat)>>(it: I) -> Self {
        let mut p = Poly::default();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Constant term (the coefficient of the empty monomial).
    pub fn constant_term(&self) -> Rat {
        self.coeff(&Mono::one())
    }

    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn support_vars(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) != 0))
            .collect()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) != 0)
    }

    pub fn map_coeffs<F: Fn(&Rat) -> Rat>(&self, f: F) -> Self {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Keeps the terms whose exponent in `v` satisfies `keep`.
    pub fn filter_degree<F: Fn(i32) -> bool>(&self, v: Var, keep: F) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m.exp(v)))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, v: Var, e: i32) -> Self {
        if e == 0 {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = *m;
                    m2.0[v as usize] += e;
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::default();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.mul(mono), k * c)).collect(),
        }
    }

    /// Groups by exponent of `v`; the returned polynomials have `v` stripped.
    pub fn collect_in(&self, v: Var) -> BTreeMap<i32, Poly> {
        let mut out: BTreeMap<i32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            out.entry(e).or_default().terms.insert(m.with(v, 0), c.clone());
        }
        out
    }

    /// Coefficient of `v^e`, with `v` stripped.
    pub fn coeff_in(&self, v: Var, e: i32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.with(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Substitutes a scalar for `v`. Negative exponents need `val != 0`.
    pub fn eval(&self, v: Var, val: &Rat) -> Self {
        let mut out = Poly::default();
        let mut cache: BTreeMap<i32, Rat> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let p = cache
                .entry(e)
                .or_insert_with(|| {
                    if e >= 0 {
                        num_traits::Pow::pow(val, e as u32)
                    } else {
                        num_traits::Pow::pow(&val.recip(), (-e) as u32)
                    }
                })
                .clone();
            out.add_term(m.with(v, 0), c * p);
        }
        out
    }

    /// Substitutes a polynomial for `v`. Panics on negative exponents of `v`;
    /// use [`Poly::substitute_laurent`] when those can occur.
    pub fn substitute(&self, v: Var, val: &Poly) -> Self {
        self.substitute_laurent(v, val, None)
    }

    /// Substitutes `val` for `v`, using `inv_val` for negative exponents.
    pub fn substitute_laurent(&self, v: Var, val: &Poly, inv_val: Option<&Poly>) -> Self {
        let groups = self.collect_in(v);
        let mut out = Poly::default();
        let mut pos_pows: Vec<Poly> = vec![Poly::int(1)];
        let mut neg_pows: Vec<Poly> = vec![Poly::int(1)];
        for (e, rest) in groups {
            let p = if e >= 0 {
                while pos_pows.len() <= e as usize {
                    let next = pos_pows.last().unwrap().mul(val);
                    pos_pows.push(next);
                }
                &pos_pows[e as usize]
            } else {
                let inv = inv_val.expect("negative exponent without an inverse for substitution");
                let k = (-e) as usize;
                while neg_pows.len() <= k {
                    let next = neg_pows.last().unwrap().mul(inv);
                    neg_pows.push(next);
                }
                &neg_pows[k]
            };
            out = out.add(&rest.mul(p));
        }
        out
    }

    /// `v -> 1/v`.
    pub fn invert_var(&self, v: Var) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = *m;
                    m2.0[v as usize] = -m2.0[v as usize];
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// Renames `from` into `to` (the target must be absent).
    pub fn rename(&self, from: Var, to: Var) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = *m;
                    debug_assert_eq!(m2.0[to as usize], 0);
                    m2.0[to as usize] = m2.0[from as usize];
                    m2.0[from as usize] = 0;
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    pub fn derivative(&self, v: Var) -> Self {
        Poly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) != 0).map(|(m, c)| {
            let e = m.exp(v);
            (m.with(v, e - 1), c * rat(e as i64))
        }))
    }

    /// Antiderivative in `v` with zero constant of integration.
    /// Returns `None` if some exponent of `v` is `-1`.
    pub fn integrate(&self, v: Var) -> Option<Self> {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == -1 {
                return None;
            }
            out.add_term(m.with(v, e + 1), c / rat((e + 1) as i64));
        }
        Some(out)
    }

    /// Exact division by the monomial `v^e`: fails if a term would get a
    /// negative exponent.
    pub fn div_var_pow_exact(&self, v: Var, e: i32) -> Option<Self> {
        if self.terms.keys().any(|m| m.exp(v) < e) {
            return None;
        }
        Some(self.shift(v, -e))
    }

    /// Serializable monomial -> coefficient map with sorted keys.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(m, c)| (m.to_string(), format_rat(c)))
            .collect()
    }

    pub fn from_string_map(map: &BTreeMap<String, String>) -> Option<Self> {
        let mut p = Poly::default();
        for (k, c) in map {
            p.add_term(parse_mono(k)?, parse_rat(c)?);
        }
        Some(p)
    }

    /// Value with every indeterminate set to 1.
    pub fn eval_all_ones(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }
}

fn parse_mono(s: &str) -> Option<Mono> {
    let mut m = Mono::one();
    if s == "1" {
        return Some(m);
    }
    for factor in s.split('*') {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<i32>().ok()?),
            None => (factor, 1),
        };
        let v = Var::from_name(name)?;
        m.0[v as usize] += e;
    }
    Some(m)
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
    fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Poly::default();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * r)).collect(),
        }
    }
    fn from_rat(r: Rat) -> Self {
        Poly::constant(r)
    }
}

/// `(1+u)^k` for `k >= 0`.
pub fn one_plus_u_pow(k: u32) -> Poly {
    Poly::from_terms((0..=k).map(|i| {
        (
            Mono::var(Var::U, i as i32),
            crate::ring::rat_int(crate::ring::binomial(k as i64, i as i64)),
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(Var::X)
    }
    fn y() -> Poly {
        Poly::var(Var::Y)
    }

    #[test]
    fn arithmetic_is_canonical() {
        let p = x().add(&y());
        let q = p.sub(&y());
        assert_eq!(q, x());
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.mul(&p).len(), 3);
    }

    #[test]
    fn display_and_parse() {
        let p = x().pow(2).mul(&y()).scale(&rat(2)).add(&Poly::int(-3));
        assert_eq!(p.to_string(), "-3 + 2*x^2*y");
        let back = Poly::from_string_map(&p.to_string_map()).unwrap();
        assert_eq!(back, p);
        let l = Poly::var_pow(Var::U, -2);
        assert_eq!(Poly::from_string_map(&l.to_string_map()).unwrap(), l);
    }

    #[test]
    fn substitution_and_eval() {
        // (x^2 y) at x = 1 + u
        let p = x().pow(2).mul(&y());
        let s = p.substitute(Var::X, &Poly::int(1).add(&Poly::var(Var::U)));
        assert_eq!(s, one_plus_u_pow(2).mul(&y()));
        assert_eq!(p.eval(Var::X, &rat(3)), y().scale(&rat(9)));
    }

    #[test]
    fn integrate_and_differentiate() {
        let p = x().mul(&y().pow(2));
        let i = p.integrate(Var::Y).unwrap();
        assert_eq!(i.derivative(Var::Y), p);
        assert!(Poly::var_pow(Var::U, -1).integrate(Var::U).is_none());
    }
}
