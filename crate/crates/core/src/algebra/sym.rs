//! Symmetric functions of the roots `u_0 = u, u_1, ..., u_m` of
//! `(1+U)^{m+1} = U^m v`, reduced to Laurent polynomials in `u`.
//!
//! A root-dependent expression is a [`Poly`] in the placeholder variable
//! `R`; summing it over a family of roots replaces `R^c` by the power sum
//! `p_c` of that family.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Mono, Poly, Var};
use crate::ring::{binomial, inv_factorial, rat, rat_int, Rat, Ring};
use crate::series::ZSeries;

use super::laurent::v_laurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `u_0, ..., u_m`
    All,
    /// `u_1, ..., u_m`
    Others,
}

/// Elementary symmetric functions and a window of power sums for both
/// root families. Immutable; [`SymContext::widened`] returns a new context.
#[derive(Clone, Debug)]
pub struct SymContext {
    m: u32,
    e_all: Vec<Poly>,
    e_others: Vec<Poly>,
    lo: i32,
    hi: i32,
    p_all: BTreeMap<i32, Poly>,
    p_others: BTreeMap<i32, Poly>,
}

/// Coefficients `b_k` of `P(U) / (U - u)` from the coefficients `c_k` of
/// `P` (highest degree first), by synthetic division.
fn synthetic_division(c: &[Poly]) -> Result<Vec<Poly>> {
    let u = Poly::var(Var::U);
    let mut b = vec![c[0].clone()];
    for ck in &c[1..] {
        let next = ck.add(&u.mul(b.last().unwrap()));
        b.push(next);
    }
    let rem = b.pop().unwrap();
    if !rem.is_zero() {
        return Err(Error::Cancellation("u is not a root".into()));
    }
    Ok(b)
}

/// Newton's identities: power sums `p_1..p_n` from `e_1..e_r`.
fn newton(e: &[Poly], n: usize) -> Vec<Poly> {
    let r = e.len() - 1;
    let mut p: Vec<Poly> = vec![Poly::int(r as i64)];
    for k in 1..=n {
        let mut acc = Poly::default();
        for i in 1..k.min(r + 1) {
            let t = e[i].mul(&p[k - i]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        if k <= r {
            let t = e[k].scale(&rat(k as i64));
            acc = if k % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        p.push(acc);
    }
    p
}

/// Elementary functions of the reciprocals: `e_j(1/x) = e_{r-j}(x) / e_r(x)`,
/// where `e_r` must be a monomial in `u`.
fn reciprocal(e: &[Poly]) -> Result<Vec<Poly>> {
    let r = e.len() - 1;
    let er = &e[r];
    let (mono, c) = match er.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] => (**m, (*c).clone()),
        _ => return Err(Error::Cancellation(format!("{er} is not a monomial"))),
    };
    let mut inv = Mono::one();
    for (i, x) in mono.0.iter().enumerate() {
        inv.0[i] = -x;
    }
    Ok((0..=r)
        .map(|j| e[r - j].mul_mono(&inv, &c.recip()))
        .collect())
}

fn power_sums(e: &[Poly], lo: i32, hi: i32) -> Result<BTreeMap<i32, Poly>> {
    let mut out = BTreeMap::new();
    let pos = newton(e, hi.max(0) as usize);
    for (k, p) in pos.into_iter().enumerate() {
        out.insert(k as i32, p);
    }
    if lo < 0 {
        let neg = newton(&reciprocal(e)?, (-lo) as usize);
        for (k, p) in neg.into_iter().enumerate().skip(1) {
            out.insert(-(k as i32), p);
        }
    }
    Ok(out)
}

impl SymContext {
    /// Context with power sums `p_k` for `lo <= k <= hi`.
    pub fn new(m: u32, lo: i32, hi: i32) -> Result<Self> {
        assert!(m >= 1);
        let v = v_laurent(m);
        let e_all: Vec<Poly> = (0..=m as i64 + 1)
            .map(|j| {
                let b = rat_int(binomial(m as i64 + 1, j));
                let s = if j % 2 == 0 { b } else { -b };
                let base = Poly::constant(s);
                if j == 1 {
                    base.add(&v)
                } else {
                    base
                }
            })
            .collect();
        let c: Vec<Poly> = e_all
            .iter()
            .enumerate()
            .map(|(k, e)| if k % 2 == 0 { e.clone() } else { e.neg() })
            .collect();
        let b = synthetic_division(&c)?;
        let e_others: Vec<Poly> = b
            .iter()
            .enumerate()
            .map(|(k, x)| if k % 2 == 0 { x.clone() } else { x.neg() })
            .collect();
        let p_all = power_sums(&e_all, lo, hi)?;
        let p_others = power_sums(&e_others, lo, hi)?;
        Ok(SymContext {
            m,
            e_all,
            e_others,
            lo,
            hi,
            p_all,
            p_others,
        })
    }

    /// The default window `[-(m+2)N, (m+2)N]` for truncation order `N`.
    pub fn for_order(m: u32, order: usize) -> Result<Self> {
        let w = (m as i32 + 2) * (order as i32).max(1);
        SymContext::new(m, -w, w)
    }

    /// This context if it already covers `[lo, hi]`, otherwise a wider one.
    pub fn widened(&self, lo: i32, hi: i32) -> Result<SymContext> {
        if lo >= self.lo && hi <= self.hi {
            return Ok(self.clone());
        }
        SymContext::new(self.m, lo.min(self.lo), hi.max(self.hi))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn window(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    /// `e_j` of the family; zero beyond the family size.
    pub fn elementary(&self, fam: Family, j: usize) -> Poly {
        let e = match fam {
            Family::All => &self.e_all,
            Family::Others => &self.e_others,
        };
        e.get(j).cloned().unwrap_or_default()
    }

    pub fn family_size(&self, fam: Family) -> usize {
        match fam {
            Family::All => self.m as usize + 1,
            Family::Others => self.m as usize,
        }
    }

    pub fn power_sum(&self, fam: Family, k: i32) -> Result<&Poly> {
        let table = match fam {
            Family::All => &self.p_all,
            Family::Others => &self.p_others,
        };
        table.get(&k).ok_or(Error::WindowExhausted {
            lo: k.min(self.lo),
            hi: k.max(self.hi),
        })
    }

    /// `sum_i f(u_i)` over the family, for `f` a Laurent polynomial in `R`.
    pub fn sum_over_roots(&self, fam: Family, f: &Poly) -> Result<Poly> {
        let parts = f.collect_in(Var::R);
        if let (Some(&lo), Some(&hi)) = (parts.keys().next(), parts.keys().next_back()) {
            if lo < self.lo || hi > self.hi {
                return Err(Error::WindowExhausted {
                    lo: lo.min(self.lo),
                    hi: hi.max(self.hi),
                });
            }
        }
        let mut out = Poly::default();
        for (c, rest) in parts {
            out = out.add(&rest.mul(self.power_sum(fam, c)?));
        }
        Ok(out)
    }

    pub fn sum_over_roots_series(&self, fam: Family, f: &ZSeries<Poly>) -> Result<ZSeries<Poly>> {
        f.try_map(|c| self.sum_over_roots(fam, c))
    }

    /// `v^r sum_{i>=1} A(u_i)^r`, using `v^r A(U)^r = (1+U)^{rm} U^{r(1-m)} e^{-rzU}`.
    pub fn scaled_power_sum_a(&self, r: u32, order: usize) -> Result<ZSeries<Poly>> {
        let m = self.m as i32;
        let base = crate::poly::one_plus_u_pow(r * self.m)
            .rename(Var::U, Var::R)
            .shift(Var::R, r as i32 * (1 - m));
        let f = ZSeries::from_fn(order, |n| {
            let w = num_traits::Pow::pow(&rat(-(r as i64)), n as u32) * inv_factorial(n as u64);
            base.shift(Var::R, n as i32).scale(&w)
        });
        self.sum_over_roots_series(Family::Others, &f)
    }

    /// `v^{|lambda|} m_lambda(A(u_1), ..., A(u_m))`, via the expansion of
    /// augmented monomials over set partitions of the parts.
    pub fn scaled_monomial_a(&self, lambda: &[u32], order: usize) -> Result<ZSeries<Poly>> {
        let mut cache: BTreeMap<u32, ZSeries<Poly>> = BTreeMap::new();
        let mut total = ZSeries::zero(order);
        for partition in set_partitions(lambda.len()) {
            let mut term = ZSeries::one(order);
            let mut coeff = rat(1);
            for block in &partition {
                let size = block.len() as i64;
                let sign = if size % 2 == 1 { 1 } else { -1 };
                coeff *= rat(sign) * rat_int(crate::ring::factorial(size as u64 - 1));
                let weight: u32 = block.iter().map(|&i| lambda[i]).sum();
                if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(weight) {
                    e.insert(self.scaled_power_sum_a(weight, order)?);
                }
                term = term.mul(&cache[&weight]);
            }
            total = total.add(&term.scale(&coeff));
        }
        let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
        for &p in lambda {
            *mult.entry(p).or_default() += 1;
        }
        let denom: Rat = mult
            .values()
            .map(|&k| rat_int(crate::ring::factorial(k)))
            .product();
        Ok(total.scale(&denom.recip()))
    }
}

/// All set partitions of `{0, .., n-1}`.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(i);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Integer partitions of `n` as weakly decreasing part lists.
pub fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat_frac;

    fn u(e: i32) -> Poly {
        Poly::var_pow(Var::U, e)
    }

    #[test]
    fn elementary_m1() {
        let ctx = SymContext::new(1, -4, 4).unwrap();
        // e_1 = v - 2 = u + 1/u, e_2 = 1
        assert_eq!(ctx.elementary(Family::All, 1), u(1).add(&u(-1)));
        assert_eq!(ctx.elementary(Family::All, 2), Poly::int(1));
        assert_eq!(ctx.elementary(Family::Others, 1), u(-1));
        assert_eq!(ctx.power_sum(Family::All, 1).unwrap(), &u(1).add(&u(-1)));
        assert_eq!(ctx.power_sum(Family::Others, 3).unwrap(), &u(-3));
        assert_eq!(ctx.power_sum(Family::Others, -2).unwrap(), &u(2));
        assert!(ctx.power_sum(Family::Others, 5).is_err());
    }

    #[test]
    fn elementary_others_closed_form() {
        for m in 1..=4u32 {
            let ctx = SymContext::new(m, -1, 1).unwrap();
            for j in 0..m as i64 {
                let mut s = Poly::default();
                for p in 0..=j {
                    s = s.add(&u((p - j - 1) as i32).scale(&rat_int(binomial(m as i64 + 1, p))));
                }
                if (m as i64 - j - 1) % 2 != 0 {
                    s = s.neg();
                }
                assert_eq!(ctx.elementary(Family::Others, (m as i64 - j) as usize), s, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn product_of_one_plus_roots_is_v() {
        for m in 1..=4 {
            let ctx = SymContext::new(m, -1, 1).unwrap();
            let mut s = Poly::default();
            for j in 0..=m as usize + 1 {
                s = s.add(&ctx.elementary(Family::All, j));
            }
            assert_eq!(s, v_laurent(m));
        }
    }

    #[test]
    fn newton_consistency() {
        for m in 1..=3 {
            let ctx = SymContext::new(m, -6, 6).unwrap();
            for fam in [Family::All, Family::Others] {
                let e1 = ctx.elementary(fam, 1);
                let e2 = ctx.elementary(fam, 2);
                assert_eq!(ctx.power_sum(fam, 1).unwrap(), &e1);
                assert_eq!(ctx.power_sum(fam, 2).unwrap(), &e1.mul(&e1).sub(&e2.scale(&rat(2))));
            }
            for k in -6..=6 {
                let all = ctx.power_sum(Family::All, k).unwrap();
                let others = ctx.power_sum(Family::Others, k).unwrap();
                assert_eq!(all, &others.add(&u(k)), "m={m} k={k}");
            }
        }
    }

    /// At u = 6 and m = 2 the other roots are 3/4 and -2/9.
    #[test]
    fn numeric_roots_m2() {
        let ctx = SymContext::new(2, -5, 5).unwrap();
        let (r1, r2) = (rat_frac(3, 4), rat_frac(-2, 9));
        let v = v_laurent(2).eval(Var::U, &rat(6)).constant_term();
        for r in [&r1, &r2] {
            let lhs = num_traits::Pow::pow(&(r + rat(1)), 3u32);
            assert_eq!(lhs, r * r * &v);
        }
        for k in -5..=5 {
            let p = ctx.power_sum(Family::Others, k).unwrap().eval(Var::U, &rat(6));
            let expected = num_traits::Pow::pow(&r1, k) + num_traits::Pow::pow(&r2, k);
            assert_eq!(p, Poly::constant(expected), "k={k}");
        }
    }

    #[test]
    fn numeric_roots_m1() {
        let ctx = SymContext::new(1, -5, 5).unwrap();
        for k in -5..=5 {
            let p = ctx.power_sum(Family::Others, k).unwrap().eval(Var::U, &rat(3));
            assert_eq!(p, Poly::constant(num_traits::Pow::pow(&rat_frac(1, 3), k)));
        }
    }

    #[test]
    fn sum_over_roots_uses_placeholder() {
        let ctx = SymContext::new(1, -3, 3).unwrap();
        let f = Poly::var(Var::R).pow(2).add(&Poly::var(Var::Y));
        // u^2 + u^{-2} + 2y
        let expected = u(2).add(&u(-2)).add(&Poly::var(Var::Y).scale(&rat(2)));
        assert_eq!(ctx.sum_over_roots(Family::All, &f).unwrap(), expected);
        assert!(ctx.sum_over_roots(Family::All, &Poly::var_pow(Var::R, 9)).is_err());
        let wide = ctx.widened(-9, 9).unwrap();
        assert!(wide.sum_over_roots(Family::All, &Poly::var_pow(Var::R, 9)).is_ok());
    }

    #[test]
    fn partitions() {
        assert_eq!(set_partitions(3).len(), 5);
        assert_eq!(set_partitions(4).len(), 15);
        assert_eq!(integer_partitions(4).len(), 5);
        assert_eq!(integer_partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }
}
