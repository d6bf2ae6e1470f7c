//! Exponential generating series in `t` over polynomials in `x, y, q`,
//! and the order-by-order solver for the functional equation of labelled
//! intervals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Mono, Poly, Var};
use crate::ring::{binomial, rat, rat_int, Rat, Ring};

/// `F = sum a_n t^n / n!`, storing `a_n` for `n <= order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TSeries {
    coeffs: Vec<Poly>,
}

impl TSeries {
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        TSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `n! [t^n] F`.
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Result<TSeries> {
        if order > self.order() {
            return Err(Error::InsufficientTruncation {
                have: self.order(),
                need: order,
            });
        }
        Ok(TSeries::from_coeffs(self.coeffs[..=order].to_vec()))
    }

    pub fn add(&self, o: &TSeries) -> TSeries {
        let n = self.order().min(o.order());
        TSeries::from_coeffs((0..=n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect())
    }

    /// Product of EGFs: binomial convolution of the stored coefficients.
    pub fn mul(&self, o: &TSeries) -> TSeries {
        let n = self.order().min(o.order());
        TSeries::from_coeffs((0..=n).map(|k| egf_product_coeff(&self.coeffs, &o.coeffs, k)).collect())
    }

    pub fn map<F: Fn(&Poly) -> Poly>(&self, f: F) -> TSeries {
        TSeries::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, v: Var, val: &Rat) -> TSeries {
        self.map(|p| p.eval(v, val))
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            var: "t".into(),
            order: self.order(),
            coeffs: self.coeffs.iter().map(Poly::to_string_map).collect(),
        }
    }
}

/// `k! [t^k] (A B)` from the stored coefficients of `A` and `B`.
fn egf_product_coeff(a: &[Poly], b: &[Poly], k: usize) -> Poly {
    let mut acc = Poly::default();
    for i in 0..=k {
        if a[i].is_zero() || b[k - i].is_zero() {
            continue;
        }
        let c = rat_int(binomial(k as i64, i as i64));
        acc = acc.add(&a[i].mul(&b[k - i]).scale(&c));
    }
    acc
}

/// Serialized series: `{"var", "order", "coeffs"}` with polynomial maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub var: String,
    pub order: usize,
    pub coeffs: Vec<BTreeMap<String, String>>,
}

impl SeriesJson {
    pub fn polys(&self) -> Option<Vec<Poly>> {
        self.coeffs.iter().map(Poly::from_string_map).collect()
    }
}

fn x_exponent(m: &Mono) -> i32 {
    let e = m.exp(Var::X);
    assert!(e >= 0, "divided differences act on polynomials in x");
    e
}

/// `(S(x) - S(1)) / (x - 1)`.
pub fn delta(s: &Poly) -> Poly {
    let mut out = Poly::default();
    for (m, c) in s.terms() {
        for i in 0..x_exponent(m) {
            out.add_term(m.with(Var::X, i), c.clone());
        }
    }
    out
}

/// `(S(qx) - S(1)) / (qx - 1)`.
pub fn delta_q(s: &Poly) -> Poly {
    let mut out = Poly::default();
    for (m, c) in s.terms() {
        let q0 = m.exp(Var::Q);
        for i in 0..x_exponent(m) {
            out.add_term(m.with(Var::X, i).with(Var::Q, q0 + i), c.clone());
        }
    }
    out
}

/// Solves `dF/dy = t x (F(x,1) . Delta)^(m) F` with `F(x,0) = x`, order by
/// order up to `t^order`. With `with_q` the q-divided difference is used.
///
/// Writing `T_0 = F` and `T_j = F(x,1) * Delta(T_{j-1})`, the coefficient of
/// `t^n / n!` in `t x T_m` is `n x [T_m]_{n-1}`, which only involves
/// `a_0 .. a_{n-1}`; `a_n` is then its antiderivative in `y` vanishing at 0.
pub fn solve_functional_equation(m: u32, order: usize, with_q: bool) -> TSeries {
    let m = m as usize;
    let d: fn(&Poly) -> Poly = if with_q { delta_q } else { delta };
    let one = Rat::from_integer(1.into());
    let mut a: Vec<Poly> = vec![Poly::var(Var::X)];
    let mut f1: Vec<Poly> = vec![a[0].eval(Var::Y, &one)];
    // t[j][k] = [T_j]_k ; dt[j][k] = Delta([T_j]_k)
    let mut t: Vec<Vec<Poly>> = vec![Vec::new(); m + 1];
    let mut dt: Vec<Vec<Poly>> = vec![Vec::new(); m + 1];
    let x = Poly::var(Var::X);
    for n in 1..=order {
        let k = n - 1;
        t[0].push(a[k].clone());
        dt[0].push(d(&a[k]));
        for j in 1..=m {
            let c = egf_product_coeff(&f1, &dt[j - 1], k);
            dt[j].push(d(&c));
            t[j].push(c);
        }
        let dy = t[m][k].mul(&x).scale(&rat(n as i64));
        let an = dy.integrate(Var::Y).expect("nonnegative powers of y");
        f1.push(an.eval(Var::Y, &one));
        a.push(an);
    }
    TSeries::from_coeffs(a)
}
