//! Closed-form interval counts and brute-force refined counting polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::labellings_count;
use crate::poly::{Mono, Poly, Var};
use crate::ring::{binomial, format_rat, rat_int, Rat, Ring};
use crate::tamari::{enumerate_intervals, TamariPoset};

/// Number of intervals of `T_n^(m)`: `(m+1)/(n(mn+1)) C((m+1)^2 n + m, n-1)`.
pub fn closed_unlabelled(m: u32, n: usize) -> BigInt {
    assert!(n >= 1, "closed form needs n >= 1");
    let (m, n) = (m as i64, n as i64);
    let num = BigInt::from(m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1);
    let den = BigInt::from(n * (m * n + 1));
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "closed form is an integer");
    q
}

/// Number of labelled intervals: `(m+1)^n (mn+1)^(n-2)`, evaluated in
/// rational arithmetic because the exponent is negative when `n = 1`.
pub fn closed_labelled(m: u32, n: usize) -> BigInt {
    assert!(n >= 1, "closed form needs n >= 1");
    let a = Rat::from_integer(BigInt::from(m + 1)).pow(n as i32);
    let b = Rat::from_integer(BigInt::from(m as i64 * n as i64 + 1)).pow(n as i32 - 2);
    let v = a * b;
    assert!(v.is_integer(), "closed form is an integer");
    v.to_integer()
}

/// Sum over intervals `[P,Q]` of `T_n^(m)` of
/// `lab(Q) x^c(P) y^r(Q) (q^dist)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedCount {
    pub m: u32,
    pub n: usize,
    pub with_q: bool,
    pub intervals: usize,
    pub poly: Poly,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefinedCountJson {
    pub m: u32,
    pub n: usize,
    pub with_q: bool,
    pub intervals: usize,
    pub labelled: String,
    pub poly: std::collections::BTreeMap<String, String>,
}

impl RefinedCount {
    pub fn labelled_total(&self) -> BigInt {
        let v = self.poly.eval_all_ones();
        assert!(v.is_integer());
        v.to_integer()
    }

    /// All coefficients are integers `>= 0`.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.poly
            .terms()
            .all(|(_, c)| c.is_integer() && !c.is_negative())
    }

    pub fn to_json(&self) -> RefinedCountJson {
        RefinedCountJson {
            m: self.m,
            n: self.n,
            with_q: self.with_q,
            intervals: self.intervals,
            labelled: self.labelled_total().to_string(),
            poly: self.poly.to_string_map(),
        }
    }
}

pub fn refined_polynomial(poset: &TamariPoset, with_q: bool) -> RefinedCount {
    let mut poly = Poly::default();
    let intervals = enumerate_intervals(poset);
    for it in &intervals {
        let mut mono = Mono::one()
            .with(Var::X, it.contacts as i32)
            .with(Var::Y, it.rise as i32);
        if with_q {
            mono = mono.with(Var::Q, it.dist as i32);
        }
        poly.add_term(mono, rat_int(labellings_count(&it.upper)));
    }
    RefinedCount {
        m: poset.m(),
        n: poset.n(),
        with_q,
        intervals: intervals.len(),
        poly,
    }
}

/// Builds the poset under `cap` and returns its refined polynomial.
pub fn refined_polynomial_capped(m: u32, n: usize, with_q: bool, cap: usize) -> Result<RefinedCount> {
    let poset = TamariPoset::build_capped(m, n, cap)?;
    Ok(refined_polynomial(&poset, with_q))
}

/// One row of the interval table: brute force next to the closed forms.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub unlabelled: String,
    pub labelled: String,
    pub closed_unlabelled: String,
    pub closed_labelled: String,
    pub poly: std::collections::BTreeMap<String, String>,
}

impl CountRow {
    pub fn agrees(&self) -> bool {
        self.unlabelled == self.closed_unlabelled && self.labelled == self.closed_labelled
    }
}

pub fn count_row(r: &RefinedCount) -> CountRow {
    let (cu, cl) = if r.n == 0 {
        (BigInt::one(), BigInt::one())
    } else {
        (closed_unlabelled(r.m, r.n), closed_labelled(r.m, r.n))
    };
    CountRow {
        n: r.n,
        unlabelled: r.intervals.to_string(),
        labelled: r.labelled_total().to_string(),
        closed_unlabelled: cu.to_string(),
        closed_labelled: cl.to_string(),
        poly: r.poly.to_string_map(),
    }
}

/// Checks that setting `q = 1` in the q-refined polynomial gives the plain one.
pub fn check_q_collapse(plain: &RefinedCount, refined: &RefinedCount) -> Result<()> {
    let collapsed = refined.poly.eval(Var::Q, &Rat::one());
    if collapsed != plain.poly {
        return Err(Error::Mismatch(format!(
            "q = 1 gives {} instead of {}",
            collapsed, plain.poly
        )));
    }
    Ok(())
}

/// Largest q-exponent appearing in a polynomial.
pub fn q_degree(p: &Poly) -> i32 {
    p.max_degree(Var::Q).unwrap_or(0)
}

/// Human-readable rendering used in text output.
pub fn describe(r: &RefinedCount) -> String {
    format!(
        "m={} n={} intervals={} labelled={} poly={}",
        r.m,
        r.n,
        r.intervals,
        format_rat(&r.poly.eval_all_ones()),
        if r.poly.is_zero() { "0".into() } else { r.poly.to_string() }
    )
}
