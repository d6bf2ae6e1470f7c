//! Interpolation identities over exact rationals: for distinct `x_0..x_m`,
//! `sum x_i^m / prod_{j!=i}(x_i - x_j) = 1`,
//! `sum (1/x_i) / prod_{j!=i}(x_i - x_j) = (-1)^m prod 1/x_i`, and
//! `sum Q(x_i) / prod_{j!=i}(x_i - x_j) = 0` when `deg Q < m`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LagrangeReport {
    pub m: usize,
    pub leading: bool,
    pub reciprocal: bool,
    pub low_degree: bool,
}

impl LagrangeReport {
    pub fn ok(&self) -> bool {
        self.leading && self.reciprocal && self.low_degree
    }
}

fn weights(xs: &[Rat]) -> Vec<Rat> {
    (0..xs.len())
        .map(|i| {
            let d: Rat = (0..xs.len())
                .filter(|&j| j != i)
                .map(|j| &xs[i] - &xs[j])
                .product();
            d.recip()
        })
        .collect()
}

fn eval(q: &[Rat], x: &Rat) -> Rat {
    q.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

/// `xs` holds `m+1` points; `q` lists the coefficients of `Q` (low degree first).
pub fn lagrange_check(xs: &[Rat], q: &[Rat]) -> Result<LagrangeReport> {
    if xs.len() < 2 {
        return Err(Error::RepeatedPoints);
    }
    let m = xs.len() - 1;
    for i in 0..xs.len() {
        if xs[i].is_zero() || xs[..i].contains(&xs[i]) {
            return Err(Error::RepeatedPoints);
        }
    }
    if q.len() > m {
        return Err(Error::Mismatch(format!("Q must have degree < {m}")));
    }
    let w = weights(xs);
    let leading: Rat = xs.iter().zip(&w).map(|(x, w)| x.pow(m as i32) * w).sum();
    let recip: Rat = xs.iter().zip(&w).map(|(x, w)| x.recip() * w).sum();
    let prod_inv: Rat = xs.iter().map(|x| x.recip()).product();
    let sign = if m % 2 == 0 { Rat::one() } else { -Rat::one() };
    let low: Rat = xs.iter().zip(&w).map(|(x, w)| eval(q, x) * w).sum();
    Ok(LagrangeReport {
        m,
        leading: leading.is_one(),
        reciprocal: recip == sign * prod_inv,
        low_degree: low.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_frac};
    use proptest::prelude::*;

    #[test]
    fn hand_cases() {
        let r = lagrange_check(&[rat(2), rat(5)], &[rat(7)]).unwrap();
        assert!(r.ok());
        let r = lagrange_check(&[rat(1), rat(2), rat(3)], &[rat(1), rat(3)]).unwrap();
        assert!(r.ok());
        assert_eq!(lagrange_check(&[rat(1), rat(1)], &[]), Err(Error::RepeatedPoints));
        assert_eq!(lagrange_check(&[rat(0), rat(1)], &[]), Err(Error::RepeatedPoints));
    }

    #[test]
    fn detects_wrong_degree() {
        // Q of degree m is not annihilated
        let xs = [rat(1), rat(2), rat(4)];
        assert!(lagrange_check(&xs, &[rat(0), rat(0), rat(1)]).is_err());
        let xs = [rat(1), rat_frac(1, 2)];
        assert!(lagrange_check(&xs, &[rat(3)]).unwrap().ok());
    }

    fn tuple(m: usize) -> impl Strategy<Value = Vec<Rat>> {
        prop::collection::btree_set((1i64..60, 1i64..9), m + 1).prop_filter_map("distinct", |s| {
            let v: Vec<Rat> = s.into_iter().map(|(a, b)| rat_frac(a - 30, b)).collect();
            let mut seen = v.clone();
            seen.sort();
            seen.dedup();
            (seen.len() == v.len() && !v.iter().any(Zero::is_zero)).then_some(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn random_tuples((m, xs) in (1usize..=4).prop_flat_map(|m| (Just(m), tuple(m)))) {
            let q: Vec<Rat> = (0..m).map(|i| rat_frac(i as i64 * 3 - 2, i as i64 + 1)).collect();
            let r = lagrange_check(&xs, &q).unwrap();
            prop_assert!(r.ok());
        }
    }
}
