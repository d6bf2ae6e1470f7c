//! Truncated power series in `z` over an exact coefficient ring.

use crate::error::{Error, Result};
use crate::ring::{inv_factorial, Field, Rat, Ring};

/// `sum_{i <= order} c_i z^i`; everything of higher order is discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct ZSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> ZSeries<C> {
    pub fn zero(order: usize) -> Self {
        ZSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        ZSeries { coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> C>(order: usize, f: F) -> Self {
        ZSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `exp(c z) = sum c^n z^n / n!`.
    pub fn exp_linear(c: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut pw = C::one();
        for n in 0..=order {
            coeffs.push(pw.scale(&inv_factorial(n as u64)));
            pw = pw.mul(c);
        }
        ZSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientTruncation {
                have: self.order(),
                need: order,
            });
        }
        Ok(ZSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn common(&self, o: &Self) -> usize {
        self.order().min(o.order())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(self.common(o), |i| self.coeffs[i].add(&o.coeffs[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(self.common(o), |i| self.coeffs[i].sub(&o.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.common(o);
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        ZSeries { coeffs: out }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.map(|c| c.scale(r))
    }

    /// Multiplies every coefficient by `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> ZSeries<D> {
        ZSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Ring, F: Fn(&C) -> Result<D>>(&self, f: F) -> Result<ZSeries<D>> {
        Ok(ZSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Multiplication by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        Self::from_fn(n, |i| {
            if i >= k {
                self.coeffs[i - k].clone()
            } else {
                C::zero()
            }
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// First index where the two series differ (up to the common order).
    pub fn first_difference(&self, o: &Self) -> Option<usize> {
        (0..=self.common(o)).find(|&i| self.coeffs[i] != o.coeffs[i])
    }
}

impl<C: Field> ZSeries<C> {
    /// Multiplicative inverse; the constant term must be invertible.
    pub fn inv(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .inv()
            .ok_or_else(|| Error::Pole("constant term of the series is not invertible".into()))?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for k in 1..=n {
            let mut s = C::zero();
            for j in 1..=k {
                s = s.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(s.mul(&c0).neg());
        }
        Ok(ZSeries { coeffs: out })
    }
}

/// Inverse of a series whose constant term is the unit `1`; works over any ring.
pub fn inv_unit<C: Ring>(s: &ZSeries<C>) -> Result<ZSeries<C>> {
    if s.coeff(0) != &C::one() {
        return Err(Error::Pole("constant term is not 1".into()));
    }
    let n = s.order();
    let mut out: Vec<C> = Vec::with_capacity(n + 1);
    out.push(C::one());
    for k in 1..=n {
        let mut acc = C::zero();
        for j in 1..=k {
            acc = acc.add(&s.coeff(j).mul(&out[k - j]));
        }
        out.push(acc.neg());
    }
    Ok(ZSeries::from_coeffs(out, n))
}
