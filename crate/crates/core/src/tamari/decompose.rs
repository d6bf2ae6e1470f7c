//! Recursive decomposition of ordinary (m = 1) Tamari intervals in Dyck
//! form: `P = u P1l d P1r P2`, `Q = u Q1 d Q2`.

use std::collections::HashSet;

use serde::Serialize;

use super::{enumerate_intervals, Interval, TamariPoset};
use crate::error::{Error, Result};
use crate::paths::{Form, PathWord, StepBits};

/// An interval of the ordinary Tamari lattice, both paths in Dyck form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckInterval {
    pub lower: PathWord,
    pub upper: PathWord,
}

/// An interval whose lower path has a distinguished contact, stored as its
/// index (from 0) among the contacts of the lower path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedInterval {
    pub lower: PathWord,
    pub upper: PathWord,
    pub point: usize,
}

impl PointedInterval {
    /// Proper means the distinguished contact is not the origin.
    pub fn is_proper(&self) -> bool {
        self.point > 0
    }
}

impl DyckInterval {
    pub fn new(lower: PathWord, upper: PathWord) -> Result<Self> {
        let lower = to_plain_dyck(&lower)?;
        let upper = to_plain_dyck(&upper)?;
        if lower.size() != upper.size() {
            return Err(Error::InvalidPath("lower and upper paths differ in size".into()));
        }
        Ok(DyckInterval { lower, upper })
    }

    pub fn from_interval(it: &Interval) -> Result<Self> {
        DyckInterval::new(it.lower.clone(), it.upper.clone())
    }

    pub fn size(&self) -> usize {
        self.lower.size()
    }
}

fn to_plain_dyck(p: &PathWord) -> Result<PathWord> {
    if p.m() != 1 {
        return Err(Error::InvalidPath(format!("{} is not an ordinary Dyck path", p.word())));
    }
    match p.form() {
        Form::Dyck => Ok(p.clone()),
        Form::Ballot => p.ballot_to_mdyck(),
    }
}

fn bits(p: &PathWord) -> Vec<bool> {
    p.steps().iter().collect()
}

fn dyck(steps: &[bool]) -> PathWord {
    PathWord::from_steps(1, Form::Dyck, StepBits::from_bools(steps.iter().copied()))
        .expect("factor of a Dyck path")
}

/// Length of the prefix ending at the first return to the axis.
fn first_return(steps: &[bool]) -> usize {
    let mut h = 0i64;
    for (i, &up) in steps.iter().enumerate() {
        h += if up { 1 } else { -1 };
        if h == 0 {
            return i + 1;
        }
    }
    unreachable!("nonempty Dyck path returns to the axis")
}

/// Position (in steps) of the `k`-th contact, counting the origin as 0.
fn contact_position(steps: &[bool], k: usize) -> Option<usize> {
    let mut h = 0i64;
    let mut seen = 0usize;
    if k == 0 {
        return Some(0);
    }
    for (i, &up) in steps.iter().enumerate() {
        h += if up { 1 } else { -1 };
        if h == 0 {
            seen += 1;
            if seen == k {
                return Some(i + 1);
            }
        }
    }
    None
}

pub fn decompose_interval(it: &DyckInterval) -> Result<(PointedInterval, DyckInterval)> {
    if it.size() == 0 {
        return Err(Error::EmptyInterval);
    }
    let p = bits(&it.lower);
    let q = bits(&it.upper);
    let r = first_return(&q);
    let q1 = &q[1..r - 1];
    let q2 = &q[r..];
    let p1 = &p[..r];
    let p2 = &p[r..];
    if !is_dyck(p1) || !is_dyck(p2) {
        return Err(Error::InvalidPath(format!(
            "{} does not split along {}",
            it.lower.word(),
            it.upper.word()
        )));
    }
    let r1 = first_return(p1);
    let p1l = &p1[1..r1 - 1];
    let p1r = &p1[r1..];
    let point = dyck(p1l).contacts() - 1;
    let lower1: Vec<bool> = p1l.iter().chain(p1r).copied().collect();
    Ok((
        PointedInterval {
            lower: dyck(&lower1),
            upper: dyck(q1),
            point,
        },
        DyckInterval {
            lower: dyck(p2),
            upper: dyck(q2),
        },
    ))
}

fn is_dyck(steps: &[bool]) -> bool {
    let mut h = 0i64;
    for &up in steps {
        h += if up { 1 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    h == 0
}

pub fn recompose_interval(i1: &PointedInterval, i2: &DyckInterval) -> Result<DyckInterval> {
    let l = bits(&i1.lower);
    let split = contact_position(&l, i1.point).ok_or_else(|| {
        Error::InvalidPointed(format!(
            "contact {} does not exist on {} ({} contacts)",
            i1.point,
            i1.lower.word(),
            i1.lower.contacts()
        ))
    })?;
    let mut p = vec![true];
    p.extend_from_slice(&l[..split]);
    p.push(false);
    p.extend_from_slice(&l[split..]);
    p.extend(bits(&i2.lower));
    let mut q = vec![true];
    q.extend(bits(&i1.upper));
    q.push(false);
    q.extend(bits(&i2.upper));
    Ok(DyckInterval {
        lower: dyck(&p),
        upper: dyck(&q),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub intervals: usize,
    pub pairs: usize,
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Exhaustive check on all intervals of `T_n`: decomposition and
/// recomposition are inverse, both land in the right sets, and the
/// contact / rise / properness statistics behave as expected.
pub fn check_decomposition_bijection(n: usize) -> Result<BijectionReport> {
    let mut failures = Vec::new();
    let posets: Vec<TamariPoset> = (0..=n)
        .map(|k| TamariPoset::build(1, k))
        .collect::<Result<_>>()?;
    let intervals: Vec<Vec<DyckInterval>> = posets
        .iter()
        .map(|t| {
            enumerate_intervals(t)
                .iter()
                .map(DyckInterval::from_interval)
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let contains = |k: usize, lo: &PathWord, hi: &PathWord| -> Result<bool> {
        posets[k].leq(lo, hi)
    };

    let mut images = HashSet::new();
    if n == 0 {
        return Ok(BijectionReport {
            n,
            intervals: intervals[0].len(),
            pairs: 0,
            ok: true,
            failures,
        });
    }
    for it in &intervals[n] {
        let (i1, i2) = decompose_interval(it)?;
        let a = i1.lower.size();
        let b = i2.size();
        if a + b + 1 != n {
            failures.push(format!("sizes {a} + {b} for {:?}", it));
        }
        if !contains(a, &i1.lower, &i1.upper)? || !contains(b, &i2.lower, &i2.upper)? {
            failures.push(format!("components of {:?} are not intervals", it));
        }
        if recompose_interval(&i1, &i2)? != *it {
            failures.push(format!("round trip fails on {:?}", it));
        }
        let split = contact_position(&bits(&i1.lower), i1.point).expect("valid point");
        let p1r = dyck(&bits(&i1.lower)[split..]);
        if it.lower.contacts() != p1r.contacts() + i2.lower.contacts() {
            failures.push(format!("contact count fails on {:?}", it));
        }
        if it.upper.initial_rise() != i1.upper.initial_rise() + 1 {
            failures.push(format!("initial rise fails on {:?}", it));
        }
        if i1.is_proper() != (it.lower.initial_rise() != 1) {
            failures.push(format!("properness fails on {:?}", it));
        }
        images.insert((i1, i2));
    }
    if images.len() != intervals[n].len() {
        failures.push("decomposition is not injective".into());
    }

    let mut pairs = 0usize;
    for a in 0..n {
        let b = n - 1 - a;
        for it1 in &intervals[a] {
            for point in 0..it1.lower.contacts() {
                let i1 = PointedInterval {
                    lower: it1.lower.clone(),
                    upper: it1.upper.clone(),
                    point,
                };
                for i2 in &intervals[b] {
                    pairs += 1;
                    let it = recompose_interval(&i1, i2)?;
                    if !contains(n, &it.lower, &it.upper)? {
                        failures.push(format!("recomposition {:?} is not an interval", it));
                    } else if !images.contains(&(i1.clone(), i2.clone())) {
                        failures.push(format!("pair for {:?} is not in the image", it));
                    }
                }
            }
        }
    }
    if pairs != intervals[n].len() {
        failures.push(format!("{pairs} pairs against {} intervals", intervals[n].len()));
    }
    Ok(BijectionReport {
        n,
        intervals: intervals[n].len(),
        pairs,
        ok: failures.is_empty(),
        failures,
    })
}
