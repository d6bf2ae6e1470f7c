use serde::{Deserialize, Serialize};

use super::TamariPoset;
use crate::error::{Error, Result};
use crate::paths::PathWord;

/// A pair `P <= Q` together with `c(P)`, `r(Q)` and the longest-chain length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lower: PathWord,
    pub upper: PathWord,
    pub contacts: usize,
    pub rise: usize,
    pub dist: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lower: String,
    pub upper: String,
    pub contacts: usize,
    pub rise: usize,
    pub dist: u32,
}

impl Interval {
    pub fn new(poset: &TamariPoset, lower: &PathWord, upper: &PathWord) -> Result<Self> {
        let dist = poset.longest_chain(lower, upper)?;
        let (i, j) = (poset.index_of(lower)?, poset.index_of(upper)?);
        Ok(Interval::from_indices(poset, i, j, dist))
    }

    fn from_indices(poset: &TamariPoset, i: usize, j: usize, dist: u32) -> Self {
        let (lower, upper) = (poset.vertex(i).clone(), poset.vertex(j).clone());
        Interval {
            contacts: lower.contacts(),
            rise: upper.initial_rise(),
            lower,
            upper,
            dist,
        }
    }

    pub fn size(&self) -> usize {
        self.lower.size()
    }

    pub fn to_json(&self) -> IntervalJson {
        IntervalJson {
            lower: self.lower.word(),
            upper: self.upper.word(),
            contacts: self.contacts,
            rise: self.rise,
            dist: self.dist,
        }
    }

    /// Reads an interval back and checks every field against `poset`.
    pub fn from_json(poset: &TamariPoset, j: &IntervalJson) -> Result<Self> {
        let lower = PathWord::parse(&j.lower, poset.m())?;
        let upper = PathWord::parse(&j.upper, poset.m())?;
        let it = Interval::new(poset, &lower, &upper)?;
        if (it.contacts, it.rise, it.dist) != (j.contacts, j.rise, j.dist) {
            return Err(Error::Mismatch(format!(
                "stored statistics of [{}, {}] are inconsistent",
                j.lower, j.upper
            )));
        }
        Ok(it)
    }
}

/// All intervals of the poset, ordered by lower then upper vertex index.
pub fn enumerate_intervals(poset: &TamariPoset) -> Vec<Interval> {
    let mut out = Vec::new();
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            if let Some(d) = poset.longest_chain_idx(i, j) {
                out.push(Interval::from_indices(poset, i, j, d));
            }
        }
    }
    out
}
