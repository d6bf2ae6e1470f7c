//! The m-Tamari order: covering relation, poset construction, lattice
//! operations and longest chains.

mod decompose;
mod dot;
mod embed;
mod interval;

pub use decompose::{
    check_decomposition_bijection, decompose_interval, recompose_interval, BijectionReport,
    DyckInterval, PointedInterval,
};
pub use dot::{parse_dot, DotGraph};
pub use embed::{check_sublattice_embedding, embed_path, EmbeddingReport};
pub use interval::{enumerate_intervals, Interval, IntervalJson};

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::paths::{enumerate_paths_capped, Form, PathWord, StepBits, DEFAULT_CAP};

/// Paths covering `p` in the m-Tamari order.
///
/// For each east step `a` immediately followed by a north step `b`, let `S`
/// be the shortest factor starting at `b` that is a translated m-ballot
/// path; the covering path is obtained by rewriting `a S` as `S a`.
pub fn covering_successors(p: &PathWord) -> Vec<PathWord> {
    let ballot = match p.form() {
        Form::Ballot => p.clone(),
        Form::Dyck => p.mdyck_to_ballot().expect("validated m-Dyck path"),
    };
    let m = ballot.m() as i64;
    let steps: Vec<bool> = ballot.steps().iter().collect();
    let mut out = Vec::new();
    for i in 0..steps.len().saturating_sub(1) {
        if steps[i] || !steps[i + 1] {
            continue;
        }
        let mut h = 0i64;
        let mut end = None;
        for (j, &up) in steps.iter().enumerate().skip(i + 1) {
            h += if up { m } else { -1 };
            if h == 0 {
                end = Some(j + 1);
                break;
            }
        }
        let end = end.expect("a ballot path always returns to its starting line");
        let mut next = Vec::with_capacity(steps.len());
        next.extend_from_slice(&steps[..i]);
        next.extend_from_slice(&steps[i + 1..end]);
        next.push(false);
        next.extend_from_slice(&steps[end..]);
        let q = PathWord::from_steps(ballot.m(), Form::Ballot, StepBits::from_bools(next))
            .expect("covering move preserves the ballot condition");
        out.push(match p.form() {
            Form::Ballot => q,
            Form::Dyck => q.ballot_to_mdyck().expect("ballot path"),
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn or_with(&mut self, o: &BitRow) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a |= b;
        }
    }
    fn and(&self, o: &BitRow) -> BitRow {
        BitRow(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn contains_all(&self, o: &BitRow) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

const NO_CHAIN: u32 = u32::MAX;

/// `T_n^(m)` with its Hasse diagram, order relation and longest-chain table.
#[derive(Clone, Debug)]
pub struct TamariPoset {
    m: u32,
    n: usize,
    vertices: Vec<PathWord>,
    index: HashMap<PathWord, usize>,
    hasse: Vec<Vec<usize>>,
    /// `up[i]` has bit `j` set iff `vertices[i] <= vertices[j]`.
    up: Vec<BitRow>,
    /// transpose of `up`
    down: Vec<BitRow>,
    dist: Vec<Vec<u32>>,
}

impl TamariPoset {
    pub fn build(m: u32, n: usize) -> Result<Self> {
        Self::build_capped(m, n, DEFAULT_CAP)
    }

    pub fn build_capped(m: u32, n: usize, cap: usize) -> Result<Self> {
        let vertices = enumerate_paths_capped(m, n, cap)?;
        let size = vertices.len();
        let index: HashMap<PathWord, usize> =
            vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let hasse: Vec<Vec<usize>> = vertices
            .iter()
            .map(|p| {
                let mut s: Vec<usize> = covering_successors(p).iter().map(|q| index[q]).collect();
                s.sort_unstable();
                s
            })
            .collect();

        // Kahn topological order
        let mut indeg = vec![0usize; size];
        for succ in &hasse {
            for &j in succ {
                indeg[j] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..size).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(size);
        while let Some(i) = queue.pop_front() {
            topo.push(i);
            for &j in &hasse[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if topo.len() != size {
            return Err(Error::LatticeViolation("covering graph has a cycle".into()));
        }

        let mut up: Vec<BitRow> = (0..size).map(|_| BitRow::new(size)).collect();
        for &i in topo.iter().rev() {
            let mut row = BitRow::new(size);
            row.set(i);
            for &j in &hasse[i] {
                row.or_with(&up[j]);
            }
            up[i] = row;
        }
        let mut down: Vec<BitRow> = (0..size).map(|_| BitRow::new(size)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].set(i);
            }
        }

        let mut position = vec![0usize; size];
        for (k, &i) in topo.iter().enumerate() {
            position[i] = k;
        }
        let mut dist = vec![vec![NO_CHAIN; size]; size];
        for s in 0..size {
            let row = &mut dist[s];
            row[s] = 0;
            for &v in &topo[position[s]..] {
                if row[v] == NO_CHAIN {
                    continue;
                }
                let d = row[v] + 1;
                for &w in &hasse[v] {
                    if row[w] == NO_CHAIN || row[w] < d {
                        row[w] = d;
                    }
                }
            }
        }

        Ok(TamariPoset {
            m,
            n,
            vertices,
            index,
            hasse,
            up,
            down,
            dist,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[PathWord] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &PathWord {
        &self.vertices[i]
    }

    /// Covering edges as index pairs `(lower, upper)`.
    pub fn hasse_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.hasse
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&j| (i, j)))
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.hasse[i]
    }

    pub fn edge_count(&self) -> usize {
        self.hasse.iter().map(Vec::len).sum()
    }

    /// Index of a path; Dyck-form inputs are converted to ballot form.
    pub fn index_of(&self, p: &PathWord) -> Result<usize> {
        let key = match p.form() {
            Form::Ballot => p.clone(),
            Form::Dyck => p.mdyck_to_ballot()?,
        };
        if key.m() != self.m {
            return Err(Error::NotInPoset(p.word()));
        }
        self.index.get(&key).copied().ok_or_else(|| Error::NotInPoset(p.word()))
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.up[i].get(j)
    }

    pub fn leq(&self, p: &PathWord, q: &PathWord) -> Result<bool> {
        Ok(self.leq_idx(self.index_of(p)?, self.index_of(q)?))
    }

    pub fn bottom(&self) -> &PathWord {
        let i = (0..self.len())
            .find(|&i| self.up[i].ones().count() == self.len())
            .expect("nonempty poset has a bottom");
        &self.vertices[i]
    }

    pub fn top(&self) -> &PathWord {
        let i = (0..self.len())
            .find(|&i| self.down[i].ones().count() == self.len())
            .expect("nonempty poset has a top");
        &self.vertices[i]
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> Result<usize> {
        let common = self.down[i].and(&self.down[j]);
        let mut it = common.ones().filter(|&k| self.down[k].contains_all(&common));
        match (it.next(), it.next()) {
            (Some(k), None) => Ok(k),
            _ => Err(Error::LatticeViolation(format!(
                "no unique meet of {} and {}",
                self.vertices[i], self.vertices[j]
            ))),
        }
    }

    pub fn join_idx(&self, i: usize, j: usize) -> Result<usize> {
        let common = self.up[i].and(&self.up[j]);
        let mut it = common.ones().filter(|&k| self.up[k].contains_all(&common));
        match (it.next(), it.next()) {
            (Some(k), None) => Ok(k),
            _ => Err(Error::LatticeViolation(format!(
                "no unique join of {} and {}",
                self.vertices[i], self.vertices[j]
            ))),
        }
    }

    pub fn meet(&self, p: &PathWord, q: &PathWord) -> Result<PathWord> {
        let k = self.meet_idx(self.index_of(p)?, self.index_of(q)?)?;
        Ok(self.vertices[k].clone())
    }

    pub fn join(&self, p: &PathWord, q: &PathWord) -> Result<PathWord> {
        let k = self.join_idx(self.index_of(p)?, self.index_of(q)?)?;
        Ok(self.vertices[k].clone())
    }

    pub fn longest_chain_idx(&self, i: usize, j: usize) -> Option<u32> {
        match self.dist[i][j] {
            NO_CHAIN => None,
            d => Some(d),
        }
    }

    /// Maximal number of covering steps from `p` up to `q`.
    pub fn longest_chain(&self, p: &PathWord, q: &PathWord) -> Result<u32> {
        let (i, j) = (self.index_of(p)?, self.index_of(q)?);
        self.longest_chain_idx(i, j).ok_or_else(|| Error::Incomparable {
            lower: p.word(),
            upper: q.word(),
        })
    }

    /// Largest longest-chain length over all intervals.
    pub fn max_chain(&self) -> u32 {
        self.dist
            .iter()
            .flatten()
            .filter(|&&d| d != NO_CHAIN)
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Reflexivity, antisymmetry and transitivity of the stored relation.
    pub fn check_partial_order(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            if !self.leq_idx(i, i) {
                return Err(Error::LatticeViolation(format!("{} not <= itself", self.vertices[i])));
            }
            for j in self.up[i].ones() {
                if j != i && self.leq_idx(j, i) {
                    return Err(Error::LatticeViolation(format!(
                        "antisymmetry fails for {} and {}",
                        self.vertices[i], self.vertices[j]
                    )));
                }
                if !self.up[i].contains_all(&self.up[j]) {
                    return Err(Error::LatticeViolation(format!(
                        "transitivity fails above {}",
                        self.vertices[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every pair has a unique meet and join.
    pub fn check_lattice(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in i..self.len() {
                self.meet_idx(i, j)?;
                self.join_idx(i, j)?;
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        dot::to_dot(self)
    }
}
