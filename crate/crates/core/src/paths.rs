//! m-ballot paths, m-Dyck paths, their statistics, labellings, and the
//! bijection between labelled paths and (1,m,...,m)-parking functions.
//!
//! Ballot words use `N`/`E`; Dyck words use `u`/`d`. Internally both are a
//! bit sequence where a set bit is an up (north) step.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{binomial, factorial};

/// Default bound on the number of objects any enumeration may produce.
pub const DEFAULT_CAP: usize = 100_000;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct StepBits {
    words: Vec<u64>,
    len: usize,
}

impl StepBits {
    pub fn from_bools<I: IntoIterator<Item = bool>>(it: I) -> Self {
        let mut s = StepBits::default();
        for b in it {
            s.push(b);
        }
        s
    }

    pub fn push(&mut self, up: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        if up {
            self.words[self.len / 64] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn count_up(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Ballot,
    Dyck,
}

/// A valid m-ballot path (`Form::Ballot`) or m-Dyck path (`Form::Dyck`,
/// up steps grouped in blocks of `m`). Construction always validates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    m: u32,
    form: Form,
    steps: StepBits,
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={})", self.word(), self.m)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// `true` iff `word` is an m-ballot word over `{N, E}`.
pub fn is_valid_ballot(word: &str, m: u32) -> bool {
    if m == 0 {
        return false;
    }
    let mut height: i64 = 0;
    let mut norths = 0i64;
    let mut easts = 0i64;
    for ch in word.chars() {
        match ch {
            'N' => {
                height += m as i64;
                norths += 1;
            }
            'E' => {
                height -= 1;
                easts += 1;
            }
            _ => return false,
        }
        if height < 0 {
            return false;
        }
    }
    easts == m as i64 * norths
}

fn check_dyck_blocks(steps: &StepBits, m: u32) -> Result<()> {
    let mut height: i64 = 0;
    let mut run = 0u32;
    for up in steps.iter() {
        if up {
            height += 1;
            run += 1;
        } else {
            if run % m != 0 {
                return Err(Error::InvalidPath(format!(
                    "up steps are not aligned in blocks of {m}"
                )));
            }
            run = 0;
            height -= 1;
            if height < 0 {
                return Err(Error::InvalidPath("Dyck word goes below the axis".into()));
            }
        }
    }
    if run % m != 0 {
        return Err(Error::InvalidPath(format!("up steps are not aligned in blocks of {m}")));
    }
    if height != 0 {
        return Err(Error::InvalidPath("unbalanced Dyck word".into()));
    }
    Ok(())
}

impl PathWord {
    /// Parses and validates an m-ballot word.
    pub fn ballot(word: &str, m: u32) -> Result<Self> {
        if !is_valid_ballot(word, m) {
            return Err(Error::InvalidPath(format!("{word:?} is not a {m}-ballot path")));
        }
        Ok(PathWord {
            m,
            form: Form::Ballot,
            steps: StepBits::from_bools(word.chars().map(|c| c == 'N')),
        })
    }

    /// Parses and validates an m-Dyck word (blocks of `m` up steps).
    pub fn dyck(word: &str, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPath("m must be positive".into()));
        }
        if let Some(bad) = word.chars().find(|&c| c != 'u' && c != 'd') {
            return Err(Error::InvalidPath(format!("unexpected step {bad:?} in Dyck word")));
        }
        let steps = StepBits::from_bools(word.chars().map(|c| c == 'u'));
        check_dyck_blocks(&steps, m)?;
        Ok(PathWord {
            m,
            form: Form::Dyck,
            steps,
        })
    }

    /// Chooses the form from the alphabet (`N/E` or `u/d`).
    pub fn parse(word: &str, m: u32) -> Result<Self> {
        if word.chars().any(|c| c == 'u' || c == 'd') {
            PathWord::dyck(word, m)
        } else {
            PathWord::ballot(word, m)
        }
    }

    pub(crate) fn from_steps_unchecked(m: u32, form: Form, steps: StepBits) -> Self {
        PathWord { m, form, steps }
    }

    pub fn from_steps(m: u32, form: Form, steps: StepBits) -> Result<Self> {
        let p = PathWord { m, form, steps };
        match form {
            Form::Ballot => {
                if !is_valid_ballot(&p.word(), m) {
                    return Err(Error::InvalidPath(format!("{} is not a {m}-ballot path", p.word())));
                }
            }
            Form::Dyck => check_dyck_blocks(&p.steps, m)?,
        }
        Ok(p)
    }

    pub fn empty(m: u32, form: Form) -> Self {
        PathWord {
            m,
            form,
            steps: StepBits::default(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn steps(&self) -> &StepBits {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of north steps (ballot) or blocks (m-Dyck).
    pub fn size(&self) -> usize {
        match self.form {
            Form::Ballot => self.steps.count_up(),
            Form::Dyck => self.steps.count_up() / self.m as usize,
        }
    }

    pub fn word(&self) -> String {
        let (up, down) = match self.form {
            Form::Ballot => ('N', 'E'),
            Form::Dyck => ('u', 'd'),
        };
        self.steps.iter().map(|b| if b { up } else { down }).collect()
    }

    fn up_weight(&self) -> i64 {
        match self.form {
            Form::Ballot => self.m as i64,
            Form::Dyck => 1,
        }
    }

    /// Heights of all vertices, starting with the origin. For ballot paths
    /// the height of `(x, y)` is `m*y - x`.
    pub fn heights(&self) -> Vec<i64> {
        let w = self.up_weight();
        let mut h = 0;
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(0);
        for up in self.steps.iter() {
            h += if up { w } else { -1 };
            out.push(h);
        }
        out
    }

    /// Number of vertices on the line `{x = m y}` (the axis, in Dyck form),
    /// endpoints included. The empty path has one contact.
    pub fn contacts(&self) -> usize {
        self.heights().iter().filter(|&&h| h == 0).count()
    }

    /// Length of the initial run of up steps. For ballot paths this counts
    /// north steps, i.e. blocks of the m-Dyck image.
    pub fn initial_rise(&self) -> usize {
        self.steps.iter().take_while(|&b| b).count()
    }

    /// Lengths of the maximal runs of north steps (ballot) or of blocks (m-Dyck).
    pub fn ascent_runs(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut cur = 0usize;
        for up in self.steps.iter() {
            if up {
                cur += 1;
            } else if cur > 0 {
                runs.push(cur);
                cur = 0;
            }
        }
        if cur > 0 {
            runs.push(cur);
        }
        if self.form == Form::Dyck {
            for r in runs.iter_mut() {
                *r /= self.m as usize;
            }
        }
        runs
    }

    /// Replaces every north step by `m` up steps.
    pub fn ballot_to_mdyck(&self) -> Result<PathWord> {
        if self.form != Form::Ballot {
            return Err(Error::InvalidPath("expected a ballot path".into()));
        }
        let mut steps = StepBits::default();
        for up in self.steps.iter() {
            if up {
                for _ in 0..self.m {
                    steps.push(true);
                }
            } else {
                steps.push(false);
            }
        }
        Ok(PathWord {
            m: self.m,
            form: Form::Dyck,
            steps,
        })
    }

    /// Inverse of [`PathWord::ballot_to_mdyck`].
    pub fn mdyck_to_ballot(&self) -> Result<PathWord> {
        if self.form != Form::Dyck {
            return Err(Error::InvalidPath("expected an m-Dyck path".into()));
        }
        check_dyck_blocks(&self.steps, self.m)?;
        let mut steps = StepBits::default();
        let mut pending = 0u32;
        for up in self.steps.iter() {
            if up {
                pending += 1;
                if pending == self.m {
                    steps.push(true);
                    pending = 0;
                }
            } else {
                steps.push(false);
            }
        }
        Ok(PathWord {
            m: self.m,
            form: Form::Ballot,
            steps,
        })
    }

    /// Reads the same step sequence as a path of the ordinary (m = 1)
    /// Tamari lattice, in ballot form.
    pub fn as_plain_ballot(&self) -> PathWord {
        PathWord {
            m: 1,
            form: Form::Ballot,
            steps: self.steps.clone(),
        }
    }

    /// Same step sequence as an ordinary Dyck path.
    pub fn as_plain_dyck(&self) -> PathWord {
        PathWord {
            m: 1,
            form: Form::Dyck,
            steps: self.steps.clone(),
        }
    }

    pub fn to_json(&self) -> PathJson {
        PathJson {
            m: self.m,
            n: self.size(),
            word: self.word(),
            form: self.form,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub m: u32,
    pub n: usize,
    pub word: String,
    pub form: Form,
}

impl PathJson {
    pub fn to_path(&self) -> Result<PathWord> {
        let p = match self.form {
            Form::Ballot => PathWord::ballot(&self.word, self.m)?,
            Form::Dyck => PathWord::dyck(&self.word, self.m)?,
        };
        if p.size() != self.n {
            return Err(Error::InvalidPath(format!("size {} does not match n = {}", p.size(), self.n)));
        }
        Ok(p)
    }
}

/// `1/(mn+1) * C((m+1)n, n)`.
pub fn ballot_number(m: u32, n: usize) -> BigInt {
    let (m, n) = (m as i64, n as i64);
    binomial((m + 1) * n, n) / BigInt::from(m * n + 1)
}

pub fn enumerate_paths(m: u32, n: usize) -> Result<Vec<PathWord>> {
    enumerate_paths_capped(m, n, DEFAULT_CAP)
}

/// All m-ballot paths of size `n` in lexicographic order of their words
/// (`E` before `N`).
pub fn enumerate_paths_capped(m: u32, n: usize, cap: usize) -> Result<Vec<PathWord>> {
    if m == 0 {
        return Err(Error::InvalidPath("m must be positive".into()));
    }
    let count = ballot_number(m, n);
    if count > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            count: count.try_into().unwrap_or(u128::MAX),
            cap,
        });
    }
    let total = n * (m as usize + 1);
    let mut out = Vec::new();
    let mut cur = StepBits::default();
    fn rec(
        m: i64,
        n: usize,
        total: usize,
        norths: usize,
        easts: usize,
        cur: &mut StepBits,
        out: &mut Vec<PathWord>,
        mm: u32,
    ) {
        if norths + easts == total {
            out.push(PathWord::from_steps_unchecked(mm, Form::Ballot, cur.clone()));
            return;
        }
        // E first: lexicographic order
        if (easts as i64 + 1) <= m * norths as i64 {
            let mut next = cur.clone();
            next.push(false);
            rec(m, n, total, norths, easts + 1, &mut next, out, mm);
        }
        if norths < n {
            let mut next = cur.clone();
            next.push(true);
            rec(m, n, total, norths + 1, easts, &mut next, out, mm);
        }
    }
    rec(m as i64, n, total, 0, 0, &mut cur, &mut out, m);
    Ok(out)
}

/// `n! / prod(run!)` over the maximal ascent runs.
pub fn labellings_count(p: &PathWord) -> BigInt {
    let runs = p.ascent_runs();
    let n: usize = runs.iter().sum();
    runs.iter()
        .fold(factorial(n as u64), |acc, &r| acc / factorial(r as u64))
}

/// A path whose north steps (or blocks) carry the labels `1..=n`,
/// increasing along every run of consecutive north steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labelling {
    path: PathWord,
    labels: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingJson {
    pub m: u32,
    pub n: usize,
    pub word: String,
    pub form: Form,
    pub labels: Vec<u32>,
}

impl Labelling {
    pub fn new(path: PathWord, labels: Vec<u32>) -> Result<Self> {
        let n = path.size();
        if labels.len() != n {
            return Err(Error::InvalidLabelling(format!(
                "{} labels for {} north steps",
                labels.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            if l == 0 || l as usize > n || seen[l as usize - 1] {
                return Err(Error::InvalidLabelling(format!("labels {labels:?} are not a permutation of 1..={n}")));
            }
            seen[l as usize - 1] = true;
        }
        let mut idx = 0;
        for run in path.ascent_runs() {
            let slice = &labels[idx..idx + run];
            if slice.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidLabelling(format!(
                    "labels {slice:?} decrease along a run of north steps"
                )));
            }
            idx += run;
        }
        Ok(Labelling { path, labels })
    }

    pub fn path(&self) -> &PathWord {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Text form such as `N1EN2E`.
    pub fn display_word(&self) -> String {
        let mut out = String::new();
        let mut it = self.labels.iter();
        let word = self.path.word();
        let per_block = match self.path.form() {
            Form::Ballot => 1,
            Form::Dyck => self.path.m() as usize,
        };
        let mut ups_seen = 0usize;
        for ch in word.chars() {
            out.push(ch);
            if ch == 'N' || ch == 'u' {
                ups_seen += 1;
                if ups_seen % per_block == 0 {
                    out.push_str(&it.next().unwrap().to_string());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> LabellingJson {
        LabellingJson {
            m: self.path.m(),
            n: self.path.size(),
            word: self.path.word(),
            form: self.path.form(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: &LabellingJson) -> Result<Self> {
        let path = PathJson {
            m: j.m,
            n: j.n,
            word: j.word.clone(),
            form: j.form,
        }
        .to_path()?;
        Labelling::new(path, j.labels.clone())
    }
}

/// Parses the text form produced by [`Labelling::display_word`], e.g. `N1EN2E`
/// or `u1u2dd`; labels follow the north step (or m-block) they belong to.
pub fn parse_labelled(text: &str, m: u32) -> Result<Labelling> {
    let mut word = String::new();
    let mut labels = Vec::new();
    let mut digits = String::new();
    let flush = |digits: &mut String, labels: &mut Vec<u32>| -> Result<()> {
        if !digits.is_empty() {
            let l = digits
                .parse()
                .map_err(|_| Error::InvalidLabelling(format!("label {digits} is too large")))?;
            labels.push(l);
            digits.clear();
        }
        Ok(())
    };
    for ch in text.chars() {
        if ch.is_ascii_digit() {
            if !matches!(word.chars().last(), Some('N' | 'u')) {
                return Err(Error::InvalidLabelling(format!("label not attached to an up step in {text}")));
            }
            digits.push(ch);
        } else {
            flush(&mut digits, &mut labels)?;
            word.push(ch);
        }
    }
    flush(&mut digits, &mut labels)?;
    Labelling::new(PathWord::parse(&word, m)?, labels)
}

/// All labellings of `path`, by distributing label sets over the ascent runs.
pub fn enumerate_labellings(path: &PathWord) -> Vec<Labelling> {
    let runs = path.ascent_runs();
    let n: usize = runs.iter().sum();
    let mut out = Vec::new();
    let mut assigned: Vec<Vec<u32>> = Vec::with_capacity(runs.len());
    fn rec(
        runs: &[usize],
        remaining: Vec<u32>,
        assigned: &mut Vec<Vec<u32>>,
        path: &PathWord,
        out: &mut Vec<Labelling>,
    ) {
        let Some((&first, rest)) = runs.split_first() else {
            let labels: Vec<u32> = assigned.iter().flatten().copied().collect();
            out.push(Labelling {
                path: path.clone(),
                labels,
            });
            return;
        };
        for subset in subsets_of_size(&remaining, first) {
            let left: Vec<u32> = remaining.iter().copied().filter(|x| !subset.contains(x)).collect();
            assigned.push(subset);
            rec(rest, left, assigned, path, out);
            assigned.pop();
        }
    }
    rec(&runs, (1..=n as u32).collect(), &mut assigned, path, &mut out);
    out
}

fn subsets_of_size(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// A (1,m,...,m)-parking function: `values[i-1] = f(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParkingFunction {
    pub m: u32,
    pub values: Vec<u32>,
}

/// `f(i) = k` when the north step labelled `i` lies at abscissa `k - 1`.
pub fn to_parking_function(l: &Labelling) -> ParkingFunction {
    let ballot = match l.path.form() {
        Form::Ballot => l.path.clone(),
        Form::Dyck => l.path.mdyck_to_ballot().expect("validated m-Dyck path"),
    };
    let n = ballot.size();
    let mut values = vec![0u32; n];
    let mut abscissa = 0u32;
    let mut k = 0usize;
    for up in ballot.steps().iter() {
        if up {
            values[l.labels[k] as usize - 1] = abscissa + 1;
            k += 1;
        } else {
            abscissa += 1;
        }
    }
    ParkingFunction { m: l.path.m(), values }
}

/// Inverse of [`to_parking_function`]; returns the ballot-form labelling.
pub fn from_parking_function(f: &ParkingFunction) -> Result<Labelling> {
    let m = f.m;
    if m == 0 {
        return Err(Error::InvalidParkingFunction("m must be positive".into()));
    }
    let n = f.values.len();
    let width = m as usize * n;
    let mut columns: Vec<Vec<u32>> = vec![Vec::new(); width + 1];
    for (i, &v) in f.values.iter().enumerate() {
        if v == 0 || (v - 1) as usize > width {
            return Err(Error::InvalidParkingFunction(format!(
                "f({}) = {v}: abscissa out of range 0..={width}",
                i + 1
            )));
        }
        columns[(v - 1) as usize].push(i as u32 + 1);
    }
    let mut steps = StepBits::default();
    let mut labels = Vec::with_capacity(n);
    for (x, col) in columns.iter().enumerate() {
        for &lab in col {
            steps.push(true);
            labels.push(lab);
        }
        if x < width {
            steps.push(false);
        }
    }
    let path = PathWord::from_steps(m, Form::Ballot, steps).map_err(|_| {
        Error::InvalidParkingFunction(format!("{:?} is not a (1,{m},...,{m})-parking function", f.values))
    })?;
    Labelling::new(path, labels)
}

/// `(mn+1)^(n-1)`, the number of labelled m-ballot paths of size `n`.
pub fn labelled_path_count(m: u32, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    num_traits::pow(BigInt::from(m as u64 * n as u64 + 1), n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labelled_text_round_trip() {
        let l = parse_labelled("N1EN2E", 1).unwrap();
        assert_eq!(l.labels(), &[1, 2]);
        assert_eq!(l.display_word(), "N1EN2E");
        let d = parse_labelled("uu1duu2ddd", 2).unwrap();
        assert_eq!(d.display_word(), "uu1duu2ddd");
        assert!(parse_labelled("N2N1EE", 1).is_err());
        assert!(parse_labelled("1NE", 1).is_err());
        assert!(parse_labelled("NENE", 1).is_err());
    }

    #[test]
    fn ballot_validity() {
        assert!(is_valid_ballot("", 1));
        assert!(is_valid_ballot("", 3));
        assert!(is_valid_ballot("NENE", 1));
        assert!(!is_valid_ballot("ENNE", 1));
        assert!(is_valid_ballot("NEENEE", 2));
        assert!(!is_valid_ballot("NEEE", 2));
        assert!(!is_valid_ballot("NExE", 1));
    }

    #[test]
    fn dyck_conversion() {
        let p = PathWord::ballot("NE", 1).unwrap();
        assert_eq!(p.ballot_to_mdyck().unwrap().word(), "ud");
        let p = PathWord::ballot("NEE", 2).unwrap();
        assert_eq!(p.ballot_to_mdyck().unwrap().word(), "uudd");
        let p = PathWord::ballot("NENEEE", 2).unwrap();
        assert_eq!(p.ballot_to_mdyck().unwrap().word(), "uuduuddd");

        assert_eq!(PathWord::dyck("ud", 1).unwrap().mdyck_to_ballot().unwrap().word(), "NE");
        assert_eq!(PathWord::dyck("uudd", 2).unwrap().mdyck_to_ballot().unwrap().word(), "NEE");
        assert!(PathWord::dyck("uudud", 1).is_err());
        assert!(PathWord::dyck("uududd", 2).is_err());
        assert_eq!(
            PathWord::dyck("uududd", 1).unwrap().mdyck_to_ballot().unwrap().word(),
            "NNENEE"
        );
    }

    #[test]
    fn statistics() {
        let empty = PathWord::empty(1, Form::Ballot);
        assert_eq!(empty.contacts(), 1);
        assert_eq!(empty.initial_rise(), 0);
        assert_eq!(PathWord::ballot("NENE", 1).unwrap().contacts(), 3);
        assert_eq!(PathWord::ballot("NNEE", 1).unwrap().contacts(), 2);
        assert_eq!(PathWord::ballot("NEENEE", 2).unwrap().contacts(), 3);
        assert_eq!(PathWord::ballot("NNEE", 1).unwrap().initial_rise(), 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_paths(1, 3).unwrap().len(), 5);
        assert_eq!(enumerate_paths(2, 2).unwrap().len(), 3);
        let zero = enumerate_paths(2, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_empty());
        for m in 1..=3 {
            for n in 0..=5 {
                let ps = enumerate_paths(m, n).unwrap();
                assert_eq!(BigInt::from(ps.len()), ballot_number(m, n));
                let words: Vec<String> = ps.iter().map(|p| p.word()).collect();
                let mut sorted = words.clone();
                sorted.sort();
                assert_eq!(words, sorted);
                for p in &ps {
                    let d = p.ballot_to_mdyck().unwrap();
                    assert_eq!(&d.mdyck_to_ballot().unwrap(), p);
                }
            }
        }
        assert!(matches!(
            enumerate_paths_capped(1, 10, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn labelling_counts() {
        assert_eq!(labellings_count(&PathWord::empty(1, Form::Ballot)), BigInt::one());
        assert_eq!(labellings_count(&PathWord::ballot("NENE", 1).unwrap()), BigInt::from(2));
        assert_eq!(labellings_count(&PathWord::ballot("NNEE", 1).unwrap()), BigInt::from(1));
        let total: BigInt = enumerate_paths(1, 3).unwrap().iter().map(labellings_count).sum();
        assert_eq!(total, BigInt::from(16));
        for m in 1..=3 {
            for n in 0..=4 {
                let paths = enumerate_paths(m, n).unwrap();
                let total: BigInt = paths.iter().map(labellings_count).sum();
                assert_eq!(total, labelled_path_count(m, n), "m={m} n={n}");
                for p in &paths {
                    let ls = enumerate_labellings(p);
                    assert_eq!(BigInt::from(ls.len()), labellings_count(p));
                    // m-Dyck form counts blocks the same way
                    assert_eq!(labellings_count(&p.ballot_to_mdyck().unwrap()), labellings_count(p));
                }
            }
        }
    }

    #[test]
    fn labelling_validation() {
        let p = PathWord::ballot("NNEE", 1).unwrap();
        assert!(Labelling::new(p.clone(), vec![2, 1]).is_err());
        assert!(Labelling::new(p.clone(), vec![1, 1]).is_err());
        assert!(Labelling::new(p, vec![1, 2]).is_ok());
    }

    #[test]
    fn parking_function_examples() {
        let l = Labelling::new(PathWord::ballot("NENE", 1).unwrap(), vec![1, 2]).unwrap();
        assert_eq!(to_parking_function(&l).values, vec![1, 2]);
        assert_eq!(l.display_word(), "N1EN2E");
        let l = Labelling::new(PathWord::ballot("NNEE", 1).unwrap(), vec![1, 2]).unwrap();
        assert_eq!(to_parking_function(&l).values, vec![1, 1]);
        let back = from_parking_function(&ParkingFunction { m: 1, values: vec![1, 1] }).unwrap();
        assert_eq!(back.display_word(), "N1N2EE");
        assert!(from_parking_function(&ParkingFunction { m: 1, values: vec![3] }).is_err());
        assert!(from_parking_function(&ParkingFunction { m: 1, values: vec![2] }).is_err());
        assert!(from_parking_function(&ParkingFunction { m: 1, values: vec![0] }).is_err());
    }

    #[test]
    fn parking_bijection_exhaustive() {
        for m in 1..=3u32 {
            for n in 0..=4usize {
                let mut seen = HashSet::new();
                for p in enumerate_paths(m, n).unwrap() {
                    for l in enumerate_labellings(&p) {
                        let f = to_parking_function(&l);
                        assert_eq!(from_parking_function(&f).unwrap(), l);
                        assert!(seen.insert(f.values.clone()), "not injective");
                    }
                }
                assert_eq!(BigInt::from(seen.len()), labelled_path_count(m, n));
                // the image is exactly the (1,m,...,m)-parking functions
                let mut valid = 0usize;
                let width = m as usize * n;
                let mut f = vec![1u32; n];
                loop {
                    let pf = ParkingFunction { m, values: f.clone() };
                    let ok = from_parking_function(&pf).is_ok();
                    assert_eq!(ok, seen.contains(&f));
                    if ok {
                        valid += 1;
                    }
                    // next tuple in [1, width+1]^n
                    let mut i = 0;
                    while i < n && f[i] as usize == width + 1 {
                        f[i] = 1;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                    f[i] += 1;
                }
                assert_eq!(valid, seen.len());
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let p = PathWord::ballot("NEENEE", 2).unwrap();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(j, r#"{"m":2,"n":2,"word":"NEENEE","form":"ballot"}"#);
        let back: PathJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_path().unwrap(), p);
        let l = Labelling::new(p, vec![1, 2]).unwrap();
        let lj = serde_json::to_value(l.to_json()).unwrap();
        assert_eq!(lj["labels"], serde_json::json!([1, 2]));
        assert_eq!(Labelling::from_json(&serde_json::from_value(lj).unwrap()).unwrap(), l);
    }
}
