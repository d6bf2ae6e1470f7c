use std::collections::BTreeSet;

use serde::Serialize;

use super::TamariPoset;
use crate::error::Result;
use crate::paths::{Form, PathWord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub m: u32,
    pub n: usize,
    pub image_size: usize,
    pub target_size: usize,
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Checks that reading m-Dyck images as ordinary Dyck paths maps
/// `T_n^(m)` isomorphically onto the up-set of `(u^m d^m)^n` in `T_{nm}`,
/// covering relations included.
pub fn check_sublattice_embedding(m: u32, n: usize) -> Result<EmbeddingReport> {
    let small = TamariPoset::build(m, n)?;
    let big = TamariPoset::build(1, n * m as usize)?;
    let mut failures = Vec::new();

    let image: Vec<usize> = small
        .vertices()
        .iter()
        .map(|p| big.index_of(&p.ballot_to_mdyck()?.as_plain_dyck()))
        .collect::<Result<_>>()?;

    let block = "u".repeat(m as usize) + &"d".repeat(m as usize);
    let base = big.index_of(&PathWord::dyck(&block.repeat(n), 1)?)?;
    let upset: BTreeSet<usize> = (0..big.len()).filter(|&j| big.leq_idx(base, j)).collect();
    let image_set: BTreeSet<usize> = image.iter().copied().collect();
    if image_set.len() != image.len() {
        failures.push("map is not injective".into());
    }
    if image_set != upset {
        failures.push(format!(
            "image has {} elements, up-set has {}",
            image_set.len(),
            upset.len()
        ));
    }

    for i in 0..small.len() {
        let covers: BTreeSet<usize> = small.successors(i).iter().map(|&j| image[j]).collect();
        let big_covers: BTreeSet<usize> = big.successors(image[i]).iter().copied().collect();
        if covers != big_covers {
            failures.push(format!("covers differ above {}", small.vertex(i)));
        }
        for j in 0..small.len() {
            if small.leq_idx(i, j) != big.leq_idx(image[i], image[j]) {
                failures.push(format!(
                    "order differs on {} and {}",
                    small.vertex(i),
                    small.vertex(j)
                ));
            }
        }
    }

    Ok(EmbeddingReport {
        m,
        n,
        image_size: image_set.len(),
        target_size: big.len(),
        ok: failures.is_empty(),
        failures,
    })
}

/// The image of a ballot path, as an ordinary ballot path.
pub fn embed_path(p: &PathWord) -> Result<PathWord> {
    let d = match p.form() {
        Form::Ballot => p.ballot_to_mdyck()?,
        Form::Dyck => p.clone(),
    };
    d.as_plain_dyck().mdyck_to_ballot()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_three() {
        let r = check_sublattice_embedding(2, 3).unwrap();
        assert!(r.ok, "{:?}", r.failures);
        assert_eq!((r.image_size, r.target_size), (12, 132));
    }

    #[test]
    fn three_two_and_trivial() {
        assert!(check_sublattice_embedding(3, 2).unwrap().ok);
        for n in 0..=4 {
            assert!(check_sublattice_embedding(1, n).unwrap().ok);
        }
    }

    #[test]
    fn embedded_words() {
        let p = PathWord::ballot("NEENEE", 2).unwrap();
        assert_eq!(embed_path(&p).unwrap().word(), "NNEENNEE");
    }
}
