//! Cross-module checks through the public API, each against a separate oracle.

use std::collections::HashSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use tamari_core::paths::{
    ballot_number, enumerate_labellings, enumerate_paths, from_parking_function, labelled_path_count,
    labellings_count, to_parking_function, ParkingFunction,
};
use tamari_core::tamari::{parse_dot, TamariPoset};
use tamari_core::Error;

/// Ballot numbers by dynamic programming over heights: words of ups (+m)
/// and downs (-1) that never go below zero and end at zero.
fn ballot_by_walk(m: u32, n: usize) -> u64 {
    let len = (m as usize + 1) * n;
    let top = m as usize * n;
    let mut ways = vec![0u64; top + 1];
    ways[0] = 1;
    for _ in 0..len {
        let mut next = vec![0u64; top + 1];
        for (h, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            if h + m as usize <= top {
                next[h + m as usize] += w;
            }
            if h > 0 {
                next[h - 1] += w;
            }
        }
        ways = next;
    }
    ways[0]
}

#[test]
fn path_counts_match_walk_counts() {
    for m in 1..=3 {
        for n in 0..=5 {
            let brute = enumerate_paths(m, n).unwrap().len() as u64;
            assert_eq!(brute, ballot_by_walk(m, n), "m={m} n={n}");
            assert_eq!(BigInt::from(brute), ballot_number(m, n));
        }
    }
}

#[test]
fn labelling_enumeration_agrees_with_count() {
    for m in 1..=2 {
        for n in 0..=4 {
            let mut total = BigInt::from(0);
            for p in enumerate_paths(m, n).unwrap() {
                let ls = enumerate_labellings(&p);
                let distinct: HashSet<_> = ls.iter().map(|l| l.labels().to_vec()).collect();
                assert_eq!(distinct.len(), ls.len());
                assert_eq!(BigInt::from(ls.len()), labellings_count(&p));
                total += ls.len();
            }
            assert_eq!(total, labelled_path_count(m, n), "m={m} n={n}");
        }
    }
}

#[test]
fn every_small_poset_is_a_lattice_with_dot_round_trip() {
    for (m, n) in [(1, 4), (2, 3), (3, 2)] {
        let t = TamariPoset::build(m, n).unwrap();
        t.check_partial_order().unwrap();
        t.check_lattice().unwrap();
        assert!(parse_dot(&t.to_dot()).unwrap().matches(&t));
    }
}

#[test]
fn cap_is_enforced() {
    match TamariPoset::build_capped(1, 6, 10) {
        Err(Error::CapExceeded { count, cap }) => assert_eq!((count, cap), (132, 10)),
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Any parking function accepted by the decoder encodes back to itself.
    #[test]
    fn parking_round_trip(m in 1u32..=3, values in prop::collection::vec(1u32..=10, 0..=5)) {
        let f = ParkingFunction { m, values };
        if let Ok(l) = from_parking_function(&f) {
            prop_assert_eq!(to_parking_function(&l), f);
        }
    }
}

#[test]
fn parking_functions_count_labelled_paths() {
    // (1,m,...,m)-parking functions of length n, found by exhaustive search
    for m in 1..=2u32 {
        for n in 0..=4usize {
            let bound = 1 + m * n as u32;
            let mut found = 0u64;
            let mut values = vec![1u32; n];
            loop {
                let f = ParkingFunction { m, values: values.clone() };
                if from_parking_function(&f).is_ok() {
                    found += 1;
                }
                // odometer over [1, bound]^n
                let mut i = 0;
                while i < n && values[i] == bound {
                    values[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
                values[i] += 1;
            }
            assert_eq!(BigInt::from(found), labelled_path_count(m, n), "m={m} n={n}");
        }
    }
}
