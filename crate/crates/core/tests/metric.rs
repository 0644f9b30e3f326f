mod common;

use common::*;
use insdel_core::word::{distance_symbols, lcs_symbols};
use insdel_core::{count_runs, insdel_distance, is_repetition, lcs_length, run_profile, Word};
use proptest::prelude::*;

#[test]
fn lcs_matches_subset_oracle() {
    for q in [2, 3] {
        let ws = words_upto(q, if q == 2 { 5 } else { 4 });
        for a in &ws {
            for b in &ws {
                assert_eq!(lcs_length(a, b).unwrap(), lcs_by_subsets(a.symbols(), b.symbols()), "{a} {b}");
            }
        }
    }
}

#[test]
fn metric_axioms_exhaustive() {
    for (q, len) in [(2, 4), (3, 3)] {
        let ws = words_upto(q, len);
        let d: Vec<Vec<usize>> = ws
            .iter()
            .map(|a| ws.iter().map(|b| insdel_distance(a, b).unwrap()).collect())
            .collect();
        for (i, a) in ws.iter().enumerate() {
            for (j, b) in ws.iter().enumerate() {
                assert_eq!(d[i][j] == 0, a == b);
                assert_eq!(d[i][j], d[j][i]);
                assert!(d[i][j] >= a.len().abs_diff(b.len()));
                assert!(d[i][j] <= a.len() + b.len());
                if a.len() == b.len() {
                    assert_eq!(d[i][j] % 2, 0);
                }
                for k in 0..ws.len() {
                    assert!(d[i][k] <= d[i][j] + d[j][k]);
                }
            }
        }
    }
}

#[test]
fn empty_word_distance_is_length() {
    for w in words_upto(3, 4) {
        assert_eq!(insdel_distance(&Word::empty(alpha(3)), &w).unwrap(), w.len());
    }
}

#[test]
fn runs_against_definition() {
    for w in words_upto(3, 6) {
        let s = w.symbols();
        let boundaries = (1..s.len()).filter(|&i| s[i] != s[i - 1]).count();
        let expect = if s.is_empty() { 0 } else { boundaries + 1 };
        assert_eq!(count_runs(&w), expect);
        assert_eq!(run_profile(&w).phi, expect);
        assert_eq!(is_repetition(&w), expect <= 1);
    }
}

#[test]
fn profile_matches_decomposition() {
    // Rebuild the word from (a_1, x_1, .., x_w, a_{w+1}) and compare t.
    for w in words_upto(3, 6) {
        let s = w.symbols();
        let mut blocks = vec![0usize];
        for &x in s {
            if x == 0 {
                *blocks.last_mut().unwrap() += 1;
            } else {
                blocks.push(0);
            }
        }
        let p = run_profile(&w);
        assert_eq!(blocks.len(), p.w + 1);
        let t = blocks.iter().filter(|&&a| a == 0).count();
        assert_eq!(p.t, t.min(p.w));
    }
}

fn arb_pair() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (2u32..5).prop_flat_map(|q| {
        (
            proptest::collection::vec(0..q, 0..40),
            proptest::collection::vec(0..q, 0..40),
        )
    })
}

proptest! {
    #[test]
    fn distance_bounds_hold((a, b) in arb_pair()) {
        let d = distance_symbols(&a, &b);
        prop_assert!(d >= a.len().abs_diff(b.len()));
        prop_assert!(d <= a.len() + b.len());
        prop_assert_eq!(d, distance_symbols(&b, &a));
        prop_assert_eq!((a.len() + b.len() - d) % 2, 0);
        prop_assert!(lcs_symbols(&a, &b) <= a.len().min(b.len()));
    }

    #[test]
    fn concatenation_is_subadditive((a, b) in arb_pair(), (c, d) in arb_pair()) {
        let ac: Vec<u32> = a.iter().chain(&c).copied().collect();
        let bd: Vec<u32> = b.iter().chain(&d).copied().collect();
        prop_assert!(distance_symbols(&ac, &bd) <= distance_symbols(&a, &b) + distance_symbols(&c, &d));
    }
}
